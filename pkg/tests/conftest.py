from functools import lru_cache

import networkx as nx
import pytest

from lexcycle.generators import GeneratorSpec, gen_outerplanar, gen_partial_2tree, gen_random_connected, gen_wheel
from lexcycle.graph import WeightedGraph


def make_graph(n, edges, weight=1):
    """edges: (u, v) pairs with a common weight, or (u, v, w) triples."""
    triples = [e if len(e) == 3 else (e[0], e[1], weight) for e in edges]
    return WeightedGraph(range(n), triples)


def k23_graph():
    return make_graph(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    for u, v, w in g.weighted_edges():
        h.add_edge(u, v, weight=w)
    return h


def exact_treewidth(g):
    """Treewidth by the subset DP over elimination orderings (small n only)."""
    verts = tuple(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in verts}

    def q(eliminated, v):
        # vertices outside eliminated+{v} reachable from v through eliminated
        seen, stack, out = {v}, [v], set()
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in seen:
                    continue
                seen.add(y)
                if y in eliminated:
                    stack.append(y)
                else:
                    out.add(y)
        return len(out)

    @lru_cache(maxsize=None)
    def tw(eliminated):
        if len(eliminated) == len(verts):
            return -1
        best = len(verts)
        for v in verts:
            if v in eliminated:
                continue
            best = min(best, max(tw(eliminated | {v}), q(eliminated, v)))
        return best

    return tw(frozenset())


def outerplanar_oracle(g):
    """Outerplanar iff adding one apex joined to every vertex keeps it planar."""
    h = to_nx(g)
    apex = max(g.vertices) + 1
    h.add_edges_from((apex, v) for v in g.vertices)
    return nx.check_planarity(h)[0]


def random_partial_2tree(seed, n_lo=4, n_hi=30, max_weight=100):
    import random

    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    d = min(rng.randint(0, n), n - 2)
    return gen_partial_2tree(GeneratorSpec("partial2tree", n, delete_count=d, max_weight=max_weight, seed=seed))


def random_outerplanar(seed, n_lo=3, n_hi=25, max_weight=100):
    import random

    n = random.Random(seed).randint(n_lo, n_hi)
    return gen_outerplanar(GeneratorSpec("outerplanar", n, max_weight=max_weight, seed=seed))


def random_graph(seed, n_lo=3, n_hi=12, max_weight=10):
    import random

    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    return gen_random_connected(n, rng.uniform(0.1, 0.6), max_weight, seed)


@pytest.fixture
def k3():
    return make_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4():
    return make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def k23():
    return k23_graph()


@pytest.fixture
def c4():
    return make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def wheel9():
    return gen_wheel(9, 1, 100)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        ok, detail = results[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
