import random
from functools import cmp_to_key
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexcycle.lexpath import (
    BRUTE_FORCE_MAX_N,
    LspTable,
    Path,
    brute_force_lsp,
    compare_paths,
    iter_simple_paths,
    lex_shortest_paths_from,
    lsp_table,
    path_key,
)

from conftest import make_graph, random_graph, random_partial_2tree


def test_rule1_weight():
    g = make_graph(3, [(0, 1, 5), (0, 2, 3), (2, 1, 3)])
    p, q = Path.from_vertices(g, [0, 1]), Path.from_vertices(g, [0, 2, 1])
    assert (p.weight, q.weight) == (5, 6)
    assert compare_paths(p, q) == -1
    assert compare_paths(q, p) == 1


def test_rule2_edge_count():
    g = make_graph(3, [(0, 1, 2), (0, 2, 1), (2, 1, 1)])
    p, q = Path.from_vertices(g, [0, 1]), Path.from_vertices(g, [0, 2, 1])
    assert compare_paths(p, q) == -1


def test_rule3_smaller_internal_vertex(c4):
    p, q = Path.from_vertices(c4, [0, 1, 2]), Path.from_vertices(c4, [0, 3, 2])
    assert compare_paths(p, q) == -1
    # orientation of either path is irrelevant
    assert compare_paths(q.reversed(), p) == 1


def test_rule3_with_vertices_2_and_3():
    g = make_graph(4, [(0, 2), (2, 1), (0, 3), (3, 1)])
    p, q = Path.from_vertices(g, [0, 2, 1]), Path.from_vertices(g, [0, 3, 1])
    assert compare_paths(p, q) == -1


def test_compare_rejects_different_endpoints(c4):
    with pytest.raises(ValueError):
        compare_paths(Path.from_vertices(c4, [0, 1]), Path.from_vertices(c4, [0, 3]))


def test_lsp_four_cycle(c4):
    assert lex_shortest_paths_from(c4, 0)[2].vertices == (0, 1, 2)
    assert brute_force_lsp(c4, 0, 2).vertices == (0, 1, 2)


def test_lsp_triangle_direct_edge(k3):
    assert lex_shortest_paths_from(k3, 0)[1].vertices == (0, 1)


def test_table_k3(k3):
    t = lsp_table(k3)
    for u, v in combinations(k3.vertices, 2):
        assert t.path(u, v).vertices == (u, v)


def test_table_k23_picks_vertex_2(k23):
    t = lsp_table(k23)
    assert t.path(0, 1).vertices == (0, 2, 1)
    candidates = sorted(iter_simple_paths(k23, 0, 1), key=cmp_to_key(compare_paths))
    assert [p.vertices for p in candidates[:3]] == [(0, 2, 1), (0, 3, 1), (0, 4, 1)]
    assert brute_force_lsp(k23, 0, 1) == t.path(0, 1)


def test_table_on_path_graph():
    g = make_graph(5, [(0, 1, 3), (1, 2, 1), (2, 3, 9), (3, 4, 2)])
    t = lsp_table(g)
    assert t.path(0, 4).vertices == (0, 1, 2, 3, 4)
    assert t.path(3, 1).vertices == (3, 2, 1)


def test_brute_force_on_tree():
    g = make_graph(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert brute_force_lsp(g, 1, 4).vertices == (1, 0, 2, 4)


def test_brute_force_guard():
    g = make_graph(BRUTE_FORCE_MAX_N + 1, [(i, i + 1) for i in range(BRUTE_FORCE_MAX_N)])
    with pytest.raises(ValueError):
        brute_force_lsp(g, 0, 1)


@pytest.mark.parametrize("seed", range(30))
def test_search_matches_brute_force(seed):
    g = random_graph(seed, 3, 9, max_weight=4)
    for s in g.vertices:
        found = lex_shortest_paths_from(g, s)
        for t in g.vertices:
            assert found[t] == brute_force_lsp(g, s, t)


@pytest.mark.parametrize("seed", range(10))
def test_deterministic_and_symmetric(seed):
    g = random_partial_2tree(seed, 4, 20)
    a, b = lsp_table(g), lsp_table(g)
    assert a.paths == b.paths
    for u in g.vertices:
        for v in g.vertices:
            assert a.path(u, v) == a.path(v, u).reversed()


@pytest.mark.parametrize("seed", range(15))
def test_subpaths_are_lex_shortest(seed):
    g = random_graph(seed, 4, 12, max_weight=3)
    t = lsp_table(g)
    for (u, v), p in t.paths.items():
        for x, y in combinations(p.vertices, 2):
            assert p.subpath(g, x, y) == t.path(x, y)


def _intersection_is_lsp(g, t, p, q):
    common_v = set(p.vertices) & set(q.vertices)
    common_e = set(p.edges) & set(q.edges)
    if not common_v:
        return True
    # a single path: connected, |E| = |V| - 1, and equal to the lsp of its ends
    if len(common_e) != len(common_v) - 1:
        return False
    ends = [x for x in common_v if sum(x in e for e in common_e) <= 1]
    if len(common_v) == 1:
        return True
    if len(ends) != 2:
        return False
    r = t.path(*ends)
    return set(r.vertices) == common_v and set(r.edges) == common_e


@pytest.mark.parametrize("seed", range(20))
def test_intersection_of_two_lsps(seed):
    g = random_graph(seed, 4, 12, max_weight=3)
    t = lsp_table(g)
    rng = random.Random(seed)
    pairs = list(combinations(g.vertices, 2))
    for _ in range(50):
        (x, y), (u, v) = rng.choice(pairs), rng.choice(pairs)
        assert _intersection_is_lsp(g, t, t.path(x, y), t.path(u, v))


@pytest.mark.parametrize("seed", range(20))
def test_subgraph_consistency(seed):
    g = random_graph(seed, 4, 10, max_weight=5)
    t = lsp_table(g)
    rng = random.Random(seed)
    for _ in range(5):
        drop = rng.choice(g.edges)
        keep = [e for e in g.edges if e != drop]
        try:
            sub = g.subgraph(g.vertices, keep)
        except ValueError:
            continue  # dropped a bridge
        ts = lsp_table(sub)
        for (u, v), p in t.paths.items():
            if drop not in p.edges:
                assert ts.path(u, v) == p


def _random_simple_paths(g, rng, u, v, k):
    paths = list(iter_simple_paths(g, u, v))
    return rng.sample(paths, min(k, len(paths)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_key_agrees_with_comparator(seed):
    g = random_graph(seed, 4, 8, max_weight=2)
    rng = random.Random(seed)
    u, v = rng.sample(list(g.vertices), 2)
    paths = _random_simple_paths(g, rng, u, v, 12)
    for p in paths:
        for q in paths:
            by_key = (path_key(p) > path_key(q)) - (path_key(p) < path_key(q))
            assert compare_paths(p, q) == by_key
            assert compare_paths(p, q) == -compare_paths(q, p)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_comparator_is_transitive(seed):
    g = random_graph(seed, 4, 8, max_weight=2)
    rng = random.Random(seed)
    u, v = rng.sample(list(g.vertices), 2)
    paths = _random_simple_paths(g, rng, u, v, 8)
    for a in paths:
        for b in paths:
            for c in paths:
                if compare_paths(a, b) < 0 and compare_paths(b, c) < 0:
                    assert compare_paths(a, c) < 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_extension_consistency(seed):
    g = random_graph(seed, 4, 9, max_weight=2)
    rng = random.Random(seed)
    u, x = rng.sample(list(g.vertices), 2)
    paths = list(iter_simple_paths(g, u, x))
    for p in paths:
        for q in paths:
            if compare_paths(p, q) >= 0:
                continue
            for y in g.neighbors(x):
                if y in p.vertices or y in q.vertices:
                    continue
                assert compare_paths(p.extend(g, y), q.extend(g, y)) == -1


def test_degenerate_tie_is_broken_by_edges():
    # same vertex set, same weight and length, different order
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)])
    p = Path.from_vertices(g, [0, 1, 2, 3])
    q = Path.from_vertices(g, [0, 2, 1, 3])
    assert p.vertex_set == q.vertex_set
    assert compare_paths(p, q) == -1  # (0, 1) < (0, 2)
    assert compare_paths(p.reversed(), q.reversed()) == -1


def test_brute_force_table_equals_search(k23):
    assert LspTable.brute_force(k23).paths == LspTable(k23).paths
