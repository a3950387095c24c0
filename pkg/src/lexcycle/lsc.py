"""Lex short cycles: cycles that contain the lex shortest path between every
pair of their vertices."""

from __future__ import annotations

from itertools import combinations

from .graph import Cycle, CycleSet, WeightedGraph, incidence_vector
from .lexpath import LspTable

ALL_CYCLES_MAX_N = 14
ALL_CYCLES_MAX_COUNT = 10**6


def is_lex_short(g: WeightedGraph, c: Cycle, t: LspTable) -> bool:
    cmask = incidence_vector(g, c)
    for u, v in combinations(sorted(c.vertices), 2):
        if t.mask(u, v) & ~cmask:
            return False
    return True


def candidate_cycles(g: WeightedGraph, t: LspTable) -> dict[tuple, Cycle]:
    """Cycles ``lsp(v, x) + (x, y) + lsp(y, v)`` over every vertex v and edge (x, y).

    Every lex short cycle is among them: walking around a lex short cycle
    from v, the vertices reached by one arc form a prefix, so the cycle
    closes with exactly one edge between the two arcs.
    """
    found: dict[tuple, Cycle] = {}
    for v in g.vertices:
        for x, y in g.edges:
            px, py = t.path(v, x), t.path(v, y)
            if px.length + py.length < 2:
                continue
            if len(px.vertex_set | py.vertex_set) != len(px.vertices) + len(py.vertices) - 1:
                continue
            closing = 1 << g.edge_index(x, y)
            if (t.mask(v, x) | t.mask(v, y)) & closing:
                continue
            edges = px.edges + py.edges + ((x, y),)
            key = tuple(sorted(edges))
            if key not in found:
                found[key] = Cycle(key, px.weight + py.weight + g.weights[x, y])
    return found


def enumerate_lex_short_cycles(g: WeightedGraph, table: LspTable | None = None) -> CycleSet:
    t = table if table is not None else LspTable(g)
    return CycleSet(c for c in candidate_cycles(g, t).values() if is_lex_short(g, c, t))


def enumerate_all_simple_cycles(g: WeightedGraph) -> CycleSet:
    """Every simple cycle exactly once.

    Each cycle is rooted at its smallest vertex and only the orientation
    whose second vertex is smaller than its last is kept.
    """
    if g.n > ALL_CYCLES_MAX_N:
        raise ValueError(f"cycle enumeration limited to n <= {ALL_CYCLES_MAX_N}, got {g.n}")
    out: list[Cycle] = []
    for r in g.vertices:
        seq = [r]
        on_path = {r}
        # explicit stack of neighbor iterators; vertices below r are excluded
        stack = [iter(sorted(x for x in g.neighbors(r) if x > r))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(seq.pop())
                continue
            if nxt in on_path:
                continue
            seq.append(nxt)
            on_path.add(nxt)
            if len(seq) >= 3 and g.has_edge(nxt, r) and seq[1] < nxt:
                out.append(Cycle.from_vertices(g, seq))
                if len(out) > ALL_CYCLES_MAX_COUNT:
                    raise ValueError(f"more than {ALL_CYCLES_MAX_COUNT} cycles")
            stack.append(iter(sorted(x for x in g.neighbors(nxt) if x > r)))
    return CycleSet(out)


def brute_force_lex_short_cycles(g: WeightedGraph, table: LspTable | None = None) -> CycleSet:
    """Filter of all simple cycles through :func:`is_lex_short`."""
    t = table if table is not None else LspTable(g)
    return CycleSet(c for c in enumerate_all_simple_cycles(g) if is_lex_short(g, c, t))
