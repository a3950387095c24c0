"""Partial 2-tree / outerplanar recognition and the two-vertex split of a
non-outerplanar partial 2-tree."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import WeightedGraph, blocks
from .lexpath import Path, lex_shortest_paths_from


class NotPartial2TreeError(ValueError):
    pass


def is_partial_2tree(g: WeightedGraph) -> bool:
    """Treewidth <= 2 test by series-parallel reduction.

    Repeatedly delete vertices of degree <= 1 and suppress degree-2 vertices
    (joining their two neighbors, parallel edges merged).  The graph has
    treewidth at most two iff this empties it.
    """
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    queue = deque(v for v in g.vertices if len(adj[v]) <= 2)
    while queue:
        v = queue.popleft()
        if v not in adj or len(adj[v]) > 2:
            continue
        nbrs = adj.pop(v)
        for x in nbrs:
            adj[x].discard(v)
        if len(nbrs) == 2:
            a, b = nbrs
            adj[a].add(b)
            adj[b].add(a)
        for x in nbrs:
            if len(adj[x]) <= 2:
                queue.append(x)
    return not adj


def components_without(g: WeightedGraph, removed: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of ``g`` minus ``removed``, ordered by smallest vertex."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def _require_partial_2tree(g: WeightedGraph) -> None:
    if not is_partial_2tree(g):
        raise NotPartial2TreeError("graph is not a partial 2-tree")


def _first_three_way_pair(g: WeightedGraph) -> tuple[int, int] | None:
    for u, v in combinations(g.vertices, 2):
        if len(components_without(g, (u, v))) >= 3:
            return u, v
    return None


def find_three_component_separator(g: WeightedGraph) -> tuple[int, int] | None:
    """Lexicographically smallest pair whose removal leaves >= 3 components."""
    _require_partial_2tree(g)
    return _first_three_way_pair(g)


def is_outerplanar(g: WeightedGraph) -> bool:
    """Outerplanarity of a partial 2-tree.

    Inside a 2-connected block, a pair splitting the block three ways yields
    a K_{2,3} subdivision, and a partial 2-tree with a K_{2,3} subdivision
    always has such a pair.  So it suffices to search every block.
    """
    _require_partial_2tree(g)
    return all(b.n < 5 or _first_three_way_pair(b) is None for b in blocks(g))


class DecompositionError(RuntimeError):
    """Internal-consistency failure while splitting a graph."""


def choose_avoiding_component(
    g: WeightedGraph, u: int, v: int, p: Path
) -> frozenset[int]:
    """Component of g - {u, v} sharing no vertex with ``p`` (smallest id wins).

    Edges of a component stay inside it, so vertex-disjointness implies
    edge-disjointness.
    """
    comps = components_without(g, (u, v))
    if len(comps) < 2:
        raise ValueError(f"{{{u}, {v}}} is not a vertex separator")
    on_path = set(p.vertices)
    for comp in comps:
        if not comp & on_path:
            return comp
    raise DecompositionError(f"every component of G - {{{u}, {v}}} meets {p}")


@dataclass(frozen=True)
class DecompResult:
    g1: WeightedGraph
    g2: WeightedGraph
    separator: tuple[int, int]
    sep_path: Path
    avoided: frozenset[int]

    def invariant_violations(self, g: WeightedGraph) -> list[str]:
        """Bookkeeping identities that must hold for a split of ``g``; empty if all do."""
        bad = []
        e1, e2 = set(self.g1.edges), set(self.g2.edges)
        v1, v2 = set(self.g1.vertices), set(self.g2.vertices)
        pe, pv = set(self.sep_path.edges), set(self.sep_path.vertices)
        if e1 & e2 != pe:
            bad.append("E(g1) & E(g2) != E(lsp)")
        if v1 & v2 != pv:
            bad.append("V(g1) & V(g2) != V(lsp)")
        if v1 != set(self.avoided) | pv:
            bad.append("V(g1) != V(H) | V(lsp)")
        if self.avoided & pv:
            bad.append("H meets lsp")
        k = len(pv)
        if self.g1.n + self.g2.n != g.n + k:
            bad.append("n1 + n2 != n + k")
        if self.g1.m + self.g2.m != g.m + k - 1:
            bad.append("m1 + m2 != m + k - 1")
        if e1 | e2 != set(g.edges):
            bad.append("E(g1) | E(g2) != E(g)")
        return bad


def decomp(g: WeightedGraph, u: int, v: int) -> DecompResult:
    """Split ``g`` at the separator {u, v} along lsp(u, v).

    g1 is the avoided component H plus lsp(u, v) plus every edge from H to
    u or v; g2 is the subgraph induced by everything outside H.
    """
    if u not in g or v not in g or u == v:
        raise ValueError(f"invalid separator pair ({u}, {v})")
    u, v = min(u, v), max(u, v)
    if len(components_without(g, (u, v))) < 3:
        raise ValueError(f"removing {{{u}, {v}}} leaves fewer than three components")
    p = lex_shortest_paths_from(g, u)[v]
    h = choose_avoiding_component(g, u, v, p)
    ends = {u, v}
    g1_edges = [
        e
        for e in g.edges
        if (e[0] in h and (e[1] in h or e[1] in ends)) or (e[1] in h and e[0] in ends)
    ]
    g1_edges += p.edges
    g1 = g.subgraph(h | set(p.vertices), g1_edges)
    g2 = g.induced(set(g.vertices) - h)
    return DecompResult(g1, g2, (u, v), p, h)
