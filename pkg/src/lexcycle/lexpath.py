"""Lex shortest paths.

Paths between the same two endpoints are totally ordered by

1. total weight,
2. number of edges,
3. the smaller minimum vertex of the two one-sided vertex differences
   (the path owning ``min(V(P) ^ V(Q))`` comes first),

and, only when all three tie (same vertex set visited in different orders),
by the smaller minimum edge of the edge-set symmetric difference.  The last
rule never decides between two minimum-weight paths: those visit their
shared vertices in order of distance from the source, so equal vertex sets
force equal sequences.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterator

from .graph import Edge, GraphError, WeightedGraph, edge_mask, norm_edge

BRUTE_FORCE_MAX_N = 14


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]
    weight: int

    @classmethod
    def from_vertices(cls, g: WeightedGraph, seq) -> Path:
        seq = tuple(seq)
        if not seq:
            raise GraphError("empty path")
        if len(set(seq)) != len(seq):
            raise GraphError(f"path {seq} repeats a vertex")
        return cls(seq, sum(g.weight(a, b) for a, b in zip(seq, seq[1:])))

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(norm_edge(a, b) for a, b in zip(vs, vs[1:]))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def reversed(self) -> Path:
        return Path(self.vertices[::-1], self.weight)

    def extend(self, g: WeightedGraph, v: int) -> Path:
        if v in self.vertices:
            raise GraphError(f"vertex {v} already on path")
        return Path(self.vertices + (v,), self.weight + g.weight(self.target, v))

    def subpath(self, g: WeightedGraph, x: int, y: int) -> Path:
        """Portion of the path between two of its vertices, oriented x -> y."""
        i, j = self.vertices.index(x), self.vertices.index(y)
        seq = self.vertices[i : j + 1] if i <= j else self.vertices[j : i + 1][::-1]
        return Path.from_vertices(g, seq)

    def __str__(self):
        return "-".join(map(str, self.vertices))


def _endpoints(p: Path) -> frozenset[int]:
    return frozenset((p.source, p.target))


def compare_paths(p: Path, q: Path) -> int:
    """-1 if ``p`` precedes ``q`` in lex order, 1 if it follows, 0 if identical.

    Applies the three rules literally (set differences, not a sort key) so it
    can serve as the oracle's comparator.
    """
    if _endpoints(p) != _endpoints(q):
        raise ValueError(f"paths {p} and {q} have different endpoints")
    if p.weight != q.weight:
        return -1 if p.weight < q.weight else 1
    if p.length != q.length:
        return -1 if p.length < q.length else 1
    vp, vq = p.vertex_set, q.vertex_set
    only_p, only_q = vp - vq, vq - vp
    if only_p:
        return -1 if min(only_p) < min(only_q) else 1
    ep, eq = set(p.edges), set(q.edges)
    only_p_e, only_q_e = ep - eq, eq - ep
    if not only_p_e:
        return 0
    return -1 if min(only_p_e) < min(only_q_e) else 1


def path_key(p: Path) -> tuple:
    """Sort key agreeing with :func:`compare_paths` among paths with equal endpoints.

    For equal-size sets, comparing sorted element lists lexicographically is
    the same as asking which set owns the minimum of the symmetric difference.
    """
    return (p.weight, p.length, tuple(sorted(p.vertices)), tuple(sorted(p.edges)))


def lex_shortest_paths_from(g: WeightedGraph, s: int) -> dict[int, Path]:
    """Lex shortest path from ``s`` to every vertex (``s`` maps to the trivial path).

    Best-first search where each label is a whole path and labels are ranked
    by :func:`path_key`.  Weights are positive and the order is preserved by
    appending a common edge, so a vertex's label is final once popped.
    """
    if s not in g:
        raise GraphError(f"vertex {s} not in graph")
    start = Path((s,), 0)
    best: dict[int, Path] = {}
    tick = itertools.count()
    heap = [(path_key(start), next(tick), start)]
    while heap:
        _, _, p = heapq.heappop(heap)
        v = p.target
        if v in best:
            continue
        best[v] = p
        for x, w in g.neighbors(v).items():
            if x in best:
                continue
            q = Path(p.vertices + (x,), p.weight + w)
            heapq.heappush(heap, (path_key(q), next(tick), q))
    return best


class LspTable:
    """All-pairs lex shortest paths, plus their edge sets as bitmasks."""

    def __init__(self, g: WeightedGraph, paths: dict[tuple[int, int], Path] | None = None):
        self.graph = g
        if paths is None:
            paths = {}
            for s in g.vertices:
                for t, p in lex_shortest_paths_from(g, s).items():
                    paths[s, t] = p
        self.paths = paths
        self._masks = {k: edge_mask(g, p.edges) for k, p in self.paths.items()}

    @classmethod
    def brute_force(cls, g: WeightedGraph) -> LspTable:
        """Table filled by exhaustive path enumeration instead of search."""
        return cls(g, {(u, v): brute_force_lsp(g, u, v) for u in g.vertices for v in g.vertices})

    def __getitem__(self, pair: tuple[int, int]) -> Path:
        return self.paths[pair]

    def path(self, u: int, v: int) -> Path:
        return self.paths[u, v]

    def mask(self, u: int, v: int) -> int:
        """Incidence bitmask of lsp(u, v) over the graph's edge order."""
        return self._masks[u, v]

    def __len__(self):
        return len(self.paths)


def lsp_table(g: WeightedGraph) -> LspTable:
    return LspTable(g)


def iter_simple_paths(g: WeightedGraph, u: int, v: int) -> Iterator[Path]:
    """Every simple u-v path, by backtracking."""
    if u == v:
        yield Path((u,), 0)
        return
    seq = [u]
    on_path = {u}

    def walk(x: int, weight: int):
        for y, w in sorted(g.neighbors(x).items()):
            if y in on_path:
                continue
            if y == v:
                yield Path(tuple(seq) + (v,), weight + w)
                continue
            seq.append(y)
            on_path.add(y)
            yield from walk(y, weight + w)
            seq.pop()
            on_path.remove(y)

    yield from walk(u, 0)


def brute_force_lsp(g: WeightedGraph, u: int, v: int) -> Path:
    """Minimum of all simple u-v paths under :func:`compare_paths`."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {g.n}")
    return min(iter_simple_paths(g, u, v), key=cmp_to_key(compare_paths))
