"""Weighted graph representation, edge-list I/O, cycles and block decomposition.

Vertices are non-negative integers and their numeric order is the total
order used by the lex-shortest-path rules.  Subgraphs keep the vertex ids of
their host graph, so that order is inherited automatically.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, TextIO

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for invalid graphs and malformed graph files."""


class NotSimpleError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Simple, connected, undirected graph with positive integer weights.

    ``edges`` keeps insertion order; that order fixes the bit index of each
    edge in incidence vectors.  Instances are treated as immutable.
    """

    __slots__ = ("vertices", "edges", "weights", "_adj", "_index")

    def __init__(
        self,
        vertices: Iterable[int],
        weighted_edges: Iterable[tuple[int, int, int]],
    ):
        verts = sorted(set(vertices))
        vset = set(verts)
        edges: list[Edge] = []
        weights: dict[Edge, int] = {}
        adj: dict[int, dict[int, int]] = {v: {} for v in verts}
        for u, v, w in weighted_edges:
            if u == v:
                raise NotSimpleError(f"loop edge at vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u}, {v}) uses an unknown vertex")
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise GraphError(f"edge ({u}, {v}) has non-positive weight {w!r}")
            e = norm_edge(u, v)
            if e in weights:
                raise NotSimpleError(f"duplicate edge ({e[0]}, {e[1]})")
            edges.append(e)
            weights[e] = w
            adj[u][v] = w
            adj[v][u] = w
        self.vertices: tuple[int, ...] = tuple(verts)
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.weights: Mapping[Edge, int] = weights
        self._adj = adj
        self._index = {e: i for i, e in enumerate(edges)}
        if not self._is_connected():
            raise DisconnectedError("graph is disconnected")

    def _is_connected(self) -> bool:
        if not self.vertices:
            return True
        start = self.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def cyclomatic_number(self) -> int:
        """Dimension of the cycle space, m - n + 1."""
        return self.m - self.n + 1

    def neighbors(self, v: int) -> Mapping[int, int]:
        """Neighbor -> edge weight."""
        return self._adj[v]

    def __contains__(self, v) -> bool:
        return v in self._adj

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def weight(self, u: int, v: int) -> int:
        try:
            return self._adj[u][v]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[norm_edge(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def weighted_edges(self) -> Iterator[tuple[int, int, int]]:
        for e in self.edges:
            yield e[0], e[1], self.weights[e]

    def subgraph(self, vertices: Iterable[int], edges: Iterable[Edge]) -> WeightedGraph:
        """Subgraph on the given vertices and edges; weights and edge order inherited."""
        keep = {norm_edge(*e) for e in edges}
        missing = keep - self.weights.keys()
        if missing:
            raise GraphError(f"edges not in host graph: {sorted(missing)}")
        return WeightedGraph(
            vertices, ((u, v, w) for u, v, w in self.weighted_edges() if (u, v) in keep)
        )

    def induced(self, vertices: Iterable[int]) -> WeightedGraph:
        vs = set(vertices)
        return WeightedGraph(
            vs, ((u, v, w) for u, v, w in self.weighted_edges() if u in vs and v in vs)
        )

    def relabeled(self) -> tuple[WeightedGraph, dict[int, int]]:
        """Order-preserving relabeling onto 0..n-1, with the old -> new map."""
        mapping = {v: i for i, v in enumerate(self.vertices)}
        g = WeightedGraph(
            range(self.n), ((mapping[u], mapping[v], w) for u, v, w in self.weighted_edges())
        )
        return g, mapping

    def _key(self):
        return self.vertices, frozenset(self.weighted_edges())

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Edge-list format


def parse_graph(source: str | TextIO) -> WeightedGraph:
    """Parse the ``p n m`` / ``e u v w`` edge-list format.

    ``source`` is either the file contents or an open text stream.  Lines
    starting with ``#`` and blank lines are ignored.  Edge order in the file
    becomes the graph's global edge order.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    header: tuple[int, int] | None = None
    triples: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            nums = [int(t) for t in tokens[1:]]
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer field in {line!r}") from None
        if tokens[0] == "p":
            if header is not None:
                raise GraphError(f"line {lineno}: second 'p' line")
            if len(nums) != 2 or nums[0] < 1 or nums[1] < 0:
                raise GraphError(f"line {lineno}: expected 'p <n> <m>' with n >= 1")
            header = (nums[0], nums[1])
        elif tokens[0] == "e":
            if header is None:
                raise GraphError(f"line {lineno}: edge before 'p' line")
            if len(nums) != 3:
                raise GraphError(f"line {lineno}: expected 'e <u> <v> <w>'")
            u, v, w = nums
            n = header[0]
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"line {lineno}: vertex id out of range 0..{n - 1}")
            if u == v:
                raise NotSimpleError(f"line {lineno}: loop edge at vertex {u}")
            if w < 1:
                raise GraphError(f"line {lineno}: non-positive weight {w}")
            triples.append((u, v, w))
        else:
            raise GraphError(f"line {lineno}: unknown record type {tokens[0]!r}")
    if header is None:
        raise GraphError("missing 'p <n> <m>' line")
    n, m = header
    if len(triples) != m:
        raise GraphError(f"header declares {m} edges, found {len(triples)}")
    return WeightedGraph(range(n), triples)


def serialize_graph(g: WeightedGraph) -> str:
    """Canonical edge-list text.

    Graphs whose vertex ids are not exactly 0..n-1 are relabeled
    order-preservingly and the original ids are listed in a comment.
    """
    lines = []
    if g.vertices != tuple(range(g.n)):
        lines.append("# vertices " + " ".join(map(str, g.vertices)))
        g, _ = g.relabeled()
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u} {v} {w}" for u, v, w in g.weighted_edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Cycles


@dataclass(frozen=True)
class Cycle:
    """A simple cycle, identified by its sorted edge list."""

    edges: tuple[Edge, ...]
    weight: int

    @classmethod
    def from_edges(cls, g: WeightedGraph, edges: Iterable[Edge]) -> Cycle:
        es = sorted({norm_edge(*e) for e in edges})
        if len(es) < 3:
            raise GraphError("a cycle needs at least three edges")
        deg: dict[int, int] = {}
        for u, v in es:
            if not g.has_edge(u, v):
                raise GraphError(f"({u}, {v}) is not an edge of the host graph")
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            raise GraphError("edge set is not 2-regular")
        cyc = cls(tuple(es), sum(g.weights[e] for e in es))
        if len(cyc.vertex_sequence()) != len(deg):
            raise GraphError("edge set is not connected")
        return cyc

    @classmethod
    def from_vertices(cls, g: WeightedGraph, seq: Iterable[int]) -> Cycle:
        """Cycle through ``seq`` in order, closing back to the first vertex."""
        seq = list(seq)
        if len(set(seq)) != len(seq):
            raise GraphError("cycle vertices must be distinct")
        return cls.from_edges(g, zip(seq, seq[1:] + seq[:1]))

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __len__(self):
        return len(self.edges)

    def vertex_sequence(self) -> tuple[int, ...]:
        """Vertices in traversal order from the smallest, toward its smaller neighbor."""
        nbrs: dict[int, list[int]] = {}
        for u, v in self.edges:
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
        start = min(nbrs)
        seq = [start]
        prev, cur = start, min(nbrs[start])
        while cur != start:
            seq.append(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        return tuple(seq)

    def __str__(self):
        return "-".join(map(str, self.vertex_sequence()))


class CycleSet:
    """Cycles in canonical (sorted edge list) order, deduplicated by edge set."""

    def __init__(self, cycles: Iterable[Cycle] = ()):
        uniq = {c.edges: c for c in cycles}
        self.cycles: tuple[Cycle, ...] = tuple(uniq[k] for k in sorted(uniq))

    @property
    def total_weight(self) -> int:
        return sum(c.weight for c in self.cycles)

    def edge_sets(self) -> set[frozenset[Edge]]:
        return {c.edge_set for c in self.cycles}

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __contains__(self, c):
        return any(c.edges == d.edges for d in self.cycles)

    def __repr__(self):
        return f"CycleSet({[str(c) for c in self.cycles]})"


# ---------------------------------------------------------------------------
# Incidence vectors (bit i <-> g.edges[i])


def incidence_vector(g: WeightedGraph, c: Cycle) -> int:
    """Incidence vector of ``c`` as an int bitmask over ``g``'s edge order."""
    x = 0
    for u, v in c.edges:
        x |= 1 << g.edge_index(u, v)
    return x


def edge_mask(g: WeightedGraph, edges: Iterable[Edge]) -> int:
    x = 0
    for u, v in edges:
        x |= 1 << g.edge_index(u, v)
    return x


def format_bits(x: int, m: int) -> str:
    """Render a bitmask with edge 0 first, e.g. '111' for a triangle."""
    return "".join("1" if x >> i & 1 else "0" for i in range(m))


# ---------------------------------------------------------------------------
# Blocks


def blocks(g: WeightedGraph) -> list[WeightedGraph]:
    """Biconnected components (bridges included as single-edge blocks).

    Iterative Hopcroft-Tarjan over an edge stack.  Blocks are returned in
    order of their first edge in ``g.edges``; each block lists its edges in
    ``g``'s order.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_groups: list[set[Edge]] = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        estack: list[Edge] = []
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    estack.append((v, w))
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                group = set()
                while True:
                    e = estack.pop()
                    group.add(norm_edge(*e))
                    if e == (parent, v):
                        break
                edge_groups.append(group)
    position = {e: i for i, e in enumerate(g.edges)}
    edge_groups.sort(key=lambda grp: min(position[e] for e in grp))
    out = []
    for grp in edge_groups:
        verts = {x for e in grp for x in e}
        out.append(g.subgraph(verts, grp))
    return out
