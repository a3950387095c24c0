"""Minimum cycle bases and GF(2) cycle-space checks.

Incidence vectors are Python ints used as bitsets (bit i is edge i of the
host graph), so XOR is row addition over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Cycle, CycleSet, WeightedGraph, incidence_vector, norm_edge
from .lexpath import LspTable
from .lsc import candidate_cycles, enumerate_all_simple_cycles, enumerate_lex_short_cycles
from .structure import NotPartial2TreeError, is_partial_2tree

HORTON_MAX_N = 60


class VerificationError(RuntimeError):
    """A computed basis failed a check that the theory guarantees."""


class Gf2Matrix:
    """Row space over GF(2), maintained in reduced form keyed by pivot bit."""

    def __init__(self, rows: Iterable[int] = ()):
        self._pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, x: int) -> int:
        while x:
            top = x.bit_length() - 1
            row = self._pivots.get(top)
            if row is None:
                return x
            x ^= row
        return 0

    def add(self, x: int) -> bool:
        """Insert a row; False if it was already in the span."""
        x = self.reduce(x)
        if not x:
            return False
        self._pivots[x.bit_length() - 1] = x
        return True

    def contains(self, x: int) -> bool:
        return self.reduce(x) == 0

    @property
    def rank(self) -> int:
        return len(self._pivots)


def gf2_rank(rows: Iterable[int]) -> int:
    return Gf2Matrix(rows).rank


@dataclass(frozen=True)
class CycleBasis:
    cycles: CycleSet

    @property
    def total_weight(self) -> int:
        return self.cycles.total_weight

    @property
    def dimension(self) -> int:
        return len(self.cycles)


def greedy_basis(g: WeightedGraph, candidates: Iterable[Cycle]) -> CycleBasis:
    """Weight-ordered greedy selection of independent cycles (ties by edge list).

    Cycles of a graph form a matroid under GF(2) independence, so this is
    optimal whenever ``candidates`` contains some minimum cycle basis.
    """
    target = g.cyclomatic_number
    space = Gf2Matrix()
    chosen = []
    for c in sorted(candidates, key=lambda c: (c.weight, c.edges)):
        if len(chosen) == target:
            break
        if space.add(incidence_vector(g, c)):
            chosen.append(c)
    return CycleBasis(CycleSet(chosen))


def horton_mcb(g: WeightedGraph, table: LspTable | None = None) -> CycleBasis:
    """Horton's algorithm with lex shortest paths as the per-vertex path trees."""
    if g.n > HORTON_MAX_N:
        raise ValueError(f"horton_mcb limited to n <= {HORTON_MAX_N}, got {g.n}")
    t = table if table is not None else LspTable(g)
    basis = greedy_basis(g, candidate_cycles(g, t).values())
    if basis.dimension != g.cyclomatic_number:
        raise VerificationError("Horton candidates do not span the cycle space")
    return basis


def exhaustive_mcb(g: WeightedGraph) -> CycleBasis:
    """Greedy over every simple cycle; small graphs only."""
    return greedy_basis(g, enumerate_all_simple_cycles(g))


def mcb_partial_2tree(g: WeightedGraph, table: LspTable | None = None) -> CycleBasis:
    """The lex short cycles of a weighted partial 2-tree, returned as its MCB.

    Raises NotPartial2TreeError for other graphs, and VerificationError if the
    cycle count or GF(2) independence check fails.
    """
    if not is_partial_2tree(g):
        raise NotPartial2TreeError("graph is not a partial 2-tree")
    lsc = enumerate_lex_short_cycles(g, table)
    if len(lsc) != g.cyclomatic_number:
        raise VerificationError(
            f"found {len(lsc)} lex short cycles, expected m - n + 1 = {g.cyclomatic_number}"
        )
    if gf2_rank(incidence_vector(g, c) for c in lsc) != len(lsc):
        raise VerificationError("lex short cycles are linearly dependent over GF(2)")
    return CycleBasis(lsc)


def fundamental_cycles(g: WeightedGraph) -> list[Cycle]:
    """Fundamental cycles of a BFS spanning tree rooted at the smallest vertex."""
    root = g.vertices[0]
    parent = {root: None}
    order = [root]
    for x in order:
        for y in sorted(g.neighbors(x)):
            if y not in parent:
                parent[y] = x
                order.append(y)
    tree = {norm_edge(y, p) for y, p in parent.items() if p is not None}

    def to_root(x):
        out = [x]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    cycles = []
    for x, y in g.edges:
        if (x, y) in tree:
            continue
        px, py = to_root(x), to_root(y)
        common = set(px) & set(py)
        # trim both root paths at the lowest common ancestor
        while len(px) > 1 and px[-2] in common:
            px.pop()
        while len(py) > 1 and py[-2] in common:
            py.pop()
        cycles.append(Cycle.from_vertices(g, px + py[-2::-1]))
    return cycles


@dataclass(frozen=True)
class BasisReport:
    cardinality_ok: bool
    independent: bool
    spans: bool
    total_weight: int
    size: int
    expected_size: int

    @property
    def ok(self) -> bool:
        return self.cardinality_ok and self.independent and self.spans

    def as_dict(self) -> dict:
        return {
            "cardinality_ok": self.cardinality_ok,
            "independent": self.independent,
            "spans": self.spans,
            "total_weight": self.total_weight,
            "size": self.size,
            "expected_size": self.expected_size,
            "ok": self.ok,
        }


def verify_cycle_basis(g: WeightedGraph, b: CycleBasis | CycleSet | Iterable[Cycle]) -> BasisReport:
    cycles = list(b.cycles if isinstance(b, CycleBasis) else b)
    vecs = [incidence_vector(g, c) for c in cycles]
    space = Gf2Matrix(vecs)
    return BasisReport(
        cardinality_ok=len(cycles) == g.cyclomatic_number,
        independent=space.rank == len(cycles),
        spans=all(space.contains(incidence_vector(g, c)) for c in fundamental_cycles(g)),
        total_weight=sum(c.weight for c in cycles),
        size=len(cycles),
        expected_size=g.cyclomatic_number,
    )
