"""Seeded random instance generators.

Every generator draws from one ``random.Random(seed)`` stream (Mersenne
Twister, seeded with the integer seed), so a (spec, seed) pair always yields
the same graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal

from .graph import GraphError, WeightedGraph

Family = Literal["partial2tree", "outerplanar", "wheel"]


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    n: int
    delete_count: int = 0
    max_weight: int = 100
    rim_weight: int = 1
    spoke_weight: int = 100
    chords: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.family not in ("partial2tree", "outerplanar", "wheel"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.max_weight < 1 or self.rim_weight < 1 or self.spoke_weight < 1:
            raise ValueError("weights must be positive")
        if self.delete_count < 0:
            raise ValueError("delete_count must be non-negative")


def _permuted(rng: random.Random, n: int, edges) -> list[tuple[int, int, int]]:
    """Relabel vertices by a random permutation so ids carry no structure."""
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[u], perm[v], w) for u, v, w in edges]


def _bridges(n: int, edges: set[tuple[int, int]]) -> set[tuple[int, int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out = set()
    for root in range(n):
        if root in disc:
            continue
        disc[root] = low[root] = len(disc)
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = len(disc)
                    stack.append((w, v, iter(adj[w])))
                    break
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.add((min(v, parent), max(v, parent)))
    return out


def gen_partial_2tree(spec: GeneratorSpec) -> WeightedGraph:
    """Random 2-tree grown one vertex at a time, minus ``delete_count`` non-bridge edges."""
    rng = random.Random(spec.seed)
    n = spec.n
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        a, b = rng.choice(edges)
        edges += [(a, v), (b, v)]
    max_deletions = len(edges) - (n - 1)
    if spec.delete_count > max_deletions:
        raise ValueError(
            f"cannot delete {spec.delete_count} edges from a 2-tree on {n} vertices "
            f"and stay connected (at most {max_deletions})"
        )
    alive = set(edges)
    for _ in range(spec.delete_count):
        choices = sorted(alive - _bridges(n, alive))
        alive.remove(rng.choice(choices))
    weighted = [(u, v, rng.randint(1, spec.max_weight)) for u, v in edges if (u, v) in alive]
    return WeightedGraph(range(n), _permuted(rng, n, weighted))


def gen_outerplanar(spec: GeneratorSpec) -> WeightedGraph:
    """Hamiltonian cycle 0..n-1 plus non-crossing chords.

    Chords come from a random triangulation of the polygon (ear splitting on
    index intervals), so they nest by interval containment.  ``spec.chords``
    fixes how many are kept; None keeps each with probability 1/2.
    """
    rng = random.Random(spec.seed)
    n = spec.n
    tri: list[tuple[int, int]] = []
    intervals = [(0, n - 1)]
    while intervals:
        i, j = intervals.pop()
        if j - i < 2:
            continue
        k = rng.randint(i + 1, j - 1)
        for a, b in ((i, k), (k, j)):
            if b - a >= 2:
                tri.append((a, b))
        intervals += [(i, k), (k, j)]
    if spec.chords is None:
        chords = [c for c in tri if rng.random() < 0.5]
    else:
        if not 0 <= spec.chords <= len(tri):
            raise ValueError(f"chords must be in 0..{n - 3}")
        chords = rng.sample(tri, spec.chords)
    edges = [(i, (i + 1) % n) for i in range(n)] + sorted(chords)
    weighted = [(u, v, rng.randint(1, spec.max_weight)) for u, v in edges]
    return WeightedGraph(range(n), _permuted(rng, n, weighted))


def gen_wheel(n: int, a: int = 1, b: int = 100) -> WeightedGraph:
    """Hub 0 joined by spokes of weight ``b`` to the rim cycle 1..n-1 of weight ``a``."""
    if n < 4:
        raise ValueError("a wheel needs at least 4 vertices")
    if a < 1 or b < 1:
        raise ValueError("weights must be positive")
    rim = [(i, i % (n - 1) + 1, a) for i in range(1, n)]
    spokes = [(0, i, b) for i in range(1, n)]
    return WeightedGraph(range(n), rim + spokes)


def gen_random_connected(n: int, extra_p: float, max_weight: int, seed: int) -> WeightedGraph:
    """Random spanning tree plus each remaining pair with probability ``extra_p``."""
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    weighted = [(u, v, rng.randint(1, max_weight)) for u, v in sorted(edges)]
    return WeightedGraph(range(n), _permuted(rng, n, weighted))


def generate(spec: GeneratorSpec) -> WeightedGraph:
    if spec.family == "partial2tree":
        return gen_partial_2tree(spec)
    if spec.family == "outerplanar":
        return gen_outerplanar(spec)
    if spec.family == "wheel":
        return gen_wheel(spec.n, spec.rim_weight, spec.spoke_weight)
    raise GraphError(f"unknown family {spec.family!r}")
