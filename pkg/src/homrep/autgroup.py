"""Automorphisms of a graph and their induced action on darts and cycles.

The group is enumerated in full (not via generators): kernel computation
downstream needs membership tests over every element, and kernels are
not generated by the kernel elements of a generating set.  A cap guards
runaway inputs like large stars.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import _kernels
from .cycles import OrientedCycle
from .errors import CapacityError
from .graphs import Dart, Graph, require_connected

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class Automorphism:
    """An adjacency-preserving vertex permutation of a fixed graph."""

    graph: Graph
    perm: tuple[int, ...]

    def __post_init__(self):
        g, perm = self.graph, self.perm
        if len(perm) != g.n or sorted(perm) != list(range(g.n)):
            raise ValueError("perm is not a permutation of the vertex labels")
        for u, v in g.edges:
            if not g.has_edge(perm[u], perm[v]):
                raise ValueError(
                    f"permutation does not preserve adjacency on edge ({u}, {v})")

    def __call__(self, v: int) -> int:
        return self.perm[v]

    def is_identity(self) -> bool:
        return all(p == v for v, p in enumerate(self.perm))

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.perm)
        for v, p in enumerate(self.perm):
            inv[p] = v
        return Automorphism(self.graph, tuple(inv))

    def order(self) -> int:
        result = 1
        seen = [False] * len(self.perm)
        for v in range(len(self.perm)):
            if seen[v]:
                continue
            length = 0
            w = v
            while not seen[w]:
                seen[w] = True
                w = self.perm[w]
                length += 1
            result = result * length // gcd(result, length)
        return result

    def __repr__(self) -> str:
        return f"Automorphism({list(self.perm)})"


def identity_automorphism(g: Graph) -> Automorphism:
    return Automorphism(g, tuple(range(g.n)))


def automorphism_perms(g: Graph, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """Raw permutation tuples of the full group, lexicographic, identity first."""
    require_connected(g)
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    perms = _kernels.search_automorphisms(g.n, g.adjacency_masks(), cap + 1)
    if len(perms) > cap:
        raise CapacityError(
            f"automorphism group order exceeds the cap of {cap}; "
            "raise the cap to enumerate this group")
    return perms


def automorphisms(g: Graph, cap: int = DEFAULT_CAP) -> list[Automorphism]:
    """The full automorphism group of a connected graph.

    Backtracking over vertex images with degree and two-way adjacency
    pruning.  Identity first, remainder in lexicographic order of the
    permutation; the result length is the group order.
    """
    return [Automorphism(g, p) for p in automorphism_perms(g, cap)]


def has_nontrivial_automorphism(g: Graph) -> bool:
    """True iff some non-identity automorphism exists (early-exit search)."""
    require_connected(g)
    # the lexicographically smallest automorphism is the identity, so a
    # second hit is necessarily nontrivial
    perms = _kernels.search_automorphisms(g.n, g.adjacency_masks(), 2)
    return len(perms) == 2


def apply_to_dart(f: Automorphism, d: Dart) -> Dart:
    """Induced action on darts: map tail and head."""
    if not f.graph.is_dart(d):
        raise ValueError(f"{d} is not a dart of the graph")
    return Dart(f.perm[d.tail], f.perm[d.head])


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """Composition f after g: compose(f, g)(v) = f(g(v))."""
    if f.graph != g.graph:
        raise ValueError("cannot compose automorphisms of different graphs")
    fp, gp = f.perm, g.perm
    return Automorphism(f.graph, tuple(fp[gp[v]] for v in range(len(fp))))


def image_cycle(f: Automorphism, c: OrientedCycle) -> OrientedCycle:
    """Elementwise dart image of a cycle; again a simple oriented cycle."""
    return OrientedCycle([apply_to_dart(f, d) for d in c.darts])
