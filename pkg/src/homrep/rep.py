"""The matrix action of graph automorphisms on the homology basis.

Conventions (fixed once, used everywhere):
  * column j of the matrix of f holds the coordinates of the image of
    the j-th fundamental cycle under f;
  * compose(f, g) applies g first, which makes the assignment
    f -> matrix a homomorphism under ordinary matrix product.

Every matrix has entries in {-1, 0, 1} and determinant +/-1; the kernel
is the set of automorphisms mapped to the identity matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autgroup import DEFAULT_CAP, Automorphism, automorphisms
from .cycles import SpanningTreeBasis, cycle_coordinates, spanning_tree_basis
from .graphs import Dart, Graph
from .matrices import IntMatrix, is_prime


def _matrix_columns(perm: tuple[int, ...],
                    b: SpanningTreeBasis) -> tuple[tuple[int, ...], ...]:
    """Columns of the matrix of the permutation, without object wrapping.

    Walks each fundamental cycle's darts through the permutation and
    accumulates signed hits on co-tree darts.  Hot path for the
    exhaustive verifier.
    """
    index = b.coordinate_index()
    beta = b.beta
    cols = []
    for c in b.fundamental_cycles():
        col = [0] * beta
        for d in c.darts:
            hit = index.get(Dart(perm[d.tail], perm[d.head]))
            if hit is not None:
                col[hit[0]] += hit[1]
        cols.append(tuple(col))
    return tuple(cols)


def _is_kernel_perm(perm: tuple[int, ...], b: SpanningTreeBasis,
                    p: int | None = None) -> bool:
    """True iff the permutation's matrix is the identity (mod p if given).

    Aborts on the first column that deviates from the unit vector, which
    keeps whole-group kernel scans cheap.
    """
    index = b.coordinate_index()
    for j, c in enumerate(b.fundamental_cycles()):
        col = [0] * b.beta
        for d in c.darts:
            hit = index.get(Dart(perm[d.tail], perm[d.head]))
            if hit is not None:
                col[hit[0]] += hit[1]
        for i, x in enumerate(col):
            want = 1 if i == j else 0
            if p is None:
                if x != want:
                    return False
            elif (x - want) % p != 0:
                return False
    return True


def matrix_of(f: Automorphism, b: SpanningTreeBasis) -> IntMatrix:
    """Matrix of f in basis b; the empty 0x0 matrix when beta = 0."""
    if f.graph != b.graph:
        raise ValueError("automorphism and basis belong to different graphs")
    return IntMatrix(_matrix_columns(f.perm, b)).transpose()


@dataclass
class RepresentationReport:
    """Full group scan: one matrix per automorphism, plus the kernel."""

    basis: SpanningTreeBasis
    matrices: dict[Automorphism, IntMatrix]
    kernel: tuple[Automorphism, ...]
    faithful: bool

    @property
    def group_order(self) -> int:
        return len(self.matrices)


def representation(g: Graph, b: SpanningTreeBasis | None = None,
                   cap: int = DEFAULT_CAP) -> RepresentationReport:
    """Matrices for every automorphism and the kernel of the action.

    For beta = 0 every matrix is the empty identity, so the kernel is
    the whole group.  faithful <=> the kernel is just the identity.
    """
    if b is None:
        b = spanning_tree_basis(g)
    elif b.graph != g:
        raise ValueError("basis belongs to a different graph")
    mats: dict[Automorphism, IntMatrix] = {}
    kernel = []
    for f in automorphisms(g, cap):
        m = matrix_of(f, b)
        mats[f] = m
        if m.is_identity():
            kernel.append(f)
    return RepresentationReport(
        basis=b, matrices=mats, kernel=tuple(kernel), faithful=len(kernel) == 1)


def change_of_basis(b_old: SpanningTreeBasis, b_new: SpanningTreeBasis) -> IntMatrix:
    """Unimodular matrix P expressing the new cycles in old coordinates.

    Column j is the old-basis coordinate vector of the j-th fundamental
    cycle of b_new; for any automorphism f the matrices satisfy
    matrix_of(f, b_new) = P^-1 * matrix_of(f, b_old) * P.
    """
    if b_old.graph != b_new.graph:
        raise ValueError("bases belong to different graphs")
    cols = [cycle_coordinates(c, b_old) for c in b_new.fundamental_cycles()]
    return IntMatrix(tuple(cols)).transpose()


def kernel_mod_p(g: Graph, b: SpanningTreeBasis | None = None, p: int = 3,
                 cap: int = DEFAULT_CAP) -> list[Automorphism]:
    """Automorphisms whose matrix reduces to the identity mod p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if b is None:
        b = spanning_tree_basis(g)
    elif b.graph != g:
        raise ValueError("basis belongs to a different graph")
    return [f for f in automorphisms(g, cap) if _is_kernel_perm(f.perm, b, p)]
