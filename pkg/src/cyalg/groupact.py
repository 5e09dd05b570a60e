"""Finite matrix groups acting on Lie algebras, and the skew-group CY decision.

For a finite group G of Lie-algebra automorphisms, the smash product U(g)#kG
is Calabi-Yau exactly when U(g) is Calabi-Yau and G sits inside SL(g).  The
homological integral of U(g) twists the group action on the top exterior power
of g*, which makes the character chi(g) = det(g)^{-1} the bookkeeping device:
the integral of the smash product is the unique (up to scalar) vector t in kG
with g.t = det(g) t for the left-translation action.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (CheckResult, DimensionMismatch, NotInvertible,
                     NotLieAction, OrderExceedsCap)
from .homology import CYReport, is_cy_universal
from .lie import LieAlgebra
from .linalg import Matrix, determinant, fixed_space, invert
from .scalar import ONE, ZERO, Scalar


class MatrixGroup:
    """Finite group of invertible matrices, enumerated identity-first."""

    def __init__(self, elements, generator_indices):
        self.elements = tuple(elements)
        self.generator_indices = tuple(generator_indices)
        self._index = {M: i for i, M in enumerate(self.elements)}

    @property
    def order(self):
        return len(self.elements)

    @property
    def degree(self):
        return self.elements[0].rows

    def generators(self):
        return [self.elements[i] for i in self.generator_indices]

    def index_of(self, M: Matrix):
        i = self._index.get(M)
        if i is None:
            raise KeyError("matrix is not an element of the group")
        return i

    def product_index(self, i, j):
        return self.index_of(self.elements[i] * self.elements[j])

    def inverse_index(self, i):
        return self.index_of(invert(self.elements[i]))

    def left_translation(self, i) -> Matrix:
        """Permutation matrix of h -> g_i h on the element basis."""
        n = self.order
        cols = [self.product_index(i, j) for j in range(n)]
        data = [[ZERO] * n for _ in range(n)]
        for j, target in enumerate(cols):
            data[target][j] = ONE
        return Matrix.from_rows(data)

    def __repr__(self):
        return f"MatrixGroup(order={self.order}, degree={self.degree})"


def group_closure(generators, cap=10000) -> MatrixGroup:
    """Enumerate the group generated by the matrices, breadth-first, up to cap."""
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    n = gens[0].rows
    for M in gens:
        if not M.is_square() or M.rows != n:
            raise DimensionMismatch("generators must be square matrices of equal size")
        invert(M)  # raises NotInvertible on singular input
    identity = Matrix.identity(n)
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        new = []
        for E in frontier:
            for M in gens:
                P = E * M
                if P not in index:
                    if len(elements) >= cap:
                        raise OrderExceedsCap(
                            f"group closure exceeded cap of {cap} elements")
                    index[P] = len(elements)
                    elements.append(P)
                    new.append(P)
        frontier = new
    gen_indices = [index[M] for M in gens]
    return MatrixGroup(elements, gen_indices)


def is_lie_action(L: LieAlgebra, G: MatrixGroup) -> CheckResult:
    """Do the generators preserve the bracket: g[u,v] = [gu, gv] on basis pairs?"""
    if G.degree != L.dim:
        raise DimensionMismatch(
            f"group acts on dimension {G.degree}, algebra has dimension {L.dim}")
    for gi in G.generator_indices:
        M = G.elements[gi]
        cols = [M.col(j) for j in range(L.dim)]
        for i in range(L.dim):
            for j in range(i + 1, L.dim):
                lhs = M.apply(L.bracket_basis(i, j))
                rhs = L.bracket(cols[i], cols[j])
                if lhs != rhs:
                    return CheckResult(
                        False, (gi, L.basis_names[i], L.basis_names[j]))
    return CheckResult(True)


def in_special_linear(G: MatrixGroup) -> CheckResult:
    """Does every element have determinant one?"""
    for i, M in enumerate(G.elements):
        d = determinant(M)
        if d != ONE:
            return CheckResult(False, (i, d))
    return CheckResult(True)


def _require_action(L, G):
    act = is_lie_action(L, G)
    if not act:
        raise NotLieAction(act.witness)


def skew_is_cy(L: LieAlgebra, G: MatrixGroup) -> CYReport:
    """U(g)#kG is CY of dimension d iff U(g) is CY of dimension d and G is in SL(g)."""
    _require_action(L, G)
    base = is_cy_universal(L)
    sl = in_special_linear(G)
    verdict = bool(base.verdict and sl.ok)
    witness = None
    if not base.verdict:
        witness = base.witness
    elif not sl.ok:
        witness = sl.witness
    notes = (f"enveloping algebra Calabi-Yau: {base.verdict}",
             f"group inside SL: {sl.ok}")
    return CYReport(verdict, L.dim if verdict else None, base.routes, witness,
                    base.notes + notes)


@dataclass(frozen=True)
class IntegralCharacter:
    """chi(g) = det(g)^{-1}: the group action on the integral of U(g)."""

    values: tuple

    def __getitem__(self, i) -> Scalar:
        return self.values[i]

    @property
    def is_trivial(self):
        return all(v == ONE for v in self.values)


def integral_character(L: LieAlgebra, G: MatrixGroup) -> IntegralCharacter:
    """The character by which G acts on the top exterior power of the dual."""
    _require_action(L, G)
    values = tuple(determinant(M).inverse() for M in G.elements)
    chi = IntegralCharacter(values)
    for gi in G.generator_indices:
        for j in range(G.order):
            k = G.product_index(gi, j)
            if chi[k] != chi[gi] * chi[j]:
                raise RuntimeError(
                    "integral character is not multiplicative (internal defect)")
    return chi


def skew_integral_invariants(L: LieAlgebra, G: MatrixGroup):
    """Coefficients of the integral of U(g)#kG on the group-element basis.

    Solves g.t = det(g) t for the left-translation action of the generators;
    the solution space is one-dimensional, and the result is normalized so its
    first nonzero coordinate is 1.  Inside SL this is the full group sum.
    """
    _require_action(L, G)
    mats = [G.left_translation(gi) for gi in G.generator_indices]
    weights = [determinant(G.elements[gi]) for gi in G.generator_indices]
    basis = fixed_space(mats, weights)
    if len(basis) != 1:
        raise RuntimeError(
            f"integral space has dimension {len(basis)}, expected 1 (internal defect)")
    vec = basis[0]
    lead = next(c for c in vec if c)
    inv = lead.inverse()
    return tuple(inv * c for c in vec)
