"""Lie algebras by structure constants.

Construction validates the Jacobi identity on every basis triple.  The module
also carries the six-parameter family of 3-dimensional brackets

    [x,y] = ax + by + wz,  [x,z] = cx + vy - bz,  [y,z] = ux - cy + az,

whose members are exactly the 3-dimensional algebras with unimodular (trace
zero) adjoint action, plus the classification of those algebras by the
dimension of the derived subalgebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (CheckResult, DimensionMismatch, JacobiViolation,
                     NotCYForm, NotDimensionThree, NotUnimodular)
from .linalg import Matrix, rank_kernel
from .scalar import ONE, ZERO, Scalar, as_scalar

Vector = tuple


class CY3Class(enum.Enum):
    ABELIAN = "ABELIAN"
    HEISENBERG = "HEISENBERG"
    SOLVABLE_II = "SOLVABLE_II"
    SL2 = "SL2"


class LieAlgebra:
    """Structure-constant presentation; brackets stored for index pairs i < j only."""

    def __init__(self, dim, basis_names, table):
        self.dim = dim
        self.basis_names = tuple(basis_names)
        self.table = dict(table)  # (i, j) i<j -> coefficient Vector of length dim
        self._zero = (ZERO,) * dim

    def bracket_basis(self, i, j) -> Vector:
        if i == j:
            return self._zero
        if i < j:
            return self.table.get((i, j), self._zero)
        vec = self.table.get((j, i))
        return self._zero if vec is None else tuple(-c for c in vec)

    def bracket(self, u, v) -> Vector:
        """Bilinear extension of the basis bracket to coefficient vectors."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("vector length does not match dimension")
        out = [ZERO] * self.dim
        for (i, j), vec in self.table.items():
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                for k, c in enumerate(vec):
                    if c:
                        out[k] = out[k] + coef * c
        return tuple(out)

    def basis_vector(self, i) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def name_index(self, name) -> int:
        return self.basis_names.index(name)

    def __repr__(self):
        parts = []
        for (i, j), vec in sorted(self.table.items()):
            terms = " + ".join(f"{c}*{self.basis_names[k]}" for k, c in enumerate(vec) if c)
            parts.append(f"[{self.basis_names[i]},{self.basis_names[j]}] = {terms or '0'}")
        return f"LieAlgebra(dim={self.dim}: {'; '.join(parts) or 'abelian'})"


def _normalize_constants(dim, constants):
    table = {}
    seen = set()
    for key, value in (constants or {}).items():
        if len(key) == 3:
            i, j, k = key
            entry = {k: value}
        elif len(key) == 2:
            i, j = key
            entry = dict(enumerate(value)) if not isinstance(value, dict) else value
        else:
            raise ValueError(f"bad constants key {key!r}")
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"basis index out of range in key {key!r}")
        if i == j:
            if any(as_scalar(c) for c in entry.values()):
                raise ValueError(f"[x_{i}, x_{i}] must vanish")
            continue
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        vec = list(table.get((i, j), (ZERO,) * dim))
        for k, c in entry.items():
            if not (0 <= k < dim):
                raise ValueError(f"target index {k} out of range")
            if (i, j, k) in seen:
                raise ValueError(f"duplicate structure constant for ({i},{j},{k})")
            seen.add((i, j, k))
            vec[k] = vec[k] + sign * as_scalar(c)
        table[(i, j)] = tuple(vec)
    return {ij: vec for ij, vec in table.items() if any(vec)}


def new_lie_algebra(dim, basis_names=None, constants=None) -> LieAlgebra:
    """Validating constructor; raises JacobiViolation with the offending triple."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    if basis_names is None:
        basis_names = tuple(f"x{i+1}" for i in range(dim))
    basis_names = tuple(basis_names)
    if len(basis_names) != dim or len(set(basis_names)) != dim:
        raise ValueError("need dim distinct basis names")
    L = LieAlgebra(dim, basis_names, _normalize_constants(dim, constants))
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                residual = _jacobi_residual(L, i, j, k)
                if any(residual):
                    raise JacobiViolation((basis_names[i], basis_names[j], basis_names[k]), residual)
    return L


def _jacobi_residual(L, i, j, k):
    ei, ej, ek = L.basis_vector(i), L.basis_vector(j), L.basis_vector(k)
    t1 = L.bracket(ei, L.bracket_basis(j, k))
    t2 = L.bracket(ej, L.bracket_basis(k, i))
    t3 = L.bracket(ek, L.bracket_basis(i, j))
    return tuple(a + b + c for a, b, c in zip(t1, t2, t3))


def adjoint_matrix(L: LieAlgebra, v) -> Matrix:
    """Matrix of ad(v) = [v, -]; column j holds the coordinates of [v, x_j]."""
    if len(v) != L.dim:
        raise DimensionMismatch(f"vector length {len(v)} vs dimension {L.dim}")
    v = tuple(as_scalar(x) for x in v)
    cols = [L.bracket(v, L.basis_vector(j)) for j in range(L.dim)]
    return Matrix(L.dim, L.dim, [cols[j][i] for i in range(L.dim) for j in range(L.dim)])


def adjoint_trace(L: LieAlgebra, i) -> Scalar:
    """Trace of ad(x_i), read off the structure constants directly."""
    total = ZERO
    for j in range(L.dim):
        total = total + L.bracket_basis(i, j)[j]
    return total


def is_unimodular(L: LieAlgebra) -> CheckResult:
    """True iff every basis adjoint is traceless; witness is (index, trace)."""
    for i in range(L.dim):
        t = adjoint_trace(L, i)
        if t:
            return CheckResult(False, (i, t))
    return CheckResult(True)


def derived_dim(L: LieAlgebra) -> int:
    """Dimension of [g, g], the row space of all bracket vectors."""
    if not L.table:
        return 0
    M = Matrix.from_rows([vec for vec in L.table.values()])
    rank, _ = rank_kernel(M)
    return rank


@dataclass(frozen=True)
class Sextuple:
    a: Scalar
    b: Scalar
    c: Scalar
    u: Scalar
    v: Scalar
    w: Scalar

    @classmethod
    def of(cls, a, b, c, u, v, w):
        return cls(*(as_scalar(x) for x in (a, b, c, u, v, w)))


def cy3_from_sextuple(s: Sextuple) -> LieAlgebra:
    """The 3-dimensional algebra of the six-parameter bracket family."""
    s = Sextuple.of(s.a, s.b, s.c, s.u, s.v, s.w)
    constants = {
        (0, 1): (s.a, s.b, s.w),
        (0, 2): (s.c, s.v, -s.b),
        (1, 2): (s.u, -s.c, s.a),
    }
    # Jacobi holds identically in (a,b,c,u,v,w); the constructor re-checks anyway
    return new_lie_algebra(3, ("x", "y", "z"), constants)


def sextuple_extract(L: LieAlgebra) -> Sextuple:
    """Inverse of cy3_from_sextuple; fails exactly when the algebra is not unimodular."""
    if L.dim != 3:
        raise NotDimensionThree(f"dimension {L.dim}")
    k1 = L.bracket_basis(0, 1)
    k2 = L.bracket_basis(0, 2)
    k3 = L.bracket_basis(1, 2)
    if k1[0] != k3[2]:
        raise NotCYForm("k11 = k33", (k1[0], k3[2]))
    if k1[1] != -k2[2]:
        raise NotCYForm("k12 = -k23", (k1[1], k2[2]))
    if k2[0] != -k3[1]:
        raise NotCYForm("k21 = -k32", (k2[0], k3[1]))
    return Sextuple(a=k1[0], b=k1[1], c=k2[0], u=k3[0], v=k2[1], w=k1[2])


def classify_cy3(L: LieAlgebra) -> CY3Class:
    """Classify a 3-dimensional unimodular algebra by dim [g, g]."""
    if L.dim != 3:
        raise NotDimensionThree(f"dimension {L.dim}")
    uni = is_unimodular(L)
    if not uni:
        raise NotUnimodular(uni.witness)
    return {
        0: CY3Class.ABELIAN,
        1: CY3Class.HEISENBERG,
        2: CY3Class.SOLVABLE_II,
        3: CY3Class.SL2,
    }[derived_dim(L)]
