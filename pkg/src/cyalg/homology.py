"""Exterior-algebra chain complex of a Lie algebra and the Calabi-Yau decision.

The complex has C_n = wedge^n(g) with the lexicographically ordered wedge
basis and boundary

    d(x_{s_1} ^ ... ^ x_{s_n}) =
        sum_{a<b} (-1)^(a+b) [x_{s_a}, x_{s_b}] ^ (the word with slots a, b removed),

1-based positions, and d^1 = 0.  Homology of this complex computes Tor over
the enveloping algebra with trivial coefficients; the enveloping algebra is
Calabi-Yau of dimension d exactly when the adjoint traces vanish, equivalently
when the top boundary map is zero, equivalently when the top cohomology of the
transposed complex is nonzero.  is_cy_universal evaluates all three routes
independently and insists they agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .lie import LieAlgebra, adjoint_trace, is_unimodular
from .linalg import Matrix, rank_kernel
from .scalar import ZERO


@dataclass
class ChainComplex:
    dims: tuple          # dims[n] = binomial(d, n)
    diffs: tuple         # diffs[n-1] is the boundary C_n -> C_{n-1}
    bases: tuple         # bases[n] = tuple of index tuples for wedge^n

    def differential(self, n: int) -> Matrix:
        return self.diffs[n - 1]


@dataclass
class CYRoutes:
    trace_condition: bool
    top_differential_zero: bool
    top_homology_nonzero: bool

    def as_dict(self):
        return {
            "trace_condition": self.trace_condition,
            "top_differential_zero": self.top_differential_zero,
            "top_homology_nonzero": self.top_homology_nonzero,
        }


@dataclass
class CYReport:
    verdict: bool
    dimension: Optional[int]
    routes: Optional[CYRoutes]
    witness: object = None
    notes: tuple = field(default=())


def _wedge_basis(d, n):
    return tuple(combinations(range(d), n))


def ce_chain_complex(L: LieAlgebra) -> ChainComplex:
    d = L.dim
    bases = tuple(_wedge_basis(d, n) for n in range(d + 1))
    dims = tuple(len(b) for b in bases)
    diffs = []
    for n in range(1, d + 1):
        rows_basis, cols_basis = bases[n - 1], bases[n]
        row_index = {S: r for r, S in enumerate(rows_basis)}
        entries = [[ZERO] * len(cols_basis) for _ in rows_basis]
        for cidx, S in enumerate(cols_basis):
            for a in range(n):
                for b in range(a + 1, n):
                    rest = tuple(S[t] for t in range(n) if t != a and t != b)
                    sign_ab = -1 if (a + b) % 2 else 1  # (-1)^((a+1)+(b+1))
                    vec = L.bracket_basis(S[a], S[b])
                    for k, c in enumerate(vec):
                        if not c or k in rest:
                            continue
                        insert_at = sum(1 for t in rest if t < k)
                        sgn = sign_ab if insert_at % 2 == 0 else -sign_ab
                        wedge = tuple(sorted(rest + (k,)))
                        r = row_index[wedge]
                        entries[r][cidx] = entries[r][cidx] + (c if sgn > 0 else -c)
        diffs.append(Matrix.from_rows(entries) if rows_basis else Matrix.zeros(0, len(cols_basis)))
    cx = ChainComplex(dims, tuple(diffs), bases)
    for n in range(2, d + 1):
        if not (cx.diffs[n - 2] * cx.diffs[n - 1]).is_zero():
            raise RuntimeError(f"boundary squared is nonzero at degree {n} (internal defect)")
    return cx


def betti_numbers(L: LieAlgebra) -> tuple:
    """Dimensions of H_n for n = 0..d; H_0 = 1 always."""
    cx = ce_chain_complex(L)
    d = L.dim
    ranks = [0] * (d + 2)
    for n in range(1, d + 1):
        ranks[n], _ = rank_kernel(cx.diffs[n - 1])
    return tuple(cx.dims[n] - ranks[n] - ranks[n + 1] for n in range(d + 1))


def is_cy_universal(L: LieAlgebra) -> CYReport:
    """Calabi-Yau decision for the enveloping algebra, three routes cross-checked."""
    uni = is_unimodular(L)
    cx = ce_chain_complex(L)
    d = L.dim
    top = cx.diffs[d - 1]
    top_zero = top.is_zero()
    rank_top_t, _ = rank_kernel(top.transpose())
    top_cohomology_dim = cx.dims[d] - rank_top_t
    routes = CYRoutes(
        trace_condition=uni.ok,
        top_differential_zero=top_zero,
        top_homology_nonzero=top_cohomology_dim != 0,
    )
    if not (routes.trace_condition == routes.top_differential_zero == routes.top_homology_nonzero):
        raise RuntimeError(f"equivalent Calabi-Yau criteria disagree (internal defect): {routes}")
    return CYReport(
        verdict=uni.ok,
        dimension=d if uni.ok else None,
        routes=routes,
        witness=None if uni.ok else uni.witness,
    )
