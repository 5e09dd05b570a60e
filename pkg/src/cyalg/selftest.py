"""The acceptance battery: nine exact criteria plus a total runtime budget.

Each criterion is a function returning (ok, detail).  run_all executes them in
order with a fixed RNG seed, so the battery is deterministic.  The random Lie
algebras mix known families, unimodular basis changes of those families, and
sparse rejection-sampled tables, all validated through the Jacobi check.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import JacobiViolation, NotCYForm, NotUnimodular
from .groupact import (group_closure, integral_character, skew_is_cy,
                       skew_integral_invariants)
from .homology import betti_numbers, is_cy_universal
from .lie import (CY3Class, LieAlgebra, Sextuple, classify_cy3,
                  cy3_from_sextuple, is_unimodular, new_lie_algebra,
                  sextuple_extract)
from .linalg import Matrix, invert
from .potential import verify_potential
from .scalar import ONE, Scalar, as_scalar, zeta
from .sridharan import (NCPolynomial, catalog, normal_form,
                        zeta_dualizing_automorphism)

DEFAULT_SEED = 271828


@dataclass(frozen=True)
class CriterionResult:
    name: str
    ok: bool
    detail: str
    seconds: float


# -- random instance generators ---------------------------------------------------

def _small_fraction(rng) -> Scalar:
    return as_scalar(Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))))


def random_sextuple(rng) -> Sextuple:
    return Sextuple.of(*(_small_fraction(rng) for _ in range(6)))


def _family_algebra(rng, dim) -> LieAlgebra:
    kind = rng.randrange(4)
    if kind == 0 or dim == 1:
        return new_lie_algebra(dim)
    if kind == 1 and dim >= 3:
        # Heisenberg-like: one central bracket
        return new_lie_algebra(dim, constants={(0, 1): tuple(
            ONE if k == 2 else as_scalar(0) for k in range(dim))})
    if kind == 2:
        # solvable: [x1, xk] = c xk for k >= 2
        constants = {}
        for k in range(1, dim):
            vec = [as_scalar(0)] * dim
            vec[k] = _small_fraction(rng)
            constants[(0, k)] = tuple(vec)
        return new_lie_algebra(dim, constants=constants)
    if dim == 3:
        return cy3_from_sextuple(random_sextuple(rng))
    return new_lie_algebra(dim)


def _random_unimodular_matrix(rng, n) -> Matrix:
    """Product of a few elementary shears; determinant stays 1."""
    M = Matrix.identity(n)
    for _ in range(rng.randint(1, 4)):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        data = [[ONE if a == b else as_scalar(0) for b in range(n)] for a in range(n)]
        data[i][j] = as_scalar(rng.choice((-2, -1, 1, 2)))
        M = M * Matrix.from_rows(data)
    return M


def _basis_changed(rng, L: LieAlgebra) -> LieAlgebra:
    P = _random_unimodular_matrix(rng, L.dim)
    Pinv = invert(P)
    constants = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            vec = Pinv.apply(L.bracket(P.col(i), P.col(j)))
            if any(vec):
                constants[(i, j)] = vec
    return new_lie_algebra(L.dim, constants=constants)


def _sparse_random(rng, dim) -> LieAlgebra:
    for _ in range(12):
        constants = {}
        for _ in range(rng.randint(1, 2)):
            i = rng.randrange(dim)
            j = rng.randrange(dim)
            if i == j:
                continue
            if i > j:
                i, j = j, i
            vec = [as_scalar(0)] * dim
            vec[rng.randrange(dim)] = _small_fraction(rng)
            constants[(i, j)] = tuple(vec)
        try:
            return new_lie_algebra(dim, constants=constants)
        except JacobiViolation:
            continue
    return new_lie_algebra(dim)


def random_lie_algebra(rng, dim=None) -> LieAlgebra:
    if dim is None:
        dim = rng.randint(1, 4)
    roll = rng.random()
    if roll < 0.4:
        return _family_algebra(rng, dim)
    if roll < 0.7:
        return _basis_changed(rng, _family_algebra(rng, dim))
    return _sparse_random(rng, dim)


def random_ncpoly(rng, dim, max_degree=3, max_terms=2) -> NCPolynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_degree)
        word = tuple(rng.randrange(dim) for _ in range(length))
        terms[word] = _small_fraction(rng)
    return NCPolynomial(terms)


# -- the criteria -----------------------------------------------------------------

def criterion_1_route_agreement(rng):
    """Three equivalent CY routes agree on 1000 random algebras of dim <= 4."""
    cy = 0
    for _ in range(1000):
        L = random_lie_algebra(rng)
        # is_cy_universal raises if the trace, differential, and cohomology
        # routes ever disagree
        rep = is_cy_universal(L)
        cy += bool(rep.verdict)
    return True, f"1000 algebras, routes agreed, {cy} were CY"


def criterion_2_sextuple(rng):
    """Sextuples always give CY algebras; extraction succeeds iff unimodular."""
    for _ in range(500):
        L = cy3_from_sextuple(random_sextuple(rng))
        if not is_cy_universal(L).verdict:
            return False, "sextuple algebra failed the CY check"
    checked = mismatch = 0
    for _ in range(500):
        L = random_lie_algebra(rng, dim=3)
        uni = is_unimodular(L).ok
        try:
            sextuple_extract(L)
            extracted = True
        except NotCYForm:
            extracted = False
        checked += 1
        if uni != extracted:
            mismatch += 1
    if mismatch:
        return False, f"{mismatch}/{checked} unimodular/extraction disagreements"
    return True, "500 sextuples CY; extraction matched unimodularity on 500 more"


def criterion_3_classification(rng):
    fixtures = [
        ({(0, 1): (0, 0, 1), (0, 2): (-2, 0, 0), (1, 2): (0, 2, 0)}, CY3Class.SL2),
        ({(0, 1): (0, 1, 0), (0, 2): (0, 0, -1)}, CY3Class.SOLVABLE_II),
        ({(0, 1): (0, 0, 1)}, CY3Class.HEISENBERG),
        ({}, CY3Class.ABELIAN),
    ]
    for constants, expected in fixtures:
        got = classify_cy3(new_lie_algebra(3, constants=constants))
        if got != expected:
            return False, f"expected {expected.name}, got {got.name}"
    rejects = [
        ({(0, 1): (0, 1, 0), (0, 2): (0, 1, 1)}, (0, Scalar(2))),
        ({(0, 1): (0, 1, 0)}, (0, Scalar(1))),
    ]
    for constants, witness in rejects:
        try:
            classify_cy3(new_lie_algebra(3, constants=constants))
            return False, "non-unimodular algebra was classified"
        except NotUnimodular as e:
            if e.witness != witness:
                return False, f"wrong trace witness {e.witness}"
    return True, "4 classes and 2 rejections with exact trace witnesses"


def criterion_4_betti(rng):
    goldens = [
        ({}, (1, 3, 3, 1)),
        ({(0, 1): (0, 0, 1), (0, 2): (-2, 0, 0), (1, 2): (0, 2, 0)}, (1, 0, 0, 1)),
        ({(0, 1): (0, 0, 1)}, (1, 2, 2, 1)),
    ]
    for constants, expected in goldens:
        got = betti_numbers(new_lie_algebra(3, constants=constants))
        if got != expected:
            return False, f"betti {got} != {expected}"
    return True, "abelian (1,3,3,1), simple (1,0,0,1), Heisenberg (1,2,2,1)"


def criterion_5_catalog(rng):
    from itertools import product

    from .linalg import rank_kernel

    algebras = catalog()
    if len(algebras) != 7:
        return False, f"catalog has {len(algebras)} entries"
    words = [()]
    for d in (1, 2, 3):
        words.extend(product(range(3), repeat=d))
    sorted_words = [w for w in words if list(w) == sorted(w)]
    for A in algebras:
        rep = is_cy_universal(A.lie)
        if not (rep.verdict and rep.dimension == 3):
            return False, f"{A.name} is not CY of dimension 3"
        # PBW at degree <= 3: all 40 words reduce into the 20 sorted words,
        # and the sorted words stay linearly independent
        rows = []
        for w in words:
            nf = normal_form(A, NCPolynomial({w: ONE}))
            if any(list(u) != sorted(u) for u in nf.terms):
                return False, f"{A.name}: unsorted word in a normal form"
            rows.append(tuple(nf.coefficient(u) for u in sorted_words))
        rank, _ = rank_kernel(Matrix.from_rows(rows))
        if rank != 20:
            return False, f"{A.name}: PBW rank {rank} != 20"
    return True, "7 algebras built, confluent, CY dim 3, PBW rank 20 at degree 3"


def criterion_6_potentials(rng):
    algebras = catalog()
    problems = _catalog_problems()
    potentials = [p.potential() for p in problems]
    for i in range(7):
        if not verify_potential(potentials[i], algebras[i]):
            return False, f"potential {i+1} does not define case {i+1}"
    false_pairs = 0
    for i in range(7):
        for j in range(7):
            if i != j and not verify_potential(potentials[i], algebras[j]):
                false_pairs += 1
    if false_pairs < 5:
        return False, f"only {false_pairs} mismatched pairs failed"
    return True, f"7 matches verified; {false_pairs}/42 mismatched pairs rejected"


def _catalog_problems():
    from .problemfile import CATALOG_CASE_NAMES, load_catalog

    return [load_catalog(name) for name in CATALOG_CASE_NAMES]


def criterion_7_skew(rng):
    z3 = zeta(3)
    rot = Matrix.from_rows([(0, -1), (1, 0)])
    battery = [
        (new_lie_algebra(2), [rot], True),
        (new_lie_algebra(2), [Matrix.from_rows([(1, 0), (0, -1)])], False),
        (new_lie_algebra(3, constants={(0, 1): (0, 0, 1)}),
         [Matrix.from_rows([(-1, 0, 0), (0, -1, 0), (0, 0, 1)])], True),
        (new_lie_algebra(3),
         [Matrix.from_rows([(z3, 0, 0), (0, 1, 0), (0, 0, 1)])], False),
    ]
    for L, gens, expected in battery:
        G = group_closure(gens)
        rep = skew_is_cy(L, G)
        if bool(rep.verdict) != expected:
            return False, f"skew verdict {rep.verdict}, expected {expected}"
        if expected:
            t = skew_integral_invariants(L, G)
            if t != tuple(ONE for _ in range(G.order)):
                return False, f"CY case invariant {t} is not the full group sum"
    return True, "4 fixtures matched the biconditional; CY invariants = group sums"


def criterion_8_invariant_example(rng):
    z3 = zeta(3)
    L = new_lie_algebra(3)
    G = group_closure([Matrix.from_rows([(z3, 0, 0), (0, 1, 0), (0, 0, 1)])])
    if G.order != 3:
        return False, f"group order {G.order} != 3"
    chi = integral_character(L, G)
    omega = z3 * z3
    if chi[G.generator_indices[0]] != omega:
        return False, "character of the generator is not the inverse determinant"
    t = skew_integral_invariants(L, G)
    expected = (ONE, z3 * z3, z3)
    if t != expected:
        return False, f"invariant {t} != {expected}"
    # proportional to (omega, omega^2, 1)
    ratio = omega / t[0]
    if tuple(ratio * c for c in t) != (omega, omega * omega, ONE):
        return False, "invariant is not proportional to (omega, omega^2, 1)"
    return True, "order-3 action: invariant (1, w^2, w) with w = z3, 1-dimensional"


def criterion_9_rewriting(rng):
    algebras = catalog()
    for A in algebras:
        for _ in range(500):
            p = random_ncpoly(rng, 3)
            q = random_ncpoly(rng, 3)
            r = random_ncpoly(rng, 3)
            left = normal_form(A, normal_form(A, p * q) * r)
            right = normal_form(A, p * normal_form(A, q * r))
            if left != right:
                return False, f"{A.name}: associativity broke"
        if not zeta_dualizing_automorphism(A).is_identity():
            return False, f"{A.name}: dualizing twist is not the identity"
    from .sridharan import TwoCocycle, build_sridharan
    for constants in ({(0, 1): (0, 1, 0), (0, 2): (0, 1, 1)},
                      {(0, 1): (0, 1, 0)}):
        L = new_lie_algebra(3, constants=constants)
        A = build_sridharan(L, TwoCocycle.zero(3))
        zt = zeta_dualizing_automorphism(A)
        if zt.is_identity():
            return False, "dualizing twist is the identity on a non-unimodular algebra"
        if not zt.preserves_relations():
            return False, "dualizing twist does not preserve relations"
    return True, "3500 associativity triples exact; dualizing twist behaved on all fixtures"


CRITERIA = [
    ("route-agreement", criterion_1_route_agreement),
    ("sextuple-equivalence", criterion_2_sextuple),
    ("classification", criterion_3_classification),
    ("betti-goldens", criterion_4_betti),
    ("catalog-build", criterion_5_catalog),
    ("potential-correspondence", criterion_6_potentials),
    ("skew-battery", criterion_7_skew),
    ("invariant-example", criterion_8_invariant_example),
    ("rewriting-soundness", criterion_9_rewriting),
]


def run_all(seed=DEFAULT_SEED):
    results = []
    for name, fn in CRITERIA:
        rng = random.Random(f"{seed}:{name}")
        start = time.perf_counter()
        try:
            ok, detail = fn(rng)
        except Exception as e:
            ok, detail = False, f"raised {type(e).__name__}: {e}"
        results.append(CriterionResult(name, ok, detail,
                                       time.perf_counter() - start))
    return results
