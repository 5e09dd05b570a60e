"""Cyclic potentials: derivatives against the rotation oracle, the correspondence."""

import random
from fractions import Fraction

import pytest

from cyalg.errors import GeneratorMismatch
from cyalg.lie import new_lie_algebra
from cyalg.potential import (CyclicPotential, cyclic_derivative, cyclic_reduce,
                             least_rotation, parse_potential, verify_potential)
from cyalg.problemfile import CATALOG_CASE_NAMES, load_catalog
from cyalg.scalar import ONE, Scalar
from cyalg.sridharan import (NCPolynomial, TwoCocycle, build_sridharan,
                             catalog, parse_ncpoly)

from oracles import cyclic_derivative_oracle

NAMES = ["x", "y", "z"]
CATALOG = catalog()
POTENTIAL_TEXTS = [load_catalog(n).potential_text for n in CATALOG_CASE_NAMES]


def test_least_rotation_and_canonical_storage():
    assert least_rotation((1, 0, 2)) == (0, 2, 1)
    assert least_rotation(()) == ()
    assert least_rotation((2,)) == (2,)
    with pytest.raises(ValueError):
        CyclicPotential({(1, 0): ONE})


def test_cyclic_reduce_merges_rotations():
    p = NCPolynomial({(0, 1, 2): ONE, (1, 2, 0): ONE})
    assert cyclic_reduce(p).terms == {(0, 1, 2): Scalar(2)}
    p = NCPolynomial({(0, 1, 2): ONE, (1, 0, 2): ONE})
    assert len(cyclic_reduce(p).terms) == 2  # not rotations of each other
    p = NCPolynomial({(0,): ONE}) - NCPolynomial({(0,): ONE})
    assert cyclic_reduce(p).is_zero


def test_derivative_goldens():
    phi = cyclic_reduce(NCPolynomial({(0, 1, 2): ONE}))
    assert cyclic_derivative(phi, 1).terms == {(2, 0): ONE}
    phi = parse_potential("x*y*z - y*x*z", NAMES)
    assert cyclic_derivative(phi, 2).terms == {(0, 1): ONE, (1, 0): -ONE}
    phi = parse_potential("1/2*z^2", NAMES)
    assert cyclic_derivative(phi, 2).terms == {(2,): ONE}
    phi1 = parse_potential(POTENTIAL_TEXTS[0], NAMES)
    assert cyclic_derivative(phi1, 0).terms == {
        (1, 2): ONE, (2, 1): -ONE, (1,): Scalar(-2)}


def test_derivative_matches_rotation_oracle():
    rng = random.Random(11)
    for _ in range(60):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            w = tuple(rng.randrange(3) for _ in range(rng.randint(1, 4)))
            terms[w] = Fraction(rng.randint(-3, 3))
        phi = cyclic_reduce(NCPolynomial(terms))
        oracle_terms = {w: c.as_fraction() for w, c in phi.terms.items()}
        for g in range(3):
            got = cyclic_derivative(phi, g)
            want = cyclic_derivative_oracle(oracle_terms, g)
            assert {w: c.as_fraction() for w, c in got.terms.items()} == want


def test_rotation_invariance_of_derivative():
    a = cyclic_reduce(NCPolynomial({(2, 0, 1, 0): Scalar(3)}))
    b = cyclic_reduce(NCPolynomial({(0, 1, 0, 2): Scalar(3)}))
    assert a == b
    for g in range(3):
        assert cyclic_derivative(a, g) == cyclic_derivative(b, g)


def test_derivative_linear_in_potential():
    rng = random.Random(23)
    for _ in range(30):
        t1 = {tuple(rng.randrange(3) for _ in range(rng.randint(1, 3))): Scalar(rng.randint(-3, 3))
              for _ in range(2)}
        t2 = {tuple(rng.randrange(3) for _ in range(rng.randint(1, 3))): Scalar(rng.randint(-3, 3))
              for _ in range(2)}
        p1, p2 = NCPolynomial(t1), NCPolynomial(t2)
        both = cyclic_reduce(p1 + p2)
        for g in range(3):
            assert cyclic_derivative(both, g) == (
                cyclic_derivative(cyclic_reduce(p1), g)
                + cyclic_derivative(cyclic_reduce(p2), g))


def test_full_correspondence():
    for i in range(7):
        phi = parse_potential(POTENTIAL_TEXTS[i], NAMES)
        assert verify_potential(phi, CATALOG[i]), f"case{i+1}"


def test_all_mismatched_pairs_fail():
    potentials = [parse_potential(t, NAMES) for t in POTENTIAL_TEXTS]
    failures = sum(1 for i in range(7) for j in range(7)
                   if i != j and not verify_potential(potentials[i], CATALOG[j]))
    assert failures == 42


def test_case6_sign_variant_fails():
    # flipping the sign of the linear term breaks the correspondence for the
    # deformed Heisenberg algebra: the derivative ideal then contains
    # x*z - z*x + 1 instead of the defining relation x*z - z*x - 1
    variant = parse_potential("x*y*z - y*x*z - 1/2*z^2 - y", NAMES)
    assert not verify_potential(variant, CATALOG[5])
    shipped = parse_potential(POTENTIAL_TEXTS[5], NAMES)
    assert verify_potential(shipped, CATALOG[5])


def test_zeroed_cocycle_mutation_breaks_case5():
    lie = load_catalog("case5").lie()
    undeformed = build_sridharan(lie, TwoCocycle.zero(3))
    phi5 = parse_potential(POTENTIAL_TEXTS[4], NAMES)
    assert not verify_potential(phi5, undeformed)


def test_generator_mismatch():
    small = build_sridharan(new_lie_algebra(2), TwoCocycle.zero(2))
    phi = cyclic_reduce(NCPolynomial({(0, 1, 2): ONE}))
    with pytest.raises(GeneratorMismatch):
        verify_potential(phi, small)


def test_potential_from_ncpoly_grammar():
    phi = cyclic_reduce(parse_ncpoly("x*y*z + z*x*y - 2*x*y*z", NAMES))
    assert phi.is_zero
