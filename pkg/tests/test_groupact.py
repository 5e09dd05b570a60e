"""Finite group actions, the skew CY decision, characters, and invariants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyalg.errors import (DimensionMismatch, NotInvertible, NotLieAction,
                          OrderExceedsCap)
from cyalg.groupact import (MatrixGroup, group_closure, in_special_linear,
                            integral_character, is_lie_action, skew_is_cy,
                            skew_integral_invariants)
from cyalg.lie import new_lie_algebra
from cyalg.linalg import Matrix, determinant, invert
from cyalg.scalar import ONE, Scalar, zeta

ROT = Matrix.from_rows([(0, -1), (1, 0)])
REFLECT = Matrix.from_rows([(1, 0), (0, -1)])
HEIS = {(0, 1): (0, 0, 1)}


def test_closure_small_groups():
    G = group_closure([Matrix.from_rows([(-1, 0), (0, -1)])])
    assert G.order == 2
    assert G.elements[0] == Matrix.identity(2)
    G4 = group_closure([ROT])
    assert G4.order == 4
    # two reflections generate a dihedral group of order 8 with the rotation
    G8 = group_closure([REFLECT, ROT])
    assert G8.order == 8


def test_closure_is_actually_closed():
    G = group_closure([REFLECT, ROT])
    for i in range(G.order):
        for j in range(G.order):
            assert G.product_index(i, j) in range(G.order)
        assert G.inverse_index(i) in range(G.order)


def test_closure_errors():
    with pytest.raises(OrderExceedsCap):
        group_closure([Matrix.from_rows([(1, 1), (0, 1)])], cap=100)
    with pytest.raises(NotInvertible):
        group_closure([Matrix.from_rows([(1, 1), (1, 1)])])
    with pytest.raises(DimensionMismatch):
        group_closure([ROT, Matrix.identity(3)])
    with pytest.raises(ValueError):
        group_closure([])


def test_is_lie_action():
    ab2 = new_lie_algebra(2)
    assert is_lie_action(ab2, group_closure([ROT])).ok
    heis = new_lie_algebra(3, constants=HEIS)
    good = group_closure([Matrix.from_rows([(-1, 0, 0), (0, -1, 0), (0, 0, 1)])])
    assert is_lie_action(heis, good).ok
    bad = group_closure([Matrix.from_rows([(-1, 0, 0), (0, 1, 0), (0, 0, 1)])])
    chk = is_lie_action(heis, bad)
    assert not chk.ok and chk.witness[1:] == ("x1", "x2")
    with pytest.raises(DimensionMismatch):
        is_lie_action(ab2, good)


def test_in_special_linear():
    assert in_special_linear(group_closure([Matrix.from_rows([(-1, 0), (0, -1)])])).ok
    chk = in_special_linear(group_closure([REFLECT]))
    assert not chk.ok and chk.witness[1] == Scalar(-1)
    minus_i3 = Matrix.from_rows([(-1, 0, 0), (0, -1, 0), (0, 0, -1)])
    assert not in_special_linear(group_closure([minus_i3])).ok


def test_skew_battery():
    ab2 = new_lie_algebra(2)
    rep = skew_is_cy(ab2, group_closure([ROT]))
    assert rep.verdict is True and rep.dimension == 2
    rep = skew_is_cy(ab2, group_closure([REFLECT]))
    assert rep.verdict is False and rep.witness == (1, Scalar(-1))
    heis = new_lie_algebra(3, constants=HEIS)
    sign = group_closure([Matrix.from_rows([(-1, 0, 0), (0, -1, 0), (0, 0, 1)])])
    rep = skew_is_cy(heis, sign)
    assert rep.verdict is True and rep.dimension == 3
    z3 = zeta(3)
    scale = group_closure([Matrix.from_rows([(z3, 0, 0), (0, 1, 0), (0, 0, 1)])])
    rep = skew_is_cy(new_lie_algebra(3), scale)
    assert rep.verdict is False

    d2 = new_lie_algebra(2, constants={(0, 1): (0, 1)})
    rep = skew_is_cy(d2, group_closure([Matrix.identity(2)]))
    assert rep.verdict is False and rep.witness == (0, ONE)

    bad = group_closure([Matrix.from_rows([(-1, 0, 0), (0, 1, 0), (0, 0, 1)])])
    with pytest.raises(NotLieAction):
        skew_is_cy(heis, bad)


def test_integral_character():
    ab3 = new_lie_algebra(3)
    z3 = zeta(3)
    G = group_closure([Matrix.from_rows([(z3, 0, 0), (0, 1, 0), (0, 0, 1)])])
    chi = integral_character(ab3, G)
    gi = G.generator_indices[0]
    assert chi[gi] == z3 * z3
    assert chi[0] == ONE
    assert not chi.is_trivial
    assert integral_character(new_lie_algebra(2), group_closure([ROT])).is_trivial
    chi_ref = integral_character(new_lie_algebra(2), group_closure([REFLECT]))
    assert sorted(str(v) for v in chi_ref.values) == ["-1", "1"]


def test_character_multiplicative_exhaustively():
    ab2 = new_lie_algebra(2)
    G = group_closure([REFLECT, ROT])
    chi = integral_character(ab2, G)
    for i in range(G.order):
        for j in range(G.order):
            assert chi[G.product_index(i, j)] == chi[i] * chi[j]


def test_invariants_cyclic_example():
    z3 = zeta(3)
    ab3 = new_lie_algebra(3)
    G = group_closure([Matrix.from_rows([(z3, 0, 0), (0, 1, 0), (0, 0, 1)])])
    t = skew_integral_invariants(ab3, G)
    assert t == (ONE, z3 * z3, z3)
    # proportional to (w, w^2, 1) for w = z3^2
    w = z3 * z3
    assert tuple(w * c for c in t) == (w, w * w, ONE)


def test_invariants_group_sum_inside_sl():
    fixtures = [
        (new_lie_algebra(2), [ROT]),
        (new_lie_algebra(3, constants=HEIS),
         [Matrix.from_rows([(-1, 0, 0), (0, -1, 0), (0, 0, 1)])]),
        (new_lie_algebra(2), [Matrix.identity(2)]),
    ]
    for L, gens in fixtures:
        G = group_closure(gens)
        assert skew_integral_invariants(L, G) == tuple(ONE for _ in range(G.order))


def test_invariants_reflection():
    ab2 = new_lie_algebra(2)
    G = group_closure([REFLECT])
    t = skew_integral_invariants(ab2, G)
    # chi(reflect) = -1, so the invariant is the signed sum
    assert t == (ONE, Scalar(-1))


def test_left_translation_is_permutation():
    G = group_closure([ROT])
    for gi in range(G.order):
        P = G.left_translation(gi)
        assert determinant(P) in (ONE, Scalar(-1))
        row_sums = [sum((P[i, j] for j in range(G.order)), Scalar(0))
                    for i in range(G.order)]
        assert row_sums == [ONE] * G.order


angles = st.sampled_from([1, 2, 3, 4, 6])


@given(angles)
@settings(max_examples=10, deadline=None)
def test_cyclic_groups_have_expected_order(n):
    z = zeta(n) if n > 1 else ONE
    G = group_closure([Matrix.from_rows([(z, 0), (0, z.inverse())])])
    assert G.order == n
    assert in_special_linear(G).ok
    t = skew_integral_invariants(new_lie_algebra(2), G)
    assert t == tuple(ONE for _ in range(n))
