"""Acceptance gate: the ten release criteria, with runtime budgets.

The battery itself lives in cyalg.selftest so the CLI can run it too; here we
execute it once per session and assert each criterion, then cross-check the
Betti goldens against the independent oracle module.
"""

import random
from fractions import Fraction

import pytest

from cyalg import selftest
from cyalg.homology import betti_numbers
from cyalg.lie import Sextuple, cy3_from_sextuple, new_lie_algebra

from oracles import betti_by_oracle


@pytest.fixture(scope="session")
def battery():
    results = selftest.run_all()
    return {r.name: r for r in results}


def _assert_criterion(battery, name, budget):
    result = battery[name]
    assert result.ok, f"{name}: {result.detail}"
    assert result.seconds < budget, (
        f"{name} took {result.seconds:.2f}s, budget {budget}s")


def test_criterion_1_route_agreement(battery):
    _assert_criterion(battery, "route-agreement", 10.0)
    assert "1000 algebras" in battery["route-agreement"].detail


def test_criterion_2_sextuple_theorem(battery):
    _assert_criterion(battery, "sextuple-equivalence", 5.0)


def test_criterion_3_classification(battery):
    _assert_criterion(battery, "classification", 5.0)


def test_criterion_4_betti_goldens(battery):
    _assert_criterion(battery, "betti-goldens", 5.0)


def test_criterion_4_cross_check_against_oracle():
    fixtures = [
        ({}, (1, 3, 3, 1)),
        ({(0, 1): {2: Fraction(1)}, (0, 2): {0: Fraction(-2)},
          (1, 2): {1: Fraction(2)}}, (1, 0, 0, 1)),
        ({(0, 1): {2: Fraction(1)}}, (1, 2, 2, 1)),
    ]
    for brackets, expected in fixtures:
        assert betti_by_oracle(3, brackets) == expected
    constants = {(0, 1): (0, 0, 1), (0, 2): (-2, 0, 0), (1, 2): (0, 2, 0)}
    assert betti_numbers(new_lie_algebra(3, constants=constants)) == (1, 0, 0, 1)


def test_criterion_4_oracle_agreement_random():
    rng = random.Random(99)
    for _ in range(20):
        values = [Fraction(rng.randint(-2, 2)) for _ in range(6)]
        L = cy3_from_sextuple(Sextuple.of(*values))
        brackets = {}
        for i in range(3):
            for j in range(i + 1, 3):
                vec = {k: c.as_fraction()
                       for k, c in enumerate(L.bracket_basis(i, j)) if not c.is_zero}
                if vec:
                    brackets[(i, j)] = vec
        assert betti_numbers(L) == betti_by_oracle(3, brackets)


def test_criterion_5_catalog(battery):
    _assert_criterion(battery, "catalog-build", 5.0)


def test_criterion_6_potential_correspondence(battery):
    _assert_criterion(battery, "potential-correspondence", 5.0)
    assert "42/42" in battery["potential-correspondence"].detail


def test_criterion_7_skew_battery(battery):
    _assert_criterion(battery, "skew-battery", 5.0)


def test_criterion_8_invariant_example(battery):
    _assert_criterion(battery, "invariant-example", 5.0)


def test_criterion_9_rewriting_soundness(battery):
    _assert_criterion(battery, "rewriting-soundness", 30.0)


def test_criterion_10_total_budget(battery):
    total = sum(r.seconds for r in battery.values())
    assert all(r.ok for r in battery.values())
    assert total < 60.0, f"battery took {total:.1f}s"


def test_selftest_via_cli(capsys):
    from cyalg.cli import run

    code, reports = run(["selftest"])
    assert code == 0
    assert len(reports) == 9
    assert all(r.verdict for r in reports)
    out = capsys.readouterr().out
    assert "all criteria pass" in out
