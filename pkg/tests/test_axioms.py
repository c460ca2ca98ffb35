from fractions import Fraction

import pytest

from rspin import DomainError, Poly, ScaleLimitError
from rspin import axioms as ax
from rspin.frobenius import Prepotential, prepotential
from rspin.graphs import DecoratedGraph


def two_vertex(r, mplus):
    dec = (0, 0, 0, 0, mplus, (r - 2 - mplus) % r)
    return DecoratedGraph(r, (0, 0), (0, 0, 1, 1, 0, 1), ((4, 5),), (0, 1, 2, 3), dec)


def test_axiom1_examples():
    assert ax.check_axiom1_factors(4, two_vertex(4, 1))
    assert ax.check_axiom1_factors(5, two_vertex(5, 0))
    empty = ax.check_axiom1_factors(3, DecoratedGraph.corolla(3, 0, (0, 0, 1)))
    assert empty and empty.cases == 1


@pytest.mark.parametrize("r", [2, 3, 4])
def test_axiom1_on_graphs(r):
    assert ax.check_axiom1_graphs(r)


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_axiom3(r):
    assert ax.check_axiom3_splitting(r)


def test_axiom3_negative_control():
    F = prepotential(4)
    bad = Prepotential(4, F.poly + Poly.monomial((0, 4, 0), Fraction(1, 5)))
    result = ax.check_axiom3_splitting(4, bad)
    assert not result
    assert "WDVV fails" in result.counterexample


@pytest.mark.parametrize("r", [2, 3, 4])
def test_axiom4(r):
    assert ax.check_axiom4_ramond(r)


def test_axiom4_narrow_control_is_not_flagged():
    from rspin.correlators import theory

    assert theory(3).primary((1, 1, 1, 1)) == Fraction(1, 3)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_axiom5(r):
    assert ax.check_axiom5_forget(r)


def test_axiom5_example_values():
    from rspin.correlators import theory

    for r in (3, 4, 5):
        T = theory(r)
        for a in range(r - 1):
            for b in range(r - 1 - a):
                assert T.primary((0, a, b, r - 2 - a - b)) == 0


@pytest.mark.parametrize("r", range(2, 7))
def test_normalization(r):
    assert ax.check_normalization(r)


def test_normalization_examples():
    from rspin.correlators import theory

    T = theory(5)
    assert T.primary((1, 3, 0)) == 0
    assert T.primary((1, 2, 0)) == 1
    assert T.primary((2, 1, 0)) == 1


@pytest.mark.parametrize("r", [2, 3, 4])
def test_sn_invariance(r):
    result = ax.check_sn_invariance(r, samples=100)
    assert result and result.cases == 100


def test_sn_corrupted_table_control():
    table = ax.sn_observations(3, samples=30, seed=1)
    key = next(k for k, v in sorted(table.items()) if v)
    corrupt = dict(table)
    corrupt[key] = table[key] + 1
    result = ax.check_sn_invariance(3, corrupt)
    assert not result
    assert result.counterexample


def test_singleton_orbit_keys_pass():
    key = ((0, 1), (0, 1), (0, 1), (0, 1))
    assert ax.check_sn_invariance(3, {key: Fraction(1, 3)})


@pytest.mark.parametrize("r", [2, 3, 5])
def test_other_properties(r):
    assert ax.check_dimension_vanishing(r)
    assert ax.check_selection_equivalence(r)
    assert ax.check_rank_consistency(r)
    assert ax.check_dual_engine(r)


def test_graph_algebra_check():
    assert ax.check_graph_algebra(3, 1, 3)


def test_kdv_and_hydro_results():
    assert ax.check_kdv(6)
    assert ax.check_hydro(3, 6)


def test_run_suite_shapes():
    names = [c.name for c in ax.run_suite("axioms", 3)]
    assert "axiom4 Ramond vanishing" in names
    assert [c.name for c in ax.run_suite("kdv", 2)] == ["dKdV residual (r=2)"]
    assert [c.name for c in ax.run_suite("wdvv", 4)] == ["axiom3 splitting (WDVV)"]
    with pytest.raises(ScaleLimitError):
        ax.run_suite("hydro", 5)
    with pytest.raises(ScaleLimitError):
        ax.run_suite("kdv", 2, 9)
    with pytest.raises(DomainError):
        ax.run_suite("nope", 2)


def test_check_result_dict():
    res = ax.CheckResult("x", False, 3, "boom")
    assert res.as_dict() == {"check": "x", "result": "FAIL", "cases": 3, "counterexample": "boom"}
    assert not res
