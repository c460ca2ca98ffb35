from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest

from rspin import DomainError, NotConcaveError
from rspin.euler_class import (
    BOUNDARY_WEIGHT,
    admissible_four_tuples,
    bernoulli2,
    calibrate_boundary_weight,
    concave_data,
    four_point_class_degree,
    node_label,
    r1_rank,
)
from rspin.frobenius import prepotential
from rspin.graphs import virtual_dim


def test_rank_examples():
    assert r1_rank(3, (1, 1, 1, 1)) == 1
    assert r1_rank(5, (2, 2, 2, 2)) == 1
    assert r1_rank(2, (0, 0, 0)) == 0
    assert concave_data(3, (1, 1, 1, 1)).bundle_degree == -2


def test_rank_ramond_flag_and_errors():
    assert r1_rank(3, (2, 0, 1, 1)) is None
    assert r1_rank(3, (-1, 0, 1, 1)) is None
    with pytest.raises(NotConcaveError):
        r1_rank(3, (1, 1, 1))
    with pytest.raises(NotConcaveError):
        r1_rank(3, (0, 1))


def test_rank_equals_virtual_dimension():
    for r in range(2, 8):
        for n in range(3, 7):
            for m in combinations_with_replacement(range(r - 1), n):
                if (2 + sum(m)) % r == 0:
                    assert r1_rank(r, m) == virtual_dim(r, 0, 1, m).D


def test_bernoulli_symmetry():
    for k in range(0, 13):
        x = Fraction(k, 12)
        assert bernoulli2(x) == bernoulli2(1 - x)


def test_node_label():
    assert node_label(3, (1, 1)) == 2
    assert node_label(4, (1, 2)) == 3


def test_four_point_examples():
    assert four_point_class_degree(3, (1, 1, 1, 1)) == Fraction(1, 3)
    assert four_point_class_degree(4, (1, 1, 2, 2)) == Fraction(1, 4)
    assert four_point_class_degree(4, (0, 2, 2, 2)) == 0
    assert list(admissible_four_tuples(2)) == []


def test_ramond_input_gives_zero():
    assert four_point_class_degree(3, (2, 2, 1, 1)) == 0
    assert four_point_class_degree(4, (3, 0, 1, 0)) == 0


def test_wrong_dimension_is_rejected():
    with pytest.raises(DomainError):
        four_point_class_degree(3, (1, 1, 1, 0))
    with pytest.raises(DomainError):
        four_point_class_degree(3, (1, 1, 1))


def test_calibration_is_on_r3_only():
    assert calibrate_boundary_weight(3, (1, 1, 1, 1), Fraction(1, 3)) == BOUNDARY_WEIGHT


@pytest.mark.parametrize("r", [4, 5, 6])
def test_validation_against_residues(r):
    F = prepotential(r)
    for m in admissible_four_tuples(r):
        for p in set(permutations(m)):
            assert four_point_class_degree(r, p) == F.correlator(p)
