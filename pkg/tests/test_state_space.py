from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rspin import BroadSectorError, DomainError
from rspin.state_space import (
    Kind,
    Sector,
    central_charge,
    check_r,
    degree,
    from_rspin,
    normalize_label,
    pairing,
    rspin_degree,
    rspin_pairing,
    state_space,
    to_rspin,
)


def test_basis_is_the_narrow_sectors():
    space = state_space(5)
    assert [s.k for s in space.basis] == [1, 2, 3, 4]
    assert all(s.narrow and s.fixed_dim == 0 for s in space.basis)
    assert space.charge == Fraction(1, 5)
    assert space.central_charge == Fraction(3, 5)


def test_broad_sector():
    s = Sector(4, 0)
    assert not s.narrow
    assert s.fixed_dim == 1
    with pytest.raises(BroadSectorError):
        degree(4, 0)


def test_central_charge_values():
    assert central_charge(2) == 0
    assert central_charge(3) == Fraction(1, 3)


def test_translate_examples():
    label = to_rspin(5, 4)
    assert (label.m, label.kind) == (3, Kind.NS)
    assert to_rspin(5, 0).kind is Kind.RAMOND
    assert to_rspin(5, 0).m == 4
    assert from_rspin(5, -1) == Sector(5, 0)
    assert normalize_label(3, -1) == 2


def test_degree_examples():
    assert degree(3, 1) == 0
    assert degree(3, 2) == Fraction(1, 3)
    assert rspin_degree(3, 1) == Fraction(1, 3)


def test_pairing_matrix_is_antidiagonal():
    assert state_space(4).pairing_matrix() == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


@pytest.mark.parametrize("bad", [0, 1, -3, 2.0, True])
def test_bad_r(bad):
    with pytest.raises(DomainError):
        check_r(bad)


def test_labels_out_of_range():
    with pytest.raises(DomainError):
        normalize_label(3, 3)
    with pytest.raises(DomainError):
        to_rspin(3, 3)
    with pytest.raises(DomainError):
        rspin_pairing(3, 2, 0)


@given(st.integers(2, 12).flatmap(lambda r: st.tuples(st.just(r), st.integers(1, r - 1), st.integers(1, r - 1))))
def test_translation_is_an_isometry(args):
    r, k, l = args
    mu, nu = to_rspin(r, k).m, to_rspin(r, l).m
    assert degree(r, k) == rspin_degree(r, mu)
    assert pairing(r, k, l) == rspin_pairing(r, mu, nu)
    assert from_rspin(r, mu).k == k
