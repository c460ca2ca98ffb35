"""Concave genus-zero geometry: rank of R^1 pi_* and four-point class degrees.

In genus zero with all labels Neveu-Schwarz, the root bundle has negative
degree on every fibre, so pi_* vanishes and R^1 pi_* is a vector bundle of
rank D.  For four points D = 1 and the correlator is the degree of
``-c_1(R^1 pi_*) = ch_1(R pi_*)`` on the four-pointed moduli space, computed
from the Grothendieck-Riemann-Roch expansion

    ch_1 = B_2(1/r)/2 kappa_1 - sum_i B_2((m_i+1)/r)/2 psi_i
           + w * sum_{nodes} B_2(q/r)/2 [boundary point],

where ``q = m_node + 1 (mod r)`` is the twist on either branch of the node and
``B_2(x) = x^2 - x + 1/6`` is symmetric under ``x -> 1 - x``.  The stack
degree 1/r of the spin moduli over the coarse space cancels the CohFT factor
r^{1-g} = r.  The boundary weight ``w`` is frozen to ``BOUNDARY_WEIGHT``; see
:func:`calibrate_boundary_weight`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Sequence, Tuple

from .errors import DomainError, NotConcaveError
from .graphs import bundle_degree, virtual_dim
from .state_space import check_r

# every psi, kappa_1 and boundary point of the four-pointed genus-0 space has degree 1
PSI_DEGREE = 1
KAPPA1_DEGREE = 1
BOUNDARY_POINT_DEGREE = 1

BOUNDARY_WEIGHT = Fraction(1)

CHANNELS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def bernoulli2(x: Fraction) -> Fraction:
    return x * x - x + Fraction(1, 6)


@dataclass(frozen=True)
class ConcaveData:
    r: int
    m_list: Tuple[int, ...]
    bundle_degree: Fraction
    rank_r1: int


def _labels(r: int, m_list: Sequence[int]) -> Tuple[int, ...]:
    check_r(r)
    out = []
    for m in m_list:
        if not -1 <= m <= r - 1:
            raise DomainError("label %r outside -1..%d" % (m, r - 1))
        out.append(r - 1 if m == -1 else m)
    return tuple(out)


def concave_data(r: int, m_list: Sequence[int]) -> Optional[ConcaveData]:
    """Bundle data on a genus-0 corolla; ``None`` when a Ramond label forces the class to vanish."""
    m = _labels(r, m_list)
    if any(x == r - 1 for x in m):
        return None
    if len(m) < 3:
        raise NotConcaveError("a genus-0 corolla needs at least 3 points")
    deg = bundle_degree(r, 0, m, "canonical")
    if deg.denominator != 1:
        raise NotConcaveError("selection rule fails: bundle degree %s is not an integer" % deg)
    if deg >= 0:
        raise NotConcaveError("bundle degree %s is not negative" % deg)
    return ConcaveData(r, m, deg, int(-deg - 1))


def r1_rank(r: int, m_list: Sequence[int]) -> Optional[int]:
    """Rank of R^1 pi_* by genus-0 Riemann-Roch (h^0 = 0, h^1 = -deg - 1).

    Returns ``None`` for Ramond input: the virtual class is zero there and no
    rank is attached to it.
    """
    data = concave_data(r, m_list)
    return None if data is None else data.rank_r1


def node_label(r: int, side: Sequence[int]) -> int:
    """Label on the branch of a node facing the two given genus-0 points."""
    return (r - 2 - sum(side)) % r


def _gri_terms(r: int, m: Tuple[int, ...]) -> Tuple[Fraction, Fraction]:
    """(smooth part, boundary sum) of the four-point expansion."""
    smooth = bernoulli2(Fraction(1, r)) / 2 * KAPPA1_DEGREE
    for x in m:
        smooth -= bernoulli2(Fraction(x + 1, r)) / 2 * PSI_DEGREE
    boundary = Fraction(0)
    for (i, j), _ in CHANNELS:
        q = (node_label(r, (m[i], m[j])) + 1) % r
        boundary += bernoulli2(Fraction(q, r)) / 2 * BOUNDARY_POINT_DEGREE
    return smooth, boundary


def _four_point_labels(r: int, m_list: Sequence[int]) -> Optional[Tuple[int, ...]]:
    m = _labels(r, m_list)
    if len(m) != 4:
        raise DomainError("need exactly four labels, got %d" % len(m))
    if any(x == r - 1 for x in m):
        return None
    D = virtual_dim(r, 0, 1, m).D
    if D != 1:
        raise DomainError("not a four-point top-degree case: D = %s" % D)
    return m


def four_point_class_degree(r: int, m_list: Sequence[int], boundary_weight: Fraction = BOUNDARY_WEIGHT) -> Fraction:
    m = _four_point_labels(r, m_list)
    if m is None:
        return Fraction(0)
    smooth, boundary = _gri_terms(r, m)
    return smooth + boundary_weight * boundary


def calibrate_boundary_weight(r: int, m_list: Sequence[int], target: Fraction) -> Fraction:
    """Solve for the boundary weight that reproduces ``target`` at one input."""
    m = _four_point_labels(r, m_list)
    if m is None:
        raise DomainError("Ramond input carries no calibration information")
    smooth, boundary = _gri_terms(r, m)
    if not boundary:
        raise DomainError("boundary terms vanish at this input")
    return (Fraction(target) - smooth) / boundary


def admissible_four_tuples(r: int):
    """Sorted 4-tuples of Neveu-Schwarz labels with sum 2r - 2."""
    check_r(r)
    for m in combinations_with_replacement(range(r - 1), 4):
        if sum(m) == 2 * r - 2:
            yield m
