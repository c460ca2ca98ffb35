"""State spaces of the A_{r-1} singularity with group mu_r, and of r-spin theory.

Sectors are indexed by the exponent ``k`` of ``J = exp(2 pi i / r)``.  The
r-spin side uses labels ``m``; the dictionary between them is ``k = m + 1``
(mod r).  Narrow sectors ``k != 0`` correspond to Neveu-Schwarz labels
``0 <= m <= r - 2``; the broad sector ``k = 0`` corresponds to the Ramond
label ``m = r - 1`` (equivalently ``m = -1``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import BroadSectorError, DomainError


def check_r(r: int) -> int:
    if not isinstance(r, int) or isinstance(r, bool) or r < 2:
        raise DomainError("r must be an integer >= 2, got %r" % (r,))
    return r


def central_charge(r: int) -> Fraction:
    return Fraction(check_r(r) - 2, r)


@dataclass(frozen=True)
class Sector:
    r: int
    k: int

    def __post_init__(self):
        check_r(self.r)
        if not 0 <= self.k < self.r:
            raise DomainError("sector exponent k=%r outside 0..%d" % (self.k, self.r - 1))

    @property
    def theta(self) -> Fraction:
        return Fraction(self.k, self.r)

    @property
    def narrow(self) -> bool:
        return self.k != 0

    @property
    def fixed_dim(self) -> int:
        """Dimension of the fixed locus of J^k acting on C."""
        return 0 if self.narrow else 1


@dataclass(frozen=True)
class StateSpace:
    r: int
    basis: Tuple[Sector, ...]
    charge: Fraction
    central_charge: Fraction

    def pairing_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(pairing(self.r, a.k, b.k) for b in self.basis) for a in self.basis)


@lru_cache(maxsize=None)
def state_space(r: int) -> StateSpace:
    check_r(r)
    basis = tuple(Sector(r, k) for k in range(1, r))
    return StateSpace(r, basis, Fraction(1, r), central_charge(r))


class Kind(enum.Enum):
    NS = "NS"
    RAMOND = "R"


@dataclass(frozen=True)
class RSpinLabel:
    r: int
    m: int

    @property
    def kind(self) -> Kind:
        return Kind.RAMOND if self.m == self.r - 1 else Kind.NS

    @property
    def ramond(self) -> bool:
        return self.kind is Kind.RAMOND


def normalize_label(r: int, m: int) -> int:
    """Map an r-spin label in ``-1..r-1`` to the canonical range ``0..r-1``."""
    check_r(r)
    if not -1 <= m <= r - 1:
        raise DomainError("r-spin label m=%r outside -1..%d" % (m, r - 1))
    return r - 1 if m == -1 else m


def _narrow_k(r: int, k: int, name: str = "k") -> int:
    check_r(r)
    if k == 0:
        raise BroadSectorError("the broad sector J^0 has no invariant state")
    if not 1 <= k <= r - 1:
        raise DomainError("%s=%r outside 1..%d" % (name, k, r - 1))
    return k


def pairing(r: int, k: int, l: int) -> int:
    _narrow_k(r, k)
    _narrow_k(r, l, "l")
    return int((k + l) % r == 0)


def degree_shift(r: int, k: int) -> Fraction:
    """The degree-shifting number Theta - q of the sector J^k (weight q = 1/r)."""
    return Fraction(k, r) - Fraction(1, r)


def degree(r: int, k: int) -> Fraction:
    _narrow_k(r, k)
    sector = Sector(r, k)
    return Fraction(sector.fixed_dim, 2) + degree_shift(r, k)


def to_rspin(r: int, k: int) -> RSpinLabel:
    check_r(r)
    if not 0 <= k <= r - 1:
        raise DomainError("k=%r outside 0..%d" % (k, r - 1))
    return RSpinLabel(r, (k - 1) % r)


def from_rspin(r: int, m: int) -> Sector:
    m = normalize_label(r, m)
    return Sector(r, (m + 1) % r)


def rspin_pairing(r: int, mu: int, nu: int) -> int:
    check_r(r)
    for name, v in (("mu", mu), ("nu", nu)):
        if not 0 <= v <= r - 2:
            raise DomainError("%s=%r outside 0..%d" % (name, v, r - 2))
    return int(mu + nu == r - 2)


def rspin_degree(r: int, mu: int) -> Fraction:
    rspin_pairing(r, mu, r - 2 - mu)
    return Fraction(mu, r)
