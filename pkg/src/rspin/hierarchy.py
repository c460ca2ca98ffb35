"""Dispersionless (genus-zero) checks of the Gelfand-Dickey hierarchy.

Times ``t^{m,a}`` are the variables of a :class:`Poly`; ``t^{m,a}`` sits at
position ``a*(r-1) + m``.  The space direction is ``x = t^{0,0}``.

Every series is exact up to a known total degree, and every residual is
compared only up to the degree where both sides are exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial
from typing import Dict, List, Optional, Tuple

from .correlators import theory
from .errors import DomainError, ScaleLimitError
from .frobenius import prepotential
from .polynomial import Poly, integrate_from_second_derivatives
from .state_space import check_r

MAX_ORDER = 8
MAX_DESCENDANT = 3


@dataclass(frozen=True)
class DescendantSeries:
    r: int
    N: int
    A: int
    poly: Poly

    @property
    def nvars(self) -> int:
        return (self.r - 1) * (self.A + 1)

    def index(self, m: int, a: int) -> int:
        if not (0 <= m <= self.r - 2 and 0 <= a <= self.A):
            raise DomainError("no time t^{%d,%d} in this series" % (m, a))
        return a * (self.r - 1) + m

    def var(self, m: int, a: int) -> Poly:
        return Poly.var(self.nvars, self.index(m, a))

    def d(self, *times: Tuple[int, int]) -> Poly:
        p = self.poly
        for m, a in times:
            p = p.diff(self.index(m, a))
        return p

    def names(self) -> List[str]:
        return ["t%d_%d" % (i % (self.r - 1), i // (self.r - 1)) for i in range(self.nvars)]


def build_series(r: int, N: int, A: int = MAX_DESCENDANT) -> DescendantSeries:
    """F_0 truncated at total degree N in the times t^{m,a}, a <= A."""
    check_r(r)
    if N > MAX_ORDER or A > MAX_DESCENDANT:
        raise ScaleLimitError("series bounds are limited to N <= %d, A <= %d" % (MAX_ORDER, MAX_DESCENDANT))
    if N < 0 or A < 0:
        raise DomainError("series bounds must be non-negative")
    return _build(r, N, A)


@lru_cache(maxsize=None)
def _build(r: int, N: int, A: int) -> DescendantSeries:
    T = theory(r)
    nvars = (r - 1) * (A + 1)
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for n in range(3, N + 1):
        for key in T.keys(n, max_total_a=A * n):
            if any(a > A for a, _ in key):
                continue
            value = T.descendant(key)
            if not value:
                continue
            e = [0] * nvars
            for a, m in key:
                e[a * (r - 1) + m] += 1
            denom = 1
            for k in e:
                denom *= factorial(k)
            terms[tuple(e)] = value / denom
    return DescendantSeries(r, N, A, Poly(nvars, terms))


# ---------------------------------------------------------------------------
# r = 2


def dkdv_residual(N: int, u: Optional[Poly] = None, A: int = MAX_DESCENDANT) -> Poly:
    """u_{t^{0,1}} - u u_x for u = d^2 F_0 / dx^2, truncated at degree N - 3."""
    F = build_series(2, N, max(A, 1))
    if u is None:
        u = F.d((0, 0), (0, 0))
    x, t1 = F.index(0, 0), F.index(0, 1)
    residual = u.diff(t1) - u.mul_truncated(u.diff(x), N - 3)
    return residual.truncate(N - 3)


# ---------------------------------------------------------------------------
# principal hierarchy


def _structure_constants(r: int) -> Dict[Tuple[int, int, int], Poly]:
    """c_{ab}^e(t) = d_a d_b d_{r-2-e} F."""
    F = prepotential(r)
    n = r - 1
    out = {}
    for a, b in combinations_with_replacement(range(n), 2):
        for e in range(n):
            out[a, b, e] = F.derivative((a, b, r - 2 - e))
    return out


@lru_cache(maxsize=None)
def theta(r: int, mu: int, a: int) -> Poly:
    """Hamiltonian density theta_{mu,a} on the small phase space.

    theta_{mu,0} = t_{r-2-mu};  d_alpha d_beta theta_{mu,a} = c_{alpha beta}^e d_e theta_{mu,a-1}.
    For a >= 1 the density has no terms of degree < 2 (weight count), which
    fixes the integration constants to zero.
    """
    check_r(r)
    n = r - 1
    if not 0 <= mu <= r - 2 or a < 0:
        raise DomainError("no density theta_{%d,%d}" % (mu, a))
    if a == 0:
        return Poly.var(n, r - 2 - mu)
    prev = theta(r, mu, a - 1)
    grads = [prev.diff(e) for e in range(n)]
    c = _structure_constants(r)
    second = {}
    for al, be in combinations_with_replacement(range(n), 2):
        total = Poly.zero(n)
        for e in range(n):
            total = total + c[al, be, e] * grads[e]
        second[al, be] = total
    return integrate_from_second_derivatives(n, second)


@dataclass
class HydroReport:
    r: int
    N: int
    residuals: Dict[str, Poly] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(p.is_zero() for p in self.residuals.values())

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> List[Tuple[str, Poly]]:
        return [(k, p) for k, p in sorted(self.residuals.items()) if not p.is_zero()]


def _fields(F: DescendantSeries) -> List[Poly]:
    """v_alpha = d^2 F_0 / dx dt^{alpha,0}."""
    return [F.d((0, 0), (al, 0)) for al in range(F.r - 1)]


def _compose(r: int, p: Poly, v: List[Poly], max_degree: int) -> Poly:
    """p(t) with t_beta replaced by v_{r-2-beta}."""
    return p.substitute([v[r - 2 - b] for b in range(r - 1)], max_degree)


def hydrodynamic_report(
    r: int, N: int, A: Optional[int] = None, series: Optional[DescendantSeries] = None, flows: bool = True
) -> HydroReport:
    """All genus-zero principal-hierarchy residuals of F_0 up to truncation.

    * ``two-point``: d^2F/dx dt^{mu,a} - theta_{mu,a}(v), on the big phase space
      (exact to degree N-2) and restricted to primary times;
    * ``flow``: dv_alpha/dt^{mu,a} - d_x[(d_alpha theta_{mu,a+1})(v)], exact to N-3;
    * ``commute``: mixed derivatives of two flows, exact to N-4.
    """
    check_r(r)
    if A is None:
        A = min(MAX_DESCENDANT, max(1, N - 3))
    F = series if series is not None else build_series(r, N, A)
    report = HydroReport(r, N)
    n = r - 1
    v = _fields(F)
    primary = [F.index(m, 0) for m in range(n)]

    def restrict(p: Poly) -> Poly:
        keep = set(primary)
        return p.filter(lambda e: all(k == 0 or i in keep for i, k in enumerate(e)))

    for mu in range(n):
        for a in range(F.A + 1):
            lhs = F.d((0, 0), (mu, a))
            rhs = _compose(r, theta(r, mu, a), v, N - 2)
            report.residuals["two-point %d,%d" % (mu, a)] = (lhs - rhs).truncate(N - 2)
            report.residuals["two-point primary %d,%d" % (mu, a)] = restrict(lhs - rhs).truncate(N - 2)
    if not flows:
        return report

    x = F.index(0, 0)
    rhs_flow: Dict[Tuple[int, int, int], Poly] = {}
    for mu in range(n):
        for a in range(F.A):
            th = theta(r, mu, a + 1)
            for al in range(n):
                density = _compose(r, th.diff(al), v, N - 2)
                rhs_flow[al, mu, a] = density.diff(x)
                lhs = v[al].diff(F.index(mu, a))
                report.residuals["flow %d by %d,%d" % (al, mu, a)] = (lhs - rhs_flow[al, mu, a]).truncate(N - 3)
    flow_keys = sorted({(mu, a) for _, mu, a in rhs_flow})
    for i, (mu, a) in enumerate(flow_keys):
        for nu, b in flow_keys[i + 1:]:
            for al in range(n):
                left = rhs_flow[al, mu, a].diff(F.index(nu, b))
                right = rhs_flow[al, nu, b].diff(F.index(mu, a))
                report.residuals["commute %d: %d,%d x %d,%d" % (al, mu, a, nu, b)] = (left - right).truncate(N - 4)
    return report


def hydrodynamic_consistency(r: int, N: int, A: Optional[int] = None) -> bool:
    if r > 4:
        raise ScaleLimitError("hydrodynamic check is limited to r <= 4")
    return hydrodynamic_report(r, N, A).ok


def perturbed_series(F: DescendantSeries, exponent: Tuple[int, ...], delta: Fraction = Fraction(1)) -> DescendantSeries:
    """Negative-control helper: add ``delta`` times one monomial to F_0."""
    return DescendantSeries(F.r, F.N, F.A, F.poly + Poly.monomial(exponent, delta))
