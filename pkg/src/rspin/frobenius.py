"""Genus-zero Frobenius structure of A_{r-1} from Landau-Ginzburg residues.

The miniversal deformation ``W(x; s) = x^r + s_{r-2} x^{r-2} + ... + s_0`` is
expanded at ``x = infinity``.  Flat coordinates are

    t_m = r / (r - 1 - m) * [x^-1] W^{(r-1-m)/r},

which is triangular in ``s`` with unit diagonal.  The metric and the
three-point functions are residues,

    eta_ab = r [x^-1] (d_a W d_b W / W'),   c_abc = r [x^-1] (d_a W d_b W d_c W / W'),

and with the factor ``r`` both equal Kronecker deltas at the origin.  The
r-spin potential is the pullback of the residue structure along ``t -> -t``:
this automorphism keeps eta and the cubic term and multiplies every n-point
correlator by ``(-1)^(n-3)``, which is the ``(-1)^D`` of the concave Euler
class in the virtual-class axiom.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Dict, List, Tuple

from .errors import DomainError, IntegrabilityError
from .polynomial import Poly, integrate_from_third_derivatives
from .series import LaurentSeries
from .state_space import central_charge, check_r

MAX_R = 12


def _check(r: int) -> int:
    check_r(r)
    if r > MAX_R:
        raise DomainError("residue engine supports r <= %d" % MAX_R)
    return r


def weight(r: int, m: int) -> Fraction:
    """Quasi-homogeneous weight of t_m (and of s_m)."""
    return 1 - Fraction(m, r)


def monomial_weight(r: int, e) -> Fraction:
    return sum((weight(r, m) * k for m, k in enumerate(e)), Fraction(0))


def _eta_inverse(r: int, e: int) -> int:
    return r - 2 - e


@dataclass(frozen=True)
class FlatCoordinates:
    r: int
    t_of_s: Tuple[Poly, ...]
    s_of_t: Tuple[Poly, ...]

    def jacobian_determinant(self) -> Poly:
        """Determinant of dt/ds; triangular, so the product of the diagonal."""
        n = self.r - 1
        for i in range(n):
            for j in range(n):
                entry = self.t_of_s[i].diff(j)
                if i == j and entry != 1:
                    raise ArithmeticError("dt_%d/ds_%d = %s, not 1" % (i, i, entry))
                if j < i and entry:
                    raise ArithmeticError("flat coordinates not triangular at (%d,%d)" % (i, j))
        return Poly.const(n, 1)


def _deformation_tail(r: int, coeffs: List[Poly]) -> LaurentSeries:
    """The series u with W = x^r (1 + u), i.e. u = sum_j coeffs[j] x^(j - r)."""
    n = r - 1
    return LaurentSeries(n, {j - r: coeffs[j] for j in range(n)})


@lru_cache(maxsize=None)
def flat_coordinates(r: int) -> FlatCoordinates:
    _check(r)
    n = r - 1
    s = [Poly.var(n, j) for j in range(n)]
    u = _deformation_tail(r, s)
    t_of_s = []
    for m in range(n):
        alpha = Fraction(r - 1 - m, r)
        # x^(r-1-m) * (1+u)^alpha; the x^-1 coefficient sits at x^-(r-m) inside the bracket
        expansion = u.binomial_power(alpha, -(r - m))
        t_of_s.append(expansion.coefficient(-(r - m)).scale(Fraction(r, r - 1 - m)))
    # invert the triangular map: t_m = s_m + P_m(s_{m+1}, ...)
    t = [Poly.var(n, j) for j in range(n)]
    s_of_t: List[Poly] = [Poly.zero(n)] * n
    for m in reversed(range(n)):
        correction = t_of_s[m] - s[m]
        if correction.variables() - set(range(m + 1, n)):
            raise ArithmeticError("flat coordinate t_%d is not triangular" % m)
        s_of_t[m] = t[m] - correction.substitute(s_of_t)
    return FlatCoordinates(r, tuple(t_of_s), tuple(s_of_t))


def _residue_data(r: int):
    """Tangent vectors d_a W and the series x^(1-r)/(1+v) = r/W' in flat coordinates."""
    n = r - 1
    flat = flat_coordinates(r)
    # orientation: evaluate the residue structure at the point -t
    flip = [Poly.var(n, i).scale(-1) for i in range(n)]
    s_of_t = [p.substitute(flip) for p in flat.s_of_t]
    phis = []
    for a in range(n):
        phis.append(LaurentSeries(n, {j: flat.s_of_t[j].diff(a).substitute(flip) for j in range(n)}))
    v = LaurentSeries(n, {j - r: s_of_t[j].scale(Fraction(j, r)) for j in range(1, n)})
    lo = -2 * (r - 2)
    inv = v.binomial_power(Fraction(-1), min(lo, -1)).shift(1 - r)
    return phis, inv


@lru_cache(maxsize=None)
def three_point_functions(r: int) -> Dict[Tuple[int, int, int], Poly]:
    """c_abc(t) for sorted index triples a <= b <= c."""
    _check(r)
    n = r - 1
    phis, inv = _residue_data(r)
    pair = {}
    for a, b in combinations_with_replacement(range(n), 2):
        pair[a, b] = phis[a] * phis[b]
    out = {}
    for a, b, c in combinations_with_replacement(range(n), 3):
        integrand = pair[a, b] * phis[c] * inv
        out[a, b, c] = integrand.coefficient(-1)
    return out


@lru_cache(maxsize=None)
def residue_metric(r: int) -> Dict[Tuple[int, int], Poly]:
    _check(r)
    n = r - 1
    phis, inv = _residue_data(r)
    return {(a, b): (phis[a] * phis[b] * inv).coefficient(-1) for a, b in combinations_with_replacement(range(n), 2)}


def eta(r: int, a: int, b: int) -> int:
    return int(a + b == r - 2)


@dataclass(frozen=True)
class Prepotential:
    r: int
    poly: Poly

    @property
    def nvars(self) -> int:
        return self.r - 1

    def derivative(self, indices) -> Poly:
        p = self.poly
        for i in indices:
            p = p.diff(i)
        return p

    def correlator(self, m_list) -> Fraction:
        """n-th derivative at t = 0, i.e. the primary correlator <x_m1 ... x_mn>."""
        return self.derivative(m_list).constant_term()

    def to_json(self) -> list:
        rows = []
        for e, c in sorted(self.poly.items()):
            rows.append({"monomial": {str(m): k for m, k in enumerate(e) if k}, "coefficient": str(c)})
        return rows


@lru_cache(maxsize=None)
def prepotential(r: int) -> Prepotential:
    _check(r)
    n = r - 1
    c = three_point_functions(r)
    metric = residue_metric(r)
    for (a, b), value in metric.items():
        if value != eta(r, a, b):
            raise IntegrabilityError("residue pairing (%d,%d) = %s is not the flat metric" % (a, b, value))
    for (a, b, cc), value in c.items():
        if value.constant_term() != int(a + b + cc == r - 2):
            raise IntegrabilityError("three-point normalization fails at (%d,%d,%d)" % (a, b, cc))
    poly = integrate_from_third_derivatives(n, c)
    return Prepotential(r, poly)


def third_derivative(F: Prepotential, a: int, b: int, c: int) -> Poly:
    return F.derivative((a, b, c))


def wdvv_defects(F: Prepotential):
    """Yield (a, b, c, d, difference) wherever the s- and t-channel contractions differ."""
    r = F.r
    n = F.nvars
    third = {}
    for idx in combinations_with_replacement(range(n), 3):
        third[idx] = F.derivative(idx)

    def F3(a, b, c):
        return third[tuple(sorted((a, b, c)))]

    def channel(a, b, c, d):
        out = Poly.zero(n)
        for e in range(n):
            out = out + F3(a, b, e) * F3(_eta_inverse(r, e), c, d)
        return out

    for a, b, c, d in product(range(n), repeat=4):
        if not (a <= b and c <= d and (a, b) <= (c, d)):
            continue
        s = channel(a, b, c, d)
        for other in (channel(a, c, b, d), channel(a, d, b, c)):
            if s != other:
                yield (a, b, c, d, s - other)


def quasi_homogeneity_defects(F: Prepotential):
    target = 3 - central_charge(F.r)
    for e, c in F.poly.items():
        if monomial_weight(F.r, e) != target:
            yield e, c


def quantum_product(F: Prepotential, a: int, b: int) -> Dict[int, Poly]:
    """Structure constants of e_a * e_b = sum_c c_ab^c e_c."""
    r = F.r
    return {c: F.derivative((a, b, _eta_inverse(r, c))) for c in range(F.nvars)}
