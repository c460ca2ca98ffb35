"""Laurent series in x expanded at infinity, with polynomial coefficients.

A series stores exact coefficients for exponents ``>= lo`` and finitely many
exponents above.  ``lo = None`` marks a finite (exact) series.  Arithmetic
shrinks the window conservatively, and reading below ``lo`` raises
:class:`InsufficientWindowError` instead of silently returning zero.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional

from .errors import InsufficientWindowError
from .polynomial import Poly, Scalar


def binomial(alpha: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= (alpha - i) / (i + 1)
    return out


class LaurentSeries:
    __slots__ = ("nvars", "coeffs", "lo")

    def __init__(self, nvars: int, coeffs: Dict[int, Poly], lo: Optional[int] = None):
        self.nvars = nvars
        self.coeffs = {e: c for e, c in coeffs.items() if c and (lo is None or e >= lo)}
        self.lo = lo

    @classmethod
    def monomial(cls, nvars: int, exponent: int, coeff: Poly | Scalar = 1) -> "LaurentSeries":
        if not isinstance(coeff, Poly):
            coeff = Poly.const(nvars, coeff)
        return cls(nvars, {exponent: coeff})

    @property
    def top(self) -> Optional[int]:
        return max(self.coeffs, default=None)

    def coefficient(self, e: int) -> Poly:
        if self.lo is not None and e < self.lo:
            raise InsufficientWindowError(
                "coefficient of x^%d requested but the series is only known down to x^%d" % (e, self.lo)
            )
        return self.coeffs.get(e, Poly.zero(self.nvars))

    def truncated(self, lo: int) -> "LaurentSeries":
        if self.lo is not None and lo < self.lo:
            raise InsufficientWindowError("cannot widen window from %d to %d" % (self.lo, lo))
        return LaurentSeries(self.nvars, self.coeffs, lo)

    def shift(self, k: int) -> "LaurentSeries":
        lo = None if self.lo is None else self.lo + k
        return LaurentSeries(self.nvars, {e + k: c for e, c in self.coeffs.items()}, lo)

    def scale(self, c: Scalar) -> "LaurentSeries":
        return LaurentSeries(self.nvars, {e: p.scale(c) for e, p in self.coeffs.items()}, self.lo)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        los = [x for x in (self.lo, other.lo) if x is not None]
        lo = max(los) if los else None
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return LaurentSeries(self.nvars, out, lo)

    def _product_lo(self, other: "LaurentSeries") -> Optional[int]:
        bounds = []
        if self.lo is not None:
            bounds.append(self.lo + (other.top if other.top is not None else self.lo))
        if other.lo is not None:
            bounds.append(other.lo + (self.top if self.top is not None else other.lo))
        return max(bounds) if bounds else None

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        lo = self._product_lo(other)
        out: Dict[int, Poly] = {}
        for e, c in self.coeffs.items():
            for f, d in other.coeffs.items():
                k = e + f
                if lo is not None and k < lo:
                    continue
                prod = c * d
                out[k] = out[k] + prod if k in out else prod
        return LaurentSeries(self.nvars, out, lo)

    def binomial_power(self, alpha: Fraction, lo: int) -> "LaurentSeries":
        """``(1 + self)**alpha`` known down to ``x**lo``; ``self`` must be O(x^-1)."""
        if self.top is not None and self.top >= 0:
            raise ValueError("binomial expansion needs a series with only negative exponents")
        one = LaurentSeries.monomial(self.nvars, 0, 1)
        if self.top is None:
            return one.truncated(lo)
        step = -self.top
        base = self.truncated(lo) if self.lo is None or self.lo <= lo else self
        result = one.truncated(lo)
        power = one.truncated(lo)
        k = 0
        while True:
            k += 1
            if -k * step < lo:
                break
            power = power * base
            power = power.truncated(max(lo, power.lo))
            coeff = binomial(Fraction(alpha), k)
            if coeff:
                result = result + power.scale(coeff)
        return result.truncated(lo)
