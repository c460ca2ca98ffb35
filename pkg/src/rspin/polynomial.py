"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in ``nvars`` variables is a mapping from exponent tuples to
nonzero :class:`~fractions.Fraction` coefficients.  Instances are treated as
immutable values; every operation returns a new polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import IntegrabilityError

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def frac_str(x: Scalar) -> str:
    """Render an exact rational as ``p/q`` (or ``p`` when integral)."""
    return str(Fraction(x))


def _add_exp(e: Exponent, f: Exponent) -> Exponent:
    return tuple(i + j for i, j in zip(e, f))


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None):
        self.nvars = nvars
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError("exponent %r has wrong length for %d variables" % (e, nvars))
                if c:
                    clean[tuple(e)] = Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "Poly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: Scalar) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = 1) -> "Poly":
        return cls(len(exps), {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(sorted(self.terms.items()))

    def items(self):
        return self.terms.items()

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def variables(self) -> set:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch: %d vs %d" % (self.nvars, other.nvars))
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul_truncated(other, None)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "Poly":
        return self.scale(Fraction(1) / Fraction(c))

    def mul_truncated(self, other: "Poly", max_degree: int | None) -> "Poly":
        """Product keeping only monomials of total degree <= ``max_degree``."""
        out: Dict[Exponent, Fraction] = {}
        other_items = list(other.terms.items())
        if max_degree is not None:
            other_items = [(f, d, sum(f)) for f, d in other_items]
        for e, c in self.terms.items():
            if max_degree is None:
                for f, d in other_items:
                    k = _add_exp(e, f)
                    out[k] = out.get(k, 0) + c * d
            else:
                room = max_degree - sum(e)
                if room < 0:
                    continue
                for f, d, deg in other_items:
                    if deg <= room:
                        k = _add_exp(e, f)
                        out[k] = out.get(k, 0) + c * d
        return Poly._raw(self.nvars, {k: v for k, v in out.items() if v})

    def __pow__(self, k: int) -> "Poly":
        return self.pow_truncated(k, None)

    def pow_truncated(self, k: int, max_degree: int | None) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result.mul_truncated(base, max_degree)
            k >>= 1
            if k:
                base = base.mul_truncated(base, max_degree)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus and structure ----------------------------------------
    def diff(self, i: int, times: int = 1) -> "Poly":
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < times:
                continue
            f = list(e)
            f[i] = k - times
            out[tuple(f)] = c * (factorial(k) // factorial(k - times))
        return Poly._raw(self.nvars, out)

    def truncate(self, max_degree: int) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def filter(self, keep: Callable[[Exponent], bool]) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if keep(e)})

    def homogeneous_part(self, d: int) -> "Poly":
        return self.filter(lambda e: sum(e) == d)

    def map_coefficients(self, fn: Callable[[Exponent, Fraction], Scalar]) -> "Poly":
        return Poly(self.nvars, {e: fn(e, c) for e, c in self.terms.items()})

    def substitute(self, values: Sequence["Poly"], max_degree: int | None = None) -> "Poly":
        """Compose: replace variable ``i`` by the polynomial ``values[i]``."""
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        target = values[0].nvars if values else 0
        powers: Dict[Tuple[int, int], Poly] = {}

        def power(i: int, k: int) -> Poly:
            key = (i, k)
            if key not in powers:
                if k == 0:
                    powers[key] = Poly.const(target, 1)
                else:
                    powers[key] = power(i, k - 1).mul_truncated(values[i], max_degree)
            return powers[key]

        out = Poly.zero(target)
        for e, c in self.terms.items():
            term = Poly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term.mul_truncated(power(i, k), max_degree)
            out = out + term
        return out

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def embed(self, nvars: int, positions: Sequence[int]) -> "Poly":
        """Re-express in ``nvars`` variables, sending variable ``i`` to ``positions[i]``."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * nvars
            for i, k in enumerate(e):
                f[positions[i]] += k
            out[tuple(f)] = c
        return Poly._raw(nvars, out)

    # -- presentation --------------------------------------------------
    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or ["t%d" % i for i in range(self.nvars)]
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = "*".join(
                names[i] if k == 1 else "%s^%d" % (names[i], k) for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(frac_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (frac_str(c), mono))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return "Poly(%d, %s)" % (self.nvars, self.to_string())


def integrate_from_third_derivatives(
    nvars: int, third: Mapping[Tuple[int, int, int], Poly]
) -> Poly:
    """Recover the unique polynomial with no terms of degree < 3 from its third derivatives.

    ``third[(a, b, c)]`` (for sorted ``a <= b <= c``) must be the derivative
    along ``t_a t_b t_c``.  Raises :class:`IntegrabilityError` if the data are
    not the derivatives of a single polynomial.
    """
    coeffs: Dict[Exponent, Fraction] = {}
    for (a, b, c), poly in third.items():
        bump = [0] * nvars
        for i in (a, b, c):
            bump[i] += 1
        for f, v in poly.terms.items():
            e = tuple(x + y for x, y in zip(f, bump))
            weight = 1
            for i in range(nvars):
                weight *= factorial(e[i]) // factorial(f[i])
            value = v / weight
            old = coeffs.setdefault(e, value)
            if old != value:
                raise IntegrabilityError(
                    "monomial %r gets %s from d(%d,%d,%d) but %s elsewhere" % (e, value, a, b, c, old)
                )
    result = Poly(nvars, coeffs)
    for (a, b, c), poly in third.items():
        if result.diff(a).diff(b).diff(c) != poly:
            raise IntegrabilityError("third derivative (%d,%d,%d) is not reproduced" % (a, b, c))
    return result


def integrate_from_second_derivatives(nvars: int, second: Mapping[Tuple[int, int], Poly]) -> Poly:
    """Recover the polynomial with no terms of degree < 2 from its Hessian entries (``a <= b``)."""
    coeffs: Dict[Exponent, Fraction] = {}
    for (a, b), poly in second.items():
        bump = [0] * nvars
        bump[a] += 1
        bump[b] += 1
        for f, v in poly.terms.items():
            e = tuple(x + y for x, y in zip(f, bump))
            weight = 1
            for i in range(nvars):
                weight *= factorial(e[i]) // factorial(f[i])
            value = v / weight
            old = coeffs.setdefault(e, value)
            if old != value:
                raise IntegrabilityError(
                    "monomial %r gets %s from d(%d,%d) but %s elsewhere" % (e, value, a, b, old)
                )
    result = Poly(nvars, coeffs)
    for (a, b), poly in second.items():
        if result.diff(a).diff(b) != poly:
            raise IntegrabilityError("second derivative (%d,%d) is not reproduced" % (a, b))
    return result


def poly_sum(nvars: int, polys: Iterable[Poly]) -> Poly:
    out: Dict[Exponent, Fraction] = {}
    for p in polys:
        for e, c in p.terms.items():
            out[e] = out.get(e, 0) + c
    return Poly._raw(nvars, {e: c for e, c in out.items() if c})
