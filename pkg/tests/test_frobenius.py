from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest
import sympy as sp

from rspin import DomainError, Poly
from rspin.frobenius import (
    flat_coordinates,
    monomial_weight,
    prepotential,
    quantum_product,
    quasi_homogeneity_defects,
    residue_metric,
    three_point_functions,
    wdvv_defects,
)
from rspin.state_space import central_charge


def to_sympy(p: Poly, symbols):
    return sum(
        sp.Rational(c.numerator, c.denominator) * sp.Mul(*[s ** k for s, k in zip(symbols, e)]) for e, c in p.items()
    )


def sympy_flat_coordinates(r):
    """t_m(s) by a direct sympy expansion of W^{(r-1-m)/r} at infinity (x = 1/y)."""
    s = sp.symbols("s0:%d" % (r - 1))
    y = sp.Symbol("y")
    u = sum(s[j] * y ** (r - j) for j in range(r - 1))
    out = []
    for m in range(r - 1):
        alpha = sp.Rational(r - 1 - m, r)
        expansion = sp.series((1 + u) ** alpha, y, 0, r - m + 1).removeO()
        coeff = sp.expand(expansion).coeff(y, r - m)
        out.append(sp.expand(sp.Rational(r, r - 1 - m) * coeff))
    return s, out


def sympy_three_point(r):
    """Residue three-point functions in flat coordinates, computed independently with sympy."""
    s, t_of_s = sympy_flat_coordinates(r)
    t = sp.symbols("t0:%d" % (r - 1))
    # invert the triangular map by fixed-point iteration
    s_of_t = list(t)
    for _ in range(r):
        s_of_t = [sp.expand(t[m] - (t_of_s[m] - s[m]).subs(dict(zip(s, s_of_t)), simultaneous=True)) for m in range(r - 1)]
    x, y = sp.symbols("x y")
    W = x ** r + sum(s_of_t[j] * x ** j for j in range(r - 1))
    Wp = sp.diff(W, x)
    phi = [sp.diff(W, t[a]) for a in range(r - 1)]
    out = {}
    for a, b, c in combinations_with_replacement(range(r - 1), 3):
        f = (phi[a] * phi[b] * phi[c] / Wp).subs(x, 1 / y)
        ser = sp.series(sp.together(f), y, 0, 3 * (r - 2) + 3).removeO()
        out[a, b, c] = sp.expand(r * sp.expand(ser).coeff(y, 1))
    return t, out


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_flat_coordinates_match_sympy(r):
    s, oracle = sympy_flat_coordinates(r)
    flat = flat_coordinates(r)
    for m in range(r - 1):
        assert sp.expand(to_sympy(flat.t_of_s[m], s) - oracle[m]) == 0


def test_flat_coordinate_examples():
    assert flat_coordinates(2).t_of_s[0] == Poly.var(1, 0)
    # weights forbid any correction for r = 3
    assert list(flat_coordinates(3).t_of_s) == [Poly.var(2, 0), Poly.var(2, 1)]
    s2 = Poly.var(3, 2)
    assert flat_coordinates(4).t_of_s[0] == Poly.var(3, 0) - s2 * s2 / 8


@pytest.mark.parametrize("r", range(2, 7))
def test_jacobian_is_one(r):
    assert flat_coordinates(r).jacobian_determinant() == 1


@pytest.mark.parametrize("r", [3, 4])
def test_three_point_functions_match_sympy_with_orientation(r):
    t, oracle = sympy_three_point(r)
    F = prepotential(r)
    flip = {ti: -ti for ti in t}
    for (a, b, c), value in oracle.items():
        mine = to_sympy(F.derivative((a, b, c)), t)
        assert sp.expand(mine - value.subs(flip, simultaneous=True)) == 0


def test_prepotential_examples():
    t = [Poly.var(2, i) for i in range(2)]
    assert prepotential(2).poly == Poly.var(1, 0) ** 3 / 6
    assert prepotential(3).poly == t[0] * t[0] * t[1] / 2 + t[1] ** 4 / 72
    assert prepotential(3).correlator((1, 1, 1, 1)) == Fraction(1, 3)
    u = [Poly.var(3, i) for i in range(3)]
    expected4 = u[0] * u[1] ** 2 / 2 + u[0] ** 2 * u[2] / 2 + u[1] ** 2 * u[2] ** 2 / 16 + u[2] ** 5 / 960
    assert prepotential(4).poly == expected4


@pytest.mark.parametrize("r", range(2, 7))
def test_cubic_normalization_and_metric(r):
    F = prepotential(r)
    for a, b, c in product(range(r - 1), repeat=3):
        assert F.correlator((a, b, c)) == int(a + b + c == r - 2)
    for a, b in product(range(r - 1), repeat=2):
        assert F.derivative((0, a, b)) == int(a + b == r - 2)
    for (a, b), value in residue_metric(r).items():
        assert value == int(a + b == r - 2)
    assert F.poly.min_degree() >= 3


@pytest.mark.parametrize("r", range(2, 7))
def test_wdvv_and_quasi_homogeneity(r):
    F = prepotential(r)
    assert list(wdvv_defects(F)) == []
    assert list(quasi_homogeneity_defects(F)) == []
    for e, _ in F.poly.items():
        assert monomial_weight(r, e) == 3 - central_charge(r)


def test_wdvv_detects_a_perturbation():
    F = prepotential(4)
    bad = type(F)(4, F.poly + Poly.monomial((0, 2, 2), Fraction(1, 7)))
    assert list(wdvv_defects(bad))


@pytest.mark.parametrize("r", [3, 4, 5])
def test_quantum_product_is_associative_with_unit(r):
    F = prepotential(r)
    n = r - 1
    unit = quantum_product(F, 0, 1)
    assert unit == {c: int(c == 1) for c in range(n)}

    def mult(u, v):
        out = {c: Poly.zero(n) for c in range(n)}
        for a, ua in u.items():
            for b, vb in v.items():
                for c, k in quantum_product(F, a, b).items():
                    out[c] = out[c] + ua * vb * k
        return out

    basis = [{c: Poly.const(n, int(c == a)) for c in range(n)} for a in range(n)]
    for a, b, c in product(range(n), repeat=3):
        assert mult(mult(basis[a], basis[b]), basis[c]) == mult(basis[a], mult(basis[b], basis[c]))


def test_closed_form_four_points():
    # known closed form for top-degree NS four-point values: (1/r) min_i min(m_i, r-1-m_i)
    for r in range(3, 8):
        F = prepotential(r)
        for m in combinations_with_replacement(range(r - 1), 4):
            if sum(m) == 2 * r - 2:
                assert F.correlator(m) == Fraction(min(min(x, r - 1 - x) for x in m), r)


def test_engine_bounds():
    with pytest.raises(DomainError):
        prepotential(13)
    c = three_point_functions(3)
    assert c[1, 1, 1] == Poly.var(2, 1) / 3
