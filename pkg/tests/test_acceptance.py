"""Acceptance criteria 1-9, one PASS/FAIL line each, all at exact equality.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines, or directly
as ``python3 tests/test_acceptance.py``.
"""
import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial, prod

import pytest

from rspin import Poly
from rspin import axioms as ax
from rspin import graphs as ga
from rspin.correlators import closed_form_r2, string_recursion_r2, theory
from rspin.euler_class import admissible_four_tuples, four_point_class_degree
from rspin.frobenius import Prepotential, prepotential, wdvv_defects
from rspin.hierarchy import build_series, dkdv_residual, hydrodynamic_consistency, hydrodynamic_report, perturbed_series
from rspin.state_space import degree, pairing, rspin_degree, rspin_pairing


def _report(number, title, bound, body):
    start = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < bound
    detail = "" if not failures else "  first failure: %s" % (failures[0],)
    print("%s criterion %d: %s (%.2fs, bound %ds)%s" % ("PASS" if ok else "FAIL", number, title, elapsed, bound, detail))
    return ok, failures, elapsed


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# 1 --------------------------------------------------------------------------


def criterion_1():
    bad = []
    for r in range(2, 10):
        for k, l in product(range(1, r), repeat=2):
            mu, nu = k - 1, l - 1
            if not (degree(r, k) == rspin_degree(r, mu) == Fraction(mu, r)):
                bad.append(("degree", r, k))
            if not (pairing(r, k, l) == rspin_pairing(r, mu, nu) == int((k + l) % r == 0) == int(mu + nu == r - 2)):
                bad.append(("pairing", r, k, l))
    return bad


# 2 --------------------------------------------------------------------------


def criterion_2():
    T = theory(2)
    bad = []
    for n in range(3, 9):
        for a in _compositions(n - 3, n):
            expected = Fraction(factorial(n - 3), prod(factorial(x) for x in a))
            if closed_form_r2(a) != expected or string_recursion_r2(a) != expected:
                bad.append(("closed form", a))
            if T.descendant([(x, 0) for x in a]) != expected:
                bad.append(("descendant", a))
    return bad


# 3 --------------------------------------------------------------------------


def criterion_3():
    bad = []
    for r in range(2, 7):
        F = prepotential(r)
        expected = [m for m in combinations_with_replacement(range(r - 1), 4) if sum(m) == 2 * r - 2]
        if sorted(admissible_four_tuples(r)) != expected:
            bad.append(("admissible set", r))
        for m in expected:
            # independent closed form for the top-degree NS four-point numbers
            oracle = Fraction(min(min(x, r - 1 - x) for x in m), r)
            if not (four_point_class_degree(r, m) == F.correlator(m) == oracle):
                bad.append((r, m))
    if not (four_point_class_degree(3, (1, 1, 1, 1)) == prepotential(3).correlator((1, 1, 1, 1)) == Fraction(1, 3)):
        bad.append("r=3 (1,1,1,1) is not 1/3")
    return bad


# 4 --------------------------------------------------------------------------


def criterion_4():
    bad = []
    for r in range(2, 7):
        bad.extend((r, d) for d in wdvv_defects(prepotential(r)))
    F = prepotential(4)
    control = Prepotential(4, F.poly + Poly.monomial((0, 2, 2), Fraction(1, 7)))
    if not list(wdvv_defects(control)):
        bad.append("perturbed potential passes WDVV")
    return bad


# 5 --------------------------------------------------------------------------


def criterion_5():
    bad = []
    for r in range(2, 5):
        sn = ax.check_sn_invariance(r, samples=100)
        if sn.cases != 100:
            bad.append(("S_n keys", r, sn.cases))
        for result in (
            ax.check_axiom4_ramond(r, max_n=5),
            sn,
            ax.check_dimension_vanishing(r),
            ax.check_normalization(r),
        ):
            if not result:
                bad.append((r, result.name, result.counterexample))
    # negative controls
    F = prepotential(4)
    broken = Prepotential(4, F.poly + Poly.monomial((0, 4, 0), Fraction(1, 5)))
    if ax.check_axiom3_splitting(4, broken):
        bad.append("perturbed potential passes the splitting check")
    table = ax.sn_observations(3, samples=100, seed=0)
    key = next(k for k, v in sorted(table.items()) if v)
    corrupt = dict(table)
    corrupt[key] += 1
    if ax.check_sn_invariance(3, corrupt):
        bad.append("corrupted table passes S_n invariance")
    return bad


# 6 --------------------------------------------------------------------------


def criterion_6():
    rng = random.Random(20261016)
    bad = []
    for _ in range(1200):
        r = rng.randint(2, 7)
        g = rng.randint(0, 3)
        n = rng.randint(0, 6)
        ks = [rng.randrange(r) for _ in range(n)]
        ms = [(k - 1) % r for k in ks]
        integral = (2 * g - 2 + n - sum(ks)) % r == 0
        sel = ga.selection_nonempty(r, g, ks)
        log_k = ga.bundle_degree(r, g, ks, "log").denominator == 1
        canon_m = ga.bundle_degree(r, g, ms, "canonical").denominator == 1
        if not (sel == integral == log_k == canon_m):
            bad.append((r, g, ks))
    return bad


# 7 --------------------------------------------------------------------------


def criterion_7():
    bad = []
    for r in range(2, 5):
        for m in range(r):
            if ga.edge_factor(r, m) != ga.edge_factor(r, ga.other_half(r, m)):
                bad.append(("edge factor", r, m))
    cut, glue = ga.cut_edge, ga.glue_tails
    graphs = edges = 0
    for r in range(2, 5):
        for g in range(2):
            for n in range(6):
                if 2 * g - 2 + n <= 0:
                    continue
                for G in ga.enumerate_graphs(r, g, n, nonempty=True):
                    graphs += 1
                    E = G.edges
                    for e in range(len(E)):
                        edges += 1
                        glued = glue(cut(G, e), n, n + 1)
                        # same labels, same tails and the same edge set imply the same canonical key
                        if not (
                            glued.decoration == G.decoration
                            and glued.tails == G.tails
                            and glued.edges == E[:e] + E[e + 1:] + (E[e],)
                        ):
                            bad.append((G.dumps(), e))
    if not graphs or not edges:
        bad.append("nothing enumerated")
    return bad


# 8 --------------------------------------------------------------------------


def criterion_8():
    bad = []
    if not dkdv_residual(6).is_zero():
        bad.append("dKdV residual is nonzero")
    if not hydrodynamic_consistency(3, 6):
        bad.append("r=3 hydrodynamic check fails")
    F2 = build_series(2, 6)
    if dkdv_residual(6, u=F2.d((0, 0), (0, 1))).is_zero():
        bad.append("dKdV negative control is zero")
    F3 = build_series(3, 6)
    e = [0] * F3.nvars
    for m, a in ((0, 0), (0, 0), (1, 1)):
        e[F3.index(m, a)] += 1
    if hydrodynamic_report(3, 6, series=perturbed_series(F3, tuple(e))).ok:
        bad.append("hydrodynamic negative control passes")
    return bad


# 9 --------------------------------------------------------------------------


def criterion_9():
    proc = subprocess.run(
        [sys.executable, "-m", "rspin", "check", "--suite", "all", "--r", "3", "--order", "6"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    bad = []
    if proc.returncode != 0:
        bad.append("exit code %d" % proc.returncode)
    if not proc.stdout.rstrip().splitlines()[-1].startswith("overall,PASS"):
        bad.append("no overall PASS row")
    return bad


CRITERIA = [
    (1, "state-space isometry, r=2..9", 1, criterion_1),
    (2, "r=2 genus-zero descendants, n<=8", 10, criterion_2),
    (3, "dual-engine four-point agreement, r<=6", 30, criterion_3),
    (4, "WDVV as a polynomial identity, r<=6", 60, criterion_4),
    (5, "axiom suite with negative controls, r<=4", 60, criterion_5),
    (6, "selection-rule equivalence, 1200 random cases", 5, criterion_6),
    (7, "cut-then-glue on every edge, edge-factor symmetry", 30, criterion_7),
    (8, "dKdV and hydrodynamic shadows to order 6", 60, criterion_8),
    (9, "check --suite all --r 3 exits 0", 300, criterion_9),
]


@pytest.mark.parametrize("number,title,bound,body", CRITERIA, ids=["criterion_%d" % c[0] for c in CRITERIA])
def test_criterion(number, title, bound, body, capsys):
    with capsys.disabled():
        ok, failures, elapsed = _report(number, title, bound, body)
    assert not failures, failures[:5]
    assert elapsed < bound


if __name__ == "__main__":
    results = [_report(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
