"""Desk-scale checks of the r-spin axioms, run through their correlator-level consequences.

Stack-level statements (pullbacks to boundary strata, pushforwards with their
degree factors) are not modelled; every check below tests an exact identity
between numbers or polynomials that those statements imply.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import factorial, gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import graphs as ga
from .correlators import Genus0Theory, theory
from .errors import DomainError, NotConcaveError, ScaleLimitError
from .euler_class import admissible_four_tuples, four_point_class_degree, r1_rank
from .frobenius import Prepotential, eta, prepotential, three_point_functions, wdvv_defects
from .hierarchy import dkdv_residual, hydrodynamic_report
from .state_space import check_r


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    counterexample: Optional[str] = None

    def __bool__(self) -> bool:
        return self.passed

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "result": self.status,
            "cases": self.cases,
            "counterexample": self.counterexample or "",
        }


def _run(name: str, cases: Iterable[Tuple[str, bool]]) -> CheckResult:
    """Stop at the first failing case and report it as the counterexample."""
    count = 0
    for label, ok in cases:
        count += 1
        if not ok:
            return CheckResult(name, False, count, label)
    return CheckResult(name, True, count)


# ---------------------------------------------------------------------------
# Axiom 1a: edge factors


def check_axiom1_factors(r: int, graph: ga.DecoratedGraph) -> CheckResult:
    def cases():
        product_factor = 1
        expected = 1
        for h1, h2 in graph.edges:
            mp, mm = graph.decoration[h1], graph.decoration[h2]
            l_e = gcd(mp + 1, r)
            f = ga.edge_factor(r, mp)
            yield "edge %r: subgroup order" % ((h1, h2),), ga.subgroup_order(r, mp + 1) == f == r // l_e
            yield "edge %r: halves disagree" % ((h1, h2),), ga.edge_factor(r, mm) == f
            product_factor *= f
            expected *= r // l_e
        yield "product over edges", product_factor == expected

    return _run("axiom1a edge factors", cases())


def check_axiom1_graphs(r: int, g: int = 1, n: int = 3) -> CheckResult:
    def cases():
        for m in range(r):
            mm = (r - 2 - m) % r
            yield "edge_factor(%d,%d) != edge_factor(%d,%d)" % (r, m, r, mm), ga.edge_factor(r, m) == ga.edge_factor(r, mm)
        for gg in range(g + 1):
            for nn in range(n + 1):
                if 2 * gg - 2 + nn <= 0:
                    continue
                for G in ga.enumerate_graphs(r, gg, nn, nonempty=True):
                    res = check_axiom1_factors(r, G)
                    yield G.dumps() + ": " + (res.counterexample or ""), res.passed

    return _run("axiom1a edge factors on graphs", cases())


# ---------------------------------------------------------------------------
# Axiom 3: splitting, genus-zero shadow


def check_axiom3_splitting(r: int, F: Optional[Prepotential] = None) -> CheckResult:
    """Channel independence of the contraction F_abe eta^ef F_fcd (WDVV)."""
    F = F if F is not None else prepotential(r)

    def cases():
        for a, b, c, d, diff in wdvv_defects(F):
            yield "WDVV fails at (%d,%d,%d,%d): %s" % (a, b, c, d, diff.to_string()), False
        for m in admissible_four_tuples(r):
            values = []
            for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
                total = Fraction(0)
                for e in range(r - 1):
                    left = F.derivative((m[i], m[j], e)).constant_term()
                    right = F.derivative((r - 2 - e, m[k], m[l])).constant_term()
                    total += left * right
                values.append(total)
            yield "channels differ at m=%r: %s" % (m, values), len(set(values)) == 1
        yield "polynomial identity", True

    return _run("axiom3 splitting (WDVV)", cases())


# ---------------------------------------------------------------------------
# Axiom 4: Ramond vanishing


def _ramond_keys(T: Genus0Theory, max_n: int):
    r = T.r
    for n in range(3, max_n + 1):
        for ms in combinations_with_replacement(range(r), n):
            if r - 1 not in ms:
                continue
            rem = (n - 3) * r + r - 2 - sum(ms)
            if rem >= 0 and rem % r == 0:
                total = rem // r
                for a_list in product(range(total + 1), repeat=n):
                    if sum(a_list) == total:
                        yield tuple(zip(a_list, ms))
            else:
                yield tuple((0, m) for m in ms)


def check_axiom4_ramond(r: int, max_n: int = 5) -> CheckResult:
    T = theory(r)

    def cases():
        for key in _ramond_keys(T, max_n):
            ms = [m for _, m in key]
            if all(a == 0 for a, _ in key):
                yield "primary %r" % (ms,), T.primary(ms) == 0
                yield "primary with m=-1 %r" % (ms,), T.primary([-1 if m == r - 1 else m for m in ms]) == 0
            yield "descendant %r" % (key,), T.descendant(key) == 0
            if len(ms) == 4:
                yield "euler four-point %r" % (ms,), _euler_zero(r, ms)
                yield "rank flag %r" % (ms,), r1_rank(r, ms) is None

    return _run("axiom4 Ramond vanishing", cases())


def _euler_zero(r: int, ms: Sequence[int]) -> bool:
    try:
        return four_point_class_degree(r, ms) == 0
    except DomainError:
        # Ramond input must short-circuit before the dimension test
        return False


# ---------------------------------------------------------------------------
# Axiom 5: forgetting m = 0 tails


def check_axiom5_forget(r: int, max_n: int = 6, max_total_a: int = 3) -> CheckResult:
    T = theory(r)

    def cases():
        for n in range(4, max_n + 1):
            for ms in combinations_with_replacement(range(r - 1), n - 1):
                yield "primary <x0 %r>" % (ms,), T.primary((0,) + ms) == 0
        for n in range(3, max_n + 1):
            for key in T.keys(n, max_total_a):
                if (0, 0) in key:
                    yield "string %r" % (key,), T.string_check(key)
                if (1, 0) in key:
                    yield "dilaton %r" % (key,), T.dilaton_check(key)
        for key, _ in T.table.items():
            if (0, 0) in key:
                yield "string (cached) %r" % (key,), T.string_check(key)
            if (1, 0) in key:
                yield "dilaton (cached) %r" % (key,), T.dilaton_check(key)
        for a in range(r - 1):
            yield "base case <tau0(x0) x%d x%d>" % (a, r - 2 - a), T.descendant([(0, 0), (0, a), (0, r - 2 - a)]) == 1
        for m in range(r):
            G = ga.DecoratedGraph.corolla(r, 0, (m, 0, 0))
            yield "forget/add tail %s" % G.dumps(), ga.forget_tail(ga.add_tail(G, 0), G.n) == G

    return _run("axiom5 forgetting tails", cases())


# ---------------------------------------------------------------------------
# normalization and Casimir


def check_normalization(r: int) -> CheckResult:
    T = theory(r)
    c = three_point_functions(r)

    def cases():
        stack_degree = Fraction(1, r)
        cohft_factor = r  # r^(1-g) at g = 0
        for a, b, cc in combinations_with_replacement(range(r - 1), 3):
            expected = stack_degree * cohft_factor * int(a + b + cc == r - 2)
            yield "<x%d x%d x%d>" % (a, b, cc), T.primary([a, b, cc]) == expected
        for mu in range(r - 1):
            yield "Casimir mu=%d" % mu, T.primary([mu, r - 2 - mu, 0]) == eta(r, mu, r - 2 - mu)
        for a, b in combinations_with_replacement(range(r - 1), 2):
            yield "c_%d%d0 constant" % (a, b), c[0, a, b] == eta(r, a, b)

    return _run("normalization", cases())


# ---------------------------------------------------------------------------
# symmetric group invariance


def key_pool(r: int, max_n: int = 6, max_total_a: int = 3) -> List[tuple]:
    """Sorted nonvanishing genus-zero keys with at most `max_n` insertions."""
    T = theory(r)
    return sorted({k for n in range(3, max_n + 1) for k in T.keys(n, max_total_a)})


def _orderings(key: tuple) -> int:
    count = factorial(len(key))
    for c in Counter(key).values():
        count //= factorial(c)
    return count


def sn_observations(r: int, samples: int = 100, seed: int = 0, max_draws: int = 10000) -> Dict[tuple, Fraction]:
    """Values of `samples` distinct randomly ordered insertion lists.

    Each list is evaluated with recursion choices that depend on position, so a
    permutation changes the computation path but must not change the value.
    """
    rng = random.Random(seed)
    T = theory(r)
    pool = key_pool(r)
    if sum(_orderings(k) for k in pool) < samples:
        # small theories (r = 2) need longer keys to supply enough orderings
        pool = key_pool(r, max_n=8, max_total_a=5)
    table: Dict[tuple, Fraction] = {}
    for _ in range(max_draws):
        if len(table) >= samples:
            break
        order = list(rng.choice(pool))
        rng.shuffle(order)
        key = tuple(order)
        if key not in table:
            table[key] = T.evaluate_ordered(order)
    return table


def check_sn_invariance(r: int, table: Optional[Mapping[tuple, Fraction]] = None, samples: int = 100, seed: int = 0) -> CheckResult:
    if table is None:
        table = sn_observations(r, samples, seed)
    T = theory(r)

    def cases():
        by_class: Dict[tuple, Tuple[tuple, Fraction]] = {}
        for ordered, value in sorted(table.items()):
            canon = tuple(sorted(ordered))
            if canon in by_class:
                first, ref = by_class[canon]
                yield "%r = %s but %r = %s" % (first, ref, ordered, value), value == ref
            else:
                by_class[canon] = (ordered, value)
                yield "%r differs from sorted evaluation" % (ordered,), value == T.descendant(canon)

    return _run("S_n invariance", cases())


# ---------------------------------------------------------------------------
# other properties


def check_dimension_vanishing(r: int, max_n: int = 5, max_a: int = 2) -> CheckResult:
    T = theory(r)

    def cases():
        for n in range(3, max_n + 1):
            for ms in combinations_with_replacement(range(r - 1), n):
                for a_list in product(range(max_a + 1), repeat=n):
                    key = tuple(zip(a_list, ms))
                    if not T.dimension_ok(key):
                        yield "nonzero off-dimension %r" % (key,), T.descendant(key) == 0

    return _run("dimension vanishing", cases())


def check_selection_equivalence(r: int, cases_count: int = 300, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)

    def cases():
        for _ in range(cases_count):
            g = rng.randint(0, 3)
            n = rng.randint(0, 6)
            ks = [rng.randrange(r) for _ in range(n)]
            ms = [(k - 1) % r for k in ks]
            sel = ga.selection_nonempty(r, g, ks)
            log_k = ga.bundle_degree(r, g, ks, "log").denominator == 1
            canon_m = ga.bundle_degree(r, g, ms, "canonical").denominator == 1
            yield "g=%d k=%r" % (g, ks), sel == log_k == canon_m

    return _run("selection rule equivalence", cases())


def check_rank_consistency(r: int, max_n: int = 6) -> CheckResult:
    def cases():
        for n in range(3, max_n + 1):
            for ms in combinations_with_replacement(range(r - 1), n):
                try:
                    rank = r1_rank(r, ms)
                except NotConcaveError:
                    continue
                yield "rank %r" % (ms,), rank == ga.virtual_dim(r, 0, 1, ms).D

    return _run("R^1 rank = D", cases())


def check_dual_engine(r: int) -> CheckResult:
    F = prepotential(r)

    def cases():
        for m in admissible_four_tuples(r):
            for p in set(permutations(m)):
                yield "m=%r" % (p,), four_point_class_degree(r, p) == F.correlator(p)
        yield "no admissible tuple", True

    return _run("four-point dual engine", cases())


def check_graph_algebra(r: int, g: int = 1, n: int = 4) -> CheckResult:
    def cases():
        for gg in range(g + 1):
            for nn in range(n + 1):
                if 2 * gg - 2 + nn <= 0:
                    continue
                for G in ga.enumerate_graphs(r, gg, nn, nonempty=True):
                    problems = ga.validate(G)
                    yield "invalid %s: %s" % (G.dumps(), problems), not problems
                    yield "degree additivity %s" % G.dumps(), ga.degree_defect(G) == 0
                    k = G.n
                    for e in range(len(G.edges)):
                        cut = ga.cut_edge(G, e)
                        yield "cut invalid %s" % G.dumps(), not ga.validate(cut)
                        glued = ga.glue_tails(cut, k, k + 1)
                        yield "cut/glue %s edge %d" % (G.dumps(), e), ga.canonical_key(glued) == ga.canonical_key(G)

    return _run("graph cut/glue", cases())


def check_kdv(order: int) -> CheckResult:
    residual = dkdv_residual(order)
    return CheckResult(
        "dKdV residual (r=2)", residual.is_zero(), 1, None if residual.is_zero() else residual.to_string()
    )


def check_hydro(r: int, order: int) -> CheckResult:
    report = hydrodynamic_report(r, order)
    bad = report.failures()
    return CheckResult(
        "principal hierarchy (r=%d)" % r,
        not bad,
        len(report.residuals),
        None if not bad else "%s: %s" % (bad[0][0], bad[0][1].to_string()),
    )


# ---------------------------------------------------------------------------
# suites

SUITES = ("axioms", "kdv", "hydro", "wdvv", "graphs", "fourpoint", "all")
HYDRO_MAX_R = 4


def run_suite(name: str, r: int, order: int = 6) -> List[CheckResult]:
    check_r(r)
    if name not in SUITES:
        raise DomainError("unknown suite %r" % (name,))
    if order > 8:
        raise ScaleLimitError("order is limited to 8")
    if order < 4:
        raise DomainError("order must be at least 4")
    out: List[CheckResult] = []
    if name in ("axioms", "all"):
        out.append(check_axiom1_graphs(r))
        out.append(check_axiom3_splitting(r))
        out.append(check_axiom4_ramond(r))
        out.append(check_axiom5_forget(r))
        out.append(check_normalization(r))
        out.append(check_sn_invariance(r))
        out.append(check_dimension_vanishing(r))
        out.append(check_rank_consistency(r))
    if name == "wdvv":
        out.append(check_axiom3_splitting(r))
    if name in ("fourpoint", "all"):
        out.append(check_dual_engine(r))
    if name in ("graphs", "all"):
        out.append(check_selection_equivalence(r))
        out.append(check_graph_algebra(r))
    if name in ("kdv", "all"):
        out.append(check_kdv(order))
    if name in ("hydro", "all"):
        if r > HYDRO_MAX_R:
            if name == "hydro":
                raise ScaleLimitError("hydrodynamic check is limited to r <= %d" % HYDRO_MAX_R)
        else:
            out.append(check_hydro(r, order))
    return out
