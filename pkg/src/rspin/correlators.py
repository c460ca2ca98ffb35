"""Genus-zero primary and descendant correlators.

An insertion ``(a, m)`` stands for ``tau_a(x_m)``.  Descendants are reduced by
the string equation and genus-zero topological recursion down to primaries,
which are read off the residue prepotential.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import DomainError
from .frobenius import prepotential
from .state_space import central_charge, check_r

Insertion = Tuple[int, int]
Key = Tuple[Insertion, ...]


def parse_insertion(text: str) -> Insertion:
    """``"a:m"`` -> ``(a, m)``."""
    try:
        a, m = text.split(":")
        return int(a), int(m)
    except ValueError:
        raise DomainError("insertion %r is not of the form a:m" % (text,)) from None


class CorrelatorTable:
    """Write-once memo: a key, once stored, keeps its value forever."""

    def __init__(self):
        self._data: Dict[Key, Fraction] = {}
        self._lock = threading.Lock()

    def get(self, key: Key) -> Optional[Fraction]:
        return self._data.get(key)

    def put(self, key: Key, value: Fraction) -> Fraction:
        with self._lock:
            old = self._data.setdefault(key, value)
        if old != value:
            raise ArithmeticError("memo conflict at %r: %s vs %s" % (key, old, value))
        return old

    def __contains__(self, key: Key) -> bool:
        return key in self._data

    def __len__(self) -> int:
        return len(self._data)

    def items(self) -> List[Tuple[Key, Fraction]]:
        with self._lock:
            return sorted(self._data.items())


class Genus0Theory:
    def __init__(self, r: int):
        self.r = check_r(r)
        self.table = CorrelatorTable()
        self._F = None

    @property
    def F(self):
        if self._F is None:
            self._F = prepotential(self.r)
        return self._F

    # -- keys ----------------------------------------------------------
    def normalize(self, insertions: Iterable[Insertion]) -> Key:
        r = self.r
        out = []
        for a, m in insertions:
            if a < 0:
                raise DomainError("descendant exponent %r is negative" % a)
            if not -1 <= m <= r - 1:
                raise DomainError("label %r outside -1..%d" % (m, r - 1))
            out.append((a, r - 1 if m == -1 else m))
        return tuple(sorted(out))

    def dimension_ok(self, insertions: Iterable[Insertion]) -> bool:
        key = self.normalize(insertions)
        n = len(key)
        total = sum(a for a, _ in key) + sum((Fraction(m, self.r) for _, m in key), Fraction(0))
        return total == n - 3 + central_charge(self.r)

    def _ramond(self, key: Key) -> bool:
        return any(m == self.r - 1 for _, m in key)

    # -- primaries -----------------------------------------------------
    def primary(self, m_list: Sequence[int]) -> Fraction:
        key = self.normalize((0, m) for m in m_list)
        if len(key) < 3 or self._ramond(key) or not self.dimension_ok(key):
            return Fraction(0)
        return self.F.correlator([m for _, m in key])

    # -- descendants ---------------------------------------------------
    def descendant(self, insertions: Iterable[Insertion]) -> Fraction:
        key = self.normalize(insertions)
        if len(key) < 3:
            raise DomainError("a genus-0 correlator needs at least 3 insertions")
        return self._value(key)

    def _value(self, key: Key) -> Fraction:
        if len(key) < 3:
            return Fraction(0)
        cached = self.table.get(key)
        if cached is not None:
            return cached
        return self.table.put(key, self._compute(key))

    def _compute(self, key: Key) -> Fraction:
        if self._ramond(key) or not self.dimension_ok(key):
            return Fraction(0)
        if all(a == 0 for a, _ in key):
            return self.F.correlator([m for _, m in key])
        if (0, 0) in key:
            return self._string(key)
        pivot = max(range(len(key)), key=lambda i: (key[i][0], -i))
        legs = [i for i in range(len(key)) if i != pivot][:2]
        return self.trr(key, pivot, legs)

    def _string(self, key: Key) -> Fraction:
        i = key.index((0, 0))
        rest = key[:i] + key[i + 1:]
        total = Fraction(0)
        for j, (a, m) in enumerate(rest):
            if a:
                lowered = rest[:j] + ((a - 1, m),) + rest[j + 1:]
                total += self._value(tuple(sorted(lowered)))
        return total

    def trr(self, insertions: Sequence[Insertion], pivot: int, legs: Sequence[int]) -> Fraction:
        """One topological-recursion step with an explicit pivot and two reference legs.

        <tau_a(mu) L1 L2 S> = sum_{S1 + S2 = S} sum_e <tau_{a-1}(mu) S1 x_e> <x_{r-2-e} L1 L2 S2>
        """
        key = tuple(insertions)
        a, mu = key[pivot]
        if a < 1:
            raise DomainError("the pivot must carry a descendant")
        l1, l2 = legs
        if len({pivot, l1, l2}) != 3:
            raise DomainError("pivot and legs must be distinct insertions")
        rest = [key[i] for i in range(len(key)) if i not in (pivot, l1, l2)]
        r = self.r
        total = Fraction(0)
        for size in range(len(rest) + 1):
            for chosen in combinations(range(len(rest)), size):
                s1 = [rest[i] for i in chosen]
                s2 = [rest[i] for i in range(len(rest)) if i not in chosen]
                for e in range(r - 1):
                    left = self._value(tuple(sorted(s1 + [(a - 1, mu), (0, e)])))
                    if not left:
                        continue
                    right = self._value(tuple(sorted(s2 + [(0, r - 2 - e), key[l1], key[l2]])))
                    total += left * right
        return total

    def evaluate_ordered(self, insertions: Sequence[Insertion]) -> Fraction:
        """Evaluate without sorting the top-level key: the first maximal-a insertion
        (by position) pivots, the next two positions are the legs."""
        key = tuple((a, self.r - 1 if m == -1 else m) for a, m in insertions)
        if len(key) < 3:
            raise DomainError("a genus-0 correlator needs at least 3 insertions")
        if self._ramond(key) or not self.dimension_ok(key) or all(a == 0 for a, _ in key):
            return self._value(self.normalize(key))
        top = max(a for a, _ in key)
        pivot = next(i for i, (a, _) in enumerate(key) if a == top)
        legs = [i for i in range(len(key)) if i != pivot][:2]
        return self.trr(key, pivot, legs)

    # -- identities ----------------------------------------------------
    def string_check(self, insertions: Iterable[Insertion]) -> bool:
        key = self.normalize(insertions)
        if (0, 0) not in key:
            raise DomainError("string check needs a tau_0(x_0) insertion")
        lhs = self.descendant(key)
        i = key.index((0, 0))
        rest = key[:i] + key[i + 1:]
        if len(rest) == 2:
            (a1, m1), (a2, m2) = rest
            rhs = Fraction(int(a1 == a2 == 0 and m1 + m2 == self.r - 2))
        else:
            rhs = Fraction(0)
            for j, (a, m) in enumerate(rest):
                if a:
                    rhs += self.descendant(rest[:j] + ((a - 1, m),) + rest[j + 1:])
        return lhs == rhs

    def dilaton_check(self, insertions: Iterable[Insertion]) -> bool:
        key = self.normalize(insertions)
        if (1, 0) not in key:
            raise DomainError("dilaton check needs a tau_1(x_0) insertion")
        lhs = self.descendant(key)
        i = key.index((1, 0))
        rest = key[:i] + key[i + 1:]
        rhs = (len(rest) - 2) * self.descendant(rest) if len(rest) >= 3 else Fraction(0)
        return lhs == rhs

    # -- enumeration ---------------------------------------------------
    def keys(self, n: int, max_total_a: Optional[int] = None, narrow_only: bool = True) -> Iterator[Key]:
        """Sorted keys with ``n`` insertions passing the dimension filter."""
        r = self.r
        labels = range(r - 1) if narrow_only else range(r)
        target = (n - 3) * r + r - 2
        for ms in _multisets(list(labels), n):
            rem = target - sum(ms)
            if rem < 0 or rem % r:
                continue
            total_a = rem // r
            if max_total_a is not None and total_a > max_total_a:
                continue
            seen = set()
            for a_list in _compositions(total_a, n):
                key = tuple(sorted(zip(a_list, ms)))
                if key not in seen:
                    seen.add(key)
                    yield key

    def table_rows(self, max_n: int, max_total_a: int) -> List[Tuple[Key, Fraction]]:
        rows = []
        for n in range(3, max_n + 1):
            for key in sorted(set(self.keys(n, max_total_a))):
                value = self._value(key)
                if value:
                    rows.append((key, value))
        return rows


def _multisets(values: List[int], n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for i, v in enumerate(values):
        for tail in _multisets(values[i:], n - 1):
            yield (v,) + tail


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for tail in _compositions(total - first, parts - 1):
            yield (first,) + tail


@lru_cache(maxsize=None)
def theory(r: int) -> Genus0Theory:
    return Genus0Theory(r)


def closed_form_r2(a_list: Sequence[int]) -> Fraction:
    """(n-3)!/prod a_i! for r = 2 when sum a = n - 3, else 0."""
    n = len(a_list)
    if n < 3 or sum(a_list) != n - 3:
        return Fraction(0)
    denom = 1
    for a in a_list:
        denom *= factorial(a)
    return Fraction(factorial(n - 3), denom)


@lru_cache(maxsize=None)
def _string_only(a_sorted: Tuple[int, ...]) -> Fraction:
    n = len(a_sorted)
    if n < 3 or sum(a_sorted) != n - 3:
        return Fraction(0)
    if n == 3:
        return Fraction(1)
    # sum a = n - 3 < n, so some a_i = 0 and the string equation applies
    i = a_sorted.index(0)
    rest = a_sorted[:i] + a_sorted[i + 1:]
    total = Fraction(0)
    for j, a in enumerate(rest):
        if a:
            total += _string_only(tuple(sorted(rest[:j] + (a - 1,) + rest[j + 1:])))
    return total


def string_recursion_r2(a_list: Sequence[int]) -> Fraction:
    """Pure-string oracle for r = 2, independent of the prepotential and of TRR."""
    return _string_only(tuple(sorted(a_list)))
