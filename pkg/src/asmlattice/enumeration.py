"""Counting monotone triangles and the tail families ASM^{t,...,n-1}(n).

``alpha(k_1, ..., k_m)`` is the number of monotone triangles with bottom row
``k``.  It is computed two ways: by recursion over interlacing rows, and by
applying ``prod_{p<q} (id + E_{k_p} Delta_{k_q})`` to
``prod_{i<j} (k_j - k_i) / (j - i)`` and evaluating.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .asm import (
    Asm,
    MonotoneTriangle,
    ParabolicMask,
    asm_to_monotone_triangle,
    monotone_triangle_to_asm,
)
from .errors import InvariantViolation, NotInSublattice, ResourceLimit
from .parabolic import in_asm_i
from .poly import MultiPolynomial

OPERATOR_CAP = 6
SUMMATION_CAP = 2_000_000


def _check_bottom(bottom: Sequence[int]) -> tuple[int, ...]:
    bottom = tuple(int(k) for k in bottom)
    if any(a >= b for a, b in zip(bottom, bottom[1:])):
        raise InvariantViolation(f"bottom row {bottom} is not strictly increasing")
    return bottom


def rows_above(row: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """Strictly increasing rows ``l`` with ``row[j] <= l[j] <= row[j+1]``."""
    m = len(row)

    def rec(j: int, lo: int, acc: tuple[int, ...]):
        if j == m - 1:
            yield acc
            return
        for x in range(max(lo, row[j]), row[j + 1] + 1):
            yield from rec(j + 1, x + 1, acc + (x,))

    if m:
        yield from rec(0, row[0], ())


@lru_cache(maxsize=None)
def _alpha(bottom: tuple[int, ...]) -> int:
    if len(bottom) <= 1:
        return 1
    return sum(_alpha(r) for r in rows_above(bottom))


def alpha_recursive(bottom: Sequence[int]) -> int:
    return _alpha(_check_bottom(bottom))


def _vars(m: int) -> tuple[str, ...]:
    return tuple(f"k{i}" for i in range(1, m + 1))


@lru_cache(maxsize=None)
def alpha_polynomial(m: int, cap: int = OPERATOR_CAP) -> MultiPolynomial:
    """The counting polynomial for ``m``-row triangles, as a polynomial in
    ``k1..km``."""
    if m > cap:
        raise ResourceLimit(f"operator formula capped at m={cap}")
    names = _vars(m)
    p = MultiPolynomial.constant(names, 1)
    for i, j in combinations(range(m), 2):
        p = p * (MultiPolynomial.var(names, names[j]) - MultiPolynomial.var(names, names[i]))
        p = p * Fraction(1, j - i)
    for a, b in combinations(range(m), 2):
        p = apply_elementary_operator(p, names[a], names[b])
    return p


def apply_elementary_operator(p: MultiPolynomial, x: str, y: str) -> MultiPolynomial:
    """``(id + E_x Delta_y) p``."""
    return p + p.difference(y).shift(x)


def alpha_operator(bottom: Sequence[int], cap: int = OPERATOR_CAP) -> int:
    bottom = _check_bottom(bottom)
    if not bottom:
        return 1
    value = alpha_polynomial(len(bottom), cap)(*bottom)
    if value.denominator != 1:
        raise InvariantViolation(f"non-integral count {value} for {bottom}")
    return int(value)


def tail_mask(t: int, n: int) -> ParabolicMask:
    """``{t, t+1, ..., n-1}``."""
    return ParabolicMask(n, tuple(range(max(t, 1), n)))


def truncate_to_partial_triangle(A: Asm, t: int) -> MonotoneTriangle:
    n = A.n
    if not 1 <= t <= n:
        raise InvariantViolation(f"t={t} outside [1, {n}]")
    if not in_asm_i(A, tail_mask(t, n)):
        raise NotInSublattice(f"matrix is not in ASM^{tail_mask(t, n)}({n})")
    return MonotoneTriangle(asm_to_monotone_triangle(A).rows[:t - 1], n)


def extend_partial_triangle(T: MonotoneTriangle) -> Asm:
    """Rebuild the ASM from its first ``t-1`` triangle rows.

    The missing column indices enter one per row, in increasing order.
    """
    n = T.bound
    if T.size > n - 1:
        raise InvariantViolation(f"partial triangle has {T.size} rows; at most {n - 1} allowed")
    rows = list(T.rows)
    current = list(rows[-1]) if rows else []
    for c in sorted(set(range(1, n + 1)) - set(current)):
        current = sorted(current + [c])
        rows.append(tuple(current))
    A = monotone_triangle_to_asm(MonotoneTriangle(tuple(rows), n))
    assert in_asm_i(A, tail_mask(T.size + 1, n))
    return A


def tail_closed_form(t: int, n: int) -> int | None:
    if t == 3:
        num = (n - 1) * n * (n + 4)
        assert num % 6 == 0
        return num // 6
    if t == 4:
        num = (n - 2) * (n - 1) * n * (n + 1) * (n * n + 14 * n + 54)
        assert num % 360 == 0
        return num // 360
    return None


def count_tail_family(t: int, n: int, method: str = "recursive", check_closed_form: bool = True) -> int:
    """``|ASM^{t,...,n-1}(n)|``: the number of monotone triangles with
    ``t-1`` rows and entries at most ``n``."""
    if t < 1 or n < 1 or t - 1 > n:
        raise InvariantViolation(f"need 1 <= t <= n+1, got t={t}, n={n}")
    m = t - 1
    if comb(n, m) > SUMMATION_CAP:
        raise ResourceLimit(f"{comb(n, m)} bottom rows exceed cap {SUMMATION_CAP}")
    alpha = alpha_recursive if method == "recursive" else alpha_operator
    total = sum(alpha(k) for k in combinations(range(1, n + 1), m))
    if check_closed_form and t <= n:
        closed = tail_closed_form(t, n)
        if closed is not None and closed != total:
            raise AssertionError(f"closed form {closed} != summed count {total} at t={t}, n={n}")
    return total


def finite_difference_degree(values: Sequence[int]) -> int | None:
    """Smallest ``d`` such that the ``(d+1)``-th differences of ``values``
    vanish; ``None`` if no order below ``len(values) - 1`` does."""
    diffs = list(values)
    for d in range(len(values) - 1):
        nxt = [b - a for a, b in zip(diffs, diffs[1:])]
        if all(x == 0 for x in nxt):
            return d
        diffs = nxt
    return None


def tail_degree_check(t: int, extra: int = 3) -> tuple[int, int | None]:
    """Expected degree ``t(t-1)/2`` and the degree observed on sampled ``n``."""
    expected = t * (t - 1) // 2
    ns = range(t, t + expected + 2 + extra)
    values = [count_tail_family(t, n, check_closed_form=False) for n in ns]
    return expected, finite_difference_degree(values)


def count_table_csv(cases: Iterable[tuple[int, int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "n", "count", "closed_form", "match"])
    for t, n in cases:
        count = count_tail_family(t, n, check_closed_form=False)
        closed = tail_closed_form(t, n)
        writer.writerow([t, n, count, "" if closed is None else closed,
                         str(closed is None or closed == count).lower()])
    return buf.getvalue()
