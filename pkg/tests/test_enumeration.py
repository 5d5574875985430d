import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from asmlattice.asm import MonotoneTriangle, asm_count, enumerate_asms
from asmlattice.enumeration import (
    alpha_operator,
    alpha_polynomial,
    alpha_recursive,
    apply_elementary_operator,
    count_table_csv,
    count_tail_family,
    extend_partial_triangle,
    finite_difference_degree,
    tail_closed_form,
    tail_degree_check,
    tail_mask,
    truncate_to_partial_triangle,
)
from asmlattice.errors import InvariantViolation, NotInSublattice, ResourceLimit, UnknownVariable
from asmlattice.parabolic import enumerate_asm_i
from asmlattice.poly import MultiPolynomial

from conftest import TAIL_ASM_6, TAIL_TRIANGLE_6

K2 = ("k1", "k2")
K3 = ("k1", "k2", "k3")


def var(names, x):
    return MultiPolynomial.var(names, x)


def to_sympy(p):
    syms = sympy.symbols(p.variables)
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator)
                            * sympy.Mul(*(s ** k for s, k in zip(syms, e)))
                            for e, c in p.terms.items()))


class TestPolynomials:
    def test_difference(self):
        p = var(K2, "k2") - var(K2, "k1")
        assert p.difference("k2") == MultiPolynomial.constant(K2, 1)

    def test_shift(self):
        x = var(("k1",), "k1")
        assert (x * x).shift("k1") == x * x + 2 * x + 1

    def test_elementary_operator(self):
        p = var(K2, "k2") - var(K2, "k1")
        assert apply_elementary_operator(p, "k1", "k2") == p + 1

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            var(K2, "k3")
        with pytest.raises(UnknownVariable):
            MultiPolynomial.constant(K2, 1).shift("x")

    def test_no_zero_terms(self):
        x = var(K2, "k1")
        assert (x - x).terms == {}
        assert (x - x).degree() == -1

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                              st.fractions(min_value=-5, max_value=5, max_denominator=6)),
                    max_size=6),
           st.integers(-3, 3))
    def test_shift_matches_sympy(self, raw, by):
        p = MultiPolynomial(K2, dict(raw))
        k1, k2 = sympy.symbols(K2)
        expected = sympy.expand(to_sympy(p).subs(k1, k1 + by))
        assert sympy.expand(to_sympy(p.shift("k1", by)) - expected) == 0

    @settings(max_examples=50, deadline=None)
    @given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
    def test_evaluate(self, a, b, c):
        p = alpha_polynomial(3)
        assert p(a, b, c) == to_sympy(p).subs(dict(zip(sympy.symbols(K3), (a, b, c))))


class TestAlpha:
    def test_singletons(self):
        assert all(alpha_recursive([k]) == 1 for k in range(-3, 8))

    def test_two_rows(self):
        assert alpha_recursive([1, 3]) == 3
        k1, k2 = var(K2, "k1"), var(K2, "k2")
        assert alpha_polynomial(2) == 1 - k1 + k2

    def test_three_rows_value(self):
        assert alpha_recursive([1, 2, 3]) == 7
        assert alpha_operator([1, 2, 3]) == 7

    def test_three_rows_polynomial(self):
        k1, k2, k3 = (var(K3, x) for x in K3)
        shown = Fraction(1, 2) * (
            -3 * k1 + k1 * k1 + 2 * k1 * k2 - k1 * k1 * k2 - 2 * k2 * k2 + k1 * k2 * k2
            + 3 * k3 - 4 * k1 * k3 + k1 * k1 * k3 + 2 * k2 * k3 - k2 * k2 * k3 + k3 * k3
            - k1 * k3 * k3 + k2 * k3 * k3)
        assert alpha_polynomial(3) == shown
        assert len(alpha_polynomial(3).terms) == 14

    @pytest.mark.parametrize("m", range(1, 5))
    def test_operator_equals_recursion(self, m):
        for bottom in combinations(range(1, 7), m):
            assert alpha_operator(bottom) == alpha_recursive(bottom)

    def test_operator_equals_recursion_m5(self):
        rng = random.Random(0)
        for _ in range(15):
            bottom = sorted(rng.sample(range(1, 10), 5))
            assert alpha_operator(bottom) == alpha_recursive(bottom)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_full_bottom_row_counts_asms(self, n):
        assert alpha_recursive(range(1, n + 1)) == asm_count(n)

    def test_operators_commute(self):
        rng = random.Random(1)
        names = ("k1", "k2", "k3", "k4")
        p = MultiPolynomial.constant(names, 1)
        for i, j in combinations(range(4), 2):
            p = p * (var(names, names[j]) - var(names, names[i]))
        pairs = list(combinations(names, 2))
        for _ in range(5):
            order = pairs[:]
            rng.shuffle(order)
            q = p
            for x, y in order:
                q = apply_elementary_operator(q, x, y)
            r = p
            for x, y in pairs:
                r = apply_elementary_operator(r, x, y)
            assert q == r

    def test_not_increasing(self):
        with pytest.raises(InvariantViolation):
            alpha_recursive([2, 2])

    def test_cap(self):
        with pytest.raises(ResourceLimit):
            alpha_operator(range(1, 8))


class TestTailBijection:
    def test_drawn_example(self):
        T = truncate_to_partial_triangle(TAIL_ASM_6, 4)
        assert T.rows == TAIL_TRIANGLE_6 and T.bound == 6
        assert extend_partial_triangle(MonotoneTriangle(TAIL_TRIANGLE_6, 6)) == TAIL_ASM_6

    def test_t_equals_one(self):
        for n in range(1, 6):
            members = list(enumerate_asm_i(n, tail_mask(1, n)))
            assert len(members) == 1
            assert extend_partial_triangle(MonotoneTriangle((), n)) == members[0]

    @pytest.mark.parametrize("n", range(2, 6))
    def test_round_trips(self, n):
        for t in range(2, n + 1):
            members = list(enumerate_asm_i(n, tail_mask(t, n)))
            triangles = set()
            for A in members:
                T = truncate_to_partial_triangle(A, t)
                assert T.size == t - 1
                assert extend_partial_triangle(T) == A
                triangles.add(T.rows)
            assert len(triangles) == len(members)

    def test_sixteen(self):
        assert len(list(enumerate_asm_i(4, tail_mask(3, 4)))) == 16

    def test_not_in_family(self):
        A = next(A for A in enumerate_asms(4) if A.entry(3, 2) == -1 or A.entry(3, 3) == -1)
        with pytest.raises(NotInSublattice):
            truncate_to_partial_triangle(A, 3)


class TestTailCounts:
    @pytest.mark.parametrize("n, value", [(4, 16), (5, 30), (6, 50), (7, 77), (8, 112)])
    def test_t3(self, n, value):
        assert count_tail_family(3, n) == value == tail_closed_form(3, n)
        assert value * 6 == (n - 1) * n * (n + 4)

    @pytest.mark.parametrize("n, value", [(5, 149), (6, 406), (7, 938)])
    def test_t4(self, n, value):
        assert count_tail_family(4, n) == value == tail_closed_form(4, n)
        assert value * 360 == (n - 2) * (n - 1) * n * (n + 1) * (n * n + 14 * n + 54)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_t2(self, n):
        assert count_tail_family(2, n) == n

    @pytest.mark.parametrize("n", range(2, 6))
    def test_matches_enumeration(self, n):
        for t in range(2, n + 1):
            expected = sum(1 for _ in enumerate_asm_i(n, tail_mask(t, n)))
            assert count_tail_family(t, n) == expected
            assert count_tail_family(t, n, method="operator") == expected

    def test_spot_enumeration_n6(self):
        assert count_tail_family(3, 6) == sum(1 for _ in enumerate_asm_i(6, tail_mask(3, 6)))

    @pytest.mark.parametrize("n", [6, 7])
    def test_spot_two_row_triangles(self, n):
        # two-row triangles (a) / (b, c) with a in [b, c], entries <= n
        direct = sum(1 for b in range(1, n + 1) for c in range(b + 1, n + 1) for _ in range(b, c + 1))
        assert count_tail_family(3, n) == direct

    @pytest.mark.parametrize("t", [2, 3, 4, 5])
    def test_polynomial_degree(self, t):
        expected, observed = tail_degree_check(t)
        assert observed == expected == t * (t - 1) // 2

    def test_finite_difference_degree(self):
        assert finite_difference_degree([n * n for n in range(6)]) == 2
        assert finite_difference_degree([1, 2, 4, 8]) is None

    def test_csv(self):
        text = count_table_csv([(3, 4), (4, 5), (5, 6)])
        assert text.splitlines() == [
            "t,n,count,closed_form,match", "3,4,16,16,true", "4,5,149,149,true",
            f"5,6,{count_tail_family(5, 6)},,true"]

    def test_bad_args(self):
        with pytest.raises(InvariantViolation):
            count_tail_family(0, 4)
