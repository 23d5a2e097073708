import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from squarediffs.arith import (
    format_rational,
    is_perfect_square,
    isqrt,
    parse_rational,
    rat_sqrt,
)


class TestIsqrt:
    def test_zero(self):
        assert isqrt(0) == 0

    def test_exact_square(self):
        assert isqrt(451584) == 672
        assert 672 * 672 == 451584

    def test_one_below_square(self):
        assert isqrt(451583) == 671

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            isqrt(-1)

    @given(st.integers(min_value=0, max_value=10**40))
    def test_floor_property(self, n):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


class TestIsPerfectSquare:
    def test_known_square(self):
        assert is_perfect_square(10816) == (True, 104)

    def test_non_square(self):
        assert is_perfect_square(2) == (False, None)

    def test_negative(self):
        assert is_perfect_square(-4) == (False, None)

    @given(st.integers(min_value=0, max_value=10**30))
    def test_filter_agrees_with_isqrt(self, n):
        # the residue filter must be conservative: exact agreement with
        # the plain isqrt definition on every input
        flag, root = is_perfect_square(n)
        r = math.isqrt(n)
        assert flag == (r * r == n)
        if flag:
            assert root == r

    @given(st.integers(min_value=0, max_value=10**15))
    def test_every_square_accepted(self, r):
        assert is_perfect_square(r * r) == (True, r)


class TestRatSqrt:
    def test_cycle_value(self):
        assert rat_sqrt(Fraction(7225, 7056)) == Fraction(85, 84)

    def test_one(self):
        assert rat_sqrt(Fraction(1)) == 1

    def test_irrational(self):
        assert rat_sqrt(Fraction(2)) is None

    def test_negative(self):
        assert rat_sqrt(Fraction(-9, 4)) is None

    @given(
        st.fractions(
            min_value=Fraction(-10**9), max_value=Fraction(10**9), max_denominator=10**6
        )
    )
    def test_square_always_has_root(self, q):
        root = rat_sqrt(q * q)
        assert root == abs(q)


class TestSerialization:
    def test_canonical_form(self):
        assert format_rational(Fraction(-60, 23)) == "-60/23"
        assert format_rational(Fraction(9)) == "9/1"

    def test_parse_roundtrip(self):
        for text in ("13/5", "-37/23", "7", "0"):
            q = parse_rational(text)
            assert parse_rational(format_rational(q)) == q

    def test_parse_rejects_sign_on_denominator(self):
        with pytest.raises(ValueError):
            parse_rational("1/-2")

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_rational("one half")
