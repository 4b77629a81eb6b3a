"""Exact arithmetic in Q(s), s^2 = q."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qdisc.scalar import (
    Scalar, ZERO, ONE, S, Q, PoleError,
    s_pow, q_pow, q_int, q2_int, q2_factorial, q2_binomial,
)


def poly(*coefs):
    return Scalar(tuple(coefs), (1,))


small_scalars = st.builds(
    lambda n, d: Scalar(tuple(n), tuple(d)),
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    st.lists(st.integers(-4, 4), min_size=1, max_size=4).filter(lambda d: any(d)),
)


class TestFieldAxioms:
    @given(small_scalars, small_scalars, small_scalars)
    @settings(max_examples=150, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO

    @given(small_scalars)
    @settings(max_examples=100, deadline=None)
    def test_inverse(self, a):
        if a:
            assert a * a.inverse() == ONE
        else:
            with pytest.raises(ZeroDivisionError):
                a.inverse()

    @given(small_scalars, small_scalars)
    @settings(max_examples=100, deadline=None)
    def test_sub_div_roundtrip(self, a, b):
        assert (a + b) - b == a
        if b:
            assert (a / b) * b == a


class TestCanonicalForm:
    def test_reduction(self):
        # (1 - q^2)/(q^-2 - 1) = q^2, written over s
        num = ONE - q_pow(2)
        den = q_pow(-2) - ONE
        assert num / den == q_pow(2)

    def test_content_reduction(self):
        assert Scalar((2, 0, 2), (4,)) == Scalar((1, 0, 1), (2,))

    def test_denominator_sign(self):
        a = Scalar((1,), (-2,))
        assert a == Scalar((-1,), (2,))

    def test_hash_consistency(self):
        assert hash(q_pow(2) / q_pow(2)) == hash(ONE)


class TestEvaluation:
    def test_even_exact(self):
        # q^2 + 1 at q0 = 1/3, no square root needed
        v = (q_pow(2) + ONE).eval_at_q(Fraction(1, 3))
        assert v == Fraction(10, 9)

    def test_rational_sqrt_exact(self):
        # s at q0 = 1/4 is exactly 1/2
        assert S.eval_at_q(Fraction(1, 4)) == Fraction(1, 2)

    def test_irrational_sqrt_approx(self):
        v = S.eval_at_q(Fraction(1, 2), sqrt_digits=30)
        assert abs(v * v - Fraction(1, 2)) < Fraction(1, 10 ** 25)

    def test_float(self):
        # q^-1 + q at q0 = 1/4
        assert abs(q_int(2).eval_float(0.25) - 4.25) < 1e-12

    def test_pole(self):
        with pytest.raises(PoleError):
            (ONE / (ONE - Q)).eval_at_q(Fraction(1))


class TestQIntegers:
    def test_q_int_values(self):
        assert q_int(0) == ZERO
        assert q_int(1) == ONE
        assert q_int(2) == q_pow(-1) + q_pow(1)
        assert q_int(3) == q_pow(-2) + ONE + q_pow(2)

    def test_q2_int(self):
        # (1 - q^2n)/(1 - q^2)
        assert q2_int(3) == ONE + q_pow(2) + q_pow(4)

    def test_q2_binomial_pascal(self):
        # Gauss recursion for AB = q^2 BA
        for n in range(1, 7):
            for k in range(0, n + 1):
                lhs = q2_binomial(n, k)
                rhs = ZERO
                if k <= n - 1:
                    rhs = rhs + q2_binomial(n - 1, k) * q_pow(2 * k)
                if 1 <= k:
                    rhs = rhs + q2_binomial(n - 1, k - 1)
                assert lhs == rhs, (n, k)

    def test_q2_factorial(self):
        assert q2_factorial(3) == q2_int(1) * q2_int(2) * q2_int(3)


class TestPrinting:
    def test_laurent_forms(self):
        assert str(q_pow(1)) == "q"
        assert str(q_pow(2)) == "q^2"
        assert str(q_pow(-1)) == "q^(-1)"
        assert str(s_pow(3)) == "q^(3/2)"
        assert str(s_pow(-3)) == "q^(-3/2)"
        assert str(ONE) == "1"
        assert str(ZERO) == "0"

    def test_sum_form(self):
        assert str(q_int(3)) == "q^(-2) + 1 + q^2"
