"""Invariant integral: values, invariance, positivity, uniqueness."""

from fractions import Fraction

import pytest

from qdisc.scalar import ZERO, ONE, q_pow
from qdisc.uqsl2 import E, F
from qdisc.modalg import ExtElement, act
from qdisc.integral import (
    integral, invariance_check, gram_diagonal, gram_is_diagonal,
    gram_positive_at, functional_nullspace_dim, functional_solve,
)
from qdisc.fock import weight


class TestValues:
    def test_normalization(self):
        assert integral(ExtElement.fin_mono(0, 0)) == ONE

    def test_diagonal(self):
        for a in range(5):
            got = integral(ExtElement.fin_mono(a, a))
            assert got == weight(a) * q_pow(-2 * a)

    def test_off_diagonal_vanishes(self):
        for a in range(4):
            for b in range(4):
                if a != b:
                    assert not integral(ExtElement.fin_mono(a, b))

    def test_zfz(self):
        assert integral(ExtElement.fin_mono(1, 1)) == (ONE - q_pow(2)) * q_pow(-2)

    def test_rejects_polynomial_part(self):
        with pytest.raises(ValueError):
            integral(ExtElement.pol_mono(1, 1))


class TestInvariance:
    def test_generators_up_to_degree_6(self):
        assert invariance_check(6)

    def test_e_on_superdiagonal(self):
        # integral(E(z^a f0 (z*)^(a+1))) = 0 even though the action is not 0
        for a in range(4):
            f = ExtElement.fin_mono(a, a + 1)
            img = act(E, f)
            assert img
            assert not integral(img)

    def test_f_on_subdiagonal(self):
        for a in range(4):
            f = ExtElement.fin_mono(a + 1, a)
            assert not integral(act(F, f))


class TestGram:
    def test_diagonal_structure(self):
        assert gram_is_diagonal(3)

    def test_diagonal_values(self):
        d = gram_diagonal(2)
        # <f0, f0> = integral(f0) = 1
        assert d[(0, 0)] == ONE
        # entries are even in s, so exact rational evaluation applies
        for v in d.values():
            assert v.eval_at_q(Fraction(1, 4)) == v.eval_at_q(Fraction(1, 4))

    @pytest.mark.parametrize("q0", [Fraction(1, 4), Fraction(9, 16)])
    def test_positive(self, q0):
        assert gram_positive_at(4, q0)

    def test_rejects_bad_q0(self):
        with pytest.raises(ValueError):
            gram_positive_at(2, Fraction(3, 2))


class TestUniqueness:
    @pytest.mark.parametrize("bound", [2, 4])
    def test_dimension_one(self, bound):
        assert functional_nullspace_dim(bound) == 1

    def test_solution_reproduces_integral(self):
        # the solver route and the closed-form route must coincide
        nu = functional_solve(4)
        for (a, b), v in nu.items():
            assert v == integral(ExtElement.fin_mono(a, b)), (a, b)
