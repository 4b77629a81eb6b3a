"""Braiding: the crossing derivation and the braided product route."""

import itertools

import pytest

from qdisc.scalar import ONE, q_pow
from qdisc.modalg import ExtElement
from qdisc.rmatrix import (
    DiscTensor, cartan_twist, ef_apply, r_apply, braid,
    derived_crossing, derived_rule, derived_presentation,
    matches_engine_presentation, braided_multiply,
)


class TestCartanTwist:
    def test_pair_weights(self):
        # z* ox z picks up q^2
        t = cartan_twist(DiscTensor.pair((0, 1), (1, 0)))
        assert t.terms == {((0, 1), (1, 0)): q_pow(2)}

    def test_same_weights(self):
        # z ox z: weights 2, 2 give q^-2
        t = cartan_twist(DiscTensor.pair((1, 0), (1, 0)))
        assert t.terms == {((1, 0), (1, 0)): q_pow(-2)}

    def test_scalar_factor_untouched(self):
        t = cartan_twist(DiscTensor.pair((0, 0), (3, 1)))
        assert t.terms == {((0, 0), (3, 1)): ONE}


class TestCrossing:
    def test_r_on_zstar_z(self):
        r = r_apply(DiscTensor.pair((0, 1), (1, 0)))
        assert r.terms == {((0, 1), (1, 0)): q_pow(2),
                           ((0, 0), (0, 0)): ONE - q_pow(2)}

    def test_braid_flips(self):
        b = braid(DiscTensor.pair((0, 1), (1, 0)))
        assert b.terms == {((1, 0), (0, 1)): q_pow(2),
                           ((0, 0), (0, 0)): ONE - q_pow(2)}

    def test_second_order_guard(self):
        with pytest.raises(ValueError):
            braid(DiscTensor.pair((0, 2), (2, 0)))

    def test_crossing_weight_preserved(self):
        # every term of the braiding has the same total weight as the input
        b = derived_crossing()
        for ((a1, b1), (a2, b2)) in b.terms:
            assert (a1 - b1) + (a2 - b2) == 0


class TestDerivedPresentation:
    def test_rule_matches_engine(self):
        assert matches_engine_presentation()

    def test_rule_content(self):
        r = derived_rule()
        assert r.coeff(("z", "z*")) == q_pow(2)
        assert r.coeff(()) == ONE - q_pow(2)
        assert len(r.terms) == 2

    def test_derived_presentation_confluent(self):
        rep = derived_presentation().check_local_confluence(6)
        assert rep.all_resolved


class TestBraidedProduct:
    def test_agrees_with_engine_route(self):
        monos = [ExtElement.pol_mono(a, b)
                 for a in range(4) for b in range(4 - a)]
        for e1, e2 in itertools.product(monos, monos):
            assert braided_multiply(e1, e2) == e1 * e2

    def test_rejects_finite_part(self):
        with pytest.raises(ValueError):
            braided_multiply(ExtElement.fin_mono(0, 0), ExtElement.one())
