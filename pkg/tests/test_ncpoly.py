"""Free *-algebra, rewriting, and local confluence."""

import pytest

from qdisc.scalar import ZERO, ONE, Q, q_pow
from qdisc.ncpoly import (
    Generator, NCExpr, Presentation, RewriteBudgetError,
    star_expr, disc, disc_presentation,
)


def w(*names):
    return NCExpr.word(*names)


class TestNCExpr:
    def test_product_concatenates(self):
        assert (w("x") * w("y")).terms == {("x", "y"): ONE}

    def test_linearity(self):
        e = w("x") + w("y").scale(Q)
        f = e * w("z")
        assert f.coeff(("x", "z")) == ONE
        assert f.coeff(("y", "z")) == Q

    def test_zero_absorbs(self):
        assert not (NCExpr.zero() * w("x"))
        assert (w("x") - w("x")) == NCExpr.zero()

    def test_pow(self):
        assert (w("x") ** 3).terms == {("x", "x", "x"): ONE}


class TestDiscPresentation:
    def setup_method(self):
        self.p = disc()

    def test_defining_relation(self):
        # z* z = q^2 z z* + 1 - q^2
        nf = self.p.normal_form(w("z*", "z"))
        assert nf.coeff(("z", "z*")) == q_pow(2)
        assert nf.coeff(()) == ONE - q_pow(2)
        assert len(nf.terms) == 2

    def test_y_commutation(self):
        # y = 1 - z z*:  z y = q^-2 y z  and  z* y = q^2 y z*
        y = NCExpr.one() - w("z", "z*")
        z = w("z")
        zs = w("z*")
        lhs = self.p.normal_form(z * y - (y * z).scale(q_pow(-2)))
        assert not lhs
        rhs = self.p.normal_form(zs * y - (y * zs).scale(q_pow(2)))
        assert not rhs

    def test_normal_words_are_ordered_monomials(self):
        words = self.p.normal_words(3)
        assert sorted(words) == sorted(
            ("z",) * a + ("z*",) * (3 - a) for a in range(4))

    def test_basis_words_counts(self):
        # degree d has d+1 normal words z^a (z*)^(d-a)
        byd = {}
        for word in self.p.basis_words(6):
            byd.setdefault(len(word), []).append(word)
        for d in range(7):
            assert len(byd.get(d, [])) == d + 1

    def test_nf_idempotent(self):
        e = w("z*", "z*", "z", "z")
        nf = self.p.normal_form(e)
        assert self.p.normal_form(nf) == nf

    def test_nf_multiplicative_consistency(self):
        a = w("z*", "z")
        b = w("z", "z*")
        left = self.p.normal_form(self.p.normal_form(a) * self.p.normal_form(b))
        right = self.p.normal_form(a * b)
        assert left == right

    def test_star_antiautomorphism(self):
        e = w("z", "z", "z*") + w("z*").scale(Q)
        onestar = self.p.star(self.p.star(e))
        assert self.p.normal_form(onestar) == self.p.normal_form(e)

    def test_star_reverses_products(self):
        a = w("z", "z*")
        b = w("z*", "z")
        lhs = self.p.normal_form(self.p.star(a * b))
        rhs = self.p.normal_form(self.p.star(b) * self.p.star(a))
        assert lhs == rhs

    def test_relation_is_star_stable(self):
        # applying * to (z* z - q^2 z z* - 1 + q^2) lands back in the ideal
        rel = w("z*", "z") - w("z", "z*").scale(q_pow(2)) - NCExpr.one().scale(ONE - q_pow(2))
        assert not self.p.normal_form(self.p.star(rel))


class TestConfluence:
    def test_disc_locally_confluent(self):
        # single rule, lead has no self-overlap: vacuously confluent
        report = disc().check_local_confluence(6)
        assert report.all_resolved
        assert report.ambiguities == []

    def test_broken_system_detected(self):
        x = Generator("x")
        y = Generator("y")
        p = Presentation(
            [x, y],
            [(("x", "y"), NCExpr.word("x")), (("y", "x"), NCExpr.word("y"))],
        )
        report = p.check_local_confluence(4)
        bad = [a for a in report.ambiguities if not a.resolved]
        assert bad
        assert any(a.word in (("x", "y", "x"), ("y", "x", "y")) for a in bad)

    def test_resolved_toy_system(self):
        x = Generator("x")
        y = Generator("y")
        p = Presentation(
            [x, y],
            [(("x", "y"), NCExpr.one()), (("y", "x"), NCExpr.one())],
        )
        report = p.check_local_confluence(4)
        assert report.all_resolved
        assert len(report.ambiguities) == 2


class TestBudget:
    def test_budget_error(self):
        # fresh presentation: the singleton's cache must not absorb the steps
        p = disc_presentation()
        with pytest.raises(RewriteBudgetError):
            p.normal_form(NCExpr.word(*(("z*",) * 6 + ("z",) * 6)), budget=10)

    def test_budget_not_tripped_when_sufficient(self):
        p = disc_presentation()
        e = p.normal_form(NCExpr.word("z*", "z"), budget=100)
        assert e.coeff(("z", "z*")) == q_pow(2)
