"""Expression frontend: grammar cases and the print/parse round trip."""

import pytest
from hypothesis import given, settings, strategies as st

from qdisc.scalar import Scalar, ONE, Q, q_pow, s_pow
from qdisc.ncpoly import NCExpr, disc
from qdisc.uqsl2 import UEl
from qdisc.modalg import ExtElement, LaurentElement
from qdisc.flag import flag
from qdisc.parser import (
    ParseError, parse_expression, tokenize,
    disc_context, flag_context, uqsl2_context, extended_context,
    laurent_context,
)


def parse_disc(text):
    return parse_expression(text, disc_context())


def parse_lifted(text, ctx):
    """Parse and embed a scalar-only result into the context algebra."""
    v = parse_expression(text, ctx)
    return ctx.one.scale(v) if isinstance(v, Scalar) else v


class TestTokens:
    def test_star_is_one_token(self):
        kinds = [t.kind for t in tokenize("z^* z ^ *")]
        # ^ immediately followed by * fuses, a spaced ^ * does not
        assert kinds == ["IDENT", "STAR", "IDENT", "CARET", "TIMES", "EOF"]

    def test_positions(self):
        toks = tokenize("z + q^2")
        assert [(t.text, t.pos) for t in toks[:-1]] == [
            ("z", 0), ("+", 2), ("q", 4), ("^", 5), ("2", 6)]

    def test_bad_character(self):
        with pytest.raises(ParseError, match=r"position 2"):
            tokenize("z %")


class TestScalarExpressions:
    def test_q_literal(self):
        assert parse_disc("q") == Q
        assert parse_disc("q^2") == q_pow(2)
        assert parse_disc("q^-2") == q_pow(-2)
        assert parse_disc("q^(1/2)") == s_pow(1)
        assert parse_disc("q^(-3/2)") == s_pow(-3)

    def test_rational_coefficients(self):
        assert parse_disc("3/4") == Scalar.of(3) / Scalar.of(4)
        assert parse_disc("1 - q^2") == ONE - q_pow(2)
        assert parse_disc("(1)/(-1 + q^2)") == (ONE / (q_pow(2) - ONE))

    def test_half_power_only_on_q(self):
        with pytest.raises(ParseError, match="half-integer"):
            parse_disc("z^(1/2)")
        with pytest.raises(ParseError, match="denominator"):
            parse_disc("q^(1/3)")

    def test_unary_signs(self):
        assert parse_disc("-q + +q") == Scalar.of(0)


class TestProducts:
    def test_juxtaposition_dot_star_agree(self):
        a = parse_disc("z z^*")
        assert parse_disc("z * z^*") == a
        assert parse_disc("z . z^*") == a

    def test_scalar_times_word(self):
        e = parse_disc("q^2 * z z^*")
        assert e == NCExpr.word("z", "z*", coeff=q_pow(2))

    def test_division_by_scalar_only(self):
        assert parse_disc("z / q") == NCExpr.word("z", coeff=q_pow(-1))
        with pytest.raises(ParseError, match="only defined by scalars"):
            parse_disc("z / z")
        with pytest.raises(ParseError, match="division by zero"):
            parse_disc("z / 0")

    def test_integer_powers(self):
        assert parse_disc("z^3") == NCExpr.word("z", "z", "z")
        with pytest.raises(ParseError, match="negative powers"):
            parse_disc("z^-1")


class TestContexts:
    def test_unknown_generator_names_context(self):
        with pytest.raises(ParseError, match="for 'disc'"):
            parse_disc("t11")
        with pytest.raises(ParseError, match="for 'flag'"):
            parse_expression("z", flag_context())

    def test_star_unavailable_on_laurent(self):
        with pytest.raises(ParseError, match="no involution"):
            parse_expression("z^*", laurent_context())

    def test_k_inverse_powers(self):
        ctx = uqsl2_context()
        assert parse_expression("K^-1", ctx) == UEl.mono(0, -1, 0)
        assert parse_expression("K^-3", ctx) == UEl.mono(0, -3, 0)
        assert parse_expression("Kinv^-2", ctx) == UEl.mono(0, 2, 0)
        with pytest.raises(ParseError, match="negative powers"):
            parse_expression("E^-1", ctx)

    def test_laurent_inverse_powers(self):
        assert parse_expression("z^-4", laurent_context()) \
            == LaurentElement.mono(-4)
        with pytest.raises(ParseError, match="negative powers"):
            parse_expression("z^-1", laurent_context(allow_inverse=False))

    def test_f0_only_in_extended(self):
        e = parse_expression("z f0 z^*", extended_context())
        assert e == ExtElement.fin_mono(1, 1)
        with pytest.raises(ParseError, match="unknown generator"):
            parse_expression("f0", extended_context(with_f0=False))

    def test_scalar_only_input_returns_scalar(self):
        v = parse_expression("q^2 - 1", extended_context())
        assert isinstance(v, Scalar)


class TestErrors:
    @pytest.mark.parametrize("text,pos", [
        ("z +", 3),
        ("(z", 2),
        ("z )", 2),
        ("z^", 2),
        ("q^(1/)", 5),
        ("", 0),
    ])
    def test_position_reported(self, text, pos):
        with pytest.raises(ParseError) as exc:
            parse_disc(text)
        assert exc.value.pos == pos
        assert f"position {pos}" in str(exc.value)


# -- round trip: everything a printer emits reparses to an equal element ----

scalar_strat = st.builds(
    lambda n, d: Scalar(tuple(n), tuple(d)),
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    st.lists(st.integers(-4, 4), min_size=1, max_size=4).filter(lambda d: any(d)),
)

disc_words = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)),
    min_size=1, max_size=3)

uq_monos = st.lists(
    st.tuples(st.integers(0, 2), st.integers(-2, 2), st.integers(0, 2),
              st.integers(-3, 3)),
    min_size=1, max_size=3)


class TestRoundTrip:
    @given(scalar_strat)
    @settings(max_examples=100, deadline=None)
    def test_scalar(self, c):
        assert parse_disc(str(c)) == c

    @given(disc_words)
    @settings(max_examples=60, deadline=None)
    def test_disc_normal_form(self, words):
        p = disc()
        e = NCExpr.zero()
        for a, b, k in words:
            e = e + NCExpr.word(*(["z"] * a + ["z*"] * b),
                                coeff=q_pow(k))
        nf = p.normal_form(e)
        back = parse_lifted(str(nf), disc_context())
        assert p.normal_form(back) == nf

    @given(uq_monos)
    @settings(max_examples=60, deadline=None)
    def test_uqsl2(self, monos):
        u = UEl.mono(0, 0, 0).scale(Scalar.of(0))
        for a, b, c, k in monos:
            u = u + UEl.mono(a, b, c, coef=q_pow(k))
        assert parse_lifted(str(u), uqsl2_context()) == u

    @given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                    min_size=1, max_size=3),
           st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                    min_size=0, max_size=3))
    @settings(max_examples=60, deadline=None)
    def test_extended(self, pol, fin):
        e = ExtElement.one().scale(Scalar.of(0))
        for a, b in pol:
            e = e + ExtElement.pol_mono(a, b)
        for a, b in fin:
            e = e + ExtElement.fin_mono(a, b, coef=q_pow(a - b))
        if not e:
            return
        assert parse_lifted(str(e), extended_context()) == e

    @given(st.dictionaries(st.integers(-4, 4),
                           st.integers(-3, 3).filter(bool),
                           min_size=1, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_laurent(self, d):
        e = LaurentElement({n: q_pow(k) for n, k in d.items()})
        assert parse_lifted(str(e), laurent_context()) == e

    def test_flag_determinant(self):
        p = flag()
        det = (NCExpr.word("t11", "t22")
               + NCExpr.word("t12", "t21", coeff=-Q))
        nf = p.normal_form(det)
        back = parse_lifted(str(nf), flag_context())
        assert p.normal_form(back) == nf

    def test_starred_star_round_trip(self):
        p = disc()
        e = p.star(parse_disc("q^(1/2) z z"))
        assert parse_disc(str(e)) == e
