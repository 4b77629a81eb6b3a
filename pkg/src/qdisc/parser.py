"""Expression text frontend shared by the CLI subcommands.

Grammar: identifiers are generator names, `^*` is the postfix star,
juxtaposition (or `*` / `.`) multiplies, `q` is the deformation scalar
and admits half-integer exponents like q^(1/2).  Integer literals and
`/` build exact scalar coefficients.  Everything the package printers
emit reparses to an equal element (round-trip property, tested).
"""

from __future__ import annotations

from typing import NamedTuple

from .scalar import Scalar, ONE, Q, s_pow
from .ncpoly import NCExpr, disc
from . import uqsl2
from .uqsl2 import UEl
from .modalg import ExtElement, LaurentElement
from .flag import flag


class ParseError(ValueError):
    """Syntax or lookup failure; carries the offset into the source text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


_SINGLE = {"+": "PLUS", "-": "MINUS", "*": "TIMES", ".": "TIMES",
           "/": "DIV", "(": "LPAREN", ")": "RPAREN"}


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "^":
            if i + 1 < n and text[i + 1] == "*":
                out.append(Token("STAR", "^*", i))
                i += 2
            else:
                out.append(Token("CARET", "^", i))
                i += 1
            continue
        if ch in _SINGLE:
            out.append(Token(_SINGLE[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(Token("IDENT", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(Token("EOF", "", n))
    return out


class Context:
    """Binds identifiers to elements of one concrete algebra.

    gens: name -> element; one: multiplicative identity; star: optional
    involution on elements; inverse: optional (name, k) -> element for
    generator powers with negative exponent.
    """

    def __init__(self, name, gens, one, star=None, inverse=None):
        self.name = name
        self.gens = gens
        self.one = one
        self.star = star
        self.inverse = inverse


def disc_context() -> Context:
    p = disc()
    return Context("disc", {"z": NCExpr.word("z")}, NCExpr.one(),
                   star=lambda e: p.star(e))


def flag_context() -> Context:
    p = flag()
    gens = {t: NCExpr.word(t) for t in ("t11", "t12", "t21", "t22")}
    return Context("flag", gens, NCExpr.one(), star=lambda e: p.star(e))


def uqsl2_context() -> Context:
    gens = {"E": uqsl2.E, "F": uqsl2.F, "K": uqsl2.K, "Kinv": uqsl2.KINV}

    def inv(name: str, k: int) -> UEl:
        if name == "K":
            return UEl.mono(0, -k, 0)
        if name == "Kinv":
            return UEl.mono(0, k, 0)
        raise KeyError(name)

    return Context("uqsl2", gens, UEl.one(),
                   star=lambda u: uqsl2.star(u), inverse=inv)


def extended_context(with_f0: bool = True) -> Context:
    gens = {"z": ExtElement.pol_mono(1, 0)}
    if with_f0:
        gens["f0"] = ExtElement.fin_mono(0, 0)
    name = "extended" if with_f0 else "disc"
    return Context(name, gens, ExtElement.one(),
                   star=lambda e: e.star())


def laurent_context(allow_inverse: bool = True) -> Context:
    def inv(name: str, k: int) -> LaurentElement:
        if name == "z" and allow_inverse:
            return LaurentElement.mono(-k)
        raise KeyError(name)

    return Context("laurent" if allow_inverse else "holo",
                   {"z": LaurentElement.mono(1)}, LaurentElement.mono(0),
                   inverse=inv)


def _is_scalar(v) -> bool:
    return isinstance(v, Scalar)


class _Parser:
    def __init__(self, tokens: list[Token], ctx: Context):
        self.toks = tokens
        self.i = 0
        self.ctx = ctx

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> Token:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected {kind}, found {t.text or 'end of input'!r}", t.pos)
        return self.take()

    # expr := term (('+'|'-') term)*
    def expr(self):
        v = self.term()
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.take()
            w = self.term()
            v = self.add(v, w, op.pos) if op.kind == "PLUS" \
                else self.add(v, self.negate(w), op.pos)
        return v

    # term := unary ((('*'|'.'|'/') unary) | unary)*
    def term(self):
        v = self.unary()
        while True:
            t = self.peek()
            if t.kind == "TIMES":
                self.take()
                v = self.mul(v, self.unary(), t.pos)
            elif t.kind == "DIV":
                self.take()
                v = self.div(v, self.unary(), t.pos)
            elif t.kind in ("IDENT", "INT", "LPAREN"):
                v = self.mul(v, self.unary(), t.pos)
            else:
                return v

    def unary(self):
        if self.peek().kind == "MINUS":
            self.take()
            return self.negate(self.unary())
        if self.peek().kind == "PLUS":
            self.take()
            return self.unary()
        return self.postfix()

    # postfix := atom ('^*' | '^' exponent)*
    def postfix(self):
        name, v = self.atom()
        while True:
            t = self.peek()
            if t.kind == "STAR":
                self.take()
                if self.ctx.star is None or _is_scalar(v):
                    raise ParseError(
                        f"no involution on carrier {self.ctx.name!r}", t.pos)
                v, name = self.ctx.star(v), None
            elif t.kind == "CARET":
                self.take()
                num, den = self.exponent()
                v = self.power(v, name, num, den, t.pos)
                name = None
            else:
                return v

    def atom(self):
        """Returns (generator name or None, value)."""
        t = self.peek()
        if t.kind == "INT":
            self.take()
            return None, Scalar.of(int(t.text))
        if t.kind == "LPAREN":
            self.take()
            v = self.expr()
            self.expect("RPAREN")
            return None, v
        if t.kind == "IDENT":
            self.take()
            if t.text == "q":
                return None, Q
            try:
                return t.text, self.ctx.gens[t.text]
            except KeyError:
                raise ParseError(
                    f"unknown generator {t.text!r} for {self.ctx.name!r}",
                    t.pos) from None
        raise ParseError(f"expected an expression, found "
                         f"{t.text or 'end of input'!r}", t.pos)

    def exponent(self) -> tuple[int, int]:
        t = self.peek()
        if t.kind == "LPAREN":
            self.take()
            num = self.signed_int()
            den = 1
            if self.peek().kind == "DIV":
                self.take()
                den = int(self.expect("INT").text)
            self.expect("RPAREN")
            return num, den
        return self.signed_int(), 1

    def signed_int(self) -> int:
        sign = 1
        if self.peek().kind == "MINUS":
            self.take()
            sign = -1
        return sign * int(self.expect("INT").text)

    # -- value combination ---------------------------------------------------

    def lift(self, v):
        return self.ctx.one.scale(v) if _is_scalar(v) else v

    def add(self, a, b, pos: int):
        if _is_scalar(a) and _is_scalar(b):
            return a + b
        return self.lift(a) + self.lift(b)

    def negate(self, v):
        return -v if _is_scalar(v) else v.scale(-ONE)

    def mul(self, a, b, pos: int):
        if _is_scalar(a) and _is_scalar(b):
            return a * b
        if _is_scalar(a):
            return b.scale(a)
        if _is_scalar(b):
            return a.scale(b)
        return a * b

    def div(self, a, b, pos: int):
        if not _is_scalar(b):
            raise ParseError("division is only defined by scalars", pos)
        if not b:
            raise ParseError("division by zero", pos)
        return a / b if _is_scalar(a) else a.scale(ONE / b)

    def power(self, v, name, num: int, den: int, pos: int):
        if den == 2:
            if not (_is_scalar(v) and v == Q):
                raise ParseError("half-integer exponents apply to q only", pos)
            return s_pow(num)
        if den != 1:
            raise ParseError("exponent denominator must be 1 or 2", pos)
        if _is_scalar(v):
            return v ** num
        if num < 0:
            if name is not None and self.ctx.inverse is not None:
                try:
                    return self.ctx.inverse(name, -num)
                except KeyError:
                    pass
            raise ParseError("negative powers are not available here", pos)
        out = self.ctx.one
        for _ in range(num):
            out = out * v
        return out


def parse_expression(text: str, ctx: Context):
    """Parses text in the given algebra context.

    Returns a Scalar when the expression involves no generator, else an
    element of the context's algebra.
    """
    p = _Parser(tokenize(text), ctx)
    v = p.expr()
    tok = p.peek()
    if tok.kind != "EOF":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
    return v
