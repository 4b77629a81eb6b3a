"""Exact arithmetic in Q(s), the rational function field in s = q^(1/2).

A Scalar is a reduced fraction num/den of integer-coefficient polynomials
in s.  The deformation parameter q is the alias s^2, so half-integer powers
like q^(-3/2) stay exact.  Canonical form: gcd(num, den) = 1 in Z[s]
(integer content included) and den has a positive leading coefficient, so
equality of Scalars is literal tuple equality and hashing is cheap.

Numeric evaluation at a rational q0 in (0,1) is kept out of the symbolic
core.  It is exact when the scalar involves only integer powers of q, or
when sqrt(q0) is rational; otherwise the caller must explicitly request a
fixed-precision rational approximation of sqrt(q0), or use the float path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce


class PoleError(ZeroDivisionError):
    """Evaluation at a zero of the denominator."""


# ---------------------------------------------------------------------------
# dense integer polynomials in s, coefficient tuples, low degree first,
# no trailing zeros; the zero polynomial is the empty tuple
# ---------------------------------------------------------------------------

def _trim(cs) -> tuple:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: tuple) -> tuple:
    return tuple(-c for c in a)


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if a == (1,):
        return b
    if b == (1,):
        return a
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _pcontent(a: tuple) -> int:
    return reduce(math.gcd, (abs(c) for c in a), 0)


def _pprimitive(a: tuple) -> tuple:
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    c = _pcontent(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def _pprem(a: tuple, b: tuple):
    """Iterated pseudo-remainder of a by b (correct up to integer content)."""
    lb = b[-1]
    db = len(b) - 1
    r = list(a)
    while True:
        rt = _trim(r)
        if not rt or len(rt) - 1 < db:
            return rt
        lr = rt[-1]
        dr = len(rt) - 1
        r = [lb * c for c in rt]
        for j, cb in enumerate(b):
            r[dr - db + j] -= lr * cb


def _pgcd(a: tuple, b: tuple) -> tuple:
    """gcd in Z[s], content included, positive leading coefficient."""
    if not a:
        return _abs_poly(b)
    if not b:
        return _abs_poly(a)
    ca, cb = _pcontent(a), _pcontent(b)
    A = tuple(c // ca for c in a)
    B = tuple(c // cb for c in b)
    while B:
        A, B = B, _pprimitive(_pprem(A, B))
    g = _pprimitive(A)
    c = math.gcd(ca, cb)
    if c != 1:
        g = tuple(x * c for x in g)
    return g


def _abs_poly(a: tuple) -> tuple:
    return _pneg(a) if a and a[-1] < 0 else a


def _pdivexact(a: tuple, b: tuple) -> tuple:
    """Exact division in Z[s]; b must divide a."""
    if not a:
        return ()
    if b == (1,):
        return a
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    r = [Fraction(c) for c in a]
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] / lb
        if c:
            for j, cb in enumerate(b):
                r[k + j] -= c * cb
        if c.denominator != 1:
            raise ArithmeticError("inexact polynomial division")
        q[k] = int(c)
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _peval(a: tuple, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _peval_float(a: tuple, x: float) -> float:
    acc = 0.0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _is_even(a: tuple) -> bool:
    return all(c == 0 for c in a[1::2])


def _even_part_in_q(a: tuple) -> tuple:
    # s^(2k) -> q^k; caller guarantees _is_even(a)
    return a[0::2]


_P_ONE = (1,)


def _sqrt_exact(x: Fraction):
    """sqrt(x) as a Fraction, or None when x is not a rational square."""
    if x < 0:
        return None
    pn, pd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def _sqrt_approx(x: Fraction, digits: int) -> Fraction:
    scale = 10 ** digits
    return Fraction(math.isqrt((x.numerator * scale * scale) // x.denominator), scale)


# ---------------------------------------------------------------------------
# the field element
# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q(s), stored as a reduced integer-polynomial fraction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_P_ONE):
        if isinstance(num, int):
            num = (num,)
        if isinstance(den, int):
            den = (den,)
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(s)")
        if not num:
            self.num, self.den = (), _P_ONE
            return
        if den != _P_ONE:
            g = _pgcd(num, den)
            if g != _P_ONE:
                num = _pdivexact(num, g)
                den = _pdivexact(den, g)
            if den[-1] < 0:
                num, den = _pneg(num), _pneg(den)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> "Scalar":
        # internal: operands already in canonical form
        self = object.__new__(cls)
        self.num, self.den = num, den
        return self

    @classmethod
    def of(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls._raw((x,), _P_ONE) if x else ZERO
        if isinstance(x, Fraction):
            return cls((x.numerator,), (x.denominator,))
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == _P_ONE and self.den == _P_ONE

    # -- ring/field operations ----------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        if self.den == _P_ONE and other.den == _P_ONE:
            return Scalar._raw(_padd(self.num, other.num), _P_ONE)
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(_pneg(self.num), self.den)

    def __sub__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.of(other) + (-self)

    def __mul__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1 == _P_ONE and d2 == _P_ONE:
            return Scalar._raw(_pmul(n1, n2), _P_ONE)
        # cross-reduce; inputs are reduced, so the product then is too
        g1 = _pgcd(n1, d2)
        if g1 != _P_ONE:
            n1, d2 = _pdivexact(n1, g1), _pdivexact(d2, g1)
        g2 = _pgcd(n2, d1)
        if g2 != _P_ONE:
            n2, d1 = _pdivexact(n2, g2), _pdivexact(d1, g2)
        return Scalar._raw(_pmul(n1, n2), _pmul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(s)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return Scalar._raw(num, den)

    def __truediv__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.of(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation ----------------------------------------------------------

    def eval_at_s(self, s0: Fraction) -> Fraction:
        dv = _peval(self.den, s0)
        if dv == 0:
            raise PoleError(f"pole at s = {s0}")
        return _peval(self.num, s0) / dv

    def eval_at_q(self, q0, sqrt_digits: int | None = None) -> Fraction:
        """Exact rational value at q = q0.

        Exact whenever only integer powers of q occur or sqrt(q0) is
        rational; otherwise sqrt_digits must be given and sqrt(q0) is
        replaced by its fixed-precision rational approximation.
        """
        q0 = Fraction(q0)
        if _is_even(self.num) and _is_even(self.den):
            dv = _peval(_even_part_in_q(self.den), q0)
            if dv == 0:
                raise PoleError(f"pole at q = {q0}")
            return _peval(_even_part_in_q(self.num), q0) / dv
        s0 = _sqrt_exact(q0)
        if s0 is None:
            if sqrt_digits is None:
                raise ValueError(
                    f"sqrt({q0}) is irrational and the scalar has half-integer "
                    "q powers; pass sqrt_digits for an approximate evaluation"
                )
            s0 = _sqrt_approx(q0, sqrt_digits)
        return self.eval_at_s(s0)

    def eval_float(self, q0: float) -> float:
        s0 = math.sqrt(q0)
        dv = _peval_float(self.den, s0)
        if dv == 0.0:
            raise PoleError(f"pole at q = {q0}")
        return _peval_float(self.num, s0) / dv

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        if not self.num:
            return "0"
        if self.den == _P_ONE:
            return _poly_str(self.num)
        k = _monic_monomial_degree(self.den)
        if k is not None:
            return _poly_str(self.num, shift=-k)
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def _monic_monomial_degree(p: tuple):
    """Degree k when p == s^k, else None."""
    if p and p[-1] == 1 and all(c == 0 for c in p[:-1]):
        return len(p) - 1
    return None


def _q_power_str(k: int) -> str:
    # power of s as a power of q
    if k == 0:
        return "1"
    if k % 2 == 0:
        e = k // 2
        if e == 1:
            return "q"
        return f"q^{e}" if e > 0 else f"q^({e})"
    return f"q^({k}/2)"


def _poly_str(p: tuple, shift: int = 0) -> str:
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        k = i + shift
        body = _q_power_str(k)
        if k == 0:
            term = str(abs(c))
        elif abs(c) == 1:
            term = body
        else:
            term = f"{abs(c)}*{body}"
        parts.append((c < 0, term))
    first_neg, first_term = parts[0]
    out = ("-" if first_neg else "") + first_term
    for neg, term in parts[1:]:
        out += (" - " if neg else " + ") + term
    return out


# ---------------------------------------------------------------------------
# constants and small helpers
# ---------------------------------------------------------------------------

ZERO = Scalar._raw((), _P_ONE)
ONE = Scalar._raw((1,), _P_ONE)
TWO = Scalar._raw((2,), _P_ONE)
S = Scalar._raw((0, 1), _P_ONE)          # s = q^(1/2)
Q = Scalar._raw((0, 0, 1), _P_ONE)       # q = s^2


def s_pow(k: int) -> Scalar:
    """s^k = q^(k/2) for any integer k."""
    if k >= 0:
        return Scalar._raw((0,) * k + (1,), _P_ONE) if k else ONE
    return Scalar._raw((1,), (0,) * (-k) + (1,))


def q_pow(k: int) -> Scalar:
    return s_pow(2 * k)


def q_int(n: int) -> Scalar:
    """q-integer [n] = (q^n - q^(-n)) / (q - q^(-1))."""
    return (q_pow(n) - q_pow(-n)) / (Q - q_pow(-1))


def q2_int(n: int) -> Scalar:
    """[n] in base q^2: (1 - q^(2n)) / (1 - q^2)."""
    return (ONE - q_pow(2 * n)) / (ONE - q_pow(2))


def q2_factorial(n: int) -> Scalar:
    out = ONE
    for k in range(1, n + 1):
        out = out * q2_int(k)
    return out


def q2_binomial(n: int, k: int) -> Scalar:
    if k < 0 or k > n:
        return ZERO
    return q2_factorial(n) / (q2_factorial(k) * q2_factorial(n - k))
