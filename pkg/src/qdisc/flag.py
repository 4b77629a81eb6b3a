"""Quantum SL(2) functions, the spherical subalgebra, and its localization.

The coordinate algebra has generators t11, t12, t21, t22 with

    t11 t12 = q t12 t11,   t11 t21 = q t21 t11,
    t12 t22 = q t22 t12,   t21 t22 = q t22 t21,
    t12 t21 = t21 t12,
    t22 t11 = q^(-2) t11 t22 + (1 - q^(-2)),
    t11 t22 - q t12 t21 = 1,

and carries the left-regular action

    E: t12 -> t11, t22 -> t21;   F: t11 -> t12, t21 -> t22;
    K: t11, t21 -> q ., t12, t22 -> q^(-1) .,

extended to words by the coproduct legs.  The spherical subalgebra is
generated by x = t11^2, y = t11 t12, w = t12^2; its elements live on the
basis t11^i t12^j with i + j even, where

    (i, j) (i', j') = q^(-j i') (i + i', j + j').

Localizing at y is an Ore extension: m y^k = q^(k (i - j)) y^k m, so
fractions y^(-j) m with a canonical stripped form give a well-defined
algebra.  The element zl = y^(-1) x is invertible there with inverse
q y^(-1) w, and rescaling the disc coordinate by q^(1/2) embeds the
one-variable Laurent carrier into the localization compatibly with the
action.
"""

from __future__ import annotations

from functools import lru_cache

from .scalar import Scalar, ZERO, ONE, s_pow, q_pow
from .ncpoly import NCExpr, Presentation, Generator
from .uqsl2 import UEl, Mono
from . import linalg

T_NAMES = ("t11", "t12", "t21", "t22")

# K-weight exponent per letter: K t = q^(weight) t
_KW = {"t11": 1, "t21": 1, "t12": -1, "t22": -1}

_E_IMG = {"t12": "t11", "t22": "t21"}
_F_IMG = {"t11": "t12", "t21": "t22"}


@lru_cache(maxsize=1)
def flag() -> Presentation:
    gens = [Generator(n, star=n) for n in T_NAMES]
    qi = q_pow(-1)
    rules = [
        (("t12", "t11"), NCExpr.word("t11", "t12", coeff=qi)),
        (("t21", "t11"), NCExpr.word("t11", "t21", coeff=qi)),
        (("t22", "t12"), NCExpr.word("t12", "t22", coeff=qi)),
        (("t22", "t21"), NCExpr.word("t21", "t22", coeff=qi)),
        (("t21", "t12"), NCExpr.word("t11", "t22", coeff=qi) - NCExpr.scalar(qi)),
        (("t12", "t21"), NCExpr.word("t11", "t22", coeff=qi) - NCExpr.scalar(qi)),
        (("t22", "t11"), NCExpr.word("t11", "t22", coeff=q_pow(-2))
            + NCExpr.scalar(ONE - q_pow(-2))),
    ]
    return Presentation(gens, rules, name="quantum-sl2")


# ---------------------------------------------------------------------------
# left-regular action on words
# ---------------------------------------------------------------------------

def k_weight(word: tuple[str, ...]) -> int:
    return sum(_KW[t] for t in word)


def regular_act_word(gen: str, word: tuple[str, ...]) -> NCExpr:
    """Free-level action of one generator on a word; descends to the quotient."""
    if gen in ("K", "Kinv"):
        sign = 1 if gen == "K" else -1
        return NCExpr.word(*word, coeff=q_pow(sign * k_weight(word)))
    if not word:
        return NCExpr.zero()
    head, last = word[:-1], word[-1]
    if gen == "E":
        # E(h t) = (E h) t + (K h) (E t)
        out = regular_act_word("E", head) * NCExpr.word(last)
        img = _E_IMG.get(last)
        if img is not None:
            out = out + NCExpr.word(*head, img, coeff=q_pow(k_weight(head)))
        return out
    if gen == "F":
        # F(h t) = (F h) (Kinv t) + h (F t)
        out = (regular_act_word("F", head) * NCExpr.word(last)).scale(
            q_pow(-_KW[last]))
        img = _F_IMG.get(last)
        if img is not None:
            out = out + NCExpr.word(*head, img)
        return out
    raise ValueError(f"unknown generator {gen!r}")


def regular_act(gen: str, e: NCExpr) -> NCExpr:
    out = NCExpr.zero()
    for w, c in e.terms.items():
        out = out + regular_act_word(gen, w).scale(c)
    return out


def regular_act_u(u: UEl, e: NCExpr) -> NCExpr:
    """PBW element acting; result is reduced to normal form."""
    p = flag()
    out = NCExpr.zero()
    for (a, b, c), coef in u.terms.items():
        cur = e
        for _ in range(c):
            cur = regular_act("E", cur)
        for _ in range(abs(b)):
            cur = regular_act("K" if b > 0 else "Kinv", cur)
        for _ in range(a):
            cur = regular_act("F", cur)
        out = out + cur.scale(coef)
    return p.normal_form(out)


def relations_killed() -> bool:
    """The action of E, F, K maps every defining relation into the ideal."""
    p = flag()
    for lead, rhs in p.rules:
        rel = NCExpr.word(*lead) - rhs
        for gen in ("E", "F", "K", "Kinv"):
            if p.normal_form(regular_act(gen, rel)):
                return False
    return True


# ---------------------------------------------------------------------------
# spherical subalgebra on the basis t11^i t12^j, i + j even
# ---------------------------------------------------------------------------

SKey = tuple[int, int]


class SphericalElement:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[SKey, Scalar] | None = None):
        t = {}
        for (i, j), c in (terms or {}).items():
            if (i + j) % 2:
                raise ValueError("spherical monomials have even total degree")
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if c:
                t[(i, j)] = c
        self.terms = t

    @staticmethod
    def mono(i: int, j: int, coef: Scalar = ONE) -> "SphericalElement":
        return SphericalElement({(i, j): coef})

    @staticmethod
    def from_xyw(a: int, b: int, c: int, coef: Scalar = ONE) -> "SphericalElement":
        """x^a y^b w^c on the t-basis, x = t11^2, y = t11 t12, w = t12^2."""
        tw = -(b * (b - 1)) // 2
        return SphericalElement.mono(2 * a + b, b + 2 * c, coef * q_pow(tw))

    @staticmethod
    def one() -> "SphericalElement":
        return SphericalElement.mono(0, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SphericalElement) and self.terms == other.terms

    def __add__(self, other: "SphericalElement") -> "SphericalElement":
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k, ZERO) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        out = SphericalElement.__new__(SphericalElement)
        out.terms = t
        return out

    def __sub__(self, other: "SphericalElement") -> "SphericalElement":
        return self + other.scale(-ONE)

    def scale(self, c: Scalar) -> "SphericalElement":
        out = SphericalElement.__new__(SphericalElement)
        out.terms = {k: v * c for k, v in self.terms.items()} if c else {}
        return out

    def __mul__(self, other: "SphericalElement") -> "SphericalElement":
        out: dict[SKey, Scalar] = {}
        for (i, j), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i + i2, j + j2)
                v = out.get(key, ZERO) + c1 * c2 * q_pow(-j * i2)
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        res = SphericalElement.__new__(SphericalElement)
        res.terms = out
        return res

    def to_ncexpr(self) -> NCExpr:
        out = NCExpr.zero()
        for (i, j), c in self.terms.items():
            out = out + NCExpr.word(*(("t11",) * i + ("t12",) * j), coeff=c)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (i, j) in sorted(self.terms, key=lambda k: (k[0] + k[1], k)):
            mono = []
            if i:
                mono.append(f"t11^{i}" if i > 1 else "t11")
            if j:
                mono.append(f"t12^{j}" if j > 1 else "t12")
            m = " ".join(mono) if mono else "1"
            bits.append(f"({self.terms[(i, j)]})*{m}")
        return " + ".join(bits)

    __repr__ = __str__


X = SphericalElement.mono(2, 0)
Y = SphericalElement.mono(1, 1)
W = SphericalElement.mono(0, 2)


def _q2_ladder(n: int, inverse: bool) -> Scalar:
    """[n] in base q^(-2) or q^2: 1 + t + ... + t^(n-1)."""
    t = q_pow(-2) if inverse else q_pow(2)
    acc = ZERO
    p = ONE
    for _ in range(n):
        acc = acc + p
        p = p * t
    return acc


def spherical_gen_act(gen: str, key: SKey) -> dict[SKey, Scalar]:
    """Closed form of the regular action on t11^i t12^j."""
    i, j = key
    if gen == "K":
        return {key: q_pow(i - j)}
    if gen == "Kinv":
        return {key: q_pow(j - i)}
    if gen == "E":
        if j == 0:
            return {}
        return {(i + 1, j - 1): q_pow(i) * _q2_ladder(j, inverse=True)}
    if gen == "F":
        if i == 0:
            return {}
        return {(i - 1, j + 1): q_pow(j) * _q2_ladder(i, inverse=True)}
    raise ValueError(f"unknown generator {gen!r}")


def spherical_act(gen: str, e: SphericalElement) -> SphericalElement:
    out: dict[SKey, Scalar] = {}
    for key, c in e.terms.items():
        for k2, w in spherical_gen_act(gen, key).items():
            v = out.get(k2, ZERO) + c * w
            if v:
                out[k2] = v
            else:
                out.pop(k2, None)
    res = SphericalElement.__new__(SphericalElement)
    res.terms = out
    return res


def spherical_act_u(u: UEl, e: SphericalElement) -> SphericalElement:
    out = SphericalElement()
    for (a, b, c), coef in u.terms.items():
        cur = e
        for _ in range(c):
            cur = spherical_act("E", cur)
        for _ in range(abs(b)):
            cur = spherical_act("K" if b > 0 else "Kinv", cur)
        for _ in range(a):
            cur = spherical_act("F", cur)
        out = out + cur.scale(coef)
    return out


def spherical_matches_engine(max_degree: int) -> bool:
    """Closed-form action equals the word-level action on small monomials."""
    p = flag()
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            if (i + j) % 2:
                continue
            e = SphericalElement.mono(i, j)
            for gen in ("E", "F", "K", "Kinv"):
                lhs = p.normal_form(spherical_act(gen, e).to_ncexpr())
                rhs = regular_act_u(
                    {"E": UEl.mono(0, 0, 1), "F": UEl.mono(1, 0, 0),
                     "K": UEl.mono(0, 1, 0), "Kinv": UEl.mono(0, -1, 0)}[gen],
                    e.to_ncexpr())
                if lhs != rhs:
                    return False
    return True


def y_commutation_chain() -> tuple[Scalar, Scalar, Scalar]:
    """(lambda_x, lambda_y, lambda_w) with y g = lambda_g g y."""
    out = []
    for g, key in ((X, (2, 0)), (Y, (1, 1)), (W, (0, 2))):
        prod = Y * g
        back = g * Y
        k = (key[0] + 1, key[1] + 1)
        out.append(prod.terms[k] / back.terms[k])
    return tuple(out)


def component_rank(n: int) -> int:
    """Rank over Q(s) of the products x^a y^b w^c with a + b + c = n."""
    keys = sorted({(2 * a + b, b + 2 * (n - a - b))
                   for a in range(n + 1) for b in range(n + 1 - a)})
    index = {k: t for t, k in enumerate(keys)}
    rows = []
    for a in range(n + 1):
        for b in range(n + 1 - a):
            e = SphericalElement.from_xyw(a, b, n - a - b)
            row = [ZERO] * len(keys)
            for k, c in e.terms.items():
                row[index[k]] = c
            rows.append(row)
    return linalg.rank(rows)


# ---------------------------------------------------------------------------
# localization at y
# ---------------------------------------------------------------------------

class LocElement:
    """y^(-j) num in canonical form: num not left-divisible by y."""

    __slots__ = ("j", "num")

    def __init__(self, j: int, num: SphericalElement):
        if j < 0:
            raise ValueError("y-exponent must be nonnegative")
        self.j = j
        self.num = num
        self._canonicalize()

    def _canonicalize(self) -> None:
        while self.j > 0 and self.num and all(
                i >= 1 and jj >= 1 for (i, jj) in self.num.terms):
            stripped: dict[SKey, Scalar] = {}
            for (i, jj), c in self.num.terms.items():
                # t11^i t12^jj = q^(i-1) y t11^(i-1) t12^(jj-1)
                stripped[(i - 1, jj - 1)] = c * q_pow(i - 1)
            num = SphericalElement.__new__(SphericalElement)
            num.terms = stripped
            self.num = num
            self.j -= 1
        if not self.num:
            self.j = 0

    @staticmethod
    def of(num: SphericalElement, j: int = 0) -> "LocElement":
        return LocElement(j, num)

    @staticmethod
    def one() -> "LocElement":
        return LocElement(0, SphericalElement.one())

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LocElement) and self.j == other.j
                and self.num == other.num)

    def __add__(self, other: "LocElement") -> "LocElement":
        # rewrite over the larger y-power: y^(-j) n = y^(-J) y^(J-j) n
        J = max(self.j, other.j)
        return LocElement(J, self._lift(J) + other._lift(J))

    def _lift(self, J: int) -> SphericalElement:
        k = J - self.j
        if k == 0:
            return self.num
        yk = Y
        for _ in range(k - 1):
            yk = yk * Y
        return yk * self.num

    def __sub__(self, other: "LocElement") -> "LocElement":
        return self + other.scale(-ONE)

    def scale(self, c: Scalar) -> "LocElement":
        return LocElement(self.j, self.num.scale(c))

    def __mul__(self, other: "LocElement") -> "LocElement":
        # num1 y^(-j2) = y^(-j2) twist(num1), twisting (i,jj) by q^(j2 (jj-i))
        twisted: dict[SKey, Scalar] = {}
        for (i, jj), c in self.num.terms.items():
            twisted[(i, jj)] = c * q_pow(other.j * (jj - i))
        tnum = SphericalElement.__new__(SphericalElement)
        tnum.terms = twisted
        return LocElement(self.j + other.j, tnum * other.num)

    def degree(self) -> int | None:
        """Homogeneous degree (i + jj)/2 - j, or None if mixed."""
        degs = {(i + jj) // 2 - self.j for (i, jj) in self.num.terms}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None

    def __str__(self) -> str:
        if not self.num:
            return "0"
        pre = "" if self.j == 0 else (f"y^(-{self.j}) " if self.j > 1 else "y^(-1) ")
        return f"{pre}({self.num})"

    __repr__ = __str__


Z_LOC = LocElement(1, SphericalElement.mono(2, 0))            # y^-1 x
Z_PRIME = LocElement(1, SphericalElement.mono(0, 2, q_pow(1)))  # q y^-1 w

_E_YINV = LocElement(2, SphericalElement.mono(2, 0, -q_pow(-1)))
_F_YINV = LocElement(2, SphericalElement.mono(0, 2, -q_pow(3)))


def loc_act(gen: str, e: LocElement) -> LocElement:
    if gen in ("K", "Kinv"):
        sign = 1 if gen == "K" else -1
        out: dict[SKey, Scalar] = {}
        for (i, jj), c in e.num.terms.items():
            out[(i, jj)] = c * q_pow(sign * (i - jj))
        num = SphericalElement.__new__(SphericalElement)
        num.terms = out
        return LocElement(e.j, num)
    if e.j == 0:
        return LocElement(0, spherical_act(gen, e.num))
    rest = LocElement(e.j - 1, e.num)
    if gen == "E":
        # E(y^-1 r) = E(y^-1) r + K(y^-1) E(r); K fixes y
        return _E_YINV * rest + _yinv_times(loc_act("E", rest))
    if gen == "F":
        # F(y^-1 r) = F(y^-1) Kinv(r) + y^-1 F(r)
        return _F_YINV * loc_act("Kinv", rest) + _yinv_times(loc_act("F", rest))
    raise ValueError(f"unknown generator {gen!r}")


def _yinv_times(e: LocElement) -> LocElement:
    # y^-1 (y^-j n) = y^-(j+1) n
    return LocElement(e.j + 1, e.num)


def loc_act_u(u: UEl, e: LocElement) -> LocElement:
    out = LocElement(0, SphericalElement())
    for (a, b, c), coef in u.terms.items():
        cur = e
        for _ in range(c):
            cur = loc_act("E", cur)
        for _ in range(abs(b)):
            cur = loc_act("K" if b > 0 else "Kinv", cur)
        for _ in range(a):
            cur = loc_act("F", cur)
        out = out + cur.scale(coef)
    return out


def ore_witness(i: int, jj: int, k: int) -> bool:
    """m y^k = q^(k (i - jj)) y^k m for the monomial m = t11^i t12^jj."""
    m = SphericalElement.mono(i, jj)
    yk = SphericalElement.one()
    for _ in range(k):
        yk = yk * Y
    return m * yk == (yk * m).scale(q_pow(k * (i - jj)))


def z_loc_power(n: int) -> LocElement:
    """zl^n for any integer n, using the inverse for n < 0."""
    base = Z_LOC if n >= 0 else Z_PRIME
    out = LocElement.one()
    for _ in range(abs(n)):
        out = out * base
    return out


def laurent_action_match(nmax: int) -> bool:
    """phi(z^n) = q^(n/2) zl^n intertwines the one-variable action."""
    from .modalg import holo_gen_act
    for n in range(-nmax, nmax + 1):
        phi_n = z_loc_power(n).scale(s_pow(n))
        for gen in ("E", "F", "K", "Kinv"):
            lhs = loc_act(gen, phi_n)
            rhs = LocElement(0, SphericalElement())
            for m, c in holo_gen_act(gen, n).items():
                rhs = rhs + z_loc_power(m).scale(s_pow(m) * c)
            if lhs != rhs:
                return False
    return True


def quasi_commute(gen: str) -> Scalar:
    """lambda with y g = lambda g y, for g in {x, y, w}."""
    lx, ly, lw = y_commutation_chain()
    try:
        return {"x": lx, "y": ly, "w": lw}[gen]
    except KeyError:
        raise ValueError(f"unknown spherical generator {gen!r}") from None


def omega_subalgebra(degree_bound: int) -> list[LocElement]:
    """Canonical basis of the degree-0 part with y-exponent <= bound.

    Comes out as the Laurent monomials zl^n, |n| <= bound: after the
    canonical strip a degree-0 monomial y^(-j) t11^i t12^jj has i = 2j
    or jj = 2j, which is zl^j or zl'^j up to a scalar.
    """
    basis = [z_loc_power(n) for n in range(-degree_bound, degree_bound + 1)]
    for e in basis:
        if len(e.num.terms) != 1:
            raise AssertionError("zl powers must stay monomial")
        ((i, jj),) = e.num.terms
        if (i + jj) != 2 * e.j:
            raise AssertionError("zl powers must have degree 0")
    return basis


def regular_module():
    """C[SL(2)]_q with the right-translation action, as an ActionModule."""
    from .modalg import ActionModule
    p = flag()

    def basis(bound: int) -> list[NCExpr]:
        out = []
        for d in range(bound + 1):
            out += [NCExpr.word(*w) for w in p.normal_words(d)]
        return out

    return ActionModule("qsl2", basis, regular_act_u,
                        lambda f, g: p.normal_form(f * g), NCExpr.one())


def localized_module():
    """The y-localization with the extended action, as an ActionModule.

    Basis elements are y^(-j) m with m a spherical monomial; the size of
    one is max(j, spherical degree), so a degree bound of 4 covers the
    whole j <= 2, degree <= 2 window in pairs.
    """
    from .modalg import ActionModule

    def basis(bound: int) -> list[LocElement]:
        jmax = min(bound // 2, 2)
        out = []
        for j in range(jmax + 1):
            for d in range(2 * min(bound // 2, 2) + 1):
                for i in range(d + 1):
                    if (i + (d - i)) % 2 == 0:
                        out.append(LocElement(j, SphericalElement.mono(i, d - i)))
        return out

    def size(e: LocElement) -> int:
        sdeg = max(((i + jj) + 1) // 2 for (i, jj) in e.num.terms) \
            if e.num.terms else 0
        return max(e.j, sdeg)

    return ActionModule("localized", basis, loc_act_u,
                        lambda f, g: f * g, LocElement.one(), size=size)
