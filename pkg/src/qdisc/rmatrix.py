"""Braided multiplication on the quantum disc.

The braiding acts on two-fold tensors of disc elements as

    R = (1 + (q^(-1) - q) E ox F) o q^(-H ox H / 2),

where q^(-H ox H / 2) scales a pair of weight vectors by
q^(-wt1 * wt2 / 2) and z, z* carry weights +2, -2.  The formula is the
first-order truncation of the universal braiding; it is applied only
where the second-order term (E^2 ox F^2 and beyond) annihilates, and
raises otherwise.

Crossing z* past z with the flipped braiding recovers the defining
relation of the disc, so the straightening rule can be *derived* here
and compared against the presentation that the rewrite engine uses.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, ONE, q_pow
from .ncpoly import NCExpr, Presentation, Generator, disc
from .modalg import ExtElement, act, _dinc
from .uqsl2 import UEl

_E = UEl.mono(0, 0, 1)
_F = UEl.mono(1, 0, 0)

Key = tuple[int, int]


class DiscTensor:
    """Combination of pairs (z^a (z*)^b) ox (z^c (z*)^d)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[Key, Key], Scalar] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @staticmethod
    def pair(left: Key, right: Key, coef: Scalar = ONE) -> "DiscTensor":
        return DiscTensor({(left, right): coef})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, DiscTensor) and self.terms == other.terms

    def __add__(self, other: "DiscTensor") -> "DiscTensor":
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k, ZERO) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return DiscTensor(t)

    def scale(self, c: Scalar) -> "DiscTensor":
        return DiscTensor({k: v * c for k, v in self.terms.items()} if c else {})

    def flip(self) -> "DiscTensor":
        return DiscTensor({(r, l): c for (l, r), c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (l, r) in sorted(self.terms):
            bits.append(f"({self.terms[(l, r)]})*[{_key_str(l)} ox {_key_str(r)}]")
        return " + ".join(bits)

    __repr__ = __str__


def _key_str(k: Key) -> str:
    a, b = k
    p = []
    if a:
        p.append("z" if a == 1 else f"z^{a}")
    if b:
        p.append("z*" if b == 1 else f"(z*)^{b}")
    return " ".join(p) if p else "1"


def key_weight(k: Key) -> int:
    a, b = k
    return 2 * (a - b)


def cartan_twist(t: DiscTensor) -> DiscTensor:
    out: dict[tuple[Key, Key], Scalar] = {}
    for (l, r), c in t.terms.items():
        w = key_weight(l) * key_weight(r)
        if w % 2:
            raise ValueError("odd weight product")
        _dinc(out, (l, r), c * q_pow(-w // 2))
    return DiscTensor(out)


def _component_act(u: UEl, k: Key) -> dict[Key, Scalar]:
    img = act(u, ExtElement.pol_mono(*k))
    if img.fin:
        raise AssertionError("action left the polynomial part")
    return img.pol


def ef_apply(t: DiscTensor) -> DiscTensor:
    """(E ox F) componentwise."""
    out: dict[tuple[Key, Key], Scalar] = {}
    for (l, r), c in t.terms.items():
        le = _component_act(_E, l)
        rf = _component_act(_F, r)
        for lk, lc in le.items():
            for rk, rc in rf.items():
                _dinc(out, (lk, rk), c * lc * rc)
    return DiscTensor(out)


def r_apply(t: DiscTensor, order: int = 1) -> DiscTensor:
    """Cartan twist plus the E-F correction, truncated at the given order.

    On the tensors in scope the n >= 2 terms of the exponential must
    vanish; if they do not, the truncation would be wrong and this
    raises rather than return a silently short answer.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    tw = cartan_twist(t)
    first = ef_apply(tw)
    if ef_apply(first):
        raise ValueError("second-order braiding terms do not vanish here")
    return tw + first.scale(q_pow(-1) - q_pow(1))


def braid(t: DiscTensor) -> DiscTensor:
    """flip o R, the braiding proper."""
    return r_apply(t).flip()


# ---------------------------------------------------------------------------
# deriving the straightening rule
# ---------------------------------------------------------------------------

def derived_crossing() -> DiscTensor:
    """Braiding of z* ox z, the crossing that straightens a disc word."""
    return braid(DiscTensor.pair((0, 1), (1, 0)))


def derived_rule() -> NCExpr:
    """The braiding of z* ox z, multiplied out to a combination of words."""
    out = NCExpr.zero()
    for ((a, b), (c, d)), coef in derived_crossing().terms.items():
        word = ("z",) * a + ("z*",) * b + ("z",) * c + ("z*",) * d
        out = out + NCExpr.word(*word, coeff=coef)
    return out


def derived_presentation() -> Presentation:
    """Disc presentation rebuilt from the braiding instead of by hand."""
    z = Generator("z", star="z*", weight=(2,))
    zs = Generator("z*", star="z", weight=(-2,))
    return Presentation([z, zs], [(("z*", "z"), derived_rule())])


def matches_engine_presentation() -> bool:
    """The derived rule equals the hand-written one, exactly."""
    p = disc()
    lead = ("z*", "z")
    rule_rhs = next(rhs for lw, rhs in p.rules if lw == lead)
    return derived_rule() == rule_rhs


def braided_multiply(e1: ExtElement, e2: ExtElement) -> ExtElement:
    """Product of polynomial disc elements through the derived presentation."""
    if e1.fin or e2.fin:
        raise ValueError("braided route covers the polynomial part only")
    p = derived_presentation()
    out: dict[Key, Scalar] = {}
    for (a, b), c1 in e1.pol.items():
        for (c, d), c2 in e2.pol.items():
            word = ("z",) * a + ("z*",) * b + ("z",) * c + ("z*",) * d
            nf = p.normal_form(NCExpr.word(*word))
            for w, coef in nf.terms.items():
                i = sum(1 for x in w if x == "z")
                _dinc(out, (i, len(w) - i), c1 * c2 * coef)
    return ExtElement(out, None)
