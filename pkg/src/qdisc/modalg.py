"""Module-algebra actions on the quantum disc and its function carriers.

Carriers:
  * holo / laurent: (Laurent) polynomials in z alone, with the first-order
    q-difference action
        K z^n  = q^(2n) z^n,
        E z^n  = -q^(1/2) (1 - q^(2n))/(1 - q^2)   z^(n+1),
        F z^n  =  q^(1/2) (q^(-2n) - 1)/(q^(-2) - 1) z^(n-1),
    valid for every integer n.
  * antiholo: polynomials in z*, carried over by g = f^* with
    xi g = ((antipode(xi))^* f)^*.
  * disc: normal words z^a (z*)^b, acted on through the coproduct
        E -> E ox 1 + K ox E,   F -> F ox K^-1 + 1 ox F,   K -> K ox K.
  * extended: disc plus the finite part spanned by z^a f0 (z*)^b, where
    f0 is the weight-0 idempotent with f0 z = 0, z* f0 = 0 read against
    the order below, and
        E f0 = -(q^(1/2)/(1 - q^2)) z f0,
        F f0 = -(q^(1/2)/(q^(-2) - 1)) f0 z*.

All products keep normal order, so no rewriting engine is needed here;
the disc presentation is only consulted for (z*)^b z^c straightening.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, ONE, s_pow, q_pow, q2_int, q2_factorial, q2_binomial
from .ncpoly import NCExpr, disc
from .uqsl2 import (UEl, Mono, antipode, coproduct, counit, verma_act_mono,
                    star as uq_star)

GENS = ("E", "F", "K", "Kinv")


# ---------------------------------------------------------------------------
# one-variable actions
# ---------------------------------------------------------------------------

def holo_gen_act(gen: str, n: int) -> dict[int, Scalar]:
    """Action of a generator on z^n, for any integer n."""
    if gen == "K":
        return {n: q_pow(2 * n)}
    if gen == "Kinv":
        return {n: q_pow(-2 * n)}
    if gen == "E":
        c = -s_pow(1) * q2_int(n)
        return {n + 1: c} if c else {}
    if gen == "F":
        c = s_pow(1) * (q_pow(-2 * n) - ONE) / (q_pow(-2) - ONE)
        return {n - 1: c} if c else {}
    raise ValueError(f"unknown generator {gen!r}")


_CONJ_ANTIPODE = {"K": "Kinv", "Kinv": "K", "E": "F", "F": "E"}
_CONJ_SCALE = {"K": ONE, "Kinv": ONE, "E": q_pow(-2), "F": q_pow(2)}


def anti_gen_act(gen: str, n: int) -> dict[int, Scalar]:
    """Action on (z*)^n via xi g = ((antipode(xi))^* f)^* with g = f^*."""
    inner = holo_gen_act(_CONJ_ANTIPODE[gen], n)
    c = _CONJ_SCALE[gen]
    return {m: c * v for m, v in inner.items()}


# ---------------------------------------------------------------------------
# elements of the extended function algebra
# ---------------------------------------------------------------------------

Key = tuple[int, int]


class ExtElement:
    """pol: span of z^a (z*)^b; fin: span of z^a f0 (z*)^b."""

    __slots__ = ("pol", "fin")

    def __init__(self, pol: dict[Key, Scalar] | None = None,
                 fin: dict[Key, Scalar] | None = None):
        self.pol = {k: c for k, c in (pol or {}).items() if c}
        self.fin = {k: c for k, c in (fin or {}).items() if c}

    @staticmethod
    def pol_mono(a: int, b: int, coef: Scalar = ONE) -> "ExtElement":
        return ExtElement({(a, b): coef}, None)

    @staticmethod
    def fin_mono(a: int, b: int, coef: Scalar = ONE) -> "ExtElement":
        return ExtElement(None, {(a, b): coef})

    @staticmethod
    def zero() -> "ExtElement":
        return ExtElement()

    @staticmethod
    def one() -> "ExtElement":
        return ExtElement({(0, 0): ONE}, None)

    def __bool__(self) -> bool:
        return bool(self.pol) or bool(self.fin)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExtElement) and self.pol == other.pol
                and self.fin == other.fin)

    def __add__(self, other: "ExtElement") -> "ExtElement":
        return ExtElement(_dadd(self.pol, other.pol), _dadd(self.fin, other.fin))

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + other.scale(-ONE)

    def scale(self, c: Scalar) -> "ExtElement":
        if not c:
            return ExtElement()
        return ExtElement({k: v * c for k, v in self.pol.items()},
                          {k: v * c for k, v in self.fin.items()})

    def __mul__(self, other: "ExtElement") -> "ExtElement":
        pol: dict[Key, Scalar] = {}
        fin: dict[Key, Scalar] = {}
        for (a, b), c1 in self.pol.items():
            for (cc, d), c2 in other.pol.items():
                for (i, j), w in _straighten(b, cc).items():
                    _dinc(pol, (a + i, j + d), c1 * c2 * w)
        for (a, b), c1 in self.pol.items():
            for (cc, d), c2 in other.fin.items():
                # (z*)^b z^c f0: only the pure-z part of the straightening survives
                for (i, j), w in _straighten(b, cc).items():
                    if j == 0:
                        _dinc(fin, (a + i, d), c1 * c2 * w)
        for (a, b), c1 in self.fin.items():
            for (cc, d), c2 in other.pol.items():
                # f0 (z*)^b z^c: only the pure-z* part survives
                for (i, j), w in _straighten(b, cc).items():
                    if i == 0:
                        _dinc(fin, (a, j + d), c1 * c2 * w)
        for (a, b), c1 in self.fin.items():
            for (cc, d), c2 in other.fin.items():
                sc = scalar_part(b, cc)
                if sc:
                    _dinc(fin, (a, d), c1 * c2 * sc)
        return ExtElement(pol, fin)

    def star(self) -> "ExtElement":
        return ExtElement({(b, a): c for (a, b), c in self.pol.items()},
                          {(b, a): c for (a, b), c in self.fin.items()})

    def degree(self) -> int:
        deg = 0
        for a, b in self.pol:
            deg = max(deg, a + b)
        for a, b in self.fin:
            deg = max(deg, a + b)
        return deg

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for (a, b) in sorted(self.pol, key=lambda k: (k[0] + k[1], k)):
            parts.append(f"({self.pol[(a, b)]})*{_mono_str(a, b, False)}")
        for (a, b) in sorted(self.fin, key=lambda k: (k[0] + k[1], k)):
            parts.append(f"({self.fin[(a, b)]})*{_mono_str(a, b, True)}")
        return " + ".join(parts)

    __repr__ = __str__


def _mono_str(a: int, b: int, with_f0: bool) -> str:
    bits = []
    if a:
        bits.append("z" if a == 1 else f"z^{a}")
    if with_f0:
        bits.append("f0")
    if b:
        bits.append("z^*" if b == 1 else f"(z^*)^{b}")
    return " ".join(bits) if bits else "1"


def _dadd(d1: dict, d2: dict) -> dict:
    out = dict(d1)
    for k, c in d2.items():
        v = out.get(k, ZERO) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _dinc(d: dict, k, c) -> None:
    if not c:
        return
    v = d.get(k, ZERO) + c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


_straighten_cache: dict[Key, dict[Key, Scalar]] = {}


def _straighten(b: int, c: int) -> dict[Key, Scalar]:
    """(z*)^b z^c as a combination of normal words z^i (z*)^j."""
    hit = _straighten_cache.get((b, c))
    if hit is not None:
        return hit
    p = disc()
    e = p.normal_form(NCExpr.word(*(("z*",) * b + ("z",) * c)))
    out: dict[Key, Scalar] = {}
    for w, coef in e.terms.items():
        i = sum(1 for x in w if x == "z")
        out[(i, len(w) - i)] = coef
    _straighten_cache[(b, c)] = out
    return out


def scalar_part(b: int, c: int) -> Scalar:
    """Constant coefficient of (z*)^b z^c; nonzero only when b == c."""
    return _straighten(b, c).get((0, 0), ZERO)


# ---------------------------------------------------------------------------
# actions on the two-sided carriers
# ---------------------------------------------------------------------------

# coproduct legs per generator, leftmost factor acting on the z part
_PAIRS = {
    "E": (("E", None), ("K", "E")),
    "F": (("F", "Kinv"), (None, "F")),
    "K": (("K", "K"),),
    "Kinv": (("Kinv", "Kinv"),),
}

# triple legs for z^a f0 (z*)^b, middle factor acting on f0
_TRIPLES = {
    "E": (("E", None, None), ("K", "E", None), ("K", "K", "E")),
    "F": (("F", "Kinv", "Kinv"), (None, "F", "Kinv"), (None, None, "F")),
    "K": (("K", "K", "K"),),
    "Kinv": (("Kinv", "Kinv", "Kinv"),),
}


def _f0_gen_act(gen: str) -> "ExtElement":
    """Action of a generator on f0 itself."""
    if gen in ("K", "Kinv"):
        return ExtElement.fin_mono(0, 0)
    if gen == "E":
        return ExtElement.fin_mono(1, 0, -(s_pow(1) / (ONE - q_pow(2))))
    if gen == "F":
        return ExtElement.fin_mono(0, 1, -(s_pow(1) / (q_pow(-2) - ONE)))
    raise ValueError(f"unknown generator {gen!r}")


def gen_act(gen: str, e: ExtElement) -> ExtElement:
    """One generator acting on a pol + fin element."""
    out = ExtElement()
    for (a, b), c in e.pol.items():
        for left, right in _PAIRS[gen]:
            zs = holo_gen_act(left, a) if left else {a: ONE}
            ws = anti_gen_act(right, b) if right else {b: ONE}
            for i, ci in zs.items():
                for j, cj in ws.items():
                    _dinc(out.pol, (i, j), c * ci * cj)
    for (a, b), c in e.fin.items():
        for left, mid, right in _TRIPLES[gen]:
            zs = holo_gen_act(left, a) if left else {a: ONE}
            mids = _f0_gen_act(mid) if mid else ExtElement.fin_mono(0, 0)
            ws = anti_gen_act(right, b) if right else {b: ONE}
            for i, ci in zs.items():
                for (da, db), cm in mids.fin.items():
                    for j, cj in ws.items():
                        _dinc(out.fin, (i + da, j + db), c * ci * cm * cj)
    return out


def mono_act(m: Mono, e: ExtElement) -> ExtElement:
    """PBW monomial F^x K^y E^z acting by composition."""
    x, y, z = m
    for _ in range(z):
        e = gen_act("E", e)
    for _ in range(abs(y)):
        e = gen_act("K" if y > 0 else "Kinv", e)
    for _ in range(x):
        e = gen_act("F", e)
    return e


def act(u: UEl, e: ExtElement) -> ExtElement:
    out = ExtElement()
    for m, c in u.terms.items():
        out = out + mono_act(m, e).scale(c)
    return out


# ---------------------------------------------------------------------------
# Laurent carrier in z alone
# ---------------------------------------------------------------------------

class LaurentElement:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Scalar] | None = None):
        self.terms = {n: c for n, c in (terms or {}).items() if c}

    @staticmethod
    def mono(n: int, coef: Scalar = ONE) -> "LaurentElement":
        return LaurentElement({n: coef})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentElement) and self.terms == other.terms

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        return LaurentElement(_dadd(self.terms, other.terms))

    def scale(self, c: Scalar) -> "LaurentElement":
        return LaurentElement({n: v * c for n, v in self.terms.items()} if c else {})

    def __mul__(self, other: "LaurentElement") -> "LaurentElement":
        out: dict[int, Scalar] = {}
        for n, c1 in self.terms.items():
            for m, c2 in other.terms.items():
                _dinc(out, n + m, c1 * c2)
        return LaurentElement(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for n in sorted(self.terms):
            mono = "1" if n == 0 else ("z" if n == 1 else f"z^{n}")
            parts.append(f"({self.terms[n]})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def laurent_gen_act(gen: str, e: LaurentElement) -> LaurentElement:
    out: dict[int, Scalar] = {}
    for n, c in e.terms.items():
        for m, w in holo_gen_act(gen, n).items():
            _dinc(out, m, c * w)
    return LaurentElement(out)


def laurent_act(u: UEl, e: LaurentElement) -> LaurentElement:
    out = LaurentElement()
    for (x, y, z), c in u.terms.items():
        cur = e
        for _ in range(z):
            cur = laurent_gen_act("E", cur)
        for _ in range(abs(y)):
            cur = laurent_gen_act("K" if y > 0 else "Kinv", cur)
        for _ in range(x):
            cur = laurent_gen_act("F", cur)
        out = out + cur.scale(c)
    return out


# ---------------------------------------------------------------------------
# duality with the Verma module
# ---------------------------------------------------------------------------

def gamma_coef(n: int) -> Scalar:
    """<z^n, v_n> = (-q^(1/2))^n [n]!_{q^2}."""
    return (-s_pow(1)) ** n * q2_factorial(n)


def dual_gen_act(gen: str, n: int, depth: int) -> dict[int, Scalar]:
    """Action on z^n induced by <xi f, v> = <f, antipode(xi) v>."""
    u = {"E": UEl.mono(0, 0, 1), "F": UEl.mono(1, 0, 0),
         "K": UEl.mono(0, 1, 0), "Kinv": UEl.mono(0, -1, 0)}[gen]
    su = antipode(u)
    out: dict[int, Scalar] = {}
    for m in range(depth + 1):
        acc = ZERO
        for mono, c in su.terms.items():
            img = verma_act_mono(mono, m)
            w = img.terms.get(n)
            if w:
                acc = acc + c * w
        if acc:
            out[m] = gamma_coef(n) * acc / gamma_coef(m)
    return out


def verma_duality_check(max_degree: int) -> bool:
    """Dual action through the pairing equals the q-difference action."""
    for gen in GENS:
        for n in range(max_degree + 1):
            got = dual_gen_act(gen, n, max_degree + 1)
            want = {m: c for m, c in holo_gen_act(gen, n).items()
                    if m >= 0 and m <= max_degree + 1}
            if got != want:
                return False
    # pairing is multiplicative on the gamma coefficients
    for a in range(max_degree):
        for b in range(max_degree - a):
            if q2_binomial(a + b, b) * gamma_coef(a) * gamma_coef(b) != gamma_coef(a + b):
                return False
    return True


# ---------------------------------------------------------------------------
# carriers as checkable modules
# ---------------------------------------------------------------------------

class CheckReport:
    """Outcome of an exhaustive identity check: count and failure witnesses."""

    __slots__ = ("ok", "checked", "failures")

    def __init__(self, checked: int, failures: list[str]):
        self.ok = not failures
        self.checked = checked
        self.failures = failures

    def __repr__(self) -> str:
        state = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"CheckReport({self.checked} checked, {state})"


class ActionModule:
    """A carrier of the U_q(sl2) action, packaged for the axiom checkers.

    basis(bound) enumerates basis elements of size <= bound; act_u applies
    a full enveloping-algebra element; mul multiplies within the carrier;
    star is the carrier involution where one exists; size measures an
    element for the pair-degree cutoff (defaults to .degree()).
    """

    __slots__ = ("name", "basis", "act_u", "mul", "unit", "star", "size")

    def __init__(self, name, basis, act_u, mul, unit, star=None, size=None):
        self.name = name
        self.basis = basis
        self.act_u = act_u
        self.mul = mul
        self.unit = unit
        self.star = star
        self.size = size if size is not None else (lambda e: e.degree())


def disc_module() -> ActionModule:
    def basis(bound: int) -> list[ExtElement]:
        return [ExtElement.pol_mono(a, b)
                for a in range(bound + 1) for b in range(bound + 1 - a)]
    return ActionModule("disc", basis, act, lambda f, g: f * g,
                        ExtElement.one(), star=lambda e: e.star())


def extended_module() -> ActionModule:
    def basis(bound: int) -> list[ExtElement]:
        out = [ExtElement.pol_mono(a, b)
               for a in range(bound + 1) for b in range(bound + 1 - a)]
        out += [ExtElement.fin_mono(a, b)
                for a in range(bound + 1) for b in range(bound + 1 - a)]
        return out
    return ActionModule("extended", basis, act, lambda f, g: f * g,
                        ExtElement.one(), star=lambda e: e.star())


def _laurent_size(e: LaurentElement) -> int:
    return max((abs(n) for n in e.terms), default=0)


def holo_module() -> ActionModule:
    def basis(bound: int) -> list[LaurentElement]:
        return [LaurentElement.mono(n) for n in range(bound + 1)]
    return ActionModule("holo", basis, laurent_act, lambda f, g: f * g,
                        LaurentElement.mono(0), size=_laurent_size)


def laurent_module() -> ActionModule:
    def basis(bound: int) -> list[LaurentElement]:
        return [LaurentElement.mono(n) for n in range(-bound, bound + 1)]
    return ActionModule("laurent", basis, laurent_act, lambda f, g: f * g,
                        LaurentElement.mono(0), size=_laurent_size)


def antiholo_module() -> ActionModule:
    def basis(bound: int) -> list[ExtElement]:
        return [ExtElement.pol_mono(0, b) for b in range(bound + 1)]
    return ActionModule("antiholo", basis, act, lambda f, g: f * g,
                        ExtElement.one(), star=lambda e: e.star())


_GEN_U = {"E": UEl.mono(0, 0, 1), "F": UEl.mono(1, 0, 0),
          "K": UEl.mono(0, 1, 0), "Kinv": UEl.mono(0, -1, 0)}


def module_algebra_check(m: ActionModule, degree_bound: int) -> CheckReport:
    """xi(fg) = sum xi_(1)(f) xi_(2)(g) over basis pairs, plus unit invariance.

    The right side is assembled from the true coproduct, so this certifies
    the hand-coded leg tables used by the fast action paths.
    """
    failures: list[str] = []
    checked = 0
    basis = m.basis(degree_bound)
    for gname in GENS:
        xi = _GEN_U[gname]
        legs = [(UEl.mono(*m1), UEl.mono(*m2), c)
                for (m1, m2), c in coproduct(xi).terms.items()]
        got = m.act_u(xi, m.unit)
        want = m.unit.scale(counit(xi))
        checked += 1
        if got != want:
            failures.append(f"{m.name}: {gname}(1) != eps({gname})*1")
        for f in basis:
            sf = m.size(f)
            for g in basis:
                if sf + m.size(g) > degree_bound:
                    continue
                lhs = m.act_u(xi, m.mul(f, g))
                rhs = m.unit.scale(ZERO)
                for u1, u2, c in legs:
                    rhs = rhs + m.mul(m.act_u(u1, f), m.act_u(u2, g)).scale(c)
                checked += 1
                if lhs != rhs:
                    failures.append(f"{m.name}: {gname} on pair "
                                    f"({f}, {g}) violates the coproduct rule")
    return CheckReport(checked, failures)


def star_compat_check(m: ActionModule, degree_bound: int) -> CheckReport:
    """(xi f)^* = (antipode(xi))^* f^* over the carrier basis."""
    if m.star is None:
        raise ValueError(f"carrier {m.name!r} has no involution")
    failures: list[str] = []
    checked = 0
    for gname in GENS:
        xi = _GEN_U[gname]
        dual = uq_star(antipode(xi))
        for f in m.basis(degree_bound):
            lhs = m.star(m.act_u(xi, f))
            rhs = m.act_u(dual, m.star(f))
            checked += 1
            if lhs != rhs:
                failures.append(f"{m.name}: ({gname} {f})^* != "
                                f"(S({gname}))^* {f}^*")
    return CheckReport(checked, failures)


def weights(e, carrier: str = "disc") -> dict[int, object]:
    """K-eigencomponents keyed by integer weight (K scales by q^weight).

    Holomorphic carriers must decompose into nonnegative weights and
    antiholomorphic ones into nonpositive weights; violations raise.
    """
    comps: dict[int, object] = {}
    if isinstance(e, LaurentElement):
        for n, c in e.terms.items():
            w = 2 * n
            comps[w] = comps.get(w, LaurentElement()) + LaurentElement.mono(n, c)
    elif isinstance(e, ExtElement):
        for (a, b), c in e.pol.items():
            w = 2 * (a - b)
            comps[w] = comps.get(w, ExtElement()) + ExtElement.pol_mono(a, b, c)
        for (a, b), c in e.fin.items():
            w = 2 * (a - b)
            comps[w] = comps.get(w, ExtElement()) + ExtElement.fin_mono(a, b, c)
    else:
        raise TypeError("unsupported carrier element")
    if carrier == "holo" and any(w < 0 for w in comps):
        raise ValueError("negative weight in a holomorphic element")
    if carrier == "antiholo" and any(w > 0 for w in comps):
        raise ValueError("positive weight in an antiholomorphic element")
    return comps
