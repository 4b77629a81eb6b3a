"""The quantized enveloping algebra of sl(2) over Q(s), s = q^(1/2).

Elements are stored on the PBW basis F^a K^b E^c with a, c >= 0 and b in Z.
Products are computed by straightening with the defining relations

    K E = q^2 E K,   K F = q^-2 F K,   E F - F E = (K - K^-1) / (q - q^-1),

the Hopf structure is

    coproduct(E) = E ox 1 + K ox E,   coproduct(F) = F ox K^-1 + 1 ox F,
    coproduct(K) = K ox K,   counit(E) = counit(F) = 0,   counit(K) = 1,
    antipode(E) = -K^-1 E,  antipode(F) = -F K,  antipode(K) = K^-1,

and the noncompact involution is K^* = K, E^* = -K F, F^* = -E K^-1
(`compact=True` switches to E^* = K F, F^* = E K^-1).

Also provides the Verma module with highest weight 0: basis v_0, v_1, ...
with v_n = F^n v_0, K v_n = q^-2n v_n, E v_n = -[n][n-1] v_{n-1}.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, ONE, q_pow, q_int

Mono = tuple[int, int, int]     # exponents (a, b, c) of F^a K^b E^c

_QDIFF = q_pow(1) - q_pow(-1)   # q - q^-1


class UEl:
    """Element of the quantized enveloping algebra on the PBW basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Scalar] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = c
        self.terms = t

    @staticmethod
    def mono(a: int, b: int, c: int, coef: Scalar = ONE) -> "UEl":
        if a < 0 or c < 0:
            raise ValueError("F and E exponents must be nonnegative")
        return UEl({(a, b, c): coef})

    @staticmethod
    def zero() -> "UEl":
        return UEl()

    @staticmethod
    def one() -> "UEl":
        return UEl({(0, 0, 0): ONE})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, UEl) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "UEl") -> "UEl":
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, ZERO) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        out = UEl.__new__(UEl)
        out.terms = t
        return out

    def __neg__(self) -> "UEl":
        out = UEl.__new__(UEl)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "UEl") -> "UEl":
        return self + (-other)

    def scale(self, c: Scalar) -> "UEl":
        if not c:
            return UEl.zero()
        out = UEl.__new__(UEl)
        out.terms = {m: v * c for m, v in self.terms.items()}
        return out

    def __mul__(self, other: "UEl") -> "UEl":
        acc: dict[Mono, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, w in _mono_mul(m1, m2).items():
                    v = acc.get(m, ZERO) + c * w
                    if v:
                        acc[m] = v
                    else:
                        acc.pop(m, None)
        out = UEl.__new__(UEl)
        out.terms = acc
        return out

    def __pow__(self, n: int) -> "UEl":
        if n < 0:
            raise ValueError("negative power")
        r = UEl.one()
        for _ in range(n):
            r = r * self
        return r

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(x if x >= 0 else -x for x in m), m)):
            cs = str(self.terms[m])
            w = _format_mono(m)
            if cs == "1":
                parts.append(w)
            elif cs == "-1":
                parts.append(f"-{w}" if w != "1" else "-1")
            else:
                simple = " " not in cs and "/" not in cs
                cs = cs if simple else f"({cs})"
                parts.append(f"{cs}*{w}" if w != "1" else cs)
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _format_mono(m: Mono) -> str:
    a, b, c = m
    parts = []
    if a:
        parts.append("F" if a == 1 else f"F^{a}")
    if b:
        parts.append("K" if b == 1 else f"K^{b}")
    if c:
        parts.append("E" if c == 1 else f"E^{c}")
    return " ".join(parts) if parts else "1"


E = UEl.mono(0, 0, 1)
F = UEl.mono(1, 0, 0)
K = UEl.mono(0, 1, 0)
KINV = UEl.mono(0, -1, 0)
ONE_U = UEl.one()


# ---------------------------------------------------------------------------
# straightening
# ---------------------------------------------------------------------------

_times_F_cache: dict[Mono, dict[Mono, Scalar]] = {}


def _mono_times_F(m: Mono) -> dict[Mono, Scalar]:
    """(F^a K^b E^c) F on the PBW basis."""
    hit = _times_F_cache.get(m)
    if hit is not None:
        return hit
    a, b, c = m
    if c == 0:
        out = {(a + 1, b, 0): q_pow(-2 * b)}
    else:
        # E^c F = E^{c-1} F E + E^{c-1} (K - K^-1)/(q - q^-1)
        out: dict[Mono, Scalar] = {}
        for (x, y, z), w in _mono_times_F((a, b, c - 1)).items():
            out[(x, y, z + 1)] = out.get((x, y, z + 1), ZERO) + w
        lo = (a, b, c - 1)
        for mk, wk in ((_mono_times_k(lo, 1)), (_mono_times_k(lo, -1, neg=True))):
            out[mk] = out.get(mk, ZERO) + wk / _QDIFF
        out = {k: v for k, v in out.items() if v}
    _times_F_cache[m] = out
    return out


def _mono_times_k(m: Mono, sign: int, neg: bool = False) -> tuple[Mono, Scalar]:
    """(F^a K^b E^c) K^sign as a single weighted monomial."""
    a, b, c = m
    w = q_pow(-2 * c * sign)
    return (a, b + sign, c), (-w if neg else w)


def _mono_mul(m1: Mono, m2: Mono) -> dict[Mono, Scalar]:
    """Product of two PBW monomials, as a monomial-to-coefficient dict."""
    a, b, c = m2
    cur = {m1: ONE}
    for _ in range(a):
        nxt: dict[Mono, Scalar] = {}
        for m, w in cur.items():
            for mm, ww in _mono_times_F(m).items():
                v = nxt.get(mm, ZERO) + w * ww
                if v:
                    nxt[mm] = v
                else:
                    nxt.pop(mm, None)
        cur = nxt
    if b:
        sign = 1 if b > 0 else -1
        for _ in range(abs(b)):
            cur = dict(_shift_k(m, w, sign) for m, w in cur.items())
    for _ in range(c):
        cur = {(x, y, z + 1): w for (x, y, z), w in cur.items()}
    return cur


def _shift_k(m: Mono, w: Scalar, sign: int) -> tuple[Mono, Scalar]:
    mm, ww = _mono_times_k(m, sign)
    return mm, w * ww


# ---------------------------------------------------------------------------
# Hopf structure
# ---------------------------------------------------------------------------

class Tensor:
    """Element of a tensor power of the algebra, on product PBW monomials."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: dict[tuple[Mono, ...], Scalar] | None = None):
        self.rank = rank
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = c
        self.terms = t

    @staticmethod
    def of(*factors: UEl) -> "Tensor":
        rank = len(factors)
        terms: dict[tuple[Mono, ...], Scalar] = {}
        items = [[(m, c) for m, c in f.terms.items()] for f in factors]
        def rec(i, mono, coef):
            if i == rank:
                terms[mono] = terms.get(mono, ZERO) + coef
                return
            for m, c in items[i]:
                rec(i + 1, mono + (m,), coef * c)
        rec(0, (), ONE)
        return Tensor(rank, terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Tensor) and self.rank == other.rank
                and self.terms == other.terms)

    def __add__(self, other: "Tensor") -> "Tensor":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, ZERO) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        out = Tensor.__new__(Tensor)
        out.rank, out.terms = self.rank, t
        return out

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-ONE)

    def scale(self, c: Scalar) -> "Tensor":
        out = Tensor.__new__(Tensor)
        out.rank = self.rank
        out.terms = {m: v * c for m, v in self.terms.items()} if c else {}
        return out

    def __mul__(self, other: "Tensor") -> "Tensor":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        acc: dict[tuple[Mono, ...], Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                pieces = [_mono_mul(x, y) for x, y in zip(m1, m2)]
                def rec(i, mono, coef):
                    if i == self.rank:
                        v = acc.get(mono, ZERO) + coef
                        if v:
                            acc[mono] = v
                        else:
                            acc.pop(mono, None)
                        return
                    for m, w in pieces[i].items():
                        rec(i + 1, mono + (m,), coef * w)
                rec(0, (), c1 * c2)
        out = Tensor.__new__(Tensor)
        out.rank, out.terms = self.rank, acc
        return out

    def apply_at(self, pos: int, f) -> "Tensor":
        """Replace factor pos through f: Mono -> UEl | Tensor."""
        acc: dict[tuple[Mono, ...], Scalar] = {}
        rank = None
        for m, c in self.terms.items():
            img = f(m[pos])
            for mi, ci in img.terms.items():
                block = mi if isinstance(img, Tensor) else (mi,)
                key = m[:pos] + block + m[pos + 1:]
                rank = len(key)
                v = acc.get(key, ZERO) + c * ci
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        out = Tensor.__new__(Tensor)
        out.rank = rank if rank is not None else self.rank
        out.terms = acc
        return out


_coproduct_cache: dict[Mono, Tensor] = {}

_CO_E = Tensor(2, {((0, 0, 1), (0, 0, 0)): ONE, ((0, 1, 0), (0, 0, 1)): ONE})
_CO_F = Tensor(2, {((1, 0, 0), (0, -1, 0)): ONE, ((0, 0, 0), (1, 0, 0)): ONE})
_CO_K = Tensor(2, {((0, 1, 0), (0, 1, 0)): ONE})
_CO_KINV = Tensor(2, {((0, -1, 0), (0, -1, 0)): ONE})


def coproduct_mono(m: Mono) -> Tensor:
    hit = _coproduct_cache.get(m)
    if hit is not None:
        return hit
    a, b, c = m
    out = Tensor(2, {((0, 0, 0), (0, 0, 0)): ONE})
    for _ in range(a):
        out = out * _CO_F
    k_step = _CO_K if b > 0 else _CO_KINV
    for _ in range(abs(b)):
        out = out * k_step
    for _ in range(c):
        out = out * _CO_E
    _coproduct_cache[m] = out
    return out


def coproduct(x: UEl) -> Tensor:
    acc = Tensor(2)
    for m, c in x.terms.items():
        acc = acc + coproduct_mono(m).scale(c)
    return acc


def counit(x: UEl) -> Scalar:
    acc = ZERO
    for (a, b, c), w in x.terms.items():
        if a == 0 and c == 0:
            acc = acc + w
    return acc


def _build_antipode_images() -> dict[str, UEl]:
    s_e = (KINV * E).scale(-ONE)
    s_f = (F * K).scale(-ONE)
    return {"E": s_e, "F": s_f, "K": KINV, "Kinv": K}


_ANTIPODE = _build_antipode_images()


def antipode(x: UEl) -> UEl:
    acc = UEl.zero()
    for (a, b, c), w in x.terms.items():
        # S reverses products: S(F^a K^b E^c) = S(E)^c S(K)^b S(F)^a
        r = _ANTIPODE["E"] ** c
        r = r * (UEl.mono(0, -b, 0))
        r = r * (_ANTIPODE["F"] ** a)
        acc = acc + r.scale(w)
    return acc


def star(x: UEl, compact: bool = False) -> UEl:
    """Involution; antilinear is trivial here since Q(s) is fixed pointwise."""
    sgn = ONE if compact else -ONE
    e_star = (K * F).scale(sgn)
    f_star = (E * KINV).scale(sgn)
    acc = UEl.zero()
    for (a, b, c), w in x.terms.items():
        # (F^a K^b E^c)^* = (E^*)^c K^b (F^*)^a
        r = e_star ** c
        r = r * UEl.mono(0, b, 0)
        r = r * (f_star ** a)
        acc = acc + r.scale(w)
    return acc


# ---------------------------------------------------------------------------
# Verma module with highest weight 0
# ---------------------------------------------------------------------------

class VermaVector:
    """Vector in the weight-0 Verma module, on the basis v_n = F^n v_0."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Scalar] | None = None):
        t = {}
        if terms:
            for n, c in terms.items():
                if c:
                    t[n] = c
        self.terms = t

    @staticmethod
    def basis(n: int, coef: Scalar = ONE) -> "VermaVector":
        return VermaVector({n: coef})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, VermaVector) and self.terms == other.terms

    def __add__(self, other: "VermaVector") -> "VermaVector":
        t = dict(self.terms)
        for n, c in other.terms.items():
            v = t.get(n, ZERO) + c
            if v:
                t[n] = v
            else:
                t.pop(n, None)
        out = VermaVector.__new__(VermaVector)
        out.terms = t
        return out

    def scale(self, c: Scalar) -> "VermaVector":
        out = VermaVector.__new__(VermaVector)
        out.terms = {n: v * c for n, v in self.terms.items()} if c else {}
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[n]})*v{n}" for n in sorted(self.terms))


_lowering_coef_cache: dict[int, Scalar] = {0: ZERO}


def lowering_coef(n: int) -> Scalar:
    """e_n with E v_n = e_n v_{n-1}; recursion from the commutator."""
    hit = _lowering_coef_cache.get(n)
    if hit is not None:
        return hit
    e = lowering_coef(n - 1) + (q_pow(-2 * (n - 1)) - q_pow(2 * (n - 1))) / _QDIFF
    _lowering_coef_cache[n] = e
    return e


def lowering_coef_closed(n: int) -> Scalar:
    """-[n][n-1], the closed form of lowering_coef."""
    return -(q_int(n) * q_int(n - 1))


def verma_act_mono(m: Mono, n: int) -> VermaVector:
    """F^a K^b E^c acting on v_n."""
    a, b, c = m
    cur = VermaVector.basis(n)
    for _ in range(c):
        nxt: dict[int, Scalar] = {}
        for k, w in cur.terms.items():
            if k >= 1:
                v = nxt.get(k - 1, ZERO) + w * lowering_coef(k)
                if v:
                    nxt[k - 1] = v
        cur = VermaVector(nxt)
    if b:
        cur = VermaVector({k: w * q_pow(-2 * k * b) for k, w in cur.terms.items()})
    if a:
        cur = VermaVector({k + a: w for k, w in cur.terms.items()})
    return cur


def verma_act(x: UEl, v: VermaVector) -> VermaVector:
    acc = VermaVector()
    for m, c in x.terms.items():
        for n, w in v.terms.items():
            acc = acc + verma_act_mono(m, n).scale(c * w)
    return acc


def verma_act_tensor(t: Tensor, pairs: dict[tuple[int, int], Scalar]) -> dict[tuple[int, int], Scalar]:
    """Rank-2 tensor acting componentwise on a combination of v_m ox v_n."""
    if t.rank != 2:
        raise ValueError("rank-2 tensor required")
    acc: dict[tuple[int, int], Scalar] = {}
    for (m1, m2), c in t.terms.items():
        for (n1, n2), w in pairs.items():
            left = verma_act_mono(m1, n1)
            right = verma_act_mono(m2, n2)
            for k1, w1 in left.terms.items():
                for k2, w2 in right.terms.items():
                    key = (k1, k2)
                    v = acc.get(key, ZERO) + c * w * w1 * w2
                    if v:
                        acc[key] = v
                    else:
                        acc.pop(key, None)
    return acc
