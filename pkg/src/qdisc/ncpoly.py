"""Free associative *-algebra over Q(s) with oriented rewrite rules.

Elements are finite Q(s)-combinations of words in named generators.
A Presentation fixes a generator precedence (position in the list), orients
each relation as lead_word -> lower_order_expression under degree-lex, and
normalizes by leftmost rewriting with a step budget.  Local confluence is
checked on overlap and inclusion ambiguities up to a degree bound; there is
deliberately no completion procedure, a failed check is reported with
witnesses and left to the caller.

The star is an antilinear antiautomorphism: reverse the word, swap each
generator with its star partner, conjugate coefficients (conjugation on
Q(s) is the identity; a hook is provided for other coefficient models).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalar import Scalar, ONE, ZERO

Word = tuple[str, ...]


class RewriteBudgetError(RuntimeError):
    """Normalization exceeded its rewrite step budget."""


@dataclass(frozen=True)
class Generator:
    name: str
    star: str | None = None          # star partner; None means self-adjoint
    weight: tuple[int, ...] = (0,)   # eigendata under the Cartan generators

    @property
    def star_name(self) -> str:
        return self.star if self.star is not None else self.name


class NCExpr:
    """Finite linear combination of words, coefficients in Q(s)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t: dict[Word, Scalar] = {}
        if terms:
            for w, c in terms.items():
                c = Scalar.of(c)
                if c:
                    t[w] = c
        self.terms = t

    @classmethod
    def word(cls, *names: str, coeff=ONE) -> "NCExpr":
        return cls({tuple(names): Scalar.of(coeff)})

    @classmethod
    def scalar(cls, c) -> "NCExpr":
        return cls({(): Scalar.of(c)})

    @classmethod
    def zero(cls) -> "NCExpr":
        return cls()

    @classmethod
    def one(cls) -> "NCExpr":
        return cls({(): ONE})

    def coeff(self, word: Word) -> Scalar:
        return self.terms.get(word, ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCExpr):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, NCExpr):
            return NotImplemented
        t = dict(self.terms)
        for w, c in other.terms.items():
            nc = t.get(w, ZERO) + c
            if nc:
                t[w] = nc
            else:
                t.pop(w, None)
        out = NCExpr.__new__(NCExpr)
        out.terms = t
        return out

    def __neg__(self):
        out = NCExpr.__new__(NCExpr)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, NCExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(Scalar.of(other))
        if not isinstance(other, NCExpr):
            return NotImplemented
        t: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                nc = t.get(w, ZERO) + c1 * c2
                if nc:
                    t[w] = nc
                else:
                    t.pop(w, None)
        out = NCExpr.__new__(NCExpr)
        out.terms = t
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(Scalar.of(other))
        return NotImplemented

    def scale(self, c: Scalar) -> "NCExpr":
        c = Scalar.of(c)
        if not c:
            return NCExpr()
        out = NCExpr.__new__(NCExpr)
        out.terms = {w: cc * c for w, cc in self.terms.items()}
        return out

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("NCExpr powers must be nonnegative integers")
        out = NCExpr.one()
        for _ in range(n):
            out = out * self
        return out

    def degree(self) -> int:
        """Maximal word length; -1 for the zero element."""
        return max((len(w) for w in self.terms), default=-1)

    def __str__(self) -> str:
        return format_expr(self)

    def __repr__(self) -> str:
        return f"NCExpr({format_expr(self)!r})"


def format_word(word: Word) -> str:
    return " ".join(_print_name(g) for g in word) if word else "1"


def _print_name(g: str) -> str:
    # star partners are conventionally named with a trailing '*'
    return f"{g[:-1]}^*" if g.endswith("*") else g


def format_expr(e: NCExpr) -> str:
    if not e.terms:
        return "0"
    parts = []
    for w in sorted(e.terms, key=lambda w: (len(w), w)):
        c = e.terms[w]
        cs = str(c)
        simple = " " not in cs and "/" not in cs
        body = format_word(w)
        if not w:
            parts.append(cs if simple else f"({cs})")
        elif c.is_one():
            parts.append(body)
        elif cs == "-1":
            parts.append(f"-{body}")
        elif simple:
            parts.append(f"{cs}*{body}")
        else:
            parts.append(f"({cs})*{body}")
    return " + ".join(parts)


def star_expr(e: NCExpr, partner: dict[str, str], conj=None) -> NCExpr:
    """Antilinear antiautomorphism: reverse words, swap star partners."""
    t: dict[Word, Scalar] = {}
    for w, c in e.terms.items():
        sw = tuple(partner[g] for g in reversed(w))
        t[sw] = conj(c) if conj is not None else c
    return NCExpr(t)


def grade(e: NCExpr, degrees: dict[str, int]) -> dict[int, NCExpr]:
    """Split by total degree under a generator grading."""
    out: dict[int, NCExpr] = {}
    for w, c in e.terms.items():
        d = sum(degrees[g] for g in w)
        out.setdefault(d, NCExpr())
        out[d] = out[d] + NCExpr({w: c})
    return out


@dataclass
class Ambiguity:
    word: Word
    rule_left: int
    rule_right: int
    kind: str                 # "overlap" or "inclusion"
    resolved: bool = False
    nf_left: NCExpr | None = None
    nf_right: NCExpr | None = None


@dataclass
class ConfluenceReport:
    degree_bound: int
    ambiguities: list[Ambiguity] = field(default_factory=list)

    @property
    def all_resolved(self) -> bool:
        return all(a.resolved for a in self.ambiguities)

    def summary(self) -> str:
        bad = [a for a in self.ambiguities if not a.resolved]
        if not bad:
            return (f"locally confluent to degree {self.degree_bound}: "
                    f"{len(self.ambiguities)} ambiguities resolved")
        w = bad[0]
        return (f"{len(bad)} unresolved ambiguities; first witness "
                f"{format_word(w.word)}: {w.nf_left} != {w.nf_right}")


class Presentation:
    """Generators with a precedence order and oriented rewrite rules."""

    DEFAULT_BUDGET = 10 ** 6

    def __init__(self, generators, rules, name: str = ""):
        self.name = name
        self.generators: tuple[Generator, ...] = tuple(generators)
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise ValueError("duplicate generator names")
        self.partner = {g.name: g.star_name for g in self.generators}
        for g in self.generators:
            if g.star_name not in self.index:
                raise ValueError(f"star partner {g.star_name!r} of {g.name!r} undeclared")
        self.rules: list[tuple[Word, NCExpr]] = []
        seen = set()
        for lead, rhs in rules:
            lead = tuple(lead)
            if lead in seen:
                raise ValueError(f"duplicate rule lead {lead}")
            seen.add(lead)
            if not lead:
                raise ValueError("empty rule lead")
            kl = self.word_key(lead)
            for w in rhs.terms:
                if self.word_key(w) >= kl:
                    raise ValueError(
                        f"rule {format_word(lead)} does not decrease: {format_word(w)}")
            self.rules.append((lead, rhs))
        self._nf_cache: dict[Word, dict[Word, Scalar]] = {}

    # degree-lex with the declared precedence
    def word_key(self, w: Word):
        idx = self.index
        return (len(w), tuple(idx[g] for g in w))

    def _find_match(self, w: Word):
        for p in range(len(w)):
            for ri, (lead, _) in enumerate(self.rules):
                n = len(lead)
                if w[p:p + n] == lead:
                    return p, ri
        return None

    def nf_word(self, w: Word, budget: int | None = None) -> dict[Word, Scalar]:
        """Normal form of a single word as a coefficient dict (cached)."""
        cache = self._nf_cache
        if w in cache:
            return cache[w]
        steps = [0]
        limit = budget if budget is not None else self.DEFAULT_BUDGET
        # iterative post-order over the rewrite dag
        stack: list[tuple[Word, bool]] = [(w, False)]
        while stack:
            word, ready = stack.pop()
            if word in cache:
                continue
            m = self._find_match(word)
            if m is None:
                cache[word] = {word: ONE}
                continue
            p, ri = m
            lead, rhs = self.rules[ri]
            children = [word[:p] + rw + word[p + len(lead):] for rw in rhs.terms]
            if ready:
                acc: dict[Word, Scalar] = {}
                for rw, rc in rhs.terms.items():
                    child = word[:p] + rw + word[p + len(lead):]
                    for cw, cc in cache[child].items():
                        nc = acc.get(cw, ZERO) + rc * cc
                        if nc:
                            acc[cw] = nc
                        else:
                            acc.pop(cw, None)
                cache[word] = acc
                continue
            steps[0] += 1
            if steps[0] > limit:
                raise RewriteBudgetError(
                    f"rewrite budget {limit} exceeded at word {format_word(word)}")
            stack.append((word, True))
            for child in children:
                if child not in cache:
                    stack.append((child, False))
        return cache[w]

    def normal_form(self, e: NCExpr, budget: int | None = None) -> NCExpr:
        acc: dict[Word, Scalar] = {}
        for w, c in e.terms.items():
            for nw, nc in self.nf_word(w, budget).items():
                v = acc.get(nw, ZERO) + c * nc
                if v:
                    acc[nw] = v
                else:
                    acc.pop(nw, None)
        return NCExpr(acc)

    def is_normal(self, w: Word) -> bool:
        return self._find_match(w) is None

    def star(self, e: NCExpr, conj=None) -> NCExpr:
        return star_expr(e, self.partner, conj)

    def normal_words(self, degree: int) -> list[Word]:
        """All normal-form words of the exact given length."""
        out: list[Word] = []
        names = [g.name for g in self.generators]

        def extend(w: Word):
            if len(w) == degree:
                out.append(w)
                return
            for g in names:
                nw = w + (g,)
                # w is normal, so only a match touching the new letter matters
                if self.is_normal(nw):
                    extend(nw)

        extend(())
        return out

    def basis_words(self, max_degree: int) -> list[Word]:
        out: list[Word] = []
        for d in range(max_degree + 1):
            out.extend(self.normal_words(d))
        return out

    def check_local_confluence(self, degree_bound: int) -> ConfluenceReport:
        """Resolve all overlap/inclusion ambiguities up to the degree bound."""
        report = ConfluenceReport(degree_bound)
        for i, (li, _) in enumerate(self.rules):
            for j, (lj, _) in enumerate(self.rules):
                # overlaps: a proper suffix of li equals a proper prefix of lj
                for k in range(1, min(len(li), len(lj))):
                    if li[len(li) - k:] == lj[:k]:
                        w = li + lj[k:]
                        if len(w) <= degree_bound:
                            report.ambiguities.append(
                                self._resolve(w, i, j, 0, len(li) - k, "overlap"))
                # inclusions: lj a proper subword of li
                if i != j and len(lj) < len(li):
                    for p in range(len(li) - len(lj) + 1):
                        if li[p:p + len(lj)] == lj:
                            if len(li) <= degree_bound:
                                report.ambiguities.append(
                                    self._resolve(li, i, j, 0, p, "inclusion"))
        return report

    def _resolve(self, w: Word, ri: int, rj: int, pi: int, pj: int, kind: str) -> Ambiguity:
        left = self._apply_at(w, ri, pi)
        right = self._apply_at(w, rj, pj)
        nf_l = self.normal_form(left)
        nf_r = self.normal_form(right)
        return Ambiguity(w, ri, rj, kind, nf_l == nf_r, nf_l, nf_r)

    def _apply_at(self, w: Word, ri: int, p: int) -> NCExpr:
        lead, rhs = self.rules[ri]
        assert w[p:p + len(lead)] == lead
        out: dict[Word, Scalar] = {}
        for rw, rc in rhs.terms.items():
            out[w[:p] + rw + w[p + len(lead):]] = rc
        return NCExpr(out)


# ---------------------------------------------------------------------------
# the quantum disc presentation
# ---------------------------------------------------------------------------

def disc_presentation() -> Presentation:
    """Polynomial *-algebra of the quantum disc.

    One generator z with star partner z*, single oriented relation
    z* z -> q^2 z z* + (1 - q^2).  Normal-form words are z^a (z*)^b.
    """
    from .scalar import Q
    z = Generator("z", star="z*", weight=(2,))
    zs = Generator("z*", star="z", weight=(-2,))
    rhs = NCExpr({("z", "z*"): Q * Q, (): ONE - Q * Q})
    return Presentation([z, zs], [(("z*", "z"), rhs)], name="disc")


_DISC = None


def disc() -> Presentation:
    """Shared quantum disc presentation (normal-form cache persists)."""
    global _DISC
    if _DISC is None:
        _DISC = disc_presentation()
    return _DISC
