"""Named check suites behind the `verify` subcommand.

Every check is a small deterministic function of the shared Options;
randomized ones draw from random.Random(seed) so reruns are stable.
Suites execute on a thread pool, one suite per worker, and the report
is merged back in registry order, so output ordering never depends on
scheduling.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .scalar import Scalar, ZERO, ONE, Q, q_pow, s_pow, q_int, q2_binomial
from .ncpoly import NCExpr, disc
from . import uqsl2
from .uqsl2 import UEl, coproduct, coproduct_mono, counit, antipode
from . import modalg
from .modalg import (ExtElement, LaurentElement, module_algebra_check,
                     star_compat_check, weights, disc_module, extended_module,
                     holo_module, laurent_module, antiholo_module)
from . import fock
from . import integral as integral_mod
from . import rmatrix
from . import flag as flag_mod
from . import rootdata


@dataclass(frozen=True)
class Options:
    degree: int = 4
    N: int = 32
    q0: Fraction = Fraction(1, 4)
    seed: int = 0


@dataclass(frozen=True)
class CheckDef:
    suite: str
    name: str
    mode: str
    statement: str
    run: Callable[[Options], tuple[bool, str]]


CHECKS: list[CheckDef] = []


def _check(suite: str, name: str, mode: str, statement: str):
    def deco(fn):
        CHECKS.append(CheckDef(suite, name, mode, statement, fn))
        return fn
    return deco


def suite_names() -> list[str]:
    out: list[str] = []
    for c in CHECKS:
        if c.suite not in out:
            out.append(c.suite)
    return out


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

def _random_scalar(rng: random.Random) -> Scalar:
    acc = ZERO
    for k in range(rng.randint(1, 4)):
        acc = acc + s_pow(k) * Scalar.of(rng.randint(-3, 3))
    return acc


@_check("scalars", "field_axioms", "exact",
        "associativity, distributivity and inverses on random elements of Q(s)")
def _scalars_field(opts: Options):
    rng = random.Random(opts.seed)
    n = 0
    for _ in range(25):
        a, b, c = (_random_scalar(rng) for _ in range(3))
        if (a + b) * c != a * c + b * c:
            return False, f"distributivity fails on {a}, {b}, {c}"
        if (a * b) * c != a * (b * c):
            return False, f"associativity fails on {a}, {b}, {c}"
        if a and a * (ONE / a) != ONE:
            return False, f"inverse fails on {a}"
        n += 3
    return True, f"{n} sampled identities"


@_check("scalars", "canonical_form", "exact",
        "normal forms decide equality: (1-q^2)/(q^-2-1) = q^2 and Gauss recursion")
def _scalars_canon(opts: Options):
    if (ONE - q_pow(2)) / (q_pow(-2) - ONE) != q_pow(2):
        return False, "quotient did not canonicalize"
    for n in range(1, 7):
        for k in range(n + 1):
            want = q2_binomial(n - 1, k) * q_pow(2 * k) + q2_binomial(n - 1, k - 1)
            if q2_binomial(n, k) != want:
                return False, f"Gauss recursion fails at ({n}, {k})"
    return True, "quotient plus Gauss recursion to n = 6"


@_check("scalars", "numeric_eval", "numeric",
        "exact rational evaluation agrees with float evaluation at q0")
def _scalars_eval(opts: Options):
    samples = [q_int(3), ONE / (ONE - q_pow(2)), s_pow(5) + q_pow(-1)]
    for x in samples:
        exact = x.eval_at_q(opts.q0, sqrt_digits=30)
        approx = x.eval_float(float(opts.q0))
        if abs(float(exact) - approx) > 1e-9:
            return False, f"{x} disagrees at q0 = {opts.q0}"
    return True, f"{len(samples)} scalars at q0 = {opts.q0}"


# ---------------------------------------------------------------------------
# rewrite engine
# ---------------------------------------------------------------------------

@_check("rewrite", "disc_confluence", "exact",
        "the z z* presentation resolves all overlap ambiguities")
def _rw_disc(opts: Options):
    bound = max(6, opts.degree)
    rep = disc().check_local_confluence(bound)
    return rep.all_resolved, f"{len(rep.ambiguities)} ambiguities to degree {bound}"


@_check("rewrite", "qsl2_confluence", "exact",
        "the quantum SL(2) presentation resolves all overlap ambiguities")
def _rw_flag(opts: Options):
    bound = max(6, opts.degree)
    rep = flag_mod.flag().check_local_confluence(bound)
    return rep.all_resolved, f"{len(rep.ambiguities)} ambiguities to degree {bound}"


@_check("rewrite", "star_antihom", "exact",
        "star reverses products on disc normal forms")
def _rw_star(opts: Options):
    p = disc()
    rng = random.Random(opts.seed + 1)
    names = ["z", "z*"]
    n = 0
    for _ in range(20):
        w1 = NCExpr.word(*(rng.choice(names) for _ in range(rng.randint(1, 3))))
        w2 = NCExpr.word(*(rng.choice(names) for _ in range(rng.randint(1, 3))))
        lhs = p.normal_form(p.star(w1 * w2))
        rhs = p.normal_form(p.star(w2) * p.star(w1))
        if lhs != rhs:
            return False, f"star fails on {w1} | {w2}"
        n += 1
    return True, f"{n} sampled word pairs"


@_check("rewrite", "grading", "exact",
        "degree components of a normal form sum back to the element")
def _rw_grade(opts: Options):
    from .ncpoly import grade
    p = disc()
    e = p.normal_form(NCExpr.word(*(("z*",) * 2 + ("z",) * 3)))
    comps = grade(e, {"z": 1, "z*": -1})
    total = NCExpr.zero()
    for part in comps.values():
        total = total + part
    return total == e, f"{len(comps)} weight components"


# ---------------------------------------------------------------------------
# quantized enveloping algebra
# ---------------------------------------------------------------------------

_SMALL_PBW = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1),
              (1, 0, 1), (1, 1, 0), (0, 1, 1), (2, 0, 0), (0, 0, 2),
              (1, -1, 1)]


@_check("uqsl2", "hopf_axioms", "exact",
        "coassociativity, counit and antipode laws on PBW monomials")
def _uq_hopf(opts: Options):
    n = 0
    for m in _SMALL_PBW:
        x = UEl.mono(*m)
        d = coproduct(x)
        if d.apply_at(0, coproduct_mono) != d.apply_at(1, coproduct_mono):
            return False, f"coassociativity fails on {x}"
        left, right = UEl.zero(), UEl.zero()
        acc, acc2 = UEl.zero(), UEl.zero()
        for (m1, m2), c in d.terms.items():
            if m1[0] == 0 and m1[2] == 0:
                left = left + UEl.mono(*m2, coef=c)
            if m2[0] == 0 and m2[2] == 0:
                right = right + UEl.mono(*m1, coef=c)
            acc = acc + (antipode(UEl.mono(*m1)) * UEl.mono(*m2)).scale(c)
            acc2 = acc2 + (UEl.mono(*m1) * antipode(UEl.mono(*m2))).scale(c)
        want = UEl.one().scale(counit(x))
        if left != x or right != x or acc != want or acc2 != want:
            return False, f"counit or antipode law fails on {x}"
        n += 1
    return True, f"{n} PBW monomials"


@_check("uqsl2", "star_involution", "exact",
        "the involution squares to the identity and reverses products")
def _uq_star(opts: Options):
    rng = random.Random(opts.seed + 2)
    n = 0
    for _ in range(15):
        m1 = (rng.randint(0, 2), rng.randint(-1, 1), rng.randint(0, 2))
        m2 = (rng.randint(0, 2), rng.randint(-1, 1), rng.randint(0, 2))
        x, y = UEl.mono(*m1), UEl.mono(*m2)
        if uqsl2.star(uqsl2.star(x)) != x:
            return False, f"involution fails on {x}"
        if uqsl2.star(x * y) != uqsl2.star(y) * uqsl2.star(x):
            return False, f"antihomomorphism fails on {x}, {y}"
        n += 1
    return True, f"{n} sampled monomial pairs"


@_check("uqsl2", "defining_relations", "exact",
        "K E = q^2 E K, K F = q^-2 F K, [E, F] = (K - K^-1)/(q - q^-1)")
def _uq_rel(opts: Options):
    E, F, K, KINV = uqsl2.E, uqsl2.F, uqsl2.K, uqsl2.KINV
    comm = (K - KINV).scale(ONE / (q_pow(1) - q_pow(-1)))
    ok = (K * E == (E * K).scale(q_pow(2))
          and K * F == (F * K).scale(q_pow(-2))
          and E * F - F * E == comm
          and K * KINV == UEl.one())
    return ok, "four defining relations"


@_check("uqsl2", "verma_duality", "exact",
        "the dual of the weight-0 Verma action is the q-difference action")
def _uq_verma(opts: Options):
    ok = modalg.verma_duality_check(8)
    return ok, "pairing depth 8"


# ---------------------------------------------------------------------------
# module-algebra actions
# ---------------------------------------------------------------------------

def _mod_check(factory, label):
    def run(opts: Options):
        rep = module_algebra_check(factory(), opts.degree)
        witness = f"{rep.checked} identities to degree {opts.degree}"
        if not rep.ok:
            witness = rep.failures[0]
        return rep.ok, witness
    return run


for _factory, _label in ((disc_module, "disc"), (extended_module, "extended"),
                         (holo_module, "holo"), (laurent_module, "laurent"),
                         (antiholo_module, "antiholo")):
    _check("modalg", f"module_algebra_{_label}", "exact",
           f"xi(fg) = sum xi_(1)(f) xi_(2)(g) on the {_label} carrier")(
        _mod_check(_factory, _label))


@_check("modalg", "star_compat", "exact",
        "(xi f)^* = (antipode(xi))^* f^* on the starred carriers")
def _mod_star(opts: Options):
    total = 0
    for factory in (disc_module, extended_module, antiholo_module):
        rep = star_compat_check(factory(), opts.degree)
        if not rep.ok:
            return False, rep.failures[0]
        total += rep.checked
    return True, f"{total} identities on three carriers"


@_check("modalg", "representation_property", "exact",
        "act(xi eta, f) = act(xi, act(eta, f)) on the extended carrier")
def _mod_repr(opts: Options):
    m = extended_module()
    basis = m.basis(min(opts.degree, 3))
    pairs = [(x, y) for x in modalg.GENS for y in modalg.GENS]
    n = 0
    for gx, gy in pairs:
        ux = modalg._GEN_U[gx]
        uy = modalg._GEN_U[gy]
        for f in basis:
            if m.act_u(ux * uy, f) != m.act_u(ux, m.act_u(uy, f)):
                return False, f"{gx}{gy} on {f}"
            n += 1
    return True, f"{n} compositions"


@_check("modalg", "weight_signs", "exact",
        "holomorphic weights are nonnegative, antiholomorphic nonpositive")
def _mod_weights(opts: Options):
    for n in range(opts.degree + 1):
        w = weights(LaurentElement.mono(n), "holo")
        if set(w) != {2 * n}:
            return False, f"z^{n} has weights {sorted(w)}"
        w = weights(ExtElement.pol_mono(0, n), "antiholo")
        if set(w) != {-2 * n}:
            return False, f"z*^{n} has weights {sorted(w)}"
    w = weights(ExtElement.one(), "disc")
    if set(w) != {0}:
        return False, "1 is not weight 0"
    return True, f"monomials to degree {opts.degree} plus the unit"


# ---------------------------------------------------------------------------
# braiding
# ---------------------------------------------------------------------------

@_check("rmatrix", "braiding_example", "exact",
        "braid(z* ox z) = q^2 z ox z* + (1 - q^2) 1 ox 1")
def _rm_example(opts: Options):
    got = rmatrix.braid(rmatrix.DiscTensor.pair((0, 1), (1, 0)))
    want = (rmatrix.DiscTensor.pair((1, 0), (0, 1), q_pow(2))
            + rmatrix.DiscTensor.pair((0, 0), (0, 0), ONE - q_pow(2)))
    return got == want, "crossing computed from the twist and E-F term"


@_check("rmatrix", "derived_presentation", "exact",
        "the braiding-derived rewrite rule equals the engine presentation")
def _rm_derived(opts: Options):
    return rmatrix.matches_engine_presentation(), "rule compared verbatim"


@_check("rmatrix", "braided_products", "exact",
        "multiplication through the braiding equals the engine product")
def _rm_products(opts: Options):
    rng = random.Random(opts.seed + 3)
    n = 0
    for _ in range(30):
        a, b = rng.randint(0, 3), rng.randint(0, 3)
        c, d = rng.randint(0, 3), rng.randint(0, 3)
        e1 = ExtElement.pol_mono(a, b)
        e2 = ExtElement.pol_mono(c, d)
        if rmatrix.braided_multiply(e1, e2) != e1 * e2:
            return False, f"mismatch on ({a},{b}) x ({c},{d})"
        n += 1
    return True, f"{n} sampled monomial products"


@_check("rmatrix", "truncation_guard", "exact",
        "out-of-scope tensors raise instead of truncating silently")
def _rm_guard(opts: Options):
    try:
        rmatrix.r_apply(rmatrix.DiscTensor.pair((0, 2), (2, 0)))
    except ValueError:
        return True, "second-order term detected and refused"
    return False, "no error raised"


# ---------------------------------------------------------------------------
# Fock representation
# ---------------------------------------------------------------------------

@_check("fock", "relation_exact", "exact",
        "the defining relation maps to 0 away from the truncation boundary")
def _fk_rel(opts: Options):
    sizes = sorted({8, min(opts.N, 64)})
    for N in sizes:
        if not fock.relation_defect_zero(N):
            return False, f"defect at N = {N}"
    return True, f"N in {sizes}"


@_check("fock", "relation_numeric", "numeric",
        "orthonormal numeric matrices satisfy the relation to 1e-12")
def _fk_num(opts: Options):
    N = min(opts.N, 64)
    worst = 0.0
    for q0 in (float(opts.q0), 0.5, 0.9):
        worst = max(worst, fock.relation_defect_float(N, q0))
    return worst < 1e-12, f"max defect {worst:.2e} at N = {N}"


@_check("fock", "vacuum_unique", "exact",
        "ker(z*) is spanned by the vacuum basis vector alone")
def _fk_vac(opts: Options):
    top = min(opts.N, 32)
    for N in range(1, top + 1):
        vecs = fock.vacuum_vectors(N)
        if len(vecs) != 1:
            return False, f"dimension {len(vecs)} at N = {N}"
        v = vecs[0]
        if v[0] == ZERO or any(c for c in v[1:]):
            return False, f"kernel not spanned by e_0 at N = {N}"
    return True, f"N = 1..{top}"


@_check("fock", "faithfulness", "exact",
        "monomial matrices of degree <= 3 are linearly independent")
def _fk_faith(opts: Options):
    rep = fock.faithfulness_check(3, 8)
    return rep.ok, rep.failures[0] if rep.failures else "rank 16 of 16 at N = 8"


@_check("fock", "irreducibility", "numeric",
        "the commutant of the truncated pair (z, z*) is one-dimensional")
def _fk_irr(opts: Options):
    for q0 in (0.5, 0.9):
        rep = fock.irreducibility_check(12, q0)
        if not rep.ok:
            return False, rep.failures[0]
    return True, "N = 12 at q0 in {0.5, 0.9}"


@_check("fock", "adjointness", "exact",
        "z and z* are mutually adjoint for the weighted inner product")
def _fk_adj(opts: Options):
    rep = fock.adjointness_check(8)
    return rep.ok, rep.failures[0] if rep.failures else "all pairs m, n <= 8"


# ---------------------------------------------------------------------------
# invariant integral
# ---------------------------------------------------------------------------

@_check("integral", "normalization", "exact", "the integral of f0 is 1")
def _in_norm(opts: Options):
    val = integral_mod.integral(ExtElement.fin_mono(0, 0))
    return val == ONE, f"value {val}"


@_check("integral", "invariance", "exact",
        "integral(xi f) = eps(xi) integral(f) on the finite part")
def _in_inv(opts: Options):
    bound = max(opts.degree, 4)
    ok = integral_mod.invariance_check(bound)
    return ok, f"all generators, a, b <= {bound}"


@_check("integral", "uniqueness", "exact",
        "the invariant functional is unique up to scale at finite truncations")
def _in_uni(opts: Options):
    bounds = list(range(2, max(opts.degree, 4) + 1, 2))
    for b in bounds:
        dim = integral_mod.functional_nullspace_dim(b)
        if dim != 1:
            return False, f"dimension {dim} at bound {b}"
    return True, f"dimension 1 at bounds {bounds}"


@_check("integral", "gram_diagonal", "exact",
        "the sesquilinear form is diagonal on the finite monomials")
def _in_gram(opts: Options):
    ok = integral_mod.gram_is_diagonal(4)
    return ok, "finite monomials to bound 4"


@_check("integral", "positivity", "exact",
        "the diagonal Gram values are positive at rational q0 in (0,1)")
def _in_pos(opts: Options):
    for q0 in (opts.q0, Fraction(9, 16)):
        if not integral_mod.gram_positive_at(4, q0):
            return False, f"nonpositive value at q0 = {q0}"
    return True, f"bound 4 at q0 in {{{opts.q0}, 9/16}}"


# ---------------------------------------------------------------------------
# flag, spherical subalgebra, localization
# ---------------------------------------------------------------------------

@_check("flag", "determinant", "exact",
        "the quantum determinant is central and equals 1")
def _fl_det(opts: Options):
    p = flag_mod.flag()
    det = NCExpr.word("t11", "t22") - NCExpr.word("t12", "t21", coeff=q_pow(1))
    for t in ("t11", "t12", "t21", "t22"):
        left = p.normal_form(det * NCExpr.word(t))
        right = p.normal_form(NCExpr.word(t) * det)
        if left != right:
            return False, f"determinant does not commute with {t}"
    return p.normal_form(det) == NCExpr.one(), "central and normalized"


@_check("flag", "relations_killed", "exact",
        "the right-translation action descends to the quotient algebra")
def _fl_killed(opts: Options):
    return flag_mod.relations_killed(), "all seven straightening relations"


@_check("flag", "commutation_chain", "exact",
        "y quasi-commutes with x, y, w by q^-2, 1, q^2")
def _fl_chain(opts: Options):
    got = flag_mod.y_commutation_chain()
    want = (q_pow(-2), ONE, q_pow(2))
    return got == want, f"scalars {tuple(str(s) for s in got)}"


@_check("flag", "inverse_pair", "exact",
        "the localized generators multiply to 1 in both orders")
def _fl_inv(opts: Options):
    one = flag_mod.LocElement.one()
    ok = (flag_mod.Z_LOC * flag_mod.Z_PRIME == one
          and flag_mod.Z_PRIME * flag_mod.Z_LOC == one)
    return ok, "both products reduce to 1"


@_check("flag", "component_ranks", "exact",
        "the degree-n spherical component has rank 2n + 1")
def _fl_ranks(opts: Options):
    for n in range(9):
        if flag_mod.component_rank(n) != 2 * n + 1:
            return False, f"rank mismatch at n = {n}"
    return True, "n = 0..8"


@_check("flag", "spherical_engine", "exact",
        "closed-form spherical actions match the word-level engine route")
def _fl_sph(opts: Options):
    bound = max(4, min(opts.degree, 6))
    return flag_mod.spherical_matches_engine(bound), f"to degree {bound}"


@_check("flag", "module_algebra_qsl2", "exact",
        "xi(fg) = sum xi_(1)(f) xi_(2)(g) on quantum SL(2)")
def _fl_ma_reg(opts: Options):
    rep = module_algebra_check(flag_mod.regular_module(), opts.degree)
    return rep.ok, (rep.failures[0] if rep.failures
                    else f"{rep.checked} identities to degree {opts.degree}")


@_check("flag", "module_algebra_localized", "exact",
        "xi(fg) = sum xi_(1)(f) xi_(2)(g) on the localization")
def _fl_ma_loc(opts: Options):
    rep = module_algebra_check(flag_mod.localized_module(), opts.degree)
    return rep.ok, (rep.failures[0] if rep.failures
                    else f"{rep.checked} identities to degree {opts.degree}")


@_check("flag", "ore_condition", "exact",
        "monomials move past powers of y at the predicted scalar cost")
def _fl_ore(opts: Options):
    rng = random.Random(opts.seed + 4)
    n = 0
    for _ in range(20):
        i, jj = rng.randint(0, 3), rng.randint(0, 3)
        if (i + jj) % 2:
            jj += 1
        k = rng.randint(1, 3)
        if not flag_mod.ore_witness(i, jj, k):
            return False, f"witness fails at ({i}, {jj}, {k})"
        n += 1
    return True, f"{n} sampled witnesses"


@_check("flag", "omega_laurent", "exact",
        "the degree-0 subalgebra is Laurent in the localized generator")
def _fl_omega(opts: Options):
    bound = max(opts.degree, 3)
    basis = flag_mod.omega_subalgebra(bound)
    if len(basis) != 2 * bound + 1:
        return False, f"{len(basis)} basis elements at bound {bound}"
    return True, f"2*{bound}+1 canonical Laurent monomials"


@_check("flag", "laurent_action_match", "exact",
        "the Laurent embedding intertwines the two actions")
def _fl_match(opts: Options):
    return flag_mod.laurent_action_match(6), "all generators, |n| <= 6"


# ---------------------------------------------------------------------------
# root data
# ---------------------------------------------------------------------------

@_check("rootdata", "exceptional_l0", "exact",
        "candidate parabolic nodes are empty exactly for E8, F4, G2")
def _rd_l0(opts: Options):
    empty = set()
    for t, r in rootdata.all_types(8):
        if not rootdata.l0_candidates(rootdata.build(t, r)):
            empty.add(f"{t}{r}")
    want = {"E8", "F4", "G2"}
    return empty == want, f"empty sets: {sorted(empty)}"


@_check("rootdata", "maximal_root_tables", "exact",
        "table coefficients of the maximal root match the enumeration")
def _rd_tables(opts: Options):
    n = 0
    for t, r in rootdata.all_types(8):
        if rootdata.maximal_root(rootdata.build(t, r)) != \
                rootdata.table_maximal_root(t, r):
            return False, f"mismatch for {t}{r}"
        n += 1
    return True, f"{n} simple types"


@_check("rootdata", "positive_counts", "exact",
        "enumerated positive systems have the closed-form cardinality")
def _rd_counts(opts: Options):
    n = 0
    for t, r in rootdata.all_types(8):
        if len(rootdata.positive_roots(rootdata.build(t, r))) != \
                rootdata.table_positive_count(t, r):
            return False, f"count mismatch for {t}{r}"
        n += 1
    return True, f"{n} simple types"


@_check("rootdata", "gradation_pairing", "exact",
        "the grading element pairs to 2 with the parabolic node only")
def _rd_grad(opts: Options):
    cases = [("A", 3, 2), ("C", 4, 4), ("D", 5, 1)]
    for t, r, l0 in cases:
        c = rootdata.build(t, r)
        g = rootdata.gradation(c, l0)
        for j in range(r):
            pair = sum(Fraction(g.H[i]) * c.matrix[i][j] for i in range(r))
            if pair != (2 if j == l0 - 1 else 0):
                return False, f"pairing fails for {t}{r} node {l0}"
        if g.dim_p_plus * 2 + g.dim_k != g.dim_g:
            return False, f"dimension split fails for {t}{r} node {l0}"
    return True, f"{len(cases)} marked Dynkin diagrams"


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

def run_verify(selected: list[str], opts: Options) -> dict:
    """Executes the selected suites and merges a deterministic report."""
    names = suite_names()
    unknown = [s for s in selected if s != "all" and s not in names]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}; "
                         f"available: all, {', '.join(names)}")
    wanted = names if "all" in selected else [s for s in names if s in selected]
    by_suite = {s: [c for c in CHECKS if c.suite == s] for s in wanted}

    def run_suite(suite: str) -> list[dict]:
        rows = []
        for c in by_suite[suite]:
            t0 = time.perf_counter()
            try:
                passed, witness = c.run(opts)
            except Exception as exc:
                passed, witness = False, f"raised {type(exc).__name__}: {exc}"
            rows.append({
                "suite": c.suite,
                "name": c.name,
                "mode": c.mode,
                "statement": c.statement,
                "passed": bool(passed),
                "witness": witness,
                "seconds": round(time.perf_counter() - t0, 4),
            })
        return rows

    with ThreadPoolExecutor(max_workers=min(4, max(1, len(wanted)))) as pool:
        futures = {s: pool.submit(run_suite, s) for s in wanted}
        merged: list[dict] = []
        for s in wanted:
            merged.extend(futures[s].result())

    n_pass = sum(r["passed"] for r in merged)
    return {
        "schema": 1,
        "options": {"degree": opts.degree, "N": opts.N,
                    "q0": str(opts.q0), "seed": opts.seed},
        "suites": wanted,
        "checks": merged,
        "counts": {"pass": n_pass, "fail": len(merged) - n_pass},
        "passed": n_pass == len(merged),
    }
