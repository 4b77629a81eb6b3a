"""The invariant integral on the finite part of the extended algebra.

On the basis z^a f0 (z*)^b the integral is the weighted trace

    integral(z^a f0 (z*)^b) = delta_{ab} g_a q^(-2a),

normalized so that integral(f0) = 1.  It is invariant for the action:
integral(xi f) = counit(xi) integral(f), and the sesquilinear form
<f, g> = integral(f^* g) is diagonal on the basis with positive values
for 0 < q < 1.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import Scalar, ZERO, ONE, q_pow
from .uqsl2 import UEl, counit
from .modalg import ExtElement, GENS, act, gen_act, scalar_part
from .fock import weight
from . import linalg

GEN_EL = {"E": (0, 0, 1), "F": (1, 0, 0), "K": (0, 1, 0), "Kinv": (0, -1, 0)}


def integral(e: ExtElement) -> Scalar:
    """Defined on the finite part; rejects elements with a pol component."""
    if e.pol:
        raise ValueError("integral is defined on the finite part only")
    acc = ZERO
    for (a, b), c in e.fin.items():
        if a == b:
            acc = acc + c * weight(a) * q_pow(-2 * a)
    return acc


def invariance_check(max_ab: int) -> bool:
    """integral(xi f) = counit(xi) integral(f) on all basis monomials."""
    for gname in GENS:
        u = UEl.mono(*GEN_EL[gname])
        eps = counit(u)
        for a in range(max_ab + 1):
            for b in range(max_ab + 1):
                f = ExtElement.fin_mono(a, b)
                if integral(gen_act(gname, f)) != eps * integral(f):
                    return False
    return True


def gram_diagonal(bound: int) -> dict[tuple[int, int], Scalar]:
    """<(a,b), (a,b)> for the form integral(f^* g) on the fin basis."""
    out = {}
    for a in range(bound + 1):
        for b in range(bound + 1):
            out[(a, b)] = scalar_part(a, a) * weight(b) * q_pow(-2 * b)
    return out


def gram_is_diagonal(bound: int) -> bool:
    basis = [(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    for (a, b) in basis:
        f = ExtElement.fin_mono(a, b)
        for (c, d) in basis:
            g = ExtElement.fin_mono(c, d)
            v = integral(f.star() * g)
            if (a, b) == (c, d):
                if v != scalar_part(a, a) * weight(b) * q_pow(-2 * b):
                    return False
            elif v:
                return False
    return True


def gram_positive_at(bound: int, q0: Fraction) -> bool:
    """All diagonal Gram values are positive rationals at q = q0."""
    if not (0 < q0 < 1):
        raise ValueError("q0 must be strictly between 0 and 1")
    for v in gram_diagonal(bound).values():
        if v.eval_at_q(q0) <= 0:
            return False
    return True


def _invariance_rows(bound: int):
    """Linear system for an invariant functional truncated at bound.

    Unknowns: nu on z^a f0 (z*)^b for a, b <= bound.  Equations:
    nu(xi f) = counit(xi) nu(f) for f of degree small enough that xi f
    stays inside the truncation.
    """
    basis = [(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    index = {k: i for i, k in enumerate(basis)}
    rows: list[list[Scalar]] = []
    for gname in GENS:
        u = UEl.mono(*GEN_EL[gname])
        eps = counit(u)
        for (a, b) in basis:
            # E raises a by at most 1, F raises b by at most 1; admit only
            # the monomials whose image stays inside the truncation
            if gname == "E" and a >= bound:
                continue
            if gname == "F" and b >= bound:
                continue
            img = gen_act(gname, ExtElement.fin_mono(a, b))
            row = [ZERO] * len(basis)
            for k, c in img.fin.items():
                row[index[k]] = row[index[k]] + c
            row[index[(a, b)]] = row[index[(a, b)]] - eps
            if any(row):
                rows.append(row)
    return basis, rows


def functional_nullspace_dim(bound: int) -> int:
    """Dimension of the space of invariant functionals, truncated at bound.

    Dimension 1 means the integral is the unique invariant functional up
    to scale.
    """
    basis, rows = _invariance_rows(bound)
    return linalg.nullspace_dim(rows, len(basis))


def functional_solve(bound: int) -> dict[tuple[int, int], Scalar]:
    """The invariant functional found by solving, normalized at f0.

    Requires a one-dimensional solution space with nonzero value on f0;
    the result should reproduce integral() on every basis monomial.
    """
    basis, rows = _invariance_rows(bound)
    kernel = linalg.nullspace(rows, len(basis))
    if len(kernel) != 1:
        raise ValueError(f"solution space has dimension {len(kernel)}")
    vec = kernel[0]
    pivot = vec[basis.index((0, 0))]
    if not pivot:
        raise ValueError("solved functional vanishes on f0")
    return {k: v / pivot for k, v in zip(basis, vec)}
