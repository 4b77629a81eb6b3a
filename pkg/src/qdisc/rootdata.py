"""Root data for the simple Lie types A-G.

Cartan matrices follow the convention pairing(alpha_j, H_i) = a_ij, with
the Bourbaki node numbering.  Positive roots are enumerated from scratch by
the root-string closure algorithm; stored classical tables (root counts,
maximal root coefficients) are kept separately so the two routes can
cross-validate each other.

The parabolic data used downstream: the maximal root delta = sum n_i alpha_i,
the candidate set {i : n_i = 1} (empty exactly for E8, F4, G2), the grading
element H with alpha_l0(H) = 2, and the two rho vectors (half sum of positive
roots over the alpha basis, and (1/2) sum n_i d_i H_i over the H basis).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
import math

_CLASSICAL_MAX_RANK = 12


@dataclass(frozen=True)
class CartanData:
    type_label: str
    rank: int
    matrix: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]   # coprime positive symmetrizers, d_i a_ij = d_j a_ji

    def __str__(self) -> str:
        return f"{self.type_label}{self.rank}"


@dataclass(frozen=True)
class Gradation:
    l0: int                                # 1-based node index
    H: tuple[Fraction, ...]                # H = sum H[i] * H_i
    p_plus: tuple[tuple[int, ...], ...]    # roots with coefficient +1 at l0
    k_roots: tuple[tuple[int, ...], ...]   # roots with coefficient 0 at l0
    dim_p_plus: int
    dim_k: int                             # includes the Cartan subalgebra
    dim_g: int


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(rank - 1)]


def _simply_laced(rank: int, edges) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        a[i][j] = -1
        a[j][i] = -1
    return a


def cartan_matrix(type_label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    t = type_label.upper()
    if t == "A":
        if rank < 1:
            raise ValueError("A_l needs l >= 1")
        a = _simply_laced(rank, _chain_edges(rank))
    elif t == "B":
        if rank < 2:
            raise ValueError("B_l needs l >= 2")
        a = _simply_laced(rank, _chain_edges(rank))
        a[rank - 1][rank - 2] = -2      # alpha_l short
    elif t == "C":
        if rank < 2:
            raise ValueError("C_l needs l >= 2")
        a = _simply_laced(rank, _chain_edges(rank))
        a[rank - 2][rank - 1] = -2      # alpha_l long
    elif t == "D":
        if rank < 3:
            raise ValueError("D_l needs l >= 3")
        edges = _chain_edges(rank - 1) + [(rank - 3, rank - 1)]
        a = _simply_laced(rank, edges)
    elif t == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E_l needs l in {6, 7, 8}")
        # Bourbaki: chain 1-3-4-5-...-l, node 2 attached to 4
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, rank - 1)]
        a = _simply_laced(rank, edges)
    elif t == "F":
        if rank != 4:
            raise ValueError("F_l needs l = 4")
        a = _simply_laced(4, _chain_edges(4))
        a[2][1] = -2                    # alpha_1, alpha_2 long
    elif t == "G":
        if rank != 2:
            raise ValueError("G_l needs l = 2")
        a = [[2, -3], [-1, 2]]          # alpha_1 short
    else:
        raise ValueError(f"unknown type {type_label!r}")
    if t in "ABCD" and rank > _CLASSICAL_MAX_RANK:
        raise ValueError(f"classical rank capped at {_CLASSICAL_MAX_RANK}")
    return tuple(tuple(row) for row in a)


def symmetrizers(matrix) -> tuple[int, ...]:
    """Coprime positive integers with d_i a_ij = d_j a_ji, by propagation."""
    rank = len(matrix)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(rank):
            if i != j and matrix[i][j] != 0 and d[j] is None:
                d[j] = d[i] * matrix[i][j] / matrix[j][i]
                todo.append(j)
    if any(x is None for x in d):
        raise ValueError("Dynkin diagram is not connected")
    lcm = reduce(math.lcm, (x.denominator for x in d), 1)
    ints = [int(x * lcm) for x in d]
    g = reduce(math.gcd, ints)
    ints = [x // g for x in ints]
    if any(x <= 0 for x in ints):
        raise ValueError("matrix is not symmetrizable with positive weights")
    for i in range(rank):
        for j in range(rank):
            if ints[i] * matrix[i][j] != ints[j] * matrix[j][i]:
                raise ValueError("matrix is not symmetrizable")
    return tuple(ints)


def build(type_label: str, rank: int) -> CartanData:
    m = cartan_matrix(type_label, rank)
    return CartanData(type_label.upper(), rank, m, symmetrizers(m))


# ---------------------------------------------------------------------------
# positive roots by root-string closure
# ---------------------------------------------------------------------------

def positive_roots(c: CartanData) -> list[tuple[int, ...]]:
    """All positive roots as coefficient vectors over the simple roots."""
    rank = c.rank
    a = c.matrix
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                # p: length of the unbroken string beta - alpha_i, beta - 2 alpha_i, ...
                p = 0
                gamma = list(beta)
                while True:
                    gamma[i] -= 1
                    if tuple(gamma) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * a[i][j] for j in range(rank))
                if p - pairing >= 1:
                    new = list(beta)
                    new[i] += 1
                    new = tuple(new)
                    if new not in roots:
                        roots.add(new)
                        nxt.append(new)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def maximal_root(c: CartanData) -> tuple[int, ...]:
    """The unique root dominating all others, found by enumeration."""
    roots = positive_roots(c)
    top = roots[-1]
    if len(roots) > 1 and sum(roots[-2]) == sum(top):
        raise AssertionError("maximal root is not unique")
    for r in roots:
        if any(r[i] > top[i] for i in range(c.rank)):
            raise AssertionError("height-maximal root does not dominate")
    return top


def l0_candidates(c: CartanData) -> tuple[int, ...]:
    """1-based nodes i with n_i = 1 in the maximal root (may be empty)."""
    delta = maximal_root(c)
    return tuple(i + 1 for i, n in enumerate(delta) if n == 1)


def gradation(c: CartanData, l0: int) -> Gradation:
    """Split the root system by the coefficient at node l0 (1-based)."""
    delta = maximal_root(c)
    if not (1 <= l0 <= c.rank):
        raise ValueError(f"node index {l0} out of range")
    if delta[l0 - 1] != 1:
        raise ValueError(f"node {l0} has coefficient {delta[l0 - 1]} != 1 in the maximal root")
    roots = positive_roots(c)
    p_plus = tuple(r for r in roots if r[l0 - 1] == 1)
    k_roots = tuple(r for r in roots if r[l0 - 1] == 0)
    if len(p_plus) + len(k_roots) != len(roots):
        raise AssertionError("coefficient at l0 outside {0, 1}")
    dim_g = 2 * len(roots) + c.rank
    # H with alpha_j(H) = 2 delta_{j,l0}: solve sum_i H_i_coef * a_ij = rhs_j
    H = _solve_linear_fractions(
        [[Fraction(c.matrix[i][j]) for i in range(c.rank)] for j in range(c.rank)],
        [Fraction(2 if j == l0 - 1 else 0) for j in range(c.rank)],
    )
    return Gradation(
        l0=l0,
        H=tuple(H),
        p_plus=p_plus,
        k_roots=k_roots,
        dim_p_plus=len(p_plus),
        dim_k=2 * len(k_roots) + c.rank,
        dim_g=dim_g,
    )


def rho_vectors(c: CartanData) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """(half sum of positive roots over alphas, (1/2) sum n_i d_i over H_i)."""
    roots = positive_roots(c)
    half_sum = tuple(
        Fraction(sum(r[i] for r in roots), 2) for i in range(c.rank))
    delta = maximal_root(c)
    rho_check = tuple(Fraction(delta[i] * c.d[i], 2) for i in range(c.rank))
    return half_sum, rho_check


def _solve_linear_fractions(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rows)
    m = [row[:] + [rhs[k]] for k, row in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


# ---------------------------------------------------------------------------
# stored classical tables (independent of the enumeration above)
# ---------------------------------------------------------------------------

def table_positive_count(type_label: str, rank: int) -> int:
    t = type_label.upper()
    if t == "A":
        return rank * (rank + 1) // 2
    if t in ("B", "C"):
        return rank * rank
    if t == "D":
        return rank * (rank - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
            ("F", 4): 24, ("G", 2): 6}[(t, rank)]


def table_maximal_root(type_label: str, rank: int) -> tuple[int, ...]:
    t = type_label.upper()
    if t == "A":
        return (1,) * rank
    if t == "B":
        return (1,) + (2,) * (rank - 1)
    if t == "C":
        return (2,) * (rank - 1) + (1,)
    if t == "D":
        return (1,) + (2,) * (rank - 3) + (1, 1)
    return {("E", 6): (1, 2, 2, 3, 2, 1),
            ("E", 7): (2, 2, 3, 4, 3, 2, 1),
            ("E", 8): (2, 3, 4, 6, 5, 4, 3, 2),
            ("F", 4): (2, 3, 4, 2),
            ("G", 2): (3, 2)}[(t, rank)]


def table_dim_g(type_label: str, rank: int) -> int:
    return 2 * table_positive_count(type_label, rank) + rank


def all_types(max_classical_rank: int = 8):
    """(type, rank) pairs for every simple type up to the given rank."""
    out = []
    for l in range(1, max_classical_rank + 1):
        out.append(("A", l))
    for l in range(2, max_classical_rank + 1):
        out.append(("B", l))
        out.append(("C", l))
    for l in range(4, max_classical_rank + 1):
        out.append(("D", l))
    for l in (6, 7, 8):
        if l <= max(max_classical_rank, 8):
            out.append(("E", l))
    out.append(("F", 4))
    out.append(("G", 2))
    return out
