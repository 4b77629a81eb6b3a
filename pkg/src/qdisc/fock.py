"""The Fock representation of the quantum disc on a truncated basis.

The carrier has basis vectors indexed 0..N with

    z  e_n = e_{n+1},
    z* e_n = (1 - q^(2n)) e_{n-1},
    f0 e_n = delta_{n,0} e_0,

and the invariant inner product <e_m, e_n> = delta_{mn} g_n, where
g_0 = 1, g_n = g_{n-1} (1 - q^(2n)).

Truncation discipline: an element of degree d moves index n by at most d,
so columns n <= N - d of its matrix are exact and columns beyond that may
have dropped contributions.  Matrices carry that reliability boundary;
products add boundaries, comparisons intersect reliable column ranges.
"""

from __future__ import annotations

import numpy as np

from .scalar import Scalar, ZERO, ONE, q_pow
from .modalg import CheckReport, ExtElement
from . import linalg

_weights: list[Scalar] = [ONE]


def weight(n: int) -> Scalar:
    """g_n = prod_{k=1..n} (1 - q^(2k))."""
    while len(_weights) <= n:
        k = len(_weights)
        _weights.append(_weights[-1] * (ONE - q_pow(2 * k)))
    return _weights[n]


class FockMatrix:
    """(N+1) x (N+1) matrix over Q(s) with a truncation boundary."""

    __slots__ = ("N", "boundary", "entries")

    def __init__(self, N: int, boundary: int = 0,
                 entries: dict[tuple[int, int], Scalar] | None = None):
        self.N = N
        self.boundary = boundary
        self.entries = {k: c for k, c in (entries or {}).items() if c}

    @staticmethod
    def identity(N: int) -> "FockMatrix":
        return FockMatrix(N, 0, {(i, i): ONE for i in range(N + 1)})

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __add__(self, other: "FockMatrix") -> "FockMatrix":
        if self.N != other.N:
            raise ValueError("size mismatch")
        ent = dict(self.entries)
        for k, c in other.entries.items():
            v = ent.get(k, ZERO) + c
            if v:
                ent[k] = v
            else:
                ent.pop(k, None)
        return FockMatrix(self.N, max(self.boundary, other.boundary), ent)

    def __sub__(self, other: "FockMatrix") -> "FockMatrix":
        return self + other.scale(-ONE)

    def scale(self, c: Scalar) -> "FockMatrix":
        if not c:
            return FockMatrix(self.N, self.boundary)
        return FockMatrix(self.N, self.boundary,
                          {k: v * c for k, v in self.entries.items()})

    def __mul__(self, other: "FockMatrix") -> "FockMatrix":
        if self.N != other.N:
            raise ValueError("size mismatch")
        by_row: dict[int, list[tuple[int, Scalar]]] = {}
        for (i, k), c in self.entries.items():
            by_row.setdefault(k, []).append((i, c))
        ent: dict[tuple[int, int], Scalar] = {}
        for (k, j), c2 in other.entries.items():
            for i, c1 in by_row.get(k, ()):
                key = (i, j)
                v = ent.get(key, ZERO) + c1 * c2
                if v:
                    ent[key] = v
                else:
                    ent.pop(key, None)
        return FockMatrix(self.N, self.boundary + other.boundary, ent)

    def reliable_columns(self) -> range:
        return range(0, max(0, self.N - self.boundary) + 1)

    def equal_on_reliable(self, other: "FockMatrix") -> bool:
        if self.N != other.N:
            raise ValueError("size mismatch")
        cols = min(self.N - self.boundary, other.N - other.boundary)
        for (i, j), c in self.entries.items():
            if j <= cols and other.entries.get((i, j), ZERO) != c:
                return False
        for (i, j), c in other.entries.items():
            if j <= cols and (i, j) not in self.entries:
                return False
        return True

    def is_zero_on_reliable(self) -> bool:
        cols = self.N - self.boundary
        return all(j > cols for (_, j) in self.entries)

    def column(self, j: int) -> dict[int, Scalar]:
        return {i: c for (i, jj), c in self.entries.items() if jj == j}

    def to_float(self, q0: float) -> np.ndarray:
        out = np.zeros((self.N + 1, self.N + 1))
        for (i, j), c in self.entries.items():
            out[i, j] = c.eval_float(q0)
        return out

    def to_float_orthonormal(self, q0: float) -> np.ndarray:
        """Conjugated to the orthonormal basis e_n / sqrt(g_n)."""
        g = _float_weights(self.N, q0)
        out = np.zeros((self.N + 1, self.N + 1))
        for (i, j), c in self.entries.items():
            out[i, j] = c.eval_float(q0) * np.sqrt(g[i] / g[j])
        return out


def _float_weights(N: int, q0: float) -> np.ndarray:
    g = np.ones(N + 1)
    for k in range(1, N + 1):
        g[k] = g[k - 1] * (1.0 - q0 ** (2 * k))
    return g


def fock_matrix(e: ExtElement, N: int) -> FockMatrix:
    """Matrix of a pol + fin element on the truncated basis."""
    ent: dict[tuple[int, int], Scalar] = {}
    for (a, b), c in e.pol.items():
        for n in range(b, N + 1):
            i = n - b + a
            if i > N:
                continue
            w = ONE
            for k in range(n - b + 1, n + 1):
                w = w * (ONE - q_pow(2 * k))
            v = ent.get((i, n), ZERO) + c * w
            if v:
                ent[(i, n)] = v
            else:
                ent.pop((i, n), None)
    for (a, b), c in e.fin.items():
        if a <= N and b <= N:
            v = ent.get((a, b), ZERO) + c * weight(b)
            if v:
                ent[(a, b)] = v
            else:
                ent.pop((a, b), None)
    return FockMatrix(N, e.degree(), ent)


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------

def relation_defect_zero(N: int) -> bool:
    """z* z - q^2 z z* - (1 - q^2) vanishes on reliable columns."""
    Z = fock_matrix(ExtElement.pol_mono(1, 0), N)
    Zs = fock_matrix(ExtElement.pol_mono(0, 1), N)
    lhs = Zs * Z - (Z * Zs).scale(q_pow(2)) \
        - FockMatrix.identity(N).scale(ONE - q_pow(2))
    return lhs.is_zero_on_reliable()


def relation_defect_float(N: int, q0: float) -> float:
    """Max abs defect of the relation in the orthonormal basis, off boundary."""
    Z = fock_matrix(ExtElement.pol_mono(1, 0), N).to_float_orthonormal(q0)
    Zs = fock_matrix(ExtElement.pol_mono(0, 1), N).to_float_orthonormal(q0)
    lhs = Zs @ Z - q0 ** 2 * (Z @ Zs) - (1.0 - q0 ** 2) * np.eye(N + 1)
    return float(np.max(np.abs(lhs[:, : N - 1])))


def adjoint_transpose_check(N: int, q0: float) -> float:
    """In the orthonormal basis the matrix of z* is the transpose of z."""
    Z = fock_matrix(ExtElement.pol_mono(1, 0), N).to_float_orthonormal(q0)
    Zs = fock_matrix(ExtElement.pol_mono(0, 1), N).to_float_orthonormal(q0)
    return float(np.max(np.abs(Zs - Z.T)))


def inner(m: int, n: int) -> Scalar:
    return weight(n) if m == n else ZERO


def adjoint_check_exact(N: int) -> bool:
    """<z e_m, e_n> = <e_m, z* e_n> for all m, n <= N."""
    for m in range(N + 1):
        for n in range(N + 1):
            lhs = inner(m + 1, n) if m + 1 <= N else ZERO
            rhs = (ONE - q_pow(2 * n)) * inner(m, n - 1) if n >= 1 else ZERO
            if lhs != rhs:
                return False
    return True


def vacuum_vectors(N: int) -> list[list[Scalar]]:
    """Exact basis of ker(z*) on the truncated carrier.

    The kernel must come out one-dimensional, spanned by e_0.
    """
    Zs = fock_matrix(ExtElement.pol_mono(0, 1), N)
    rows = [[Zs.entries.get((i, j), ZERO) for j in range(N + 1)]
            for i in range(N + 1)]
    return linalg.nullspace(rows, N + 1)


def vacuum_kernel_dim(N: int) -> int:
    """Exact dimension of ker(z*) on the truncated carrier."""
    return len(vacuum_vectors(N))


def monomial_rank(D: int, N: int) -> int:
    """Rank over Q(s) of the matrices of z^a (z*)^b, a, b <= D.

    Only columns n <= N - D are used: there every monomial matrix entry
    is exact, so the result is a statement about the representation, not
    about the cutoff.  Columns below b are zeroed by (z*)^b, so N must
    leave room for columns reaching b = D.
    """
    reliable = N - D
    if reliable < D:
        raise ValueError("truncation too small for the requested degrees")
    rows = []
    for a in range(D + 1):
        for b in range(D + 1):
            m = fock_matrix(ExtElement.pol_mono(a, b), N)
            rows.append([m.entries.get((i, j), ZERO)
                         for j in range(reliable + 1) for i in range(N + 1)])
    return linalg.rank(rows)


def commutant_dim(N: int, q0: float, tol: float = 1e-9) -> int:
    """Numeric dimension of {X : XZ = ZX, XZ* = Z*X} at q = q0."""
    Z = fock_matrix(ExtElement.pol_mono(1, 0), N).to_float_orthonormal(q0)
    Zs = fock_matrix(ExtElement.pol_mono(0, 1), N).to_float_orthonormal(q0)
    n = N + 1
    eye = np.eye(n)
    top = np.kron(eye, Z) - np.kron(Z.T, eye)      # vec(ZX - XZ)
    bot = np.kron(eye, Zs) - np.kron(Zs.T, eye)
    stacked = np.vstack([top, bot])
    sv = np.linalg.svd(stacked, compute_uv=False)
    return int(np.sum(sv < tol * sv[0]))


def faithfulness_check(degree_bound: int, N: int) -> CheckReport:
    """The (degree_bound+1)^2 monomial matrices are linearly independent."""
    expected = (degree_bound + 1) ** 2
    got = monomial_rank(degree_bound, N)
    failures = [] if got == expected else \
        [f"monomial matrices a,b <= {degree_bound} at N={N}: "
         f"rank {got}, expected {expected}"]
    return CheckReport(expected, failures)


def irreducibility_check(N: int, q0: float, tol: float = 1e-9) -> CheckReport:
    """Commutant of the truncated pair (z, z*) is scalars only.

    Numeric at q0; the truncation keeps the boundary column, so this is
    a statement about the cut matrices, read as evidence for the
    untruncated representation.
    """
    dim = commutant_dim(N, q0, tol)
    failures = [] if dim == 1 else \
        [f"commutant dimension {dim} at N={N}, q0={q0}"]
    return CheckReport(1, failures)


def adjointness_check(N: int) -> CheckReport:
    """<z e_m, e_n> = <e_m, z* e_n> with <e_m, e_n> = delta g_n, exactly."""
    ok = adjoint_check_exact(N)
    failures = [] if ok else [f"adjointness fails within N={N}"]
    return CheckReport((N + 1) ** 2, failures)
