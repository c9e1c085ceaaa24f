"""Truncations of the Jacobi operator J_a, the ray, D-infinity and infinite stars."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .dominance import dominance_report
from .families import finite_star, truncated_dinf, truncated_ray
from .graph import walk_count
from .linalg import local_min_poly, min_poly



def _at_most_sqrt2(a: float) -> bool:
    # a = sqrt(2) itself rounds to a^2 = 2 + 4e-16; that boundary has no eigenvalue
    return a * a <= 2 * (1 + 1e-12)


@dataclass(frozen=True)
class JacobiSpec:
    """Off-diagonals ``a_0, a_1, ...``: a finite head then the constant 1."""

    head: tuple[float, ...]
    N: int

    def __post_init__(self):
        if any(not (x > 0) for x in self.head):
            raise ValueError("off-diagonal entries must be positive")
        if self.N < 1:
            raise ValueError("truncation size N must be >= 1")

    @classmethod
    def perturbed(cls, a: float, N: int) -> "JacobiSpec":
        return cls((float(a),), N)

    def a(self, n: int) -> float:
        return self.head[n] if n < len(self.head) else 1.0


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Zero diagonal, positive off-diagonal."""

    off: np.ndarray  # length N - 1

    @property
    def N(self) -> int:
        return len(self.off) + 1

    def dense(self) -> np.ndarray:
        m = np.zeros((self.N, self.N))
        i = np.arange(self.N - 1)
        m[i, i + 1] = m[i + 1, i] = self.off
        return m

    def matvec(self, x: np.ndarray) -> np.ndarray:
        y = np.zeros_like(x, dtype=float)
        y[:-1] += self.off * x[1:]
        y[1:] += self.off * x[:-1]
        return y


def truncate(spec: JacobiSpec) -> TridiagonalMatrix:
    return TridiagonalMatrix(np.array([spec.a(n) for n in range(spec.N - 1)], dtype=float))


def _count_below(off2: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Number of eigenvalues < x (vectorised over x) from the LDL^T pivots."""
    tiny = 1e-300
    q = -x.copy()
    q[q == 0] = -tiny
    count = (q < 0).astype(int)
    for b2 in off2:
        q = -x - b2 / q
        q[q == 0] = -tiny
        count += q < 0
    return count


def tridiag_eigenvalues(m: TridiagonalMatrix, tol: float = 1e-12, max_iter: int = 200) -> np.ndarray:
    """All eigenvalues, ascending, by Sturm-count bisection to absolute ``tol``."""
    n = m.N
    off = np.abs(m.off)
    radius = 0.0 if n == 1 else float(np.max(np.concatenate(([0.0], off)) + np.concatenate((off, [0.0]))))
    lo = np.full(n, -radius - 1e-9)
    hi = np.full(n, radius + 1e-9)
    k = np.arange(n)
    off2 = off**2
    for _ in range(max_iter):
        if np.max(hi - lo) <= tol:
            break
        mid = (lo + hi) / 2
        above = _count_below(off2, mid) >= k + 1
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    return (lo + hi) / 2


def ja_point_spectrum(a: float) -> list[float]:
    """Eigenvalues of the infinite J_a: none for a <= sqrt 2, else +-a^2/sqrt(a^2-1)."""
    if not a > 0:
        raise ValueError("a must be positive")
    if _at_most_sqrt2(a):
        return []
    lam = a * a / math.sqrt(a * a - 1)
    return [lam, -lam]


@dataclass(frozen=True)
class GeometricEigenvector:
    eigenvalue: float
    ratio: float
    vector: np.ndarray
    residual: float  # relative, last row excluded
    boundary_bound: float  # |r|^N


def ja_eigenvector(a: float, sign: int, N: int) -> GeometricEigenvector:
    """``xi_0 = K/a``, ``xi_n = K r^n``; truncated to length N and normalised."""
    if _at_most_sqrt2(a):
        raise ValueError("a geometric eigenvector exists only for a > sqrt 2")
    if N < 2:
        raise ValueError("N must be >= 2")
    lam = a * a / math.sqrt(a * a - 1)
    if sign < 0:
        lam = -lam
    r = (lam - math.copysign(math.sqrt(lam * lam - 4), lam)) / 2
    xi = np.array([1.0 / a] + [r**n for n in range(1, N)])
    xi /= np.linalg.norm(xi)
    m = truncate(JacobiSpec.perturbed(a, N))
    res = m.matvec(xi) - lam * xi
    return GeometricEigenvector(lam, r, xi, float(np.linalg.norm(res[:-1])), abs(r) ** N)


# --------------------------------------------------------------------------
# orthogonal polynomials


def chebyshev_P(n: int, t):
    """``P_0 = 1, P_1 = t, P_n = t P_{n-1} - P_{n-2}``; ``P_n(2 cos th) = sin((n+1)th)/sin th``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p_prev, p = np.ones_like(t, dtype=float), np.asarray(t, dtype=float)
    if n == 0:
        return p_prev if np.ndim(t) else 1.0
    for _ in range(n - 1):
        p_prev, p = p, t * p - p_prev
    return p


def orthopoly_Q(a: Sequence[float] | JacobiSpec, n: int, t):
    """Polynomials of the recurrence ``t Q_n = a_{n-1} Q_{n-1} + a_n Q_{n+1}``, ``Q_0 = 1``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coef = a.a if isinstance(a, JacobiSpec) else (lambda k: a[k] if k < len(a) else 1.0)
    q_prev = np.ones_like(t, dtype=float)
    if n == 0:
        return q_prev if np.ndim(t) else 1.0
    q = np.asarray(t, dtype=float) / coef(0)
    for k in range(1, n):
        q_prev, q = q, (t * q - coef(k - 1) * q_prev) / coef(k)
    return q


def semicircle_quadrature(f: Callable, nodes: int = 256) -> float:
    """``int f dmu`` for ``dmu = (1/2pi) sqrt(4 - t^2) dt``; exact for degree <= 2*nodes + 1."""
    if nodes < 64:
        raise ValueError("use at least 64 nodes")
    theta = np.arange(1, nodes + 1) * math.pi / (nodes + 1)
    w = 2.0 / (nodes + 1) * np.sin(theta) ** 2
    return float(np.sum(w * f(2 * np.cos(theta))))


@dataclass(frozen=True)
class RayMoment:
    exact: int
    quadrature: float
    gap: float


def ray_moment_check(j: int, m: int, N: int, nodes: int = 256) -> RayMoment:
    """Closed walks of length 2m at ray vertex j against ``int t^2m P_j^2 dmu``."""
    if j < 0 or m < 0:
        raise ValueError("j and m must be non-negative")
    if N <= 2 * m + j:
        raise ValueError(f"N={N} too small: walks from {j} of length {2 * m} may see the boundary")
    exact = walk_count(truncated_ray(N), j, j, 2 * m)
    quad = semicircle_quadrature(lambda t: t ** (2 * m) * chebyshev_P(j, t) ** 2, nodes)
    return RayMoment(exact, quad, abs(exact - quad))


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


# --------------------------------------------------------------------------
# stars and D-infinity


@dataclass(frozen=True)
class StarBlocks:
    k: int
    N: int
    off_block_residual: float
    in_block_residual: float
    blocks: tuple[np.ndarray, ...]  # k-1 blocks of size N, then the (N+1)-block

    @property
    def corner(self) -> float:
        return float(self.blocks[-1][0, 1])

    @property
    def residual(self) -> float:
        return max(self.off_block_residual, self.in_block_residual)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "N": self.N,
            "off_block_residual": self.off_block_residual,
            "in_block_residual": self.in_block_residual,
            "corner": self.corner,
            "block_sizes": [b.shape[0] for b in self.blocks],
        }


def star_unitary(k: int, N: int) -> np.ndarray:
    """Columns ``eps_{l,n}`` (l = 1..k-1, n = 1..N), then ``delta_0``, ``eps_{k,1..N}``."""
    n_vertices = k * N + 1
    omega = np.exp(2j * np.pi / k)
    u = np.zeros((n_vertices, n_vertices), dtype=complex)
    col = 0

    def eps(l: int, n: int) -> np.ndarray:
        x = np.zeros(n_vertices, dtype=complex)
        for i in range(1, k + 1):
            x[1 + (i - 1) * N + (n - 1)] = omega ** (-i * l) / math.sqrt(k)
        return x

    for l in range(1, k):
        for n in range(1, N + 1):
            u[:, col] = eps(l, n)
            col += 1
    u[0, col] = 1.0
    col += 1
    for n in range(1, N + 1):
        u[:, col] = eps(k, n)
        col += 1
    return u


def star_block_diagonalize(k: int, N: int) -> StarBlocks:
    if k < 3 or N < 2:
        raise ValueError("need k >= 3 and N >= 2")
    a = finite_star(k, N).adjacency_matrix(dtype=float)
    u = star_unitary(k, N)
    b = u.conj().T @ a @ u
    sizes = [N] * (k - 1) + [N + 1]
    predicted = np.zeros_like(b)
    mask = np.zeros(b.shape, dtype=bool)
    blocks = []
    start = 0
    for idx, size in enumerate(sizes):
        sl = slice(start, start + size)
        head = (math.sqrt(k),) if idx == k - 1 else ()
        predicted[sl, sl] = truncate(JacobiSpec(head, size)).dense()
        mask[sl, sl] = True
        blocks.append(b[sl, sl].real.copy())
        start += size
    diff = np.abs(b - predicted)
    return StarBlocks(k, N, float(diff[~mask].max()), float(diff[mask].max()), tuple(blocks))


def star_top_eigenvalue(k: int, N: int) -> float:
    """Largest eigenvalue of the truncated star through its block decomposition."""
    special = tridiag_eigenvalues(truncate(JacobiSpec((math.sqrt(k),), N + 1)))
    free = tridiag_eigenvalues(truncate(JacobiSpec((), N)))
    return float(max(special[-1], free[-1]))


@dataclass(frozen=True)
class DInfinityCheck:
    N: int
    residual: int  # max |A (delta_0 - delta_0')|, exact
    projections: dict[str, int]  # <delta_j, delta_0 - delta_0'> for path vertices j
    dominant: dict[str, bool]
    null_at_zero: dict[str, bool]  # path vertex j has null factor T (recorded, not asserted)


def d_infinity_eigenvector_check(N: int) -> DInfinityCheck:
    if N < 2:
        raise ValueError("N must be >= 2")
    g = truncated_dinf(N)
    x = [0] * g.n
    x[g.index_of("0")], x[g.index_of("0'")] = 1, -1
    a = g.adjacency_matrix(dtype=object)
    residual = int(max(abs(c) for c in a.dot(np.array(x, dtype=object))))
    path = [v for v in range(g.n) if g.label(v) not in ("0", "0'")]
    projections = {g.label(v): x[v] for v in path}
    rep = dominance_report(g)
    dominant = {r.label: r.dominant_exact for r in rep.vertices}
    null0 = {
        rep.vertices[v].label: any(f.coeffs == (0, 1) for f in rep.vertices[v].null_factors) for v in path
    }
    return DInfinityCheck(N, residual, projections, dominant, null0)


# --------------------------------------------------------------------------
# convergence tables


@dataclass(frozen=True)
class ConvergenceRow:
    a: float
    N: int
    top_eigenvalue: float
    predicted: float
    gap: float

    def csv(self) -> str:
        return f"{self.a:.12g},{self.N},{self.top_eigenvalue:.15g},{self.predicted:.15g},{self.gap:.6e}"


CONVERGENCE_HEADER = "a,N,top_eigenvalue,predicted,gap"


def predicted_norm(a: float) -> float:
    pts = ja_point_spectrum(a)
    return pts[0] if pts else 2.0


def jacobi_convergence(a: float, Ns: Sequence[int]) -> list[ConvergenceRow]:
    pred = predicted_norm(a)
    rows = []
    for N in Ns:
        top = float(tridiag_eigenvalues(truncate(JacobiSpec.perturbed(a, N)))[-1])
        rows.append(ConvergenceRow(a, N, top, pred, abs(pred - top)))
    return rows


def star_convergence(k: int, Ns: Sequence[int]) -> list[ConvergenceRow]:
    if k < 3:
        raise ValueError("stars need k >= 3")
    a = math.sqrt(k)
    pred = predicted_norm(a)
    rows = []
    for N in Ns:
        top = star_top_eigenvalue(k, N)
        rows.append(ConvergenceRow(a, N, top, pred, abs(pred - top)))
    return rows


@dataclass(frozen=True)
class CoreEvidence:
    k: int
    N: int
    n: int
    s: int
    core_local_degree: int
    noncore_all_dominant: bool

    @property
    def ratio(self) -> float:
        return self.core_local_degree / self.s


def star_core_evidence(k: int, N: int) -> CoreEvidence:
    """Truncated-star data on the core's local degree (reported, nothing asserted)."""
    g = finite_star(k, N)
    s = min_poly(g).degree
    rep = dominance_report(g)
    return CoreEvidence(
        k, N, g.n, s, local_min_poly(g, 0).degree, all(r.dominant_exact for r in rep.vertices[1:])
    )
