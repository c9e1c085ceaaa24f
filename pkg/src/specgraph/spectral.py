"""Eigen-decomposition, vertex spectral measures and spectral walk counts.

Two routes produce the spectral weights ``c_j^2(v)``:

* ``"float"`` projects ``delta_v`` onto the eigenvectors returned by the
  cyclic Jacobi solver (double precision);
* ``"precise"`` evaluates the spectral projectors ``E_j = Q_j(A)`` where
  ``Q_j`` is the Lagrange basis polynomial of the minimal polynomial at
  ``lambda_j``, using exact integer powers of ``A`` and eigenvalues refined
  with mpmath.  Moments of large order need this route: with doubles the
  cancellation between ``+lambda^n`` and ``-lambda^n`` in bipartite graphs
  leaves an error of order ``eps * lambda_1^n``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath
import numpy as np

from .factor import real_root_intervals
from .graph import Graph, integer_matrix_powers, is_bipartite, is_connected, closed_walk_counts
from .linalg import min_poly
from .polynomial import IntPolynomial

log = logging.getLogger(__name__)

CLUSTER_TOL = 1e-7
DOM_TOL = 1e-9


class EigenToleranceError(RuntimeError):
    pass


# --------------------------------------------------------------------------
# cyclic Jacobi


def default_eig_tol(a: np.ndarray) -> float:
    n = a.shape[0]
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    return 1e-12 * max(scale, 1.0) * max(n, 1)


def jacobi_eigh(a: np.ndarray, tol: float | None = None, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and orthonormal eigenvectors of a real symmetric matrix.

    Cyclic-by-row Jacobi rotations until every off-diagonal entry is below ``tol``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T):
        raise ValueError("jacobi_eigh needs a square symmetric matrix")
    tol = default_eig_tol(a) if tol is None else tol
    v = np.identity(n)
    for _ in range(max_sweeps):
        off = np.abs(a - np.diag(np.diag(a)))
        if n < 2 or off.max() < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p], a[:, q] = c * cp - s * cq, s * cp + c * cq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :], a[q, :] = c * rp - s * rq, s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p], v[:, q] = c * vp - s * vq, s * vp + c * vq
    else:
        raise EigenToleranceError(f"Jacobi did not reach tol={tol:g} in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def cluster_eigenvalues(w: Sequence[float], cluster_tol: float = CLUSTER_TOL) -> list[list[int]]:
    """Group indices of descending eigenvalues at gaps larger than ``cluster_tol*(1+|lambda|)``."""
    groups: list[list[int]] = []
    for i, lam in enumerate(w):
        if groups and w[groups[-1][-1]] - lam <= cluster_tol * (1 + abs(lam)):
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _split_at_largest_gaps(w: Sequence[float], s: int) -> list[list[int]]:
    n = len(w)
    gaps = sorted(range(n - 1), key=lambda i: (-(w[i] - w[i + 1]), i))[: s - 1]
    cuts = sorted(gaps)
    groups, start = [], 0
    for c in cuts:
        groups.append(list(range(start, c + 1)))
        start = c + 1
    groups.append(list(range(start, n)))
    return groups


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray  # distinct, strictly decreasing
    multiplicities: tuple[int, ...]
    eigenvectors: tuple[np.ndarray, ...]  # per cluster, n x m_j
    all_values: np.ndarray
    reclustered: bool = False
    tolerance_failure: bool = False

    @property
    def s(self) -> int:
        return len(self.multiplicities)

    def projection_weights(self, v: int) -> np.ndarray:
        """``c_j^2(v)`` for every cluster ``j``."""
        return np.array([float(np.sum(u[v, :] ** 2)) for u in self.eigenvectors])

    def pair_weights(self, v: int, w: int) -> np.ndarray:
        return np.array([float(np.dot(u[v, :], u[w, :])) for u in self.eigenvectors])


def eigendecompose(
    g: Graph,
    eig_tol: float | None = None,
    cluster_tol: float = CLUSTER_TOL,
    exact_s: int | None = None,
) -> Spectrum:
    if g.n < 1:
        raise ValueError("eigendecompose needs n >= 1")
    if eig_tol is None and exact_s is None and cluster_tol == CLUSTER_TOL:
        return _cached_spectrum(g)
    return _eigendecompose(g, eig_tol, cluster_tol, exact_s)


@lru_cache(maxsize=512)
def _cached_spectrum(g: Graph) -> Spectrum:
    return _eigendecompose(g, None, CLUSTER_TOL, None)


def _eigendecompose(g, eig_tol, cluster_tol, exact_s) -> Spectrum:
    a = g.adjacency_matrix(dtype=float)
    w, vecs = jacobi_eigh(a, eig_tol)
    if exact_s is None:
        exact_s = min_poly(g).degree
    groups = cluster_eigenvalues(w, cluster_tol)
    reclustered = failure = False
    if len(groups) != exact_s:
        log.warning("%s: %d float clusters but exact s=%d; re-clustering", g.name or g, len(groups), exact_s)
        groups = _split_at_largest_gaps(w, exact_s)
        reclustered = True
        spread = max(w[grp[0]] - w[grp[-1]] for grp in groups)
        if spread > 1e3 * cluster_tol:
            log.error("%s: re-clustered spectrum has spread %.3g; eigensolver tolerance failure", g.name or g, spread)
            failure = True
    values = np.array([float(np.mean(w[grp])) for grp in groups])
    return Spectrum(
        values=values,
        multiplicities=tuple(len(grp) for grp in groups),
        eigenvectors=tuple(vecs[:, grp] for grp in groups),
        all_values=w,
        reclustered=reclustered,
        tolerance_failure=failure,
    )


# --------------------------------------------------------------------------
# high-precision spectral projectors


def _refine_root(p: IntPolynomial, dp: IntPolynomial, lo: Fraction, hi: Fraction) -> mpmath.mpf:
    """Safeguarded Newton inside the isolating bracket, at the current mp precision."""
    a, b = mpmath.mpf(lo.numerator) / lo.denominator, mpmath.mpf(hi.numerator) / hi.denominator
    if a == b:
        return a
    fa = p(a)
    x = (a + b) / 2
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec + 8)
    for _ in range(4 * mpmath.mp.prec):
        fx = p(x)
        if fx == 0:
            return x
        if (fx > 0) == (fa > 0):
            a, fa = x, fx
        else:
            b = x
        d = dp(x)
        step = fx / d if d != 0 else None
        nx = x - step if step is not None else (a + b) / 2
        if not (a < nx < b):
            nx = (a + b) / 2
        if abs(nx - x) <= eps * max(1, abs(x)):
            return nx
        x = nx
    return x


@dataclass(frozen=True)
class ExactSpectralData:
    """Eigenvalues and projector polynomials at ``dps`` decimal digits."""

    min_poly: IntPolynomial
    dps: int
    values: tuple  # mpf, strictly decreasing
    lagrange: tuple  # lagrange[j][k]: coefficient of T^k in Q_j
    powers: tuple  # exact A^k, k < s (object arrays)
    multiplicities: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.values)

    def pair_weights(self, v: int, w: int) -> list:
        with mpmath.workdps(self.dps):
            walks = [int(pk[v, w]) for pk in self.powers]
            return [mpmath.fsum(q * c for q, c in zip(row, walks)) for row in self.lagrange]

    def weights(self, v: int) -> list:
        return self.pair_weights(v, v)


@lru_cache(maxsize=256)
def exact_spectral_data(g: Graph, dps: int | None = None) -> ExactSpectralData:
    p = min_poly(g)
    s = p.degree
    roots_lo = real_root_intervals(p, 60)
    rho = max(abs(float(hi)) for _, hi in roots_lo)
    if dps is None:
        dps = 50 + int(2 * s * math.log10(2 + rho))
    dp = p.derivative()
    with mpmath.workdps(dps):
        values = tuple(_refine_root(p, dp, lo, hi) for lo, hi in roots_lo)
        lagrange = []
        for lam in values:
            # synthetic division P(T) = (T - lam) * B(T)
            b = [mpmath.mpf(0)] * s
            acc = mpmath.mpf(0)
            for k in range(s, 0, -1):
                acc = acc * lam + p.coeffs[k]
                b[k - 1] = acc
            scale = dp(lam)
            lagrange.append(tuple(c / scale for c in b))
        powers = tuple(integer_matrix_powers(g, s - 1))
        mults = []
        for row in lagrange:
            tr = mpmath.fsum(q * int(np.trace(pk)) for q, pk in zip(row, powers))
            mults.append(int(mpmath.nint(tr)))
    if sum(mults) != g.n:
        raise ArithmeticError("projector traces do not sum to n")
    return ExactSpectralData(p, dps, values, tuple(lagrange), powers, tuple(mults))


# --------------------------------------------------------------------------
# measures


@dataclass(frozen=True)
class AtomicMeasure:
    """Finitely supported positive measure; atoms sorted by decreasing location."""

    atoms: tuple[tuple, ...]

    def __post_init__(self):
        locs = [t for t, _ in self.atoms]
        if any(a <= b for a, b in zip(locs, locs[1:])):
            raise ValueError("atom locations must be strictly decreasing")
        if any(m < -1e-12 for _, m in self.atoms):
            raise ValueError("atom masses must be non-negative")

    @property
    def locations(self) -> list:
        return [t for t, _ in self.atoms]

    @property
    def masses(self) -> list:
        return [m for _, m in self.atoms]

    def total_mass(self):
        return sum(self.masses)

    def moment(self, n: int):
        return sum(m * t**n for t, m in self.atoms)

    def mass_at(self, j: int):
        return self.atoms[j][1]

    def to_json(self) -> list[dict]:
        return [{"t": float(t), "mass": float(m)} for t, m in self.atoms]


def total_variation(mu: AtomicMeasure, nu: AtomicMeasure) -> float:
    """TV distance for measures on the same ordered support."""
    if len(mu.atoms) != len(nu.atoms):
        raise ValueError("measures have different supports")
    return float(sum(abs(a - b) for a, b in zip(mu.masses, nu.masses))) / 2


def vertex_spectral_measure(g: Graph, v: int, route: str = "precise") -> AtomicMeasure:
    """Mass ``c_j^2(v)`` at each distinct eigenvalue (including zero masses)."""
    if route == "float":
        spec = eigendecompose(g)
        return AtomicMeasure(tuple(zip(spec.values.tolist(), spec.projection_weights(v).tolist())))
    if route != "precise":
        raise ValueError(f"unknown route {route!r}")
    data = exact_spectral_data(g)
    return AtomicMeasure(tuple(zip(data.values, data.weights(v))))


def counting_measure(g: Graph, route: str = "precise") -> AtomicMeasure:
    """Mass ``m_j / n`` at each distinct eigenvalue (density of states)."""
    if route == "float":
        spec = eigendecompose(g)
        return AtomicMeasure(tuple((lam, m / g.n) for lam, m in zip(spec.values.tolist(), spec.multiplicities)))
    data = exact_spectral_data(g)
    with mpmath.workdps(data.dps):
        return AtomicMeasure(tuple((lam, mpmath.mpf(m) / g.n) for lam, m in zip(data.values, data.multiplicities)))


def average_vertex_measure(g: Graph, route: str = "precise") -> AtomicMeasure:
    measures = [vertex_spectral_measure(g, v, route) for v in range(g.n)]
    locs = measures[0].locations
    masses = [sum(mu.masses[j] for mu in measures) / g.n for j in range(len(locs))]
    return AtomicMeasure(tuple(zip(locs, masses)))


@dataclass(frozen=True)
class WeightTable:
    """``weights[v][j] = c_j^2(v)`` from the floating eigenvectors."""

    values: tuple[float, ...]
    weights: np.ndarray
    labels: tuple[str, ...] = field(default=())

    def to_csv(self) -> str:
        head = "vertex," + ",".join(f"{lam:.12g}" for lam in self.values)
        rows = [head]
        for v, row in enumerate(self.weights):
            name = self.labels[v] if self.labels else str(v)
            rows.append(name + "," + ",".join(f"{x:.17g}" for x in row))
        return "\n".join(rows) + "\n"


def weight_table(g: Graph) -> WeightTable:
    spec = eigendecompose(g)
    table = np.array([spec.projection_weights(v) for v in range(g.n)])
    labels = tuple(g.label(v) for v in range(g.n))
    return WeightTable(tuple(spec.values.tolist()), table, labels)


# --------------------------------------------------------------------------
# walk counts and related checks


def walk_count_spectral(g: Graph, v: int, w: int, n: int, route: str = "precise") -> float:
    """``sum_j d_j lambda_j^n`` with ``d_j = <E_j delta_v, E_j delta_w>``."""
    if n < 0:
        raise ValueError("walk length must be non-negative")
    return spectral_walk_counts(g, v, w, n, route)[n]


def spectral_walk_counts(g: Graph, v: int, w: int, n_max: int, route: str = "precise") -> list[float]:
    """Spectral walk counts for every length ``0 .. n_max``."""
    if n_max < 0:
        raise ValueError("walk length must be non-negative")
    if route == "float":
        spec = eigendecompose(g)
        d = spec.pair_weights(v, w)
        return [float(np.sum(d * spec.values**n)) for n in range(n_max + 1)]
    if route != "precise":
        raise ValueError(f"unknown route {route!r}")
    data = exact_spectral_data(g)
    d = data.pair_weights(v, w)
    out = []
    with mpmath.workdps(data.dps + int(n_max * math.log10(2 + float(abs(data.values[0])))) + 5):
        terms = list(d)
        for _ in range(n_max + 1):
            out.append(float(mpmath.fsum(terms)))
            terms = [t * lam for t, lam in zip(terms, data.values)]
    return out


def is_walk_regular(g: Graph) -> bool:
    """Exact check that ``diag(A^k)`` is constant for ``k = 0 .. 2s``."""
    if g.n <= 1:
        return True
    s = min_poly(g).degree
    a = g.adjacency_matrix(dtype=object)
    p = np.identity(g.n, dtype=int).astype(object)
    for _ in range(2 * s + 1):
        diag = [p[i, i] for i in range(g.n)]
        if any(x != diag[0] for x in diag):
            return False
        p = p.dot(a)
    return True


@dataclass(frozen=True)
class LoopGrowth:
    terms: tuple[float, ...]  # (<A^{2k} delta_v | delta_v>)^(1/2k), k = 1..n_max
    lambda_1: float
    gap: float


def loop_growth(g: Graph, v: int, n_max: int) -> LoopGrowth:
    if g.num_edges == 0:
        raise ValueError("loop_growth needs at least one edge")
    if not is_connected(g):
        raise ValueError("loop_growth needs a connected graph")
    counts = closed_walk_counts(g, v, 2 * n_max)
    terms = tuple(math.exp(math.log(counts[2 * k]) / (2 * k)) for k in range(1, n_max + 1))
    lam1 = float(eigendecompose(g).values[0])
    return LoopGrowth(terms, lam1, lam1 - terms[-1])


def bipartite_symmetry_check(g: Graph) -> float:
    """``max_j |lambda_j + lambda_{s+1-j}|`` for a bipartite graph."""
    if not is_bipartite(g):
        raise ValueError("bipartite_symmetry_check needs a bipartite graph")
    vals = eigendecompose(g).values
    return float(np.max(np.abs(vals + vals[::-1])))
