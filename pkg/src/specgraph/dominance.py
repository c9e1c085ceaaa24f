"""Dominant, cyclic and null vertices; graph-level verdicts and corpus scans."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, inf
from typing import Iterable

import numpy as np

from .factor import DegreeCapError, factor_over_Q, real_roots
from .graph import Graph, diameter, distance_matrix, is_connected
from .graph6 import write_graph6
from .linalg import char_poly, krylov_rank, local_min_poly, min_poly
from .polynomial import IntPolynomial, RatPolynomial, poly_divmod
from .spectral import DOM_TOL, eigendecompose, is_walk_regular

log = logging.getLogger(__name__)

SCHEMA = "dominance-report/1"
SCAN_SCHEMA = "dominance-scan/1"


def is_dominant_exact(g: Graph, v: int) -> bool:
    """Rank of the n x s Krylov matrix of ``delta_v`` equals s."""
    s = min_poly(g).degree
    return krylov_rank(g, v, s) == s


def is_cyclic_vertex(g: Graph, v: int) -> bool:
    return local_min_poly(g, v).degree == g.n


def _cofactor(p: IntPolynomial, q: RatPolynomial) -> IntPolynomial:
    quo, rem = poly_divmod(p.coeffs, q.coeffs)
    if rem:
        raise ArithmeticError("local minimal polynomial does not divide the minimal polynomial")
    den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in quo), 1)
    return IntPolynomial(int(c * den) for c in quo).primitive()


def null_factors(g: Graph, v: int, local: RatPolynomial | None = None) -> list[IntPolynomial]:
    """Irreducible factors of the minimal polynomial that do not divide the local one.

    The minimal polynomial is square-free, so these are exactly the factors of
    ``min_poly / local_min_poly``.
    """
    local = local_min_poly(g, v) if local is None else local
    co = _cofactor(min_poly(g), local)
    if co.degree == 0:
        return []
    return [f for f, _ in factor_over_Q(co)]


@dataclass(frozen=True)
class VertexRecord:
    vertex: int
    label: str
    dominant_exact: bool
    dominant_float: bool
    cyclic: bool
    local_degree: int
    null_factors: tuple[IntPolynomial, ...]
    min_weight: float

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "label": self.label,
            "dominant_exact": self.dominant_exact,
            "dominant_float": self.dominant_float,
            "cyclic": self.cyclic,
            "local_degree": self.local_degree,
            "null_factors": [
                {"poly": str(f), "coeffs": f.to_json()["coeffs"], "roots": [float(r) for r in real_roots(f)]}
                for f in self.null_factors
            ],
            "min_weight": self.min_weight,
        }


@dataclass(frozen=True)
class DominanceReport:
    name: str
    n: int
    num_edges: int
    s: int
    char_poly: IntPolynomial
    min_poly: IntPolynomial
    irreducible_over_Q: bool | None
    vertices: tuple[VertexRecord, ...]
    walk_regular: bool
    diameter: float
    eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]
    disagreements: tuple[int, ...] = ()
    tolerance_failure: bool = False
    reclustered: bool = False
    notes: tuple[str, ...] = field(default=())

    @property
    def dominant_vertices(self) -> list[int]:
        return [r.vertex for r in self.vertices if r.dominant_exact]

    @property
    def dominant_labels(self) -> list[str]:
        return [r.label for r in self.vertices if r.dominant_exact]

    @property
    def dominant_count(self) -> int:
        return len(self.dominant_vertices)

    @property
    def has_dominant(self) -> bool:
        return self.dominant_count > 0

    @property
    def all_dominant(self) -> bool:
        return self.dominant_count == self.n

    def check_invariants(self) -> None:
        for r in self.vertices:
            assert not r.cyclic or r.dominant_exact
            assert r.dominant_exact == (r.local_degree == self.s)
            assert r.cyclic == (r.local_degree == self.n)
            assert r.dominant_exact == (not r.null_factors)
        if self.irreducible_over_Q:
            assert self.all_dominant

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "graph": {"name": self.name, "n": self.n, "edges": self.num_edges},
            "s": self.s,
            "char_poly": {"text": str(self.char_poly), **self.char_poly.to_json()},
            "min_poly": {"text": str(self.min_poly), **self.min_poly.to_json()},
            "irreducible_over_Q": self.irreducible_over_Q,
            "spectrum": [{"t": t, "multiplicity": m} for t, m in zip(self.eigenvalues, self.multiplicities)],
            "dominant_count": self.dominant_count,
            "dominant_vertices": self.dominant_labels,
            "has_dominant": self.has_dominant,
            "all_dominant": self.all_dominant,
            "walk_regular": self.walk_regular,
            "diameter": None if self.diameter == inf else int(self.diameter),
            "vertices": [r.to_json() for r in self.vertices],
            "route_disagreements": list(self.disagreements),
            "tolerance_failure": self.tolerance_failure,
            "reclustered": self.reclustered,
            "notes": list(self.notes),
        }


def dominance_report(g: Graph, dom_tol: float = DOM_TOL, eig_tol: float | None = None, cluster_tol: float | None = None) -> DominanceReport:
    if g.n < 1:
        raise ValueError("dominance_report needs n >= 1")
    cp = char_poly(g)
    mp = min_poly(g)
    s = mp.degree
    kwargs = {"exact_s": s, "eig_tol": eig_tol}
    if cluster_tol is not None:
        kwargs["cluster_tol"] = cluster_tol
    spec = eigendecompose(g, **kwargs)
    notes = []
    records = []
    disagreements = []
    for v in range(g.n):
        local = local_min_poly(g, v)
        weights = spec.projection_weights(v)
        dom_exact = local.degree == s
        dom_float = bool(np.all(weights > dom_tol))
        if dom_exact != dom_float:
            disagreements.append(v)
            log.warning("%s vertex %s: exact=%s float=%s (min weight %.3g)", g.name, g.label(v), dom_exact, dom_float, weights.min())
        records.append(
            VertexRecord(
                vertex=v,
                label=g.label(v),
                dominant_exact=dom_exact,
                dominant_float=dom_float,
                cyclic=local.degree == g.n,
                local_degree=local.degree,
                null_factors=tuple(null_factors(g, v, local)),
                min_weight=float(weights.min()),
            )
        )
    if s < g.n:
        irreducible: bool | None = False
    elif any(r.null_factors for r in records):
        irreducible = False
    else:
        try:
            fs = factor_over_Q(cp)
            irreducible = len(fs) == 1 and fs[0][1] == 1
        except DegreeCapError as exc:
            irreducible = None
            notes.append(f"irreducibility undecided: {exc}")
    report = DominanceReport(
        name=g.name or "graph",
        n=g.n,
        num_edges=g.num_edges,
        s=s,
        char_poly=cp,
        min_poly=mp,
        irreducible_over_Q=irreducible,
        vertices=tuple(records),
        walk_regular=is_walk_regular(g),
        diameter=diameter(g),
        eigenvalues=tuple(float(x) for x in spec.values),
        multiplicities=spec.multiplicities,
        disagreements=tuple(disagreements),
        tolerance_failure=spec.tolerance_failure,
        reclustered=spec.reclustered,
        notes=tuple(notes),
    )
    report.check_invariants()
    return report


def diameter_criterion(g: Graph) -> tuple[int, int] | None:
    """A pair at maximal distance d when s = d + 1; both are then dominant."""
    if not is_connected(g):
        raise ValueError("diameter_criterion needs a connected graph")
    d = diameter(g)
    if d < 1:
        raise ValueError("diameter_criterion needs diameter >= 1")
    if min_poly(g).degree != d + 1:
        return None
    dist = distance_matrix(g)
    pair = next((v, w) for v in range(g.n) for w in range(v + 1, g.n) if dist[v][w] == d)
    if not (is_dominant_exact(g, pair[0]) and is_dominant_exact(g, pair[1])):
        raise ArithmeticError(f"s = d + 1 but {pair} is not a dominant pair")
    return pair


def is_distance_regular(g: Graph) -> bool:
    """``#{u : d(u,v)=j, d(u,w)=h}`` depends only on ``d(v,w)``."""
    if not is_connected(g):
        raise ValueError("is_distance_regular needs a connected graph")
    dist = np.array(distance_matrix(g), dtype=int)
    d = int(dist.max()) if g.n else 0
    profiles: dict[int, np.ndarray] = {}
    for v in range(g.n):
        for w in range(g.n):
            counts = np.zeros((d + 1, d + 1), dtype=int)
            np.add.at(counts, (dist[v], dist[w]), 1)
            k = int(dist[v, w])
            if k in profiles:
                if not np.array_equal(profiles[k], counts):
                    return False
            else:
                profiles[k] = counts
    return True


# --------------------------------------------------------------------------
# corpus scans


@dataclass(frozen=True)
class Pattern:
    kind: str  # "no-dominant" | "all-dominant" | "exactly"
    k: int = 0

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        if text in ("no-dominant", "all-dominant"):
            return cls(text)
        if text.startswith("exactly-"):
            try:
                k = int(text.split("-", 1)[1])
            except ValueError:
                raise ValueError(f"bad pattern {text!r}") from None
            if k >= 0:
                return cls("exactly", k)
        raise ValueError(f"unknown pattern {text!r} (no-dominant | all-dominant | exactly-K)")

    def __str__(self) -> str:
        return f"exactly-{self.k}" if self.kind == "exactly" else self.kind

    def matches(self, dominant_count: int, n: int) -> bool:
        if self.kind == "no-dominant":
            return dominant_count == 0
        if self.kind == "all-dominant":
            return dominant_count == n
        return dominant_count == self.k


@dataclass(frozen=True)
class ScanEntry:
    index: int
    name: str
    n: int
    graph6: str | None
    dominant_count: int | None
    irreducible_over_Q: bool | None
    matched: bool
    error: str | None = None

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "name": self.name,
            "n": self.n,
            "graph6": self.graph6,
            "dominant_count": self.dominant_count,
            "irreducible_over_Q": self.irreducible_over_Q,
            "matched": self.matched,
            "error": self.error,
        }


@dataclass(frozen=True)
class ScanResult:
    pattern: Pattern
    entries: tuple[ScanEntry, ...]

    @property
    def analyzed(self) -> list[ScanEntry]:
        return [e for e in self.entries if e.error is None]

    @property
    def errors(self) -> list[ScanEntry]:
        return [e for e in self.entries if e.error is not None]

    @property
    def matched(self) -> list[ScanEntry]:
        return [e for e in self.entries if e.matched]

    def counts(self) -> dict:
        ok = self.analyzed
        hist: dict[int, int] = {}
        for e in ok:
            hist[e.dominant_count] = hist.get(e.dominant_count, 0) + 1
        return {
            "graphs": len(self.entries),
            "analyzed": len(ok),
            "errors": len(self.errors),
            "matched": len(self.matched),
            "no_dominant": sum(1 for e in ok if e.dominant_count == 0),
            "all_dominant": sum(1 for e in ok if e.dominant_count == e.n),
            "exactly": {str(k): hist[k] for k in sorted(hist)},
            "irreducible_char_poly": sum(1 for e in ok if e.irreducible_over_Q),
        }

    def to_json(self) -> dict:
        return {
            "schema": SCAN_SCHEMA,
            "pattern": str(self.pattern),
            "counts": self.counts(),
            "graphs": [e.to_json() for e in self.entries],
        }

    def to_csv(self) -> str:
        lines = ["index,name,n,graph6,dominant_count,irreducible_over_Q,matched,error"]
        for e in self.entries:
            cells = [
                str(e.index),
                e.name,
                str(e.n),
                e.graph6 or "",
                "" if e.dominant_count is None else str(e.dominant_count),
                "" if e.irreducible_over_Q is None else str(e.irreducible_over_Q).lower(),
                str(e.matched).lower(),
                (e.error or "").replace(",", ";").replace("\n", " "),
            ]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def _scan_one(args: tuple) -> ScanEntry:
    index, item, pattern, vertex_cap = args
    if isinstance(item, BaseException):
        return ScanEntry(index, f"#{index}", 0, None, None, None, False, f"{type(item).__name__}: {item}")
    g: Graph = item
    name = g.name or f"#{index}"
    g6 = write_graph6(g).decode("ascii").strip()
    if g.n > vertex_cap:
        return ScanEntry(index, name, g.n, g6, None, None, False, f"n={g.n} exceeds vertex cap {vertex_cap}")
    try:
        rep = dominance_report(g)
    except Exception as exc:  # recorded, the scan goes on
        return ScanEntry(index, name, g.n, g6, None, None, False, f"{type(exc).__name__}: {exc}")
    return ScanEntry(index, name, g.n, g6, rep.dominant_count, rep.irreducible_over_Q, pattern.matches(rep.dominant_count, g.n))


def default_parallelism() -> int:
    env = os.environ.get("SPECGRAPH_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer SPECGRAPH_THREADS=%r", env)
    return 1


def scan_corpus(
    graphs: Iterable[Graph | BaseException],
    pattern: Pattern | str = "no-dominant",
    parallelism: int | None = None,
    vertex_cap: int = 30,
) -> ScanResult:
    """Analyze every graph; failures become error entries.  Output order = input order."""
    pattern = Pattern.parse(pattern) if isinstance(pattern, str) else pattern
    parallelism = default_parallelism() if parallelism is None else parallelism
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    work = [(i, item, pattern, vertex_cap) for i, item in enumerate(graphs)]
    if parallelism == 1 or len(work) < 2:
        entries = [_scan_one(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            entries = list(pool.map(_scan_one, work, chunksize=max(1, len(work) // (4 * parallelism))))
    return ScanResult(pattern, tuple(entries))


def fingerprint(g: Graph) -> tuple:
    """Isomorphism invariants used to identify graphs in census results."""
    return (g.n, g.num_edges, tuple(sorted(g.degree(v) for v in range(g.n))), char_poly(g).coeffs)
