"""Serialisation of reports: JSON (UTF-8, LF) and CSV with a header row."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

from .dominance import DominanceReport, ScanResult
from .jacobi import CONVERGENCE_HEADER, ConvergenceRow


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def load_schema(name: str) -> dict:
    """Shipped JSON schema, e.g. ``"dominance-report-1"``."""
    text = resources.files("specgraph").joinpath("schemas", f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def write_text(path: str | Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def report_text(rep: DominanceReport) -> str:
    """Human-readable summary; vertices listed by label."""
    dom = ", ".join(rep.dominant_labels) or "none"
    lines = [
        f"graph {rep.name}: n={rep.n}, edges={rep.num_edges}, s={rep.s}",
        f"  char poly: {rep.char_poly}",
        f"  min poly:  {rep.min_poly}",
        f"  irreducible over Q: {'undecided' if rep.irreducible_over_Q is None else rep.irreducible_over_Q}",
        f"  walk-regular: {rep.walk_regular}",
        f"  dominant vertices ({rep.dominant_count}/{rep.n}): {dom}",
    ]
    for r in rep.vertices:
        if r.null_factors:
            lines.append(f"  {r.label}: null for roots of " + "; ".join(str(f) for f in r.null_factors))
    cyc = [r.label for r in rep.vertices if r.cyclic]
    lines.append(f"  cyclic vertices: {', '.join(cyc) or 'none'}")
    if rep.disagreements:
        lines.append(f"  float/exact disagreement at: {', '.join(rep.vertices[v].label for v in rep.disagreements)}")
    if rep.tolerance_failure:
        lines.append("  WARNING: eigensolver tolerance failure")
    lines.extend(f"  note: {n}" for n in rep.notes)
    return "\n".join(lines) + "\n"


def report_csv(rep: DominanceReport) -> str:
    rows = ["vertex,label,dominant_exact,dominant_float,cyclic,local_degree,null_factors"]
    for r in rep.vertices:
        nf = ";".join(str(f) for f in r.null_factors)
        rows.append(
            f"{r.vertex},{r.label},{str(r.dominant_exact).lower()},{str(r.dominant_float).lower()},"
            f"{str(r.cyclic).lower()},{r.local_degree},{nf}"
        )
    return "\n".join(rows) + "\n"


def scan_text(res: ScanResult) -> str:
    c = res.counts()
    lines = [
        f"scanned {c['graphs']} graphs ({c['analyzed']} analyzed, {c['errors']} errors)",
        f"pattern {res.pattern}: {c['matched']} matches",
        f"  no dominant vertex: {c['no_dominant']}",
        f"  all vertices dominant: {c['all_dominant']}",
        "  by dominant count: " + ", ".join(f"{k}: {v}" for k, v in c["exactly"].items()),
    ]
    for e in res.matched:
        lines.append(f"  match #{e.index} {e.name} n={e.n} {e.graph6}")
    for e in res.errors:
        lines.append(f"  error #{e.index}: {e.error}")
    return "\n".join(lines) + "\n"


def convergence_csv(rows: Iterable[ConvergenceRow]) -> str:
    return "\n".join([CONVERGENCE_HEADER] + [r.csv() for r in rows]) + "\n"
