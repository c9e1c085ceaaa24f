"""Command-line interface: ``specgraph analyze | scan | enumerate | jacobi | star | families``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .dominance import Pattern, default_parallelism, dominance_report, scan_corpus
from .enumeration import MAX_ENUMERATION_N, enumerate_connected
from .families import FAMILIES, FamilyError, FamilySpec, generate
from .graph6 import read_graph6_lines, write_graph6
from .jacobi import jacobi_convergence, star_block_diagonalize, star_convergence
from .reporting import convergence_csv, dumps, report_csv, report_text, scan_text, write_text
from .spectral import CLUSTER_TOL, DOM_TOL

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PARSE = 3
EXIT_TOLERANCE = 4

MAX_TRUNCATION = 100_000
FAMILY_PARAMS = ("n", "m", "k", "r", "N", "connections")

log = logging.getLogger("specgraph")


class UsageError(Exception):
    pass


class ParseFailure(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    family: FamilySpec | None = None
    input: Path | None = None
    index: int = 0
    eig_tol: float | None = None
    dom_tol: float = DOM_TOL
    cluster_tol: float = CLUSTER_TOL
    output: Path | None = None
    format: str = "json"
    parallelism: int = 1
    vertex_cap: int = 30
    pattern: str = "no-dominant"
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        for name in ("dom_tol", "cluster_tol"):
            if not getattr(self, name) > 0:
                raise UsageError(f"{name.replace('_', '-')} must be positive")
        if self.eig_tol is not None and not self.eig_tol > 0:
            raise UsageError("eig-tol must be positive")
        if self.parallelism < 1:
            raise UsageError("parallelism must be >= 1")
        if self.vertex_cap < 1:
            raise UsageError("vertex-cap must be >= 1")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specgraph", description="Dominant vertices and spectral measures of graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log warnings and details to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def tolerances(sp):
        sp.add_argument("--eig-tol", type=float, default=None, help="Jacobi off-diagonal threshold")
        sp.add_argument("--dom-tol", type=float, default=DOM_TOL, help="float-route weight threshold")
        sp.add_argument("--cluster-tol", type=float, default=CLUSTER_TOL, help="relative eigenvalue gap")

    def output(sp, formats):
        sp.add_argument("-o", "--output", type=Path, help="write the report here")
        sp.add_argument("--format", choices=formats, default=None, help=f"default {formats[0]} with -o, else text")

    a = sub.add_parser("analyze", help="dominance report for one graph")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family name (see `specgraph families`)")
    src.add_argument("--g6", type=Path, help="graph6 file, one graph per line")
    a.add_argument("--index", type=int, default=0, help="graph index within --g6 file")
    for name in FAMILY_PARAMS:
        a.add_argument(f"--{name}", dest=f"fam_{name}", type=_int_list if name == "connections" else int, default=None)
    tolerances(a)
    output(a, ["json", "csv", "text"])

    s = sub.add_parser("scan", help="scan a graph6 corpus for a dominance pattern")
    s.add_argument("input", type=Path)
    s.add_argument("--pattern", default="no-dominant", help="no-dominant | all-dominant | exactly-K")
    s.add_argument("--parallelism", "-j", type=int, default=None, help="worker processes (env SPECGRAPH_THREADS)")
    s.add_argument("--vertex-cap", type=int, default=30)
    output(s, ["json", "csv", "text"])

    e = sub.add_parser("enumerate", help="connected graphs up to isomorphism, as graph6")
    e.add_argument("--n", type=int, required=True, help=f"largest vertex count (<= {MAX_ENUMERATION_N})")
    e.add_argument("--min-n", type=int, default=1)
    e.add_argument("-o", "--output", type=Path)

    j = sub.add_parser("jacobi", help="top eigenvalue of truncations of J_a")
    j.add_argument("--a", type=float, required=True)
    j.add_argument("--N", type=_int_list, required=True, help="comma-separated truncation sizes")
    j.add_argument("-o", "--output", type=Path)

    st = sub.add_parser("star", help="top eigenvalue of truncated infinite stars")
    st.add_argument("--k", type=int, required=True)
    st.add_argument("--N", type=_int_list, required=True)
    st.add_argument("--blocks", action="store_true", help="emit block-diagonalisation residuals as JSON")
    st.add_argument("-o", "--output", type=Path)

    sub.add_parser("families", help="list graph families and their parameters")
    return p


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        write_text(path, text)


def _load_graph(args):
    if args.family is not None:
        params = {k: getattr(args, f"fam_{k}") for k in FAMILY_PARAMS if getattr(args, f"fam_{k}") is not None}
        if "connections" in params:
            params["connections"] = tuple(params["connections"])
        try:
            return generate(FamilySpec(args.family, params))
        except FamilyError as exc:
            raise UsageError(str(exc)) from None
    if args.index < 0:
        raise UsageError("--index must be non-negative")
    try:
        with open(args.g6, "rb") as fh:
            items = [item for _, item in read_graph6_lines(fh)]
    except OSError as exc:
        raise ParseFailure(f"cannot read {args.g6}: {exc}") from None
    if args.index >= len(items):
        raise ParseFailure(f"{args.g6} has {len(items)} graph(s); index {args.index} is out of range")
    item = items[args.index]
    if isinstance(item, Exception):
        raise ParseFailure(f"{args.g6} graph {args.index}: {item}")
    return item.relabel(None, name=f"{args.g6.name}#{args.index}")


def cmd_analyze(args) -> int:
    cfg = CliConfig("analyze", eig_tol=args.eig_tol, dom_tol=args.dom_tol, cluster_tol=args.cluster_tol)
    cfg.validate()
    g = _load_graph(args)
    rep = dominance_report(g, dom_tol=cfg.dom_tol, eig_tol=cfg.eig_tol, cluster_tol=cfg.cluster_tol)
    sys.stdout.write(report_text(rep))
    body = {"json": lambda: dumps(rep.to_json()), "csv": lambda: report_csv(rep), "text": lambda: report_text(rep)}
    if args.output is not None:
        write_text(args.output, body[args.format or "json"]())
    elif args.format not in (None, "text"):
        sys.stdout.write(body[args.format]())
    return EXIT_TOLERANCE if rep.tolerance_failure else EXIT_OK


def cmd_scan(args) -> int:
    par = default_parallelism() if args.parallelism is None else args.parallelism
    cfg = CliConfig("scan", parallelism=par, vertex_cap=args.vertex_cap, pattern=args.pattern)
    cfg.validate()
    try:
        pattern = Pattern.parse(args.pattern)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        with open(args.input, "rb") as fh:
            items = [item for _, item in read_graph6_lines(fh)]
    except OSError as exc:
        raise ParseFailure(f"cannot read {args.input}: {exc}") from None
    parsed = sum(1 for it in items if not isinstance(it, Exception))
    if parsed == 0:
        raise ParseFailure(f"no graph could be parsed from {args.input}")
    res = scan_corpus(items, pattern, parallelism=cfg.parallelism, vertex_cap=cfg.vertex_cap)
    body = {"json": lambda: dumps(res.to_json()), "csv": res.to_csv, "text": lambda: scan_text(res)}
    if args.output is not None:
        write_text(args.output, body[args.format or "json"]())
        sys.stdout.write(scan_text(res))
    else:
        sys.stdout.write(body[args.format or "text"]())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not 1 <= args.min_n <= args.n <= MAX_ENUMERATION_N:
        raise UsageError(f"need 1 <= min-n <= n <= {MAX_ENUMERATION_N}")
    lines = [write_graph6(g).decode("ascii").strip() for n in range(args.min_n, args.n + 1) for g in enumerate_connected(n)]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _check_sizes(Ns: list[int], minimum: int) -> None:
    if not Ns:
        raise UsageError("--N needs at least one value")
    bad = [N for N in Ns if not minimum <= N <= MAX_TRUNCATION]
    if bad:
        raise UsageError(f"truncation sizes must lie in [{minimum}, {MAX_TRUNCATION}]: {bad}")


def cmd_jacobi(args) -> int:
    if not args.a > 0:
        raise UsageError("--a must be positive")
    _check_sizes(args.N, 1)
    _emit(convergence_csv(jacobi_convergence(args.a, args.N)), args.output)
    return EXIT_OK


def cmd_star(args) -> int:
    if args.k < 3:
        raise UsageError("--k must be >= 3")
    _check_sizes(args.N, 2 if args.blocks else 1)
    if args.blocks:
        if max(args.N) * args.k > 4000:
            raise UsageError("block-diagonalisation is dense; keep k*N <= 4000")
        results = [star_block_diagonalize(args.k, N).to_json() for N in args.N]
        _emit(dumps({"schema": "star-blocks/1", "results": results}), args.output)
    else:
        _emit(convergence_csv(star_convergence(args.k, args.N)), args.output)
    return EXIT_OK


def cmd_families(args) -> int:
    for name in sorted(FAMILIES):
        fam = FAMILIES[name]
        params = " ".join(f"--{p}" for p in fam.params) or "(no parameters)"
        sys.stdout.write(f"{name:18s} {params:22s} {fam.doc}\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "scan": cmd_scan,
    "enumerate": cmd_enumerate,
    "jacobi": cmd_jacobi,
    "star": cmd_star,
    "families": cmd_families,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"specgraph: error: {exc}\n")
        return EXIT_INVALID
    except ParseFailure as exc:
        sys.stderr.write(f"specgraph: parse failure: {exc}\n")
        return EXIT_PARSE
    except (ValueError, FamilyError) as exc:
        sys.stderr.write(f"specgraph: error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
