"""Command-line entry point: ``grooming <subcommand> ...``.

Exit status: 0 on success, feasible or verified; 1 when the result is a
refutation (infeasible instance, failed certificate, counterexample);
2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence, TextIO

from .bounds import MValue, known_M
from .constructive import SearchExhausted, decompose_bridgeless_cubic, decompose_degree2, decompose_linear_forest
from .graph import Graph, GraphFormatError, PreconditionError, is_bridgeless, is_regular, parse_sections
from .partition import AdmAssignment, Partition, format_partition
from .search import (
    Certificate,
    ScanInterrupted,
    check_degree2_tightness,
    find_M33_witness,
    test_conjecture_43 as scan_conjecture_43,
    verify_certificate,
)
from .solver import DEFAULT_MAX_EDGES, DEFAULT_MAX_N, InstanceTooLarge, SearchTimeout, feasible_under_caps, min_cost_partition, min_cost_with_class, worst_case_A

log = logging.getLogger(__name__)

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: Optional[Path] = None
    output: Optional[Path] = None
    porcelain: bool = False
    seed: Optional[int] = None
    timeout: Optional[float] = None
    workers: int = 1
    max_n: int = DEFAULT_MAX_N
    max_edges: int = DEFAULT_MAX_EDGES
    options: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.max_n < 1:
            raise UsageError("--max-n must be positive")
        if self.max_edges < 1:
            raise UsageError("--max-edges must be positive")
        if self.timeout is not None and self.timeout <= 0:
            raise UsageError("--timeout must be positive")


# -- table -------------------------------------------------------------------------------


def _cell(v: MValue) -> str:
    if v.conjectured is not None:
        return f"{v.conjectured}?"
    if v.exact is not None:
        return str(v.exact)
    return f"≥{v.lo}"


def emit_table(grid: dict[tuple[int, int], MValue], porcelain: bool = False) -> str:
    """Rows indexed by C, columns by delta; exact values plain, lower bounds as "≥k",
    the conjectured cell as "k?". One footnote per cell follows the grid."""
    Cs = sorted({c for c, _ in grid})
    ds = sorted({d for _, d in grid})
    if porcelain:
        lines = []
        for C in Cs:
            for d in ds:
                v = grid[(C, d)]
                status = "conjectured" if v.conjectured is not None else "exact" if v.exact is not None else "interval"
                lines.append(f"cell C {C} delta {d} lo {v.lo} hi {v.hi} status {status} show {_cell(v)}")
        return "\n".join(lines) + "\n"
    cells = {k: _cell(v) for k, v in grid.items()}
    width = max([len(s) for s in cells.values()] + [len(str(d)) for d in ds] + [1])
    head = max(len(f"C={c}") for c in Cs + [0])
    lines = ["C\\Δ".ljust(head) + " " + " ".join(str(d).rjust(width) for d in ds)]
    for C in Cs:
        lines.append(f"C={C}".ljust(head) + " " + " ".join(cells[(C, d)].rjust(width) for d in ds))
    lines.append("")
    for C in Cs:
        for d in ds:
            lines.append(f"[C={C},Δ={d}] " + "; ".join(grid[(C, d)].provenance))
    return "\n".join(lines) + "\n"


def _range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a..b' or an integer, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or non-positive range {text!r}")
    return range(lo, hi + 1)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


# -- helpers -----------------------------------------------------------------------------


def _read_input(cfg: RunConfig, stdin: TextIO) -> str:
    if cfg.input is None:
        return stdin.read()
    try:
        return cfg.input.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.input}: {exc.strerror}") from None


def _where(cfg: RunConfig) -> str:
    return str(cfg.input) if cfg.input else "<stdin>"


def _graph(cfg: RunConfig, stdin: TextIO, extra: tuple[str, ...] = ()) -> tuple[Graph, list]:
    text = _read_input(cfg, stdin)
    try:
        return parse_sections(text, extra)
    except GraphFormatError as exc:
        raise UsageError(f"{_where(cfg)}: {exc}") from None


def _partition_text(p: Partition, porcelain: bool) -> str:
    if not porcelain:
        return format_partition(p)
    lines = [f"part {i} " + " ".join(f"{u}-{v}" for u, v in part) for i, part in enumerate(p.parts)]
    lines += [f"cost {p.cost()}", f"max-appearances {p.max_appearances()}"]
    return "\n".join(lines) + "\n"


# -- subcommands ---------------------------------------------------------------------------


def cmd_bounds(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    grid = {(C, d): known_M(C, d) for C in cfg.options["C"] for d in cfg.options["delta"]}
    return EXIT_OK, emit_table(grid, cfg.porcelain)


def cmd_decompose(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    g, _ = _graph(cfg, stdin)
    method, C = cfg.options["method"], cfg.options["grooming"]
    singles = cfg.options.get("singles") or ()
    if method == "degree2":
        p = decompose_degree2(g, C, singles)
    elif method == "cubic":
        if not is_regular(g, 3) or not is_bridgeless(g):
            raise PreconditionError("the cubic method needs a bridgeless cubic graph")
        if C < 3:
            raise PreconditionError("the cubic method uses parts of 3 edges; need --grooming >= 3")
        p = decompose_bridgeless_cubic(g)
        p = Partition(g, C, p.parts)
    else:
        p = decompose_linear_forest(g, C)
    return EXIT_OK, _partition_text(p, cfg.porcelain)


def cmd_solve_graph(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    g, _ = _graph(cfg, stdin)
    r = min_cost_partition(g, cfg.options["grooming"], max_edges=cfg.max_edges)
    return EXIT_OK, f"optimum {r.optimum}\n" + _partition_text(r.witness, cfg.porcelain)


def cmd_check(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    g, extra = _graph(cfg, stdin, ("A",))
    caps: dict[int, int] = {}
    for lineno, parts in extra:
        if len(parts) != 3:
            raise UsageError(f"{_where(cfg)}: line {lineno}: expected 'A <v> <count>'")
        try:
            v, k = int(parts[1]), int(parts[2])
        except ValueError:
            raise UsageError(f"{_where(cfg)}: line {lineno}: expected integers") from None
        if not 0 <= v < g.n or k < 0 or v in caps:
            raise UsageError(f"{_where(cfg)}: line {lineno}: bad or repeated ADM line for vertex {v}")
        caps[v] = k
    default = cfg.options.get("default_cap")
    missing = [v for v in range(g.n) if v not in caps]
    if missing and default is None:
        raise UsageError(f"{_where(cfg)}: no 'A' line for vertex {missing[0]} (or pass --default-cap)")
    a = AdmAssignment([caps.get(v, default) for v in range(g.n)])
    if g.m > cfg.max_edges:
        raise InstanceTooLarge(f"{g.m} edges exceed the exhaustive limit {cfg.max_edges}; raise --max-edges")
    r = feasible_under_caps(g, cfg.options["grooming"], a, timeout=cfg.timeout)
    if not r.feasible:
        return EXIT_REFUTED, f"infeasible\nnodes-explored {r.nodes_explored}\n"
    return EXIT_OK, "feasible\n" + _partition_text(r.witness, cfg.porcelain)


def cmd_solve_worst_case(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    n, C, d = cfg.options["n"], cfg.options["C"], cfg.options["delta"]
    if cfg.options.get("cls") == "bridgeless-cubic":

        def member(g: Graph) -> bool:
            return is_regular(g, 3) and is_bridgeless(g)

        r = min_cost_with_class(n, C, d, member, max_n=cfg.max_n)
    else:
        r = worst_case_A(n, C, d, max_n=cfg.max_n)
    caps = " ".join(str(x) for x in r.assignment.counts)
    return EXIT_OK, f"optimum {r.optimum}\nassignment {caps}\nrefuted-assignments {len(r.refutations)}\n"


def _certificate_exit(cert: Certificate) -> int:
    return EXIT_OK if cert.verified else EXIT_REFUTED


def cmd_witness(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    o = cfg.options
    cert = find_M33_witness(
        o["max_n"], exhaustive_n=o["exhaustive_n"], bridgeless_only=o["bridgeless_only"], timeout=cfg.timeout
    )
    return _certificate_exit(cert), cert.to_text()


def cmd_conjecture(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    o = cfg.options
    cert = scan_conjecture_43(
        o["max_n"],
        checkpoint=o.get("resume"),
        timeout=cfg.timeout if cfg.timeout is not None else 60.0,
        stop_after=o.get("stop_after"),
        workers=cfg.workers,
    )
    return _certificate_exit(cert), cert.to_text()


def cmd_tightness(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    cert = check_degree2_tightness(cfg.options["n"], cfg.options["grooming"], max_n=cfg.max_n)
    return _certificate_exit(cert), cert.to_text()


def cmd_verify(cfg: RunConfig, stdin: TextIO) -> tuple[int, str]:
    text = _read_input(cfg, stdin)
    try:
        cert = Certificate.from_text(text)
    except (ValueError, GraphFormatError) as exc:
        raise UsageError(f"{_where(cfg)}: {exc}") from None
    ok = verify_certificate(cert)
    return (EXIT_OK, f"claim {cert.claim}\nOK\n") if ok else (EXIT_REFUTED, f"claim {cert.claim}\nFAILED\n")


COMMANDS: dict[str, Callable[[RunConfig, TextIO], tuple[int, str]]] = {
    "bounds": cmd_bounds,
    "decompose": cmd_decompose,
    "solve-graph": cmd_solve_graph,
    "check": cmd_check,
    "solve-worst-case": cmd_solve_worst_case,
    "witness": cmd_witness,
    "conjecture": cmd_conjecture,
    "tightness": cmd_tightness,
    "verify": cmd_verify,
}


# -- argument parsing -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", type=Path, help="graph or certificate file (default: stdin)")
    common.add_argument("--output", type=Path, help="write the report here instead of stdout")
    common.add_argument("--porcelain", action="store_true", help="stable tagged fields for scripts")
    common.add_argument("--seed", type=int, help="recorded in the output header; solvers use no randomness")
    common.add_argument("--timeout", type=float, help="per-search timeout in seconds")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--max-n", dest="max_n", type=_positive, default=None, help="exhaustive vertex limit")
    common.add_argument("--max-edges", dest="max_edges", type=_positive, default=DEFAULT_MAX_EDGES)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="grooming", description="ADM bounds and edge-partition solvers for ring grooming")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bounds", parents=[common], help="table of M(C, delta)")
    s.add_argument("--C", dest="C", type=_range, default=range(1, 7))
    s.add_argument("--delta", type=_range, default=range(1, 7))

    s = sub.add_parser("decompose", parents=[common], help="constructive partition of an input graph")
    s.add_argument("--method", choices=["degree2", "cubic", "linear-forest"], required=True)
    s.add_argument("--grooming", type=_positive, required=True, help="C, edges per part")
    s.add_argument("--singles", type=lambda t: [int(x) for x in t.split(",") if x], default=[])

    s = sub.add_parser("solve-graph", parents=[common], help="minimum-cost partition of an input graph")
    s.add_argument("--grooming", type=_positive, required=True)

    s = sub.add_parser("check", parents=[common], help="feasibility under 'A <v> <k>' caps")
    s.add_argument("--grooming", type=_positive, required=True)
    s.add_argument("--default-cap", dest="default_cap", type=int)

    s = sub.add_parser("solve-worst-case", parents=[common], help="least total ADMs over all request graphs")
    s.add_argument("n", type=_positive)
    s.add_argument("C", type=_positive)
    s.add_argument("delta", type=_positive)
    s.add_argument("--class", dest="cls", choices=["all", "bridgeless-cubic"], default="all")

    s = sub.add_parser("witness", parents=[common], help="search for a cubic graph needing 3 ADMs somewhere")
    s.add_argument("kind", choices=["m33"])
    s.add_argument("--exhaustive-n", dest="exhaustive_n", type=_positive, default=14)
    s.add_argument("--bridgeless-only", dest="bridgeless_only", action="store_true")

    s = sub.add_parser("conjecture", parents=[common], help="scan C=4, delta=3 with two ADMs per node")
    s.add_argument("kind", choices=["4-3"])
    s.add_argument("--resume", type=Path, help="checkpoint file, created if absent")
    s.add_argument("--stop-after", dest="stop_after", type=_positive, help=argparse.SUPPRESS)

    s = sub.add_parser("tightness", parents=[common], help="both directions of the degree-2 count")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--grooming", type=_positive, required=True)

    sub.add_parser("verify", parents=[common], help="re-check a certificate")
    return p


_GLOBAL = {"command", "input", "output", "porcelain", "seed", "timeout", "workers", "max_n", "max_edges", "verbose"}


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    opts = {k: v for k, v in vars(ns).items() if k not in _GLOBAL}
    max_n = ns.max_n
    if ns.command in ("witness", "conjecture"):
        if max_n is None:
            raise UsageError(f"--max-n is required for {ns.command}")
        opts["max_n"] = max_n
        max_n = DEFAULT_MAX_N
    return RunConfig(
        command=ns.command,
        input=ns.input,
        output=ns.output,
        porcelain=ns.porcelain,
        seed=ns.seed,
        timeout=ns.timeout,
        workers=ns.workers,
        max_n=max_n if max_n is not None else DEFAULT_MAX_N,
        max_edges=ns.max_edges,
        options=opts,
    )


def run(cfg: RunConfig, stdin: Optional[TextIO] = None) -> tuple[int, str]:
    code, text = COMMANDS[cfg.command](cfg, stdin if stdin is not None else sys.stdin)
    if cfg.seed is not None:
        text = f"# {cfg.command} seed {cfg.seed}\n" + text
    return code, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = config_from_args(ns)
        code, text = run(cfg)
    except UsageError as exc:
        print(f"grooming: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, InstanceTooLarge) as exc:
        print(f"grooming: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchTimeout:
        print("grooming: error: search timed out (raise --timeout)", file=sys.stderr)
        return EXIT_USAGE
    except ScanInterrupted as exc:
        print(f"grooming: {exc}; rerun with the same --resume file to continue", file=sys.stderr)
        return EXIT_USAGE
    except SearchExhausted as exc:
        print(f"grooming: internal error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output is not None:
        try:
            cfg.output.write_text(text)
        except OSError as exc:
            print(f"grooming: error: cannot write {cfg.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
