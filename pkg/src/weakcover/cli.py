"""Command-line entry point: DIMACS in, JSON out, deterministic.

Subcommands mirror the library: gen emits instances from the named families,
lpr/elp/relp solve the relaxations and scan-z prices every edge, wer/awer run
the reducers next to the matching baseline, exact/sigma/classify query the
exact solvers, and reproduce runs the battery and prints its table. Exit
codes: 0 success, 1 usage or input error, 2 failed internal check or failed
battery. The WEAKCOVER_EXACT_LIMIT environment variable overrides
--exact-limit wherever an exact solve is involved.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .approx import awer, matching_2approx, wer
from .battery import format_table, run_battery
from .dimacs import parse_dimacs, write_dimacs
from .exact import (
    LIMIT_ENV,
    ExactLimitError,
    classify_edge,
    exact_vc,
    find_weak_edge,
    sigma,
)
from .graph import gen_family
from .lp import LpError, LpInfeasibleError
from .rational import rat_str
from .relaxations import scan_restricted_values, solve_elp, solve_lpr, solve_relp
from .reports import emit_report

_FAMILIES = ("complete", "cycle", "wheel", "double_wheel", "random")


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: what to run, on which graph, where to write."""

    command: str
    input: str | None = None  # DIMACS path, or "-" for stdin
    family: str | None = None  # generator spec: family, n, p, seed
    n: int | None = None
    p: float | None = None
    seed: int | None = None
    edge: tuple[int, int] | None = None
    audit: bool = False
    exact_limit: int | None = None
    fmt: str = "json"
    output: str | None = None

    def __post_init__(self):
        if self.input is not None and self.family is not None:
            raise ValueError("give a DIMACS file or a generator spec, not both")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from(args)
        if cfg.command == "reproduce":
            return _run_reproduce(cfg)
        text = _HANDLERS[cfg.command](cfg)
        _write(cfg.output, text)
        return 0
    except LpInfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, ExactLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, LpError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2


class _Cli(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this interface reserves 2 for
    failed checks, so usage problems are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _edge_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two ids as i,j")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError("edge ids must be integers") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = _Cli(
        prog="weakcover",
        description="Vertex-cover relaxations, reductions, and certified approximations.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    gen = sub.add_parser("gen", help="emit an instance from a named family")
    gen.add_argument("--family", required=True, choices=_FAMILIES)
    gen.add_argument("-n", type=int, required=True, help="vertex count")
    gen.add_argument("-p", type=float, help="edge probability (random family)")
    gen.add_argument("--seed", type=int, help="generator seed (random family)")
    gen.add_argument("--format", dest="fmt", choices=("json", "dimacs"), default="dimacs")
    gen.add_argument("--output", metavar="PATH")

    def graph_command(name, help_, edge=False, audit=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", nargs="?", help="DIMACS file, or - for stdin")
        sp.add_argument("--family", choices=_FAMILIES, help="generate instead of reading")
        sp.add_argument("-n", type=int, help="vertex count for --family")
        sp.add_argument("-p", type=float, help="edge probability for --family random")
        sp.add_argument("--seed", type=int, help="seed for --family random")
        if edge:
            sp.add_argument("--edge", type=_edge_arg, required=True, metavar="i,j")
        if audit:
            sp.add_argument("--audit", action="store_true")
        sp.add_argument("--exact-limit", dest="exact_limit", type=int, metavar="N")
        sp.add_argument("--output", metavar="PATH")

    graph_command("lpr", "edge-relaxation optimum (half-integral vertex)")
    graph_command("elp", "edge relaxation closed under odd-cycle cuts")
    graph_command("relp", "relaxation with one edge row forced to equality", edge=True)
    graph_command("scan-z", "restricted optimum Z(i,j) for every edge")
    graph_command("wer", "reduce with the exact weak-edge oracle")
    graph_command("awer", "reduce with the relaxation-guided edge choice", audit=True)
    graph_command("baseline", "maximal-matching 2-approximation")
    graph_command("exact", "minimum vertex cover by branch and bound")
    graph_command("sigma", "exact price of splitting an edge", edge=True)
    graph_command("classify", "weak / strong / uniformly strong status", edge=True)

    rep = sub.add_parser("reproduce", help="run the battery and print its table")
    rep.add_argument("--output", metavar="PATH")
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    # The environment variable, when set, wins over the flag; the library
    # layer reads it whenever no explicit limit is passed down.
    exact_limit = getattr(args, "exact_limit", None)
    if os.environ.get(LIMIT_ENV) is not None:
        exact_limit = None
    return RunConfig(
        command=args.command,
        input=getattr(args, "graph", None),
        family=getattr(args, "family", None),
        n=getattr(args, "n", None),
        p=getattr(args, "p", None),
        seed=getattr(args, "seed", None),
        edge=getattr(args, "edge", None),
        audit=getattr(args, "audit", False),
        exact_limit=exact_limit,
        fmt=getattr(args, "fmt", "json"),
        output=getattr(args, "output", None),
    )


def _load_graph(cfg: RunConfig):
    if cfg.family is not None:
        if cfg.n is None:
            raise ValueError("--family needs -n")
        return gen_family(cfg.family, cfg.n, p=cfg.p, seed=cfg.seed)
    if cfg.input is None:
        raise ValueError("give a DIMACS file (or - for stdin) or --family with -n")
    if cfg.input == "-":
        return parse_dimacs(sys.stdin.read())
    with open(cfg.input, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def _write(output: str | None, text: str) -> None:
    if output is None:
        print(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _run_gen(cfg: RunConfig) -> str:
    g = gen_family(cfg.family, cfg.n, p=cfg.p, seed=cfg.seed)
    if cfg.fmt == "dimacs":
        return write_dimacs(g).rstrip("\n")
    payload = {
        "n": g.n,
        "vertices": sorted(g.vertices),
        "edges": [list(e) for e in g.edges()],
    }
    return json.dumps(payload)


def _run_scan(cfg: RunConfig) -> str:
    rows = scan_restricted_values(_load_graph(cfg))
    best_edge, best_z = min(rows, key=lambda item: (item[1], item[0]))
    payload = {
        "scan": [{"edge": list(e), "z": rat_str(z)} for e, z in rows],
        "best": {"edge": list(best_edge), "z": rat_str(best_z)},
    }
    return json.dumps(payload)


def _run_wer(cfg: RunConfig) -> str:
    report, _ = wer(_load_graph(cfg), lambda h: find_weak_edge(h, cfg.exact_limit))
    return emit_report(report)


def _run_awer(cfg: RunConfig) -> str:
    report, _ = awer(_load_graph(cfg), audit=cfg.audit, exact_limit=cfg.exact_limit)
    return emit_report(report)


def _run_exact(cfg: RunConfig) -> str:
    cover = exact_vc(_load_graph(cfg), cfg.exact_limit)
    return json.dumps({"cover": sorted(cover), "size": len(cover)})


def _run_sigma(cfg: RunConfig) -> str:
    i, j = cfg.edge
    return emit_report(sigma(_load_graph(cfg), i, j, cfg.exact_limit))


def _run_classify(cfg: RunConfig) -> str:
    i, j = cfg.edge
    ec = classify_edge(_load_graph(cfg), i, j, cfg.exact_limit)
    payload = {
        "edge": list(ec.edge),
        "weak": ec.weak,
        "strong": ec.strong,
        "uniformly_strong": ec.uniformly_strong,
    }
    return json.dumps(payload)


def _run_reproduce(cfg: RunConfig) -> int:
    stream = cfg.output is None

    def on_result(result):
        if stream:
            print(format_table([result]), flush=True)

    results = run_battery(on_result=on_result)
    passed = sum(r.passed for r in results)
    summary = f"{passed}/{len(results)} checks passed"
    if stream:
        print(summary)
    else:
        _write(cfg.output, format_table(results) + "\n" + summary)
    return 0 if passed == len(results) else 2


_HANDLERS = {
    "gen": _run_gen,
    "lpr": lambda cfg: emit_report(solve_lpr(_load_graph(cfg))),
    "elp": lambda cfg: emit_report(solve_elp(_load_graph(cfg))),
    "relp": lambda cfg: emit_report(solve_relp(_load_graph(cfg), *cfg.edge)),
    "scan-z": _run_scan,
    "wer": _run_wer,
    "awer": _run_awer,
    "baseline": lambda cfg: emit_report(matching_2approx(_load_graph(cfg))),
    "exact": _run_exact,
    "sigma": _run_sigma,
    "classify": _run_classify,
}
