"""JSON emission and parsing for the report types.

Wire rules: rationals travel as exact "num/den" strings (never floats),
covers as sorted id arrays, field order is fixed, and parse(emit(x)) == x
for every report type.
"""

import json

from .approx import CoverReport, SigmaBound
from .cycles import OddCycle
from .exact import SigmaReport
from .lp import LpSolution
from .rational import is_integral, parse_rat, rat_str
from .relaxations import RelaxationResult

Report = CoverReport | RelaxationResult | SigmaReport


def emit_report(report: Report) -> str:
    if isinstance(report, SigmaReport):
        payload = {
            "edge": list(report.edge),
            "delta": report.delta,
            "delta_bar": report.delta_bar,
            "sigma": report.sigma,
        }
    elif isinstance(report, CoverReport):
        payload = {
            "cover": sorted(report.cover),
            "size": report.size,
            "lpr_bound": rat_str(report.lpr_bound),
            "best_z": None if report.best_z is None else rat_str(report.best_z),
            "ratio_vs_lpr": rat_str(report.ratio_vs_lpr),
            "sigma_bound": None
            if report.sigma_bound is None
            else {
                "max_sigma": report.sigma_bound.max_sigma,
                "guarantee": rat_str(report.sigma_bound.guarantee),
            },
            "audit": report.audit,
        }
    elif isinstance(report, RelaxationResult):
        sol = report.solution
        payload = {
            "kind": report.kind,
            "z": rat_str(report.z_value),
            "objective": rat_str(sol.objective),
            "integral": all(is_integral(x) for x in sol.values.values()),
            "restricted_edge": None
            if report.restricted_edge is None
            else list(report.restricted_edge),
            "values": {str(v): rat_str(x) for v, x in sorted(sol.values.items())},
            "tight_rows": sorted(sol.tight_rows),
            "is_basic": sol.is_basic,
            "cuts": [list(c.vertices) for c in report.cuts],
        }
    else:
        raise TypeError(f"cannot emit {type(report).__name__}")
    return json.dumps(payload)


def parse_report(text: str) -> Report:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("report must be a JSON object")
    if "delta_bar" in data:
        return SigmaReport(
            edge=tuple(data["edge"]),
            delta=data["delta"],
            delta_bar=data["delta_bar"],
            sigma=data["sigma"],
        )
    if "cover" in data:
        bound = data.get("sigma_bound")
        return CoverReport(
            cover=frozenset(data["cover"]),
            size=data["size"],
            lpr_bound=parse_rat(data["lpr_bound"]),
            best_z=None if data["best_z"] is None else parse_rat(data["best_z"]),
            ratio_vs_lpr=parse_rat(data["ratio_vs_lpr"]),
            sigma_bound=None
            if bound is None
            else SigmaBound(bound["max_sigma"], parse_rat(bound["guarantee"])),
            audit=data["audit"],
        )
    if "kind" in data:
        values = {int(v): parse_rat(x) for v, x in data["values"].items()}
        solution = LpSolution(
            values=values,
            objective=parse_rat(data["objective"]),
            tight_rows=frozenset(data["tight_rows"]),
            is_basic=data["is_basic"],
        )
        return RelaxationResult(
            kind=data["kind"],
            solution=solution,
            restricted_edge=None
            if data["restricted_edge"] is None
            else tuple(data["restricted_edge"]),
            z_value=parse_rat(data["z"]),
            cuts=tuple(OddCycle(tuple(c)) for c in data["cuts"]),
        )
    raise ValueError("unrecognized report shape")
