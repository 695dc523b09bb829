"""Vertex-cover toolkit built on exact rational arithmetic.

The pieces, bottom up: graphs and DIMACS IO, a simplex engine over
rationals, the edge relaxation and its odd-cycle tightenings, two
reduction rules with lossless reconstruction, a branch-and-bound solver
for plain and edge-restricted covers, and two reducers that turn all of
that into covers with a certified approximation ratio. Everything is
deterministic; every number is an exact rational or an int.
"""

from .approx import CoverReport, SigmaBound, Trace, awer, matching_2approx, ratio_certificate, wer
from .battery import CriterionResult, eight_vertex_example, format_table, run_battery
from .cycles import OddCycle, cutting_plane_solve, separate_odd_cycle
from .dimacs import parse_dimacs, write_dimacs
from .exact import (
    DEFAULT_EXACT_LIMIT,
    EdgeClass,
    ExactLimitError,
    SigmaReport,
    classify_edge,
    exact_restricted_vc,
    exact_vc,
    find_weak_edge,
    sigma,
)
from .graph import Graph, gen_family, is_vertex_cover, reduction_sets
from .lp import (
    LpError,
    LpInfeasibleError,
    LpProblem,
    LpRow,
    LpSolution,
    simplex_solve,
    two_phase_solve,
)
from .rational import Rat, is_integral, parse_rat, rat, rat_str
from .reductions import ReductionFrame, reconstruct, weak_edge_reduce, zero_one_reduce
from .relaxations import (
    RelaxationResult,
    active_edges,
    almost_weak,
    best_restricted_edge,
    scan_restricted_values,
    solve_elp,
    solve_lpr,
    solve_relp,
)
from .reports import emit_report, parse_report

__version__ = "0.1.0"

__all__ = [
    "CoverReport",
    "CriterionResult",
    "DEFAULT_EXACT_LIMIT",
    "EdgeClass",
    "ExactLimitError",
    "Graph",
    "LpError",
    "LpInfeasibleError",
    "LpProblem",
    "LpRow",
    "LpSolution",
    "OddCycle",
    "Rat",
    "ReductionFrame",
    "RelaxationResult",
    "SigmaBound",
    "SigmaReport",
    "Trace",
    "active_edges",
    "almost_weak",
    "awer",
    "best_restricted_edge",
    "classify_edge",
    "cutting_plane_solve",
    "eight_vertex_example",
    "emit_report",
    "exact_restricted_vc",
    "exact_vc",
    "find_weak_edge",
    "format_table",
    "gen_family",
    "is_integral",
    "is_vertex_cover",
    "matching_2approx",
    "parse_dimacs",
    "parse_rat",
    "parse_report",
    "rat",
    "rat_str",
    "ratio_certificate",
    "reconstruct",
    "reduction_sets",
    "run_battery",
    "scan_restricted_values",
    "separate_odd_cycle",
    "sigma",
    "simplex_solve",
    "solve_elp",
    "solve_lpr",
    "solve_relp",
    "two_phase_solve",
    "weak_edge_reduce",
    "wer",
    "write_dimacs",
    "zero_one_reduce",
]
