"""The three LP relaxations of minimum vertex cover, weakest to strongest.

LPR   edge rows only; optimal vertices are half-integral.
ELP   edge rows plus all odd-cycle inequalities, enforced lazily by
      cutting planes.
RELP  ELP relative to an edge (r, s): that edge's row becomes the equality
      x_r + x_s = 1. Its optimum Z(r, s) prices forcing exactly one endpoint
      of (r, s) into the relaxed cover, and min over edges of Z is a lower
      bound on the integral optimum.
"""

from dataclasses import dataclass

from .cycles import OddCycle, cutting_plane_solve, edge_rows
from .graph import Graph
from .lp import LpProblem, LpSolution, simplex_solve
from .rational import RAT_ONE


@dataclass(frozen=True)
class RelaxationResult:
    kind: str  # "LPR" | "ELP" | "RELP"
    solution: LpSolution
    restricted_edge: tuple[int, int] | None
    z_value: object
    cuts: tuple[OddCycle, ...] = ()

    def __post_init__(self):
        if self.z_value != self.solution.objective:
            raise ValueError("z_value must equal the solution objective")


def solve_lpr(g: Graph) -> RelaxationResult:
    """Plain edge relaxation. The returned vertex is half-integral."""
    _need_vertices(g)
    solution = simplex_solve(LpProblem(tuple(sorted(g.vertices)), tuple(edge_rows(g))))
    return RelaxationResult("LPR", solution, None, solution.objective)


def solve_elp(g: Graph) -> RelaxationResult:
    """Edge relaxation plus all odd-cycle inequalities."""
    _need_vertices(g)
    solution, cuts = cutting_plane_solve(g)
    return RelaxationResult("ELP", solution, None, solution.objective, cuts)


def solve_relp(g: Graph, r: int, s: int) -> RelaxationResult:
    """ELP with x_r + x_s = 1 in place of that edge's row."""
    solution, cuts = cutting_plane_solve(g, (r, s))
    return RelaxationResult("RELP", solution, (r, s), solution.objective, cuts)


def best_restricted_edge(g: Graph) -> tuple[int, int, object, LpSolution]:
    """Scan Z(i, j) over every edge; return (p, q, z, solution) for the
    minimizer, ties broken by lexicographically smallest edge. Every edge
    gets its own full solve; nothing is shared between them, so the result
    is independent of scan order."""
    if g.edge_count == 0:
        raise ValueError("graph has no edges to scan")
    best = None
    for u, v in g.edges():
        result = solve_relp(g, u, v)
        if best is None or result.z_value < best[2]:
            best = (u, v, result.z_value, result.solution)
    return best


def scan_restricted_values(g: Graph) -> tuple[tuple[tuple[int, int], object], ...]:
    """Z(i, j) for every edge in lexicographic order."""
    if g.edge_count == 0:
        raise ValueError("graph has no edges to scan")
    return tuple(((u, v), solve_relp(g, u, v).z_value) for u, v in g.edges())


def almost_weak(g: Graph) -> tuple[int, int]:
    """The edge whose restricted relaxation is cheapest to satisfy; the
    scan's minimizer is the algorithmic stand-in for a weak edge."""
    p, q, _, _ = best_restricted_edge(g)
    return (p, q)


def active_edges(g: Graph, x: dict) -> list[tuple[int, int]]:
    """Edges whose row is tight at x (x_u + x_v == 1), lexicographic."""
    return [(u, v) for u, v in g.edges() if x[u] + x[v] == RAT_ONE]


def _need_vertices(g: Graph) -> None:
    if g.n == 0:
        raise ValueError("relaxation needs a nonempty graph")
