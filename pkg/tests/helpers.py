"""Naive reference computations the solvers are checked against.

Everything here is deliberately dumb: subset enumeration for covers, grid
enumeration for the edge relaxation, rooted DFS for odd cycles, Gaussian
elimination for ranks. None of it shares code with the package's solvers,
so an agreement between the two is meaningful.
"""

import itertools
from fractions import Fraction

from weakcover import Graph


def brute_cover(g: Graph) -> frozenset[int]:
    """Smallest vertex cover, trying subsets in size-then-lex order."""
    vs = sorted(g.vertices)
    edges = g.edges()
    for k in range(g.n + 1):
        for combo in itertools.combinations(vs, k):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v in edges):
                return frozenset(chosen)
    raise AssertionError("the full vertex set always covers")


def brute_restricted(g: Graph, i: int, j: int) -> frozenset[int]:
    """Smallest cover containing exactly one endpoint of (i, j)."""
    vs = sorted(g.vertices)
    edges = g.edges()
    for k in range(g.n + 1):
        for combo in itertools.combinations(vs, k):
            chosen = set(combo)
            if len(chosen & {i, j}) != 1:
                continue
            if all(u in chosen or v in chosen for u, v in edges):
                return frozenset(chosen)
    raise AssertionError("everything except one endpoint always qualifies")


def brute_sigma(g: Graph, i: int, j: int) -> int:
    return len(brute_restricted(g, i, j)) - len(brute_cover(g))


def grid_lpr_value(g: Graph) -> Fraction:
    """Edge-relaxation optimum by enumerating the grid {0, 1/2, 1}^V.

    The relaxation always attains its optimum at a half-integral point, so
    the minimum over the grid equals the LP optimum. Exponential; keep n
    small.
    """
    vs = sorted(g.vertices)
    edges = g.edges()
    levels = (Fraction(0), Fraction(1, 2), Fraction(1))
    best = None
    for combo in itertools.product(levels, repeat=len(vs)):
        x = dict(zip(vs, combo))
        if all(x[u] + x[v] >= 1 for u, v in edges):
            total = sum(combo)
            if best is None or total < best:
                best = total
    return best


def simple_odd_cycles(g: Graph) -> set[tuple[int, ...]]:
    """Every simple odd cycle as a canonical vertex tuple: smallest vertex
    first, then the direction with the smaller second vertex."""
    out: set[tuple[int, ...]] = set()

    def extend(root: int, path: list[int], seen: set[int]) -> None:
        v = path[-1]
        for u in sorted(g.neighbors(v)):
            if u == root and len(path) >= 3:
                if len(path) % 2 == 1 and path[1] < path[-1]:
                    out.add(tuple(path))
            elif u > root and u not in seen:
                seen.add(u)
                path.append(u)
                extend(root, path, seen)
                path.pop()
                seen.remove(u)

    for r in sorted(g.vertices):
        extend(r, [r], {r})
    return out


def rational_rank(matrix) -> int:
    """Row rank over exact rationals by Gaussian elimination."""
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    rank = 0
    for c in range(len(rows[0])):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / prow[c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def tight_constraint_matrix(problem, solution):
    """Rows of the constraint system that hold with equality at the solution,
    including the x_v = 0 bounds, as coefficient vectors over the variables."""
    variables = problem.variables
    col = {v: k for k, v in enumerate(variables)}
    matrix = []
    for row in problem.rows:
        lhs = sum(c * solution.values[v] for v, c in row.coeffs)
        if lhs == row.rhs:
            vec = [0] * len(variables)
            for v, c in row.coeffs:
                vec[col[v]] = c
            matrix.append(vec)
    for v in variables:
        if solution.values[v] == 0:
            vec = [0] * len(variables)
            vec[col[v]] = 1
            matrix.append(vec)
    return matrix
