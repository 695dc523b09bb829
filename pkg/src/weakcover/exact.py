"""Exact minimum vertex cover and the edge hardness measure sigma.

sigma(i, j) = delta_bar(i, j) - delta, where delta is the minimum cover size
and delta_bar(i, j) the minimum over covers containing exactly one endpoint
of the edge (i, j). An edge with sigma = 0 is weak: some optimal cover splits
it. Every graph with an edge has a weak edge, and sigma never exceeds n/2.

Solvers here are deliberately small branch-and-bound searches; they exist to
certify the polynomial-time machinery on desk-scale instances, and refuse
graphs above a configurable size limit rather than silently grinding.
"""

import os
from dataclasses import dataclass

from .graph import Graph
from .rational import ceil_rat
from .relaxations import solve_lpr

DEFAULT_EXACT_LIMIT = 50
LIMIT_ENV = "WEAKCOVER_EXACT_LIMIT"


class ExactLimitError(Exception):
    """The instance exceeds the configured exact-solver size limit."""


@dataclass(frozen=True)
class SigmaReport:
    edge: tuple[int, int]
    delta: int
    delta_bar: int
    sigma: int

    def __post_init__(self):
        if self.sigma != self.delta_bar - self.delta:
            raise ValueError("sigma must equal delta_bar - delta")


@dataclass(frozen=True)
class EdgeClass:
    edge: tuple[int, int]
    weak: bool
    strong: bool
    uniformly_strong: bool


def resolve_limit(limit: int | None) -> int:
    """Explicit argument, else the WEAKCOVER_EXACT_LIMIT env var, else 50."""
    if limit is not None:
        return limit
    env = os.environ.get(LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_EXACT_LIMIT


def exact_vc(g: Graph, limit: int | None = None) -> frozenset[int]:
    """A minimum vertex cover by branch and bound.

    Deterministic: branches on the max-degree vertex (ties to the smallest
    id), include-branch first, so the returned cover is a pure function of
    the graph. Pruning uses a greedy maximal matching per node plus the LPR
    optimum at the root (the search stops as soon as a cover matches it).
    """
    lim = resolve_limit(limit)
    if g.n > lim:
        raise ExactLimitError(f"n = {g.n} exceeds the exact limit {lim}")
    if g.edge_count == 0:
        return frozenset()

    root_bound = ceil_rat(solve_lpr(g).z_value)
    best = frozenset(g.vertices)
    best_size = g.n
    chosen: list[int] = []
    hit_floor = False

    def matching_bound(h: Graph) -> int:
        used = set()
        count = 0
        for u, v in h.edges():
            if u not in used and v not in used:
                used.add(u)
                used.add(v)
                count += 1
        return count

    def search(h: Graph) -> None:
        nonlocal best, best_size, hit_floor
        if hit_floor:
            return
        if h.edge_count == 0:
            if len(chosen) < best_size:
                best = frozenset(chosen)
                best_size = len(chosen)
                hit_floor = best_size == root_bound
            return
        if len(chosen) + matching_bound(h) >= best_size:
            return
        v = max(sorted(h.vertices), key=h.degree)
        chosen.append(v)
        search(h.delete_vertices((v,)))
        chosen.pop()
        if hit_floor:
            return
        nbrs = sorted(h.neighbors(v))
        chosen.extend(nbrs)
        search(h.delete_vertices([v, *nbrs]))
        del chosen[len(chosen) - len(nbrs) :]

    search(g)
    return best


def exact_restricted_vc(
    g: Graph, i: int, j: int, limit: int | None = None
) -> tuple[frozenset[int], int]:
    """A minimum cover among those containing exactly one endpoint of (i, j),
    returned with its size delta_bar(i, j).

    Two forced subproblems: keep i and exclude j (which drags all of j's
    other neighbors in), and the mirror image. Both are always feasible;
    ties prefer the keep-i branch.
    """
    lim = resolve_limit(limit)
    if g.n > lim:
        raise ExactLimitError(f"n = {g.n} exceeds the exact limit {lim}")
    if not g.has_edge(i, j):
        raise ValueError(f"({i}, {j}) is not an edge")

    def branch(keep: int, out: int) -> frozenset[int]:
        forced = {keep} | (g.neighbors(out) - {keep})
        rest = g.delete_vertices(forced | {out})
        return frozenset(forced) | exact_vc(rest, lim)

    keep_i = branch(i, j)
    keep_j = branch(j, i)
    cover = keep_i if len(keep_i) <= len(keep_j) else keep_j
    return cover, len(cover)


def sigma(g: Graph, i: int, j: int, limit: int | None = None) -> SigmaReport:
    """Exact sigma(i, j) with both cover sizes it is built from."""
    delta = len(exact_vc(g, limit))
    _, delta_bar = exact_restricted_vc(g, i, j, limit)
    return SigmaReport((i, j), delta, delta_bar, delta_bar - delta)


def classify_edge(g: Graph, i: int, j: int, limit: int | None = None) -> EdgeClass:
    """Weak / strong / uniformly strong status of an edge.

    Weak: some optimal cover contains exactly one endpoint (sigma = 0).
    Strong: some optimal cover contains both endpoints.
    Uniformly strong: every optimal cover contains both, i.e. not weak.
    """
    lim = resolve_limit(limit)
    if g.n > lim:
        raise ExactLimitError(f"n = {g.n} exceeds the exact limit {lim}")
    if not g.has_edge(i, j):
        raise ValueError(f"({i}, {j}) is not an edge")
    delta = len(exact_vc(g, lim))
    _, delta_bar = exact_restricted_vc(g, i, j, lim)
    both = 2 + len(exact_vc(g.delete_vertices((i, j)), lim))
    return EdgeClass((i, j), delta_bar == delta, both == delta, delta_bar != delta)


def find_weak_edge(g: Graph, limit: int | None = None) -> tuple[int, int]:
    """The lexicographically first weak edge. One always exists."""
    lim = resolve_limit(limit)
    if g.n > lim:
        raise ExactLimitError(f"n = {g.n} exceeds the exact limit {lim}")
    if g.edge_count == 0:
        raise ValueError("graph has no edges")
    delta = len(exact_vc(g, lim))
    for u, v in g.edges():
        if exact_restricted_vc(g, u, v, lim)[1] == delta:
            return (u, v)
    raise AssertionError("every graph with an edge has a weak edge")
