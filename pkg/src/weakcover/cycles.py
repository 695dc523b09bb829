"""Odd-cycle separation and the cutting-plane loop.

A fractional point x that satisfies every edge row may still violate an
odd-cycle inequality sum(x_i for i in cycle) >= s + 1 on a cycle of length
2s + 1. Writing w(u, v) = x_u + x_v - 1 >= 0, a cycle is violated exactly
when its total edge weight is below 1, so the most-violated candidate is a
minimum-weight odd closed walk. That walk is found by shortest paths in the
parity double cover (two copies of each vertex, edges switch sides), and a
violated simple odd cycle is extracted from it.
"""

import heapq
from dataclasses import dataclass

from .graph import Graph
from .lp import EQ, GE, DualSimplex, LpProblem, LpRow, LpSolution
from .rational import RAT_ONE, RAT_ZERO


@dataclass(frozen=True)
class OddCycle:
    """A simple cycle of odd length, stored as its vertex sequence."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        k = len(self.vertices)
        if k < 3 or k % 2 == 0:
            raise ValueError(f"odd cycle needs odd length >= 3, got {k}")
        if len(set(self.vertices)) != k:
            raise ValueError("cycle repeats a vertex")

    @property
    def s(self) -> int:
        return (len(self.vertices) - 1) // 2

    def row(self) -> LpRow:
        return LpRow.of({v: 1 for v in self.vertices}, GE, self.s + 1)


def separate_odd_cycle(g: Graph, x: dict) -> OddCycle | None:
    """Find a violated odd-cycle inequality at x, or None if all hold.

    Requires x to satisfy every edge row of g exactly or slackly (weights
    must be nonnegative for the shortest-path search). Returns the cycle of
    minimum weight; ties break on the lexicographically smallest canonical
    vertex list. Complete: returns None only when no violated simple odd
    cycle exists.
    """
    weight = {}
    for u, v in g.edges():
        w = x[u] + x[v] - RAT_ONE
        if w < RAT_ZERO:
            raise ValueError(f"edge row ({u}, {v}) violated: {x[u]} + {x[v]} < 1")
        weight[(u, v)] = weight[(v, u)] = w

    best = None
    walks = []
    for v in sorted(g.vertices):
        found = _min_odd_closed_walk(g, weight, v)
        if found is None:
            continue
        dist, walk = found
        if best is None or dist < best:
            best, walks = dist, [walk]
        elif dist == best:
            walks.append(walk)
    if best is None or best >= RAT_ONE:
        return None

    candidates = {}
    for walk in walks:
        for cyc in _simple_cycles_of_closed_walk(walk):
            if len(cyc) % 2 == 0:
                continue
            w = sum(
                (weight[(cyc[k], cyc[(k + 1) % len(cyc)])] for k in range(len(cyc))),
                RAT_ZERO,
            )
            if w < RAT_ONE:
                candidates[_canonical(cyc)] = w
    if not candidates:
        raise AssertionError("odd walk below weight 1 must contain a violated odd cycle")
    chosen = min(candidates, key=lambda key: (candidates[key], key))
    return OddCycle(chosen)


def _min_odd_closed_walk(g, weight, source):
    """Dijkstra from (source, even) to (source, odd) in the parity double
    cover; the projected path is a minimum-weight odd closed walk through
    source. Returns (distance, walk) or None when no odd walk exists."""
    start, target = (source, 0), (source, 1)
    dist = {start: RAT_ZERO}
    prev = {}
    heap = [(RAT_ZERO, source, 0)]
    done = set()
    while heap:
        d, v, par = heapq.heappop(heap)
        node = (v, par)
        if node in done:
            continue
        done.add(node)
        if node == target:
            break
        for u in sorted(g.neighbors(v)):
            nxt = (u, par ^ 1)
            nd = d + weight[(v, u)]
            if nxt not in dist or nd < dist[nxt]:
                dist[nxt] = nd
                prev[nxt] = node
                heapq.heappush(heap, (nd, u, par ^ 1))
    if target not in done:
        return None
    walk = []
    node = target
    while node != start:
        walk.append(node[0])
        node = prev[node]
    walk.append(source)
    walk.reverse()
    return dist[target], walk


def _simple_cycles_of_closed_walk(walk):
    """Decompose a closed walk into simple cycles by stack scanning."""
    stack: list[int] = []
    pos: dict[int, int] = {}
    out = []
    for v in walk:
        if v in pos:
            at = pos[v]
            segment = stack[at:]
            if len(segment) >= 3:
                out.append(tuple(segment))
            for u in stack[at + 1 :]:
                del pos[u]
            del stack[at + 1 :]
        else:
            pos[v] = len(stack)
            stack.append(v)
    return out


def _canonical(cyc):
    """Rotate to the smallest vertex, then take the smaller direction."""
    k = cyc.index(min(cyc))
    forward = cyc[k:] + cyc[:k]
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return min(forward, backward)


def edge_rows(g: Graph, skip: tuple[int, int] | None = None) -> list[LpRow]:
    """One x_u + x_v >= 1 row per edge, lexicographic order, optionally
    omitting a single edge."""
    rows = []
    for u, v in g.edges():
        if (u, v) == skip:
            continue
        rows.append(LpRow.of({u: 1, v: 1}, GE, 1))
    return rows


def cutting_plane_solve(
    g: Graph, restricted_edge: tuple[int, int] | None = None
) -> tuple[LpSolution, tuple[OddCycle, ...]]:
    """Solve the edge LP strengthened by odd-cycle cuts to optimality.

    With restricted_edge (r, s), the (r, s) edge row is replaced by the
    equality x_r + x_s = 1 and the result is the restricted program's
    optimum. Each round solves, separates at the optimum, and appends the
    one most violated cut; the engine re-optimizes from its current basis.
    The loop terminates because simple odd cycles are finite, and the final
    separation call certifies that no odd-cycle inequality is violated at
    the returned point.
    """
    skip = None
    if restricted_edge is not None:
        r, s = restricted_edge
        if not g.has_edge(r, s):
            raise ValueError(f"({r}, {s}) is not an edge")
        skip = (min(r, s), max(r, s))
    variables = tuple(sorted(g.vertices))
    rows = edge_rows(g, skip)
    if skip is not None:
        rows.append(LpRow.of({skip[0]: 1, skip[1]: 1}, EQ, 1))
    engine = DualSimplex(LpProblem(variables, tuple(rows)))
    solution = engine.solve()
    cuts: list[OddCycle] = []
    while True:
        cycle = separate_odd_cycle(g, solution.values)
        if cycle is None:
            return solution, tuple(cuts)
        cuts.append(cycle)
        engine.add_row(cycle.row())
        solution = engine.solve()
