"""Cover-preserving graph reductions and the frames that undo them.

Two moves shrink a graph while keeping enough bookkeeping to lift any cover
of the result back to a cover of the original:

{0,1}-reduction   solve the edge relaxation; vertices at 1 go straight into
                  the cover, vertices at 0 stay out, and both are deleted.
                  Lifting is just a union with the ones.

weak-edge reduction   for an edge (i, j) with neighborhood split
                  (delta, d_i, d_j), delete delta and both endpoints and add
                  every d_i x d_j edge. Lifting adds delta plus one endpoint:
                  j when d_i ended up covered by the smaller cover, else i.
                  If (i, j) was weak, lifting an optimal cover stays optimal.

A ReductionFrame records one round of either move; reconstruct() replays it.
"""

from dataclasses import dataclass

from .graph import Graph, is_vertex_cover, reduction_sets
from .rational import RAT_ONE, RAT_ZERO
from .relaxations import solve_lpr


@dataclass(frozen=True)
class ReductionFrame:
    """One recorded reduction round.

    i0/i1 come from the {0,1}-reduction of the round; weak_pair, delta and
    d_i from the weak-edge reduction (absent on rounds that only ran the
    {0,1} step). kernel is the graph the weak pair was chosen on, reduced
    the graph a cover must be lifted from; both are optional conveniences
    for validation and audits.
    """

    i0: frozenset[int]
    i1: frozenset[int]
    weak_pair: tuple[int, int] | None
    delta: frozenset[int]
    d_i: frozenset[int]
    kernel: Graph | None = None
    reduced: Graph | None = None

    def __post_init__(self):
        if self.weak_pair is None and (self.delta or self.d_i):
            raise ValueError("delta and d_i require a weak pair")
        pieces = [self.i0, self.i1, self.delta, self.d_i]
        if self.weak_pair is not None:
            pieces.append(frozenset(self.weak_pair))
        total = sum(len(p) for p in pieces)
        if len(frozenset().union(*pieces)) != total:
            raise ValueError("frame pieces must be pairwise disjoint")


def zero_one_reduce(g: Graph) -> tuple[Graph, frozenset[int], frozenset[int]]:
    """Delete the integral part of an optimal edge-relaxation vertex.

    Returns (reduced, i0, i1). Every vertex of the reduced graph sat at 1/2,
    and an optimal cover of the reduced graph plus i1 is optimal for g.
    """
    if g.n == 0:
        return g, frozenset(), frozenset()
    values = solve_lpr(g).solution.values
    i0 = frozenset(v for v, x in values.items() if x == RAT_ZERO)
    i1 = frozenset(v for v, x in values.items() if x == RAT_ONE)
    reduced = g.delete_vertices(i0 | i1)
    for v in reduced.vertices:
        if 2 * values[v] != RAT_ONE:
            raise AssertionError("survivor of the {0,1}-reduction not at 1/2")
    return reduced, i0, i1


def weak_edge_reduce(g: Graph, i: int, j: int) -> tuple[Graph, ReductionFrame]:
    """Contract the edge (i, j) away: drop its common neighborhood and both
    endpoints, then join the private neighborhoods completely."""
    delta, d_i, d_j = reduction_sets(g, i, j)
    base = g.delete_vertices(delta | {i, j})
    reduced = base.add_edges((u, v) for u in d_i for v in d_j)
    frame = ReductionFrame(
        i0=frozenset(),
        i1=frozenset(),
        weak_pair=(i, j),
        delta=delta,
        d_i=d_i,
        kernel=g,
        reduced=reduced,
    )
    return reduced, frame


def reconstruct(frame: ReductionFrame, r) -> frozenset[int]:
    """Lift a cover r of the frame's reduced graph through the frame.

    Weak-pair frames add delta plus the endpoint the lifting rule picks
    (j when d_i is already inside r, else i), then union i1. Frames without
    a weak pair only union i1.
    """
    members = set(r)
    if frame.weak_pair is not None:
        if frame.reduced is not None and not is_vertex_cover(frame.reduced, members):
            raise ValueError("r does not cover the reduced graph of this frame")
        i, j = frame.weak_pair
        members |= frame.delta
        members.add(j if frame.d_i <= set(r) else i)
    return frozenset(members | frame.i1)
