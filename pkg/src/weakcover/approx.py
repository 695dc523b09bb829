"""Cover construction by repeated reduction, with certificates.

The main driver alternates the {0,1}-reduction with a weak-edge reduction on
an edge an oracle nominates, until nothing is left, then rebuilds a cover
frame by frame. With an exact weak-edge oracle the output is optimal. The
approximate variant nominates the edge whose restricted relaxation is
cheapest; its error is controlled by the sigma values of the chosen edges,
and an optional audit recomputes those exactly so every run carries its own
ratio guarantee 2 - 1/(1 + max sigma).
"""

from dataclasses import dataclass, replace
from typing import Callable

from .exact import exact_vc, resolve_limit, sigma
from .graph import Graph, is_vertex_cover
from .rational import RAT_ONE, RAT_ZERO, Rat
from .reductions import ReductionFrame, reconstruct, weak_edge_reduce, zero_one_reduce
from .relaxations import best_restricted_edge, solve_lpr


@dataclass(frozen=True)
class SigmaBound:
    """Audited worst sigma over a run and the ratio guarantee it implies."""

    max_sigma: int
    guarantee: object  # 2 - 1/(1 + max_sigma)


@dataclass(frozen=True)
class Trace:
    """Reduction frames of one run, plus audited per-frame sigma values."""

    frames: tuple[ReductionFrame, ...]
    per_frame_sigma: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CoverReport:
    cover: frozenset[int]
    size: int
    lpr_bound: object
    best_z: object
    ratio_vs_lpr: object
    sigma_bound: SigmaBound | None = None
    audit: str = "off"  # off | done | skipped


def matching_2approx(g: Graph) -> CoverReport:
    """Both endpoints of a greedy maximal matching; the classical factor-2
    baseline the relaxation machinery is measured against."""
    used: set[int] = set()
    for u, v in g.edges():
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
    return _report(g, frozenset(used))


def wer(g: Graph, oracle: Callable[[Graph], tuple[int, int]]) -> tuple[CoverReport, Trace]:
    """Reduce with the given weak-edge oracle, then lift a cover back out.

    Each round: run the {0,1}-reduction; if the kernel is empty, record a
    final frame and stop. Otherwise ask the oracle for an edge of the
    kernel, apply the weak-edge reduction, and recurse on what is left.
    Lifting replays the frames in reverse. The result is always a cover;
    it is optimal whenever the oracle only ever returns weak edges.
    """
    frames: list[ReductionFrame] = []
    h = g
    while True:
        kernel, i0, i1 = zero_one_reduce(h)
        if kernel.n == 0:
            frames.append(
                ReductionFrame(i0, i1, None, frozenset(), frozenset(), kernel, None)
            )
            break
        i, j = oracle(kernel)
        if not kernel.has_edge(i, j):
            raise ValueError(f"oracle returned ({i}, {j}), not an edge of the kernel")
        reduced, frame = weak_edge_reduce(kernel, i, j)
        frames.append(replace(frame, i0=i0, i1=i1))
        if reduced.n == 0:
            break
        h = reduced
    cover: frozenset[int] = frozenset()
    for frame in reversed(frames):
        cover = reconstruct(frame, cover)
    if not is_vertex_cover(g, cover):
        raise AssertionError("lifted set fails to cover the input graph")
    return _report(g, cover), Trace(tuple(frames))


def awer(
    g: Graph, audit: bool = False, exact_limit: int | None = None
) -> tuple[CoverReport, Trace]:
    """wer() driven by the restricted-relaxation scan instead of an exact
    oracle. With audit=True (and the graph within the exact size limit) the
    chosen edges' sigma values are recomputed exactly and the report gains
    the implied ratio guarantee; oversized graphs skip the audit and say so.
    """
    scan_zs: list = []

    def oracle(kernel: Graph) -> tuple[int, int]:
        p, q, z, _ = best_restricted_edge(kernel)
        scan_zs.append(z)
        return (p, q)

    report, trace = wer(g, oracle)
    if scan_zs:
        lifted = scan_zs[0] + len(trace.frames[0].i1)
        report = replace(report, best_z=lifted)
    if not audit:
        return report, trace
    lim = resolve_limit(exact_limit)
    if g.n > lim:
        return replace(report, audit="skipped"), trace
    sigmas = tuple(
        sigma(f.kernel, *f.weak_pair, limit=lim).sigma
        for f in trace.frames
        if f.weak_pair is not None
    )
    worst = max(sigmas, default=0)
    bound = SigmaBound(worst, 2 - Rat(1, 1 + worst))
    trace = replace(trace, per_frame_sigma=sigmas)
    report = replace(report, sigma_bound=bound, audit="done")
    return report, trace


def ratio_certificate(g: Graph, report: CoverReport, exact_limit: int | None = None):
    """size / optimum when the exact solver may run, else size / lpr_bound."""
    lim = resolve_limit(exact_limit)
    if g.n <= lim:
        delta = len(exact_vc(g, lim))
        return Rat(report.size, delta) if delta else RAT_ONE
    if report.lpr_bound == RAT_ZERO:
        return RAT_ONE
    return Rat(report.size) / report.lpr_bound


def _report(g: Graph, cover: frozenset[int]) -> CoverReport:
    lpr = solve_lpr(g).z_value if g.n else RAT_ZERO
    size = len(cover)
    ratio = Rat(size) / lpr if lpr > RAT_ZERO else RAT_ONE
    if ratio > 2:
        raise AssertionError("cover exceeds twice the relaxation bound")
    return CoverReport(
        cover=cover,
        size=size,
        lpr_bound=lpr,
        best_z=None,
        ratio_vs_lpr=ratio,
        sigma_bound=None,
        audit="off",
    )
