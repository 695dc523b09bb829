import pytest

from weakcover import (
    Graph,
    awer,
    find_weak_edge,
    gen_family,
    is_vertex_cover,
    matching_2approx,
    rat,
    ratio_certificate,
    wer,
)

from conftest import random_graphs
from helpers import brute_cover


def exact_oracle(g):
    return find_weak_edge(g)


class TestMatchingBaseline:
    def test_single_edge_is_the_worst_case(self):
        report = matching_2approx(Graph([1, 2], [(1, 2)]))
        assert report.cover == frozenset({1, 2})
        assert report.ratio_vs_lpr == 2

    def test_even_cycle(self):
        g = gen_family("cycle", 4)
        report = matching_2approx(g)
        assert is_vertex_cover(g, report.cover)
        assert report.size <= 4

    def test_edgeless_graph(self):
        report = matching_2approx(Graph([1, 2, 3]))
        assert report.cover == frozenset()
        assert report.ratio_vs_lpr == 1

    def test_never_worse_than_twice_the_bound(self):
        for g in random_graphs(8, 4, 10, seed0=620):
            report = matching_2approx(g)
            assert is_vertex_cover(g, report.cover)
            assert report.ratio_vs_lpr <= 2


class TestWerWithExactOracle:
    def test_eight_vertex_example(self, eight_vertex):
        report, trace = wer(eight_vertex, exact_oracle)
        assert report.size == 4
        assert is_vertex_cover(eight_vertex, report.cover)
        assert trace.frames

    def test_complete_six(self):
        report, trace = wer(gen_family("complete", 6), exact_oracle)
        assert report.size == 5
        assert len(trace.frames) == 1
        assert trace.frames[0].weak_pair == (1, 2)

    def test_bipartite_never_needs_the_oracle(self):
        def exploding(_):
            raise AssertionError("oracle consulted on a bipartite graph")

        g = gen_family("cycle", 4)
        report, trace = wer(g, exploding)
        assert report.size == 2
        assert len(trace.frames) == 1
        assert trace.frames[0].weak_pair is None

    def test_optimal_on_random_graphs(self):
        for g in random_graphs(16, 4, 10, seed0=640):
            report, trace = wer(g, exact_oracle)
            assert is_vertex_cover(g, report.cover)
            assert report.size == len(brute_cover(g))
            for frame in trace.frames[:-1]:
                assert frame.weak_pair is not None

    def test_oracle_returning_a_non_edge_is_an_error(self):
        with pytest.raises(ValueError):
            wer(gen_family("complete", 4), lambda h: (1, 99))

    def test_sloppy_oracle_still_yields_a_cover(self):
        # Lifting covers regardless of whether the chosen edges were weak.
        for g in random_graphs(8, 4, 9, seed0=660):
            if g.edge_count == 0:
                continue
            report, _ = wer(g, lambda h: h.edges()[0])
            assert is_vertex_cover(g, report.cover)


class TestAwer:
    @pytest.mark.parametrize("n", range(4, 9))
    def test_complete_graphs_audit_clean(self, n):
        g = gen_family("complete", n)
        report, trace = awer(g, audit=True)
        assert report.size == n - 1
        assert report.audit == "done"
        assert report.sigma_bound.max_sigma == 0
        assert report.sigma_bound.guarantee == 1
        assert trace.per_frame_sigma == (0,) * len(
            [f for f in trace.frames if f.weak_pair]
        )

    def test_wheel_is_solved_exactly(self):
        g = gen_family("wheel", 8)
        report, _ = awer(g, audit=True)
        assert report.size == len(brute_cover(g))
        assert report.sigma_bound.max_sigma == 0

    def test_best_z_reports_the_first_scan(self):
        report, _ = awer(gen_family("complete", 4))
        assert report.best_z == 3
        assert report.audit == "off"

    def test_audit_skipped_above_the_limit(self):
        report, trace = awer(gen_family("double_wheel", 8), audit=True, exact_limit=6)
        assert report.audit == "skipped"
        assert report.sigma_bound is None
        assert trace.per_frame_sigma is None
        assert is_vertex_cover(gen_family("double_wheel", 8), report.cover)

    def test_audited_guarantee_holds(self):
        for g in random_graphs(6, 6, 12, seed0=680):
            report, _ = awer(g, audit=True)
            assert report.audit == "done"
            delta = len(brute_cover(g))
            assert rat(report.size) <= report.sigma_bound.guarantee * delta

    def test_accounting_identities(self):
        for g in random_graphs(6, 5, 10, seed0=700):
            report, trace = awer(g)
            frames = trace.frames
            t = sum(1 for f in frames if f.weak_pair is not None)
            ones = sum(len(f.i1) for f in frames)
            commons = sum(len(f.delta) for f in frames)
            settled = sum(len(f.i0) + len(f.i1) for f in frames)
            assert report.size == ones + commons + t
            assert g.n == settled + commons + 2 * t


class TestRatioCertificate:
    def test_exact_when_within_limits(self):
        g = gen_family("complete", 6)
        report, _ = awer(g)
        assert ratio_certificate(g, report) == 1

    def test_matching_on_a_single_edge(self):
        g = Graph([1, 2], [(1, 2)])
        assert ratio_certificate(g, matching_2approx(g)) == 2

    def test_falls_back_to_the_relaxation_bound(self):
        g = gen_family("double_wheel", 10)
        report, _ = awer(g)
        certified = ratio_certificate(g, report, exact_limit=4)
        assert certified == rat(report.size) / report.lpr_bound
