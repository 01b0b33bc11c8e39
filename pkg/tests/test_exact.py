from fractions import Fraction

import pytest
from hypothesis import given, settings

from helpers import digraphs, strongly_connected_brute
from wmscss.errors import InfeasibleError, SizeLimitError
from wmscss.exact import (
    enumerate_arborescences,
    enumerate_cuts,
    exact_opt,
    exact_opt_plain,
    min_cut_brute,
    proper_subsets,
)
from wmscss.graph import Digraph, is_strongly_connected
from wmscss.instances import gen_bidirected, gen_cycle, gen_random_strong
from wmscss.lp import IN, OUT


def test_cycle(cycle3):
    assert exact_opt(cycle3) == (frozenset({0, 1, 2}), 3)


def test_triangle(triangle):
    arcs, w = exact_opt(triangle)
    assert w == 3 and arcs == exact_opt_plain(triangle)[0]


def test_two_vertices():
    g = gen_bidirected(2, [(0, 1)], "asymmetric", [(2, 5)])
    assert exact_opt(g) == (frozenset({0, 1}), 7)


def test_single_vertex():
    assert exact_opt(Digraph.from_arcs(1, [])) == (frozenset(), 0)


def test_limit():
    g = gen_cycle(6, 1)
    with pytest.raises(SizeLimitError):
        exact_opt(g, max_arcs=5)


def test_infeasible(single_arc):
    with pytest.raises(InfeasibleError):
        exact_opt(single_arc)


def test_tie_break_is_lexicographic():
    # two 2-cycles of equal weight; {0, 1} < {2, 3}
    g = Digraph.from_arcs(2, [(0, 1, 1), (1, 0, 1), (0, 1, 1), (1, 0, 1)])
    assert exact_opt(g)[0] == {0, 1}
    g = Digraph.from_arcs(2, [(0, 1, 2), (1, 0, 1), (0, 1, 1), (1, 0, 2)])
    assert exact_opt(g)[0] == {1, 2}


@settings(max_examples=150, deadline=None)
@given(digraphs(min_n=1, max_n=5, max_m=11))
def test_branch_and_bound_matches_plain(g):
    if not strongly_connected_brute(g):
        with pytest.raises(InfeasibleError):
            exact_opt(g)
        return
    arcs, w = exact_opt(g)
    assert strongly_connected_brute(g, arcs) and g.weight(arcs) == w
    plain_arcs, plain_w = exact_opt_plain(g)
    assert w == plain_w and arcs == plain_arcs


@pytest.mark.parametrize("seed", range(5))
def test_big_weights_use_object_path(seed):
    g = gen_random_strong(4, 9, (10**18, 10**19), seed=seed)
    arcs, w = exact_opt(g)
    assert w == exact_opt_plain(g)[1]


class TestEnumeration:
    def test_counts(self, cycle3, triangle):
        assert len(enumerate_arborescences(cycle3, 0, IN)) == 1
        assert len(enumerate_arborescences(triangle, 0, IN)) == 3
        assert len(enumerate_arborescences(triangle, 0, OUT)) == 3
        star = gen_bidirected(4, [(0, 1), (0, 2), (0, 3)])
        assert len(enumerate_arborescences(star, 0, IN)) == 1

    def test_complete_graph_cayley(self):
        # K_4 bidirected: n^(n-2) = 16 spanning trees, each orientable one way
        k4 = gen_bidirected(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        assert len(enumerate_arborescences(k4, 0, IN)) == 16

    def test_cuts(self, cycle3):
        cuts = dict(enumerate_cuts(cycle3, [1, 1, 1]))
        assert len(cuts) == 6 and set(cuts.values()) == {1}
        assert list(proper_subsets(1)) == []

    def test_min_cut_brute(self, triangle):
        assert min_cut_brute(triangle, [1] * 6, 0, 2) == 2
