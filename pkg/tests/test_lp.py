from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import capacities, cut_value, digraphs
from wmscss.errors import InfeasibleError, PreconditionError
from wmscss.exact import enumerate_cuts, enumerated_arborescence_lp, enumerated_lp, exact_opt, proper_subsets
from wmscss.graph import Digraph, delta_plus, is_strongly_connected
from wmscss.instances import gen_bidirected, gen_cycle, gen_mixture_point, gen_random_strong
from wmscss.lp import (
    IN,
    OUT,
    FractionalSolution,
    check_arborescence_lp_feasible,
    check_wmscss_feasible,
    format_solution,
    min_nonzero_entry,
    parse_solution,
    solve_cut_lp,
    solve_wmscss_lp,
    truncate_to_box,
    violated_cuts,
)
from wmscss.simplex import maximize

HALF = Fraction(1, 2)


class TestSimplex:
    def test_textbook(self):
        # max 3a + 5b; a <= 4, 2b <= 12, 3a + 2b <= 18  ->  36 at (2, 6)
        res = maximize([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
        assert res.value == 36 and res.primal == [2, 6]
        # duals solve min 4y1 + 12y2 + 18y3 with the same value
        assert sum(b * y for b, y in zip([4, 12, 18], res.dual)) == 36

    def test_unbounded(self):
        with pytest.raises(InfeasibleError):
            maximize([1, 0], [[-1, 1]], [1])

    def test_degenerate_terminates(self):
        # Beale-style degenerate instance; Bland's rule must not cycle
        c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
        rows = [[Fraction(1, 4), -60, Fraction(-1, 25), 9], [HALF, -90, Fraction(-1, 50), 3], [0, 0, 1, 0]]
        res = maximize(c, rows, [0, 0, 1])
        assert res.value == Fraction(1, 20)


class TestFeasibility:
    def test_cycle_integral(self, cycle3):
        assert check_wmscss_feasible(cycle3, [1, 1, 1]) is None

    def test_triangle_half(self, triangle):
        cuts = enumerate_cuts(triangle, [HALF] * 6)
        assert len(cuts) == 6 and all(v == 1 for _, v in cuts)
        assert check_wmscss_feasible(triangle, [HALF] * 6) is None

    def test_cycle_half_violated(self, cycle3):
        cert = check_wmscss_feasible(cycle3, [HALF] * 3)
        assert cert is not None and cert.value == HALF
        assert cert.crossing_arcs == delta_plus(cycle3, cert.side)

    def test_dimension_mismatch(self, cycle3):
        with pytest.raises(PreconditionError):
            check_wmscss_feasible(cycle3, [1, 1])

    def test_solution_bound_to_other_graph(self, cycle3, triangle):
        with pytest.raises(PreconditionError):
            check_wmscss_feasible(cycle3, FractionalSolution.of(triangle, [HALF] * 6))

    @settings(max_examples=200, deadline=None)
    @given(digraphs(min_n=2), st.data())
    def test_separation_sound_and_complete(self, g, data):
        x = capacities(data.draw, g.m, max_value=1)
        cuts = enumerate_cuts(g, x)
        violated = [s for s, v in cuts if v < 1]
        cert = check_wmscss_feasible(g, x)
        assert (cert is None) == (not violated)
        if cert is not None:
            assert cert.value < 1 and cut_value(g, cert.side, x) == cert.value
            assert cert.value == min(v for _, v in cuts)
        for c in violated_cuts(g, x):
            assert c.value < 1 and c.side in violated


class TestArborescenceLp:
    def test_cycle_in(self, cycle3):
        assert check_arborescence_lp_feasible(cycle3, [1, 1, 1], 0, IN) is None

    def test_single_arc(self, single_arc):
        assert check_arborescence_lp_feasible(single_arc, [1], 1, IN) is None
        cert = check_arborescence_lp_feasible(single_arc, [1], 0, IN)
        assert cert is not None and cert.side == {1} and cert.value == 0

    def test_triangle_both_directions(self, triangle):
        for s in proper_subsets(3):
            if 0 not in s:
                assert cut_value(triangle, s, [HALF] * 6) >= 1
        for d in (IN, OUT):
            assert check_arborescence_lp_feasible(triangle, [HALF] * 6, 0, d) is None

    def test_out_certificate_uses_leaving_arcs(self, single_arc):
        # out-arborescence at root 1 needs an arc into 0: none exists
        cert = check_arborescence_lp_feasible(single_arc, [1], 1, OUT)
        assert cert is not None and 1 in cert.side and cert.value == 0
        assert cert.crossing_arcs == delta_plus(single_arc, cert.side)

    @settings(max_examples=150, deadline=None)
    @given(digraphs(min_n=2, max_n=6), st.data())
    def test_against_enumeration(self, g, data):
        x = capacities(data.draw, g.m, max_value=1)
        r = data.draw(st.integers(0, g.n - 1))
        in_ok = all(cut_value(g, s, x) >= 1 for s in proper_subsets(g.n) if r not in s)
        out_ok = all(cut_value(g, s, x) >= 1 for s in proper_subsets(g.n) if r in s)
        assert (check_arborescence_lp_feasible(g, x, r, IN) is None) == in_ok
        assert (check_arborescence_lp_feasible(g, x, r, OUT) is None) == out_ok

    def test_bad_root(self, cycle3):
        with pytest.raises(PreconditionError):
            check_arborescence_lp_feasible(cycle3, [1, 1, 1], 3, IN)


class TestSolve:
    def test_cycle(self, cycle3):
        out = solve_wmscss_lp(cycle3)
        assert enumerated_lp(cycle3)[1] == 3
        assert out.objective == 3 and out.solution.values == (1, 1, 1)

    def test_triangle(self, triangle):
        assert enumerated_lp(triangle)[1] == 3
        out = solve_wmscss_lp(triangle)
        assert out.objective == 3
        assert check_wmscss_feasible(triangle, out.solution) is None

    def test_two_vertices(self):
        g = gen_bidirected(2, [(0, 1)])
        out = solve_wmscss_lp(g)
        assert out.objective == 2 and out.solution.values == (1, 1)

    def test_single_vertex(self):
        out = solve_wmscss_lp(Digraph.from_arcs(1, []))
        assert out.objective == 0 and out.solution.values == ()

    def test_not_strongly_connected(self, single_arc):
        with pytest.raises(InfeasibleError) as info:
            solve_wmscss_lp(single_arc)
        assert info.value.cut.value == 0
        assert delta_plus(single_arc, info.value.cut.side) == frozenset()

    def test_objective_recomputed(self):
        g = gen_random_strong(6, 14, (1, 9), seed=3, max_den=3)
        out = solve_wmscss_lp(g)
        assert out.objective == sum(a.weight * v for a, v in zip(g.arcs, out.solution.values))

    def test_generated_cuts_are_new_rows(self):
        # a graph where singleton cuts alone admit a fractional cheat
        g = gen_bidirected(4, [(0, 1), (2, 3), (1, 2)], "per-edge", [1, 1, 10])
        g = Digraph.from_arcs(4, [(a.tail, a.head, a.weight) for a in g.arcs] + [(0, 3, 20), (3, 0, 20)])
        out = solve_wmscss_lp(g)
        assert out.objective == enumerated_lp(g)[1]
        assert check_wmscss_feasible(g, out.solution) is None

    @pytest.mark.parametrize("seed", range(25))
    def test_matches_enumerated_lp(self, seed):
        g = gen_random_strong(3 + seed % 5, min(18, 4 + seed), (1, 12), seed=seed, max_den=2)
        out = solve_wmscss_lp(g)
        assert out.objective == enumerated_lp(g)[1]
        _, opt = exact_opt(g)
        assert out.objective <= opt

    @pytest.mark.parametrize("seed", range(10))
    def test_against_float_solver(self, seed):
        scipy = pytest.importorskip("scipy.optimize")
        g = gen_random_strong(5, 12, (1, 12), seed=seed, max_den=3)
        sides = list(proper_subsets(g.n))
        a_ub = [[-1.0 if a.tail in s and a.head not in s else 0.0 for a in g.arcs] for s in sides]
        res = scipy.linprog([float(w) for w in g.weights], A_ub=a_ub, b_ub=[-1.0] * len(sides), bounds=[(0, 1)] * g.m)
        assert abs(res.fun - float(solve_wmscss_lp(g).objective)) < 1e-7

    @pytest.mark.parametrize("seed", range(8))
    def test_optimum_feasible_for_arborescence_lps(self, seed):
        g = gen_random_strong(5, 11, (1, 9), seed=seed)
        x = solve_wmscss_lp(g).solution
        for r in range(g.n):
            for d in (IN, OUT):
                assert check_arborescence_lp_feasible(g, x, r, d) is None


class TestBoxAndF:
    def test_truncate(self):
        g = Digraph.from_arcs(2, [(0, 1, 1), (1, 0, 1), (0, 1, 1)])
        assert truncate_to_box(g, [Fraction(3, 2), 0, HALF]).values == (1, 0, HALF)

    def test_truncate_identity(self, triangle):
        assert truncate_to_box(triangle, [HALF] * 6).values == (HALF,) * 6

    def test_truncate_keeps_feasibility(self, cycle3):
        raw = [2, 1, 1]
        assert check_wmscss_feasible(cycle3, raw) is None
        assert check_wmscss_feasible(cycle3, truncate_to_box(cycle3, raw)) is None

    def test_truncate_negative(self, cycle3):
        with pytest.raises(PreconditionError):
            truncate_to_box(cycle3, [-1, 1, 1])

    @settings(max_examples=100, deadline=None)
    @given(digraphs(min_n=2, max_n=6), st.data())
    def test_truncation_preserves_feasibility(self, g, data):
        raw = capacities(data.draw, g.m, max_value=3)
        if check_wmscss_feasible(g, raw) is None:
            assert check_wmscss_feasible(g, truncate_to_box(g, raw)) is None

    @pytest.mark.parametrize(
        "x, f",
        [([HALF, 0, 1], HALF), ([1, 1, 1], 1), ([Fraction(1, 3), HALF, 0], Fraction(1, 3)), ([0, 0], None)],
    )
    def test_min_nonzero_entry(self, x, f):
        assert min_nonzero_entry(x) == f

    def test_pf_membership(self, triangle):
        x = FractionalSolution.of(triangle, [HALF] * 6)
        assert x.in_pf(HALF) and not x.in_pf(Fraction(2, 3))
        assert x.is_half_integral()

    def test_out_of_box_rejected(self, cycle3):
        with pytest.raises(PreconditionError):
            FractionalSolution.of(cycle3, [2, 1, 1])


class TestSolutionFormat:
    def test_roundtrip(self):
        g = gen_random_strong(5, 9, seed=1)
        x = gen_mixture_point(g, 3, seed=1)
        assert parse_solution(g, format_solution(x)) == x

    def test_missing_arcs_are_zero(self, cycle3):
        assert parse_solution(cycle3, "1 1/2\n").values == (0, HALF, 0)

    @pytest.mark.parametrize("text", ["0\n", "7 1\n", "0 1\n0 1\n", "0 3/2\n", "0 abc\n"])
    def test_malformed(self, cycle3, text):
        from wmscss.errors import GraphFormatError

        with pytest.raises(GraphFormatError):
            parse_solution(cycle3, text)
