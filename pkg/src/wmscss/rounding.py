"""Deterministic min-pair rounding of a cut-LP point.

Decompose ``x`` into in-parts ``I_1..I_alpha`` and out-parts
``O_1..O_beta`` with exact marginals, evaluate every union ``I_i | O_j`` and
keep the lightest.  The lightest union costs at most the product-distribution
average, which equals ``sum_a w_a (2 x_a - x_a^2) <= (2 - f) w(x)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .decompose import ConvexCombination, decompose
from .errors import InfeasibleError, PreconditionError
from .graph import Digraph, arcs_strongly_connected
from .lp import IN, OUT, FractionalSolution, SolutionLike, _values, check_wmscss_feasible, min_nonzero_entry
from .rational import format_decimal, format_rational

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RoundingReport:
    graph: Digraph = field(repr=False)
    x: tuple[Fraction, ...] = field(repr=False)
    root: int
    chosen_pair: tuple[int, int]
    solution_arcs: frozenset
    solution_weight: Fraction
    lp_weight: Fraction
    f: Fraction | None
    bound: Fraction
    expected_union_cost: Fraction
    in_support_size: int
    out_support_size: int
    in_comb: ConvexCombination | None = field(default=None, repr=False, compare=False)
    out_comb: ConvexCombination | None = field(default=None, repr=False, compare=False)

    def format(self) -> str:
        def q(v):
            return f"{format_rational(v)} ({format_decimal(v)})"

        f = "none" if self.f is None else format_rational(self.f)
        lines = [
            f"root {self.root}",
            f"in_support {self.in_support_size}",
            f"out_support {self.out_support_size}",
            f"chosen_pair {self.chosen_pair[0]} {self.chosen_pair[1]}",
            f"lp_weight {q(self.lp_weight)}",
            f"f {f}",
            f"bound {q(self.bound)}",
            f"expected_union_cost {q(self.expected_union_cost)}",
            f"solution_weight {q(self.solution_weight)}",
            "solution " + " ".join(map(str, sorted(self.solution_arcs))),
        ]
        return "\n".join(line.rstrip() for line in lines) + "\n"


def bound_multiplier(f: Fraction | None) -> Fraction:
    return Fraction(2) - (f if f is not None else Fraction(1))


def closed_form_union_cost(g: Digraph, x: SolutionLike) -> Fraction:
    """``sum_a w_a (2 x_a - x_a^2)``."""
    vals = _values(g, x)
    return sum((a.weight * (2 * v - v * v) for a, v in zip(g.arcs, vals)), Fraction(0))


def expected_union_cost(g: Digraph, in_comb: ConvexCombination, out_comb: ConvexCombination) -> Fraction:
    """Average union weight under the product of the two combinations."""
    total = Fraction(0)
    for p in in_comb.parts:
        for q in out_comb.parts:
            total += p.coeff * q.coeff * g.weight(p.arcs | q.arcs)
    return total


def round_min_pair(g: Digraph, x: SolutionLike, root: int = 0, pad: bool = True) -> RoundingReport:
    """Lightest union of an in-part and an out-part; ties go to the smallest
    ``(i, j)``.
    """
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} outside 0..{g.n - 1}")
    vals = _values(g, x)
    if any(v > 1 for v in vals):
        raise PreconditionError("entries above 1; truncate the point first")
    lp_weight = sum((a.weight * v for a, v in zip(g.arcs, vals)), Fraction(0))
    f = min_nonzero_entry(vals)
    if g.n == 1:
        return RoundingReport(g, tuple(vals), root, (0, 0), frozenset(), Fraction(0), lp_weight, f,
                              bound_multiplier(f) * lp_weight, Fraction(0), 1, 1)
    cert = check_wmscss_feasible(g, vals)
    if cert is not None:
        raise InfeasibleError("point violates a cut constraint", cert)

    in_comb = decompose(g, vals, root, IN, pad)
    out_comb = decompose(g, vals, root, OUT, pad)
    best = None
    expected = Fraction(0)
    for i, p in enumerate(in_comb.parts):
        for j, q in enumerate(out_comb.parts):
            arcs = p.arcs | q.arcs
            w = g.weight(arcs)
            expected += p.coeff * q.coeff * w
            if best is None or w < best[0]:
                best = (w, (i, j), arcs)
    w, pair, arcs = best
    return RoundingReport(
        g, tuple(vals), root, pair, frozenset(arcs), w, lp_weight, f,
        bound_multiplier(f) * lp_weight, expected, len(in_comb), len(out_comb), in_comb, out_comb,
    )


def round_best_root(g: Digraph, x: SolutionLike, pad: bool = True) -> tuple[RoundingReport, list[RoundingReport]]:
    """Run :func:`round_min_pair` at every root; lightest wins, then smallest root."""
    reports = [round_min_pair(g, x, r, pad) for r in range(g.n)]
    best = min(reports, key=lambda rep: (rep.solution_weight, rep.root))
    return best, reports


def round_sampled(g: Digraph, x: SolutionLike, root: int, rng: random.Random) -> frozenset:
    """One independent draw ``I | O``; demonstration only, no guarantee."""
    in_comb = decompose(g, x, root, IN, True)
    out_comb = decompose(g, x, root, OUT, True)
    return in_comb.sample(rng).arcs | out_comb.sample(rng).arcs


def certify_bound(report: RoundingReport) -> str | None:
    """Recompute everything from the graph and ``x``; ``None`` if sound."""
    g = report.graph
    x = FractionalSolution.of(g, report.x)
    f = min_nonzero_entry(x)
    problems = []
    if f != report.f:
        problems.append(f"f recomputes to {f}, report says {report.f}")
    lp_weight = x.weight
    if lp_weight != report.lp_weight:
        problems.append(f"w(x) recomputes to {lp_weight}")
    bound = bound_multiplier(f) * lp_weight
    if bound != report.bound:
        problems.append(f"bound recomputes to {bound}")
    weight = g.weight(report.solution_arcs)
    if weight != report.solution_weight:
        problems.append(f"solution weight recomputes to {weight}, report says {report.solution_weight}")
    closed = closed_form_union_cost(g, x)
    if not report.solution_weight <= report.expected_union_cost:
        problems.append("solution weight exceeds the pair average")
    if not report.expected_union_cost <= closed:
        problems.append("pair average exceeds sum w(2x - x^2)")
    if not closed <= bound:
        problems.append("sum w(2x - x^2) exceeds (2 - f) w(x)")
    if not report.solution_weight <= bound:
        problems.append(f"solution weight {report.solution_weight} exceeds (2 - f) w(x) = {bound}")
    if f is not None:
        for a, v in enumerate(x.values):
            if v and not 2 * v - v * v <= (2 - f) * v:
                problems.append(f"arc {a}: 2x - x^2 > (2 - f) x")
    if x.in_pf(HALF) and not report.solution_weight <= Fraction(3, 2) * lp_weight:
        problems.append("half-integral input rounded above 3/2 w(x)")
    if not arcs_strongly_connected(g, report.solution_arcs):
        problems.append("rounded subgraph is not strongly connected")
    return "; ".join(problems) if problems else None
