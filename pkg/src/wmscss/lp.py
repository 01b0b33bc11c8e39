"""The cut-covering LP for strongly connected spanning subgraphs.

``min w.x  s.t.  x(out(S)) >= 1 for every proper non-empty S,  0 <= x <= 1``

is solved by row generation: an exact simplex over the current cut rows,
then a min-cut separation oracle that either certifies every cut or returns
violated ones.  The rooted arborescence LPs share the same oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import GraphFormatError, InfeasibleError, InvariantError, PreconditionError
from .graph import CutCertificate, Digraph, cut_certificate, delta_plus, disconnecting_cut, min_cut, reverse
from .rational import RationalLike, as_rational, format_rational, parse_rational
from .simplex import maximize

IN = "in"
OUT = "out"


@dataclass(frozen=True)
class FractionalSolution:
    """An arc-indexed point ``x`` in ``[0, 1]^A`` bound to its graph."""

    graph: Digraph = field(repr=False)
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.graph.m:
            raise PreconditionError(f"solution has {len(self.values)} entries for {self.graph.m} arcs")
        for i, v in enumerate(self.values):
            if not 0 <= v <= 1:
                raise PreconditionError(f"entry {i} = {v} lies outside [0, 1]")

    @classmethod
    def of(cls, g: Digraph, values: Iterable[RationalLike]) -> "FractionalSolution":
        return cls(g, tuple(as_rational(v) for v in values))

    @property
    def f(self) -> Fraction | None:
        return min_nonzero_entry(self)

    @property
    def weight(self) -> Fraction:
        return sum((a.weight * v for a, v in zip(self.graph.arcs, self.values)), Fraction(0))

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, v in enumerate(self.values) if v)

    def in_pf(self, f: RationalLike) -> bool:
        """No entry falls in the open interval ``(0, f)``."""
        f = as_rational(f)
        return all(v == 0 or v >= f for v in self.values)

    def is_half_integral(self) -> bool:
        return all(v in (0, Fraction(1, 2), 1) for v in self.values)


@dataclass(frozen=True)
class LpOutcome:
    solution: FractionalSolution
    objective: Fraction
    generated_cuts: tuple[CutCertificate, ...]
    rounds: int

    def format(self) -> str:
        lines = [f"objective {format_rational(self.objective)}", f"rounds {self.rounds}", "values"]
        lines += [f"{i} {format_rational(v)}" for i, v in enumerate(self.solution.values)]
        lines.append(f"cuts {len(self.generated_cuts)}")
        lines += [c.describe() for c in self.generated_cuts]
        return "\n".join(lines) + "\n"


SolutionLike = Union[FractionalSolution, Sequence[RationalLike]]


def _values(g: Digraph, x: SolutionLike) -> list[Fraction]:
    if isinstance(x, FractionalSolution):
        if x.graph is not g and x.graph != g:
            raise PreconditionError("solution is bound to a different graph")
        vals = list(x.values)
    else:
        vals = [as_rational(v) for v in x]
    if len(vals) != g.m:
        raise PreconditionError(f"solution has {len(vals)} entries for {g.m} arcs")
    if any(v < 0 for v in vals):
        raise PreconditionError("solution has a negative entry")
    return vals


def min_nonzero_entry(x: SolutionLike) -> Fraction | None:
    vals = x.values if isinstance(x, FractionalSolution) else [as_rational(v) for v in x]
    nonzero = [v for v in vals if v]
    return min(nonzero) if nonzero else None


def truncate_to_box(g: Digraph, raw: Sequence[RationalLike]) -> FractionalSolution:
    """Cap entries at 1.  A cut keeps value >= min(1, old value)."""
    vals = [as_rational(v) for v in raw]
    if any(v < 0 for v in vals):
        raise PreconditionError("cannot truncate a vector with negative entries")
    return FractionalSolution.of(g, [min(v, Fraction(1)) for v in vals])


def violated_cuts(g: Digraph, x: SolutionLike, root: int = 0) -> list[CutCertificate]:
    """All distinct cuts of value < 1 found by the 2(n-1) root min-cuts."""
    vals = _values(g, x)
    found: dict[frozenset, CutCertificate] = {}
    for v in range(g.n):
        if v == root:
            continue
        for s, t in ((root, v), (v, root)):
            value, cert = min_cut(g, vals, s, t)
            if value < 1 and cert.side not in found:
                found[cert.side] = cert
    return list(found.values())


def check_wmscss_feasible(g: Digraph, x: SolutionLike) -> CutCertificate | None:
    """``None`` when every proper cut carries value >= 1, else a violated cut.

    Every proper set separates vertex 0 from some ``v`` in one direction or
    the other, so min-cuts between 0 and each other vertex cover all cuts.
    """
    cuts = violated_cuts(g, x, 0)
    if not cuts:
        return None
    return min(cuts, key=lambda c: c.value)


def check_arborescence_lp_feasible(g: Digraph, x: SolutionLike, root: int, direction: str = IN) -> CutCertificate | None:
    """Feasibility for the rooted in- (out-) arborescence LP.

    ``in``: every set avoiding ``root`` has out-value >= 1.  ``out``: every
    set avoiding ``root`` has in-value >= 1; the certificate is then reported
    on the complementary side, which contains the root, so that its
    ``crossing_arcs`` are still the arcs leaving ``side``.
    """
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} outside 0..{g.n - 1}")
    if direction not in (IN, OUT):
        raise PreconditionError(f"direction must be 'in' or 'out', got {direction!r}")
    vals = _values(g, x)
    h = g if direction == IN else reverse(g)
    for v in range(g.n):
        if v == root:
            continue
        value, cert = min_cut(h, vals, v, root)
        if value < 1:
            if direction == IN:
                return cert
            return cut_certificate(g, frozenset(range(g.n)) - cert.side, vals)
    return None


def solve_cut_lp(g: Digraph, sides: Sequence[Iterable[int]]) -> tuple[list[Fraction], Fraction]:
    """Exact optimum of the LP restricted to the given cut rows plus ``x <= 1``.

    Solved through its dual ``max sum(y) - sum(z)`` subject to
    ``sum_{S: a leaves S} y_S - z_a <= w_a``; ``w >= 0`` makes the origin
    feasible.  The primal point is read from the dual multipliers.
    """
    sides = [frozenset(s) for s in sides]
    k = len(sides)
    leaving = [delta_plus(g, s) for s in sides]
    rows = []
    for a in g.arcs:
        row = [Fraction(1) if a.id in leaving[j] else Fraction(0) for j in range(k)]
        row += [Fraction(-1) if b == a.id else Fraction(0) for b in range(g.m)]
        rows.append(row)
    c = [Fraction(1)] * k + [Fraction(-1)] * g.m
    try:
        res = maximize(c, rows, g.weights)
    except InfeasibleError:
        raise InfeasibleError("cut LP is infeasible: some cut row has no arcs") from None
    x = res.dual
    objective = sum((a.weight * v for a, v in zip(g.arcs, x)), Fraction(0))
    if objective != res.value:
        raise InvariantError("primal and dual objectives disagree")
    return x, objective


def _initial_sides(n: int) -> list[frozenset]:
    everything = frozenset(range(n))
    sides: list[frozenset] = []
    for v in range(n):
        for s in (frozenset([v]), everything - {v}):
            if s not in sides:
                sides.append(s)
    return sides


def solve_wmscss_lp(g: Digraph, root: int = 0) -> LpOutcome:
    """Optimal vertex of the boxed cut LP by row generation.

    Starts from all singleton in/out cuts and adds every violated cut found by
    the separation oracle until none remains.
    """
    if g.n == 1:
        return LpOutcome(FractionalSolution.of(g, [0] * g.m), Fraction(0), (), 0)
    witness = disconnecting_cut(g)
    if witness is not None:
        raise InfeasibleError("graph is not strongly connected", witness)
    sides = _initial_sides(g.n)
    seen = set(sides)
    generated: list[CutCertificate] = []
    rounds = 0
    while True:
        rounds += 1
        x, objective = solve_cut_lp(g, sides)
        new = violated_cuts(g, x, root)
        if not new:
            break
        for cert in new:
            if cert.side in seen:
                raise InvariantError(f"separation returned a cut already in the LP: {cert.describe()}")
            seen.add(cert.side)
            sides.append(cert.side)
            generated.append(cert)
    return LpOutcome(FractionalSolution.of(g, x), objective, tuple(generated), rounds)


def parse_solution(g: Digraph, text: str) -> FractionalSolution:
    """Parse ``arc-id p/q`` lines; unlisted arcs are 0."""
    vals = [Fraction(0)] * g.m
    listed = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'arc-id value'")
        try:
            i = int(parts[0])
            v = parse_rational(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
        if not 0 <= i < g.m:
            raise GraphFormatError(f"line {lineno}: arc id {i} out of range")
        if i in listed:
            raise GraphFormatError(f"line {lineno}: arc {i} listed twice")
        if not 0 <= v <= 1:
            raise GraphFormatError(f"line {lineno}: value {parts[1]} outside [0, 1]")
        listed.add(i)
        vals[i] = v
    return FractionalSolution(g, tuple(vals))


def format_solution(x: FractionalSolution) -> str:
    return "".join(f"{i} {format_rational(v)}\n" for i, v in enumerate(x.values))
