"""Convex decomposition of an arborescence-LP point into arborescence-containing
subgraphs whose per-arc marginals equal the point.

The point is scaled to integer capacities ``cap = D*x``; every root-avoiding
cut then has capacity at least ``D``, so by Edmonds' branching theorem ``D``
capacity-disjoint in-arborescences exist.  They are built one at a time by
Lovász-style greedy growth with a min-cut oracle, each taken with the largest
multiplicity the residual capacities still allow.  Leftover capacity is
finally spread over the parts ("padding") so the marginals become exact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .arborescence import Arborescence, arborescence_within, validate_arborescence
from .errors import InfeasibleError, InvariantError, PreconditionError
from .graph import Digraph, reverse
from .lp import IN, OUT, FractionalSolution, SolutionLike, _values, check_arborescence_lp_feasible
from .rational import format_rational, scale_to_integers


@dataclass(frozen=True)
class Part:
    arcs: frozenset
    coeff: Fraction
    tree: frozenset  # the arborescence this part was grown from


@dataclass(frozen=True)
class ConvexCombination:
    direction: str
    root: int
    parts: tuple[Part, ...]

    def __len__(self) -> int:
        return len(self.parts)

    def total(self) -> Fraction:
        return sum((p.coeff for p in self.parts), Fraction(0))

    def marginals(self, m: int) -> list[Fraction]:
        out = [Fraction(0)] * m
        for p in self.parts:
            for a in p.arcs:
                out[a] += p.coeff
        return out

    def format(self) -> str:
        lines = [f"decomposition {self.direction} root {self.root} parts {len(self.parts)}"]
        for k, p in enumerate(self.parts):
            ids = " ".join(map(str, sorted(p.arcs)))
            lines.append(f"part {k} coeff {format_rational(p.coeff)} : {ids}".rstrip())
        return "\n".join(lines) + "\n"

    def sample(self, rng: random.Random) -> Part:
        """Draw a part with probability equal to its coefficient."""
        d = math.lcm(*(p.coeff.denominator for p in self.parts))
        ticket = rng.randrange(int(d))
        for p in self.parts:
            ticket -= int(p.coeff * d)
            if ticket < 0:
                return p
        raise InvariantError("coefficients do not sum to 1")


def common_denominator_scale(x: SolutionLike) -> tuple[int, list[int]]:
    """``(D, cap)`` with ``D`` the lcm of the non-zero entries' denominators."""
    vals = x.values if isinstance(x, FractionalSolution) else [Fraction(v) for v in x]
    return scale_to_integers(vals)


def _arrays(g: Digraph, cap: Sequence[int], *extra: int):
    kern, dtype = _kernels.kernels_for(sum(int(c) for c in cap) + 1, *extra)
    return kern, np.array([int(c) for c in cap], dtype=dtype), dtype


def _int(v, dtype):
    return int(v) if dtype is object else np.int64(v)


def packing_feasible(g: Digraph, cap: Sequence[int], root: int, covered: Iterable[int], t: int) -> bool:
    """Whether the integer capacities can still finish the current
    arborescence (spanning ``covered``) and pack ``t`` more.

    The test is: every non-empty set avoiding all covered vertices has
    out-capacity >= t + 1, and every set avoiding the root has
    out-capacity >= t.  With ``covered == {root}`` this reduces to "every
    root-avoiding cut carries t + 1", the packing condition for ``t + 1``
    in-arborescences.
    """
    covered = frozenset(covered)
    if root not in covered:
        raise PreconditionError("the root must be covered")
    if t < 0:
        raise PreconditionError("t must be non-negative")
    kern, arr, dtype = _arrays(g, cap, t + 1)
    mask = np.zeros(g.n, dtype=np.bool_)
    mask[list(covered)] = True
    return bool(kern.packing_ok(g.n, g.tails, g.heads, arr, root, mask, _int(t, dtype)))


def extract_arborescence(g: Digraph, cap: Sequence[int], root: int, t: int) -> tuple[frozenset, list[int]]:
    """Grow one in-arborescence so that the decremented capacities still pack
    ``t`` more.  Candidates are scanned by ascending arc id.
    """
    if not packing_feasible(g, cap, root, [root], t):
        raise PreconditionError(f"capacities do not support {t + 1} in-arborescences at root {root}")
    kern, arr, dtype = _arrays(g, cap, t + 1)
    chosen, ok = kern.extract_in(g.n, g.tails, g.heads, arr, root, _int(t, dtype))
    if not ok:
        raise InvariantError("no extension arc passed the packing oracle")
    return frozenset(int(a) for a in chosen), [int(c) for c in arr]


def max_multiplicity(g: Digraph, cap: Sequence[int], root: int, tree: Iterable[int], owed: int) -> int:
    """Largest ``k`` such that removing ``k`` copies of ``tree`` from ``cap``
    leaves room for ``owed - k`` further in-arborescences.

    Feasibility is monotone in ``k`` because an arborescence leaves every
    root-avoiding set at least once, so binary search applies.
    """
    tree = sorted(tree)
    hi = min([owed] + [int(cap[a]) for a in tree])
    lo = 1
    kern, base, dtype = _arrays(g, cap, owed + 1)
    root_mask = np.zeros(g.n, dtype=np.bool_)
    root_mask[root] = True
    while lo < hi:
        mid = (lo + hi + 1) // 2
        trial = base.copy()
        for a in tree:
            trial[a] -= mid
        if kern.packing_ok(g.n, g.tails, g.heads, trial, root, root_mask, _int(owed - mid - 1, dtype)):
            lo = mid
        else:
            hi = mid - 1
    return lo


def _pad(units: list[tuple[frozenset, int]], cap: Sequence[int], m: int) -> list[tuple[set, int, frozenset]]:
    parts = [(set(tree), k, tree) for tree, k in units]
    usage = [0] * m
    for tree, k in units:
        for a in tree:
            usage[a] += k
    for a in range(m):
        need = int(cap[a]) - usage[a]
        i = 0
        while need > 0:
            arcs, k, tree = parts[i]
            if a not in arcs:
                if k <= need:
                    arcs.add(a)
                    need -= k
                else:
                    parts[i] = (arcs | {a}, need, tree)
                    parts.insert(i + 1, (set(arcs), k - need, tree))
                    need = 0
            i += 1
            if need > 0 and i == len(parts):
                raise InvariantError(f"arc {a} has more capacity than parts to absorb it")
    return parts


def decompose(g: Digraph, x: SolutionLike, root: int, direction: str = IN, pad: bool = True) -> ConvexCombination:
    """Write ``x`` as a convex combination of subgraphs each containing a
    ``direction``-arborescence rooted at ``root``.

    With ``pad`` every arc's marginal equals ``x`` exactly; without it the
    parts are bare arborescences and marginals are at most ``x``.
    """
    vals = _values(g, x)
    if any(v > 1 for v in vals):
        raise PreconditionError("entries above 1 cannot be marginals")
    cert = check_arborescence_lp_feasible(g, vals, root, direction)
    if cert is not None:
        raise InfeasibleError(f"point is infeasible for the {direction}-arborescence LP at root {root}", cert)
    h = g if direction == IN else reverse(g)
    d, cap = scale_to_integers(vals)
    residual = list(cap)
    remaining = d
    units: list[tuple[frozenset, int]] = []
    while remaining > 0:
        tree, _ = extract_arborescence(h, residual, root, remaining - 1)
        k = max_multiplicity(h, residual, root, tree, remaining)
        for a in tree:
            residual[a] -= k
        remaining -= k
        units.append((tree, k))

    if pad:
        raw = _pad(units, cap, g.m)
    else:
        raw = [(set(tree), k, tree) for tree, k in units]
    parts = tuple(Part(frozenset(arcs), Fraction(k, d), tree) for arcs, k, tree in raw)
    return ConvexCombination(direction, root, parts)


def verify_combination(g: Digraph, comb: ConvexCombination, x: SolutionLike | None = None) -> list[str]:
    """Independent audit of a combination; returns a list of problems."""
    problems = []
    if comb.total() != 1:
        problems.append(f"coefficients sum to {comb.total()}")
    for k, p in enumerate(comb.parts):
        if p.coeff <= 0:
            problems.append(f"part {k} has non-positive coefficient")
        if not p.tree <= p.arcs:
            problems.append(f"part {k} lost its tree arcs")
        why = validate_arborescence(g, Arborescence(comb.root, comb.direction, p.tree))
        if why is not None:
            problems.append(f"part {k}: {why}")
        if arborescence_within(g, p.arcs, comb.root, comb.direction) is None:
            problems.append(f"part {k} contains no {comb.direction}-arborescence")
    if x is not None:
        vals = _values(g, x)
        for a, (mu, xa) in enumerate(zip(comb.marginals(g.m), vals)):
            if mu > xa:
                problems.append(f"arc {a}: marginal {mu} exceeds {xa}")
    return problems


__all__ = [
    "IN",
    "OUT",
    "ConvexCombination",
    "Part",
    "common_denominator_scale",
    "decompose",
    "extract_arborescence",
    "max_multiplicity",
    "packing_feasible",
    "verify_combination",
]
