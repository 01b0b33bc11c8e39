"""Brute-force oracles for small instances: exact optimum, exhaustive
arborescence and cut enumeration, and the fully written-out cut LP."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .arborescence import Arborescence, frederickson_two_approx, validate_arborescence
from .errors import InfeasibleError, PreconditionError, SizeLimitError
from .graph import Digraph, arcs_strongly_connected, disconnecting_cut
from .lp import IN, OUT, solve_cut_lp
from .rational import RationalLike, as_rational, scale_to_integers


@dataclass
class Limits:
    max_arcs_opt: int = 22
    max_vertices_arborescences: int = 7
    max_vertices_cuts: int = 10


LIMITS = Limits()


def exact_opt(g: Digraph, max_arcs: int | None = None) -> tuple[frozenset, Fraction]:
    """Cheapest strongly connected spanning arc subset.

    Include/exclude depth-first search over arcs in id order, pruning
    branches whose included weight already exceeds the incumbent and
    branches whose remaining arcs cannot be strongly connected.  The
    incumbent starts at the in/out-arborescence union.
    """
    limit = LIMITS.max_arcs_opt if max_arcs is None else max_arcs
    if g.m > limit:
        raise SizeLimitError(f"{g.m} arcs exceeds the exact-search limit of {limit}")
    witness = disconnecting_cut(g)
    if witness is not None:
        raise InfeasibleError("graph is not strongly connected", witness)
    if g.n == 1:
        return frozenset(), Fraction(0)
    d, weights = scale_to_integers(g.weights)
    seed = frederickson_two_approx(g, 0)
    seed_w = int(seed.weight * d)
    kern, dtype = _kernels.kernels_for(sum(weights) + 1)
    mask = np.zeros(g.m, dtype=np.bool_)
    mask[sorted(seed.arcs)] = True
    w_arr = np.array(weights, dtype=dtype)
    best_w, best = kern.min_scss(g.n, g.tails, g.heads, w_arr, seed_w if dtype is object else np.int64(seed_w), mask)
    return frozenset(int(i) for i in np.flatnonzero(best)), Fraction(int(best_w), d)


def exact_opt_plain(g: Digraph) -> tuple[frozenset, Fraction]:
    """Unpruned enumeration by cardinality then lexicographic order; use
    only on tiny graphs (it checks all 2^m subsets)."""
    if g.m > 16:
        raise SizeLimitError("plain enumeration is limited to 16 arcs")
    best = None
    for k in range(g.m + 1):
        for ids in itertools.combinations(range(g.m), k):
            w = g.weight(ids)
            if best is not None and (w, ids) >= best[:2]:
                continue
            if arcs_strongly_connected(g, ids):
                best = (w, ids)
    if best is None:
        raise InfeasibleError("graph is not strongly connected")
    return frozenset(best[1]), best[0]


def enumerate_arborescences(g: Digraph, root: int, direction: str = IN) -> list[tuple[frozenset, Fraction]]:
    """Every spanning arborescence, by choosing one arc per non-root vertex."""
    if g.n > LIMITS.max_vertices_arborescences:
        raise SizeLimitError(f"arborescence enumeration is limited to {LIMITS.max_vertices_arborescences} vertices")
    if not 0 <= root < g.n or direction not in (IN, OUT):
        raise PreconditionError("bad root or direction")
    options = []
    for v in range(g.n):
        if v == root:
            continue
        if direction == IN:
            options.append([a.id for a in g.arcs if a.tail == v])
        else:
            options.append([a.id for a in g.arcs if a.head == v])
    found = []
    for choice in itertools.product(*options):
        t = Arborescence(root, direction, frozenset(choice))
        if validate_arborescence(g, t) is None:
            found.append((t.arcs, g.weight(t.arcs)))
    found.sort(key=lambda item: sorted(item[0]))
    return found


def proper_subsets(n: int):
    for mask in range(1, (1 << n) - 1):
        yield frozenset(v for v in range(n) if mask >> v & 1)


def enumerate_cuts(g: Digraph, x: Sequence[RationalLike]) -> list[tuple[frozenset, Fraction]]:
    """All ``2^n - 2`` proper sets with the value of ``x`` on their leaving arcs."""
    if g.n > LIMITS.max_vertices_cuts:
        raise SizeLimitError(f"cut enumeration is limited to {LIMITS.max_vertices_cuts} vertices")
    vals = [as_rational(v) for v in x]
    if len(vals) != g.m:
        raise PreconditionError("vector length does not match arc count")
    out = []
    for s in proper_subsets(g.n):
        value = sum((vals[a.id] for a in g.arcs if a.tail in s and a.head not in s), Fraction(0))
        out.append((s, value))
    return out


def min_cut_brute(g: Digraph, cap: Sequence[RationalLike], source: int, sink: int) -> Fraction:
    vals = [as_rational(v) for v in cap]
    best = None
    for s in proper_subsets(g.n):
        if source in s and sink not in s:
            value = sum((vals[a.id] for a in g.arcs if a.tail in s and a.head not in s), Fraction(0))
            best = value if best is None else min(best, value)
    return best


def enumerated_lp(g: Digraph) -> tuple[list[Fraction], Fraction]:
    """The boxed cut LP with every proper cut written out as a row."""
    if g.n > LIMITS.max_vertices_cuts:
        raise SizeLimitError(f"full LP is limited to {LIMITS.max_vertices_cuts} vertices")
    if g.n == 1:
        return [Fraction(0)] * g.m, Fraction(0)
    return solve_cut_lp(g, list(proper_subsets(g.n)))


def enumerated_arborescence_lp(g: Digraph, root: int, direction: str = IN) -> Fraction:
    """Optimum of the rooted arborescence LP (boxed) with all rows written out.

    Out-direction rows are sets avoiding the root measured on entering arcs,
    i.e. leaving arcs of sets that contain the root.
    """
    if g.n == 1:
        return Fraction(0)
    if direction == IN:
        sides = [s for s in proper_subsets(g.n) if root not in s]
    else:
        sides = [s for s in proper_subsets(g.n) if root in s]
    return solve_cut_lp(g, sides)[1]
