"""Minimum-cost rooted arborescences and the in/out union 2-approximation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InfeasibleError, PreconditionError
from .graph import Digraph, disconnecting_cut, reverse
from .lp import IN, OUT


@dataclass(frozen=True)
class Arborescence:
    root: int
    direction: str
    arcs: frozenset

    def weight(self, g: Digraph) -> Fraction:
        return g.weight(self.arcs)


def _check_root(g: Digraph, root: int, direction: str) -> None:
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} outside 0..{g.n - 1}")
    if direction not in (IN, OUT):
        raise PreconditionError(f"direction must be 'in' or 'out', got {direction!r}")


def _edmonds_in(n: int, arcs: list[tuple[int, int, int, Fraction]], root: int) -> set[int] | None:
    """Chu-Liu/Edmonds for in-arborescences on ``(id, tail, head, weight)``
    tuples.  Returns arc ids, or ``None`` if some vertex cannot reach ``root``.
    """
    best: dict[int, tuple[Fraction, int, int, int]] = {}
    for aid, u, v, w in arcs:
        if u == root or u == v:
            continue
        key = (w, aid)
        if u not in best or key < best[u][:2]:
            best[u] = (w, aid, v, u)
    if len(best) < n - 1:
        return None

    # look for a cycle in the functional graph u -> head of its cheapest arc
    color = [0] * n
    cycle: list[int] = []
    for start in range(n):
        if start == root or color[start]:
            continue
        path = []
        u = start
        while u != root and color[u] == 0:
            color[u] = 1
            path.append(u)
            u = best[u][2]
        if u != root and color[u] == 1:
            cycle = path[path.index(u):]
        for p in path:
            color[p] = 2
        if cycle:
            break
    if not cycle:
        return {best[u][1] for u in best}

    in_cycle = set(cycle)
    label = {}
    nxt = 0
    for v in range(n):
        if v not in in_cycle:
            label[v] = nxt
            nxt += 1
    c = nxt
    for v in cycle:
        label[v] = c
    contracted = []
    tail_of = {}
    for aid, u, v, w in arcs:
        lu, lv = label[u], label[v]
        if lu == lv:
            continue
        if u in in_cycle:
            # leaving the cycle from u replaces u's cycle arc
            w = w - best[u][0]
            tail_of[aid] = u
        contracted.append((aid, lu, lv, w))
    sub = _edmonds_in(nxt + 1, contracted, label[root])
    if sub is None:
        return None
    exit_arcs = [aid for aid in sub if aid in tail_of]
    assert len(exit_arcs) == 1
    exit_tail = tail_of[exit_arcs[0]]
    return sub | {best[v][1] for v in cycle if v != exit_tail}


def min_cost_arborescence(g: Digraph, root: int, direction: str = IN) -> Arborescence | None:
    """Cheapest arborescence; ``None`` when none exists.

    Ties between equal reduced costs go to the smaller arc id.
    """
    _check_root(g, root, direction)
    h = g if direction == IN else reverse(g)
    arcs = [(a.id, a.tail, a.head, a.weight) for a in h.arcs]
    ids = _edmonds_in(g.n, arcs, root)
    if ids is None:
        return None
    return Arborescence(root, direction, frozenset(ids))


def validate_arborescence(g: Digraph, t: Arborescence) -> str | None:
    """``None`` if ``t`` is a spanning arborescence of ``g``, else the reason."""
    try:
        _check_root(g, t.root, t.direction)
    except PreconditionError as exc:
        return str(exc)
    if any(not 0 <= i < g.m for i in t.arcs):
        return "unknown arc id"
    # orient every arc toward the root: in-direction uses (tail -> head)
    step: dict[int, int] = {}
    for i in t.arcs:
        a = g.arcs[i]
        u, v = (a.tail, a.head) if t.direction == IN else (a.head, a.tail)
        if u == t.root:
            return f"root {t.root} has an arc {i} in the wrong direction"
        if u in step:
            return f"vertex {u} has more than one arc toward the root"
        step[u] = v
    missing = [v for v in range(g.n) if v != t.root and v not in step]
    if missing:
        return f"vertices {missing} have no arc toward the root"
    for v in range(g.n):
        seen = set()
        u = v
        while u != t.root:
            if u in seen:
                return f"vertex {v} does not reach the root (cycle through {u})"
            seen.add(u)
            u = step[u]
    return None


def arborescence_within(g: Digraph, arc_ids: Iterable[int], root: int, direction: str = IN) -> Arborescence | None:
    """Some arborescence using only ``arc_ids``, found by graph search."""
    _check_root(g, root, direction)
    arc_ids = sorted(set(arc_ids))
    toward: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
    for i in arc_ids:
        a = g.arcs[i]
        u, v = (a.tail, a.head) if direction == IN else (a.head, a.tail)
        toward[v].append((u, i))
    chosen = set()
    seen = {root}
    frontier = [root]
    while frontier:
        v = frontier.pop(0)
        for u, i in toward[v]:
            if u not in seen:
                seen.add(u)
                chosen.add(i)
                frontier.append(u)
    if len(seen) < g.n:
        return None
    return Arborescence(root, direction, frozenset(chosen))


@dataclass(frozen=True)
class TwoApproxResult:
    root: int
    arcs: frozenset
    weight: Fraction
    in_weight: Fraction
    out_weight: Fraction


def frederickson_two_approx(g: Digraph, root: int = 0) -> TwoApproxResult:
    """Union of a cheapest in- and out-arborescence at ``root``.

    Shared arcs are bought once, so the weight is at most
    ``w(in) + w(out) <= 2 OPT``.
    """
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} outside 0..{g.n - 1}")
    witness = disconnecting_cut(g)
    if witness is not None:
        raise InfeasibleError("graph is not strongly connected", witness)
    t_in = min_cost_arborescence(g, root, IN)
    t_out = min_cost_arborescence(g, root, OUT)
    assert t_in is not None and t_out is not None
    arcs = t_in.arcs | t_out.arcs
    return TwoApproxResult(root, arcs, g.weight(arcs), t_in.weight(g), t_out.weight(g))


def frederickson_best_root(g: Digraph) -> TwoApproxResult:
    """Run the baseline at every root; lightest union wins, smallest root on ties."""
    return min((frederickson_two_approx(g, r) for r in range(g.n)), key=lambda res: (res.weight, res.root))
