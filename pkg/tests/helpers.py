"""Shared strategies and brute-force helpers for the test suite."""

from fractions import Fraction
from itertools import product

from hypothesis import strategies as st

from wmscss.graph import Digraph


@st.composite
def digraphs(draw, min_n=1, max_n=8, max_m=18, max_den=4, max_weight=10):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return Digraph.from_arcs(1, [])
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    arcs = draw(st.lists(pairs, max_size=max_m))
    weights = draw(
        st.lists(
            st.fractions(min_value=0, max_value=max_weight, max_denominator=max_den),
            min_size=len(arcs),
            max_size=len(arcs),
        )
    )
    return Digraph.from_arcs(n, [(u, v, w) for (u, v), w in zip(arcs, weights)])


def capacities(draw, m, max_den=4, max_value=2):
    return draw(st.lists(st.fractions(min_value=0, max_value=max_value, max_denominator=max_den), min_size=m, max_size=m))


def reachable(g: Digraph, source: int, arcs=None) -> set:
    ids = range(g.m) if arcs is None else arcs
    seen = {source}
    changed = True
    while changed:
        changed = False
        for i in ids:
            a = g.arcs[i]
            if a.tail in seen and a.head not in seen:
                seen.add(a.head)
                changed = True
    return seen


def strongly_connected_brute(g: Digraph, arcs=None) -> bool:
    return all(len(reachable(g, u, arcs)) == g.n for u in range(g.n))


def subsets_containing(n, inside, outside):
    for bits in product((0, 1), repeat=n):
        s = frozenset(v for v in range(n) if bits[v])
        if inside <= s and not (outside & s):
            yield s


def cut_value(g: Digraph, s, cap) -> Fraction:
    return sum((Fraction(cap[a.id]) for a in g.arcs if a.tail in s and a.head not in s), Fraction(0))


def _completions(g: Digraph, cap, covered):
    """Arc lists giving every uncovered vertex one arc toward ``covered``
    (within ``cap``) so that everything ends up connected to it."""
    todo = [v for v in range(g.n) if v not in covered]
    options = [[a.id for a in g.arcs if a.tail == v and cap[a.id] >= 1] for v in todo]
    for choice in product(*options):
        step = {todo[k]: g.arcs[a].head for k, a in enumerate(choice)}
        ok = True
        for v in todo:
            seen = set()
            while v not in covered:
                if v in seen:
                    ok = False
                    break
                seen.add(v)
                v = step[v]
            if not ok:
                break
        if ok:
            yield choice


def packs(g: Digraph, cap, root: int, k: int, _memo=None) -> bool:
    """Whether ``k`` in-arborescences at ``root`` fit in integer ``cap``, by
    exhaustive search."""
    memo = {} if _memo is None else _memo
    key = (tuple(cap), k)
    if key in memo:
        return memo[key]
    if k == 0:
        return True
    result = False
    for choice in _completions(g, cap, {root}):
        rest = list(cap)
        for a in choice:
            rest[a] -= 1
        if packs(g, rest, root, k - 1, memo):
            result = True
            break
    memo[key] = result
    return result


def completes_and_packs(g: Digraph, cap, root: int, covered, t: int) -> bool:
    """Whether some completion of a partial tree spanning ``covered`` leaves
    room for ``t`` more in-arborescences."""
    memo = {}
    for choice in _completions(g, cap, set(covered)):
        rest = list(cap)
        for a in choice:
            rest[a] -= 1
        if packs(g, rest, root, t, memo):
            return True
    return False
