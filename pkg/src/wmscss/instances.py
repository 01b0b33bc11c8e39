"""Seeded instance generators and corpus I/O.

All randomness comes from :class:`random.Random` (Mersenne Twister) seeded
explicitly, so a generator call is a pure function of its arguments.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InfeasibleError, PreconditionError, WmscssError
from .graph import Digraph, arcs_strongly_connected, format_graph, parse_graph
from .lp import FractionalSolution, check_wmscss_feasible, format_solution, parse_solution
from .rational import RationalLike, as_rational

GENERATOR = "python random.Random (MT19937)"


def gen_cycle(n: int, weight: RationalLike = 1) -> Digraph:
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if n == 1:
        return Digraph.from_arcs(1, [])
    return Digraph.from_arcs(n, [(v, (v + 1) % n, weight) for v in range(n)])


def _connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    todo = [0]
    while todo:
        for v in adj[todo.pop()]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return len(seen) == n


def gen_bidirected(n: int, edges: Sequence[tuple[int, int]], rule: str = "uniform", weights=1) -> Digraph:
    """Turn each undirected edge ``{u, v}`` into arcs ``u->v`` then ``v->u``.

    ``rule``: ``uniform`` (``weights`` is one value), ``per-edge`` (one value
    per edge, shared by both arcs) or ``asymmetric`` (a ``(forward, backward)``
    pair per edge).
    """
    if not _connected(n, edges):
        raise PreconditionError("base graph is disconnected")
    arcs = []
    for k, (u, v) in enumerate(edges):
        if rule == "uniform":
            fw = bw = weights
        elif rule == "per-edge":
            fw = bw = weights[k]
        elif rule == "asymmetric":
            fw, bw = weights[k]
        else:
            raise PreconditionError(f"unknown weight rule {rule!r}")
        arcs += [(u, v, fw), (v, u, bw)]
    return Digraph.from_arcs(n, arcs)


def _random_weight(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    a = -((-lo * den) // 1)  # ceil
    b = (hi * den) // 1
    if a > b:
        return lo
    return Fraction(rng.randint(int(a), int(b)), den)


def gen_random_strong(
    n: int,
    m: int,
    weight_range: tuple[RationalLike, RationalLike] = (1, 10),
    seed: int = 0,
    max_den: int = 1,
) -> Digraph:
    """A random Hamiltonian cycle plus ``m - n`` random extra arcs.

    Extra arcs avoid duplicating an existing ordered pair while one is free.
    Weights are rationals in ``weight_range`` with denominators up to
    ``max_den``.
    """
    if n == 1:
        if m:
            raise PreconditionError("a single vertex cannot carry arcs")
        return Digraph.from_arcs(1, [])
    if m < n:
        raise PreconditionError(f"need m >= n, got m={m}, n={n}")
    lo, hi = (as_rational(w) for w in weight_range)
    if lo < 0 or hi < lo:
        raise PreconditionError("bad weight range")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[(i + 1) % n]) for i in range(n)]
    used = set(pairs)
    free = [(u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in used]
    rng.shuffle(free)
    for _ in range(m - n):
        if free:
            pairs.append(free.pop())
        else:
            u, v = rng.sample(range(n), 2)
            pairs.append((u, v))
    return Digraph.from_arcs(n, [(u, v, _random_weight(rng, lo, hi, max_den)) for u, v in pairs])


def _hamiltonian_arcs(rng: random.Random, n: int) -> list[tuple[int, int]]:
    order = list(range(n))
    rng.shuffle(order)
    return [(order[i], order[(i + 1) % n]) for i in range(n)]


def gen_half_integral_corpus(
    count: int,
    n_range: tuple[int, int] = (3, 7),
    extra_one: int = 1,
    extra_zero: int = 3,
    weight_range: tuple[RationalLike, RationalLike] = (1, 10),
    seed: int = 0,
    max_tries: int = 200,
) -> list[tuple[Digraph, FractionalSolution]]:
    """Pairs ``(g, x)`` with ``x`` feasible and half-integral.

    Two arc-disjoint Hamiltonian cycles carry 1/2 each, so every cut gets at
    least 1.  Up to ``extra_one`` further arcs carry 1 and up to
    ``extra_zero`` carry 0.  Arc order is shuffled.  Each pair is checked
    with the separation oracle before it is emitted.
    """
    lo_n, hi_n = n_range
    if lo_n < 3:
        raise PreconditionError("two arc-disjoint Hamiltonian cycles need n >= 3")
    lo, hi = (as_rational(w) for w in weight_range)
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(lo_n, hi_n)
        for _attempt in range(max_tries):
            first = _hamiltonian_arcs(rng, n)
            second = _hamiltonian_arcs(rng, n)
            if not set(first) & set(second):
                break
        else:
            raise WmscssError(f"could not find two arc-disjoint Hamiltonian cycles on {n} vertices")
        entries = [(u, v, Fraction(1, 2)) for u, v in first + second]
        for value, k in ((Fraction(1), rng.randint(0, extra_one)), (Fraction(0), rng.randint(0, extra_zero))):
            for _ in range(k):
                u, v = rng.sample(range(n), 2)
                entries.append((u, v, value))
        rng.shuffle(entries)
        g = Digraph.from_arcs(n, [(u, v, _random_weight(rng, lo, hi, 1)) for u, v, _ in entries])
        x = FractionalSolution.of(g, [val for _, _, val in entries])
        cert = check_wmscss_feasible(g, x)
        if cert is not None:
            raise InfeasibleError("generated point is infeasible", cert)
        out.append((g, x))
    return out


def gen_random_corpus(count: int, n_range=(3, 8), m_max: int = 18, weight_range=(1, 10), seed: int = 0, max_den: int = 1) -> list[Digraph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        m = rng.randint(n, max(n, min(m_max, n * (n - 1))))
        out.append(gen_random_strong(n, m, weight_range, rng.getrandbits(32), max_den))
    return out


# -- corpus files ------------------------------------------------------------


def write_corpus(directory: str | Path, items: Iterable[tuple[str, Digraph, FractionalSolution | None]], meta: dict) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, g, x in items:
        path = directory / f"{name}.graph"
        path.write_text(format_graph(g))
        written.append(path)
        if x is not None:
            (directory / f"{name}.x").write_text(format_solution(x))
    (directory / "meta.json").write_text(json.dumps({"generator": GENERATOR, **meta}, indent=2, sort_keys=True) + "\n")
    return written


def read_corpus(directory: str | Path) -> list[tuple[str, Digraph, FractionalSolution | None]]:
    directory = Path(directory)
    out = []
    for path in sorted(directory.glob("*.graph")):
        g = parse_graph(path.read_text())
        xpath = path.with_suffix(".x")
        x = parse_solution(g, xpath.read_text()) if xpath.exists() else None
        out.append((path.stem, g, x))
    return out


def gen_mixture_point(g: Digraph, parts: int = 3, max_den: int = 6, seed: int = 0) -> FractionalSolution:
    """A feasible point averaging random strongly connected spanning subgraphs.

    Each subgraph is ``g`` minus random arcs whose removal keeps it strongly
    connected; mixing weights are random rationals summing to 1.  Cut
    constraints are convex, so the mixture is feasible for the cut LP.
    """
    if parts < 1:
        raise PreconditionError("need at least one part")
    rng = random.Random(seed)
    raw = [rng.randint(1, max_den) for _ in range(parts)]
    total = sum(raw)
    x = [Fraction(0)] * g.m
    for share in raw:
        keep = set(range(g.m))
        order = list(range(g.m))
        rng.shuffle(order)
        for a in order:
            if rng.random() < 0.7 and arcs_strongly_connected(g, keep - {a}):
                keep.discard(a)
        for a in keep:
            x[a] += Fraction(share, total)
    return FractionalSolution.of(g, x)
