"""Digraphs with exact rational arc weights, cuts, max-flow and text I/O."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .errors import GraphFormatError, PreconditionError
from .rational import RationalLike, as_rational, format_rational, parse_rational, scale_to_integers

VertexSet = frozenset


class Arc(NamedTuple):
    id: int
    tail: int
    head: int
    weight: Fraction


@dataclass(frozen=True)
class Digraph:
    """Vertices ``0..n-1`` and an ordered arc list; parallel arcs allowed.

    Arc ids are the list positions and never change.  Build instances with
    :meth:`from_arcs`.
    """

    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("a digraph needs at least one vertex")
        for i, a in enumerate(self.arcs):
            if a.id != i:
                raise PreconditionError(f"arc ids must be dense, found {a.id} at {i}")
            if not (0 <= a.tail < self.n and 0 <= a.head < self.n):
                raise PreconditionError(f"arc {i} has an endpoint outside 0..{self.n - 1}")
            if a.tail == a.head:
                raise PreconditionError(f"arc {i} is a self-loop at {a.tail}")
            if a.weight < 0:
                raise PreconditionError(f"arc {i} has negative weight {a.weight}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int, RationalLike]]) -> "Digraph":
        return cls(n, tuple(Arc(i, int(u), int(v), as_rational(w)) for i, (u, v, w) in enumerate(arcs)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def tails(self) -> np.ndarray:
        return np.array([a.tail for a in self.arcs], dtype=np.int64)

    @cached_property
    def heads(self) -> np.ndarray:
        return np.array([a.head for a in self.arcs], dtype=np.int64)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(a.weight for a in self.arcs)

    def weight(self, arc_ids: Iterable[int]) -> Fraction:
        """Total weight of a set of arcs (each id counted once)."""
        return sum((self.arcs[i].weight for i in set(arc_ids)), Fraction(0))

    def subgraph(self, arc_ids: Iterable[int]) -> "Digraph":
        """Spanning subgraph on the given arcs; arc ids are renumbered."""
        keep = sorted(set(arc_ids))
        return Digraph.from_arcs(self.n, [(self.arcs[i].tail, self.arcs[i].head, self.arcs[i].weight) for i in keep])

    def with_weights(self, weights: Sequence[RationalLike]) -> "Digraph":
        if len(weights) != self.m:
            raise PreconditionError("weight vector length does not match arc count")
        return Digraph.from_arcs(self.n, [(a.tail, a.head, w) for a, w in zip(self.arcs, weights)])


@dataclass(frozen=True)
class CutCertificate:
    """A vertex set ``side`` with the arcs leaving it and their capacity."""

    side: VertexSet
    crossing_arcs: frozenset
    value: Fraction

    def describe(self) -> str:
        side = ",".join(map(str, sorted(self.side)))
        arcs = ",".join(map(str, sorted(self.crossing_arcs)))
        return f"side {{{side}}} arcs {{{arcs}}} value {format_rational(self.value)}"


def _check_proper(g: Digraph, s: Iterable[int]) -> VertexSet:
    s = frozenset(s)
    if not s or len(s) >= g.n or not s <= set(range(g.n)):
        raise PreconditionError("cut side must be a non-empty proper subset of the vertices")
    return s


def delta_plus(g: Digraph, s: Iterable[int]) -> frozenset:
    """Arcs leaving ``s``."""
    s = _check_proper(g, s)
    return frozenset(a.id for a in g.arcs if a.tail in s and a.head not in s)


def delta_minus(g: Digraph, s: Iterable[int]) -> frozenset:
    """Arcs entering ``s``."""
    s = _check_proper(g, s)
    return frozenset(a.id for a in g.arcs if a.head in s and a.tail not in s)


def cut_certificate(g: Digraph, s: Iterable[int], cap: Sequence[Fraction]) -> CutCertificate:
    arcs = delta_plus(g, s)
    return CutCertificate(frozenset(s), arcs, sum((Fraction(cap[i]) for i in arcs), Fraction(0)))


def strongly_connected_components(g: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    out = [[] for _ in range(g.n)]
    for a in g.arcs:
        out[a.tail].append(a.head)
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(g.n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(out[v]):
                work[-1] = (v, i + 1)
                w = out[v][i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def is_strongly_connected(g: Digraph) -> bool:
    return len(strongly_connected_components(g)) == 1


def arcs_strongly_connected(g: Digraph, arc_ids: Iterable[int]) -> bool:
    """Whether the spanning subgraph on ``arc_ids`` is strongly connected."""
    return is_strongly_connected(g.subgraph(arc_ids))


def disconnecting_cut(g: Digraph) -> CutCertificate | None:
    """A proper set with no leaving arcs, or ``None`` if ``g`` is strongly connected."""
    if g.n == 1:
        return None
    out = [[] for _ in range(g.n)]
    inn = [[] for _ in range(g.n)]
    for a in g.arcs:
        out[a.tail].append(a.head)
        inn[a.head].append(a.tail)
    for adj, complement in ((out, False), (inn, True)):
        seen = {0}
        todo = [0]
        while todo:
            u = todo.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        if len(seen) < g.n:
            # forward closure has no leaving arcs; the complement of the
            # backward closure has none either
            side = frozenset(range(g.n)) - seen if complement else frozenset(seen)
            return CutCertificate(side, frozenset(), Fraction(0))
    return None


def min_cut(
    g: Digraph,
    cap: Sequence[RationalLike],
    source: int,
    sink: int | Iterable[int],
) -> tuple[Fraction, CutCertificate]:
    """Exact minimum ``source``-``sink`` cut under rational capacities.

    ``sink`` may be a vertex or a vertex set (equivalent to merging the set).
    Capacities are scaled by their common denominator and fed to the integer
    max-flow kernel; the returned side is the residual-reachable set of the
    source, so it contains ``source`` and avoids every sink.
    """
    sinks = frozenset([sink]) if isinstance(sink, (int, np.integer)) else frozenset(sink)
    if not sinks or source in sinks:
        raise PreconditionError("source must differ from the sink")
    cap = [as_rational(c) for c in cap]
    if len(cap) != g.m:
        raise PreconditionError("capacity vector length does not match arc count")
    if any(c < 0 for c in cap):
        raise PreconditionError("capacities must be non-negative")
    d, scaled = scale_to_integers(cap)
    total = sum(scaled) + 1
    kern, dtype = _kernels.kernels_for(total)
    sink_mask = np.zeros(g.n, dtype=np.bool_)
    sink_mask[list(sinks)] = True
    value, reach = kern.max_flow(
        g.n, g.tails, g.heads, np.array(scaled, dtype=dtype), source, sink_mask, total if dtype is object else np.int64(total)
    )
    side = frozenset(int(v) for v in np.flatnonzero(reach))
    arcs = frozenset(a.id for a in g.arcs if a.tail in side and a.head not in side)
    return Fraction(int(value), d), CutCertificate(side, arcs, Fraction(int(value), d))


def merge_vertices(g: Digraph, group: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Identify ``group`` into one vertex.

    The merged vertex takes the smallest free index in order of first
    appearance; arcs inside the group vanish, so arc ids are renumbered
    densely in their original order.  Returns the graph and the old-to-new
    vertex map.
    """
    group = frozenset(group)
    if not group:
        raise PreconditionError("cannot merge an empty group")
    mapping: list[int] = []
    merged = -1
    nxt = 0
    for v in range(g.n):
        if v in group:
            if merged < 0:
                merged = nxt
                nxt += 1
            mapping.append(merged)
        else:
            mapping.append(nxt)
            nxt += 1
    arcs = [
        (mapping[a.tail], mapping[a.head], a.weight)
        for a in g.arcs
        if not (a.tail in group and a.head in group)
    ]
    return Digraph.from_arcs(nxt, arcs), mapping


def reverse(g: Digraph) -> Digraph:
    return Digraph(g.n, tuple(Arc(a.id, a.head, a.tail, a.weight) for a in g.arcs))


# -- text format -----------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> Digraph:
    """Parse ``n m`` followed by ``m`` lines ``tail head weight``."""
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integer 'n m'") from None
    if n < 1 or m < 0:
        raise GraphFormatError(f"line {lineno}: need n >= 1 and m >= 0")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} arcs, found {len(body)}")
    arcs = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'tail head weight'")
        try:
            u, v = int(parts[0]), int(parts[1])
            w = parse_rational(parts[2])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        if w < 0:
            raise GraphFormatError(f"line {lineno}: negative weight")
        arcs.append((u, v, w))
    return Digraph.from_arcs(n, arcs)


def format_graph(g: Digraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{a.tail} {a.head} {format_rational(a.weight)}" for a in g.arcs]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Digraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Digraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
