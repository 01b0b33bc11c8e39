"""Integer graph kernels: max-flow, packing oracle, arborescence extraction,
subset branch-and-bound.

Every kernel is written once as plain loops over numpy arrays and built twice:
compiled with ``numba.njit`` and left as interpreted Python.  The compiled set
is used by default; set ``WMSCSS_NUMBA=0`` to force the pure-numpy path (also
the automatic choice when numba is not importable).

Capacities and weights are integers.  Callers scale exact rationals by a
common denominator first.  When values could overflow int64 the callers pass
``dtype=object`` arrays and use :data:`python_kernels`, which then runs on
Python big integers unchanged.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

INT64_SAFE = 1 << 60


def _identity(fn):
    return fn


def _build(jit) -> SimpleNamespace:
    @jit
    def max_flow(n, tails, heads, cap, source, sink_mask, limit):
        """Shortest-augmenting-path max-flow from ``source`` into any vertex of
        ``sink_mask``, stopping once ``limit`` units are routed.

        Returns ``(value, reach)``.  When ``value < limit`` the flow is maximum
        and ``reach`` (vertices reachable in the residual graph) is the source
        side of a minimum cut.
        """
        m = tails.shape[0]
        start = np.zeros(n + 1, np.int64)
        for i in range(m):
            start[tails[i] + 1] += 1
            start[heads[i] + 1] += 1
        for v in range(n):
            start[v + 1] += start[v]
        fill = start[:n].copy()
        slots = np.empty(2 * m, np.int64)
        for i in range(m):
            slots[fill[tails[i]]] = 2 * i
            fill[tails[i]] += 1
            slots[fill[heads[i]]] = 2 * i + 1
            fill[heads[i]] += 1

        flow = np.zeros_like(cap)
        total = limit - limit
        pred = np.zeros(n, np.int64)
        queue = np.zeros(n, np.int64)
        seen = np.zeros(n, np.bool_)
        while True:
            seen[:] = False
            if total >= limit:
                return total, seen
            seen[source] = True
            queue[0] = source
            qh = 0
            qt = 1
            hit = -1
            while qh < qt and hit < 0:
                u = queue[qh]
                qh += 1
                for k in range(start[u], start[u + 1]):
                    s = slots[k]
                    a = s >> 1
                    if s & 1 == 0:
                        v = heads[a]
                        if seen[v] or flow[a] >= cap[a]:
                            continue
                    else:
                        v = tails[a]
                        if seen[v] or flow[a] <= 0:
                            continue
                    seen[v] = True
                    pred[v] = s
                    if sink_mask[v]:
                        hit = v
                        break
                    queue[qt] = v
                    qt += 1
            if hit < 0:
                return total, seen

            b = limit - total
            v = hit
            while v != source:
                s = pred[v]
                a = s >> 1
                if s & 1 == 0:
                    r = cap[a] - flow[a]
                    v = tails[a]
                else:
                    r = flow[a]
                    v = heads[a]
                if r < b:
                    b = r
            v = hit
            while v != source:
                s = pred[v]
                a = s >> 1
                if s & 1 == 0:
                    flow[a] += b
                    v = tails[a]
                else:
                    flow[a] -= b
                    v = heads[a]
            total += b

    @jit
    def packing_ok(n, tails, heads, cap, root, covered, t):
        # every S avoiding all covered vertices: cap(out of S) >= t + 1
        for w in range(n):
            if not covered[w]:
                f, _ = max_flow(n, tails, heads, cap, w, covered, t + 1)
                if f < t + 1:
                    return False
        if t <= 0:
            return True
        # every S avoiding the root: cap(out of S) >= t
        root_mask = np.zeros(n, np.bool_)
        root_mask[root] = True
        for w in range(n):
            if w != root and covered[w]:
                f, _ = max_flow(n, tails, heads, cap, w, root_mask, t)
                if f < t:
                    return False
        return True

    @jit
    def extract_in(n, tails, heads, cap, root, t):
        """Greedily grow one in-arborescence, decrementing ``cap`` in place.

        Returns ``(arcs, ok)``; ``arcs[k]`` is the arc chosen at step ``k``.
        """
        m = tails.shape[0]
        covered = np.zeros(n, np.bool_)
        covered[root] = True
        chosen = np.full(max(n - 1, 0), -1, np.int64)
        for step in range(n - 1):
            found = -1
            for a in range(m):
                u = tails[a]
                if covered[u] or not covered[heads[a]] or cap[a] < 1:
                    continue
                cap[a] -= 1
                covered[u] = True
                if packing_ok(n, tails, heads, cap, root, covered, t):
                    found = a
                    break
                cap[a] += 1
                covered[u] = False
            if found < 0:
                return chosen, False
            chosen[step] = found
        return chosen, True

    @jit
    def strong_mask(n, tails, heads, avail):
        """Strong connectivity of the spanning subgraph on arcs with ``avail``."""
        if n <= 1:
            return True
        m = tails.shape[0]
        for direction in range(2):
            seen = np.zeros(n, np.bool_)
            stack = np.zeros(n, np.int64)
            seen[0] = True
            stack[0] = 0
            top = 1
            count = 1
            while top > 0:
                top -= 1
                u = stack[top]
                for a in range(m):
                    if not avail[a]:
                        continue
                    if direction == 0:
                        if tails[a] != u:
                            continue
                        v = heads[a]
                    else:
                        if heads[a] != u:
                            continue
                        v = tails[a]
                    if not seen[v]:
                        seen[v] = True
                        stack[top] = v
                        top += 1
                        count += 1
            if count < n:
                return False
        return True

    @jit
    def lex_less(a, b):
        """Compare two arc subsets as sorted id tuples."""
        m = a.shape[0]
        for i in range(m):
            if a[i] != b[i]:
                if a[i]:
                    for j in range(i + 1, m):
                        if b[j]:
                            return True
                    return False
                for j in range(i + 1, m):
                    if a[j]:
                        return False
                return True
        return False

    @jit
    def min_scss(n, tails, heads, weights, best_weight, best_mask):
        """Depth-first include/exclude search for the cheapest strongly
        connected spanning arc subset; ties go to the lexicographically
        smallest id tuple.  ``best_*`` seed the incumbent.
        """
        m = tails.shape[0]
        best = best_mask.copy()
        avail = np.ones(m, np.bool_)
        included = np.zeros(m, np.bool_)
        step = np.zeros(m + 1, np.int8)
        partial = best_weight - best_weight
        depth = 0
        while depth >= 0:
            if depth == m:
                if partial < best_weight or (
                    partial == best_weight and lex_less(avail, best)
                ):
                    best_weight = partial
                    best[:] = avail
                depth -= 1
                continue
            s = step[depth]
            if s == 0:
                step[depth] = 1
                if partial + weights[depth] <= best_weight:
                    partial += weights[depth]
                    included[depth] = True
                    depth += 1
                    step[depth] = 0
            elif s == 1:
                if included[depth]:
                    partial -= weights[depth]
                    included[depth] = False
                step[depth] = 2
                avail[depth] = False
                if strong_mask(n, tails, heads, avail):
                    depth += 1
                    step[depth] = 0
            else:
                avail[depth] = True
                step[depth] = 0
                depth -= 1
        return best_weight, best

    return SimpleNamespace(
        max_flow=max_flow,
        packing_ok=packing_ok,
        extract_in=extract_in,
        strong_mask=strong_mask,
        lex_less=lex_less,
        min_scss=min_scss,
    )


def numba_requested() -> bool:
    return os.environ.get("WMSCSS_NUMBA", "1").strip().lower() not in {"0", "false", "off", "no"}


python_kernels = _build(_identity)
numba_kernels = _build(numba.njit) if numba is not None else None

USE_NUMBA = numba_kernels is not None and numba_requested()


def kernels_for(*magnitudes: int) -> tuple[SimpleNamespace, object]:
    """Pick a kernel set and integer dtype able to hold ``magnitudes``."""
    big = any(abs(v) >= INT64_SAFE for v in magnitudes)
    if big:
        return python_kernels, object
    if USE_NUMBA:
        return numba_kernels, np.int64
    return python_kernels, np.int64
