"""Vertex-disjoint paths and minimum vertex separators (Menger).

Every vertex is split into an in-copy and an out-copy joined by a unit
capacity arc; graph edges become pairs of arcs of unbounded capacity.
Augmenting paths are found by BFS, so the flow is built one unit at a time
and the search can stop early once a target value is reached.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

_INF = 1 << 30


@dataclass(frozen=True)
class MengerResult:
    """Either ``paths`` (pairwise vertex-disjoint A-B paths, as many as
    found up to the limit) and, when the flow is maximum, a minimum
    separator of the same size."""

    paths: tuple[tuple[int, ...], ...]
    separator: frozenset[int] | None


def menger(g: Graph, a: Iterable[int], b: Iterable[int], limit: int | None = None) -> MengerResult:
    """Maximum set of vertex-disjoint A-B paths in ``g``.

    Paths may be single vertices of ``A ∩ B``. If ``limit`` is given the
    search stops after ``limit`` paths and no separator is reported unless
    the flow was already maximum.
    """
    a, b = set(a), set(b)
    n = g.n
    src, dst = 2 * n, 2 * n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n + 2)]
    original: list[tuple[int, int]] = []

    def arc(x: int, y: int, c: int) -> None:
        if (x, y) not in cap:
            out[x].append(y)
            out[y].append(x)
            cap[(x, y)] = 0
            cap.setdefault((y, x), 0)
            original.append((x, y))
        cap[(x, y)] += c

    # vertex v: in-copy 2v, out-copy 2v+1
    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
        for w in g.adj[v]:
            arc(2 * v + 1, 2 * w, _INF)
    for v in sorted(a):
        arc(src, 2 * v, _INF)
    for v in sorted(b):
        arc(2 * v + 1, dst, _INF)
    for lst in out:
        lst.sort()

    flow = 0
    while limit is None or flow < limit:
        prev = {src: src}
        queue = deque([src])
        while queue and dst not in prev:
            x = queue.popleft()
            for y in out[x]:
                if y not in prev and cap[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if dst not in prev:
            break
        y = dst
        while y != src:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1

    # final reachability decides maximality and the cut
    seen = {src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in out[x]:
            if y not in seen and cap[(x, y)] > 0:
                seen.add(y)
                queue.append(y)
    separator = None
    if dst not in seen:
        separator = frozenset(v for v in range(n) if 2 * v in seen and 2 * v + 1 not in seen)

    # original arcs never come in opposite pairs, so the residual capacity
    # of the reverse arc is exactly the flow carried
    flow_on = {(x, y): cap[(y, x)] for (x, y) in original}
    paths = []
    for s0 in sorted(a):
        if not flow_on.get((src, 2 * s0)):
            continue
        p = [s0]
        x = 2 * s0 + 1
        while not flow_on.get((x, dst)):
            x = next(y for y in out[x] if y < 2 * n and flow_on.get((x, y), 0) > 0)
            p.append(x // 2)
            x += 1
        paths.append(tuple(p))
    return MengerResult(tuple(paths), separator)
