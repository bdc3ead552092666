"""Minimal induced connected subgraphs containing a terminal set.

A *skeleton* is an inclusion-minimal connected induced subgraph ``H`` that
contains a terminal set ``A`` of size ``k``. Minimality alone forces max
degree at most ``k`` and bandwidth at most ``k-1``; :func:`build_skeleton`
additionally draws ``H`` from a LexBFS subtree with at most ``k-1`` leaves,
so vertices of that subtree have at most ``2k-2`` neighbours in ``H`` and
every other vertex at most ``2k-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import ceil
from typing import Iterable

from .errors import BoundViolation, GraphError
from .graph import Graph, block_cut_tree, components, is_connected, shortest_path
from .lexbfs import lexbfs_tree, subtree_to

RED, BLUE = 1, 2


@dataclass(frozen=True)
class Skeleton:
    vertices: frozenset[int]
    terminals: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.terminals)


def _prune(g: Graph, terminals: set[int], start: set[int]) -> set[int]:
    """Drop non-terminals in descending id order while the terminals stay in
    one component; the component holding the terminals is kept."""
    h = set(start)
    for v in sorted(h - terminals, reverse=True):
        if v not in h:
            continue
        trial = h - {v}
        for comp in components(g, trial):
            if terminals <= comp:
                h = set(comp)
                break
    return h


def minimal_connected_containing(g: Graph, a: Iterable[int], within: Iterable[int] | None = None) -> Skeleton:
    """Inclusion-minimal ``H`` with ``a ⊆ H ⊆ within`` and ``g[H]`` connected."""
    a = set(a)
    allowed = set(range(g.n)) if within is None else set(within)
    if not a:
        raise GraphError("terminal set must be non-empty")
    if not a <= allowed:
        raise GraphError("terminals not contained in the allowed vertex set")
    if not is_connected(g, allowed):
        raise GraphError("allowed vertex set is not connected")
    return Skeleton(frozenset(_prune(g, a, allowed)), frozenset(a))


def build_skeleton(g: Graph, a: Iterable[int], within: Iterable[int] | None = None) -> Skeleton:
    """Skeleton for ``a`` inside the connected graph ``g[within]``.

    LexBFS tree rooted at the smallest terminal, the subtree of root paths to
    the terminals, then pruning inside that subtree.
    """
    a = set(a)
    allowed = set(range(g.n)) if within is None else set(within)
    if not a:
        raise GraphError("terminal set must be non-empty")
    if not a <= allowed:
        raise GraphError("terminals not contained in the allowed vertex set")
    if len(a) == 1:
        return Skeleton(frozenset(a), frozenset(a))
    tree = lexbfs_tree(g, min(a), allowed)
    sub = subtree_to(tree, a)
    return minimal_connected_containing(g, a, sub.vertices)


def _bipartition(g: Graph, verts: set[int]) -> dict[int, int] | None:
    colour: dict[int, int] = {}
    for s in sorted(verts):
        if s in colour:
            continue
        colour[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbours(u):
                if w not in verts:
                    continue
                if w not in colour:
                    colour[w] = 3 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def cluster2colour(g: Graph, h: Skeleton) -> dict[int, int]:
    """2-colouring of ``g[H]`` with clustering at most ``ceil(k/2)``.

    Peel leaf blocks: the leaf block ``L`` (with cut vertex ``v``) minimising
    ``|L - v|`` is removed, ``v`` becomes a terminal, and after colouring the
    rest, ``L - v`` takes the colour opposite to ``v``. A single remaining
    block consists of terminals only and is split directly.
    """
    if h.k < 2:
        raise GraphError("cluster2colour needs at least two terminals")
    verts = set(h.vertices)
    terms = set(h.terminals)
    peeled: list[tuple[frozenset[int], int]] = []
    while True:
        bct = block_cut_tree(g, verts)
        leaves = bct.leaf_blocks()
        if not leaves:
            break
        best = min(leaves, key=lambda i: (len(bct.blocks[i]) - 1, sorted(bct.blocks[i])))
        (cut,) = bct.incidence[best]
        body = bct.blocks[best] - {cut}
        peeled.append((body, cut))
        verts -= body
        terms = (terms - bct.blocks[best]) | {cut}
    if not verts <= terms:
        raise BoundViolation("skeleton is not minimal")
    colour = _bipartition(g, verts)
    if colour is None:
        ordered = sorted(verts)
        half = ceil(len(ordered) / 2)
        colour = {v: 1 if i < half else 2 for i, v in enumerate(ordered)}
    for body, cut in reversed(peeled):
        for u in body:
            colour[u] = 3 - colour[cut]
    return colour


def redblue(g: Graph, h: Skeleton) -> dict[int, int]:
    """Red/blue colouring of ``g[H]``: at most ``k-2`` red vertices, blue
    part a disjoint union of at most ``k-1`` induced paths.

    Terminals are removed largest id first; each removed terminal ``x`` is
    re-attached by a shortest path ``x..u v w`` to the smaller skeleton with
    ``v`` red and ``x..u`` blue.
    """
    if h.k < 2:
        raise GraphError("redblue needs at least two terminals")
    verts = set(h.vertices)
    terms = sorted(h.terminals)
    # Stack of skeletons for terminal sets terms[:j], j = k, k-1, ..., 2.
    stack = [verts]
    for j in range(len(terms) - 1, 1, -1):
        stack.append(_prune(g, set(terms[:j]), stack[-1]))
    colour = {v: BLUE for v in stack[-1]}
    for j in range(2, len(terms)):
        big, small = stack[len(terms) - j - 1], stack[len(terms) - j]
        x = terms[j]
        if x in small:
            if big != small:
                raise BoundViolation("skeleton is not minimal")
            continue
        p = shortest_path(g, [x], small, big)
        if p is None:
            raise BoundViolation("terminal disconnected from the smaller skeleton")
        *blue, v, _w = p
        if set(p[:-1]) | small != big:
            raise BoundViolation("skeleton is not minimal")
        colour[v] = RED
        for u in blue:
            colour[u] = BLUE
    return colour
