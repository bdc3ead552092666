"""Width-(t-2) connected partitions of K_t-minor-free graphs.

Each new part is a skeleton around one attachment vertex per adjacent
earlier part, built inside the component of the remainder that contains
the smallest unassigned vertex. If some component touches ``t-1`` earlier
parts, those parts together with the component are a K_t model.
"""

from __future__ import annotations

from math import ceil

from . import oracles
from .errors import BoundViolation, DecompositionError, GraphError
from .graph import Graph, bfs_distances, component_of
from .lexbfs import bandwidth_ordering, lexbfs_tree
from .minors import DecompositionOutcome, MinorModel, Pattern
from .partition import Colouring, ConnectedPartition, greedy_part_colouring, quotient
from .skeleton import RED, Skeleton, build_skeleton, cluster2colour, redblue


def decompose_kt(g: Graph, t: int) -> DecompositionOutcome:
    """Connected partition of width ``t-2`` whose parts are skeletons on at
    most ``t-2`` terminals, or a K_t model."""
    if t < 4:
        raise GraphError("decompose_kt needs t >= 4")
    owner = [-1] * g.n
    parts: list[frozenset[int]] = []
    terminals: list[frozenset[int]] = []
    unassigned = set(range(g.n))
    while unassigned:
        c = component_of(g, min(unassigned), unassigned)
        adjacent = sorted({owner[w] for v in c for w in g.adj[v] if owner[w] >= 0})
        if len(adjacent) >= t - 1:
            model = MinorModel.of(Pattern.complete(t), [parts[i] for i in adjacent[: t - 1]] + [c])
            check = oracles.validate_minor_model(g, model)
            if not check:
                raise BoundViolation(f"assembled K{t} model is invalid: {check.detail}")
            return DecompositionOutcome(certificate=model)
        if not adjacent:
            a = {min(c)}
        else:
            a = {min(v for v in c if any(owner[w] == q for w in g.adj[v])) for q in adjacent}
        part = build_skeleton(g, a, c).vertices if len(a) > 1 else frozenset(a)
        for v in part:
            owner[v] = len(parts)
        parts.append(part)
        terminals.append(frozenset(a))
        unassigned -= part
    return DecompositionOutcome(
        partition=ConnectedPartition(tuple(parts), t - 2, terminals=tuple(terminals))
    )


def part_skeletons(p: ConnectedPartition) -> list[Skeleton]:
    if p.terminals is None:
        raise GraphError("partition carries no terminal sets")
    return [Skeleton(h, a) for h, a in zip(p.parts, p.terminals)]


def part_bandwidth_ordering(g: Graph, sk: Skeleton) -> list[int]:
    """Layer order of a LexBFS tree of the part rooted at its smallest
    terminal; its bandwidth is at most ``k-1``."""
    return bandwidth_ordering(g, lexbfs_tree(g, min(sk.terminals), sk.vertices))


def check_part_properties(g: Graph, p: ConnectedPartition, t: int) -> None:
    """Assert the per-part guarantees: degree, bandwidth, both 2-colourings
    and the neighbour bound towards earlier parts (2t-5)."""
    owner = p.part_of()
    for i, sk in enumerate(part_skeletons(p)):
        h = sk.vertices
        if max(len(g.adj[v] & h) for v in h) > t - 2:
            raise BoundViolation(f"part {i} has maximum degree above {t - 2}")
        order = part_bandwidth_ordering(g, sk)
        if oracles.bandwidth_within(g, order) > max(0, t - 3):
            raise BoundViolation(f"part {i} has bandwidth above {t - 3}")
        if sk.k >= 2:
            two = cluster2colour(g, sk)
            sizes = _component_sizes(g, h, two)
            if max(sizes) > ceil((t - 2) / 2):
                raise BoundViolation(f"part {i} 2-colouring has clustering above {ceil((t - 2) / 2)}")
            rb = redblue(g, sk)
            red = [v for v in h if rb[v] == RED]
            blue = [v for v in h if rb[v] != RED]
            if len(red) > t - 4 or not oracles.is_linear_forest(g, blue):
                raise BoundViolation(f"part {i} red/blue colouring is out of bounds")
            if len(oracles.components_within(g, blue)) > t - 3:
                raise BoundViolation(f"part {i} has more than {t - 3} blue paths")
        # a skeleton on k terminals can see 2k-1 neighbours from outside,
        # so the guaranteed bound towards later parts is 2t-5
        for v in range(g.n):
            if owner[v] > i and len(g.adj[v] & h) > 2 * t - 5:
                raise BoundViolation(f"vertex {v} has more than {2 * t - 5} neighbours in part {i}")


def _component_sizes(g: Graph, verts, colour) -> list[int]:
    sizes = []
    seen: set[int] = set()
    for v in sorted(verts):
        if v in seen:
            continue
        comp = {u for u in bfs_distances(g, v, {u for u in verts if colour[u] == colour[v]})}
        seen |= comp
        sizes.append(len(comp))
    return sizes


KT_MODES = ("defect", "clustered", "paths", "independent", "treewidth")


def colour_kt(g: Graph, t: int, mode: str) -> Colouring:
    """Colourings of K_t-minor-free graphs built on :func:`decompose_kt`.

    ``defect`` and ``treewidth`` use the part colour alone (``t-1``
    colours, defect ``t-2``, components of treewidth ``t-3``);
    ``clustered`` multiplies it with the clustered 2-colouring of each part
    (``2t-2`` colours, clustering ``ceil((t-2)/2)``); ``paths`` with the
    red/blue colouring (red classes have components of at most ``t-4``
    vertices, blue classes induce paths); ``independent`` additionally
    splits every blue path into alternate vertices (``3t-3`` colours).
    Raises :class:`DecompositionError` carrying the model if a K_t minor is
    found.
    """
    if mode not in KT_MODES:
        raise GraphError(f"unknown mode {mode!r}; choose from {KT_MODES}")
    out = decompose_kt(g, t)
    if out.partition is None:
        raise DecompositionError(f"graph contains a K{t} minor", out.certificate)
    p = out.partition
    pc = greedy_part_colouring(quotient(g, p), p.width)
    owner = p.part_of()
    if mode in ("defect", "treewidth"):
        col = Colouring.of(g, [pc[owner[v]] for v in range(g.n)], num_colours=t - 1, defect=t - 2)
        if mode == "treewidth":
            _check_treewidth_classes(g, p, t)
        return col
    colour = [0] * g.n
    for i, sk in enumerate(part_skeletons(p)):
        base = pc[i] - 1
        if mode == "clustered":
            two = cluster2colour(g, sk) if sk.k >= 2 else {v: 1 for v in sk.vertices}
            for v in sk.vertices:
                colour[v] = 2 * base + two[v]
            continue
        rb = redblue(g, sk) if sk.k >= 2 else {v: 2 for v in sk.vertices}
        if mode == "paths":
            for v in sk.vertices:
                colour[v] = 2 * base + (1 if rb[v] == RED else 2)
            continue
        blue = {v for v in sk.vertices if rb[v] != RED}
        parity = _path_parity(g, blue)
        for v in sk.vertices:
            colour[v] = 3 * base + (1 if rb[v] == RED else 2 + parity[v])
    if mode == "clustered":
        return Colouring.of(g, colour, num_colours=2 * t - 2, clustering=ceil((t - 2) / 2))
    if mode == "paths":
        col = Colouring.of(g, colour, num_colours=2 * t - 2)
        _check_red_blue_classes(g, colour, t, blue_classes={c for c in colour if c % 2 == 0})
        return col
    col = Colouring.of(g, colour, num_colours=3 * t - 3)
    for c in {c for c in colour if c % 3 != 1}:
        cls = {v for v in range(g.n) if colour[v] == c}
        if any(g.adj[v] & cls for v in cls):
            raise BoundViolation(f"colour class {c} is not independent")
    _check_red_blue_classes(g, colour, t, blue_classes={c for c in colour if c % 3 != 1}, blue_paths=False)
    return col


def _path_parity(g: Graph, verts: set[int]) -> dict[int, int]:
    """0/1 alternately along each path component of ``g[verts]``."""
    parity: dict[int, int] = {}
    for v in sorted(verts):
        if v in parity:
            continue
        comp = bfs_distances(g, v, verts)
        ends = sorted(u for u in comp if len(g.adj[u] & verts) <= 1)
        start = ends[0] if ends else v
        for u, d in bfs_distances(g, start, verts).items():
            parity[u] = d % 2
    return parity


def _check_red_blue_classes(g: Graph, colour, t: int, blue_classes, blue_paths: bool = True) -> None:
    for c in set(colour):
        cls = {v for v in range(g.n) if colour[v] == c}
        if c in blue_classes:
            if blue_paths and not oracles.is_linear_forest(g, cls):
                raise BoundViolation(f"colour class {c} is not a union of paths")
        elif t > 4 and max(len(comp) for comp in oracles.components_within(g, cls)) > t - 4:
            raise BoundViolation(f"colour class {c} has a component with more than {t - 4} vertices")


def _check_treewidth_classes(g: Graph, p: ConnectedPartition, t: int) -> None:
    for i, sk in enumerate(part_skeletons(p)):
        order = part_bandwidth_ordering(g, sk)
        if oracles.bandwidth_within(g, order) > max(0, t - 3):
            raise BoundViolation(f"part {i} has bandwidth above {t - 3}")
