"""Connected partitions, their width, quotients and derived colourings.

A connected partition ``H_1, ..., H_l`` has width ``k`` if for every
``i < l`` each component of ``G - (H_1 ∪ ... ∪ H_i)`` is adjacent to at most
``k`` of ``H_1, ..., H_i``. Then ``H_{i+1}`` touches at most ``k`` earlier
parts, so the quotient is greedily ``(k+1)``-colourable, and every colouring
of a part can be combined with the part colour.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import oracles
from .errors import BoundViolation, GraphError, PartitionError
from .graph import Graph
from .ordering import VertexOrdering


@dataclass(frozen=True)
class PartTree:
    """Rooted (BFS or LexBFS) subtree inducing, or spanning, a part.

    ``depth`` is the distance from the root in the graph the tree was grown
    in, so vertices of equal depth parity in one part are never adjacent.
    """

    root: int
    parent: Mapping[int, int]
    depth: Mapping[int, int]
    lex: bool = False

    @property
    def leaves(self) -> frozenset[int]:
        inner = set(self.parent.values())
        return frozenset(v for v in self.depth if v != self.root and v not in inner)

    def to_json_obj(self) -> dict:
        return {
            "root": self.root,
            "parent": {str(v): p for v, p in sorted(self.parent.items())},
            "depth": {str(v): d for v, d in sorted(self.depth.items())},
            "lex": self.lex,
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "PartTree":
        return cls(
            int(obj["root"]),
            {int(v): int(p) for v, p in obj["parent"].items()},
            {int(v): int(d) for v, d in obj["depth"].items()},
            bool(obj.get("lex", False)),
        )


@dataclass(frozen=True)
class ConnectedPartition:
    """Ordered parts plus optional per-part metadata.

    ``pieces[i]`` lists shortest paths whose union is part ``i``;
    ``trees[i]`` is the subtree the part was cut from; ``terminals[i]`` is
    the attachment set the part was built around.
    """

    parts: tuple[frozenset[int], ...]
    width: int
    pieces: tuple[tuple[tuple[int, ...], ...], ...] | None = None
    trees: tuple[PartTree | None, ...] | None = None
    terminals: tuple[frozenset[int], ...] | None = None

    def __len__(self) -> int:
        return len(self.parts)

    def part_of(self) -> list[int]:
        n = sum(len(p) for p in self.parts)
        out = [-1] * n
        for i, p in enumerate(self.parts):
            for v in p:
                out[v] = i
        return out

    @property
    def max_pieces(self) -> int:
        if self.pieces is None:
            raise PartitionError("partition carries no path pieces")
        return max((len(p) for p in self.pieces), default=0)

    @property
    def max_leaves(self) -> int:
        if self.trees is None or any(t is None for t in self.trees):
            raise PartitionError("partition carries no subtree metadata")
        return max((len(t.leaves) for t in self.trees), default=0)

    def to_json_obj(self) -> dict:
        obj: dict = {"parts": [sorted(p) for p in self.parts], "width": self.width}
        if self.pieces is not None:
            obj["pieces"] = [[list(path) for path in ps] for ps in self.pieces]
        if self.trees is not None:
            obj["trees"] = [None if t is None else t.to_json_obj() for t in self.trees]
        return obj

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "ConnectedPartition":
        try:
            parts = tuple(frozenset(int(v) for v in p) for p in obj["parts"])
            pieces = None
            if obj.get("pieces") is not None:
                pieces = tuple(tuple(tuple(int(v) for v in path) for path in ps) for ps in obj["pieces"])
            trees = None
            if obj.get("trees") is not None:
                trees = tuple(None if t is None else PartTree.from_json_obj(t) for t in obj["trees"])
            return cls(parts, int(obj["width"]), pieces, trees)
        except (KeyError, TypeError, ValueError) as exc:
            raise PartitionError(f"bad partition JSON: {exc}") from None


@dataclass(frozen=True)
class WidthReport:
    width: int
    declared: int
    worst: tuple[int, int] | None = None  # (prefix length, smallest vertex of component)

    @property
    def ok(self) -> bool:
        return self.width <= self.declared


def validate_partition(g: Graph, p: ConnectedPartition, strict: bool = True) -> WidthReport:
    """Recompute connectivity of every part and the true width.

    Raises :class:`PartitionError` on overlap, non-cover or a disconnected
    part; with ``strict`` also raises :class:`BoundViolation` when the true
    width exceeds the declared one.
    """
    seen: set[int] = set()
    for i, part in enumerate(p.parts):
        if not part:
            raise PartitionError(f"part {i} is empty")
        if seen & part:
            raise PartitionError(f"part {i} overlaps an earlier part")
        if any(not 0 <= v < g.n for v in part):
            raise PartitionError(f"part {i} has out-of-range vertices")
        seen |= part
        if len(oracles.components_within(g, part)) != 1:
            raise PartitionError(f"part {i} is not connected")
    if len(seen) != g.n:
        raise PartitionError(f"parts cover {len(seen)} of {g.n} vertices")
    owner = {v: i for i, part in enumerate(p.parts) for v in part}
    width, worst = 0, None
    rest = set(range(g.n))
    for i, part in enumerate(p.parts[:-1]):
        rest -= part
        for comp in oracles.components_within(g, rest):
            touched = {owner[w] for v in comp for w in g.adj[v] if owner[w] <= i}
            if len(touched) > width:
                width, worst = len(touched), (i + 1, min(comp))
    report = WidthReport(width, p.width, worst)
    if strict and not report.ok:
        raise BoundViolation(f"partition has width {width} > declared {p.width}")
    return report


def quotient(g: Graph, p: ConnectedPartition) -> Graph:
    """Graph on the parts; ``i ~ j`` iff some edge joins ``H_i`` and ``H_j``."""
    owner = p.part_of()
    if len(owner) != g.n or -1 in owner:
        raise PartitionError("partition does not cover the graph")
    edges = {(min(owner[u], owner[v]), max(owner[u], owner[v])) for u, v in g.edges() if owner[u] != owner[v]}
    return Graph(len(p.parts), sorted(edges))


def greedy_part_colouring(q: Graph, k: int) -> list[int]:
    """Colour quotient vertices in index order with the smallest colour
    (from 1) unused by earlier neighbours."""
    colour: list[int] = []
    for i in range(q.n):
        earlier = [colour[j] for j in q.adj[i] if j < i]
        if len(earlier) > k:
            raise PartitionError(f"part {i} touches {len(earlier)} earlier parts, more than the width {k}")
        used = set(earlier)
        c = 1
        while c in used:
            c += 1
        colour.append(c)
    return colour


@dataclass(frozen=True)
class Colouring:
    """A vertex colouring with metrics recomputed by the oracle validator.

    ``bounds`` maps metric names to the claimed upper bounds, so a colouring
    can be checked against the statement that produced it.
    """

    colour: tuple[int, ...]
    num_colours: int
    defect: int
    clustering: int
    bounds: Mapping[str, int] = field(default_factory=dict)

    @classmethod
    def of(cls, g: Graph, colour: Sequence[int] | Mapping[int, int], **bounds: int) -> "Colouring":
        if isinstance(colour, Mapping):
            if set(colour) != set(range(g.n)):
                raise GraphError("colouring does not cover every vertex")
            colour = [colour[v] for v in range(g.n)]
        m = oracles.validate_colouring(g, colour)
        return cls(tuple(colour), m.num_colours, m.defect, m.clustering, dict(bounds))

    def violations(self) -> list[str]:
        out = []
        for name, bound in sorted(self.bounds.items()):
            value = getattr(self, name)
            if value > bound:
                out.append(f"{name} {value} > {bound}")
        return out

    def check(self) -> "Colouring":
        bad = self.violations()
        if bad:
            raise BoundViolation("; ".join(bad))
        return self

    def to_json_obj(self) -> dict:
        return {
            "colour": list(self.colour),
            "num_colours": self.num_colours,
            "defect": self.defect,
            "clustering": self.clustering,
        }


MODES = ("bfs_defect", "lex_defect", "clustered")


def partition_colourings(g: Graph, p: ConnectedPartition, mode: str) -> Colouring:
    """Colourings derived from a width-k partition whose parts come from
    BFS subtrees with at most ``q`` leaves each.

    * ``bfs_defect``: part colour only; ``k+1`` colours, defect ``3q-1``.
    * ``lex_defect``: the same with LexBFS subtrees; defect ``2q``.
    * ``clustered``: part colour times depth parity; ``2k+2`` colours,
      clustering ``q``.
    """
    if mode not in MODES:
        raise GraphError(f"unknown mode {mode!r}; choose from {MODES}")
    if p.trees is None or any(t is None for t in p.trees):
        raise PartitionError(f"mode {mode} needs subtree metadata on every part")
    if mode == "lex_defect" and not all(t.lex for t in p.trees):
        raise PartitionError("mode lex_defect needs LexBFS subtrees")
    k = p.width
    pc = greedy_part_colouring(quotient(g, p), k)
    q = max(1, max(len(t.leaves) for t in p.trees))
    if mode == "clustered":
        colour = [0] * g.n
        for i, (part, tree) in enumerate(zip(p.parts, p.trees)):
            for v in part:
                colour[v] = 2 * (pc[i] - 1) + tree.depth[v] % 2 + 1
        return Colouring.of(g, colour, num_colours=2 * k + 2, clustering=q)
    colour = [0] * g.n
    for i, part in enumerate(p.parts):
        for v in part:
            colour[v] = pc[i]
    defect = 2 * q if mode == "lex_defect" else 3 * q - 1
    return Colouring.of(g, colour, num_colours=k + 1, defect=defect)


def partition_ordering(g: Graph, p: ConnectedPartition) -> VertexOrdering:
    """Parts in order, pieces in order within a part, each piece along its
    path."""
    if p.pieces is None:
        raise PartitionError("partition_ordering needs path pieces")
    order: list[int] = []
    for i, (part, ps) in enumerate(zip(p.parts, p.pieces)):
        flat = [v for path in ps for v in path]
        if sorted(flat) != sorted(part):
            raise PartitionError(f"pieces of part {i} do not partition it")
        order.extend(flat)
    if len(order) != g.n:
        raise PartitionError("partition does not cover the graph")
    return VertexOrdering.of(order)


def part_pieces_are_geodesic(g: Graph, p: ConnectedPartition) -> bool:
    """Whether each piece is a shortest path in the graph left after
    removing the earlier parts and the earlier pieces of its own part."""
    if p.pieces is None:
        raise PartitionError("partition carries no path pieces")
    rest = set(range(g.n))
    for ps in p.pieces:
        for path in ps:
            if any(path[i + 1] not in g.adj[path[i]] for i in range(len(path) - 1)):
                return False
            dist = _distances(g, path[0], rest)
            if dist.get(path[-1]) != len(path) - 1:
                return False
            rest -= set(path)
    return True


def _distances(g: Graph, s: int, allowed: Iterable[int]) -> dict[int, int]:
    allowed = set(allowed)
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if w in allowed and w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist
