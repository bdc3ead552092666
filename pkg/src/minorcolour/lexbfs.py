"""LexBFS spanning trees, root-path subtrees and the orderings built on them.

A LexBFS spanning tree is a BFS tree whose layers carry linear orders such
that

* (priority) a vertex with parent ``w`` has no neighbour earlier than ``w``
  in the previous layer, and
* (non-crossing) no two tree edges cross between consecutive layers.

Taking the parent of each vertex to be its earliest-visited neighbour in a
lexicographic BFS gives both rules; :func:`check_lex_rules` verifies them on
every concrete output instead of trusting that argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import BoundViolation, GraphError
from .graph import Graph, bfs_distances


@dataclass(frozen=True)
class LexTree:
    """A rooted LexBFS spanning tree of ``g[vertices]``."""

    root: int
    parent: dict[int, int]
    layer_index: dict[int, int]
    layers: tuple[tuple[int, ...], ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.layer_index)

    def position(self, v: int) -> int:
        """Index of ``v`` inside its own layer."""
        return self.layers[self.layer_index[v]].index(v)

    def root_path(self, v: int) -> list[int]:
        """Tree path from ``v`` up to the root (inclusive)."""
        out = [v]
        while out[-1] != self.root:
            out.append(self.parent[out[-1]])
        return out

    def children(self) -> dict[int, list[int]]:
        ch: dict[int, list[int]] = {v: [] for v in self.layer_index}
        for v, p in self.parent.items():
            ch[p].append(v)
        for lst in ch.values():
            lst.sort()
        return ch

    def leaves(self) -> frozenset[int]:
        ch = self.children()
        return frozenset(v for v in self.layer_index if v != self.root and not ch[v])

    def to_json_obj(self, n: int) -> dict:
        return {
            "root": self.root,
            "parent": [self.parent.get(v, -1) for v in range(n)],
            "layer_index": [self.layer_index.get(v, -1) for v in range(n)],
            "layer_order": [list(layer) for layer in self.layers],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LexTree":
        parent = {v: p for v, p in enumerate(obj["parent"]) if p >= 0}
        layer_index = {v: i for v, i in enumerate(obj["layer_index"]) if i >= 0}
        layers = tuple(tuple(layer) for layer in obj["layer_order"])
        return cls(int(obj["root"]), parent, layer_index, layers)


@dataclass(frozen=True)
class LexSubtree:
    """Subtree of a :class:`LexTree` closed under taking parents."""

    tree: LexTree
    vertices: frozenset[int]
    leaves: frozenset[int] = field(default=frozenset())

    @property
    def root(self) -> int:
        return self.tree.root

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    def depth(self, v: int) -> int:
        return self.tree.layer_index[v]


def lexbfs_order(g: Graph, root: int, within: Iterable[int] | None = None) -> list[int]:
    """Lexicographic BFS visit order of ``g[within]`` from ``root``.

    Partition refinement over an ordered list of cells; ties inside a cell
    are broken by smallest id.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    if root not in allowed:
        raise GraphError(f"root {root} not in vertex set")
    rest = sorted(allowed - {root})
    cells: list[list[int]] = [[root]] + ([rest] if rest else [])
    order: list[int] = []
    while cells:
        v = cells[0].pop(0)
        if not cells[0]:
            cells.pop(0)
        order.append(v)
        nb = g.adj[v]
        refined: list[list[int]] = []
        for cell in cells:
            hit = [u for u in cell if u in nb]
            if hit and len(hit) < len(cell):
                refined.append(hit)
                refined.append([u for u in cell if u not in nb])
            else:
                refined.append(cell)
        cells = refined
    return order


def lexbfs_tree(g: Graph, root: int, within: Iterable[int] | None = None) -> LexTree:
    """LexBFS spanning tree of the connected graph ``g[within]``."""
    allowed = set(range(g.n)) if within is None else set(within)
    order = lexbfs_order(g, root, allowed)
    if len(order) != len(allowed) or len(bfs_distances(g, root, allowed)) != len(allowed):
        raise GraphError("lexbfs_tree requires a connected vertex set")
    rank = {v: i for i, v in enumerate(order)}
    parent: dict[int, int] = {}
    layer_index = {root: 0}
    for v in order[1:]:
        w = min((u for u in g.adj[v] if u in rank and rank[u] < rank[v]), key=rank.__getitem__)
        parent[v] = w
        layer_index[v] = layer_index[w] + 1
    depth = max(layer_index.values())
    layers: list[list[int]] = [[] for _ in range(depth + 1)]
    for v in order:
        layers[layer_index[v]].append(v)
    return LexTree(root, parent, layer_index, tuple(tuple(layer) for layer in layers))


def check_lex_rules(g: Graph, t: LexTree, within: Iterable[int] | None = None) -> bool:
    """True iff ``t`` is a BFS spanning tree of ``g[within]`` whose layer
    orders satisfy the priority and non-crossing rules."""
    allowed = set(range(g.n)) if within is None else set(within)
    if set(t.layer_index) != allowed or t.root not in allowed:
        return False
    dist = bfs_distances(g, t.root, allowed)
    if dist != t.layer_index:
        return False
    if sorted(v for layer in t.layers for v in layer) != sorted(allowed):
        return False
    if any(t.layer_index[v] != i for i, layer in enumerate(t.layers) for v in layer):
        return False
    pos = {v: i for layer in t.layers for i, v in enumerate(layer)}
    for v, w in t.parent.items():
        if w not in g.adj[v] or t.layer_index[w] != t.layer_index[v] - 1:
            return False
        # priority rule
        i = t.layer_index[v]
        if any(t.layer_index[u] == i - 1 and pos[u] < pos[w] for u in g.adj[v] if u in allowed):
            return False
    if set(t.parent) != allowed - {t.root}:
        return False
    # non-crossing rule
    by_layer: dict[int, list[tuple[int, int]]] = {}
    for v, w in t.parent.items():
        by_layer.setdefault(t.layer_index[v], []).append((pos[v], pos[w]))
    for edges in by_layer.values():
        for pv, pw in edges:
            for px, py in edges:
                if px < pv and py > pw:
                    return False
    return True


def subtree_to(t: LexTree, a: Iterable[int]) -> LexSubtree:
    """Union of the root paths to the vertices of ``a``."""
    a = set(a)
    if not a:
        raise GraphError("subtree_to needs a non-empty target set")
    if not a <= t.vertices:
        raise GraphError("target set not contained in the tree")
    verts: set[int] = {t.root}
    for v in sorted(a):
        while v not in verts:
            verts.add(v)
            v = t.parent[v]
    return _make_subtree(t, verts)


def _make_subtree(t: LexTree, verts: set[int] | frozenset[int]) -> LexSubtree:
    has_child = {t.parent[v] for v in verts if v != t.root}
    leaves = frozenset(v for v in verts if v != t.root and v not in has_child)
    return LexSubtree(t, frozenset(verts), leaves)


def neighbour_count_bound(s: LexSubtree, v: int) -> int:
    """Largest possible ``|N(v) ∩ V(s)|`` for a subtree with k >= 1 leaves.

    Each root-leaf path holds at most two neighbours of v that lie on no
    root-leaf path of the whole tree through v. The only other candidates
    are the tree parent of v and, when v is in the subtree, its children.
    This gives 2k inside the subtree and 2k+1 outside it (the diamond
    ``0-1-3`` plus ``2`` adjacent to all three attains 3 with k = 1).
    """
    k = s.leaf_count
    return 2 * k if v in s.vertices else 2 * k + 1


def neighbour_count_in(g: Graph, s: LexSubtree, v: int) -> int:
    """``|N(v) ∩ V(s)|``; raises if it exceeds :func:`neighbour_count_bound`."""
    count = len(g.adj[v] & s.vertices)
    if s.leaf_count >= 1 and count > neighbour_count_bound(s, v):
        raise BoundViolation(
            f"vertex {v} has {count} neighbours in a LexBFS subtree with {s.leaf_count} leaves"
        )
    return count


def bandwidth_ordering(g: Graph, t: LexTree) -> list[int]:
    """Layer orders concatenated from the root layer outwards.

    For a spanning LexBFS tree with k >= 1 leaves the resulting ordering has
    bandwidth at most k.
    """
    return [v for layer in t.layers for v in layer]


def path_pieces(s: LexSubtree) -> list[list[int]]:
    """Split a rooted subtree into vertex-disjoint vertical paths.

    The first piece runs from the root to the smallest-id deepest leaf's
    branch; each later piece runs from a leaf up to (excluding) the part of
    the tree already covered. Every piece is a sub-path of a root-leaf path,
    hence a shortest path in any subgraph containing the tree.
    """
    t = s.tree
    covered: set[int] = set()
    pieces: list[list[int]] = []
    leaves = sorted(s.leaves, key=lambda v: (-t.layer_index[v], v))
    if not leaves:
        return [[t.root]]
    for leaf in leaves:
        piece = []
        v = leaf
        while v not in covered:
            piece.append(v)
            if v == t.root:
                break
            v = t.parent[v]
        covered.update(piece)
        pieces.append(piece[::-1])
    return pieces
