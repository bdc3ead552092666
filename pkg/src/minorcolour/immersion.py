"""Defective 2-colourings from spanning trees with small edge cuts, and
from tree-indexed partitions of bounded adhesion.

For a tree T on V(G) and a tree edge xy, let T(xy) be the component of
T - xy containing x. If at most k edges of G join T(xy) and T(yx) for every
tree edge, G is 2-colourable with defect k: while some vertex has degree
above k, a small vertex w whose neighbours all lie on the far side of such
a cut is identified with a tree neighbour, and after colouring the smaller
graph w takes the colour opposite to the unique large vertex it can see.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BoundViolation, GraphError
from .graph import Graph
from .partition import Colouring


def _tree_adjacency(n: int, edges: Iterable[tuple[int, int]]) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    count = 0
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n) or a == b or b in adj[a]:
            raise GraphError(f"bad tree edge ({a}, {b})")
        adj[a].add(b)
        adj[b].add(a)
        count += 1
    if n and count != n - 1:
        raise GraphError("tree must have exactly n-1 edges")
    seen = {0} if n else set()
    stack = [0] if n else []
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != n:
        raise GraphError("tree edges do not span a connected tree")
    return adj


def _rooted(adj: list[set[int]], root: int = 0) -> tuple[list[int], list[int]]:
    """(parent, preorder) of a tree given by adjacency sets."""
    parent = [-1] * len(adj)
    order = [root]
    parent[root] = root
    for x in order:
        for y in sorted(adj[x]):
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    parent[root] = -1
    return parent, order


def tree_cuts(n: int, tree_edges: Iterable[tuple[int, int]], weighted_edges: Iterable[tuple[int, int, int]]) -> dict[tuple[int, int], int]:
    """Total weight of edges crossing each tree edge, keyed ``(child,
    parent)`` for the tree rooted at 0."""
    adj = _tree_adjacency(n, tree_edges)
    parent, order = _rooted(adj)
    depth = [0] * n
    for x in order[1:]:
        depth[x] = depth[parent[x]] + 1
    cut = [0] * n
    for u, v, w in weighted_edges:
        # every tree edge on the u-v path is crossed
        a, b = u, v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            cut[a] += w
            a = parent[a]
    return {(x, parent[x]): cut[x] for x in order[1:]}


@dataclass(frozen=True)
class CutTree:
    """Spanning tree on the vertex set together with the claimed cut bound."""

    tree_edges: tuple[tuple[int, int], ...]
    k: int

    def cuts(self, g: Graph) -> dict[tuple[int, int], int]:
        return tree_cuts(g.n, self.tree_edges, ((u, v, 1) for u, v in g.edges()))

    def validate(self, g: Graph) -> None:
        for (x, y), c in sorted(self.cuts(g).items()):
            if c > self.k:
                raise GraphError(f"tree edge ({x}, {y}) is crossed by {c} > {self.k} edges")

    def to_json_obj(self) -> dict:
        return {"tree_edges": [list(e) for e in self.tree_edges], "k": self.k}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "CutTree":
        return cls(tuple((int(a), int(b)) for a, b in obj["tree_edges"]), int(obj["k"]))


def tree_cut_2colour(g: Graph, ct: CutTree) -> Colouring:
    """2-colouring with defect at most ``ct.k``."""
    ct.validate(g)
    k = ct.k
    if g.n == 0:
        return Colouring.of(g, [], num_colours=2, defect=k)
    gadj = [set(a) for a in g.adj]
    tadj = _tree_adjacency(g.n, ct.tree_edges)
    alive = set(range(g.n))
    steps: list[tuple[int, int]] = []  # (w, u): w gets the colour opposite to u
    while len(alive) > 2:
        large = {v for v in alive if len(gadj[v]) >= k + 1}
        if not large:
            break
        root = min(alive)
        parent, order = _rooted_alive(tadj, root)
        below = {v: (1 if v in large else 0) for v in alive}
        for v in reversed(order[1:]):
            below[parent[v]] += below[v]
        cands = sorted(u for u in large if u != root and below[u] == 1)
        sides: list[tuple[int, set[int]]] = []
        if cands:
            u = cands[0]
            sides.append((u, _subtree(tadj, parent, u)))
        else:
            u = root
            everything = set(order)
            for c in sorted(tadj[root]):
                sides.append((u, everything - _subtree(tadj, parent, c)))
        w = None
        for u, side in sides:
            found = sorted(x for x in side if x != u and gadj[x] <= side)
            if found:
                w = found[0]
                break
        if w is None:
            raise BoundViolation("no absorbable vertex; the cut bound must be violated")
        z = parent[w]
        for y in gadj[w]:
            gadj[y].discard(w)
            if y != z:
                gadj[y].add(z)
                gadj[z].add(y)
        gadj[w] = set()
        for y in tadj[w]:
            tadj[y].discard(w)
            if y != z:
                tadj[y].add(z)
                tadj[z].add(y)
        tadj[w] = set()
        alive.discard(w)
        steps.append((w, u))
    colour = [1] * g.n
    if len(alive) <= 2:
        for i, v in enumerate(sorted(alive)):
            colour[v] = i + 1
    for w, u in reversed(steps):
        colour[w] = 3 - colour[u]
    return Colouring.of(g, colour, num_colours=2, defect=k)


def _rooted_alive(tadj: list[set[int]], root: int) -> tuple[dict[int, int], list[int]]:
    parent = {root: -1}
    order = [root]
    for x in order:
        for y in sorted(tadj[x]):
            if y not in parent:
                parent[y] = x
                order.append(y)
    return parent, order


def _subtree(tadj: list[set[int]], parent: Mapping[int, int], top: int) -> set[int]:
    out = {top}
    stack = [top]
    while stack:
        x = stack.pop()
        for y in tadj[x]:
            if y not in out and parent.get(y) == x:
                out.add(y)
                stack.append(y)
    return out


# -- T-partitions -------------------------------------------------------------------


@dataclass(frozen=True)
class TPartition:
    """Partition of V(G) into (possibly empty) bags indexed by tree nodes."""

    tree_edges: tuple[tuple[int, int], ...]
    bags: tuple[frozenset[int], ...]

    @property
    def max_bag(self) -> int:
        return max((len(b) for b in self.bags), default=0)

    def adhesion(self, g: Graph) -> int:
        node = self.node_of(g)
        cuts = tree_cuts(len(self.bags), self.tree_edges, ((node[u], node[v], 1) for u, v in g.edges()))
        return max(cuts.values(), default=0)

    def node_of(self, g: Graph) -> list[int]:
        node = [-1] * g.n
        for x, bag in enumerate(self.bags):
            for v in bag:
                if not 0 <= v < g.n or node[v] >= 0:
                    raise GraphError(f"vertex {v} is out of range or in two bags")
                node[v] = x
        if -1 in node:
            raise GraphError("bags do not cover every vertex")
        return node

    def to_json_obj(self) -> dict:
        return {"tree_edges": [list(e) for e in self.tree_edges], "bags": [sorted(b) for b in self.bags]}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "TPartition":
        return cls(
            tuple((int(a), int(b)) for a, b in obj["tree_edges"]),
            tuple(frozenset(int(v) for v in b) for b in obj["bags"]),
        )


def tpartition_bound(alpha: int, beta: int, multiplicity: int = 1) -> int:
    return multiplicity * (alpha * min(alpha, beta) + beta - 1)


def tpartition_2colour(g: Graph, tp: TPartition, multiplicity: int = 1) -> Colouring:
    """2-colouring with defect at most ``a*min(a, b) + b - 1`` (times the
    edge multiplicity), where a is the adhesion and b the largest bag.

    The quotient on the tree nodes inherits cuts of at most a, so it is
    coloured by :func:`tree_cut_2colour` and every bag takes its node's
    colour.
    """
    node = tp.node_of(g)
    _tree_adjacency(len(tp.bags), tp.tree_edges)
    alpha, beta = tp.adhesion(g), tp.max_bag
    q = Graph(len(tp.bags), {(min(node[u], node[v]), max(node[u], node[v])) for u, v in g.edges() if node[u] != node[v]})
    ct = CutTree(tp.tree_edges, alpha)
    for edge, c in ct.cuts(q).items():
        if c > alpha:
            raise BoundViolation(f"quotient cut at {edge} is {c} > adhesion {alpha}")
    qc = tree_cut_2colour(q, ct)
    colour = [qc.colour[node[v]] for v in range(g.n)]
    return Colouring.of(g, colour, num_colours=2, defect=tpartition_bound(alpha, beta, multiplicity))


# -- random instances -----------------------------------------------------------------


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    order = list(range(n))
    rng.shuffle(order)
    return [(order[i], order[rng.randrange(i)]) for i in range(1, n)]


def random_cut_tree(n: int, k: int, seed: int = 0, tries: int | None = None) -> tuple[Graph, CutTree]:
    """Random graph with a spanning tree whose cuts are at most k.

    The graph contains the tree itself and random extra edges, each kept
    only if no cut exceeds k afterwards.
    """
    if n < 1 or k < 1:
        raise GraphError("random_cut_tree needs n >= 1 and k >= 1")
    rng = random.Random(seed)
    tree = _random_tree_edges(n, rng)
    edges = {(min(a, b), max(a, b)) for a, b in tree}
    adj = _tree_adjacency(n, tree)
    parent, order = _rooted(adj)
    depth = [0] * n
    for x in order[1:]:
        depth[x] = depth[parent[x]] + 1
    cut = [1] * n
    for _ in range(tries if tries is not None else 3 * n):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or (min(u, v), max(u, v)) in edges:
            continue
        path = []
        a, b = u, v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            path.append(a)
            a = parent[a]
        if all(cut[x] < k for x in path):
            for x in path:
                cut[x] += 1
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges)), CutTree(tuple(tree), k)


def random_tpartition(nodes: int, beta: int, alpha: int, seed: int = 0) -> tuple[Graph, TPartition]:
    """Random graph with a T-partition of adhesion at most ``alpha`` and
    bags of at most ``beta`` vertices (some bags may be empty)."""
    rng = random.Random(seed)
    tree = _random_tree_edges(nodes, rng)
    sizes = [rng.randint(0, beta) for _ in range(nodes)]
    sizes[0] = max(sizes[0], 1)
    bags, nxt = [], 0
    for s in sizes:
        bags.append(frozenset(range(nxt, nxt + s)))
        nxt += s
    n = nxt
    node = [x for x, s in enumerate(sizes) for _ in range(s)]
    edges: set[tuple[int, int]] = set()
    for bag in bags:
        members = sorted(bag)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if rng.random() < 0.5:
                    edges.add((u, v))
    adj = _tree_adjacency(nodes, tree)
    parent, order = _rooted(adj)
    depth = [0] * nodes
    for x in order[1:]:
        depth[x] = depth[parent[x]] + 1
    cut = [0] * nodes
    for _ in range(4 * n):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or node[u] == node[v] or (min(u, v), max(u, v)) in edges:
            continue
        path = []
        a, b = node[u], node[v]
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            path.append(a)
            a = parent[a]
        if all(cut[x] < alpha for x in path):
            for x in path:
                cut[x] += 1
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges)), TPartition(tuple(tree), tuple(bags))


def colour_classes(colour: Sequence[int]) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for v, c in enumerate(colour):
        out.setdefault(c, []).append(v)
    return out
