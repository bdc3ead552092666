"""Simple undirected graphs on vertex ids ``0..n-1``.

Graphs are immutable. Every routine iterates vertices in increasing id
order, so all results are deterministic.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import GraphError, ParseError


class Graph:
    """Simple undirected graph with vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_sorted")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._sorted: list[tuple[int, ...] | None] = [None] * n

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from a symmetric adjacency list; duplicates are merged."""
        edges = {(min(u, v), max(u, v)) for u, nb in enumerate(adj) for v in nb}
        return cls(len(adj), sorted(edges))

    def neighbours(self, v: int) -> tuple[int, ...]:
        """Neighbours of ``v`` in increasing order."""
        s = self._sorted[v]
        if s is None:
            s = tuple(sorted(self.adj[v]))
            self._sorted[v] = s
        return s

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbours(u) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u in old for v in self.neighbours(u) if v in new and u < v]
        return Graph(len(old), edges), old


# -- traversal helpers -------------------------------------------------------


def bfs_distances(
    g: Graph, sources: int | Iterable[int], within: set[int] | frozenset[int] | None = None
) -> dict[int, int]:
    """Distances from ``sources`` inside ``g[within]`` (all of ``g`` if None)."""
    if isinstance(sources, int):
        sources = [sources]
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sorted(sources):
        if within is None or s in within:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.neighbours(u):
            if w not in dist and (within is None or w in within):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def component_of(g: Graph, v: int, within: set[int] | frozenset[int] | None = None) -> frozenset[int]:
    return frozenset(bfs_distances(g, v, within))


def components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of ``g[within]`` ordered by smallest vertex."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for v in sorted(allowed):
        if v not in seen:
            comp = component_of(g, v, allowed)
            seen |= comp
            comps.append(comp)
    return comps


def is_connected(g: Graph, vertices: Iterable[int] | None = None) -> bool:
    """Whether ``g[vertices]`` is connected (the empty graph is not)."""
    allowed = set(range(g.n)) if vertices is None else set(vertices)
    if not allowed:
        return False
    return len(bfs_distances(g, min(allowed), allowed)) == len(allowed)


def shortest_path(
    g: Graph, sources: Iterable[int], targets: Iterable[int], within: set[int] | frozenset[int] | None = None
) -> list[int] | None:
    """A shortest path from any source to any target inside ``g[within]``."""
    targets = set(targets)
    parent: dict[int, int | None] = {}
    queue: deque[int] = deque()
    for s in sorted(set(sources)):
        if within is None or s in within:
            parent[s] = None
            queue.append(s)
    while queue:
        u = queue.popleft()
        if u in targets:
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in g.neighbours(u):
            if w not in parent and (within is None or w in within):
                parent[w] = u
                queue.append(w)
    return None


def neighbourhood(g: Graph, vertices: Iterable[int]) -> set[int]:
    """Open neighbourhood of a vertex set."""
    vs = set(vertices)
    out: set[int] = set()
    for v in vs:
        out |= g.adj[v]
    return out - vs


def sets_adjacent(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    b = set(b)
    return any(not g.adj[v].isdisjoint(b) for v in a)


# -- contraction ---------------------------------------------------------------


def contract_set(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Contract the connected set ``s`` into one vertex.

    Returns ``(h, relabel)`` where ``relabel[v]`` is the id in ``h`` of the
    old vertex ``v``. Vertices outside ``s`` keep their relative order; the
    contracted vertex takes the position of ``min(s)``.
    """
    s = set(s)
    if not s:
        raise GraphError("cannot contract an empty set")
    if not s <= set(range(g.n)):
        raise GraphError("contracted set has out-of-range vertices")
    if not is_connected(g, s):
        raise GraphError("contracted set does not induce a connected subgraph")
    rep = min(s)
    relabel = [0] * g.n
    nxt = 0
    for v in range(g.n):
        if v in s and v != rep:
            continue
        relabel[v] = nxt
        nxt += 1
    for v in s:
        relabel[v] = relabel[rep]
    edges = {
        (min(relabel[u], relabel[v]), max(relabel[u], relabel[v]))
        for u, v in g.edges()
        if relabel[u] != relabel[v]
    }
    return Graph(nxt, sorted(edges)), relabel


# -- block-cut tree -------------------------------------------------------------


@dataclass(frozen=True)
class BlockCutTree:
    """Biconnected components of a connected graph.

    ``blocks`` are vertex sets (bridges appear as 2-vertex blocks, an isolated
    vertex as a 1-vertex block); ``incidence[i]`` lists the cut vertices of
    block ``i``.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    incidence: tuple[frozenset[int], ...]

    def leaf_blocks(self) -> list[int]:
        """Indices of blocks containing exactly one cut vertex."""
        if len(self.blocks) < 2:
            return []
        return [i for i, cuts in enumerate(self.incidence) if len(cuts) == 1]


def block_cut_tree(g: Graph, within: Iterable[int] | None = None) -> BlockCutTree:
    """Block-cut tree of the connected graph ``g[within]``.

    Iterative Hopcroft-Tarjan; blocks are returned sorted by their sorted
    vertex lists.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    if not is_connected(g, allowed):
        raise GraphError("block_cut_tree requires a connected graph")
    root = min(allowed)
    if len(allowed) == 1:
        return BlockCutTree((frozenset([root]),), frozenset(), (frozenset(),))
    disc: dict[int, int] = {root: 0}
    low: dict[int, int] = {root: 0}
    blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    nbrs = {v: [w for w in g.neighbours(v) if w in allowed] for v in allowed}
    stack = [(root, -1, iter(nbrs[root]))]
    counter = 1
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((v, w))
                stack.append((w, v, iter(nbrs[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (u, v):
                        break
                blocks.append(frozenset(block))
    blocks.sort(key=sorted)
    count: dict[int, int] = {}
    for b in blocks:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c > 1)
    incidence = tuple(frozenset(b & cuts) for b in blocks)
    return BlockCutTree(tuple(blocks), cuts, incidence)


# -- serialisation ------------------------------------------------------------------


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list format: a header ``n m`` then ``m`` lines ``u v``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    rows = [
        (i, line.split())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ParseError("empty input", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must be two integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}", body[-1][0] if body else lineno)
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def from_json_obj(obj: Mapping) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from None
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return from_json_obj(obj)


def to_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g), separators=(",", ":"))


_DOT_PALETTE = (
    "red", "blue", "green", "orange", "purple", "cyan", "magenta", "gold",
    "brown", "pink", "gray", "olive",
)


def to_dot(g: Graph, colour: Sequence[int] | None = None, name: str = "G") -> str:
    """Undirected DOT; vertex labels are ids, optional colour per vertex."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if colour is None:
            lines.append(f'  {v} [label="{v}"];')
        else:
            c = colour[v]
            fill = _DOT_PALETTE[(c - 1) % len(_DOT_PALETTE)]
            lines.append(f'  {v} [label="{v}", colour={c}, style=filled, fillcolor={fill}];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def group_graph(g: Graph, groups: Sequence[Iterable[int]]) -> Graph:
    """Graph whose vertex ``i`` stands for the disjoint vertex set
    ``groups[i]``; two groups are adjacent iff some edge joins them.

    When every group is connected the result is a minor of ``g[∪ groups]``.
    """
    owner: dict[int, int] = {}
    for i, grp in enumerate(groups):
        for v in grp:
            if v in owner:
                raise GraphError(f"vertex {v} lies in two groups")
            owner[v] = i
    edges = set()
    for v, i in owner.items():
        for w in g.adj[v]:
            j = owner.get(w)
            if j is not None and j != i:
                edges.add((min(i, j), max(i, j)))
    return Graph(len(groups), sorted(edges))
