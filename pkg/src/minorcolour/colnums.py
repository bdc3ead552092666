"""Strong and weak r-reachability, colouring numbers and layered orderings.

For an ordering ⪯ and a vertex v, ``S_r(v)`` holds the vertices x ⪯ v
reachable from v by a path of length at most r whose interior vertices all
come after v; ``W_r(v)`` relaxes this to interior vertices after x. The
r-strong (weak) colouring number of an ordering is the largest
``|S_r(v)|`` (``|W_r(v)|``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import BoundViolation, GraphError, OracleLimitError
from .graph import Graph
from .ordering import VertexOrdering

EXACT_CAP = 9


def _as_ordering(g: Graph, order) -> VertexOrdering:
    if not isinstance(order, VertexOrdering):
        order = VertexOrdering.of(order)
    if len(order) != g.n:
        raise GraphError("ordering does not cover the graph")
    return order


def _ball(g: Graph, src: int, radius: int, allowed) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        for w in g.neighbours(u):
            if w not in dist and allowed(w):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def sreach(g: Graph, order, v: int, r: int) -> set[int]:
    if r < 1:
        raise GraphError("r must be at least 1")
    pos = _as_ordering(g, order).position
    inner = _ball(g, v, r - 1, lambda u: pos[u] > pos[v])
    out = {v}
    for u in inner:
        out.update(x for x in g.adj[u] if pos[x] < pos[v])
    return out


def wreach_all(g: Graph, order, r: int) -> list[set[int]]:
    """``W_r(v)`` for every v, by one bounded BFS per candidate x."""
    if r < 1:
        raise GraphError("r must be at least 1")
    pos = _as_ordering(g, order).position
    out = [{v} for v in range(g.n)]
    for x in range(g.n):
        for u in _ball(g, x, r, lambda w, x=x: pos[w] > pos[x]):
            out[u].add(x)
    return out


def wreach(g: Graph, order, v: int, r: int) -> set[int]:
    if r < 1:
        raise GraphError("r must be at least 1")
    pos = _as_ordering(g, order).position
    out = {v}
    for x in range(g.n):
        if pos[x] < pos[v] and v in _ball(g, x, r, lambda w, x=x: pos[w] > pos[x]):
            out.add(x)
    return out


def scol(g: Graph, order, r: int) -> int:
    order = _as_ordering(g, order)
    return max((len(sreach(g, order, v, r)) for v in range(g.n)), default=0)


def wcol(g: Graph, order, r: int) -> int:
    return max((len(w) for w in wreach_all(g, order, r)), default=0)


def _strong_size(g: Graph, before: int, v: int, r: int) -> int:
    """|S_r(v)| when exactly the vertices in bitmask ``before`` precede v;
    the set depends on nothing else."""
    seen = 1 << v
    frontier = [v]
    found = 0
    for _ in range(r):
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                bit = 1 << w
                if before & bit:
                    found |= bit
                elif not seen & bit:
                    seen |= bit
                    nxt.append(w)
        frontier = nxt
    return bin(found).count("1") + 1


def exact_scol(g: Graph, r: int) -> tuple[int, VertexOrdering]:
    """Minimum r-strong colouring number over all orderings (``n <= 9``),
    by dynamic programming over the set of earlier vertices."""
    if g.n > EXACT_CAP:
        raise OracleLimitError(f"exact_scol is capped at n <= {EXACT_CAP}")
    if g.n == 0:
        return 0, VertexOrdering(())
    best = {0: (0, -1)}
    for mask in range(1, 1 << g.n):
        choice = None
        m = mask
        while m:
            bit = m & -m
            m ^= bit
            v = bit.bit_length() - 1
            rest = mask ^ bit
            cost = max(best[rest][0], _strong_size(g, rest, v, r))
            if choice is None or cost < choice[0]:
                choice = (cost, v)
        best[mask] = choice
    order = []
    mask = (1 << g.n) - 1
    while mask:
        v = best[mask][1]
        order.append(v)
        mask ^= 1 << v
    return best[(1 << g.n) - 1][0], VertexOrdering(tuple(reversed(order)))


def exact_wcol(g: Graph, r: int) -> tuple[int, VertexOrdering]:
    """Minimum r-weak colouring number over all orderings (``n <= 9``), by
    branch and bound over orderings built from the front."""
    if g.n > EXACT_CAP:
        raise OracleLimitError(f"exact_wcol is capped at n <= {EXACT_CAP}")
    if g.n == 0:
        return 0, VertexOrdering(())
    n = g.n
    start = VertexOrdering.identity(n)
    best = [wcol(g, start, r), start.order]
    counts = [1] * n
    prefix: list[int] = []

    def dfs(placed: set[int], current: int) -> None:
        if current >= best[0]:
            return
        if len(prefix) == n:
            best[0], best[1] = current, tuple(prefix)
            return
        for x in sorted(set(range(n)) - placed):
            reach = _ball(g, x, r, lambda w: w not in placed and w != x)
            bumped = [u for u in reach if u != x]
            for u in bumped:
                counts[u] += 1
            placed.add(x)
            prefix.append(x)
            dfs(placed, max(current, max((counts[u] for u in bumped), default=1)))
            prefix.pop()
            placed.discard(x)
            for u in bumped:
                counts[u] -= 1

    dfs(set(), 1)
    return best[0], VertexOrdering(tuple(best[1]))


# -- layered tree decompositions ------------------------------------------------------


class LayeredTDError(GraphError):
    """Invalid layered tree decomposition; ``kind`` is one of ``tree``,
    ``coverage``, ``subtree``, ``layering`` or ``width``."""

    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(f"{kind}: {message}")


@dataclass(frozen=True)
class LayeredTD:
    """Tree decomposition (nodes ``0..len(bags)-1``) with a layering."""

    tree_edges: tuple[tuple[int, int], ...]
    bags: tuple[frozenset[int], ...]
    layers: tuple[frozenset[int], ...]
    layered_width: int

    def to_json_obj(self) -> dict:
        return {
            "tree_edges": [list(e) for e in self.tree_edges],
            "bags": [sorted(b) for b in self.bags],
            "layers": [sorted(layer) for layer in self.layers],
            "layered_width": self.layered_width,
        }

    @classmethod
    def from_json_obj(cls, obj) -> "LayeredTD":
        try:
            return cls(
                tuple((int(a), int(b)) for a, b in obj["tree_edges"]),
                tuple(frozenset(int(v) for v in b) for b in obj["bags"]),
                tuple(frozenset(int(v) for v in layer) for layer in obj["layers"]),
                int(obj["layered_width"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise LayeredTDError("format", f"bad layered decomposition JSON: {exc}") from None


def _node_depths(ltd: LayeredTD) -> list[int]:
    k = len(ltd.bags)
    adj: list[list[int]] = [[] for _ in range(k)]
    for a, b in ltd.tree_edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            raise LayeredTDError("tree", f"bad tree edge ({a}, {b})")
        adj[a].append(b)
        adj[b].append(a)
    if k == 0 or len(ltd.tree_edges) != k - 1:
        raise LayeredTDError("tree", "node set with these edges is not a tree")
    depth = [-1] * k
    depth[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                queue.append(y)
    if min(depth) < 0:
        raise LayeredTDError("tree", "decomposition tree is disconnected")
    return depth


def validate_layered_td(g: Graph, ltd: LayeredTD) -> int:
    """Check every condition and return the measured layered width."""
    _node_depths(ltd)
    adj: list[set[int]] = [set() for _ in ltd.bags]
    for a, b in ltd.tree_edges:
        adj[a].add(b)
        adj[b].add(a)
    homes: list[list[int]] = [[] for _ in range(g.n)]
    for x, bag in enumerate(ltd.bags):
        for v in bag:
            if not 0 <= v < g.n:
                raise LayeredTDError("coverage", f"bag {x} has out-of-range vertex {v}")
            homes[v].append(x)
    for v in range(g.n):
        if not homes[v]:
            raise LayeredTDError("coverage", f"vertex {v} lies in no bag")
        nodes = set(homes[v])
        seen = {homes[v][0]}
        stack = [homes[v][0]]
        while stack:
            x = stack.pop()
            for y in adj[x] & nodes:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != nodes:
            raise LayeredTDError("subtree", f"bags containing vertex {v} are not connected in the tree")
    for u, v in g.edges():
        if not set(homes[u]) & set(homes[v]):
            raise LayeredTDError("coverage", f"edge ({u}, {v}) lies in no bag")
    layer_of = {}
    for i, layer in enumerate(ltd.layers):
        for v in layer:
            if v in layer_of:
                raise LayeredTDError("layering", f"vertex {v} lies in two layers")
            layer_of[v] = i
    if set(layer_of) != set(range(g.n)):
        raise LayeredTDError("layering", "layers do not partition the vertex set")
    for u, v in g.edges():
        if abs(layer_of[u] - layer_of[v]) > 1:
            raise LayeredTDError("layering", f"edge ({u}, {v}) skips a layer")
    width = max((len(bag & layer) for bag in ltd.bags for layer in ltd.layers), default=0)
    if width > ltd.layered_width:
        raise LayeredTDError("width", f"a bag has {width} > {ltd.layered_width} vertices in one layer")
    return width


def layered_ordering(g: Graph, ltd: LayeredTD, check_radii: Iterable[int] = (1, 2, 3)) -> VertexOrdering:
    """Vertices sorted by the depth of their shallowest bag (tree rooted at
    node 0), ties by id; asserts ``scol_r <= k(2r+1)`` for ``check_radii``."""
    validate_layered_td(g, ltd)
    depth = _node_depths(ltd)
    home: list[int | None] = [None] * g.n
    for x, bag in sorted(enumerate(ltd.bags), key=lambda item: (depth[item[0]], item[0])):
        for v in bag:
            if home[v] is None:
                home[v] = depth[x]
    order = VertexOrdering(tuple(sorted(range(g.n), key=lambda v: (home[v], v))))
    k = ltd.layered_width
    for r in check_radii:
        value = scol(g, order, r)
        if value > k * (2 * r + 1):
            raise BoundViolation(f"scol_{r} = {value} exceeds {k * (2 * r + 1)}")
    return order


def grid_layered_td(p: int, q: int) -> LayeredTD:
    """Layered decomposition of the p x q grid of layered width 2: layers
    are the rows, bag j holds columns j and j+1, bags form a path."""
    if p < 1 or q < 1:
        raise GraphError("grid needs p, q >= 1")
    cols = [frozenset(i * q + j for i in range(p)) for j in range(q)]
    bags = tuple(cols[j] | cols[j + 1] for j in range(q - 1)) or (cols[0],)
    layers = tuple(frozenset(range(i * q, (i + 1) * q)) for i in range(p))
    edges = tuple((j, j + 1) for j in range(len(bags) - 1))
    return LayeredTD(edges, bags, layers, 2 if q > 1 else 1)


def path_layered_td(n: int) -> LayeredTD:
    """Path decomposition of the path ``0..n-1`` with one layer per vertex
    (layered width 1)."""
    bags = tuple(frozenset((i, i + 1)) for i in range(n - 1)) or (frozenset((0,)),)
    return LayeredTD(
        tuple((j, j + 1) for j in range(len(bags) - 1)),
        bags,
        tuple(frozenset((i,)) for i in range(n)),
        1,
    )


def kst_bounds(s: int, t: int, r: int) -> tuple[int, int]:
    """(scol bound, wcol bound) for K*_{s,t}-minor-free graphs at radius r."""
    return s * (s + 1) * (t - 1) * (2 * r + 1), s * (t - 1) * comb(r + s, s) * (2 * r + 1)


def bfs_colouring_bounds(p: int, k: int, r: int) -> tuple[int, int]:
    """(scol, wcol) bounds for a width-k partition into at most p shortest
    paths per part."""
    return p * (k + 1) * (2 * r + 1), p * comb(r + k, k) * (2 * r + 1)

