"""Deterministic graph families for tests, benchmarks and the CLI.

Randomised families use :class:`random.Random` (Mersenne Twister) seeded
with the given integer, so outputs are reproducible across runs and
platforms.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable

from .errors import GraphError
from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with the s-side on ``0..s-1``."""
    if s < 1 or t < 1:
        raise GraphError("complete_bipartite needs s, t >= 1")
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return complete_bipartite(1, leaves)


def fan(n: int) -> Graph:
    """Vertex 0 joined to every vertex of the path ``1..n-1``."""
    if n < 2:
        raise GraphError("fan needs n >= 2")
    edges = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return Graph(n, edges)


def grid(p: int, q: int) -> Graph:
    """p x q grid; vertex ``i*q + j`` sits in row i, column j."""
    if p < 1 or q < 1:
        raise GraphError("grid needs p, q >= 1")
    edges = []
    for i in range(p):
        for j in range(q):
            v = i * q + j
            if j + 1 < q:
                edges.append((v, v + 1))
            if i + 1 < p:
                edges.append((v, v + q))
    return Graph(p * q, edges)


def octahedron() -> Graph:
    """K_{2,2,2}; the non-adjacent pairs are (0,1), (2,3), (4,5)."""
    return Graph(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def lowerbound_gs(s: int, c: int) -> Graph:
    """The recursive graph G_s: G_1 is the path on c+1 vertices and G_s is
    c disjoint copies of G_{s-1} plus a dominant vertex (the last id)."""
    if s < 1 or c < 1:
        raise GraphError("lowerbound_Gs needs s, c >= 1")
    if s == 1:
        return path(c + 1)
    sub = lowerbound_gs(s - 1, c)
    edges = []
    for copy in range(c):
        off = copy * sub.n
        edges.extend((u + off, v + off) for u, v in sub.edges())
    apex = c * sub.n
    edges.extend((v, apex) for v in range(apex))
    return Graph(apex + 1, edges)


def _relabel(n: int, edges, rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))


def maximal_outerplanar(n: int, seed: int = 0) -> Graph:
    """Random triangulated polygon on n vertices, randomly relabelled."""
    if n < 3:
        raise GraphError("maximal_outerplanar needs n >= 3")
    rng = random.Random(seed)
    edges = [(i, (i + 1) % n) for i in range(n)]
    polygon = list(range(n))
    while len(polygon) > 3:
        i = rng.randrange(len(polygon))
        a, b = polygon[i - 1], polygon[(i + 1) % len(polygon)]
        edges.append((a, b))
        del polygon[i]
    return _relabel(n, edges, rng)


def random_ktree(n: int, k: int, seed: int = 0) -> Graph:
    """Random k-tree: a (k+1)-clique grown by attaching each new vertex to a
    uniformly chosen existing k-clique."""
    if k < 1 or k >= n:
        raise GraphError("random_ktree needs 1 <= k < n")
    rng = random.Random(seed)
    edges = list(combinations(range(k + 1), 2))
    cliques = [tuple(c) for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = cliques[rng.randrange(len(cliques))]
        edges.extend((u, v) for u in base)
        for i in range(k):
            cliques.append(tuple(sorted(base[:i] + base[i + 1:] + (v,))))
    return Graph(n, [(min(u, v), max(u, v)) for u, v in edges])


def planar_triangulation(n: int, seed: int = 0) -> Graph:
    """Random maximal planar graph: repeated face insertion from K4 followed
    by random edge flips."""
    if n < 3:
        raise GraphError("planar_triangulation needs n >= 3")
    if n == 3:
        return complete(3)
    rng = random.Random(seed)
    faces: set[frozenset[int]] = {frozenset(f) for f in combinations(range(4), 3)}
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in combinations(range(4), 2):
        adj[u].add(v)
        adj[v].add(u)
    for v in range(4, n):
        face = sorted(faces, key=sorted)[rng.randrange(len(faces))]
        faces.remove(face)
        a, b, c = sorted(face)
        faces.update({frozenset((a, b, v)), frozenset((b, c, v)), frozenset((a, c, v))})
        for u in (a, b, c):
            adj[u].add(v)
            adj[v].add(u)
    for _ in range(2 * n):
        u = rng.randrange(n)
        v = sorted(adj[u])[rng.randrange(len(adj[u]))]
        pair = [f for f in faces if u in f and v in f]
        if len(pair) != 2:
            continue
        (x,) = pair[0] - {u, v}
        (y,) = pair[1] - {u, v}
        if x == y or y in adj[x] or len(adj[u]) <= 3 or len(adj[v]) <= 3:
            continue
        faces.difference_update(pair)
        faces.update({frozenset((x, y, u)), frozenset((x, y, v))})
        adj[u].discard(v)
        adj[v].discard(u)
        adj[x].add(y)
        adj[y].add(x)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return _relabel(n, edges, rng)


def random_connected(n: int, p: float, seed: int = 0) -> Graph:
    """Uniform random spanning tree backbone plus each other pair with
    probability p."""
    if n < 1:
        raise GraphError("random_connected needs n >= 1")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return Graph(n, sorted(edges))


def random_tree(n: int, seed: int = 0) -> Graph:
    return random_connected(n, 0.0, seed)


FAMILIES: dict[str, Callable[..., Graph]] = {
    "grid": grid,
    "maximal_outerplanar": maximal_outerplanar,
    "random_ktree": random_ktree,
    "planar_triangulation": planar_triangulation,
    "lowerbound_Gs": lowerbound_gs,
    "cycle": cycle,
    "complete": complete,
    "petersen": petersen,
    "path": path,
    "star": star,
    "fan": fan,
    "octahedron": octahedron,
    "complete_bipartite": complete_bipartite,
    "random_connected": random_connected,
    "random_tree": random_tree,
}

_SEEDED = {"maximal_outerplanar", "random_ktree", "planar_triangulation", "random_connected", "random_tree"}


def generate(family: str, params: tuple = (), seed: int = 0) -> Graph:
    """Build a graph from a named family; ``seed`` is ignored by the
    deterministic families."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    try:
        if family in _SEEDED:
            return fn(*params, seed=seed)
        return fn(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {exc}") from None
