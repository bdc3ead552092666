"""Brute-force and from-the-definition verifiers.

Nothing here calls into the constructive modules; traversals are
reimplemented locally so that a bug in a shared helper cannot hide a bug in
an algorithm. Exponential routines enforce hard size caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .errors import GraphError, OracleLimitError
from .graph import Graph
from .minors import MinorModel, Pattern

MINOR_CAP = 14
TREEWIDTH_CAP = 12
CLUSTER_ENUM_CAP = 1 << 16


def _flood(g: Graph, start: int, allowed) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _connected(g: Graph, verts) -> bool:
    verts = set(verts)
    return bool(verts) and len(_flood(g, next(iter(verts)), verts)) == len(verts)


# -- minor models ---------------------------------------------------------------


@dataclass(frozen=True)
class ModelCheck:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_minor_model(g: Graph, m: MinorModel) -> ModelCheck:
    """Disjoint, connected branch sets with every pattern edge realised."""
    sets = m.branch_sets
    if len(sets) != m.pattern.order:
        return ModelCheck(False, f"expected {m.pattern.order} branch sets, got {len(sets)}")
    seen: set[int] = set()
    for i, b in enumerate(sets):
        if not b:
            return ModelCheck(False, f"branch set {i} is empty")
        if any(not 0 <= v < g.n for v in b):
            return ModelCheck(False, f"branch set {i} has out-of-range vertices")
        if seen & b:
            return ModelCheck(False, f"branch set {i} overlaps an earlier branch set")
        seen |= b
        if not _connected(g, b):
            return ModelCheck(False, f"branch set {i} is not connected")
    for i, j in m.pattern.edges():
        if not any(g.adj[v] & sets[j] for v in sets[i]):
            return ModelCheck(False, f"branch sets {i} and {j} are not adjacent")
    return ModelCheck(True)


def _quotient_realises(adj: list[int], pattern: Pattern) -> list[int] | None:
    """Assignment of blocks to pattern vertices (block index per pattern
    vertex) if the block quotient with bitmask adjacency ``adj`` contains the
    pattern, else None."""
    h = len(adj)
    full = (1 << h) - 1
    if pattern.kind == "K":
        if all(adj[i] | (1 << i) == full for i in range(h)):
            return list(range(h))
        return None
    if pattern.kind == "K*":
        hubs = [i for i in range(h) if adj[i] | (1 << i) == full]
        if len(hubs) >= pattern.s:
            hubs = hubs[: pattern.s]
            return hubs + [i for i in range(h) if i not in hubs]
        return None
    if pattern.kind == "Kbip":
        for side in combinations(range(h), pattern.s):
            other = [i for i in range(h) if i not in side]
            mask = sum(1 << j for j in other)
            if all(adj[i] & mask == mask for i in side):
                return list(side) + other
        return None
    edges = pattern.edges()
    for perm in permutations(range(h)):
        if all(adj[perm[a]] >> perm[b] & 1 for a, b in edges):
            return list(perm)
    return None


def has_minor(g: Graph, pattern: Pattern) -> MinorModel | None:
    """Exhaustive minor search (``n <= 14``).

    Within a connected host every model extends to one whose branch sets
    partition the vertex set, so it suffices to enumerate partitions of each
    component into ``h`` connected blocks and test each quotient.
    """
    if g.n > MINOR_CAP:
        raise OracleLimitError(f"has_minor is capped at n <= {MINOR_CAP}")
    h = pattern.order
    if h == 0:
        return MinorModel.of(pattern, [])
    reduced, absorbed = _reduce(g, _min_degree(pattern))
    found = _search(reduced, pattern)
    if found is None:
        return None
    return MinorModel.of(pattern, [set().union(*(absorbed[v] for v in b)) for b in found.branch_sets])


def _min_degree(pattern: Pattern) -> int:
    deg = [0] * pattern.order
    for i, j in pattern.edges():
        deg[i] += 1
        deg[j] += 1
    return min(deg, default=0)


def _reduce(g: Graph, mindeg: int) -> tuple[Graph, list[set[int]]]:
    """Shrink ``g`` without changing which patterns of minimum degree
    ``mindeg`` it contains: degree-1 vertices are deleted when
    ``mindeg >= 2`` and degree-2 vertices are contracted into a neighbour
    when ``mindeg >= 3``. Returns the reduced graph and, per reduced vertex,
    the original vertices it stands for."""
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    owns = {v: {v} for v in range(g.n)}
    changed = mindeg >= 2
    while changed:
        changed = False
        for v in sorted(adj):
            d = len(adj[v])
            if d <= 1 and mindeg >= 2 and len(adj) > 1:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v], owns[v]
                changed = True
            elif d == 2 and mindeg >= 3:
                a, b = sorted(adj[v])
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                owns[a] |= owns.pop(v)
                del adj[v]
                changed = True
    keep = sorted(adj)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[w]) for u in keep for w in adj[u] if u < w]
    return Graph(len(keep), edges), [owns[v] for v in keep]


def _search(g: Graph, pattern: Pattern) -> MinorModel | None:
    h = pattern.order
    remaining = set(range(g.n))
    while remaining:
        comp = sorted(_flood(g, min(remaining), remaining))
        remaining -= set(comp)
        if len(comp) < h:
            continue
        found = _search_component(g, comp, pattern)
        if found is not None:
            return found
    return None


def _search_component(g: Graph, comp: list[int], pattern: Pattern) -> MinorModel | None:
    k = len(comp)
    h = pattern.order
    index = {v: i for i, v in enumerate(comp)}
    nbr = [sum(1 << index[w] for w in g.adj[v]) for v in comp]
    need_edges = len(pattern.edges())
    mindeg = _min_degree(pattern)

    def n_components(mask: int) -> int:
        count = 0
        while mask:
            seed = mask & -mask
            comp_mask = seed
            frontier = seed
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                new = nbr[b.bit_length() - 1] & mask & ~comp_mask
                comp_mask |= new
                frontier |= new
            mask &= ~comp_mask
            count += 1
        return count

    def grow(s: int, ext: int, forbidden: int, allowed: int):
        yield s
        ext &= ~forbidden
        while ext:
            v = ext & -ext
            ext ^= v
            nxt = (ext | nbr[v.bit_length() - 1]) & allowed & ~s & ~v & ~forbidden
            yield from grow(s | v, nxt, forbidden, allowed)
            forbidden |= v

    def block_adj(blocks: list[int]) -> list[int]:
        adj = []
        for b in blocks:
            nb = 0
            m = b
            while m:
                bit = m & -m
                m ^= bit
                nb |= nbr[bit.bit_length() - 1]
            adj.append(sum(1 << j for j, c in enumerate(blocks) if c != b and c & nb))
        return adj

    def degrees_possible(blocks: list[int], rest: int, left: int) -> bool:
        # a block must still be able to reach the pattern's minimum degree
        adj = block_adj(blocks)
        for b, a in zip(blocks, adj):
            bound = bin(a).count("1")
            if neighbours_of(b) & rest:
                bound += left
            if bound < mindeg:
                return False
        return True

    def neighbours_of(mask: int) -> int:
        nb = 0
        while mask:
            bit = mask & -mask
            mask ^= bit
            nb |= nbr[bit.bit_length() - 1]
        return nb

    def rec(unassigned: int, blocks: list[int]):
        if len(blocks) == h - 1:
            if n_components(unassigned) == 1:
                final = blocks + [unassigned]
                adj = block_adj(final)
                if sum(bin(a).count("1") for a in adj) // 2 >= need_edges:
                    assign = _quotient_realises(adj, pattern)
                    if assign is not None:
                        return [final[i] for i in assign]
            return None
        u = unassigned & -unassigned
        left = h - len(blocks) - 1
        for b in grow(u, nbr[u.bit_length() - 1] & unassigned, 0, unassigned):
            rest = unassigned & ~b
            if rest == 0 or bin(rest).count("1") < left:
                continue
            if n_components(rest) > left:
                continue
            if mindeg and not degrees_possible(blocks + [b], rest, left):
                continue
            found = rec(rest, blocks + [b])
            if found is not None:
                return found
        return None

    if h == 1:
        return MinorModel.of(pattern, [[comp[0]]])
    found = rec((1 << k) - 1, [])
    if found is None:
        return None
    sets = [[comp[i] for i in range(k) if mask >> i & 1] for mask in found]
    return MinorModel.of(pattern, sets)


# -- colourings ---------------------------------------------------------------------


@dataclass(frozen=True)
class ColouringMetrics:
    num_colours: int
    defect: int
    clustering: int


def _colour_seq(g: Graph, colour) -> list[int]:
    seq = getattr(colour, "colour", colour)
    if isinstance(seq, Mapping):
        seq = [seq[v] for v in range(g.n)]
    seq = list(seq)
    if len(seq) != g.n:
        raise GraphError("colouring does not cover every vertex")
    return seq


def monochromatic_components(g: Graph, colour) -> list[set[int]]:
    seq = _colour_seq(g, colour)
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if seq[w] == seq[v] and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(comp)
    return out


def validate_colouring(g: Graph, colour) -> ColouringMetrics:
    """Number of colours, defect and clustering recomputed from scratch."""
    seq = _colour_seq(g, colour)
    if g.n == 0:
        return ColouringMetrics(0, 0, 0)
    defect = max(sum(1 for w in g.adj[v] if seq[w] == seq[v]) for v in range(g.n))
    clustering = max(len(c) for c in monochromatic_components(g, seq))
    return ColouringMetrics(len(set(seq)), defect, clustering)


def is_linear_forest(g: Graph, verts: Iterable[int]) -> bool:
    """Whether ``g[verts]`` is a disjoint union of paths."""
    verts = set(verts)
    degs = [len(g.adj[v] & verts) for v in verts]
    if any(d > 2 for d in degs):
        return False
    edges = sum(degs) // 2
    comps = 0
    rest = set(verts)
    while rest:
        rest -= _flood(g, next(iter(rest)), verts)
        comps += 1
    return edges == len(verts) - comps


def exhaustive_cluster_colourable(g: Graph, k: int, c: int) -> bool:
    """Whether some k-colouring has every monochromatic component of order
    at most c (backtracking over ``k**n`` colourings)."""
    if k < 1 or c < 0:
        raise GraphError("need k >= 1 and c >= 0")
    if g.n == 0:
        return True
    if k > 1 and k ** g.n > CLUSTER_ENUM_CAP:
        raise OracleLimitError(f"k**n exceeds {CLUSTER_ENUM_CAP}")
    if c == 0:
        return False
    order = []
    seen: set[int] = set()
    for s in range(g.n):
        if s in seen:
            continue
        queue = [s]
        seen.add(s)
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(g.adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    colour = [0] * g.n

    def comp_size(v: int) -> int:
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if colour[w] == colour[v] and w not in comp:
                    comp.add(w)
                    stack.append(w)
                    if len(comp) > c:
                        return len(comp)
        return len(comp)

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for col in range(1, min(k, used + 1) + 1):
            colour[v] = col
            if comp_size(v) <= c and rec(i + 1, max(used, col)):
                return True
        colour[v] = 0
        return False

    return rec(0, 0)


# -- chordality, treewidth, bandwidth, degeneracy ------------------------------------------


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    peo: tuple[int, ...] | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal

    @property
    def max_clique(self) -> int:
        """Clique number, read off the elimination ordering."""
        if self.peo is None:
            raise GraphError("clique number only available for chordal graphs")
        return self._clique

    _clique: int = 0


def _chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for a, b in combinations(nb, 2):
            if b in g.adj[a]:
                continue
            blocked = (g.adj[v] | {v}) - {a, b}
            allowed = set(range(g.n)) - blocked
            prev = {a: None}
            queue = [a]
            while queue:
                u = queue.pop(0)
                if u == b:
                    break
                for w in sorted(g.adj[u]):
                    if w in allowed and w not in prev:
                        prev[w] = u
                        queue.append(w)
            if b in prev:
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return (v,) + tuple(reversed(path))
    return None


def is_chordal(g: Graph) -> ChordalityResult:
    """Maximum cardinality search, then a perfect elimination check.

    A non-chordal graph gets a chordless cycle of length >= 4 as witness.
    """
    weight = [0] * g.n
    numbered: list[int] = []
    done = [False] * g.n
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        numbered.append(v)
        for w in g.adj[v]:
            if not done[w]:
                weight[w] += 1
    peo = numbered[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    clique = 1 if g.n else 0
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        clique = max(clique, len(later) + 1)
        if later:
            p = min(later, key=pos.__getitem__)
            if any(w != p and w not in g.adj[p] for w in later):
                return ChordalityResult(False, None, _chordless_cycle(g))
    return ChordalityResult(True, tuple(peo), None, clique)


def max_clique_size(g: Graph) -> int:
    """Clique number by brute force (small graphs)."""
    best = 1 if g.n else 0
    order = list(range(g.n))

    def extend(clique: list[int], cands: set[int]):
        nonlocal best
        best = max(best, len(clique))
        for v in sorted(cands):
            if len(clique) + len(cands) <= best:
                return
            extend(clique + [v], {w for w in cands if w > v and w in g.adj[v]})

    extend([], set(order))
    return best


def exact_treewidth(g: Graph) -> int:
    """Exact treewidth by dynamic programming over vertex subsets
    (``n <= 12``). Returns -1 for the empty graph."""
    n = g.n
    if n > TREEWIDTH_CAP:
        raise OracleLimitError(f"exact_treewidth is capped at n <= {TREEWIDTH_CAP}")
    nbr = [sum(1 << w for w in g.adj[v]) for v in range(n)]

    def q_size(s: int, v: int) -> int:
        # vertices outside s+v reachable from v through s
        seen = 1 << v
        frontier = 1 << v
        out = 0
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            nb = nbr[b.bit_length() - 1] & ~seen
            seen |= nb
            out |= nb & ~s
            frontier |= nb & s
        return bin(out).count("1")

    @lru_cache(maxsize=None)
    def tw(s: int) -> int:
        if s == 0:
            return -1
        best = n
        m = s
        while m:
            b = m & -m
            m ^= b
            rest = s ^ b
            best = min(best, max(tw(rest), q_size(rest, b.bit_length() - 1)))
        return best

    return tw((1 << n) - 1)


def treewidth_by_orders(g: Graph) -> int:
    """Treewidth as the minimum elimination width over all orderings
    (``n <= 8``); a second, slower oracle."""
    if g.n > 8:
        raise OracleLimitError("treewidth_by_orders is capped at n <= 8")
    if g.n == 0:
        return -1
    best = g.n
    for order in permutations(range(g.n)):
        adj = [set(a) for a in g.adj]
        width = 0
        alive = set(range(g.n))
        for v in order:
            nb = adj[v] & alive
            width = max(width, len(nb))
            for a, b in combinations(nb, 2):
                adj[a].add(b)
                adj[b].add(a)
            alive.discard(v)
            if width >= best:
                break
        best = min(best, width)
    return best


def bandwidth_of_ordering(g: Graph, order: Sequence[int]) -> int:
    order = list(getattr(order, "order", order))
    if sorted(order) != list(range(g.n)):
        raise GraphError("ordering is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    return max((abs(pos[u] - pos[v]) for u in range(g.n) for v in g.adj[u]), default=0)


def bandwidth_within(g: Graph, order: Sequence[int]) -> int:
    """Bandwidth of ``order`` as an ordering of the induced subgraph on its
    own vertices."""
    pos = {v: i for i, v in enumerate(order)}
    return max((abs(pos[u] - pos[v]) for u in order for v in g.adj[u] if v in pos), default=0)


def degeneracy(g: Graph) -> int:
    alive = set(range(g.n))
    deg = [len(a) for a in g.adj]
    best = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        best = max(best, deg[v])
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return best


# -- reachability by explicit path enumeration -------------------------------------------


def reach_by_paths(g: Graph, order: Sequence[int], v: int, r: int, strong: bool) -> set[int]:
    """Strong (``strong=True``) or weak r-reachability set of ``v``,
    computed by enumerating every simple path of length at most ``r`` that
    starts at ``v``."""
    pos = {u: i for i, u in enumerate(getattr(order, "order", order))}
    out = {v}

    def walk(path: list[int]):
        last = path[-1]
        if len(path) > 1 and pos[last] <= pos[v]:
            inner = path[1:-1]
            if strong:
                ok = all(pos[w] > pos[v] for w in inner)
            else:
                ok = all(pos[w] > pos[last] for w in inner)
            if ok:
                out.add(last)
        if len(path) - 1 == r:
            return
        for w in g.adj[last]:
            if w not in path:
                walk(path + [w])

    walk([v])
    return out


def separates(g: Graph, a: Iterable[int], b: Iterable[int], sep: Iterable[int], within: Iterable[int] | None = None) -> bool:
    """Whether every a-b path in ``g[within]`` meets ``sep``."""
    allowed = set(range(g.n)) if within is None else set(within)
    sep = set(sep)
    a, b = set(a) & allowed, set(b) & allowed
    if (a & b) - sep:
        return False
    free = allowed - sep
    seen: set[int] = set()
    for s in a - sep:
        if s in seen:
            continue
        comp = _flood(g, s, free)
        if comp & b:
            return False
        seen |= comp
    return True


def components_within(g: Graph, verts: Iterable[int]) -> list[set[int]]:
    """Components of ``g[verts]``, each found by a local flood fill."""
    rest = set(verts)
    out = []
    while rest:
        comp = _flood(g, min(rest), rest)
        rest -= comp
        out.append(comp)
    return out
