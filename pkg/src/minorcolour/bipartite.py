"""Decompositions and colourings of graphs excluding K*_{s,t} minors.

K*_{s,t} is K_{s,t} with the s-side made a clique. Every routine here
either returns the promised structure or a branch-set certificate for the
excluded minor; certificates are checked by the oracle before they leave
the module.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from . import oracles
from .errors import BoundViolation, DecompositionError, GraphError
from .flow import menger
from .graph import Graph, bfs_distances, component_of, components, group_graph
from .lexbfs import LexSubtree, LexTree, _make_subtree, lexbfs_tree, path_pieces, subtree_to
from .minors import DecompositionOutcome, MinorModel, Pattern
from .partition import (
    Colouring,
    ConnectedPartition,
    PartTree,
    partition_colourings,
)


def _checked(g: Graph, model: MinorModel) -> MinorModel:
    check = oracles.validate_minor_model(g, model)
    if not check:
        raise BoundViolation(f"assembled {model.pattern.name} model is invalid: {check.detail}")
    return model


def _adjacent_parts(g: Graph, c: Iterable[int], owner: list[int]) -> list[int]:
    return sorted({owner[w] for v in c for w in g.adj[v] if owner[w] >= 0})


def _singleton(v: int) -> tuple[frozenset[int], PartTree, tuple[tuple[int, ...], ...]]:
    return frozenset((v,)), PartTree(v, {}, {v: 0}, lex=True), ((v,),)


def _tree_meta(s: LexSubtree) -> PartTree:
    t = s.tree
    return PartTree(
        t.root,
        {v: t.parent[v] for v in s.vertices if v != t.root},
        {v: t.layer_index[v] for v in s.vertices},
        lex=True,
    )


class _Builder:
    """Accumulates parts, their metadata and the owner map."""

    def __init__(self, n: int):
        self.owner = [-1] * n
        self.parts: list[frozenset[int]] = []
        self.trees: list[PartTree | None] = []
        self.pieces: list[tuple[tuple[int, ...], ...]] = []
        self.unassigned = set(range(n))

    def add(self, part: frozenset[int], tree: PartTree | None, pieces) -> None:
        for v in part:
            self.owner[v] = len(self.parts)
        self.parts.append(part)
        self.trees.append(tree)
        self.pieces.append(tuple(tuple(p) for p in pieces))
        self.unassigned -= part

    def next_component(self, g: Graph) -> frozenset[int]:
        return component_of(g, min(self.unassigned), self.unassigned)

    def partition(self, width: int, trees: bool = True) -> ConnectedPartition:
        return ConnectedPartition(
            tuple(self.parts), width, tuple(self.pieces), tuple(self.trees) if trees else None
        )


# -- K*_{2,t} --------------------------------------------------------------------


def decompose_k2t(g: Graph, t: int) -> DecompositionOutcome:
    """Width-1 partition into LexBFS subtrees with at most ``t-1`` leaves,
    or a K*_{2,t} model."""
    if t < 1:
        raise GraphError("decompose_k2t needs t >= 1")
    bld = _Builder(g.n)
    while bld.unassigned:
        c = bld.next_component(g)
        adjacent = _adjacent_parts(g, c, bld.owner)
        if not adjacent:
            bld.add(*_singleton(min(c)))
            continue
        if len(adjacent) > 1:
            raise BoundViolation("a component touches two earlier parts")
        h_a = bld.parts[adjacent[0]]
        a = {v for v in c if g.adj[v] & h_a}
        x = lexbfs_tree(g, min(a), c)
        s = subtree_to(x, a)
        if s.leaf_count >= t:
            leaves = sorted(s.leaves)[:t]
            model = MinorModel.of(Pattern.star_join(2, t), [h_a, s.vertices - s.leaves] + [{v} for v in leaves])
            return DecompositionOutcome(certificate=_checked(g, model))
        bld.add(s.vertices, _tree_meta(s), path_pieces(s))
    return DecompositionOutcome(partition=bld.partition(1))


def colour_k2t_defect(g: Graph, t: int) -> Colouring:
    """2-colouring with defect ``2t-2``."""
    out = decompose_k2t(g, t)
    if out.partition is None:
        raise DecompositionError(f"graph contains a K*2,{t} minor", out.certificate)
    col = partition_colourings(g, out.partition, "lex_defect")
    return replace(col, bounds={"num_colours": 2, "defect": 2 * (t - 1)})


def three_colour_k2t(g: Graph, t: int, anchor: tuple[int, int] | None = None) -> Colouring | MinorModel:
    """3-colouring with clustering ``t-1`` in which both ends of ``anchor``
    (by default the smallest edge of each component) have no neighbour of
    their own colour; or a K*_{2,t} model.

    Recursive: grow ``A ∋ v`` and ``B ∋ w`` maximally so that ``vw`` is the
    only A-B edge, let ``Z`` be the vertices adjacent to both; ``|Z| >= t``
    gives the minor, otherwise three smaller contractions are coloured and
    glued, with ``Z`` taking the colour of the contracted vertices.
    """
    if t < 2:
        raise GraphError("three_colour_k2t needs t >= 2")
    if anchor is not None:
        v, w = anchor
        if not (0 <= v < g.n and 0 <= w < g.n) or w not in g.adj[v]:
            raise GraphError(f"anchor {anchor} is not an edge")
    colour = [0] * g.n
    for comp in components(g):
        ids = sorted(comp)
        sub = group_graph(g, [[v] for v in ids])
        if anchor is not None and anchor[0] in comp:
            local = (ids.index(anchor[0]), ids.index(anchor[1]))
        else:
            local = _min_edge(sub)
        res = _three_colour(sub, local, t)
        if isinstance(res, MinorModel):
            model = MinorModel.of(res.pattern, [{ids[i] for i in b} for b in res.branch_sets])
            return _checked(g, model)
        for i, v in enumerate(ids):
            colour[v] = res[i]
    return Colouring.of(g, colour, num_colours=3, clustering=t - 1)


def _min_edge(g: Graph) -> tuple[int, int] | None:
    for v in range(g.n):
        if g.adj[v]:
            return v, min(g.adj[v])
    return None


def _lift(model: MinorModel, groups: Sequence[Iterable[int]]) -> MinorModel:
    return MinorModel.of(model.pattern, [set().union(*(groups[i] for i in b)) for b in model.branch_sets])


def _three_colour(g: Graph, anchor: tuple[int, int] | None, t: int) -> list[int] | MinorModel:
    """Core recursion on a connected graph; colours are 1..3."""
    if anchor is None:
        return [1] * g.n
    v, w = anchor
    if g.n <= t + 1:
        return [1 if u == v else 2 if u == w else 3 for u in range(g.n)]
    for x, y in ((v, w), (w, v)):
        if len(g.adj[x]) == 1:
            rest = [u for u in range(g.n) if u != x]
            sub = group_graph(g, [[u] for u in rest])
            yi = rest.index(y)
            res = _three_colour(sub, _min_edge_at(sub, yi), t)
            if isinstance(res, MinorModel):
                return _lift(res, [[u] for u in rest])
            out = [0] * g.n
            for i, u in enumerate(rest):
                out[u] = res[i]
            out[x] = 1 if res[yi] != 1 else 2
            return out
    a, b = {v}, {w}
    while True:
        grown = False
        for side, other in ((a, b), (b, a)):
            cand = sorted(u for u in range(g.n) if u not in a and u not in b and g.adj[u] & side and not g.adj[u] & other)
            if cand:
                side.add(cand[0])
                grown = True
                break
        if not grown:
            break
    z = sorted(u for u in range(g.n) if u not in a and u not in b and g.adj[u] & a and g.adj[u] & b)
    if len(z) >= t:
        return MinorModel.of(Pattern.star_join(2, t), [a, b] + [{u} for u in z[:t]])
    y = sorted(set(range(g.n)) - a - b - set(z))
    # Y has no neighbour in A or B (maximality), so dropping it from the
    # first two contractions leaves subgraphs of the contracted minors.
    groups1 = [[u] for u in sorted(a)] + [sorted(b | set(z))]
    groups2 = [[u] for u in sorted(b)] + [sorted(a | set(z))]
    groups3 = [[u] for u in y] + [sorted(a | b | set(z))]
    g1, g2, g3 = (group_graph(g, gr) for gr in (groups1, groups2, groups3))
    x1, y2, z3 = len(groups1) - 1, len(groups2) - 1, len(groups3) - 1
    v1, w2 = groups1.index([v]), groups2.index([w])
    c1 = _three_colour(g1, (v1, x1), t)
    if isinstance(c1, MinorModel):
        return _lift(c1, groups1)
    c2 = _three_colour(g2, (w2, y2), t)
    if isinstance(c2, MinorModel):
        return _lift(c2, groups2)
    c3 = _three_colour(g3, _min_edge_at(g3, z3), t)
    if isinstance(c3, MinorModel):
        return _lift(c3, groups3)
    third = ({1, 2, 3} - {c1[x1], c1[v1]}).pop()
    perm2 = {c2[y2]: c1[x1], c2[w2]: third}
    perm2[({1, 2, 3} - set(perm2)).pop()] = ({1, 2, 3} - set(perm2.values())).pop()
    perm3 = {c3[z3]: c1[x1]}
    rest3 = sorted({1, 2, 3} - {c3[z3]})
    free3 = sorted({1, 2, 3} - {c1[x1]})
    perm3.update(zip(rest3, free3))
    out = [0] * g.n
    for i, grp in enumerate(groups1[:-1]):
        out[grp[0]] = c1[i]
    for i, grp in enumerate(groups2[:-1]):
        out[grp[0]] = perm2[c2[i]]
    for i, grp in enumerate(groups3[:-1]):
        out[grp[0]] = perm3[c3[i]]
    for u in z:
        out[u] = c1[x1]
    return out


def _min_edge_at(g: Graph, v: int) -> tuple[int, int] | None:
    if not g.adj[v]:
        return None
    return v, min(g.adj[v])


# -- Separators ---------------------------------------------------------------------


@dataclass(frozen=True)
class SeparatorOutcome:
    """Either a LexBFS subtree separating A from B or a K_{1,t} model whose
    branch sets all meet both A and B."""

    subtree: LexSubtree | None = None
    certificate: MinorModel | None = None

    def __post_init__(self):
        if (self.subtree is None) == (self.certificate is None):
            raise ValueError("exactly one of subtree and certificate must be given")


def separates(g: Graph, a: set[int], b: set[int], sep: Iterable[int], within: Iterable[int]) -> bool:
    """Whether ``sep`` contains ``A ∩ B`` and meets every A-B path of
    ``g[within]``."""
    sep = set(sep)
    allowed = set(within) - sep
    if (a & b) - sep:
        return False
    reach = bfs_distances(g, a & allowed, allowed)
    return not (set(reach) & b)


def _tree_of(x: LexTree, leaves: Iterable[int]) -> LexSubtree:
    leaves = set(leaves)
    if not leaves:
        return _make_subtree(x, {x.root})
    return subtree_to(x, leaves)


def separator_ab(g: Graph, a: Iterable[int], b: Iterable[int], t: int, within: Iterable[int] | None = None) -> SeparatorOutcome:
    """LexBFS subtree with at most ``2t+1`` leaves that meets A and B and
    separates them inside ``g[within]``, or a K_{1,t} model with every
    branch set meeting both A and B.

    The leaf set L starts as B and is shrunk by a descent: each round
    contracts the leaf paths, computes a minimum A-B separator in what is
    left, and either finds ``t+1`` disjoint A-B paths (the minor) or a
    strictly smaller leaf set while ``|L| > 2t``.
    """
    c = set(range(g.n)) if within is None else set(within)
    a, b = set(a) & c, set(b) & c
    if not a or not b:
        raise GraphError("separator_ab needs non-empty A and B inside the vertex set")
    if t < 1:
        raise GraphError("separator_ab needs t >= 1")
    x = lexbfs_tree(g, min(a), c)
    ok = lambda leaves: separates(g, a, b, _tree_of(x, leaves).vertices, c)  # noqa: E731
    tl = _shrink(x, set(b), ok)
    while True:
        # The flow is run even once |L| <= 2t, so that t+1 disjoint paths
        # through the leaf paths are reported as a minor whenever present.
        res = _descent_step(g, x, tl, a, b, t, c)
        if isinstance(res, MinorModel):
            return SeparatorOutcome(certificate=res)
        if tl.leaf_count <= 2 * t:
            break
        if res.leaf_count >= tl.leaf_count:
            raise BoundViolation("separator descent did not shrink the leaf set")
        tl = _shrink(x, set(res.leaves), ok)
    if not tl.vertices & b:
        hops = {}
        for v in b:
            u, k = v, 0
            while u not in tl.vertices:
                u, k = x.parent[u], k + 1
            hops[v] = k
        target = min(b, key=lambda v: (hops[v], v))
        tl = _tree_of(x, set(tl.leaves) | {target})
    if not separates(g, a, b, tl.vertices, c) or not (tl.vertices & a and tl.vertices & b):
        raise BoundViolation("separator subtree does not separate A and B")
    if tl.leaf_count > 2 * t + 1:
        raise BoundViolation(f"separator subtree has {tl.leaf_count} > {2 * t + 1} leaves")
    return SeparatorOutcome(subtree=tl)


def _shrink(x: LexTree, leaves: set[int], ok) -> LexSubtree:
    """Reduce to the leaves of the spanned subtree, then drop leaves
    (largest id first) while the subtree keeps separating."""
    cur = _tree_of(x, leaves)
    if not ok(cur.leaves):
        raise BoundViolation("initial leaf set does not separate")
    changed = True
    while changed:
        changed = False
        for v in sorted(cur.leaves, reverse=True):
            trial = set(cur.leaves) - {v}
            if ok(trial):
                cur = _tree_of(x, trial)
                changed = True
                break
    return cur


def _descent_step(g, x: LexTree, tl: LexSubtree, a, b, t, c) -> LexSubtree | MinorModel:
    verts = tl.vertices
    kids: dict[int, int] = {v: 0 for v in verts}
    for v in verts:
        if v != x.root:
            kids[x.parent[v]] += 1

    def deg(v: int) -> int:
        return kids[v] + (0 if v == x.root else 1)

    leaf_path: dict[int, list[int]] = {}
    p: dict[int, int] = {}
    for leaf in sorted(tl.leaves):
        path = [leaf]
        u = x.parent[leaf]
        while u != x.root and deg(u) < 3:
            path.append(u)
            u = x.parent[u]
        leaf_path[leaf] = path
        p[leaf] = u
    in_paths = {u for path in leaf_path.values() for u in path}
    t0 = verts - in_paths
    leaves = sorted(tl.leaves)
    outside = sorted(c - verts)
    groups = [leaf_path[v] for v in leaves] + [[u] for u in outside]
    h = group_graph(g, groups)
    ha = [i for i, grp in enumerate(groups) if set(grp) & a]
    hb = [i for i, grp in enumerate(groups) if set(grp) & b]
    res = menger(h, ha, hb, limit=t + 1)
    if len(res.paths) >= t + 1:
        sets = []
        for path in res.paths[: t + 1]:
            sets.append(set().union(*(groups[i] for i in path)))
        hub = sets[t] | t0
        model = MinorModel.of(Pattern.star(t), [hub] + sets[:t])
        _checked(g, model)
        if any(not (s & a and s & b) for s in model.branch_sets):
            raise BoundViolation("K1,t branch set misses A or B")
        return model
    if res.separator is None:
        raise BoundViolation("flow stopped below the limit without a separator")
    sep = res.separator
    s1 = {leaves[i] for i in sep if i < len(leaves)}
    s2 = {groups[i][0] for i in sep if i >= len(leaves)}
    # Leaves of T_0: every such vertex is p_x for at least two leaves x.
    t0_kids = {v: 0 for v in t0}
    for v in t0:
        if v != x.root:
            t0_kids[x.parent[v]] += 1
    covered = {p[v] for v in s1}
    z = {v for v in t0 if v != x.root and t0_kids[v] == 0 and v not in covered}
    new = _tree_of(x, s1 | s2 | z)
    if not separates(g, a, b, new.vertices, c):
        raise BoundViolation("descent step lost separation")
    return new


# -- K*_{3,t} ------------------------------------------------------------------------


def decompose_k3t(g: Graph, t: int) -> DecompositionOutcome:
    """Width-2 partition into LexBFS subtrees with at most ``2t+1`` leaves,
    or a K*_{3,t} model."""
    if t < 1:
        raise GraphError("decompose_k3t needs t >= 1")
    bld = _Builder(g.n)
    while bld.unassigned:
        c = bld.next_component(g)
        adjacent = _adjacent_parts(g, c, bld.owner)
        if not adjacent:
            bld.add(*_singleton(min(c)))
            continue
        if len(adjacent) == 1:
            h_a = bld.parts[adjacent[0]]
            bld.add(*_singleton(min(v for v in c if g.adj[v] & h_a)))
            continue
        if len(adjacent) > 2:
            raise BoundViolation("a component touches three earlier parts")
        h_a, h_b = (bld.parts[i] for i in adjacent)
        a = {v for v in c if g.adj[v] & h_a}
        b = {v for v in c if g.adj[v] & h_b}
        sep = separator_ab(g, a, b, t, c)
        if sep.certificate is not None:
            hub, *spokes = sep.certificate.branch_sets
            model = MinorModel.of(Pattern.star_join(3, t), [h_a, h_b, hub] + list(spokes))
            return DecompositionOutcome(certificate=_checked(g, model))
        s = sep.subtree
        bld.add(s.vertices, _tree_meta(s), path_pieces(s))
    return DecompositionOutcome(partition=bld.partition(2))


K3T_MODES = ("defect", "clustered6", "layered6")


def colour_k3t(g: Graph, t: int, mode: str) -> Colouring:
    """3 colours with defect ``4t+2``, 6 colours with clustering ``2t+1``,
    or (``layered6``) 6 colours with clustering ``t-1`` from 3-colouring
    each BFS layer."""
    if mode not in K3T_MODES:
        raise GraphError(f"unknown mode {mode!r}; choose from {K3T_MODES}")
    if mode == "layered6":
        res = _layered6(g, t)
        if isinstance(res, MinorModel):
            raise DecompositionError(f"graph contains a K*3,{t} minor", res)
        return res
    out = decompose_k3t(g, t)
    if out.partition is None:
        raise DecompositionError(f"graph contains a K*3,{t} minor", out.certificate)
    if mode == "defect":
        col = partition_colourings(g, out.partition, "lex_defect")
        return replace(col, bounds={"num_colours": 3, "defect": 4 * t + 2})
    col = partition_colourings(g, out.partition, "clustered")
    return replace(col, bounds={"num_colours": 6, "clustering": 2 * t + 1})


def _layered6(g: Graph, t: int) -> Colouring | MinorModel:
    colour = [0] * g.n
    for comp in components(g):
        dist = bfs_distances(g, min(comp), comp)
        depth = max(dist.values())
        layers = [sorted(v for v in comp if dist[v] == i) for i in range(depth + 1)]
        for i, layer in enumerate(layers):
            sub = group_graph(g, [[v] for v in layer])
            res = three_colour_k2t(sub, t)
            if isinstance(res, MinorModel):
                ball = {v for v in comp if dist[v] < i}
                hubs, leaves = res.branch_sets[:2], res.branch_sets[2:]
                sets = [{layer[j] for j in s} for s in hubs] + [ball] + [{layer[j] for j in s} for s in leaves]
                return _checked(g, MinorModel.of(Pattern.star_join(3, t), sets))
            for j, v in enumerate(layer):
                colour[v] = 3 * (i % 2) + res.colour[j]
    return Colouring.of(g, colour, num_colours=6, clustering=t - 1)


# -- K*_{s,t} --------------------------------------------------------------------------


def _minimal_bfs_subtree(g: Graph, root: int, within: set[int], targets: list[set[int]]) -> LexSubtree | None:
    """Inclusion-minimal subtree of a BFS tree of ``g[within]`` rooted at
    ``root`` that meets every target set; None if some target is
    unreachable."""
    comp = component_of(g, root, within)
    if any(not (tg & comp) for tg in targets):
        return None
    x = lexbfs_tree(g, root, comp)
    picks = {min(tg & comp, key=lambda v: (x.layer_index[v], v)) for tg in targets}
    cur = subtree_to(x, picks) if picks - {root} else _make_subtree(x, {root})
    changed = True
    while changed:
        changed = False
        for leaf in sorted(cur.leaves, reverse=True):
            trial = cur.vertices - {leaf}
            if all(tg & trial for tg in targets):
                cur = _make_subtree(x, trial)
                changed = True
                break
    return cur


def decompose_kst(g: Graph, s: int, t: int) -> DecompositionOutcome:
    """Width-s partition whose parts are unions of at most ``s(t-1)``
    shortest paths, or a K*_{s,t} model."""
    if s < 1 or t < s:
        raise GraphError("decompose_kst needs 1 <= s <= t")
    bld = _Builder(g.n)
    while bld.unassigned:
        c = bld.next_component(g)
        adjacent = _adjacent_parts(g, c, bld.owner)
        if not adjacent:
            bld.add(*_singleton(min(c)))
            continue
        if len(adjacent) > s:
            raise BoundViolation(f"a component touches more than {s} earlier parts")
        targets = [{v for v in c if g.adj[v] & bld.parts[q]} for q in adjacent]
        f1 = _minimal_bfs_subtree(g, min(targets[0]), set(c), targets)
        forest = [f1]
        if len(adjacent) == s:
            used = set(f1.vertices)
            while len(forest) < t:
                rest = set(c) - used
                nxt = None
                for v in sorted(u for u in rest if g.adj[u] & used):
                    nxt = _minimal_bfs_subtree(g, v, rest, targets)
                    if nxt is not None:
                        break
                if nxt is None:
                    break
                forest.append(nxt)
                used |= nxt.vertices
            if len(forest) >= t:
                sets = [bld.parts[q] for q in adjacent] + [f.vertices for f in forest[:t]]
                model = MinorModel.of(Pattern.star_join(s, t), sets)
                return DecompositionOutcome(certificate=_checked(g, model))
        part = frozenset().union(*(f.vertices for f in forest))
        pieces = [p for f in forest for p in path_pieces(f)]
        tree = _tree_meta(f1) if len(forest) == 1 else None
        bld.add(part, tree, pieces)
    return DecompositionOutcome(partition=bld.partition(s, trees=False))
