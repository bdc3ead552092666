from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorcolour import generators, oracles
from minorcolour.bipartite import (
    K3T_MODES,
    colour_k2t_defect,
    colour_k3t,
    decompose_k2t,
    decompose_k3t,
    decompose_kst,
    separator_ab,
    three_colour_k2t,
)
from minorcolour.errors import DecompositionError, GraphError
from minorcolour.graph import Graph, bfs_distances
from minorcolour.minors import MinorModel, Pattern
from minorcolour.partition import part_pieces_are_geodesic, validate_partition

from conftest import connected_graphs, outerplanar, planar_sparse, triangulations


def anchor_isolated(g: Graph, colour, anchor) -> bool:
    return all(colour[u] != colour[v] for v in anchor for u in g.adj[v])


# -- K*2,t ------------------------------------------------------------------------


def test_c6_partition():
    g = generators.cycle(6)
    p = decompose_k2t(g, 2).partition
    assert validate_partition(g, p).width <= 1
    assert p.max_leaves <= 1
    assert p.parts == (frozenset({0}), frozenset({1, 2, 3, 4, 5}))


def test_k4_certificate():
    out = decompose_k2t(generators.complete(4), 2)
    assert out.certificate.pattern == Pattern.star_join(2, 2)
    assert oracles.validate_minor_model(generators.complete(4), out.certificate)


def test_fan():
    g = generators.fan(6)
    p = decompose_k2t(g, 3).partition
    assert validate_partition(g, p).width <= 1 and p.max_leaves <= 2
    col = colour_k2t_defect(g, 3)
    assert col.num_colours <= 2 and col.defect <= 4
    res = three_colour_k2t(g, 3)
    assert isinstance(res, type(col))
    assert res.num_colours <= 3 and res.clustering <= 2
    assert anchor_isolated(g, res.colour, (0, min(g.adj[0])))


def test_small_colourings():
    col = colour_k2t_defect(generators.cycle(6), 2)
    assert col.num_colours <= 2 and col.defect <= 2
    col = colour_k2t_defect(generators.path(5), 2)
    assert col.num_colours <= 2 and col.defect <= 2
    res = three_colour_k2t(generators.complete(3), 2, anchor=(0, 1))
    assert res.clustering == 1 and res.num_colours == 3
    res = three_colour_k2t(generators.complete(4), 2)
    assert isinstance(res, MinorModel) and res.pattern == Pattern.star_join(2, 2)


def test_three_colour_arguments():
    with pytest.raises(GraphError):
        three_colour_k2t(generators.path(3), 1)
    with pytest.raises(GraphError):
        three_colour_k2t(generators.path(3), 3, anchor=(0, 2))


def test_k2t_defect_raises_with_model():
    with pytest.raises(DecompositionError) as exc:
        colour_k2t_defect(generators.complete(5), 3)
    assert oracles.validate_minor_model(generators.complete(5), exc.value.model)


@pytest.mark.parametrize("idx", range(0, 50, 5))
def test_outerplanar_three_colouring(idx):
    g = outerplanar()[idx]
    assert oracles.has_minor(g, Pattern.star_join(2, 3)) is None
    for anchor in [None] + [e for e in g.edges()[:3]]:
        res = three_colour_k2t(g, 3, anchor)
        assert not isinstance(res, MinorModel)
        a = anchor or (0, min(g.adj[0]))
        assert res.num_colours <= 3 and res.clustering <= 2 and anchor_isolated(g, res.colour, a)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=30), st.integers(2, 5))
def test_three_colour_refute_or_colour(g, t):
    res = three_colour_k2t(g, t)
    if isinstance(res, MinorModel):
        assert oracles.validate_minor_model(g, res)
        return
    assert res.num_colours <= 3 and res.clustering <= t - 1
    assert anchor_isolated(g, res.colour, (0, min(g.adj[0])))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=35), st.integers(2, 5))
def test_k2t_refute_or_decompose(g, t):
    out = decompose_k2t(g, t)
    if out.certificate is not None:
        assert oracles.validate_minor_model(g, out.certificate)
        return
    p = out.partition
    assert validate_partition(g, p).width <= 1
    assert p.max_leaves <= t - 1 and part_pieces_are_geodesic(g, p)


# -- separator ------------------------------------------------------------------------


def test_separator_path():
    out = separator_ab(generators.path(3), {0}, {2}, 2)
    assert out.subtree.vertices == {0, 1, 2} and out.subtree.leaf_count <= 5


def test_separator_grid_columns():
    g = generators.grid(3, 3)
    a, b = {0, 3, 6}, {2, 5, 8}
    out = separator_ab(g, a, b, 2)
    sep = out.subtree.vertices
    assert out.subtree.leaf_count <= 5
    reach = bfs_distances(g, a - sep, set(range(9)) - sep)
    assert not set(reach) & b


def test_separator_star_certificate():
    g = Graph(11, [(0, i) for i in range(1, 6)] + [(i, i + 5) for i in range(1, 6)])
    a, b = set(range(6)), set(range(6, 11))
    out = separator_ab(g, a, b, 4)
    m = out.certificate
    assert m.pattern == Pattern.star(4) and oracles.validate_minor_model(g, m)
    assert all(s & a and s & b for s in m.branch_sets)


@settings(max_examples=80, deadline=None)
@given(connected_graphs(min_n=2, max_n=40), st.data())
def test_separator_properties(g, data):
    t = data.draw(st.integers(1, 4))
    a = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=8))
    b = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=8))
    out = separator_ab(g, a, b, t)
    if out.certificate is not None:
        m = out.certificate
        assert oracles.validate_minor_model(g, m)
        assert all(s & a and s & b for s in m.branch_sets)
        return
    sep = out.subtree.vertices
    assert out.subtree.leaf_count <= 2 * t + 1
    assert sep & a and sep & b
    assert oracles.separates(g, a, b, sep)


# -- K*3,t ------------------------------------------------------------------------


def test_octahedron_k3t():
    g = generators.octahedron()
    p = decompose_k3t(g, 3).partition
    assert validate_partition(g, p).width <= 2 and p.max_leaves <= 7
    col = colour_k3t(g, 3, "defect")
    assert col.num_colours <= 3 and col.defect <= 14


def test_k7_certificate():
    out = decompose_k3t(generators.complete(7), 3)
    assert out.certificate.pattern == Pattern.star_join(3, 3)
    assert oracles.validate_minor_model(generators.complete(7), out.certificate)


def test_grid_k3t():
    g = generators.grid(4, 4)
    p = decompose_k3t(g, 3).partition
    assert validate_partition(g, p).width <= 2
    col = colour_k3t(g, 3, "layered6")
    assert col.num_colours <= 6 and col.clustering <= 2


@pytest.mark.parametrize("mode", K3T_MODES)
def test_single_vertex(mode):
    col = colour_k3t(Graph(1), 3, mode)
    assert (col.num_colours, col.defect, col.clustering) == (1, 0, 1)


def test_planar_k3t_corpus():
    for g in planar_sparse(15) + triangulations(10):
        p = decompose_k3t(g, 3).partition
        assert p is not None
        assert validate_partition(g, p).width <= 2 and p.max_leaves <= 7
        assert part_pieces_are_geodesic(g, p)
        for mode in K3T_MODES:
            colour_k3t(g, 3, mode).check()


@settings(max_examples=50, deadline=None)
@given(connected_graphs(max_n=35), st.integers(1, 4), st.sampled_from(K3T_MODES))
def test_k3t_refute_or_colour(g, t, mode):
    if mode == "layered6" and t < 2:
        t = 2
    try:
        col = colour_k3t(g, t, mode)
    except DecompositionError as exc:
        assert exc.model.pattern == Pattern.star_join(3, t)
        assert oracles.validate_minor_model(g, exc.model)
        return
    col.check()


# -- K*s,t ------------------------------------------------------------------------


def test_p6_kst():
    g = generators.path(6)
    p = decompose_kst(g, 1, 3).partition
    assert validate_partition(g, p).width <= 1 and p.max_pieces <= 2
    assert part_pieces_are_geodesic(g, p)


def test_k6_kst_certificate():
    out = decompose_kst(generators.complete(6), 2, 2)
    assert out.certificate.pattern == Pattern.star_join(2, 2)
    assert oracles.validate_minor_model(generators.complete(6), out.certificate)


def test_grid_kst():
    g = generators.grid(5, 5)
    p = decompose_kst(g, 3, 3).partition
    assert validate_partition(g, p).width <= 3 and p.max_pieces <= 6


@pytest.mark.parametrize("s,c", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_lowerbound_graphs_not_clusterable(s, c):
    g = generators.lowerbound_gs(s, c)
    assert not oracles.exhaustive_cluster_colourable(g, s, c)


@pytest.mark.parametrize("s,c", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_lowerbound_graphs_decompose(s, c):
    # G_s(c) excludes K_{s,c+1}, hence K*_{s,c+1}
    g = generators.lowerbound_gs(s, c)
    out = decompose_kst(g, s, max(s, c + 1))
    assert out.partition is not None
    assert validate_partition(g, out.partition).width <= s


def test_kst_with_s2_is_looser_than_k2t():
    for g in outerplanar(10):
        assert validate_partition(g, decompose_kst(g, 2, 3).partition).width <= 2
        assert validate_partition(g, decompose_k2t(g, 3).partition).width <= 1


@settings(max_examples=50, deadline=None)
@given(connected_graphs(max_n=35), st.integers(1, 3), st.integers(0, 2))
def test_kst_refute_or_decompose(g, s, extra):
    t = s + extra
    out = decompose_kst(g, s, t)
    if out.certificate is not None:
        assert out.certificate.pattern == Pattern.star_join(s, t)
        assert oracles.validate_minor_model(g, out.certificate)
        return
    p = out.partition
    assert validate_partition(g, p).width <= s
    assert p.max_pieces <= max(1, s * (t - 1))
    assert part_pieces_are_geodesic(g, p)


def test_complete_graphs_outcomes_are_valid():
    # containing the pattern does not force a certificate; either outcome
    # must be sound
    for n in range(5, 9):
        g = generators.complete(n)
        for out, width, leaves in ((decompose_k2t(g, n - 2), 1, n - 3), (decompose_k3t(g, n - 3), 2, 2 * (n - 3) + 1)):
            if out.certificate is not None:
                assert oracles.validate_minor_model(g, out.certificate)
            else:
                assert validate_partition(g, out.partition).width <= width
                assert out.partition.max_leaves <= leaves
    assert decompose_k3t(generators.complete(7), 3).certificate is not None
