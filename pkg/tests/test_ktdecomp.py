from __future__ import annotations

from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorcolour import generators, oracles
from minorcolour.errors import DecompositionError, GraphError
from minorcolour.graph import Graph
from minorcolour.ktdecomp import KT_MODES, check_part_properties, colour_kt, decompose_kt
from minorcolour.partition import quotient, validate_partition

from conftest import connected_graphs, triangulations


def check_outcome(g: Graph, t: int) -> None:
    out = decompose_kt(g, t)
    if out.certificate is not None:
        assert out.certificate.pattern.name == f"K{t}"
        assert oracles.validate_minor_model(g, out.certificate)
        return
    p = out.partition
    assert validate_partition(g, p).width <= t - 2
    check_part_properties(g, p, t)
    owner = p.part_of()
    for i, h in enumerate(p.parts):
        assert all(len(g.adj[v] & h) <= 2 * t - 6 for v in range(g.n) if owner[v] > i)
    q = quotient(g, p)
    chordal = oracles.is_chordal(q)
    assert chordal and chordal.max_clique <= t - 1
    if q.n <= oracles.TREEWIDTH_CAP:
        assert oracles.exact_treewidth(q) <= t - 2


def test_triangle():
    p = decompose_kt(generators.complete(3), 4).partition
    assert p.parts == (frozenset({0}), frozenset({1}), frozenset({2}))
    assert validate_partition(generators.complete(3), p).width == 2


def test_k5_certificate():
    out = decompose_kt(generators.complete(5), 5)
    assert out.kind == "certificate"
    assert out.certificate.branch_sets == tuple(frozenset({v}) for v in range(5))


def test_octahedron():
    g = generators.octahedron()
    check_outcome(g, 5)
    p = decompose_kt(g, 5).partition
    assert p is not None and p.width == 3


def test_colour_examples():
    g = generators.octahedron()
    col = colour_kt(g, 5, "defect")
    assert col.num_colours <= 4 and col.defect <= 3
    col = colour_kt(g, 5, "clustered")
    assert col.num_colours <= 8 and col.clustering <= 2
    col = colour_kt(generators.cycle(5), 4, "defect")
    assert col.num_colours <= 3 and col.defect <= 2


def test_colour_raises_with_model():
    with pytest.raises(DecompositionError) as exc:
        colour_kt(generators.complete(6), 5, "defect")
    assert oracles.validate_minor_model(generators.complete(6), exc.value.model)


def test_bad_arguments():
    with pytest.raises(GraphError):
        decompose_kt(generators.path(3), 3)
    with pytest.raises(GraphError):
        colour_kt(generators.path(3), 5, "rainbow")


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("seed", range(5))
def test_ktrees(k, seed):
    # k-trees are K_{k+2}-minor-free
    g = generators.random_ktree(25, k, seed=seed)
    t = k + 2
    if t >= 4:
        assert decompose_kt(g, t).partition is not None
        check_outcome(g, t)


def test_planar_corpus():
    for g in triangulations(20):
        check_outcome(g, 5)
        for mode in KT_MODES:
            col = colour_kt(g, 5, mode).check()
            assert col.num_colours <= (4 if mode in ("defect", "treewidth") else 8 if mode != "independent" else 12)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=35), st.integers(4, 7))
def test_refute_or_decompose(g, t):
    check_outcome(g, t)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=30), st.integers(4, 7), st.sampled_from(KT_MODES))
def test_colour_modes(g, t, mode):
    try:
        col = colour_kt(g, t, mode)
    except DecompositionError as exc:
        assert oracles.validate_minor_model(g, exc.model)
        return
    col.check()
    if mode in ("defect", "treewidth"):
        assert col.num_colours <= t - 1 and col.defect <= t - 2
    elif mode == "clustered":
        assert col.num_colours <= 2 * t - 2 and col.clustering <= ceil((t - 2) / 2)
    elif mode == "paths":
        assert col.num_colours <= 2 * t - 2
    else:
        assert col.num_colours <= 3 * t - 3
