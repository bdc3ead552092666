from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorcolour import generators
from minorcolour.errors import GraphError, ParseError
from minorcolour.graph import (
    Graph,
    block_cut_tree,
    components,
    contract_set,
    from_edge_list,
    from_json,
    group_graph,
    to_dot,
    to_edge_list,
    to_json,
)

from conftest import connected_graphs, graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_parse_path():
    g = from_edge_list("3 2\n0 1\n1 2")
    assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]


def test_parse_loop_reports_line():
    with pytest.raises(ParseError) as exc:
        from_edge_list("2 1\n0 0")
    assert exc.value.line == 2 and "loop" in str(exc.value)


def test_parse_k4():
    g = from_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
    assert g.m == 6 and all(g.degree(v) == 3 for v in g.vertices())


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "2 1\n0 1 2", "2 2\n0 1", "2 1\n0 x", "2 1\n0 2", "3 2\n0 1\n1 0", "-1 0"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        from_edge_list(text)


def test_parse_skips_comments():
    assert from_edge_list("# hi\n2 1\n\n0 1\n").m == 1


def test_json_errors():
    with pytest.raises(ParseError):
        from_json("{")
    with pytest.raises(ParseError):
        from_json('{"n": 2, "edges": [[0, 0]]}')


@given(graphs())
def test_serialisation_round_trip(g):
    assert from_edge_list(to_edge_list(g)).edges() == g.edges()
    assert from_json(to_json(g)).edges() == g.edges()


def test_contract_examples():
    h, _ = contract_set(generators.complete(3), {0, 1})
    assert (h.n, h.m) == (2, 1)
    h, _ = contract_set(generators.complete(4), range(4))
    assert (h.n, h.m) == (1, 0)
    h, _ = contract_set(generators.path(3), {0, 1})
    assert (h.n, h.m) == (2, 1)


def test_contract_rejects_disconnected():
    with pytest.raises(GraphError):
        contract_set(generators.path(3), {0, 2})


@given(connected_graphs(min_n=2, max_n=15), st.data())
def test_contract_preserves_other_edges(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    w = data.draw(st.sampled_from(sorted(g.adj[v]) or [v]))
    s = {v, w}
    h, relabel = contract_set(g, s)
    for a, b in g.edges():
        if a not in s and b not in s:
            assert h.has_edge(relabel[a], relabel[b])
    assert h.n == g.n - len(s) + 1


def test_block_cut_examples():
    bct = block_cut_tree(generators.complete(3))
    assert len(bct.blocks) == 1 and not bct.cut_vertices
    bct = block_cut_tree(generators.path(3))
    assert set(bct.blocks) == {frozenset({0, 1}), frozenset({1, 2})} and bct.cut_vertices == {1}
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    bct = block_cut_tree(bowtie)
    assert len(bct.blocks) == 2 and bct.cut_vertices == {2}


@settings(max_examples=60)
@given(connected_graphs(min_n=2, max_n=25))
def test_block_cut_tree_matches_networkx(g):
    bct = block_cut_tree(g)
    h = to_nx(g)
    assert set(bct.blocks) == {frozenset(b) for b in nx.biconnected_components(h)}
    assert bct.cut_vertices == set(nx.articulation_points(h))
    covered = {(u, v) for b in bct.blocks for u in b for v in b if u < v and g.has_edge(u, v)}
    assert covered == set(g.edges())
    for i, a in enumerate(bct.blocks):
        for b in bct.blocks[i + 1:]:
            shared = a & b
            assert len(shared) <= 1 and shared <= bct.cut_vertices


@given(graphs(max_n=15))
def test_components_match_networkx(g):
    ours = {frozenset(c) for c in components(g)}
    assert ours == {frozenset(c) for c in nx.connected_components(to_nx(g))}


def test_lowerbound_examples():
    assert generators.lowerbound_gs(1, 2).edges() == generators.path(3).edges()
    g = generators.lowerbound_gs(2, 2)
    assert (g.n, g.m) == (7, 10)
    assert g.degree(6) == 6


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("c", [1, 2, 3])
def test_lowerbound_order(s, c):
    f = c + 1
    for _ in range(s - 1):
        f = c * f + 1
    assert generators.lowerbound_gs(s, c).n == f


def test_grid_2x2_is_c4():
    g = generators.grid(2, 2)
    assert g.m == 4 and all(g.degree(v) == 2 for v in g.vertices())


@pytest.mark.parametrize("family,params", [
    ("grid", (3, 4)), ("maximal_outerplanar", (9,)), ("random_ktree", (10, 3)),
    ("planar_triangulation", (20,)), ("random_connected", (15, 0.2)), ("random_tree", (12,)),
    ("petersen", ()), ("octahedron", ()), ("fan", (6,)), ("star", (4,)), ("cycle", (5,)),
    ("complete_bipartite", (2, 3)), ("lowerbound_Gs", (2, 2)),
])
def test_generated_graphs_are_simple_and_symmetric(family, params):
    g = generators.generate(family, params, seed=4)
    for v in g.vertices():
        assert v not in g.adj[v]
        assert all(v in g.adj[w] for w in g.adj[v])


@pytest.mark.parametrize("seed", range(10))
def test_planar_families_are_planar(seed):
    tri = generators.planar_triangulation(30, seed=seed)
    assert tri.m == 3 * tri.n - 6 and nx.check_planarity(to_nx(tri))[0]
    op = generators.maximal_outerplanar(12, seed=seed)
    assert op.m == 2 * op.n - 3 and nx.check_planarity(to_nx(op))[0]


def test_generate_is_deterministic():
    a = generators.generate("planar_triangulation", (25,), seed=7)
    b = generators.generate("planar_triangulation", (25,), seed=7)
    assert a.edges() == b.edges()
    with pytest.raises(GraphError):
        generators.generate("nope")


def test_group_graph():
    g = generators.path(4)
    q = group_graph(g, [[0, 1], [2], [3]])
    assert q.edges() == [(0, 1), (1, 2)]
    with pytest.raises(GraphError):
        group_graph(g, [[0, 1], [1]])


def test_dot_colours():
    text = to_dot(generators.path(2), [1, 2])
    assert "0 -- 1" in text and "fillcolor=red" in text and "fillcolor=blue" in text
