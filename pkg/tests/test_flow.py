from __future__ import annotations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from minorcolour import generators
from minorcolour.flow import menger
from minorcolour.graph import bfs_distances

from conftest import connected_graphs


def test_grid_columns():
    g = generators.grid(3, 3)
    res = menger(g, {0, 3, 6}, {2, 5, 8})
    assert len(res.paths) == 3 and res.separator == {0, 3, 6}


def test_limit_stops_early():
    g = generators.grid(3, 3)
    res = menger(g, {0, 3, 6}, {2, 5, 8}, limit=2)
    assert len(res.paths) == 2


def test_shared_vertex_is_a_path():
    res = menger(generators.path(3), {1}, {1})
    assert res.paths == ((1,),) and res.separator == {1}


@settings(max_examples=80, deadline=None)
@given(connected_graphs(min_n=2, max_n=30), st.data())
def test_matches_networkx(g, data):
    a = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=5))
    b = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=5))
    res = menger(g, a, b)
    # reference: unit vertex capacities via split nodes, max flow in networkx
    h = nx.DiGraph()
    for v in range(g.n):
        h.add_edge(("in", v), ("out", v), capacity=1)
    for u, v in g.edges():
        h.add_edge(("out", u), ("in", v))
        h.add_edge(("out", v), ("in", u))
    h.add_edges_from(("s", ("in", v)) for v in a)
    h.add_edges_from((("out", v), "t") for v in b)
    expected = nx.maximum_flow_value(h, "s", "t")
    used: set[int] = set()
    for path in res.paths:
        assert path[0] in a and path[-1] in b
        assert all(path[i + 1] in g.adj[path[i]] for i in range(len(path) - 1))
        assert not used & set(path)
        used |= set(path)
    sep = res.separator
    assert sep is not None and len(sep) == len(res.paths)
    reach = bfs_distances(g, a - sep, set(range(g.n)) - sep)
    assert not set(reach) & b
    assert len(res.paths) == expected
