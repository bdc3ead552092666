from __future__ import annotations

import random
from functools import lru_cache

from hypothesis import strategies as st

from minorcolour import generators
from minorcolour.graph import Graph, components


@lru_cache(maxsize=None)
def triangulations(count: int = 50) -> tuple[Graph, ...]:
    return tuple(generators.planar_triangulation(8 + (i * 53) // count, seed=i) for i in range(count))


@lru_cache(maxsize=None)
def outerplanar(count: int = 50) -> tuple[Graph, ...]:
    return tuple(generators.maximal_outerplanar(5 + i % 10, seed=i) for i in range(count))


@lru_cache(maxsize=None)
def planar_sparse(count: int = 30) -> tuple[Graph, ...]:
    """Planar graphs: triangulations with a random third of the edges
    removed, keeping the largest component relabelled."""
    out = []
    for i in range(count):
        g = generators.planar_triangulation(10 + i, seed=100 + i)
        rng = random.Random(i)
        edges = [e for e in g.edges() if rng.random() > 0.33]
        h = Graph(g.n, edges)
        comp = max(components(h), key=len)
        sub, _ = h.induced(comp)
        out.append(sub)
    return tuple(out)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 30):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from([0.05, 0.1, 0.2, 0.4]))
    seed = draw(st.integers(0, 10**6))
    return generators.random_connected(n, p, seed=seed)


@st.composite
def graphs(draw, max_n: int = 12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


# One line per acceptance criterion, repeated in the terminal summary so the
# results are visible without ``-s``.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
