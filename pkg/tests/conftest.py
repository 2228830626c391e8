from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from cliquezf.corpus import enumerate_connected
from cliquezf.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    try:
        order = sorted(h.nodes())
    except TypeError:
        order = sorted(h.nodes(), key=repr)
    index = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def corpus5():
    return enumerate_connected(5)


@pytest.fixture(scope="session")
def corpus6():
    return enumerate_connected(6)


@pytest.fixture(scope="session")
def corpus7():
    return enumerate_connected(7)
