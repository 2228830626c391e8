from __future__ import annotations

import networkx as nx
import pytest

from cliquezf.corpus import (CorpusTooLarge, connected_graphs, enumerate_connected,
                             read_corpus)
from cliquezf.graph import canonical_form, is_connected
from cliquezf.io import to_graph6

from .conftest import from_nx

KNOWN = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def test_counts_match_known_sequence():
    for n, count in KNOWN.items():
        assert len(connected_graphs(n)) == count


def test_counts_match_networkx_atlas():
    atlas = {}
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h):
            atlas.setdefault(h.number_of_nodes(), set()).add(canonical_form(from_nx(h)))
    for n in range(1, 8):
        ours = {canonical_form(g) for g in connected_graphs(n)}
        assert ours == atlas[n]


def test_members_connected_and_distinct():
    gs = enumerate_connected(6)
    assert all(is_connected(g) for g in gs)
    assert len({canonical_form(g) for g in gs}) == len(gs)


def test_cumulative_range():
    assert len(enumerate_connected(4)) == 1 + 1 + 2 + 6
    assert len(enumerate_connected(5, min_n=5)) == 21
    assert [g.n for g in enumerate_connected(3)] == [1, 2, 3, 3]


def test_guard():
    with pytest.raises(CorpusTooLarge):
        enumerate_connected(8)
    with pytest.raises(CorpusTooLarge):
        connected_graphs(6, max_n_guard=5)


def test_file_mode(tmp_path):
    gs = enumerate_connected(5)
    path = tmp_path / "c.g6"
    path.write_text("\n".join(to_graph6(g) for g in gs) + "\n")
    assert list(read_corpus(str(path))) == gs
    assert len(list(read_corpus(str(path), max_n=4))) == 10
