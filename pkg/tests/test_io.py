from __future__ import annotations

import json

import networkx as nx
import pytest
from hypothesis import given

from cliquezf import families as fam
from cliquezf.compressed import compressed_cliques_graph
from cliquezf.io import (FormatError, emit_graph, from_edgelist, from_graph6, from_json,
                         parse_graph, read_graph6_lines, sniff_format, to_dot,
                         to_edgelist, to_graph6, to_json)

from .conftest import from_nx, graphs, to_nx


def test_graph6_examples():
    assert to_graph6(fam.complete(3)) == "Bw"
    assert from_graph6("Bw") == fam.complete(3)
    assert from_graph6(">>graph6<<Bw") == fam.complete(3)
    assert to_graph6(fam.path(2), header=True) == ">>graph6<<A_"


def test_graph6_agrees_with_networkx_on_corpus(corpus7):
    for g in corpus7:
        s = to_graph6(g)
        assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert from_graph6(s) == g


@given(graphs(max_n=12))
def test_graph6_roundtrip_random(g):
    s = to_graph6(g)
    assert from_graph6(s) == g
    assert from_nx(nx.from_graph6_bytes(s.encode())) == g


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x7f", "~??@", "Bx"])
def test_graph6_errors(bad):
    with pytest.raises(FormatError):
        from_graph6(bad)


def test_read_graph6_lines_skips_blanks_and_comments():
    gs = list(read_graph6_lines(["Bw\n", "\n", "# x\n", "A_\n"]))
    assert gs == [fam.complete(3), fam.path(2)]


def test_edgelist():
    g = from_edgelist("3 2\n0 1\n1 2\n")
    assert g == fam.path(3)
    assert to_edgelist(g) == "3 2\n0 1\n1 2\n"
    assert from_edgelist("# comment\n2 1\n0 1  # trailing\n") == fam.path(2)


@pytest.mark.parametrize("bad", ["", "3\n", "3 2\n0 1\n", "3 1\n0 3\n", "2 1\n0 0\n", "2 1\na b\n",
                                 "2 1\n0 1 1\n"])
def test_edgelist_errors(bad):
    with pytest.raises(FormatError):
        from_edgelist(bad)


@given(graphs(max_n=9))
def test_edgelist_and_json_roundtrip(g):
    assert from_edgelist(to_edgelist(g)) == g
    assert from_json(to_json(g)) == g


def test_dot_labels_of_compressed_graph():
    cg = compressed_cliques_graph(fam.circulant(6, [1, 2]))
    dot = to_dot(cg.graph)
    labels = [line for line in dot.splitlines() if "label=" in line]
    assert len(labels) == 6
    assert all('label="{' in line and "," in line for line in labels)
    assert dot.count("--") == cg.graph.num_edges()


def test_json_keeps_labels():
    cg = compressed_cliques_graph(fam.path(3))
    obj = json.loads(to_json(cg.graph))
    assert obj["labels"] == ["{1}", "{1,2}", "{2}"]
    assert from_json(to_json(cg.graph)).names == cg.graph.names
    with pytest.raises(FormatError):
        from_json('{"edges": []}')


def test_sniff_and_dispatch():
    assert sniff_format("Bw") == "graph6"
    assert sniff_format("3 2\n0 1\n1 2") == "edgelist"
    assert sniff_format('{"n": 1, "edges": []}') == "json"
    for fmt in ("edgelist", "graph6", "json"):
        assert parse_graph(emit_graph(fam.wheel(6), fmt)) == fam.wheel(6)
    with pytest.raises(FormatError):
        parse_graph("Bw\nBw\n", "graph6")
    with pytest.raises(FormatError):
        emit_graph(fam.path(2), "png")
