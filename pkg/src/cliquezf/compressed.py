"""Compressed cliques graphs built from min-max covers with simple intersection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cliques import (CliqueCover, certify, clique_cover_number,
                      enumerate_minmax_si_covers)
from .graph import Graph, are_isomorphic, bits, to_mask

CellLabel = tuple[int, int]   # (i, j) with i <= j, 1-based clique indices


class NotSimplyCoverable(ValueError):
    """The graph has no min-max clique cover with simple intersection."""


def format_label(label: CellLabel) -> str:
    i, j = label
    return f"{{{i}}}" if i == j else f"{{{i},{j}}}"


@dataclass(frozen=True)
class CompressedGraph:
    graph: Graph
    labels: tuple[CellLabel, ...]
    phi: tuple[int, ...]            # source vertex -> compressed vertex
    source_cover: CliqueCover
    source: Graph

    def preimage(self, vertices) -> tuple[int, ...]:
        want = to_mask(vertices)
        return tuple(v for v, c in enumerate(self.phi) if want >> c & 1)

    def cell(self, label: CellLabel) -> tuple[int, ...]:
        return self.preimage([self.labels.index(label)])


def _require_si(g: Graph, c: CliqueCover) -> None:
    if c.simple_intersection is None or c.all_maximal is None or c.minimum_size is None \
            or c.covers_all_edges is None:
        c = certify(g, c.cliques)
    if not c.is_min_max_si():
        raise NotSimplyCoverable("cover is not a min-max cover with simple intersection")


def cells(g: Graph, c: CliqueCover, check: bool = True) -> dict[CellLabel, tuple[int, ...]]:
    """Non-empty cells C_{i,j} (shared by cliques i and j) and C_{i,i} (private to i).

    Clique indices are 1-based positions in the cover's canonical order.
    """
    if check:
        _require_si(g, c)
    masks = c.masks
    member: list[list[int]] = [[] for _ in range(g.n)]
    for i, m in enumerate(masks, start=1):
        for v in bits(m):
            member[v].append(i)
    out: dict[CellLabel, list[int]] = {}
    for v in range(g.n):
        ids = member[v]
        if len(ids) == 1:
            key = (ids[0], ids[0])
        elif len(ids) == 2:
            key = (ids[0], ids[1])
        else:
            raise NotSimplyCoverable(f"vertex {v} lies in {len(ids)} cover cliques")
        out.setdefault(key, []).append(v)
    return {k: tuple(out[k]) for k in sorted(out)}


def labels_adjacent(a: CellLabel, b: CellLabel) -> bool:
    return a != b and bool(set(a) & set(b))


def compress(g: Graph, c: CliqueCover, check: bool = True) -> CompressedGraph:
    """Contract every non-empty cell to one vertex; vertices ordered by label."""
    cs = cells(g, c, check=check)
    labels = tuple(cs)
    k = len(labels)
    adj = [0] * k
    for x in range(k):
        for y in range(x + 1, k):
            if labels_adjacent(labels[x], labels[y]):
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    phi = [0] * g.n
    for idx, lab in enumerate(labels):
        for v in cs[lab]:
            phi[v] = idx
    cg = Graph(k, tuple(adj), tuple(format_label(lab) for lab in labels))
    return CompressedGraph(cg, labels, tuple(phi), c, g)


def phi_map(cg: CompressedGraph, v: int) -> int:
    return cg.phi[v]


def compressed_cliques_graph(g: Graph, covers: Optional[Sequence[CliqueCover]] = None
                             ) -> CompressedGraph:
    """The compressed cliques graph over the canonically first min-max SI cover.

    When several such covers exist, every resulting compressed graph is checked
    to be isomorphic to the first before returning.
    """
    if covers is None:
        covers = enumerate_minmax_si_covers(g)
    if not covers:
        raise NotSimplyCoverable("no min-max clique cover with simple intersection")
    first = compress(g, covers[0], check=False)
    for other in covers[1:]:
        alt = compress(g, other, check=False)
        if are_isomorphic(first.graph, alt.graph) is None:
            raise AssertionError("compressed graphs from different covers differ")
    return first


def is_self_compressed(g: Graph) -> bool:
    """True iff the compressed cliques graph is isomorphic to ``g``.

    Decided from cell sizes and cross-checked against an isomorphism test.
    """
    cg = compressed_cliques_graph(g)
    by_cells = all(len(cg.preimage([i])) <= 1 for i in range(cg.graph.n))
    by_iso = are_isomorphic(cg.graph, g.with_names(None)) is not None
    if by_cells != by_iso:
        raise AssertionError("cell-size criterion disagrees with isomorphism test")
    return by_cells


def induced_cover(cg: CompressedGraph) -> CliqueCover:
    """Cover {D_i}: D_i holds the compressed vertices whose label contains i."""
    ell = len(cg.source_cover)
    cliques = []
    for i in range(1, ell + 1):
        cliques.append(tuple(x for x, lab in enumerate(cg.labels) if i in lab))
    cc = clique_cover_number(cg.graph)
    return certify(cg.graph, [c for c in cliques if c], cc=cc)


def label_embedding(cg: CompressedGraph) -> dict[int, int]:
    """Map each compressed vertex to its vertex in J'(l, 2) (see families.johnson_prime)."""
    from .families import johnson_prime_index
    ell = len(cg.source_cover)
    return {x: johnson_prime_index(ell, lab) for x, lab in enumerate(cg.labels)}
