"""Detectors for claws, diamonds, suspended cycles and J'(m,2) embeddings.

These are necessary conditions for a graph to be a compressed cliques graph,
not a decision procedure; use ``compressed.is_self_compressed`` for that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, bits, find_induced, get_vertex_cap, is_induced_embedding


@dataclass(frozen=True)
class StructureReport:
    kind: str                      # claw | diamond | suspended_cycle | ear
    witness: tuple[int, ...]
    center: Optional[int] = None


def find_claw(g: Graph) -> Optional[StructureReport]:
    """Induced K_{1,3}: a centre with three pairwise non-adjacent neighbours."""
    for c in range(g.n):
        nb = list(bits(g.adj[c]))
        if len(nb) < 3:
            continue
        for a, b, d in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return StructureReport("claw", (c, a, b, d), center=c)
    return None


def find_diamond(g: Graph) -> Optional[StructureReport]:
    """Induced K_4 minus an edge; the witness lists the two degree-3 vertices first."""
    for u, v in g.edges():
        common = list(bits(g.adj[u] & g.adj[v]))
        for a, b in combinations(common, 2):
            if not g.has_edge(a, b):
                return StructureReport("diamond", (u, v, a, b))
    return None


def find_suspended_cycle(g: Graph) -> Optional[StructureReport]:
    """A cycle with exactly one vertex of degree > 2, all others of degree 2.

    Walks out of every vertex of degree >= 3 along degree-2 vertices; a walk
    that returns to its start closes a suspended cycle.  A triangle is an ear.
    """
    deg = g.degrees()
    for x in range(g.n):
        if deg[x] < 3:
            continue
        for y in bits(g.adj[x]):
            if deg[y] != 2:
                continue
            walk = [x, y]
            prev, cur = x, y
            while True:
                nxt = next(w for w in bits(g.adj[cur]) if w != prev)
                if nxt == x:
                    kind = "ear" if len(walk) == 3 else "suspended_cycle"
                    return StructureReport(kind, tuple(walk), center=x)
                if deg[nxt] != 2:
                    break
                walk.append(nxt)
                prev, cur = cur, nxt
    return None


@dataclass(frozen=True)
class CandidateReport:
    claw_free: bool
    claw: Optional[StructureReport]
    diamond: Optional[StructureReport]
    no_suspended_cycle: bool
    suspended_cycle: Optional[StructureReport]
    cover_number: int
    embeds_in_jprime: Optional[bool]
    embedding: Optional[dict[int, int]]

    @property
    def may_be_compressed(self) -> bool:
        return self.claw_free and self.no_suspended_cycle and self.embeds_in_jprime is not False


def check_compressed_candidate(g: Graph, labels_embedding: Optional[dict[int, int]] = None
                               ) -> CandidateReport:
    """Run every detector plus the J'(CC(g),2) induced-embedding test.

    If ``labels_embedding`` (for instance from ``compressed.label_embedding``)
    is given it is verified instead of searching; this keeps the check cheap
    when J'(CC(g),2) would exceed the vertex cap.
    """
    from .cliques import clique_cover_number
    from .families import johnson_prime
    from .graph import vertex_cap

    claw = find_claw(g)
    sus = find_suspended_cycle(g)
    cc = clique_cover_number(g)
    size = cc * (cc - 1) // 2 + cc
    embedding = None
    embeds: Optional[bool] = None
    cap = get_vertex_cap()
    with vertex_cap(max(cap, size)):
        target = johnson_prime(max(cc, 1))
        if labels_embedding is not None and is_induced_embedding(target, g, labels_embedding):
            embeds, embedding = True, labels_embedding
        if embeds is None and size <= cap:
            embedding = find_induced(target, g)
            embeds = embedding is not None
    return CandidateReport(
        claw_free=claw is None, claw=claw, diamond=find_diamond(g),
        no_suspended_cycle=sus is None, suspended_cycle=sus,
        cover_number=cc, embeds_in_jprime=embeds, embedding=embedding)
