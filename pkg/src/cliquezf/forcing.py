"""Positive zero forcing: closure, forcing forests, exact Z+ and Z, reduced graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import (Graph, bits, component_masks, induced_subgraph, lowest,
                    popcount, to_mask)


@dataclass(frozen=True)
class Force:
    forcer: int
    forced: int
    component: tuple[int, ...]  # white component containing ``forced`` at that moment


@dataclass(frozen=True)
class ForcingRecord:
    graph: Graph
    initial: tuple[int, ...]
    steps: tuple[Force, ...]
    final: tuple[int, ...]

    @property
    def complete(self) -> bool:
        return len(self.final) == self.graph.n


class NotAClosure(ValueError):
    pass


def _eligible(g: Graph, black: int) -> list[tuple[int, int, int]]:
    """All valid (forcer, forced, component) triples for the current black set."""
    white = g.full_mask & ~black
    out = []
    comps = component_masks(g, white)
    for u in bits(black):
        for comp in comps:
            hit = g.adj[u] & comp
            if hit and not hit & (hit - 1):
                out.append((u, lowest(hit), comp))
    return out


def positive_closure(g: Graph, b: Iterable[int], rng: Optional[random.Random] = None) -> ForcingRecord:
    """Apply the positive colour change rule one force at a time to a fixed point.

    By default the lowest eligible forcer is used, then its lowest forced vertex.
    With ``rng`` a uniformly random eligible force is applied instead (used to
    test that the final set does not depend on the order).
    """
    black = to_mask(b)
    if black & ~g.full_mask:
        raise IndexError("initial set out of range")
    initial = tuple(bits(black))
    steps = []
    while True:
        options = _eligible(g, black)
        if not options:
            break
        if rng is None:
            u, w, comp = min(options, key=lambda t: (t[0], t[1]))
        else:
            u, w, comp = options[rng.randrange(len(options))]
        steps.append(Force(u, w, tuple(bits(comp))))
        black |= 1 << w
    return ForcingRecord(g, initial, tuple(steps), tuple(bits(black)))


def closure_mask(g: Graph, black: int) -> int:
    """Fast positive closure returning only the final black set.

    All forces available in a round are applied together; each stays valid
    because removing white vertices only splits components.
    """
    adj = g.adj
    full = g.full_mask
    while True:
        white = full & ~black
        if not white:
            return black
        new = 0
        remaining = white
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nb = adj[v] & remaining & ~comp
                comp |= nb
                frontier |= nb
            remaining &= ~comp
            # black vertices touching this component
            touch = 0
            for v in bits(comp):
                touch |= adj[v]
            touch &= black
            for u in bits(touch):
                hit = adj[u] & comp
                if not hit & (hit - 1):
                    new |= hit
        if not new:
            return black
        black |= new


def is_positive_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    return closure_mask(g, to_mask(s)) == g.full_mask


def standard_closure_mask(g: Graph, black: int) -> int:
    full = g.full_mask
    changed = True
    while changed:
        changed = False
        for u in bits(black):
            w = g.adj[u] & ~black
            if w and not w & (w - 1):
                black |= w
                changed = True
    return black & full


def validate_record(r: ForcingRecord) -> bool:
    """Re-check every recorded force against the colouring at its time."""
    g = r.graph
    black = to_mask(r.initial)
    for st in r.steps:
        if not black >> st.forcer & 1 or black >> st.forced & 1:
            return False
        comps = component_masks(g, g.full_mask & ~black)
        comp = next(c for c in comps if c >> st.forced & 1)
        if tuple(bits(comp)) != st.component:
            return False
        if g.adj[st.forcer] & comp != 1 << st.forced:
            return False
        black |= 1 << st.forced
    return tuple(bits(black)) == r.final


# -- forcing forests ----------------------------------------------------------

@dataclass(frozen=True)
class ForcingForest:
    parent: tuple[Optional[int], ...]   # None for roots

    def roots(self) -> list[int]:
        return [v for v, p in enumerate(self.parent) if p is None]

    def trees(self) -> list[tuple[int, ...]]:
        root_of = {}
        for v in range(len(self.parent)):
            x = v
            while self.parent[x] is not None:
                x = self.parent[x]
            root_of[v] = x
        groups: dict[int, list[int]] = {}
        for v, r in root_of.items():
            groups.setdefault(r, []).append(v)
        return sorted(tuple(sorted(t)) for t in groups.values())


def forcing_forest(r: ForcingRecord) -> ForcingForest:
    """Forcer -> forced parent map; checks each tree is an induced tree of the graph."""
    if not r.complete:
        raise NotAClosure("record does not force the whole graph")
    parent: list[Optional[int]] = [None] * r.graph.n
    for st in r.steps:
        parent[st.forced] = st.forcer
    forest = ForcingForest(tuple(parent))
    if not is_induced_forest(r.graph, forest):
        raise AssertionError("forcing trees are not induced trees")  # pragma: no cover
    return forest


def is_induced_forest(g: Graph, forest: ForcingForest) -> bool:
    trees = forest.trees()
    seen = 0
    for t in trees:
        m = to_mask(t)
        if seen & m:
            return False
        seen |= m
        sub, _ = induced_subgraph(g, t)
        if sub.num_edges() != len(t) - 1 or len(component_masks(sub)) != 1:
            return False
        for v in t:
            p = forest.parent[v]
            if p is not None and not g.has_edge(p, v):
                return False
    return seen == g.full_mask


# -- exact forcing numbers ------------------------------------------------------

def twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs u < v with N[u] == N[v]."""
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if closed[u] == closed[v]]


def _min_forcing_set(g: Graph, closure, lower: int, prune_twins: bool
                     ) -> tuple[int, tuple[int, ...]]:
    n = g.n
    full = g.full_mask
    pairs = [1 << u | 1 << v for u, v in twin_pairs(g)] if prune_twins else []
    for k in range(max(lower, 0), n + 1):
        # lexicographic order of combinations gives the lexicographically least optimum
        for combo in combinations(range(n), k):
            m = 0
            for v in combo:
                m |= 1 << v
            if pairs and any(not m & p for p in pairs):
                continue
            if closure(g, m) == full:
                return k, combo
    raise AssertionError("V is always a forcing set")  # pragma: no cover


def _zplus_connected(g: Graph, prune: bool) -> tuple[int, tuple[int, ...]]:
    if g.n == 0:
        return 0, ()
    lower = 1
    if prune:
        from .cliques import clique_cover_number, clique_number
        lower = max(1, clique_number(g) - 1, g.n - clique_cover_number(g))
    return _min_forcing_set(g, closure_mask, lower, prune)


def zplus(g: Graph, prune: bool = True) -> tuple[int, tuple[int, ...], ForcingRecord]:
    """Exact Z+(G) with the lexicographically least optimal set and its record.

    Disconnected graphs are solved per component and summed; the reported set is
    the union of the per-component optima.  ``prune=False`` disables the lower
    bounds and the twin rule (an oracle for small graphs).
    """
    total = 0
    chosen: list[int] = []
    for comp in component_masks(g):
        sub, index = induced_subgraph(g, bits(comp))
        back = {i: v for v, i in index.items()}
        k, s = _zplus_connected(sub, prune)
        total += k
        chosen.extend(back[i] for i in s)
    chosen.sort()
    return total, tuple(chosen), positive_closure(g, chosen)


def zplus_number(g: Graph) -> int:
    return zplus(g)[0]


def all_optimal_positive_sets(g: Graph, k: Optional[int] = None) -> list[tuple[int, ...]]:
    """Every positive zero forcing set of size Z+(G).  Connected small graphs only."""
    if k is None:
        k = zplus(g)[0]
    out = []
    for combo in combinations(range(g.n), k):
        if closure_mask(g, to_mask(combo)) == g.full_mask:
            out.append(combo)
    return out


def standard_zero_forcing(g: Graph) -> int:
    """Exact Z(G) under the classic rule (one white neighbour in the whole graph)."""
    if g.n == 0:
        return 0
    from .cliques import clique_number
    lower = max(1, clique_number(g) - 1)
    # every component needs its own start, so this bound is safe for disconnected g
    lower = max(lower, len(component_masks(g)))
    return _min_forcing_set(g, standard_closure_mask, lower, prune_twins=False)[0]


# -- reduced graph ----------------------------------------------------------------

def _delete_leaves(g: Graph) -> Graph:
    while g.n > 1:
        leaf = next((v for v in range(g.n) if popcount(g.adj[v]) == 1), None)
        if leaf is None:
            break
        g, _ = induced_subgraph(g, [v for v in range(g.n) if v != leaf])
    return g


def _smooth_once(g: Graph) -> Optional[Graph]:
    """Remove one degree-2 vertex whose neighbours are non-adjacent, joining them."""
    for v in range(g.n):
        if popcount(g.adj[v]) == 2:
            a, b = bits(g.adj[v])
            if not g.has_edge(a, b):
                keep = [u for u in range(g.n) if u != v]
                sub, index = induced_subgraph(g, keep)
                adj = list(sub.adj)
                ia, ib = index[a], index[b]
                adj[ia] |= 1 << ib
                adj[ib] |= 1 << ia
                return Graph(sub.n, tuple(adj))
    return None


def reduced_graph(g: Graph) -> Graph:
    """Delete leaves to a fixed point, then contract suspended paths to edges;
    repeat until neither applies.

    A suspended path is shortened one internal vertex at a time, and only while
    its end vertices are non-adjacent, so a bare cycle stops at a triangle and
    no multi-edges arise.
    """
    while True:
        g = _delete_leaves(g)
        changed = False
        while True:
            h = _smooth_once(g)
            if h is None:
                break
            g, changed = h, True
        if not changed:
            return g


def count_edge_maximal_cliques(g: Graph) -> int:
    """Number of edges that are maximal cliques (edges in no triangle)."""
    return sum(1 for u, v in g.edges() if not g.adj[u] & g.adj[v])
