"""Maximal cliques, exact clique cover number, and min-max covers.

A clique cover here is a list of vertex sets covering every edge.  Isolated
vertices are covered by singleton cliques and those singletons are counted
in CC(G), so ``CC(K1) == 1`` and ``CC`` of the empty graph is 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graph import Graph, bits, popcount, to_mask


class NotACover(ValueError):
    pass


Clique = tuple[int, ...]


def _canon(cliques: Iterable[Iterable[int]]) -> tuple[Clique, ...]:
    return tuple(sorted({tuple(sorted(c)) for c in cliques}))


@dataclass(frozen=True)
class CliqueCover:
    """Canonically ordered list of cliques plus certificate flags.

    Flags are ``True``/``False`` once checked and ``None`` when unchecked.
    """

    cliques: tuple[Clique, ...]
    covers_all_edges: Optional[bool] = None
    all_maximal: Optional[bool] = None
    minimum_size: Optional[bool] = None
    simple_intersection: Optional[bool] = None

    def __post_init__(self):
        object.__setattr__(self, "cliques", _canon(self.cliques))

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    @property
    def masks(self) -> list[int]:
        return [to_mask(c) for c in self.cliques]

    def key(self) -> tuple[Clique, ...]:
        return self.cliques

    def is_min_max_si(self) -> bool:
        return bool(self.covers_all_edges and self.all_maximal
                    and self.minimum_size and self.simple_intersection)


# -- maximal cliques --------------------------------------------------------

def maximal_clique_masks(g: Graph) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting over bitsets."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: popcount(p & g.adj[u]))
        for v in bits(p & ~g.adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & g.adj[v], x & g.adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, g.full_mask, 0)
    return sorted(out, key=lambda m: tuple(bits(m)))


def maximal_cliques(g: Graph) -> list[Clique]:
    return [tuple(bits(m)) for m in maximal_clique_masks(g)]


def clique_number(g: Graph) -> int:
    return max((popcount(m) for m in maximal_clique_masks(g)), default=0)


def all_clique_masks(g: Graph) -> list[int]:
    """Every non-empty clique (not just maximal ones).  Exponential; small g only."""
    out = []

    def grow(r: int, cand: int) -> None:
        out.append(r)
        for v in bits(cand):
            grow(r | 1 << v, cand & g.adj[v] & ~((2 << v) - 1))

    for v in range(g.n):
        grow(1 << v, g.adj[v] & ~((2 << v) - 1))
    return out


# -- exact set cover over edges ----------------------------------------------

class _EdgeCoverProblem:
    """Cover all edges of ``g`` with cliques drawn from ``pool``.

    Isolated vertices are handled outside: they are forced singletons.
    """

    def __init__(self, g: Graph, pool: Sequence[int]):
        self.g = g
        self.edges = g.edges()
        eindex = {e: i for i, e in enumerate(self.edges)}
        self.pool = list(pool)
        self.cover_of: list[int] = []          # clique -> bitmask over edges
        for c in self.pool:
            m = 0
            vs = list(bits(c))
            for a, b in combinations(vs, 2):
                m |= 1 << eindex[(a, b)]
            self.cover_of.append(m)
        self.by_edge: list[list[int]] = [[] for _ in self.edges]
        for ci, m in enumerate(self.cover_of):
            for e in bits(m):
                self.by_edge[e].append(ci)
        self.all_edges = (1 << len(self.edges)) - 1

    def lower_bound(self, uncovered: int) -> int:
        # edges no two of which share a clique each need their own clique
        count = 0
        blocked = 0
        for e in bits(uncovered):
            if blocked >> e & 1:
                continue
            count += 1
            for ci in self.by_edge[e]:
                blocked |= self.cover_of[ci]
        return count

    def _pick_edge(self, uncovered: int) -> int:
        best, best_k = -1, None
        for e in bits(uncovered):
            k = len(self.by_edge[e])
            if best_k is None or k < best_k:
                best, best_k = e, k
                if k == 1:
                    break
        return best

    def greedy(self) -> int:
        uncovered, used = self.all_edges, 0
        while uncovered:
            ci = max(range(len(self.pool)), key=lambda i: (popcount(self.cover_of[i] & uncovered), -i))
            uncovered &= ~self.cover_of[ci]
            used += 1
        return used

    def search(self, budget: int, find_all: bool) -> list[tuple[int, ...]]:
        """Covers using at most ``budget`` cliques (all of them if ``find_all``)."""
        results: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()

        def dfs(uncovered: int, chosen: list[int], left: int) -> bool:
            if not uncovered:
                key = tuple(sorted(chosen))
                if key not in seen:
                    seen.add(key)
                    results.append(key)
                return not find_all
            if left == 0 or self.lower_bound(uncovered) > left:
                return False
            e = self._pick_edge(uncovered)
            for ci in self.by_edge[e]:
                chosen.append(ci)
                if dfs(uncovered & ~self.cover_of[ci], chosen, left - 1):
                    return True
                chosen.pop()
            return False

        dfs(self.all_edges, [], budget)
        return results

    def minimum(self) -> tuple[int, Optional[tuple[int, ...]]]:
        if not self.edges:
            return 0, ()
        lo = self.lower_bound(self.all_edges)
        hi = self.greedy()
        for k in range(lo, hi + 1):
            found = self.search(k, find_all=False)
            if found:
                return k, found[0]
        raise AssertionError("greedy bound not attained")  # pragma: no cover


def _isolated(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v] == 0]


def clique_cover_number(g: Graph) -> int:
    """Exact CC(G), counting one singleton per isolated vertex."""
    prob = _EdgeCoverProblem(g, [m for m in maximal_clique_masks(g) if popcount(m) > 1])
    k, _ = prob.minimum()
    return k + len(_isolated(g))


def minimum_cover(g: Graph) -> CliqueCover:
    """A cover of size CC(G); the first optimum met by the fixed search order."""
    pool = [m for m in maximal_clique_masks(g) if popcount(m) > 1]
    prob = _EdgeCoverProblem(g, pool)
    _, sol = prob.minimum()
    cliques = [tuple(bits(pool[i])) for i in sol] + [(v,) for v in _isolated(g)]
    return CliqueCover(tuple(cliques), covers_all_edges=True, minimum_size=True)


# -- cover predicates ---------------------------------------------------------

def covers_all_edges(g: Graph, cliques: Iterable[Iterable[int]]) -> bool:
    masks = [to_mask(c) for c in cliques]
    covered_vertices = 0
    for m in masks:
        if not g.is_clique(m):
            return False
        covered_vertices |= m
    for u, v in g.edges():
        pair = 1 << u | 1 << v
        if not any(m & pair == pair for m in masks):
            return False
    # isolated vertices must appear too; otherwise they are not covered
    return all(covered_vertices >> v & 1 for v in _isolated(g))


def is_maximal_clique(g: Graph, mask: int) -> bool:
    if not g.is_clique(mask):
        return False
    common = g.full_mask
    for v in bits(mask):
        common &= g.adj[v]
    return common & ~mask == 0


def has_simple_intersection(c: CliqueCover | Sequence[Iterable[int]]) -> bool:
    cliques = c.cliques if isinstance(c, CliqueCover) else _canon(c)
    masks = [to_mask(x) for x in cliques]
    seen_once = seen_twice = 0
    for m in masks:
        if seen_twice & m:
            return False
        seen_twice |= seen_once & m
        seen_once |= m
    return True


def certify(g: Graph, cliques: Iterable[Iterable[int]], cc: Optional[int] = None) -> CliqueCover:
    """Build a CliqueCover with every flag checked against ``g``."""
    cl = _canon(cliques)
    if cc is None:
        cc = clique_cover_number(g)
    return CliqueCover(
        cl,
        covers_all_edges=covers_all_edges(g, cl),
        all_maximal=all(is_maximal_clique(g, to_mask(x)) for x in cl),
        minimum_size=len(cl) == cc and covers_all_edges(g, cl),
        simple_intersection=has_simple_intersection(cl),
    )


def maximalize_cover(g: Graph, c: CliqueCover | Sequence[Iterable[int]]) -> CliqueCover:
    """Extend every clique to a maximal one, adding vertices in ascending order.

    For a minimum cover no two cliques can grow into the same maximal clique,
    so the size is preserved.
    """
    cliques = c.cliques if isinstance(c, CliqueCover) else _canon(c)
    if not covers_all_edges(g, cliques):
        raise NotACover("input does not cover every edge")
    out = []
    for cl in cliques:
        m = to_mask(cl)
        for v in range(g.n):
            if not m >> v & 1 and g.adj[v] & m == m:
                m |= 1 << v
        out.append(tuple(bits(m)))
    flags = dict(covers_all_edges=True, all_maximal=True)
    if isinstance(c, CliqueCover):
        flags["minimum_size"] = c.minimum_size if len(set(out)) == len(cliques) else False
    res = CliqueCover(tuple(out), **flags)
    res = replace(res, simple_intersection=has_simple_intersection(res))
    return res


# -- enumeration of covers -----------------------------------------------------

def enumerate_minimum_covers(g: Graph, maximal_only: bool = True) -> list[CliqueCover]:
    """All covers of size CC(G).

    With ``maximal_only`` the cliques come from the maximal cliques; otherwise
    every clique with at least two vertices is allowed.  Exhaustive, so keep
    ``maximal_only=False`` for small graphs.
    """
    if maximal_only:
        pool = [m for m in maximal_clique_masks(g) if popcount(m) > 1]
    else:
        pool = [m for m in all_clique_masks(g) if popcount(m) > 1]
    prob = _EdgeCoverProblem(g, pool)
    k, _ = prob.minimum()
    iso = [(v,) for v in _isolated(g)]
    covers = []
    for sol in prob.search(k, find_all=True):
        cl = [tuple(bits(pool[i])) for i in sol] + iso
        covers.append(cl)
    out = [CliqueCover(tuple(cl), covers_all_edges=True, minimum_size=True,
                       all_maximal=True if maximal_only else None,
                       simple_intersection=has_simple_intersection(cl))
           for cl in covers]
    return sorted(out, key=CliqueCover.key)


def enumerate_minmax_si_covers(g: Graph) -> list[CliqueCover]:
    """Every min-max cover with simple intersection, canonically ordered."""
    return [c for c in enumerate_minimum_covers(g) if c.simple_intersection]


def is_simply_coverable(g: Graph) -> bool:
    return bool(enumerate_minmax_si_covers(g))
