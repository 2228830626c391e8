"""Immutable simple graphs over vertices ``0..n-1`` stored as adjacency bitmasks.

Every other module in the package builds on :class:`Graph`.  Vertex subsets are
passed around as Python ints used as bitsets internally; public functions
return sorted tuples so output is deterministic.
"""

from __future__ import annotations

import contextlib
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

_vertex_cap = 64


def get_vertex_cap() -> int:
    return _vertex_cap


@contextlib.contextmanager
def vertex_cap(limit: int):
    """Temporarily change the maximum number of vertices a Graph may have."""
    global _vertex_cap
    old = _vertex_cap
    _vertex_cap = int(limit)
    try:
        yield
    finally:
        _vertex_cap = old


def set_vertex_cap(limit: int) -> None:
    global _vertex_cap
    _vertex_cap = int(limit)


# -- bitset helpers ---------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    ``adj[v]`` is a bitmask of the neighbours of ``v``.  Use :meth:`from_edges`
    to build one from an edge list; the constructor validates symmetry.
    """

    n: int
    adj: tuple[int, ...]
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        if self.n > _vertex_cap:
            raise GraphError(f"graph has {self.n} vertices; cap is {_vertex_cap}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if a >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(a):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.names is not None and len(self.names) != self.n:
            raise GraphError("names length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   names: Optional[Sequence[str]] = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(names) if names is not None else None)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- basic queries ------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check(v)
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def is_complete(self) -> bool:
        return all(a == self.full_mask ^ (1 << v) for v, a in enumerate(self.adj))

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def label(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def with_names(self, names: Optional[Sequence[str]]) -> "Graph":
        return Graph(self.n, self.adj, tuple(names) if names is not None else None)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- structural primitives --------------------------------------------------

def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    g._check(v)
    return tuple(bits(g.adj[v] | 1 << v))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, relabelled to ``0..|s|-1`` in ascending order.

    Returns the graph and the old -> new index map.
    """
    keep = sorted(set(s))
    for v in keep:
        g._check(v)
    index = {v: i for i, v in enumerate(keep)}
    mask = to_mask(keep)
    adj = []
    for v in keep:
        adj.append(to_mask(index[u] for u in bits(g.adj[v] & mask)))
    names = tuple(g.names[v] for v in keep) if g.names is not None else None
    return Graph(len(keep), tuple(adj), names), index


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = to_mask(s)
    return induced_subgraph(g, [v for v in range(g.n) if not drop >> v & 1])


def contract_set(g: Graph, s: Iterable[int]) -> Graph:
    """Replace the vertices of ``s`` by one new vertex adjacent to N(s) \\ s.

    The remaining vertices keep their relative order and the contracted
    vertex is placed last.
    """
    smask = to_mask(s)
    if not smask:
        raise GraphError("cannot contract an empty set")
    for v in bits(smask):
        g._check(v)
    rest = [v for v in range(g.n) if not smask >> v & 1]
    index = {v: i for i, v in enumerate(rest)}
    new = len(rest)
    nbr_s = 0
    for v in bits(smask):
        nbr_s |= g.adj[v]
    nbr_s &= ~smask
    adj = []
    for v in rest:
        a = to_mask(index[u] for u in bits(g.adj[v] & ~smask))
        if nbr_s >> v & 1:
            a |= 1 << new
        adj.append(a)
    adj.append(to_mask(index[u] for u in bits(nbr_s)))
    return Graph(new + 1, tuple(adj))


def component_masks(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components of the subgraph induced by ``within`` as bitmasks."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            v = lowest(frontier)
            frontier &= frontier - 1
            new = g.adj[v] & remaining & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted tuples ordered by their minimum vertex."""
    return [tuple(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = to_mask(perm[u] for u in bits(g.adj[v]))
    return Graph(g.n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [a << g.n for a in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def shortest_path_exists(g: Graph, u: int, v: int) -> bool:
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return True
        for y in bits(g.adj[x]):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


# -- colour refinement ------------------------------------------------------

def refine(g: Graph, colours: Sequence[int]) -> tuple[int, ...]:
    """Stable colour refinement (1-WL) starting from ``colours``.

    Colour names are assigned from sorted signatures, so the result depends
    only on the isomorphism type of (g, colours).
    """
    col = tuple(colours)
    ncol = len(set(col))
    while True:
        sigs = []
        for v in range(g.n):
            sigs.append((col[v], tuple(sorted(col[u] for u in bits(g.adj[v])))))
        names = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(names[s] for s in sigs)
        if len(names) == ncol:
            return new
        col, ncol = new, len(names)


def _colour_classes(col: Sequence[int]) -> dict[int, int]:
    classes: dict[int, int] = {}
    for v, c in enumerate(col):
        classes[c] = classes.get(c, 0) | 1 << v
    return classes


# -- isomorphism and induced embedding -------------------------------------

def _search_order(p: Graph) -> list[int]:
    """Pattern vertex order: each vertex adjacent to an earlier one when possible,
    preferring high degree."""
    order: list[int] = []
    placed = 0
    degs = p.degrees()
    while len(order) < p.n:
        frontier = 0
        for v in order:
            frontier |= p.adj[v]
        frontier &= ~placed
        pool = frontier if frontier else p.full_mask & ~placed
        best = max(bits(pool), key=lambda v: (popcount(p.adj[v] & placed), degs[v], -v))
        order.append(best)
        placed |= 1 << best
    return order


def _embed(g: Graph, p: Graph, allowed: Sequence[int]) -> Optional[dict[int, int]]:
    """Backtracking search for an injective, edge- and non-edge-preserving map
    from ``p`` into ``g``; ``allowed[v]`` restricts the image of ``v``."""
    order = _search_order(p)
    mapping: dict[int, int] = {}

    def extend(k: int, used: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        cand = allowed[v] & ~used
        for u in order[:k]:
            w = mapping[u]
            if p.adj[v] >> u & 1:
                cand &= g.adj[w]
            else:
                cand &= ~g.adj[w]
            if not cand:
                return False
        for w in bits(cand):
            mapping[v] = w
            if extend(k + 1, used | 1 << w):
                return True
        mapping.pop(v, None)
        return False

    if extend(0, 0):
        return dict(sorted(mapping.items()))
    return None


def are_isomorphic(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """Return a bijection ``V(g) -> V(h)`` that is an isomorphism, or None."""
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    union = disjoint_union(g, h)
    col = refine(union, [0] * union.n)
    gcol, hcol = col[:g.n], col[g.n:]
    if sorted(gcol) != sorted(hcol):
        return None
    hclasses = _colour_classes(hcol)
    allowed = [hclasses[c] for c in gcol]
    return _embed(h, g, allowed)


def is_isomorphism(g: Graph, h: Graph, m: dict[int, int]) -> bool:
    if g.n != h.n or sorted(m) != list(range(g.n)) or sorted(m.values()) != list(range(h.n)):
        return False
    return all(g.has_edge(u, v) == h.has_edge(m[u], m[v])
               for u in range(g.n) for v in range(u + 1, g.n))


def find_induced(g: Graph, pattern: Graph) -> Optional[dict[int, int]]:
    """Injective map under which ``pattern`` is an induced subgraph of ``g``."""
    if pattern.n > g.n:
        return None
    gdeg = g.degrees()
    allowed = []
    for d in pattern.degrees():
        allowed.append(to_mask(v for v in range(g.n) if gdeg[v] >= d))
    return _embed(g, pattern, allowed)


def is_induced_embedding(g: Graph, pattern: Graph, m: dict[int, int]) -> bool:
    if sorted(m) != list(range(pattern.n)) or len(set(m.values())) != pattern.n:
        return False
    return all(pattern.has_edge(u, v) == g.has_edge(m[u], m[v])
               for u in range(pattern.n) for v in range(u + 1, pattern.n))


# -- canonical form ---------------------------------------------------------

def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical certificate by individualisation-refinement.

    Two graphs are isomorphic iff their certificates are equal.  Meant for
    small graphs (corpus dedupe); twins inside a cell are tried only once.
    """
    best: list = [None]

    def _cert(perm):
        adj = [0] * g.n
        for v in range(g.n):
            adj[perm[v]] = to_mask(perm[u] for u in bits(g.adj[v]))
        return tuple(adj)

    def search(col):
        classes = _colour_classes(col)
        target = None
        for c in sorted(classes):
            if classes[c] & (classes[c] - 1):
                target = c
                break
        if target is None:
            cert = _cert(col)
            if best[0] is None or cert > best[0]:
                best[0] = cert
            return
        cell = classes[target]
        tried: list[int] = []
        for v in bits(cell):
            twin = False
            for t in tried:
                if g.adj[v] & ~(1 << t) == g.adj[t] & ~(1 << v):
                    twin = True
                    break
            if twin:
                continue
            tried.append(v)
            new = [2 * c + (1 if (c == target and u != v) else 0) for u, c in enumerate(col)]
            search(refine(g, new))

    if g.n == 0:
        return (0, ())
    search(refine(g, [0] * g.n))
    return (g.n, best[0])


def is_chordal(g: Graph) -> bool:
    """No induced cycle of length >= 4 (maximum cardinality search + PEO check)."""
    weight = [0] * g.n
    order: list[int] = []
    numbered = 0
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered |= 1 << v
        for u in bits(g.adj[v] & ~numbered):
            weight[u] += 1
    # reverse of MCS order is a perfect elimination ordering iff g is chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in bits(g.adj[v]) if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: pos[u])
        rest = to_mask(earlier) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True
