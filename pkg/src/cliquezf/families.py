"""Generators for the named graphs and graph families used throughout the package.

Numbering conventions are fixed so outputs can be snapshot-tested:

* circulants, cycles, paths, complete graphs: ``0..n-1`` in natural order;
* Johnson graphs: 2-subsets of ``{1..m}`` in lexicographic order, and for
  ``J'(m,2)`` the singletons follow the pairs;
* vertex-clique graphs: one block per source vertex in source order, each
  cross edge joining the lowest free slots of its two blocks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .graph import Graph, GraphError


class FamilyError(ValueError):
    pass


# -- elementary graphs ---------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge {n-2, n-1} removed."""
    if n < 3:
        raise FamilyError("K_n minus an edge needs n >= 3")
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if e != (n - 2, n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyError("complete bipartite graph needs both sides >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return complete_bipartite(1, k)


def wheel(n: int) -> Graph:
    """Wheel on ``n`` vertices: hub 0 joined to the cycle 1..n-1."""
    if n < 4:
        raise FamilyError("wheel needs n >= 4")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph.from_edges(n, edges)


def circulant(n: int, steps: Sequence[int]) -> Graph:
    s = list(steps)
    if n < 1 or not s:
        raise FamilyError("circulant needs n >= 1 and a non-empty step set")
    if s != sorted(set(s)) or s[0] < 1 or 2 * s[-1] >= n + 1:
        raise FamilyError("steps must satisfy 0 < k1 < ... < kl < (n+1)/2")
    edges = {tuple(sorted((i, (i + k) % n))) for i in range(n) for k in s}
    return Graph.from_edges(n, sorted(edges))


def cayley_cyclic(order: int, connection: Sequence[int]) -> Graph:
    conn = {c % order for c in connection}
    if 0 in conn:
        raise FamilyError("connection set may not contain 0")
    edges = {tuple(sorted((i, (i + c) % order))) for i in range(order) for c in conn}
    return Graph.from_edges(order, sorted(edges))


def musical(n: int) -> Graph:
    """M_n: Cayley graph of Z_2n with connection set {+-1, +-(n-1), n}."""
    if n < 3:
        raise FamilyError("musical graph needs n >= 3")
    return cayley_cyclic(2 * n, [1, -1, n - 1, -(n - 1), n])


def _set_name(s) -> str:
    return "{" + ",".join(str(x) for x in s) + "}"


def johnson(m: int) -> Graph:
    """J(m,2): 2-subsets of {1..m}, adjacent when they intersect."""
    if m < 2:
        raise FamilyError("J(m,2) needs m >= 2")
    verts = list(combinations(range(1, m + 1), 2))
    edges = [(a, b) for a, b in combinations(range(len(verts)), 2) if set(verts[a]) & set(verts[b])]
    return Graph.from_edges(len(verts), edges, [_set_name(v) for v in verts])


def johnson_prime_vertices(m: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, m + 1), 2)) + [(i,) for i in range(1, m + 1)]


def johnson_prime(m: int) -> Graph:
    """J'(m,2): J(m,2) plus the singletons {i}, adjacency by intersection."""
    if m < 1:
        raise FamilyError("J'(m,2) needs m >= 1")
    verts = johnson_prime_vertices(m)
    edges = [(a, b) for a, b in combinations(range(len(verts)), 2) if set(verts[a]) & set(verts[b])]
    return Graph.from_edges(len(verts), edges, [_set_name(v) for v in verts])


def johnson_prime_index(m: int, label: tuple[int, int]) -> int:
    """Vertex of J'(m,2) carrying cell label (i, j); (i, i) is the singleton {i}."""
    i, j = label
    if not 1 <= i <= j <= m:
        raise FamilyError(f"label {label} out of range for m={m}")
    if i == j:
        return comb(m, 2) + i - 1
    # rank of (i, j) among lexicographic 2-subsets of {1..m}
    before = sum(m - a for a in range(1, i))
    return before + (j - i - 1)


def johnson_prime_cover(m: int) -> list[tuple[int, ...]]:
    """The cover {C_i}: C_i = all vertices of J'(m,2) containing i."""
    verts = johnson_prime_vertices(m)
    return [tuple(x for x, s in enumerate(verts) if i in s) for i in range(1, m + 1)]


def cartesian_k2_kn(n: int) -> Graph:
    """K_2 box K_n; vertex (a, i) is a*n + i."""
    if n < 1:
        raise FamilyError("K2 box Kn needs n >= 1")
    edges = [(a * n + i, a * n + j) for a in range(2) for i, j in combinations(range(n), 2)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def t3() -> Graph:
    """The self-compressed graph T_3 (a triangle with a triangle on each side)."""
    a, b, c, d, e, f = range(6)
    return Graph.from_edges(6, [(a, b), (a, c), (b, c), (b, d), (b, e), (c, e), (c, f), (d, e), (e, f)])


def fig1_2tree() -> Graph:
    """A 2-tree on 5 vertices with CC = 3 and no min-max cover with simple intersection."""
    a, b, c, d, e = range(5)
    return Graph.from_edges(5, [(a, b), (b, c), (c, d), (b, d), (a, c), (c, e), (d, e)])


def circ6_plus_vertex() -> Graph:
    """circ(6,{1,2}) labelled by pairs of {1..4}, plus a vertex {4} joined to
    every pair containing 4."""
    base = johnson(4)
    verts = list(combinations(range(1, 5), 2))
    extra = base.n
    edges = base.edges() + [(x, extra) for x, s in enumerate(verts) if 4 in s]
    return Graph.from_edges(base.n + 1, edges, list(base.names) + ["{4}"])


# -- clique chains ---------------------------------------------------------------

def _clique_chain(sizes: Sequence[int], overlaps: Sequence[int], closed: bool
                  ) -> tuple[Graph, list[tuple[int, ...]]]:
    k = len(sizes)
    n_links = k if closed else k - 1
    if len(overlaps) == 1 and n_links > 1:
        overlaps = list(overlaps) * n_links
    if len(overlaps) != n_links:
        raise FamilyError(f"expected {n_links} overlap sizes, got {len(overlaps)}")
    if closed and k < 3:
        raise FamilyError("a cycle of cliques needs at least 3 cliques")
    if not closed and k < 1:
        raise FamilyError("a path of cliques needs at least 1 clique")
    for t in range(n_links):
        a, b = sizes[t], sizes[(t + 1) % k]
        if not 1 <= overlaps[t] < min(a, b):
            raise FamilyError(f"overlap {overlaps[t]} must be >= 1 and below both clique sizes")
    privates = []
    for i in range(k):
        before = overlaps[i - 1] if (closed or i > 0) else 0
        after = overlaps[i] if (closed or i < k - 1) else 0
        p = sizes[i] - before - after
        if p < 0:
            raise FamilyError(f"clique {i + 1} is too small for its two overlaps")
        privates.append(p)
    nxt = 0
    private_ids, shared_ids = [], []
    for i in range(k):
        private_ids.append(list(range(nxt, nxt + privates[i])))
        nxt += privates[i]
        if i < n_links:
            shared_ids.append(list(range(nxt, nxt + overlaps[i])))
            nxt += overlaps[i]
    cliques = []
    for i in range(k):
        members = list(private_ids[i])
        if i < n_links:
            members += shared_ids[i]
        if closed or i > 0:
            members += shared_ids[i - 1]
        cliques.append(tuple(sorted(members)))
    edges = sorted({e for c in cliques for e in combinations(c, 2)})
    g = Graph.from_edges(nxt, edges)
    from .cliques import is_maximal_clique
    from .graph import to_mask
    for c in cliques:
        if not is_maximal_clique(g, to_mask(c)):
            raise FamilyError(f"clique {c} is not maximal in the generated graph")
    return g, cliques


def path_of_cliques(sizes: Sequence[int], overlaps: Sequence[int]) -> Graph:
    return _clique_chain(sizes, overlaps, closed=False)[0]


def cycle_of_cliques(sizes: Sequence[int], overlaps: Sequence[int]) -> Graph:
    return _clique_chain(sizes, overlaps, closed=True)[0]


def clique_chain_cover(sizes: Sequence[int], overlaps: Sequence[int], closed: bool
                       ) -> list[tuple[int, ...]]:
    return _clique_chain(sizes, overlaps, closed)[1]


# -- vertex-clique graphs and X graphs ----------------------------------------------

def vertex_clique_graph(g: Graph) -> Graph:
    """Blow each vertex v up to K_{d(v)} and realise each edge by one cross edge."""
    degs = g.degrees()
    if any(d == 0 for d in degs):
        raise FamilyError("vertex-clique graph undefined with isolated vertices")
    start = []
    total = 0
    for d in degs:
        start.append(total)
        total += d
    edges = []
    for v in range(g.n):
        block = range(start[v], start[v] + degs[v])
        edges += list(combinations(block, 2))
    free = list(start)
    for u, v in g.edges():
        edges.append((free[u], free[v]))
        free[u] += 1
        free[v] += 1
    return Graph.from_edges(total, edges)


def x_graph(n: int, lengths: Sequence[int]) -> Graph:
    """X(n; l1..lk): an n-clique with k cycles, cycle i passing through the clique
    edge {x_{2i}, x_{2i+1}} (0-based) and l_i - 2 new vertices."""
    k = len(lengths)
    if n < 2 * k:
        raise FamilyError("X graph needs n >= 2k so the cycles use disjoint clique vertices")
    if any(length < 3 for length in lengths):
        raise FamilyError("cycle lengths must be >= 3")
    edges = list(combinations(range(n), 2))
    nxt = n
    for i, length in enumerate(lengths):
        a, b = 2 * i, 2 * i + 1
        inner = list(range(nxt, nxt + length - 2))
        nxt += length - 2
        chain = [a] + inner + [b]
        edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(nxt, edges)


# -- textual family specs --------------------------------------------------------------

KINDS = {
    "complete": "complete", "K": "complete",
    "path": "path", "P": "path",
    "cycle": "cycle", "C": "cycle",
    "complete_minus_edge": "complete_minus_edge", "Kminus": "complete_minus_edge",
    "circulant": "circulant", "circ": "circulant",
    "johnson": "johnson", "J": "johnson",
    "johnson_prime": "johnson_prime", "Jp": "johnson_prime",
    "musical": "musical", "M": "musical",
    "path_of_cliques": "path_of_cliques", "poc": "path_of_cliques",
    "cycle_of_cliques": "cycle_of_cliques", "coc": "cycle_of_cliques",
    "vertex_clique_of": "vertex_clique_of", "vc": "vertex_clique_of",
    "X_graph": "X_graph", "X": "X_graph",
    "wheel": "wheel", "W": "wheel",
    "T3": "T3",
    "fig1_2tree": "fig1_2tree", "fig1": "fig1_2tree",
    "circ6_plus_vertex": "circ6_plus_vertex", "circ6p": "circ6_plus_vertex",
    "cartesian_K2_Kn": "cartesian_K2_Kn", "K2xK": "cartesian_K2_Kn",
    "complete_bipartite": "complete_bipartite", "Kbip": "complete_bipartite",
    "star": "star",
}

GRAMMAR = """\
family spec grammar:  KIND[:FIELD[:FIELD...]]   FIELD = int or comma-separated ints
  K:n  P:n  C:n  Kminus:n  W:n  star:k  Kbip:a,b  K2xK:n
  circ:n:k1,k2,...      J:m       Jp:m       M:n
  X:n:l1,l2,...         poc:s1,s2,...:o1,...  coc:s1,s2,...:o1,...
  T3  fig1  circ6p      vc:<family spec>   (vertex-clique graph of another family)
long names (complete, path, cycle, circulant, johnson, johnson_prime, musical,
path_of_cliques, cycle_of_cliques, vertex_clique_of, X_graph, wheel,
complete_minus_edge, cartesian_K2_Kn, complete_bipartite, fig1_2tree,
circ6_plus_vertex) also work."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[tuple[int, ...], ...] = ()
    inner: Optional["FamilySpec"] = field(default=None)

    def __str__(self) -> str:
        if self.inner is not None:
            return f"{self.kind}:{self.inner}"
        parts = [self.kind] + [",".join(str(x) for x in p) for p in self.params]
        return ":".join(parts)


def parse_family(text: str) -> FamilySpec:
    text = text.strip()
    head, _, rest = text.partition(":")
    if head not in KINDS:
        raise FamilyError(f"unknown family {head!r}\n{GRAMMAR}")
    kind = KINDS[head]
    if kind == "vertex_clique_of":
        if not rest:
            raise FamilyError("vc needs an inner family spec")
        return FamilySpec(kind, (), parse_family(rest))
    params = []
    if rest:
        for fld in rest.split(":"):
            if not re.fullmatch(r"\d+(,\d+)*", fld):
                raise FamilyError(f"bad field {fld!r} in {text!r}\n{GRAMMAR}")
            params.append(tuple(int(x) for x in fld.split(",")))
    return FamilySpec(kind, tuple(params))


def _scalars(spec: FamilySpec, count: int) -> list[int]:
    flat = [x for p in spec.params for x in p]
    if len(flat) != count:
        raise FamilyError(f"{spec.kind} expects {count} integer parameter(s)")
    return flat


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    k = spec.kind
    p = spec.params
    try:
        if k == "complete":
            return complete(*_scalars(spec, 1))
        if k == "path":
            return path(*_scalars(spec, 1))
        if k == "cycle":
            return cycle(*_scalars(spec, 1))
        if k == "complete_minus_edge":
            return complete_minus_edge(*_scalars(spec, 1))
        if k == "wheel":
            return wheel(*_scalars(spec, 1))
        if k == "star":
            return star(*_scalars(spec, 1))
        if k == "complete_bipartite":
            return complete_bipartite(*_scalars(spec, 2))
        if k == "cartesian_K2_Kn":
            return cartesian_k2_kn(*_scalars(spec, 1))
        if k == "johnson":
            return johnson(*_scalars(spec, 1))
        if k == "johnson_prime":
            return johnson_prime(*_scalars(spec, 1))
        if k == "musical":
            return musical(*_scalars(spec, 1))
        if k == "circulant":
            if len(p) != 2 or len(p[0]) != 1:
                raise FamilyError("circ expects circ:n:k1,k2,...")
            return circulant(p[0][0], p[1])
        if k == "X_graph":
            if len(p) != 2 or len(p[0]) != 1:
                raise FamilyError("X expects X:n:l1,l2,...")
            return x_graph(p[0][0], p[1])
        if k in ("path_of_cliques", "cycle_of_cliques"):
            if len(p) != 2:
                raise FamilyError(f"{k} expects sizes:overlaps")
            fn = path_of_cliques if k == "path_of_cliques" else cycle_of_cliques
            return fn(p[0], p[1])
        if k == "T3":
            _scalars(spec, 0)
            return t3()
        if k == "fig1_2tree":
            _scalars(spec, 0)
            return fig1_2tree()
        if k == "circ6_plus_vertex":
            _scalars(spec, 0)
            return circ6_plus_vertex()
        if k == "vertex_clique_of":
            return vertex_clique_graph(generate(spec.inner))
    except GraphError as exc:
        raise FamilyError(str(exc)) from exc
    raise FamilyError(f"unknown family kind {k!r}")


def subdivide(g: Graph) -> Graph:
    """Insert one new vertex in the middle of every edge (new vertices follow the old)."""
    edges = []
    for k, (u, v) in enumerate(g.edges()):
        mid = g.n + k
        edges += [(u, mid), (mid, v)]
    return Graph.from_edges(g.n + g.num_edges(), edges)


def line_graph(g: Graph) -> Graph:
    es = g.edges()
    adj_pairs = [(a, b) for a, b in combinations(range(len(es)), 2) if set(es[a]) & set(es[b])]
    return Graph.from_edges(len(es), adj_pairs)
