"""Theorem registry and runner.

Each registered check has a stable id, a short anchor naming the statement it
re-verifies, a hypothesis predicate (returns a skip reason or None) and a body
that computes expected and observed values.  Checks run per instance; an
instance is a graph plus, for family members, the family spec that built it.
"""

from __future__ import annotations

import json
import signal
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import cached_property
from math import comb
from typing import Any, Callable, Iterable, Optional, Sequence

from . import families as fam
from .cliques import (CliqueCover, certify, clique_cover_number, clique_number,
                      enumerate_minmax_si_covers,
                      maximal_clique_masks, maximalize_cover, minimum_cover)
from .compressed import (CompressedGraph, compress, compressed_cliques_graph,
                         induced_cover, label_embedding)
from .corpus import enumerate_connected, read_corpus
from .detect import check_compressed_candidate, find_claw, find_suspended_cycle
from .forcing import (ForcingRecord, all_optimal_positive_sets,
                      count_edge_maximal_cliques, forcing_forest,
                      is_induced_forest, reduced_graph,
                      standard_zero_forcing, twin_pairs, validate_record, zplus,
                      Force)
from .graph import (Graph, are_isomorphic, bits, component_masks, find_induced,
                    is_chordal, is_connected, to_mask)
from .io import to_graph6

DEFAULT_TIMEOUT = 30.0
PASS, FAIL, SKIP = "pass", "fail", "skipped"


class CheckTimeout(Exception):
    pass


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    spec: Optional[fam.FamilySpec] = None

    @property
    def kind(self) -> Optional[str]:
        return self.spec.kind if self.spec is not None else None


@dataclass
class CheckResult:
    theorem: str
    instance: str
    expected: Any
    observed: Any
    verdict: str
    reason: Optional[str] = None
    witness: Optional[dict] = None

    def to_json_obj(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if v is not None or k in ("expected", "observed")}
        return d


# -- per-instance cache ----------------------------------------------------------

class Context:
    """Lazily computed invariants of one instance, shared by all checks."""

    def __init__(self, inst: Instance):
        self.inst = inst
        self.g = inst.graph.with_names(None)

    @cached_property
    def covers(self) -> list[CliqueCover]:
        return enumerate_minmax_si_covers(self.g)

    @property
    def coverable(self) -> bool:
        return bool(self.covers)

    @cached_property
    def cc(self) -> int:
        return clique_cover_number(self.g)

    @cached_property
    def omega(self) -> int:
        return clique_number(self.g)

    @cached_property
    def cg(self) -> CompressedGraph:
        return compressed_cliques_graph(self.g, self.covers)

    @cached_property
    def zp(self) -> tuple[int, tuple[int, ...], ForcingRecord]:
        return zplus(self.g)

    @cached_property
    def optimal_sets(self) -> list[tuple[int, ...]]:
        return all_optimal_positive_sets(self.g, self.zp[0])

    @cached_property
    def vc_order(self) -> Optional[int]:
        """Order of the vertex-clique graph this instance is about, if any."""
        if self.inst.kind == "vertex_clique_of":
            return self.g.n
        if self.g.n < 2 or any(a == 0 for a in self.g.adj):
            return None
        return 2 * self.g.num_edges()

    @cached_property
    def vc_graph(self) -> Optional[Graph]:
        if self.inst.kind == "vertex_clique_of":
            return self.g
        if self.vc_order is None:
            return None
        return fam.vertex_clique_graph(self.g)

    @cached_property
    def vc_source(self) -> Optional[Graph]:
        if self.inst.kind == "vertex_clique_of":
            return fam.generate(self.inst.spec.inner)
        return self.g if self.vc_graph is not None else None

    def witness(self, **extra) -> dict:
        w = {"graph6": to_graph6(self.g)}
        w.update(extra)
        return w


Outcome = tuple[Any, Any, bool, Optional[dict]]


@dataclass(frozen=True)
class Theorem:
    id: str
    anchor: str
    hypothesis: Callable[[Context], Optional[str]]
    body: Callable[[Context], Outcome]


REGISTRY: dict[str, Theorem] = {}


def theorem(tid: str, anchor: str, hypothesis: Optional[Callable[[Context], Optional[str]]] = None):
    def deco(fn):
        REGISTRY[tid] = Theorem(tid, anchor, hypothesis or (lambda ctx: None), fn)
        return fn
    return deco


# -- hypothesis predicates ----------------------------------------------------------

def _coverable(ctx: Context) -> Optional[str]:
    if ctx.g.n == 0:
        return "empty graph"
    return None if ctx.coverable else "not simply coverable"


def _two_covers(ctx: Context) -> Optional[str]:
    r = _coverable(ctx)
    if r:
        return r
    return None if len(ctx.covers) >= 2 else "fewer than two min-max SI covers"


def _connected_noncomplete_coverable(ctx: Context) -> Optional[str]:
    if not is_connected(ctx.g) or ctx.g.n == 0:
        return "G is not connected"
    if ctx.g.is_complete():
        return "G is complete"
    return _coverable(ctx)


def _not_k1(ctx: Context) -> Optional[str]:
    # Z+(K_1) = 1 by convention, which is not n - 1 = |V| - CC
    return "K_1 (boundary convention Z+ = 1)" if ctx.g.n == 1 else None


def _family(*kinds: str) -> Callable[[Context], Optional[str]]:
    def pred(ctx: Context) -> Optional[str]:
        return None if ctx.inst.kind in kinds else f"not a {'/'.join(kinds)} instance"
    return pred


def _nonempty(ctx: Context) -> Optional[str]:
    return None if ctx.g.n else "empty graph"


def _small(limit: int) -> Callable[[Context], Optional[str]]:
    def pred(ctx: Context) -> Optional[str]:
        if ctx.g.n == 0:
            return "empty graph"
        return None if ctx.g.n <= limit else f"more than {limit} vertices"
    return pred


def _vc_small(limit: int) -> Callable[[Context], Optional[str]]:
    def pred(ctx: Context) -> Optional[str]:
        size = ctx.vc_order
        if size is None:
            return "no vertex-clique graph (isolated vertex or too small)"
        if size > limit:
            return f"vertex-clique graph has more than {limit} vertices"
        return None if is_connected(ctx.vc_graph) else "vertex-clique graph is disconnected"
    return pred


# -- forcing basics --------------------------------------------------------

@theorem("zplus-clique", "Z+(K_n) = Z(K_n) = n-1; a k-clique forces Z, Z+ >= k-1",
         lambda ctx: _small(12)(ctx) or _not_k1(ctx))
def _zplus_clique(ctx: Context) -> Outcome:
    zp = ctx.zp[0]
    z = standard_zero_forcing(ctx.g)
    if ctx.g.is_complete():
        exp = {"zplus": ctx.g.n - 1, "z": ctx.g.n - 1}
        obs = {"zplus": zp, "z": z}
        return exp, obs, exp == obs, None
    lb = ctx.omega - 1
    return {"lower": lb}, {"zplus": zp, "z": z}, zp >= lb and z >= lb, None


@theorem("zplus-le-z", "Z+(G) <= Z(G)", _small(12))
def _zplus_le_z(ctx: Context) -> Outcome:
    z = standard_zero_forcing(ctx.g)
    zp = ctx.zp[0]
    return {"zplus<=z": True}, {"zplus": zp, "z": z}, zp <= z, None


@theorem("forcing-forest", "forces of a positive zero forcing process form vertex-disjoint induced rooted trees",
         _nonempty)
def _forcing_forest(ctx: Context) -> Outcome:
    rec = ctx.zp[2]
    ok = validate_record(rec) and rec.complete
    forest = forcing_forest(rec) if ok else None
    ok = ok and forest is not None and is_induced_forest(ctx.g, forest)
    trees = forest.trees() if forest is not None else None
    return {"valid": True}, {"valid": ok, "trees": trees}, ok, None if ok else ctx.witness(
        initial=list(rec.initial))


# -- clique covers ------------------------------------------------------------

@theorem("lem-cc-complete", "G is complete iff CC(G) = 1", _nonempty)
def _cc_complete(ctx: Context) -> Outcome:
    exp = ctx.g.is_complete()
    obs = ctx.cc == 1
    return {"complete": exp}, {"cc==1": obs, "cc": ctx.cc}, exp == obs, None


@theorem("prop-minmax-exists", "every graph has a min-max clique covering", _nonempty)
def _minmax_exists(ctx: Context) -> Outcome:
    cov = maximalize_cover(ctx.g, minimum_cover(ctx.g))
    cert = certify(ctx.g, cov.cliques, cc=ctx.cc)
    ok = bool(cert.covers_all_edges and cert.all_maximal and cert.minimum_size)
    return ({"size": ctx.cc, "maximal": True},
            {"size": len(cert), "maximal": cert.all_maximal, "covers": cert.covers_all_edges},
            ok, None if ok else ctx.witness(cover=[list(c) for c in cov.cliques]))


# -- two covers force circ(6,{1,2}) ---------------------------------------------

_CIRC6 = fam.circulant(6, [1, 2])


@theorem("thm-two-covers-induced", "two distinct min-max SI covers imply an induced circ(6,{1,2})",
         _two_covers)
def _two_covers_induced(ctx: Context) -> Outcome:
    m = find_induced(ctx.g, _CIRC6)
    ok = m is not None
    return {"induced circ(6,{1,2})": True}, {"covers": len(ctx.covers), "found": ok}, ok, \
        None if ok else ctx.witness(covers=[[list(c) for c in cv.cliques] for cv in ctx.covers])


# -- compression -------------------------------------------------------------------

@theorem("thm-self-compressed", "C(G) ~ G iff every cell has at most one vertex", _coverable)
def _self_compressed(ctx: Context) -> Outcome:
    cg = ctx.cg
    by_cells = all(len(cg.preimage([i])) <= 1 for i in range(cg.graph.n))
    by_iso = are_isomorphic(cg.graph.with_names(None), ctx.g) is not None
    return {"cells<=1": by_cells}, {"isomorphic": by_iso}, by_cells == by_iso, None


@theorem("cor-idempotent", "C(C(G)) = C(G)", _coverable)
def _idempotent(ctx: Context) -> Outcome:
    inner = ctx.cg.graph.with_names(None)
    again = compressed_cliques_graph(inner)
    ok = are_isomorphic(again.graph.with_names(None), inner) is not None
    return {"n": inner.n}, {"n": again.graph.n, "isomorphic": ok}, ok, None


@theorem("prop-phi-connects", "u, v connected in G implies phi(u) = phi(v) or phi(u), phi(v) connected in C(G)",
         _coverable)
def _phi_connects(ctx: Context) -> Outcome:
    cg = ctx.cg
    bad = []
    comp_of_c = {}
    for i, c in enumerate(component_masks(cg.graph)):
        for x in bits(c):
            comp_of_c[x] = i
    for comp in component_masks(ctx.g):
        vs = list(bits(comp))
        for u in vs:
            for v in vs:
                if u < v and comp_of_c[cg.phi[u]] != comp_of_c[cg.phi[v]]:
                    bad.append((u, v))
    ok = not bad
    return {"violations": 0}, {"violations": len(bad)}, ok, None if ok else ctx.witness(pairs=bad[:5])


# -- uniqueness ----------------------------------------------------------------------

@theorem("lem-neighbour", "for a min-max SI cover, v in C1 & C2 iff N[v] = C1 | C2", _coverable)
def _neighbour(ctx: Context) -> Outcome:
    bad = []
    for cov in ctx.covers:
        masks = cov.masks
        for v in range(ctx.g.n):
            closed = ctx.g.adj[v] | 1 << v
            for a in range(len(masks)):
                for b in range(a + 1, len(masks)):
                    inside = bool(masks[a] >> v & 1 and masks[b] >> v & 1)
                    equal = closed == masks[a] | masks[b]
                    if inside != equal:
                        bad.append((v, cov.cliques[a], cov.cliques[b]))
    ok = not bad
    return {"violations": 0}, {"violations": len(bad)}, ok, None if ok else ctx.witness(cases=bad[:5])


@theorem("thm-unique", "all min-max SI covers give isomorphic compressed graphs", _coverable)
def _unique(ctx: Context) -> Outcome:
    first = compress(ctx.g, ctx.covers[0], check=False).graph.with_names(None)
    mismatched = []
    for k, cov in enumerate(ctx.covers[1:], start=1):
        other = compress(ctx.g, cov, check=False).graph.with_names(None)
        if are_isomorphic(first, other) is None:
            mismatched.append(k)
    ok = not mismatched
    return {"classes": 1}, {"covers": len(ctx.covers), "mismatched": mismatched}, ok, \
        None if ok else ctx.witness()


@theorem("thm-unique-iff", "two distinct min-max SI covers imply C(G) = circ(6,{1,2})", _two_covers)
def _unique_iff(ctx: Context) -> Outcome:
    iso = are_isomorphic(ctx.cg.graph.with_names(None), _CIRC6) is not None
    induced = find_induced(ctx.g, _CIRC6) is not None
    ok = iso and induced
    return ({"C(G)~circ(6,{1,2})": True, "induced": True},
            {"C(G)~circ(6,{1,2})": iso, "induced": induced, "covers": len(ctx.covers)},
            ok, None if ok else ctx.witness())


# -- cover numbers ----------------------------------------------------------------------

@theorem("lem-preimage", "the preimage under phi of a clique of C(G) is a clique of G", _coverable)
def _preimage(ctx: Context) -> Outcome:
    cg = ctx.cg
    bad = []
    for m in maximal_clique_masks(cg.graph):
        pre = to_mask(cg.preimage(bits(m)))
        if not ctx.g.is_clique(pre):
            bad.append(list(bits(m)))
    ok = not bad
    return {"violations": 0}, {"violations": len(bad)}, ok, None if ok else ctx.witness(cliques=bad)


@theorem("thm-cc-compress", "CC(G) = CC(C(G))", _coverable)
def _cc_compress(ctx: Context) -> Outcome:
    c2 = clique_cover_number(ctx.cg.graph)
    return {"cc": ctx.cc}, {"cc": c2}, ctx.cc == c2, None


@theorem("cor-induced-cover", "the cover {D_i} of C(G) is min-max with simple intersection", _coverable)
def _induced_cover(ctx: Context) -> Outcome:
    d = induced_cover(ctx.cg)
    ok = d.is_min_max_si()
    obs = {"covers": d.covers_all_edges, "maximal": d.all_maximal,
           "minimum": d.minimum_size, "simple": d.simple_intersection}
    return {k: True for k in obs}, obs, ok, None if ok else ctx.witness(cover=[list(c) for c in d.cliques])


# -- positive zero forcing and compression -------------------------------------------

@theorem("lem-twins", "N[u] = N[v] implies every positive zero forcing set meets {u, v}", _small(16))
def _twins(ctx: Context) -> Outcome:
    pairs = twin_pairs(ctx.g)
    bad = [(s, p) for s in ctx.optimal_sets for p in pairs if not set(s) & set(p)]
    ok = not bad
    return {"violations": 0}, {"pairs": len(pairs), "optimal_sets": len(ctx.optimal_sets),
                               "violations": len(bad)}, ok, None if ok else ctx.witness(set=list(bad[0][0]))


def _cell_masks(cg: CompressedGraph) -> list[int]:
    return [to_mask(cg.preimage([i])) for i in range(cg.graph.n)]


@theorem("lem-onlyone", "outside a positive zero forcing set every cell has at most one vertex",
         lambda ctx: _coverable(ctx) or _small(16)(ctx))
def _onlyone(ctx: Context) -> Outcome:
    cells = _cell_masks(ctx.cg)
    full = ctx.g.full_mask
    bad = []
    for s in ctx.optimal_sets:
        white = full & ~to_mask(s)
        for c in cells:
            if bin(white & c).count("1") > 1:
                bad.append(s)
                break
    ok = not bad
    return {"violations": 0}, {"optimal_sets": len(ctx.optimal_sets), "violations": len(bad)}, ok, \
        None if ok else ctx.witness(set=list(bad[0]))


def lift_forcing(cg: CompressedGraph, record: ForcingRecord) -> tuple[list[int], list[Force]]:
    """Lift a forcing process on C(G) to G: one white vertex per white cell.

    Returns the black set for G and the replayed force list (cell
    representatives standing in for compressed vertices).
    """
    g = cg.source
    white_c = cg.graph.full_mask & ~to_mask(record.initial)
    rep = []
    for x in range(cg.graph.n):
        rep.append(min(cg.preimage([x])))
    black = [v for v in range(g.n) if not (white_c >> cg.phi[v] & 1 and rep[cg.phi[v]] == v)]
    steps = [Force(rep[s.forcer], rep[s.forced], ()) for s in record.steps]
    return black, steps


def _replay(g: Graph, black: Sequence[int], forces: Sequence[Force]) -> Optional[ForcingRecord]:
    state = to_mask(black)
    out = []
    for f in forces:
        if not state >> f.forcer & 1 or state >> f.forced & 1:
            return None
        comp = next(c for c in component_masks(g, g.full_mask & ~state) if c >> f.forced & 1)
        if g.adj[f.forcer] & comp != 1 << f.forced:
            return None
        out.append(Force(f.forcer, f.forced, tuple(bits(comp))))
        state |= 1 << f.forced
    return ForcingRecord(g, tuple(sorted(black)), tuple(out), tuple(bits(state)))


@theorem("thm-zplus-compress", "|V(G)| - Z+(G) = |V(C(G))| - Z+(C(G)), with matching forcing trees",
         _connected_noncomplete_coverable)
def _zplus_compress(ctx: Context) -> Outcome:
    cgg = ctx.cg.graph.with_names(None)
    zc, _, rec_c = zplus(cgg)
    lhs = ctx.g.n - ctx.zp[0]
    rhs = cgg.n - zc
    black, forces = lift_forcing(ctx.cg, rec_c)
    lifted = _replay(ctx.g, black, forces)
    trees_ok = lifted is not None and lifted.complete
    if trees_ok:
        # the lifted forest equals the forest of C(G) plus extra isolated vertices
        sizes_g = sorted(len(t) for t in forcing_forest(lifted).trees() if len(t) > 1)
        sizes_c = sorted(len(t) for t in forcing_forest(rec_c).trees() if len(t) > 1)
        trees_ok = sizes_g == sizes_c
    ok = lhs == rhs and trees_ok
    return ({"|V|-Z+": lhs, "trees_match": True},
            {"|V(C)|-Z+(C)": rhs, "trees_match": trees_ok, "zplus": ctx.zp[0], "zplus_C": zc},
            ok, None if ok else ctx.witness(zplus_set=list(ctx.zp[1])))


# -- Johnson graphs ----------------------------------------------------------------

@theorem("lem-jprime-embed", "C(G) is an induced subgraph of J'(CC(G),2) when CC(G) > 1",
         lambda ctx: _coverable(ctx) or (None if ctx.cc > 1 else "CC(G) = 1"))
def _jprime_embed(ctx: Context) -> Outcome:
    cgg = ctx.cg.graph.with_names(None)
    size = comb(ctx.cc, 2) + ctx.cc
    if size <= 36:
        rep = check_compressed_candidate(cgg)
        method = "search"
    else:
        rep = check_compressed_candidate(cgg, label_embedding(ctx.cg))
        method = "labels"
    ok = rep.embeds_in_jprime is True
    return {"embeds": True}, {"embeds": rep.embeds_in_jprime, "method": method, "m": ctx.cc}, ok, \
        None if ok else ctx.witness()


@theorem("lem-johnson", "|V|, CC and Z+ of J(m,2) and J'(m,2) for m > 3", _family("johnson", "johnson_prime"))
def _johnson(ctx: Context) -> Outcome:
    m = ctx.inst.spec.params[0][0]
    if m <= 3:
        return {"m>3": True}, {"m": m}, True, None
    pairs = comb(m, 2)
    if ctx.inst.kind == "johnson":
        exp = {"n": pairs, "cc": m, "zplus": pairs - m + 2}
    else:
        exp = {"n": pairs + m, "cc": m, "zplus": pairs}
    obs = {"n": ctx.g.n, "cc": ctx.cc, "zplus": ctx.zp[0]}
    ok = exp == obs
    if ctx.inst.kind == "johnson_prime":
        cov = certify(ctx.g, fam.johnson_prime_cover(m), cc=ctx.cc)
        obs["canonical_cover_minmax_si"] = cov.is_min_max_si()
        exp["canonical_cover_minmax_si"] = True
        ok = ok and cov.is_min_max_si()
    return exp, obs, ok, None


# -- forbidden subgraphs --------------------------------------------------------------

@theorem("prop-claw-free", "G and C(G) are claw-free", _coverable)
def _claw_free(ctx: Context) -> Outcome:
    a = find_claw(ctx.g)
    b = find_claw(ctx.cg.graph)
    ok = a is None and b is None
    return {"G": True, "C(G)": True}, {"G": a is None, "C(G)": b is None}, ok, \
        None if ok else ctx.witness(claw=list((a or b).witness))


@theorem("lem-no-suspended-cycle", "C(G) has no suspended cycle", _coverable)
def _no_suspended(ctx: Context) -> Outcome:
    s = find_suspended_cycle(ctx.cg.graph)
    ok = s is None
    return {"suspended_cycle": None}, {"suspended_cycle": None if ok else list(s.witness)}, ok, \
        None if ok else ctx.witness()


# -- vertex-clique and reduced graphs -------------------------------------------------

@theorem("lem-vertex-clique", "a vertex-clique graph H is a line graph, simply coverable and C(H) = H",
         _vc_small(30))
def _vertex_clique(ctx: Context) -> Outcome:
    h = ctx.vc_graph
    src = ctx.vc_source
    covers = enumerate_minmax_si_covers(h)
    coverable = bool(covers)
    self_c = False
    if coverable:
        cg = compressed_cliques_graph(h, covers[:1])
        self_c = all(len(cg.preimage([i])) <= 1 for i in range(cg.graph.n))
    lg = fam.line_graph(fam.subdivide(src))
    line = are_isomorphic(lg, h) is not None
    ok = coverable and self_c and line
    return ({"line_graph": True, "coverable": True, "self_compressed": True},
            {"line_graph": line, "coverable": coverable, "self_compressed": self_c}, ok, None)


@theorem("lem-reduced", "Z+(G) = Z+(R(G))", _small(24))
def _reduced(ctx: Context) -> Outcome:
    r = reduced_graph(ctx.g)
    zr = zplus(r)[0]
    return {"zplus": ctx.zp[0]}, {"zplus_R": zr, "R_n": r.n}, zr == ctx.zp[0], None


@theorem("thm-forest", "Z+ of a connected vertex-clique graph from its reduced graph", _vc_small(18))
def _forest(ctx: Context) -> Outcome:
    h = ctx.vc_graph
    r = reduced_graph(h)
    zh = zplus(h)[0]
    obs: dict = {"zplus": zh, "R_n": r.n}
    if r.n == 1:
        exp = {"zplus": 1}
        ok = zh == 1
    elif r.n == 3 and r.num_edges() == 3:
        exp = {"zplus": 2}
        ok = zh == 2
    elif r.n > 3:
        k = count_edge_maximal_cliques(r)
        exp = {"zplus<=k": k}
        obs["k"] = k
        ok = zh <= k
    else:
        exp = {"case": "R(H) has 2 or 3 vertices but is not a triangle"}
        ok = False
    return exp, obs, ok, None if ok else ctx.witness()


@theorem("ex-k2n-reduced", "for H the vertex-clique graph of K_{2,n}: R(H) = K_2 box K_n and Z+(R(H)) = n = k",
         lambda ctx: None if (ctx.inst.kind == "vertex_clique_of" and ctx.inst.spec.inner.kind ==
                              "complete_bipartite" and ctx.inst.spec.inner.params[0][0] == 2)
         else "not a vertex-clique graph of K_{2,n}")
def _k2n(ctx: Context) -> Outcome:
    n = ctx.inst.spec.inner.params[0][1]
    r = reduced_graph(ctx.g)
    iso = are_isomorphic(r, fam.cartesian_k2_kn(n)) is not None
    zr = zplus(r)[0]
    k = count_edge_maximal_cliques(r)
    exp = {"R~K2xKn": True, "zplus_R": n, "k": n, "zplus_H": n}
    obs = {"R~K2xKn": iso, "zplus_R": zr, "k": k, "zplus_H": ctx.zp[0]}
    return exp, obs, exp == obs, None


# -- examples --------------------------------------------------------------------------

@theorem("cor-ccbound", "|V(G)| - CC(G) <= Z+(G)", _nonempty)
def _ccbound(ctx: Context) -> Outcome:
    lhs = ctx.g.n - ctx.cc
    return {"|V|-CC": lhs}, {"zplus": ctx.zp[0]}, lhs <= ctx.zp[0], None


def _chordal_hyp(ctx: Context) -> Optional[str]:
    r = _coverable(ctx) or _not_k1(ctx)
    if r:
        return r
    return None if is_chordal(ctx.cg.graph) else "C(G) has an induced cycle of length >= 4"


@theorem("thm-chordal", "C(G) without induced cycles other than K_3 gives Z+(G) = |V(G)| - CC(G)", _chordal_hyp)
def _chordal(ctx: Context) -> Outcome:
    exp = ctx.g.n - ctx.cc
    return {"zplus": exp}, {"zplus": ctx.zp[0]}, exp == ctx.zp[0], None


@theorem("cor-path-of-cliques", "a path of cliques has Z+ = |V| - CC", _family("path_of_cliques"))
def _poc(ctx: Context) -> Outcome:
    exp = ctx.g.n - ctx.cc
    return {"zplus": exp}, {"zplus": ctx.zp[0]}, exp == ctx.zp[0], None


@theorem("lem-musical", "M_n has 2n vertices, 5n edges, Z+(M_n) = n+2 and C(M_n) = C_n", _family("musical"))
def _musical(ctx: Context) -> Outcome:
    n = ctx.inst.spec.params[0][0]
    exp = {"n": 2 * n, "m": 5 * n, "zplus": n + 2, "C(M)~C_n": True}
    iso = ctx.coverable and are_isomorphic(ctx.cg.graph.with_names(None), fam.cycle(n)) is not None
    obs = {"n": ctx.g.n, "m": ctx.g.num_edges(), "zplus": ctx.zp[0], "C(M)~C_n": bool(iso)}
    if ctx.coverable:
        obs["C(M)_n"] = ctx.cg.graph.n
    return exp, obs, all(obs[k] == v for k, v in exp.items()), None if obs["C(M)~C_n"] else ctx.witness()


def _coc_cover(ctx: Context) -> list[tuple[int, ...]]:
    sizes, overlaps = ctx.inst.spec.params
    return fam.clique_chain_cover(sizes, overlaps, closed=True)


@theorem("thm-cycle-of-cliques", "a cycle of cliques has Z+ <= |V| - CC + 2", _family("cycle_of_cliques"))
def _coc(ctx: Context) -> Outcome:
    bound = ctx.g.n - ctx.cc + 2
    return {"zplus<=": bound}, {"zplus": ctx.zp[0]}, ctx.zp[0] <= bound, None


def _coc_private_hyp(ctx: Context) -> Optional[str]:
    r = _family("cycle_of_cliques")(ctx)
    if r:
        return r
    cover = certify(ctx.g, _coc_cover(ctx))
    if not cover.is_min_max_si():
        return "specified cliques are not a min-max SI cover"
    sizes, overlaps = ctx.inst.spec.params
    k = len(sizes)
    ov = list(overlaps) * k if len(overlaps) == 1 else list(overlaps)
    nonempty = sum(1 for i in range(k) if sizes[i] - ov[i - 1] - ov[i] > 0)
    return None if nonempty >= 2 else "fewer than two non-empty private cells"


@theorem("thm-cycle-of-cliques-equal", "a cycle of cliques with two non-empty private cells has Z+ = |V| - CC",
         _coc_private_hyp)
def _coc_equal(ctx: Context) -> Outcome:
    exp = ctx.g.n - ctx.cc
    return {"zplus": exp}, {"zplus": ctx.zp[0]}, exp == ctx.zp[0], None


@theorem("thm-X", "X(n; l1..lk): |V| = n + sum(l_i - 2), CC = 1 + sum(l_i - 1), Z+ = n - 1 = |V| - CC + k",
         _family("X_graph"))
def _x(ctx: Context) -> Outcome:
    (n,), ls = ctx.inst.spec.params
    k = len(ls)
    exp = {"n": n + sum(x - 2 for x in ls), "cc": 1 + sum(x - 1 for x in ls), "zplus": n - 1,
           "|V|-CC+k": n - 1, "unique_cover_si": True}
    covers = ctx.covers
    obs = {"n": ctx.g.n, "cc": ctx.cc, "zplus": ctx.zp[0], "|V|-CC+k": ctx.g.n - ctx.cc + k,
           "unique_cover_si": len(covers) == 1}
    return exp, obs, exp == obs, None if exp == obs else ctx.witness()


# -- running ----------------------------------------------------------------------------------------

def _alarm(signum, frame):
    raise CheckTimeout()


def run_instance(inst: Instance, theorem_ids: Sequence[str], timeout: Optional[float] = DEFAULT_TIMEOUT
                 ) -> list[CheckResult]:
    ctx = Context(inst)
    out = []
    use_alarm = timeout is not None and timeout > 0 and hasattr(signal, "setitimer")
    for tid in theorem_ids:
        th = REGISTRY[tid]
        old = None
        if use_alarm:
            old = signal.signal(signal.SIGALRM, _alarm)
            signal.setitimer(signal.ITIMER_REAL, timeout)
        try:
            reason = th.hypothesis(ctx)
            if reason:
                out.append(CheckResult(tid, inst.name, None, None, SKIP, reason))
                continue
            exp, obs, ok, wit = th.body(ctx)
            if not ok and wit is None:
                wit = ctx.witness()
            out.append(CheckResult(tid, inst.name, exp, obs, PASS if ok else FAIL, None,
                                   None if ok else wit))
        except CheckTimeout:
            out.append(CheckResult(tid, inst.name, None, None, SKIP, f"timeout after {timeout:g} s"))
        except Exception as exc:  # an exception inside a check is a failed check, not a crash
            out.append(CheckResult(tid, inst.name, None, None, FAIL, f"error: {type(exc).__name__}: {exc}",
                                   ctx.witness()))
        finally:
            if use_alarm:
                signal.setitimer(signal.ITIMER_REAL, 0)
                signal.signal(signal.SIGALRM, old)
    return out


def _task(args) -> list[dict]:
    name, g6, spec_text, tids, timeout = args
    from .io import from_graph6
    spec = fam.parse_family(spec_text) if spec_text else None
    g = fam.generate(spec) if spec is not None else from_graph6(g6)
    return [r.__dict__ for r in run_instance(Instance(name, g, spec), tids, timeout)]


def run_checks(instances: Iterable[Instance], theorems: Optional[Sequence[str]] = None,
               jobs: int = 1, timeout: Optional[float] = DEFAULT_TIMEOUT) -> list[CheckResult]:
    """Run the selected theorems (all by default) on every instance.

    Results are ordered by theorem id, then by instance position, regardless
    of ``jobs``.
    """
    tids = list(theorems) if theorems else list(REGISTRY)
    unknown = [t for t in tids if t not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown theorem id(s): {', '.join(unknown)}")
    insts = list(instances)
    order = {t: i for i, t in enumerate(sorted(tids))}
    pos = {inst.name: i for i, inst in enumerate(insts)}
    results: list[CheckResult] = []
    if jobs <= 1:
        for inst in insts:
            results.extend(run_instance(inst, tids, timeout))
    else:
        tasks = [(inst.name, to_graph6(inst.graph), str(inst.spec) if inst.spec else None, tids, timeout)
                 for inst in insts]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for batch in ex.map(_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                results.extend(CheckResult(**d) for d in batch)
    results.sort(key=lambda r: (order[r.theorem], pos.get(r.instance, 0)))
    return results


# -- instance sources ----------------------------------------------------------------------------------

DEFAULT_FAMILIES = (
    "K:2", "K:3", "K:5", "P:5", "C:5", "C:6", "Kminus:4", "Kminus:5", "W:6", "W:7", "star:3",
    "circ:6:1,2", "fig1", "circ6p", "T3",
    "M:3", "M:4", "M:5", "M:6",
    "J:4", "J:5", "Jp:4", "Jp:5",
    "X:8:4,4,4,4", "X:10:3,4,5",
    "vc:Kbip:2,3", "vc:Kbip:2,4", "vc:C:3", "vc:P:4",
    "poc:3,3:1", "poc:3,4,5:1,2", "coc:2,2,2,2,2:1", "coc:4,4,4,4:1", "coc:5,5,5,5:2", "coc:3,4,4,5:1,1,2,1",
    "K2xK:3",
)


def family_instances(specs: Iterable[str]) -> list[Instance]:
    out = []
    for text in specs:
        spec = fam.parse_family(text)
        out.append(Instance(f"family:{spec}", fam.generate(spec), spec))
    return out


def corpus_instances(max_n: int, min_n: int = 1, max_n_guard: int = 7) -> list[Instance]:
    out = []
    for g in enumerate_connected(max_n, min_n, max_n_guard):
        out.append(Instance(f"g6:{to_graph6(g)}", g))
    return out


def file_instances(path: str, max_n: Optional[int] = None) -> list[Instance]:
    out = []
    seen = set()
    for g in read_corpus(path, max_n):
        name = f"g6:{to_graph6(g)}"
        if name in seen:
            continue
        seen.add(name)
        out.append(Instance(name, g))
    return out


def summarize(results: Sequence[CheckResult]) -> dict[str, dict[str, int]]:
    table: dict[str, dict[str, int]] = {}
    for r in results:
        row = table.setdefault(r.theorem, {PASS: 0, FAIL: 0, SKIP: 0})
        row[r.verdict] += 1
    return table


def results_to_json(results: Sequence[CheckResult]) -> str:
    return json.dumps([r.to_json_obj() for r in results], sort_keys=True, indent=1, default=list)


def theorem_matrix() -> list[tuple[str, str]]:
    return [(t.id, t.anchor) for t in REGISTRY.values()]
