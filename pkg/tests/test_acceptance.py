"""Acceptance suite: one test per criterion, each printing a single pass/fail line.

Run standalone with ``pytest tests/test_acceptance.py -v``; the lines are
printed even when pytest captures output.
"""

from __future__ import annotations

import random
import time
from math import comb

import networkx as nx
import pytest

from cliquezf import families as fam
from cliquezf.cliques import (clique_cover_number, enumerate_minimum_covers,
                              enumerate_minmax_si_covers, maximal_clique_masks)
from cliquezf.compressed import compressed_cliques_graph, label_embedding
from cliquezf.corpus import connected_graphs, enumerate_connected, read_corpus
from cliquezf.detect import find_claw, find_suspended_cycle
from cliquezf.forcing import (all_optimal_positive_sets, count_edge_maximal_cliques,
                              forcing_forest, positive_closure, reduced_graph,
                              standard_zero_forcing, zplus)
from cliquezf.graph import (Graph, are_isomorphic, bits, component_masks, find_induced,
                            is_chordal, is_induced_embedding, to_mask, vertex_cap)
from cliquezf.io import to_graph6

from .conftest import to_nx

CIRC6 = fam.circulant(6, [1, 2])


def iso(a: Graph, b: Graph) -> bool:
    return are_isomorphic(a.with_names(None), b.with_names(None)) is not None


@pytest.fixture
def report(capsys):
    def emit(num: int, title: str, failures: list, t0: float, detail: str = "") -> None:
        verdict = "PASS" if not failures else "FAIL"
        extra = f"; {detail}" if detail else ""
        shown = "; ".join(map(str, failures[:4])) + (" ..." if len(failures) > 4 else "")
        with capsys.disabled():
            print(f"\ncriterion {num:2d}: {verdict}  {title} [{time.monotonic() - t0:.1f} s{extra}]"
                  + (f"\n    failures: {shown}" if failures else ""))
        assert not failures, shown
    return emit


def _coverable(gs):
    for g in gs:
        covers = enumerate_minmax_si_covers(g)
        if covers:
            yield g, covers


def _family_pool() -> list[str]:
    from cliquezf.checks import DEFAULT_FAMILIES
    extra = ["M:7", "J:6", "Jp:6", "circ:8:1,2", "circ:9:1,3", "coc:3,3,3:1", "poc:4,4,4:2",
             "vc:K:4", "vc:W:5", "vc:T3", "X:6:4,4,4", "K2xK:4", "C:8", "P:7", "K:8"]
    return list(DEFAULT_FAMILIES) + extra


# 1 --------------------------------------------------------------------------------------------------

def test_criterion_01_clique_identities(report):
    t0 = time.monotonic()
    bad = []
    for n in range(2, 9):
        k = fam.complete(n)
        got = (zplus(k)[0], standard_zero_forcing(k), clique_cover_number(k))
        if got != (n - 1, n - 1, 1):
            bad.append((n, got))
    report(1, "Z+(K_n) = Z(K_n) = n-1 and CC(K_n) = 1, n = 2..8", bad, t0)


# 2 --------------------------------------------------------------------------------------------------

def test_criterion_02_circ6(report):
    t0 = time.monotonic()
    bad = []
    covers = enumerate_minmax_si_covers(CIRC6)
    if len(covers) != 2:
        bad.append(f"{len(covers)} covers")
    if not all(c.simple_intersection and c.is_min_max_si() for c in covers):
        bad.append("cover without simple intersection")
    cg = compressed_cliques_graph(CIRC6, covers).graph
    if not (iso(cg, CIRC6) and iso(cg, fam.johnson(4))):
        bad.append("compressed graph not circ(6,{1,2}) = J(4,2)")
    report(2, "circ(6,{1,2}): two SI covers, compressed graph = circ(6,{1,2}) = J(4,2)", bad, t0)


# 3 --------------------------------------------------------------------------------------------------

def test_criterion_03_figure1(report):
    t0 = time.monotonic()
    g = fam.fig1_2tree()
    bad = []
    si = [c for c in enumerate_minimum_covers(g, maximal_only=False) if c.simple_intersection]
    if clique_cover_number(g) != 3 or not si:
        bad.append("no size-3 SI cover")
    if enumerate_minmax_si_covers(g):
        bad.append("a min-max SI cover exists")
    report(3, "2-tree example: size-3 SI cover exists, no min-max SI cover", bad, t0,
           f"SI covers of size 3: {len(si)}")


# 4 --------------------------------------------------------------------------------------------------

def test_criterion_04_johnson(report):
    t0 = time.monotonic()
    bad = []
    rows = []
    for m in (4, 5, 6):
        p = comb(m, 2)
        for name, g, exp in (("J", fam.johnson(m), (p, m, p - m + 2)),
                             ("J'", fam.johnson_prime(m), (p + m, m, p))):
            got = (g.n, clique_cover_number(g), zplus(g)[0])
            rows.append(f"{name}({m},2)={got}")
            if got != exp:
                bad.append(f"{name}({m},2): expected {exp} got {got}")
    report(4, "J(m,2), J'(m,2) order, CC, Z+ for m = 4, 5, 6", bad, t0, " ".join(rows))


# 5 --------------------------------------------------------------------------------------------------

def test_criterion_05_musical(report):
    t0 = time.monotonic()
    bad = []
    for n in range(3, 7):
        g = fam.musical(n)
        zp = zplus(g)[0]
        if zp != n + 2:
            bad.append(f"Z+(M_{n}) = {zp}, expected {n + 2}")
        cg = compressed_cliques_graph(g).graph
        if not iso(cg, fam.cycle(n)):
            bad.append(f"C(M_{n}) has {cg.n} vertices and {cg.num_edges()} edges, not C_{n}"
                       + (" (M_3 = K_6)" if n == 3 and g.is_complete() else ""))
    report(5, "Z+(M_n) = n+2 and C(M_n) = C_n, n = 3..6", bad, t0)


# 6, 7 ---------------------------------------------------------------------------------------------

@pytest.fixture(scope="module")
def coverable7():
    return [(g, covers, compressed_cliques_graph(g, covers))
            for g, covers in _coverable(enumerate_connected(7))]


def test_criterion_06_transfer(report, coverable7):
    t0 = time.monotonic()
    bad = []
    checked = 0
    for g, _, cg in coverable7:
        if g.is_complete():
            continue
        checked += 1
        h = cg.graph.with_names(None)
        if g.n - zplus(g)[0] != h.n - zplus(h)[0]:
            bad.append(to_graph6(g))
    report(6, "|V(G)| - Z+(G) = |V(C(G))| - Z+(C(G)) on connected non-complete coverable n <= 7",
           bad, t0, f"{checked} graphs")


def test_criterion_07_cc_and_idempotence(report, coverable7):
    t0 = time.monotonic()
    bad = []
    for g, _, cg in coverable7:
        h = cg.graph.with_names(None)
        if clique_cover_number(g) != clique_cover_number(h):
            bad.append(("CC", to_graph6(g)))
        if not iso(compressed_cliques_graph(h).graph, h):
            bad.append(("idempotence", to_graph6(g)))
    report(7, "CC(G) = CC(C(G)) and C(C(G)) = C(G) on coverable n <= 7", bad, t0,
           f"{len(coverable7)} graphs")


# 8 --------------------------------------------------------------------------------------------------

def test_criterion_08_uniqueness(report, tmp_path):
    t0 = time.monotonic()
    path = tmp_path / "connected8.g6"
    path.write_text("".join(to_graph6(g) + "\n" for g in connected_graphs(8, max_n_guard=8)))
    pool = list(read_corpus(str(path))) + [fam.generate(s) for s in _family_pool()]
    pool += enumerate_connected(7)
    bad = []
    multi = 0
    for g in pool:
        covers = enumerate_minmax_si_covers(g)
        if len(covers) < 2:
            continue
        multi += 1
        if not iso(compressed_cliques_graph(g, covers).graph, CIRC6):
            bad.append(("compressed", to_graph6(g)))
        if find_induced(g, CIRC6) is None:
            bad.append(("not induced", to_graph6(g)))
    report(8, "two or more min-max SI covers imply C(G) = circ(6,{1,2}) and an induced copy", bad, t0,
           f"{len(pool)} graphs incl. n = 8 file corpus, {multi} with several covers")


# 9 --------------------------------------------------------------------------------------------------

def test_criterion_09_structure(report, coverable7):
    t0 = time.monotonic()
    bad = []
    pool = [(g, cg) for g, _, cg in coverable7]
    for spec in _family_pool():
        g = fam.generate(spec)
        covers = enumerate_minmax_si_covers(g)
        if covers:
            pool.append((g, compressed_cliques_graph(g, covers)))
    for g, cg in pool:
        h = cg.graph.with_names(None)
        if find_claw(h) is not None:
            bad.append(("claw", to_graph6(g)))
        if find_suspended_cycle(h) is not None:
            bad.append(("suspended cycle", to_graph6(g)))
        m = clique_cover_number(g)
        with vertex_cap(max(64, comb(m, 2) + m)):
            target = fam.johnson_prime(m)
            ok = is_induced_embedding(target, h, label_embedding(cg))
        if not ok:
            bad.append(("J' embedding", to_graph6(g)))
    report(9, "C(G) claw-free, suspended-cycle-free, induced in J'(CC(G),2)", bad, t0,
           f"{len(pool)} compressed graphs")


# 10 ------------------------------------------------------------------------------------------------

def test_criterion_10_vertex_clique(report):
    t0 = time.monotonic()
    bad = []
    for spec in ("Kbip:2,3", "Kbip:2,4", "C:3", "P:4"):
        h = fam.vertex_clique_graph(fam.generate(spec))
        if not iso(compressed_cliques_graph(h).graph, h):
            bad.append(f"C(H) != H for {spec}")
    rows = []
    for n in (3, 4):
        h = fam.vertex_clique_graph(fam.complete_bipartite(2, n))
        r = reduced_graph(h)
        if not iso(r, fam.cartesian_k2_kn(n)):
            bad.append(f"R(H) != K2 x K{n}")
        zr, zh, k = zplus(r)[0], zplus(h)[0], count_edge_maximal_cliques(r)
        rows.append(f"n={n}: Z+(R)={zr} Z+(H)={zh} k={k}")
        if zr != n:
            bad.append(f"Z+(R) = {zr} for n = {n}")
        if zh > k:
            bad.append(f"Z+(H) = {zh} > k = {k} for n = {n}")
        if n == 3 and zh != k:
            bad.append(f"no equality at K2,3: Z+(H) = {zh}, k = {k}")
    report(10, "vertex-clique pipeline for K2,3 K2,4 C3 P4", bad, t0, "; ".join(rows))


# 11 ------------------------------------------------------------------------------------------------

def test_criterion_11_x_graphs(report):
    t0 = time.monotonic()
    bad = []
    rows = []
    for n, lengths in ((8, [4, 4, 4, 4]), (10, [3, 4, 5])):
        g = fam.x_graph(n, lengths)
        zp, cc = zplus(g)[0], clique_cover_number(g)
        bound = g.n - cc + len(lengths)
        rows.append(f"X({n};{','.join(map(str, lengths))}): Z+={zp} n-1={n - 1} |V|-CC+k={bound}")
        if not zp == n - 1 == bound:
            bad.append(rows[-1] + f" (CC={cc})")
    report(11, "X graphs: Z+ = n-1 = |V|-CC+k", bad, t0, "; ".join(rows))


# 12 ------------------------------------------------------------------------------------------------

def test_criterion_12_inequalities(report):
    t0 = time.monotonic()
    bad = []
    chordal_cases = 0
    for g in enumerate_connected(6):
        zp, cc, z = zplus(g)[0], clique_cover_number(g), standard_zero_forcing(g)
        if not g.n - cc <= zp <= z:
            bad.append(("sweep", to_graph6(g)))
        covers = enumerate_minmax_si_covers(g)
        # a single vertex has no edge to cover; Z+(K1) = 1 is outside the statement
        if covers and g.num_edges() and is_chordal(compressed_cliques_graph(g, covers).graph):
            chordal_cases += 1
            if zp != g.n - cc:
                bad.append(("chordal", to_graph6(g)))
    report(12, "|V|-CC <= Z+ <= Z on n <= 6; equality when C(G) has no induced cycle beyond K3",
           bad, t0, f"{chordal_cases} chordal-compressed graphs")


# 13 ------------------------------------------------------------------------------------------------

def _tree_partition_ok(g: Graph, trees) -> bool:
    h = to_nx(g)
    seen = [v for t in trees for v in t]
    if sorted(seen) != list(range(g.n)):
        return False
    return all(nx.is_tree(h.subgraph(t)) for t in trees)


def test_criterion_13_property_suites(report):
    t0 = time.monotonic()
    bad = []
    rng = random.Random(20261016)
    corpus6 = enumerate_connected(6)
    trials = 0
    for g in corpus6:
        for _ in range(100):
            b = [v for v in range(g.n) if rng.random() < 0.35]
            det = positive_closure(g, b)
            rnd = positive_closure(g, b, rng=rng)
            trials += 1
            if det.final != rnd.final:
                bad.append(("confluence", to_graph6(g), b))
            if det.complete and not _tree_partition_ok(g, forcing_forest(rnd).trees()):
                bad.append(("forest", to_graph6(g), b))
        k, _, rec = zplus(g)
        if not _tree_partition_ok(g, forcing_forest(rec).trees()):
            bad.append(("forest", to_graph6(g)))
    sets_checked = 0
    for g, covers in _coverable(corpus6):
        cg = compressed_cliques_graph(g, covers)
        cell_masks = [to_mask(cg.preimage([x])) for x in range(cg.graph.n)]
        for s in all_optimal_positive_sets(g):
            sets_checked += 1
            outside = ~to_mask(s)
            if any(bin(m & outside).count("1") > 1 for m in cell_masks):
                bad.append(("onlyone", to_graph6(g), s))
        comp = {}
        for i, m in enumerate(component_masks(cg.graph)):
            for x in bits(m):
                comp[x] = i
        for m in component_masks(g):
            if len({comp[cg.phi[v]] for v in bits(m)}) != 1:
                bad.append(("phi", to_graph6(g)))
        for m in maximal_clique_masks(cg.graph):
            if not g.is_clique(to_mask(cg.preimage(bits(m)))):
                bad.append(("preimage", to_graph6(g)))
    report(13, "confluence, forcing forests, one-per-cell, phi connectivity, clique preimage", bad, t0,
           f"{trials} closure trials, {sets_checked} optimal sets")

