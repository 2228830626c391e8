from __future__ import annotations

import json
import time

import pytest

from cliquezf import checks
from cliquezf.checks import (FAIL, PASS, REGISTRY, SKIP, corpus_instances, family_instances,
                             results_to_json, run_checks, summarize, theorem_matrix)
from cliquezf.io import from_graph6


def _verdicts(results):
    return {r.verdict for r in results}


def test_ccbound_on_corpus6_all_pass():
    res = run_checks(corpus_instances(6), ["cor-ccbound"])
    assert len(res) == 1 + 1 + 2 + 6 + 21 + 112
    assert _verdicts(res) == {PASS}


def test_unique_iff_on_circ6():
    (r,) = run_checks(family_instances(["circ:6:1,2"]), ["thm-unique-iff"])
    assert r.verdict == PASS


def test_forest_on_vertex_clique_k23():
    (r,) = run_checks(family_instances(["vc:Kbip:2,3"]), ["thm-forest"])
    assert r.verdict == PASS
    assert r.observed["zplus"] == 3 and r.observed["k"] == 3
    assert r.expected == {"zplus<=k": 3}


def test_hypothesis_skips_carry_reason():
    (r,) = run_checks(family_instances(["fig1"]), ["thm-cc-compress"])
    assert r.verdict == SKIP and "simply coverable" in r.reason
    (r,) = run_checks(family_instances(["C:5"]), ["thm-unique-iff"])
    assert r.verdict == SKIP and r.reason


def test_results_ordered_by_theorem_then_instance():
    insts = family_instances(["P:5", "K:3", "C:5"])
    res = run_checks(insts, ["thm-cc-compress", "cor-ccbound"])
    assert [(r.theorem, r.instance) for r in res] == [
        ("cor-ccbound", "family:path:5"), ("cor-ccbound", "family:complete:3"),
        ("cor-ccbound", "family:cycle:5"),
        ("thm-cc-compress", "family:path:5"), ("thm-cc-compress", "family:complete:3"),
        ("thm-cc-compress", "family:cycle:5")]


def test_json_stable_under_jobs():
    insts = corpus_instances(5) + family_instances(["M:4", "circ:6:1,2", "vc:C:3", "X:8:4,4,4,4"])
    a = results_to_json(run_checks(insts, jobs=1))
    b = results_to_json(run_checks(insts, jobs=2))
    assert a == b
    rows = json.loads(a)
    assert {"theorem", "instance", "expected", "observed", "verdict"} <= set(rows[0])


def test_timeout_becomes_skip(monkeypatch):
    def slow(ctx):
        time.sleep(5)
        return None, None, True, None
    th = REGISTRY["cor-ccbound"]
    monkeypatch.setitem(REGISTRY, "cor-ccbound", checks.Theorem(th.id, th.anchor, th.hypothesis, slow))
    t0 = time.monotonic()
    (r,) = run_checks(family_instances(["P:3"]), ["cor-ccbound"], timeout=0.2)
    assert time.monotonic() - t0 < 2
    assert r.verdict == SKIP and r.reason == "timeout after 0.2 s"


def test_unfiltered_default_run_executes_every_theorem():
    insts = corpus_instances(5) + family_instances(checks.DEFAULT_FAMILIES)
    res = run_checks(insts)
    table = summarize(res)
    assert set(table) == set(REGISTRY)
    executed = {t for t, row in table.items() if row[PASS] + row[FAIL] > 0}
    assert executed == set(REGISTRY)


def test_failures_carry_graph6_witness():
    res = run_checks(family_instances(["vc:star:4"]), ["thm-forest"])
    fails = [r for r in res if r.verdict == FAIL]
    assert fails
    for r in fails:
        g = from_graph6(r.witness["graph6"])
        assert g.n == 8


def test_exception_in_body_is_failure(monkeypatch):
    def boom(ctx):
        raise RuntimeError("kaput")
    th = REGISTRY["cor-ccbound"]
    monkeypatch.setitem(REGISTRY, "cor-ccbound", checks.Theorem(th.id, th.anchor, th.hypothesis, boom))
    (r,) = run_checks(family_instances(["P:3"]), ["cor-ccbound"])
    assert r.verdict == FAIL and "kaput" in r.reason and "graph6" in r.witness


def test_unknown_theorem():
    with pytest.raises(KeyError):
        run_checks(family_instances(["P:3"]), ["no-such-theorem"])


def test_theorem_matrix_lists_everything():
    ids = [tid for tid, _ in theorem_matrix()]
    assert ids == list(REGISTRY) and len(set(ids)) == len(ids)
    assert all(anchor for _, anchor in theorem_matrix())


def test_lift_forcing_on_corpus(corpus6):
    from cliquezf.checks import _replay, lift_forcing
    from cliquezf.cliques import enumerate_minmax_si_covers
    from cliquezf.compressed import compressed_cliques_graph
    from cliquezf.forcing import zplus
    for g in corpus6:
        covers = enumerate_minmax_si_covers(g)
        if not covers:
            continue
        cg = compressed_cliques_graph(g, covers)
        _, _, rec = zplus(cg.graph.with_names(None))
        black, forces = lift_forcing(cg, rec)
        assert len(black) == g.n - cg.graph.n + len(rec.initial)
        assert _replay(g, black, forces) is not None
