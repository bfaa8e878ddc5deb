from semiwilson.characters import ComplexMap, enumerate_contexts
from semiwilson.conformance import classify, conformance_check, probe_values, run_probe
from semiwilson.cyclotomic import Cyc, root_of_unity
from semiwilson.semigroup import FiniteSemigroup
from semiwilson.wilson import CaseTag, injected_sign_bug, theorem_families

from conftest import NULL2, ONE_P_ZERO, trivial_context


def test_probe_values():
    vals = probe_values()
    assert len(vals) == 13
    assert len(set(vals)) == 13
    i = root_of_unity(1, 4)
    for v in (0, 1, -1, i, -i, (1 + i) / 2, Cyc.rational(1) / 2):
        assert v in vals


def test_c3_context_conforms(c3_ctx):
    rep = conformance_check(c3_ctx)
    assert rep.ok
    assert sorted((e.case_tag.value, e.family_dim) for e in rep.entries) == [("Case2", 2), ("Case2", 2), ("Case3", 1)]


def test_pq_context_conforms(pq_ctx):
    rep = conformance_check(pq_ctx)
    assert rep.ok
    assert sorted((e.case_tag.value, e.oracle_dim, e.family_dim) for e in rep.entries) == [
        ("Case3", 1, 1),
        ("Case3", 2, 2),
    ]


def test_classify_basics(pq_ctx, pq_chi):
    fams = theorem_families(pq_ctx, [pq_chi])
    assert classify(fams, [0, 1, -1, 0], pq_chi) is CaseTag.CASE3
    assert classify(fams, [0, 0, 0, 0], pq_chi) is CaseTag.CASE1
    assert classify(fams, [0, 1, 0, 0], ComplexMap.zero(4)) is CaseTag.HOMOGENEOUS_G0
    assert classify(fams, [0, 1, 1, 0], pq_chi) is CaseTag.UNCLASSIFIED


def test_probe_on_order_two():
    for table in ([[0, 1], [1, 0]], NULL2, [[0, 0], [1, 1]], [[0, 0], [0, 1]]):
        for ctx in enumerate_contexts(FiniteSemigroup(table)):
            rep = conformance_check(ctx, probe=True)
            assert rep.ok
            assert rep.probe.g_count == 13**2 - 1
            assert not rep.probe.unclassified


def test_probe_on_one_p_zero():
    ctx = trivial_context(ONE_P_ZERO)
    rep = conformance_check(ctx)
    summary = run_probe(ctx, theorem_families(ctx, [ComplexMap([1, 1, 1]), ComplexMap([1, 0, 0])]), rep)
    assert summary.nontrivial >= 2
    assert not summary.unclassified and not summary.space_mismatches


def test_sign_bug_is_caught(c3_ctx):
    with injected_sign_bug():
        rep = conformance_check(c3_ctx)
    assert not rep.ok
