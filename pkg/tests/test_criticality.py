import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcritical import barriers as br
from kcritical import criticality as cr
from kcritical import graph as gr
from kcritical.extremal import build, parse_family, universal_exception
from kcritical.matchings import has_perfect_k_matching, kd_critical_witness

from conftest import connected_classes, connected_classes_upto, graphs


@pytest.mark.parametrize("text, k, holds", [
    ("K7", 3, True), ("K1 v (K5 + 1*K1)", 3, False), ("K2 v 3*K1", 3, False),
])
def test_classify_gfc_examples(text, k, holds):
    v = cr.classify_gfc(parse_family(text), k)
    assert v.holds is holds and v.method == "structural"


def test_universal_exception_witness_is_the_join_vertex():
    g = build(universal_exception(7))
    v = cr.classify_gfc(g, 3)
    assert v.witness == 1 << 0 and v.witness_kind == "subset"
    assert v.to_dict()["witness"] == [0]


@pytest.mark.parametrize("text, k, holds", [
    ("K4", 3, True), ("K4 v 4*K1", 3, False), ("K1 v (K6 + 1*K1)", 3, False),
])
def test_classify_gbc_examples(text, k, holds):
    assert cr.classify_gbc(parse_family(text), k).holds is holds


@pytest.mark.parametrize("text, k, d, holds", [
    ("K4", 3, 2, True), ("K1 v (K3 + 1*K1)", 3, 1, False), ("K4", 5, 2, True),
    ("K5", 3, 3, True), ("K7", 5, 5, True),
])
def test_classify_kd_examples(text, k, d, holds):
    g = parse_family(text)
    assert cr.classify_kd(g, k, d).holds is holds
    assert cr.kd_by_definition(g, k, d).holds is holds


def test_d_equal_k_on_even_complete_graph_is_outside_the_parity_domain():
    # odd d = k cannot match an even order, so the question is rejected
    with pytest.raises(ValueError):
        cr.classify_kd(gr.complete(6), 3, 3)


def test_classify_kd_argument_errors():
    with pytest.raises(ValueError):
        cr.classify_kd(gr.complete(4), 3, 1)
    with pytest.raises(ValueError):
        cr.classify_kd(gr.complete(4), 4, 2)
    with pytest.raises(ValueError):
        cr.classify_kd(gr.complete(4), 3, 4)
    with pytest.raises(ValueError):
        cr.classify_gfc(gr.complete(3), 1)


def test_parity_failures_carry_a_witness():
    v = cr.classify_gfc(gr.complete(4), 3)
    assert not v.holds and v.witness_kind == "parity" and v.witness == 4
    v = cr.classify_gbc(gr.complete(5), 2)
    assert not v.holds and v.witness_kind == "parity"
    with pytest.raises(ValueError):
        cr.CriticalityVerdict("GFC", 3, False)


def test_small_orders_use_barrier_definition():
    v = cr.classify_gfc(gr.complete(1), 3)
    assert v.holds and v.method == "barrier-uniqueness" and v.note
    v = cr.classify_gbc(gr.complete(2), 3)
    assert not v.holds and v.method == "barrier-uniqueness"
    # {v} attains the same value as the empty set, so K_2 is not GBC_2 by the barrier definition
    assert not cr.classify_gbc(gr.complete(2), 2).holds
    assert cr.classify_gbc(gr.empty(2), 2).holds
    assert not cr.classify_gfc(gr.complete(2), 3).holds


def test_barrier_uniqueness_examples():
    assert cr.barrier_uniqueness_check(gr.complete(3), 3).holds
    v = cr.barrier_uniqueness_check(build(universal_exception(7)), 3)
    assert not v.holds and v.witness == 1
    assert cr.barrier_uniqueness_check(gr.complete(4), 2).holds


def test_single_vertex_routes_differ():
    # the barrier definition accepts K_1; the load-(k-1) search has no edge to use
    assert cr.classify_gfc(gr.complete(1), 3).holds
    assert not cr.gfc_by_definition(gr.complete(1), 3).holds


def test_definitional_examples():
    assert cr.gfc_by_definition(gr.complete(3), 3).holds
    v = cr.gfc_by_definition(build(universal_exception(7)), 3)
    assert not v.holds and v.witness_kind == "vertex"
    assert kd_critical_witness(build(universal_exception(7)), v.witness, 3, 1) is None
    assert cr.gfc_by_definition(gr.cycle(5), 3).holds == cr.classify_gfc(gr.cycle(5), 3).holds
    assert not cr.gfc_by_definition(gr.complete(4), 3).holds
    with pytest.raises(ValueError):
        cr.gfc_by_definition(gr.complete(3), 4)


@pytest.mark.parametrize("g, holds", [
    (gr.complete(5), True), (build(universal_exception(7)), False), (gr.star(4), False),
])
def test_even_k_by_deletion_examples(g, holds):
    v = cr.even_k_by_deletion(g, 2)
    assert v.holds is holds
    if not holds:
        assert not has_perfect_k_matching(gr.delete_vertex(g, v.witness), 2)


@pytest.mark.parametrize("n", range(3, 8, 2))
@pytest.mark.parametrize("k", [3, 5])
def test_triple_agreement_odd_order(n, k):
    for g in connected_classes(n):
        a = cr.classify_gfc(g, k).holds
        assert a == cr.gfc_by_definition(g, k).holds == cr.barrier_uniqueness_check(g, k).holds


@pytest.mark.parametrize("n", range(2, 8, 2))
@pytest.mark.parametrize("k", [3, 5])
def test_structural_and_barrier_agree_even_order(n, k):
    for g in connected_classes(n):
        assert cr.classify_gbc(g, k).holds == cr.barrier_uniqueness_check(g, k).holds


@pytest.mark.parametrize("k", [2, 4])
def test_even_k_agreement(k):
    for g in connected_classes_upto(7, n_min=3):
        a = cr.classify_parity(g, k).holds
        assert a == cr.even_k_by_deletion(g, k).holds == cr.barrier_uniqueness_check(g, k).holds


def test_even_k_deletion_definitional_route_small():
    for g in connected_classes_upto(6, n_min=3):
        assert cr.even_k_by_deletion(g, 2, definitional=True).holds == cr.classify_parity(g, 2).holds


def test_even_k_verdict_does_not_depend_on_k():
    for g in connected_classes_upto(7):
        assert cr.classify_parity(g, 2).holds == cr.classify_parity(g, 4).holds == \
            cr.classify_parity(g, 6).holds


@pytest.mark.parametrize("n", range(3, 7))
def test_monotone_under_edge_addition(n):
    from kcritical.enumeration import unlabeled_graphs

    for g in unlabeled_graphs(n):
        before = {k: cr.classify_parity(g, k).holds for k in (2, 3, 4, 5)}
        for u in range(n):
            for v in range(u + 1, n):
                if g.has_edge(u, v):
                    continue
                h = gr.from_edge_list(n, g.edges() + [(u, v)])
                for k, held in before.items():
                    if held:
                        assert cr.classify_parity(h, k).holds
                for k in (3, 5):
                    for d in range(1 if n % 2 else 2, k + 1, 2):
                        if br.violates_kd_inequality(g, k, d) is None:
                            assert br.violates_kd_inequality(h, k, d) is None


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7, min_n=3, connected=True), st.sampled_from([3, 5]))
def test_kd_structural_matches_definition_random(g, k):
    for d in range(2 - g.n % 2, k, 2):
        assert cr.classify_kd(g, k, d).holds == cr.kd_by_definition(g, k, d).holds


def test_to_dict_shape():
    d = cr.classify_kd(gr.complete(4), 3, 2).to_dict()
    assert d == {"property": "KD", "k": 3, "d": 2, "holds": True, "witness": None,
                 "witness_kind": None, "method": "structural", "note": None}
