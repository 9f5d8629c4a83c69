import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcritical import barriers as br
from kcritical import graph as gr
from kcritical.extremal import balanced_split, build, universal_exception

from conftest import (
    all_labeled_graphs,
    connected_classes,
    graphs,
    oracle_deficiency,
    oracle_value,
)


def mask(*vs):
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def universal(n):
    return build(universal_exception(n))


def test_subset_value_examples():
    assert br.subset_value(gr.complete(3), 0, 3) == 1
    assert br.subset_value(universal(7), mask(0), 3) == 1
    for n in range(1, 7):
        assert br.subset_value(gr.complete(n), 0, 2) == (2 if n == 1 else 0)


def test_deficiency_examples():
    r = br.deficiency_k(gr.complete(3), 3)
    assert (r.deficiency, r.barriers, r.empty_is_unique) == (1, (0,), True)
    r = br.deficiency_k(universal(7), 3)
    assert r.deficiency == 1 and {0, mask(0)} <= set(r.barriers) and not r.empty_is_unique
    r = br.deficiency_k(gr.complete(4), 2)
    assert (r.deficiency, r.barriers, r.empty_is_unique) == (0, (0,), True)


def test_violation_examples():
    assert br.violates_gfc_inequality(universal(7), 3) == mask(0)
    assert br.violates_gfc_inequality(gr.complete(7), 3) is None
    assert br.violates_gfc_inequality(gr.star(4), 3) == mask(0)
    assert br.violates_gbc_inequality(gr.complete(4), 3) is None
    assert br.violates_gbc_inequality(build(balanced_split(8)), 3) == mask(0, 1, 2, 3)
    assert br.violates_gbc_inequality(gr.complete(2), 3) == mask(0)
    assert br.violates_kd_inequality(gr.complete(4), 3, 2) is None
    assert br.violates_kd_inequality(universal(5), 3, 1) == mask(0)
    assert br.violates_kd_inequality(build(balanced_split(6)), 5, 2) == mask(0, 1, 2)
    assert br.violates_even_k_inequality(gr.star(4)) == mask(0)
    assert br.violates_even_k_inequality(gr.complete(5)) is None
    for n in range(3, 12):
        assert br.violates_even_k_inequality(universal(n)) == mask(0)


def test_kd_parity_and_range_errors():
    with pytest.raises(ValueError):
        br.violates_kd_inequality(gr.complete(4), 3, 1)
    with pytest.raises(ValueError):
        br.violates_kd_inequality(gr.complete(4), 3, 4)
    with pytest.raises(ValueError):
        br.violates_gfc_inequality(gr.complete(3), 4)
    with pytest.raises(ValueError):
        br.deficiency_k(gr.complete(3), 0)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_deficiency_matches_oracle_on_all_labeled_graphs(n, k):
    for g in all_labeled_graphs(n):
        value, maximisers = oracle_deficiency(g, k)
        report = br.deficiency_k(g, k)
        assert report.deficiency == value
        got = {frozenset(gr.bits(s)) for s in report.barriers}
        assert got == set(maximisers)
        assert report.barrier_count == len(maximisers)
        assert report.empty_is_unique == (maximisers == [frozenset()])


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_pruned_equals_brute_force(n, k):
    # complements of sparse graphs: the dense regime the pruning is for
    from kcritical.enumeration import unlabeled_graphs

    for h in unlabeled_graphs(n, max_edges=min(n + 1, 8 if n >= 9 else 99)):
        g = h.complement()
        a = br.deficiency_k(g, k, prune=True)
        b = br.deficiency_k(g, k, prune=False)
        assert (a.deficiency, a.barriers[0], a.empty_is_unique, a.barrier_count) == \
            (b.deficiency, b.barriers[0], b.empty_is_unique, b.barrier_count)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), st.sampled_from([2, 3, 4, 5]))
def test_pruned_equals_brute_force_random(g, k):
    a = br.deficiency_k(g, k, prune=True)
    b = br.deficiency_k(g, k, prune=False)
    assert a.deficiency == b.deficiency and a.barriers == b.barriers


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), st.sampled_from([3, 5]), st.integers(1, 3))
def test_violation_scans_agree_with_and_without_pruning(g, k, slack):
    a = br._first_violation(g, k, slack, prune=True)
    b = br._first_violation(g, k, slack, prune=False)
    assert a == b
    assert br.violates_even_k_inequality(g, prune=True) == br.violates_even_k_inequality(g, prune=False)


@pytest.mark.parametrize("n", [1, 3, 5, 7])
@pytest.mark.parametrize("k", [3, 5])
def test_gfc_inequality_matches_barrier_uniqueness(n, k):
    for g in connected_classes(n):
        absent = br.violates_gfc_inequality(g, k) is None
        assert absent == br.deficiency_k(g, k).empty_is_unique


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.integers(0, 2**9 - 1), st.sampled_from([1, 2, 3, 4, 5]))
def test_subset_value_matches_oracle(g, s, k):
    s &= g.vertex_mask
    assert br.subset_value(g, s, k) == oracle_value(g, set(gr.bits(s)), k)
    # the components of G - S account for every remaining vertex
    comps = gr.components_within(g.adj, g.vertex_mask & ~s)
    assert sum(gr.popcount(c) for c in comps) == g.n - gr.popcount(s)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_isolated_excess_ok_matches_scan(g):
    best, witness = br.max_isolated_excess(g)
    assert br.isolated_excess_ok(g) == (best <= 0)
    assert gr.isolated_count(g.adj, g.vertex_mask & ~witness) - gr.popcount(witness) == best


def test_witness_is_first_in_size_then_lexicographic_order():
    # K_{2,3}: no single vertex isolates anything; the two-vertex side isolates three
    g = gr.complete_bipartite(2, 3)
    s = br.violates_even_k_inequality(g)
    order = list(br.subsets_in_order(g.n))
    firsts = [t for t in order if t and gr.isolated_count(g.adj, g.vertex_mask & ~t) >= gr.popcount(t)]
    assert s == firsts[0] == mask(0, 1)


def test_brute_force_cap():
    g = gr.empty(25)
    with pytest.raises(ValueError):
        br.deficiency_k(g, 2, prune=False)
