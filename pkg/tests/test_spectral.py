import math

import numpy as np
import pytest
from hypothesis import given, settings

from kcritical import graph as gr
from kcritical import spectral as sp
from kcritical.extremal import FamilySpec, build, universal_exception

from conftest import connected_classes_upto, graphs

TOL = 1e-9


def numpy_rho(g):
    return float(np.linalg.eigvalsh(g.adjacency_matrix().astype(float))[-1])


@pytest.mark.parametrize("n", range(2, 10))
def test_complete_graph(n):
    assert abs(sp.spectral_radius(gr.complete(n)).rho - (n - 1)) < TOL


def test_documented_values():
    assert abs(sp.spectral_radius(gr.join(gr.complete(2), gr.empty(3))).rho - 3.0) < TOL
    assert abs(sp.spectral_radius(gr.cycle(4)).rho - 2.0) < TOL
    assert abs(sp.spectral_radius(gr.complete_bipartite(3, 3)).rho - 3.0) < TOL


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12, min_n=1, connected=True))
def test_power_iteration_matches_eigvalsh(g):
    r = sp.spectral_radius(g)
    expected = numpy_rho(g)
    assert abs(r.rho - expected) < TOL
    assert r.lower - 1e-12 <= expected <= r.upper + 1e-12
    assert r.error_bound <= 1e-10 + 1e-11 and r.method == "power-iteration"
    # average degree <= rho <= max degree
    assert 2 * g.m / g.n <= r.rho + TOL
    assert r.rho <= max(g.degrees()) + TOL


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9, min_n=1, connected=True))
def test_charpoly_route_agrees(g):
    a = sp.spectral_radius_charpoly(g)
    assert abs(a.rho - numpy_rho(g)) < TOL
    assert a.method == "characteristic-poly"


def test_errors():
    with pytest.raises(sp.SpectralError):
        sp.spectral_radius(gr.empty(2))
    with pytest.raises(ValueError):
        sp.spectral_radius(gr.complete(3), tol=0)
    with pytest.raises(sp.SpectralError):
        sp.quotient_radius_join_family(0, 2, 2)
    with pytest.raises(sp.SpectralError):
        sp.quotient_radius_join_family(1, 0, 0)
    with pytest.raises(sp.SpectralError):
        sp.hong_bound(gr.empty(3))


@pytest.mark.parametrize("s,a,b,expected", [
    (1, 3, 1, 3.09), (4, 0, 4, 5.77), (1, 6, 1, 6.02), (2, 0, 3, 3.0),
])
def test_quotient_examples(s, a, b, expected):
    assert abs(sp.quotient_radius_join_family(s, a, b) - expected) <= 0.005


def test_quotient_against_power_iteration_for_all_small_parameters():
    checked = 0
    for s in range(1, 13):
        for a in range(0, 13 - s):
            for b in range(0, 13 - s - a):
                if s + a + b < 2:
                    continue
                g = build(FamilySpec.join_clique_plus_isolated(s, a, b))
                q = sp.quotient_radius_join_family(s, a, b)
                assert abs(q - sp.spectral_radius(g).rho) < TOL, (s, a, b)
                checked += 1
    assert checked > 250


def test_perron_monotonicity_on_small_connected_graphs():
    for g in connected_classes_upto(6, n_min=2):
        base = sp.spectral_radius(g).rho
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    h = gr.from_edge_list(g.n, g.edges() + [(u, v)])
                    assert sp.spectral_radius(h).rho - base > sp.DEFAULT_TOL


@pytest.mark.parametrize("g, value", [
    (gr.complete(5), 4.0), (gr.star(5), 2.0), (gr.cycle(5), math.sqrt(6)),
])
def test_hong_bound_examples(g, value):
    assert abs(sp.hong_bound(g) - value) < 1e-12
    assert sp.spectral_radius(g).rho <= value + TOL


@pytest.mark.parametrize("n", range(3, 10))
def test_threshold_ties_are_resolved_exactly(n):
    threshold = sp.quotient_root(*universal_exception(n).params)
    g = build(universal_exception(n))
    d = sp.compare_to_threshold(g, threshold)
    assert d.sign == 0 and d.at_least and d.escalated
    if n >= 4:
        # remove one edge inside the K_{n-2}; the graph stays connected and drops below
        clique = [v for v in range(n) if g.degree(v) == n - 2]
        h = gr.from_edge_list(n, [e for e in g.edges() if e != (clique[0], clique[1])])
        assert not sp.compare_to_threshold(h, threshold).at_least


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8, min_n=3, connected=True))
def test_threshold_decision_matches_eigvalsh(g):
    threshold = sp.quotient_root(1, g.n - 2, 1)
    d = sp.compare_to_threshold(g, threshold)
    gap = numpy_rho(g) - float(threshold)
    if abs(gap) > 1e-7:
        assert d.at_least == (gap > 0) and d.sign == (1 if gap > 0 else -1)


def test_exact_radius_of_single_vertex_and_edge():
    assert float(sp.exact_spectral_radius(gr.complete(2))) == 1.0
    assert float(sp.exact_spectral_radius(gr.complete(1))) == 0.0
    with pytest.raises(sp.SpectralError):
        sp.exact_spectral_radius(gr.empty(0))
