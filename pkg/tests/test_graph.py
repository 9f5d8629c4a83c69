import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcritical import graph as gr
from kcritical.graph import GraphError

from conftest import graphs, to_nx


def test_from_edge_list_examples():
    k3 = gr.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == gr.complete(3) and k3.m == 3
    assert gr.from_edge_list(2, []).m == 0
    c5 = gr.from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    assert c5.m == 5 and set(c5.degrees()) == {2}


def test_from_edge_list_deduplicates():
    g = gr.from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edge_list_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        gr.from_edge_list(3, edges)


def test_constructor_validates_symmetry_and_loops():
    with pytest.raises(GraphError):
        gr.Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        gr.Graph(1, (0b1,))
    with pytest.raises(GraphError):
        gr.Graph(65, tuple([0] * 65))


def test_join_examples():
    assert gr.join(gr.complete(1), gr.disjoint_union(gr.complete(3), gr.complete(1))).m == 7
    assert gr.join(gr.complete(2), gr.empty(3)).m == 7
    assert gr.join(gr.complete(2), gr.empty(2)).m == 5


def test_disjoint_union_examples():
    g = gr.disjoint_union(gr.complete(3), gr.complete(1))
    assert g.n == 4 and len(gr.component_summary(g).components) == 2
    assert gr.disjoint_union(gr.complete(1), gr.complete(1)) == gr.empty(2)
    h = gr.join(gr.complete(1), gr.disjoint_union(gr.complete(3), gr.complete(3)))
    assert (h.n, h.m) == (7, 12)


def test_order_overflow():
    with pytest.raises(GraphError):
        gr.join(gr.complete(40), gr.empty(30))


def test_delete_vertices_examples():
    g = gr.join(gr.complete(1), gr.disjoint_union(gr.complete(5), gr.complete(1)))
    h = gr.delete_vertex(g, 0)
    assert h == gr.disjoint_union(gr.complete(5), gr.complete(1))
    for n in range(2, 7):
        assert gr.delete_vertex(gr.complete(n), n // 2) == gr.complete(n - 1)
    p = gr.delete_vertex(gr.cycle(5), 2)
    assert nx.is_isomorphic(to_nx(p), nx.path_graph(4))
    s = gr.component_summary(p)
    assert (s.odd_nontrivial, s.isolated, s.even_count) == (0, 0, 1)


def test_delete_vertices_map():
    h, mapping = gr.delete_vertices(gr.path(5), 0b00101, return_map=True)
    assert mapping == {1: 0, 3: 1, 4: 2}
    assert h.edges() == [(1, 2)]


@pytest.mark.parametrize("g, expected", [
    (gr.complete(3), (1, 0, 0)),
    (gr.disjoint_union(gr.complete(5), gr.complete(1)), (1, 1, 0)),
    (gr.disjoint_union(gr.complete(2), gr.complete(4)), (0, 0, 2)),
])
def test_component_summary_examples(g, expected):
    s = gr.component_summary(g)
    assert (s.odd_nontrivial, s.isolated, s.even_count) == expected


def test_is_connected_examples():
    assert gr.is_connected(gr.star(4))
    assert not gr.is_connected(gr.empty(2))
    assert gr.is_connected(gr.join(gr.complete(1), gr.disjoint_union(gr.complete(6), gr.complete(1))))


@settings(max_examples=150, deadline=None)
@given(graphs(), graphs())
def test_join_edge_count(g1, g2):
    j = gr.join(g1, g2)
    assert j.m == g1.m + g2.m + g1.n * g2.n


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_basic_identities(g):
    assert g.complement().complement() == g
    assert gr.delete_vertices(g, 0) == g
    assert g.m * 2 == sum(g.degrees())
    assert g.m + g.complement().m == g.n * (g.n - 1) // 2


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_component_summary_matches_networkx(g):
    s = gr.component_summary(g)
    sizes = sorted(len(c) for c in nx.connected_components(to_nx(g)))
    assert sorted(s.orders) == sizes
    assert s.odd_nontrivial + s.isolated + s.even_count == len(s.components)
    covered = 0
    for comp in s.components:
        assert comp & covered == 0
        covered |= comp
    assert covered == g.vertex_mask
    assert s.odd_nontrivial == sum(1 for x in sizes if x % 2 and x >= 3)
    assert s.isolated == sizes.count(1)
    assert gr.is_connected(g) == (g.n > 0 and nx.is_connected(to_nx(g)))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_graph6_matches_networkx(g):
    text = gr.to_graph6(g)
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert text == expected
    assert gr.from_graph6(text) == g
    assert gr.from_graph6(">>graph6<<" + text) == g


def test_graph6_known_strings():
    assert gr.to_graph6(gr.complete(4)) == "C~"
    assert gr.to_graph6(gr.path(3)) in ("Bg", "Bo") and gr.from_graph6("Bw") == gr.complete(3)
    big = gr.complete(64)
    text = gr.to_graph6(big)
    assert text == nx.to_graph6_bytes(to_nx(big), header=False).decode().strip()
    assert text.startswith("~?@?")
    assert gr.from_graph6(text) == big


@pytest.mark.parametrize("bad", ["", "A!", "C~~", "D"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphError):
        gr.from_graph6(bad)


def test_graph6_file_round_trip(tmp_path):
    gs = [gr.complete(3), gr.star(5), gr.cycle(7)]
    path = tmp_path / "g.g6"
    assert gr.write_graph6_file(path, gs) == 3
    assert gr.read_graph6_file(path) == gs


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_edge_list_round_trip(g):
    assert gr.from_edge_list_text(gr.to_edge_list_text(g)) == g


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n", "2 1\n0 5\n"])
def test_edge_list_rejects_malformed(text):
    with pytest.raises(GraphError):
        gr.from_edge_list_text(text)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert h.m == g.m
    assert nx.is_isomorphic(to_nx(g), to_nx(h))
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
