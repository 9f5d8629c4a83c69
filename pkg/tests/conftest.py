"""Shared oracles: slow, obviously-correct reimplementations used to check the library."""

from __future__ import annotations

from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import strategies as st

from kcritical import graph as gr
from kcritical.enumeration import labeled_connected_graphs, unlabeled_graphs

ACCEPTANCE_LINES: list[str] = []
# labeled connected graphs on n vertices, n = 0..7
LABELED_CONNECTED_COUNTS = [0, 1, 1, 4, 38, 728, 26704, 1866256]


@st.composite
def graphs(draw, max_n=9, min_n=0, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = gr.from_edge_list(n, chosen)
    if connected and n > 1 and not gr.is_connected(g):
        # chain the components together so the draw stays connected
        comps = gr.components_within(g.adj, g.vertex_mask)
        reps = [(c & -c).bit_length() - 1 for c in comps]
        g = gr.from_edge_list(n, g.edges() + list(zip(reps, reps[1:])))
    return g


def to_nx(g: gr.Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def oracle_counts(g: gr.Graph, removed: set[int]) -> tuple[int, int]:
    """(odd nontrivial components, isolated vertices) of G - S via networkx."""
    h = to_nx(g)
    h.remove_nodes_from(removed)
    sizes = [len(c) for c in nx.connected_components(h)]
    return sum(1 for s in sizes if s % 2 and s >= 3), sum(1 for s in sizes if s == 1)


def oracle_value(g: gr.Graph, removed: set[int], k: int) -> int:
    odd, iso = oracle_counts(g, removed)
    base = k * iso - k * len(removed)
    return base + odd if k % 2 else base


def oracle_deficiency(g: gr.Graph, k: int) -> tuple[int, list[frozenset[int]]]:
    best, arg = None, []
    for r in range(g.n + 1):
        for s in combinations(range(g.n), r):
            val = oracle_value(g, set(s), k)
            if best is None or val > best:
                best, arg = val, [frozenset(s)]
            elif val == best:
                arg.append(frozenset(s))
    return best, arg


def all_labeled_graphs(n: int):
    """Every graph (connected or not) on vertex set 0..n-1."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield gr.from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def connected_classes(n: int) -> list[gr.Graph]:
    return [g for g in unlabeled_graphs(n) if gr.is_connected(g)]


def connected_classes_upto(n_max: int, n_min: int = 1) -> list[gr.Graph]:
    return [g for n in range(n_min, n_max + 1) for g in connected_classes(n)]


def connected_labeled_upto(n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        yield from labeled_connected_graphs(n)


def edges_needed(n: int) -> int:
    return comb(n - 1, 2) + 1


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_line():
    def record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
    return record
