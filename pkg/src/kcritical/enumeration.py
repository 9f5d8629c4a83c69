"""Exhaustive enumeration of connected graphs and isomorphism-invariant codes.

Dense graphs are produced through their complements: a graph with at least
``C(n,2) - b`` edges is the complement of a graph with at most ``b`` edges,
and the latter are few when ``b`` is small. Complements are generated up to
isomorphism by adding one edge at a time and keeping one representative per
canonical code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Graph, bits, components_within, is_connected, popcount, to_graph6
from .polynomials import AlgebraicRoot

LABELED_CAP = 7
LABELED_BUDGET = 5_000_000


class EnumerationBudgetExceeded(RuntimeError):
    pass


def _trusted_graph(n: int, adj: list[int] | tuple[int, ...]) -> Graph:
    # skips the symmetry/loop validation; callers build adjacency pairwise
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    object.__setattr__(g, "m", sum(popcount(r) for r in adj) // 2)
    return g


# --- canonical labelling ----------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Coarsest equitable refinement of an ordered partition (cells are bitsets)."""
    while True:
        new = []
        split = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                key = tuple(popcount(adj[v] & c) for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) > 1:
                split = True
            new.extend(groups[key] for key in sorted(groups))
        cells = new
        if not split:
            return cells


def _is_twin_cell(adj: tuple[int, ...], cell: int) -> bool:
    vs = list(bits(cell))
    first = vs[0]
    for v in vs[1:]:
        if adj[first] & ~(1 << v) != adj[v] & ~(1 << first):
            return False
    return True


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _connected_canonical_order(adj: tuple[int, ...], vertices: int) -> list[int]:
    best: list = [None, None]

    def search(cells: list[int]) -> None:
        cells = _refine(adj, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if cell & (cell - 1) and not _is_twin_cell(adj, cell):
                target = idx
                break
        if target < 0:
            order = [v for cell in cells for v in bits(cell)]
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        for v in bits(cell):
            search(cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:])

    search([vertices])
    return best[1]


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose induced labelling is the same for all isomorphic graphs."""
    if g.n == 0:
        return []
    if 2 * g.m > g.n * (g.n - 1) // 2:
        return canonical_order(g.complement())
    comps = components_within(g.adj, g.vertex_mask)
    if len(comps) == 1:
        return _connected_canonical_order(g.adj, comps[0])
    keyed = []
    for comp in comps:
        order = _connected_canonical_order(g.adj, comp)
        keyed.append(((len(order), _code(g.adj, order)), order))
    keyed.sort(key=lambda item: item[0])
    return [v for _, order in keyed for v in order]


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant code: graph6 bytes of the canonically relabelled graph."""
    return to_graph6(canonical_form(g)).encode("ascii")


# --- generators -------------------------------------------------------------


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on vertex set ``0..n-1``, in edge-mask order."""
    if n > LABELED_CAP:
        raise EnumerationBudgetExceeded(f"labelled enumeration is limited to n <= {LABELED_CAP}")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for idx in bits(mask):
            u, v = pairs[idx]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if n and len(components_within(adj, full)) == 1:
            yield _trusted_graph(n, adj)


@lru_cache(maxsize=64)
def _unlabeled_by_size(n: int, max_edges: int) -> tuple[tuple[Graph, ...], ...]:
    levels = [(_trusted_graph(n, [0] * n),)]
    for _ in range(max_edges):
        seen: dict[bytes, Graph] = {}
        for g in levels[-1]:
            for u, v in g.non_edges():
                adj = list(g.adj)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                child = _trusted_graph(n, adj)
                code = canonical_code(child)
                if code not in seen:
                    seen[code] = canonical_form(child)
        if not seen:
            break
        levels.append(tuple(seen[c] for c in sorted(seen)))
    return tuple(levels)


def unlabeled_graphs(n: int, max_edges: int | None = None) -> Iterator[Graph]:
    """One canonical representative per isomorphism class with at most ``max_edges`` edges."""
    if max_edges is None:
        max_edges = n * (n - 1) // 2
    for level in _unlabeled_by_size(n, min(max_edges, n * (n - 1) // 2)):
        yield from level


def _labeled_sparse(n: int, max_edges: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    total = sum(math.comb(len(pairs), j) for j in range(max_edges + 1))
    if total > LABELED_BUDGET:
        raise EnumerationBudgetExceeded(f"{total} labelled complements exceed the budget")
    for j in range(max_edges + 1):
        for chosen in combinations(pairs, j):
            adj = [0] * n
            for u, v in chosen:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            yield _trusted_graph(n, adj)


# --- tasks ------------------------------------------------------------------


def spectral_prefilter(n: int, rho_threshold) -> int:
    """Least edge count ``m`` with ``sqrt(2m - n + 1) >= rho_threshold``.

    Connected graphs with fewer edges have spectral radius below the
    threshold. ``rho_threshold`` may be a float or an :class:`AlgebraicRoot`
    (its certified lower end is used).
    """
    if isinstance(rho_threshold, AlgebraicRoot):
        low = max(rho_threshold.lo, Fraction(0))
    else:
        low = Fraction(max(float(rho_threshold), 0.0)) - Fraction(1, 10**9)
        low = max(low, Fraction(0))
    need = (low * low + n - 1) / 2
    return max(0, math.ceil(need))


@dataclass
class EnumerationTask:
    n: int
    mode: str = "all-labeled-connected"  # or "dense-by-complement", "spectral-filtered"
    max_complement_edges: int | None = None
    rho_threshold: AlgebraicRoot | float | None = None
    dedup: bool = False


@dataclass
class EnumerationStats:
    generated: int = 0
    disconnected: int = 0
    below_threshold: int = 0
    escalated: int = 0
    yielded: int = 0
    notes: list[str] = field(default_factory=list)


def _complements(n: int, b: int, dedup: bool) -> Iterator[Graph]:
    source = unlabeled_graphs(n, b) if dedup else _labeled_sparse(n, b)
    full = (1 << n) - 1
    for h in source:
        yield _trusted_graph(n, [full & ~row & ~(1 << v) for v, row in enumerate(h.adj)])


def enumerate_graphs(task: EnumerationTask, stats: EnumerationStats | None = None) -> Iterator[Graph]:
    """Stream the connected graphs selected by ``task`` in a deterministic order."""
    if stats is None:
        stats = EnumerationStats()
    n = task.n
    if n < 1:
        raise ValueError("n must be positive")
    total_pairs = n * (n - 1) // 2
    if task.mode == "all-labeled-connected":
        source = (g for g in unlabeled_graphs(n)) if task.dedup else labeled_connected_graphs(n)
        for g in source:
            stats.generated += 1
            if not is_connected(g):
                stats.disconnected += 1
                continue
            stats.yielded += 1
            yield g
        return
    if task.mode == "dense-by-complement":
        if task.max_complement_edges is None:
            raise ValueError("dense-by-complement needs max_complement_edges")
        b = min(task.max_complement_edges, total_pairs)
        for g in _complements(n, b, task.dedup):
            stats.generated += 1
            if not is_connected(g):
                stats.disconnected += 1
                continue
            stats.yielded += 1
            yield g
        return
    if task.mode == "spectral-filtered":
        from .spectral import compare_to_threshold

        if task.rho_threshold is None:
            raise ValueError("spectral-filtered needs rho_threshold")
        threshold = task.rho_threshold
        if not isinstance(threshold, AlgebraicRoot):
            raise ValueError("spectral-filtered needs an exact threshold (AlgebraicRoot)")
        b = total_pairs - spectral_prefilter(n, threshold)
        if b < 0:
            return
        for g in _complements(n, b, task.dedup):
            stats.generated += 1
            if not is_connected(g):
                stats.disconnected += 1
                continue
            decision = compare_to_threshold(g, threshold)
            stats.escalated += decision.escalated
            if not decision.at_least:
                stats.below_threshold += 1
                continue
            stats.yielded += 1
            yield g
        return
    raise ValueError(f"unknown enumeration mode {task.mode!r}")
