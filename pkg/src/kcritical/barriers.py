"""k-Berge-Tutte deficiency, k-barriers and the subset inequalities.

For a vertex subset ``S`` the value is ``k*i(G-S) - k|S|`` when ``k`` is even
and ``odd(G-S) + k*i(G-S) - k|S|`` when ``k`` is odd, where ``odd`` counts
components of odd order at least 3 and ``i`` counts isolated vertices. The
deficiency is the maximum over all subsets and the maximisers are barriers.

Subsets are bitsets. Whenever a single witness is reported it is the first
subset in (size, sorted vertex tuple) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .graph import Graph, bits, isolated_count, odd_and_isolated, popcount

BRUTE_FORCE_CAP = 24
ALL_BARRIERS_CAP = 16


@dataclass(frozen=True)
class BarrierReport:
    k: int
    deficiency: int
    barriers: tuple[int, ...]
    empty_is_unique: bool
    barrier_count: int

    @property
    def witness(self) -> int:
        return self.barriers[0]


def subset_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return popcount(mask), tuple(bits(mask))


@lru_cache(maxsize=None)
def _ordered_subsets(n: int) -> tuple[int, ...]:
    return tuple(_iter_subsets_by_size(n, range(n + 1)))


def _iter_subsets_by_size(n: int, sizes: Iterable[int]) -> Iterator[int]:
    for size in sizes:
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield mask


def subsets_in_order(n: int, sizes: Iterable[int] | None = None) -> Iterator[int]:
    """All subsets of ``range(n)`` by increasing size, lexicographic within a size."""
    if sizes is None:
        if n <= ALL_BARRIERS_CAP:
            return iter(_ordered_subsets(n))
        sizes = range(n + 1)
    return _iter_subsets_by_size(n, sizes)


def subset_value(g: Graph, s: int, k: int) -> int:
    if k < 1:
        raise ValueError("k must be a positive integer")
    alive = g.vertex_mask & ~s
    size = popcount(s)
    if k % 2 == 0:
        return k * isolated_count(g.adj, alive) - k * size
    odd, iso = odd_and_isolated(g.adj, alive)
    return odd + k * iso - k * size


def _value_at_empty(g: Graph, k: int) -> int:
    return subset_value(g, 0, k)


def _neighbourhood_family(g: Graph) -> set[int]:
    """Every S for which some vertex is isolated in G-S (S contains N(v), v not in S)."""
    family = set()
    for v in range(g.n):
        base = g.adj[v]
        free = [u for u in range(g.n) if u != v and not base >> u & 1]
        for r in range(len(free) + 1):
            for combo in combinations(free, r):
                mask = base
                for u in combo:
                    mask |= 1 << u
                family.add(mask)
    return family


def _family_size(g: Graph) -> int:
    return sum(1 << (g.n - 1 - g.degree(v)) for v in range(g.n))


def _odd_bound(n: int, size: int) -> int:
    # odd(G-S) <= (n - |S|) / 3 since every counted component has >= 3 vertices
    return (n - size) // 3


def _pruned_candidates(g: Graph, k: int, floor_value: int) -> set[int]:
    """Superset of all S whose value could reach ``floor_value`` (exact pruning).

    Subsets leaving an isolated vertex all lie in the neighbourhood family.
    Subsets leaving none are worth at most ``odd_bound - k|S|`` (odd k) or
    ``-k|S|`` (even k), so only sizes where that bound reaches
    ``floor_value`` are enumerated in full.
    """
    cands = _neighbourhood_family(g)
    cands.add(0)
    for size in range(1, g.n + 1):
        bound = -k * size + (_odd_bound(g.n, size) if k % 2 else 0)
        if bound >= floor_value:
            cands.update(_iter_subsets_by_size(g.n, [size]))
    return cands


def _use_pruning(g: Graph) -> bool:
    return _family_size(g) < (1 << g.n) // 2


def deficiency_k(g: Graph, k: int, prune: bool | None = None) -> BarrierReport:
    """Exact ``def_k(G)`` together with its barriers.

    ``prune=None`` picks the pruned search when the neighbourhood family is
    small (dense graphs) and brute force otherwise. Brute force is limited to
    ``n <= 24``; all barriers are listed when ``n <= 16``.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if prune is None:
        prune = _use_pruning(g)
    if not prune and g.n > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force needs n <= {BRUTE_FORCE_CAP}; enable pruning")
    if prune:
        start = _value_at_empty(g, k)
        candidates: Iterable[int] = sorted(_pruned_candidates(g, k, start), key=subset_key)
    else:
        candidates = subsets_in_order(g.n)
    best = None
    found: list[int] = []
    count = 0
    for s in candidates:
        value = subset_value(g, s, k)
        if best is None or value > best:
            best, found, count = value, [s], 1
        elif value == best:
            count += 1
            if g.n <= ALL_BARRIERS_CAP:
                found.append(s)
    return BarrierReport(k, best, tuple(found), found == [0] and count == 1, count)


def _first_violation(g: Graph, k: int, slack: int, prune: bool | None) -> int | None:
    """First nonempty S with ``odd + k*i >= k|S| - slack + 1`` (odd k)."""
    threshold = 1 - slack
    if prune is None:
        prune = _use_pruning(g)
    if prune:
        # value(S) = odd + k i - k|S| must reach 1 - slack
        cands = sorted(_pruned_candidates(g, k, threshold) - {0}, key=subset_key)
    else:
        cands = subsets_in_order(g.n, range(1, g.n + 1))
    for s in cands:
        odd, iso = odd_and_isolated(g.adj, g.vertex_mask & ~s)
        if odd + k * iso - k * popcount(s) >= threshold:
            return s
    return None


def _require_odd_k(k: int) -> None:
    if k < 3 or k % 2 == 0:
        raise ValueError("this inequality is stated for odd k >= 3")


def violates_gfc_inequality(g: Graph, k: int, prune: bool | None = None) -> int | None:
    """Nonempty S with ``odd(G-S) + k*i(G-S) >= k|S|``, or None."""
    _require_odd_k(k)
    return _first_violation(g, k, 1, prune)


def violates_gbc_inequality(g: Graph, k: int, prune: bool | None = None) -> int | None:
    """Nonempty S with ``odd(G-S) + k*i(G-S) >= k|S| - 1``, or None."""
    _require_odd_k(k)
    return _first_violation(g, k, 2, prune)


def violates_kd_inequality(g: Graph, k: int, d: int, prune: bool | None = None) -> int | None:
    """Nonempty S with ``odd(G-S) + k*i(G-S) >= k|S| - d + 1``, or None."""
    _require_odd_k(k)
    if not 1 <= d <= k:
        raise ValueError("d must satisfy 1 <= d <= k")
    if (g.n - d) % 2:
        raise ValueError(f"parity mismatch: n={g.n} and d={d} differ mod 2")
    return _first_violation(g, k, d, prune)


def violates_even_k_inequality(g: Graph, prune: bool | None = None) -> int | None:
    """Nonempty S with ``i(G-S) >= |S|``, or None."""
    if prune is None:
        prune = _use_pruning(g)
    if prune:
        cands: Iterable[int] = sorted(_neighbourhood_family(g) - {0}, key=subset_key)
    else:
        cands = subsets_in_order(g.n, range(1, g.n + 1))
    for s in cands:
        if isolated_count(g.adj, g.vertex_mask & ~s) >= popcount(s):
            return s
    return None


def max_isolated_excess(g: Graph) -> tuple[int, int]:
    """``max_S i(G-S) - |S|`` over all S (including the empty set) and a witness."""
    best, arg = isolated_count(g.adj, g.vertex_mask), 0
    cands = _neighbourhood_family(g) if _use_pruning(g) else set(subsets_in_order(g.n))
    for s in sorted(cands, key=subset_key):
        value = isolated_count(g.adj, g.vertex_mask & ~s) - popcount(s)
        if value > best:
            best, arg = value, s
    return best, arg


def isolated_excess_ok(g: Graph) -> bool:
    """True iff ``i(G-S) <= |S|`` for every S, the empty set included.

    Equivalent to ``|N(I)| >= |I|`` for every nonempty independent set ``I``:
    the isolated vertices of ``G-S`` form such an ``I`` with ``N(I) ⊆ S``,
    and conversely ``S = N(I)`` leaves all of ``I`` isolated.
    """
    adj = g.adj
    n = g.n

    def grow(start: int, chosen: int, size: int, nbhd: int) -> bool:
        for v in range(start, n):
            if nbhd >> v & 1 or chosen >> v & 1:
                continue
            new_nbhd = nbhd | adj[v]
            if popcount(new_nbhd) < size + 1:
                return False
            if not grow(v + 1, chosen | (1 << v), size + 1, new_nbhd):
                return False
        return True

    return grow(0, 0, 0, 0)
