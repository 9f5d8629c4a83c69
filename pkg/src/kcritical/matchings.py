"""k-matchings, fractional matchings and {K_2, cycle}-factors.

Weights are keyed by edges ``(u, v)`` with ``u < v``. Fractional matchings
are held in doubled form (integers 0, 1, 2), so a fractional perfect matching
is a doubled weighting with every vertex load equal to 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .barriers import isolated_excess_ok, subset_value
from .graph import Graph, bits, popcount


class BudgetExceeded(RuntimeError):
    """Exact search stopped because the graph is beyond its search budget."""


class MatchingError(ValueError):
    """Input matching or factor does not satisfy the required shape."""


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _loads(n: int, weights: dict[tuple[int, int], int]) -> list[int]:
    load = [0] * n
    for (u, v), w in weights.items():
        load[u] += w
        load[v] += w
    return load


@dataclass(frozen=True)
class WeightedMatching:
    k: int
    weights: dict[tuple[int, int], int]
    n: int

    @property
    def vertex_load(self) -> list[int]:
        return _loads(self.n, self.weights)

    @property
    def total(self) -> int:
        return sum(self.weights.values())

    def is_perfect(self) -> bool:
        return all(x == self.k for x in self.vertex_load)

    def validate(self, g: Graph) -> None:
        for (u, v), w in self.weights.items():
            if not g.has_edge(u, v):
                raise MatchingError(f"weight on non-edge {(u, v)}")
            if not 0 <= w <= self.k:
                raise MatchingError(f"weight {w} on {(u, v)} outside 0..{self.k}")
        for v, load in enumerate(self.vertex_load):
            if load > self.k:
                raise MatchingError(f"vertex {v} has load {load} > {self.k}")


@dataclass(frozen=True)
class HalfIntegralMatching:
    doubled_weights: dict[tuple[int, int], int]
    n: int
    total_doubled: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total_doubled", sum(self.doubled_weights.values()))

    @property
    def value(self) -> Fraction:
        return Fraction(self.total_doubled, 2)

    @property
    def doubled_load(self) -> list[int]:
        return _loads(self.n, self.doubled_weights)

    def validate(self, g: Graph) -> None:
        for (u, v), w in self.doubled_weights.items():
            if not g.has_edge(u, v):
                raise MatchingError(f"weight on non-edge {(u, v)}")
            if w not in (0, 1, 2):
                raise MatchingError(f"doubled weight {w} is not half-integral")
        if any(x > 2 for x in self.doubled_load):
            raise MatchingError("fractional load above 1")


@dataclass(frozen=True)
class FactorDecomposition:
    k2_edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    kind: str  # "any-cycle" or "odd-cycle-only"

    def validate(self, g: Graph) -> None:
        seen = 0
        for u, v in self.k2_edges:
            if not g.has_edge(u, v):
                raise MatchingError(f"K2 {(u, v)} is not an edge")
            for x in (u, v):
                if seen >> x & 1:
                    raise MatchingError(f"vertex {x} covered twice")
                seen |= 1 << x
        for cyc in self.cycles:
            if len(cyc) < 3:
                raise MatchingError(f"cycle {cyc} shorter than 3")
            if self.kind == "odd-cycle-only" and len(cyc) % 2 == 0:
                raise MatchingError(f"even cycle {cyc} in an odd-cycle factor")
            for i, x in enumerate(cyc):
                if seen >> x & 1:
                    raise MatchingError(f"vertex {x} covered twice")
                seen |= 1 << x
                if not g.has_edge(x, cyc[(i + 1) % len(cyc)]):
                    raise MatchingError(f"cycle {cyc} uses a non-edge")
        if seen != g.vertex_mask:
            raise MatchingError("factor does not span the graph")


# --- fractional matchings via the bipartite double cover --------------------


def double_cover_matching(g: Graph) -> list[int]:
    """Maximum matching of the double cover; ``mate[w]`` is the left copy matched to ``w-``."""
    mate = [-1] * g.n

    def augment(u: int, visited: list[int]) -> bool:
        for w in bits(g.adj[u] & ~visited[0]):
            visited[0] |= 1 << w
            if mate[w] < 0 or augment(mate[w], visited):
                mate[w] = u
                return True
        return False

    for u in range(g.n):
        augment(u, [0])
    return mate


def fractional_matching(g: Graph) -> HalfIntegralMatching:
    """Maximum fractional matching in doubled (half-integral) form.

    Edge ``uv`` gets one unit per matched copy among ``u+v-`` and ``v+u-``.
    """
    mate = double_cover_matching(g)
    doubled = {}
    for w, u in enumerate(mate):
        if u >= 0:
            e = _edge(u, w)
            doubled[e] = doubled.get(e, 0) + 1
    return HalfIntegralMatching(doubled, g.n)


def has_fractional_perfect_matching(g: Graph) -> bool:
    return fractional_matching(g).total_doubled == g.n


def factor_from_fractional(g: Graph, frac: HalfIntegralMatching) -> FactorDecomposition:
    """{K2, odd cycle}-factor from a half-integral fractional perfect matching."""
    if frac.total_doubled != g.n or any(x != 2 for x in frac.doubled_load):
        raise MatchingError("fractional matching is not perfect")
    k2 = [e for e, w in frac.doubled_weights.items() if w == 2]
    half = [0] * g.n
    for (u, v), w in frac.doubled_weights.items():
        if w == 1:
            half[u] |= 1 << v
            half[v] |= 1 << u
    covered_by_k2 = 0
    for u, v in k2:
        covered_by_k2 |= (1 << u) | (1 << v)
    pending = 0
    for v in range(g.n):
        deg = popcount(half[v])
        if deg and covered_by_k2 >> v & 1:
            raise MatchingError(f"vertex {v} carries both a full and a half edge")
        if deg not in (0, 2):
            raise MatchingError(f"half-weight support is not 2-regular at vertex {v}")
        if deg:
            pending |= 1 << v
    cycles = []
    while pending:
        start = (pending & -pending).bit_length() - 1
        cyc = [start]
        prev, cur = start, (half[start] & -half[start]).bit_length() - 1
        while cur != start:
            cyc.append(cur)
            nxt = half[cur] & ~(1 << prev)
            prev, cur = cur, (nxt & -nxt).bit_length() - 1
        for x in cyc:
            pending &= ~(1 << x)
        if len(cyc) % 2:
            cycles.append(tuple(cyc))
        else:
            k2.extend(_edge(cyc[i], cyc[i + 1]) for i in range(0, len(cyc), 2))
    factor = FactorDecomposition(tuple(sorted(k2)), tuple(cycles), "odd-cycle-only")
    factor.validate(g)
    return factor


def k_matching_from_factor(g: Graph, factor: FactorDecomposition, k: int) -> WeightedMatching:
    """Perfect k-matching: weight k on each K2, k/2 on each cycle edge."""
    if k < 2 or k % 2:
        raise ValueError("k must be an even integer >= 2")
    factor.validate(g)
    weights = {e: k for e in factor.k2_edges}
    for cyc in factor.cycles:
        for i, x in enumerate(cyc):
            weights[_edge(x, cyc[(i + 1) % len(cyc)])] = k // 2
    return WeightedMatching(k, weights, g.n)


def fractional_from_k_matching(matching: WeightedMatching) -> dict[tuple[int, int], Fraction]:
    if not matching.is_perfect():
        raise MatchingError("k-matching is not perfect")
    return {e: Fraction(w, matching.k) for e, w in matching.weights.items()}


# --- cycle-cover search -----------------------------------------------------


def _allow_any(length: int) -> bool:
    return length >= 2


def _allow_odd(length: int) -> bool:
    return length == 2 or length % 2 == 1


def cycle_factor_search(g: Graph, odd_only: bool = False) -> FactorDecomposition | None:
    """Direct search for a {K2, cycle}-factor (odd cycles only if ``odd_only``).

    Searches for a successor map ``v -> s(v)`` with ``v s(v)`` an edge that is
    a permutation; its 2-cycles are the K2 parts. Independent of the
    fractional-matching route.
    """
    allow: Callable[[int], bool] = _allow_odd if odd_only else _allow_any
    n = g.n
    adj = g.adj
    succ = [-1] * n

    def close_ok(free: int) -> bool:
        # every unplaced vertex still needs a free neighbour
        rest = free
        while rest:
            low = rest & -rest
            if not adj[low.bit_length() - 1] & free:
                return False
            rest ^= low
        return True

    def extend(start: int, cur: int, length: int, free: int) -> bool:
        options = adj[cur] & (free | (1 << start))
        while options:
            low = options & -options
            options ^= low
            w = low.bit_length() - 1
            if w == start:
                if length < 2 or not allow(length):
                    continue
                succ[cur] = start
                if close_ok(free) and new_cycle(free):
                    return True
                succ[cur] = -1
            else:
                succ[cur] = w
                if extend(start, w, length + 1, free & ~(1 << w)):
                    return True
                succ[cur] = -1
        return False

    def new_cycle(free: int) -> bool:
        if not free:
            return True
        start = (free & -free).bit_length() - 1
        return extend(start, start, 1, free & ~(1 << start))

    if not new_cycle(g.vertex_mask):
        return None
    k2, cycles, done = [], [], 0
    for v in range(n):
        if done >> v & 1:
            continue
        cyc = [v]
        x = succ[v]
        while x != v:
            cyc.append(x)
            x = succ[x]
        for x in cyc:
            done |= 1 << x
        if len(cyc) == 2:
            k2.append(_edge(*cyc))
        else:
            cycles.append(tuple(cyc))
    factor = FactorDecomposition(tuple(k2), tuple(cycles), "odd-cycle-only" if odd_only else "any-cycle")
    factor.validate(g)
    return factor


# --- integral k-matchings ---------------------------------------------------


def has_perfect_k_matching(g: Graph, k: int) -> bool:
    """Structural test: ``i(G-S) <= |S|`` (even k) or ``odd + k i <= k|S|`` (odd k) for all S."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k % 2 == 0:
        return isolated_excess_ok(g)
    from .barriers import deficiency_k

    return deficiency_k(g, k).deficiency <= 0 and subset_value(g, 0, k) <= 0


def k_matching_number(g: Graph, k: int, node_budget: int = 2_000_000) -> tuple[int, WeightedMatching]:
    """Exact ``mu_k(G)`` by depth-first branch and bound over edges."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n > 12:
        raise BudgetExceeded("exact k-matching number is limited to n <= 12")
    deg = g.degrees()
    edges = sorted(g.edges(), key=lambda e: (min(deg[e[0]], deg[e[1]]), e))
    m = len(edges)
    # remaining[i][v]: edges at position >= i incident to v
    remaining = [[0] * g.n for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        remaining[i] = remaining[i + 1][:]
        u, v = edges[i]
        remaining[i][u] += 1
        remaining[i][v] += 1
    ceiling = k * g.n // 2
    load = [0] * g.n
    current = [0] * m
    best = [-1, [0] * m]
    nodes = [0]

    def bound(i: int, total: int) -> int:
        room = sum(min(k - load[v], k * remaining[i][v]) for v in range(g.n))
        return total + room // 2

    def dfs(i: int, total: int) -> bool:
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise BudgetExceeded(f"k-matching search exceeded {node_budget} nodes")
        if total > best[0]:
            best[0], best[1] = total, current[:]
            if total == ceiling:
                return True
        if i == m or bound(i, total) <= best[0]:
            return False
        u, v = edges[i]
        for w in range(min(k - load[u], k - load[v]), -1, -1):
            current[i] = w
            load[u] += w
            load[v] += w
            stop = dfs(i + 1, total + w)
            load[u] -= w
            load[v] -= w
            current[i] = 0
            if stop:
                return True
        return False

    dfs(0, 0)
    weights = {e: w for e, w in zip(edges, best[1]) if w}
    return best[0], WeightedMatching(k, weights, g.n)


def exact_load_matching(g: Graph, targets: list[int], k: int,
                        node_budget: int = 5_000_000) -> WeightedMatching | None:
    """A k-matching whose load at each vertex ``v`` is exactly ``targets[v]``.

    Backtracking: repeatedly take the needy vertex with the fewest usable
    neighbours and branch on the weight of its lowest usable edge, largest
    weight first. A vertex whose need exceeds what its open edges can still
    carry prunes the branch.
    """
    n = g.n
    if any(not 0 <= t <= k for t in targets) or sum(targets) % 2:
        return None
    rem = list(targets)
    open_adj = list(g.adj)
    weights: dict[tuple[int, int], int] = {}
    nodes = [0]

    def usable(v: int) -> int:
        mask = 0
        for w in bits(open_adj[v]):
            if rem[w]:
                mask |= 1 << w
        return mask

    def feasible() -> bool:
        for v in range(n):
            if rem[v]:
                cap = 0
                for w in bits(open_adj[v]):
                    cap += min(k, rem[w])
                if cap < rem[v]:
                    return False
        return True

    def rec() -> bool:
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise BudgetExceeded(f"exact-load search exceeded {node_budget} nodes")
        pick, pick_mask, pick_count = -1, 0, n + 1
        for v in range(n):
            if rem[v]:
                mask = usable(v)
                c = popcount(mask)
                if c < pick_count:
                    pick, pick_mask, pick_count = v, mask, c
        if pick < 0:
            return True
        if pick_count == 0:
            return False
        v = pick
        w = (pick_mask & -pick_mask).bit_length() - 1
        open_adj[v] &= ~(1 << w)
        open_adj[w] &= ~(1 << v)
        for x in range(min(k, rem[v], rem[w]), -1, -1):
            rem[v] -= x
            rem[w] -= x
            if feasible() and rec():
                if x:
                    weights[_edge(v, w)] = x
                return True
            rem[v] += x
            rem[w] += x
        open_adj[v] |= 1 << w
        open_adj[w] |= 1 << v
        return False

    if not feasible() or not rec():
        return None
    result = WeightedMatching(k, weights, n)
    result.validate(g)
    if result.vertex_load != list(targets):
        raise MatchingError("internal error: exact-load search returned wrong loads")
    return result


def perfect_k_matching_search(g: Graph, k: int) -> WeightedMatching | None:
    """Definitional search for a perfect k-matching (every load exactly k)."""
    if g.n > 12:
        raise BudgetExceeded("definitional search is limited to n <= 12")
    return exact_load_matching(g, [k] * g.n, k)


def kd_critical_witness(g: Graph, v: int, k: int, d: int) -> WeightedMatching | None:
    """k-matching with load ``k - d`` at ``v`` and ``k`` elsewhere, or None."""
    if k < 1 or not 1 <= d <= k:
        raise ValueError("need k >= 1 and 1 <= d <= k")
    if g.n > 10:
        raise BudgetExceeded("k-d witness search is limited to n <= 10")
    targets = [k] * g.n
    targets[v] = k - d
    return exact_load_matching(g, targets, k)


# --- the four-factor equivalence --------------------------------------------


@dataclass(frozen=True)
class FactorPredicates:
    cycle_factor: bool
    odd_cycle_factor: bool
    fractional_perfect: bool
    perfect_k_matching: bool
    k: int

    @property
    def agree(self) -> bool:
        return len({self.cycle_factor, self.odd_cycle_factor,
                    self.fractional_perfect, self.perfect_k_matching}) == 1


def factor_predicates(g: Graph, k_even: int) -> FactorPredicates:
    """Evaluate the four factor predicates by separate routes.

    Positive answers are backed by validated witnesses: the odd-cycle factor
    is rebuilt from the fractional matching and must agree with the direct
    search, and a perfect k-matching is assembled from it and checked.
    """
    if k_even < 2 or k_even % 2:
        raise ValueError("k_even must be an even integer >= 2")
    any_factor = cycle_factor_search(g) is not None
    odd_factor = cycle_factor_search(g, odd_only=True) is not None
    frac = fractional_matching(g)
    frac.validate(g)
    fractional = frac.total_doubled == g.n
    structural = has_perfect_k_matching(g, k_even)
    if fractional:
        factor = factor_from_fractional(g, frac)
        witness = k_matching_from_factor(g, factor, k_even)
        witness.validate(g)
        if not witness.is_perfect():
            raise MatchingError("constructed k-matching is not perfect")
        back = fractional_from_k_matching(witness)
        # loads scaled by k keep the check in integers
        loads = [0] * g.n
        for (u, v), w in back.items():
            scaled = w.numerator * (k_even // w.denominator)
            if k_even % w.denominator or not 0 <= w <= 1:
                raise MatchingError(f"edge weight {w} is not a valid fractional weight")
            loads[u] += scaled
            loads[v] += scaled
        if any(x != k_even for x in loads):
            raise MatchingError("round trip lost fractional perfection")
    return FactorPredicates(any_factor, odd_factor, fractional, structural, k_even)


def verify_theorem9_equivalence(g: Graph, k_even: int) -> bool:
    return factor_predicates(g, k_even).agree
