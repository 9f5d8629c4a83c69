"""Immutable simple graphs stored as per-vertex neighbour bitsets.

Vertices are ``0..n-1``; ``adj[v]`` is an ``int`` whose bit ``u`` is set when
``uv`` is an edge. Every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graph input (bad indices, loops, bad encodings)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside the graph")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
            total += popcount(row)
        object.__setattr__(self, "m", total // 2)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if not self.adj[u] >> v & 1]

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def add_edge(self, u: int, v: int) -> Graph:
        return from_edge_list(self.n, self.edges() + [(u, v)])

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            image = 0
            for u in bits(row):
                image |= 1 << perm[u]
            adj[perm[v]] = image
        return Graph(self.n, tuple(adj))

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


@dataclass(frozen=True)
class ComponentSummary:
    components: tuple[int, ...]
    odd_nontrivial: int
    isolated: int
    even_count: int

    @property
    def orders(self) -> list[int]:
        return [popcount(c) for c in self.components]


# --- construction -----------------------------------------------------------


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def star(n: int) -> Graph:
    """K_{1,n-1}; vertex 0 is the centre."""
    return complete_bipartite(1, n - 1)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_ORDER:
        raise GraphError(f"combined order {g1.n + g2.n} exceeds {MAX_ORDER}")
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them."""
    if g1.n + g2.n > MAX_ORDER:
        raise GraphError(f"combined order {g1.n + g2.n} exceeds {MAX_ORDER}")
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    adj = tuple(row | right for row in g1.adj) + tuple((row << g1.n) | left for row in g2.adj)
    return Graph(g1.n + g2.n, adj)


def copies(g: Graph, times: int) -> Graph:
    out = empty(0)
    for _ in range(times):
        out = disjoint_union(out, g)
    return out


def delete_vertices(g: Graph, removed: int, return_map: bool = False):
    """Induced subgraph on ``V \\ removed``, relabelled to ``0..n'-1``.

    With ``return_map`` the old-to-new vertex map is returned as well.
    """
    keep = [v for v in range(g.n) if not removed >> v & 1]
    new_index = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        row = 0
        for u in bits(g.adj[old] & ~removed):
            row |= 1 << new_index[u]
        adj.append(row)
    h = Graph(len(keep), tuple(adj))
    return (h, new_index) if return_map else h


def delete_vertex(g: Graph, v: int) -> Graph:
    return delete_vertices(g, 1 << v)


# --- components -------------------------------------------------------------


def components_within(adj: tuple[int, ...], alive: int) -> list[int]:
    """Connected components (as bitsets) of the subgraph induced by ``alive``."""
    comps = []
    rest = alive
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & alive & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def odd_and_isolated(adj: tuple[int, ...], alive: int) -> tuple[int, int]:
    """``(odd(H), i(H))`` for ``H`` induced on ``alive``; odd counts orders >= 3."""
    odd = iso = 0
    for comp in components_within(adj, alive):
        size = popcount(comp)
        if size == 1:
            iso += 1
        elif size & 1:
            odd += 1
    return odd, iso


def isolated_count(adj: tuple[int, ...], alive: int) -> int:
    count = 0
    for v in bits(alive):
        if not adj[v] & alive:
            count += 1
    return count


def component_summary(g: Graph) -> ComponentSummary:
    comps = components_within(g.adj, g.vertex_mask)
    odd = iso = even = 0
    for comp in comps:
        size = popcount(comp)
        if size == 1:
            iso += 1
        elif size & 1:
            odd += 1
        else:
            even += 1
    return ComponentSummary(tuple(comps), odd, iso, even)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(components_within(g.adj, g.vertex_mask)) == 1


# --- graph6 -----------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    value = 0
    count = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(value + 63))
                value = count = 0
    if count:
        out.append(chr((value << (6 - count)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("graph6 orders above 258047 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body length {len(body)} does not match order {n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def read_graph6_file(path: str | Path) -> list[Graph]:
    lines = Path(path).read_text().splitlines()
    return [from_graph6(line) for line in lines if line.strip()]


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count


# --- plain edge list --------------------------------------------------------


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphError("each edge line must hold exactly two vertices")
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)
