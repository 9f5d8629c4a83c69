"""Extremal and exception graph families, and their edge counts.

Families can be written in a small text form, for example
``"K1 v (K6 + 1*K1)"`` or ``"K4 v 4*K1"``: ``v`` is the join, ``+`` the
disjoint union, ``c*X`` means ``c`` disjoint copies, and the atoms are
``Kn``, ``Ka,b``, ``Cn`` and ``Pn``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import graph as gr
from .graph import Graph


@dataclass(frozen=True)
class FamilySpec:
    kind: str  # "join" (K_s v (K_a + bK_1)), "split", "complete", "star"
    params: tuple[int, ...]

    @classmethod
    def join_clique_plus_isolated(cls, s: int, a: int, b: int) -> FamilySpec:
        return cls("join", (s, a, b))

    @classmethod
    def split_like(cls, s: int, i: int) -> FamilySpec:
        return cls("split", (s, i))

    @classmethod
    def complete(cls, n: int) -> FamilySpec:
        return cls("complete", (n,))

    @classmethod
    def star(cls, n: int) -> FamilySpec:
        return cls("star", (n,))

    @property
    def n(self) -> int:
        if self.kind == "join":
            return sum(self.params)
        if self.kind == "split":
            return self.params[0] + self.params[1]
        return self.params[0]

    def to_dsl(self) -> str:
        if self.kind == "join":
            s, a, b = self.params
            return f"K{s} v (K{a} + {b}*K1)"
        if self.kind == "split":
            return f"K{self.params[0]} v {self.params[1]}*K1"
        if self.kind == "complete":
            return f"K{self.params[0]}"
        return f"K1,{self.params[0] - 1}"

    def __str__(self) -> str:
        return self.to_dsl()


def universal_exception(n: int) -> FamilySpec:
    """K_1 v (K_{n-2} + K_1)."""
    return FamilySpec.join_clique_plus_isolated(1, n - 2, 1)


def balanced_split(n: int) -> FamilySpec:
    """K_{floor(n/2)} v ceil(n/2) K_1."""
    return FamilySpec.split_like(n // 2, n - n // 2)


def build(spec: FamilySpec) -> Graph:
    if any(p < 0 for p in spec.params):
        raise ValueError(f"negative parameter in {spec}")
    if spec.n > gr.MAX_ORDER:
        raise gr.GraphError(f"order {spec.n} exceeds {gr.MAX_ORDER}")
    if spec.kind == "join":
        s, a, b = spec.params
        return gr.join(gr.complete(s), gr.disjoint_union(gr.complete(a), gr.empty(b)))
    if spec.kind == "split":
        s, i = spec.params
        return gr.join(gr.complete(s), gr.empty(i))
    if spec.kind == "complete":
        return gr.complete(spec.params[0])
    if spec.kind == "star":
        return gr.star(spec.params[0])
    raise ValueError(f"unknown family kind {spec.kind!r}")


# --- text form --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(K\d+,\d+|[KCP]\d+)|(\d+)|(v|\+|\*|\(|\)))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse family near {text[pos:]!r}")
        out.append(next(t for t in mt.groups() if t is not None))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'a token'}, found {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> Graph:
        g = self.union()
        while self.peek() == "v":
            self.take("v")
            g = gr.join(g, self.union())
        return g

    def union(self) -> Graph:
        g = self.atom()
        while self.peek() == "+":
            self.take("+")
            g = gr.disjoint_union(g, self.atom())
        return g

    def atom(self) -> Graph:
        tok = self.take()
        if tok.isdigit():
            self.take("*")
            return gr.copies(self.atom(), int(tok))
        if tok == "(":
            g = self.expr()
            self.take(")")
            return g
        kind, rest = tok[0], tok[1:]
        if kind == "K" and "," in rest:
            a, b = map(int, rest.split(","))
            return gr.complete_bipartite(a, b)
        size = int(rest)
        if kind == "K":
            return gr.complete(size)
        if kind == "C":
            return gr.cycle(size)
        if kind == "P":
            return gr.path(size)
        raise ValueError(f"unknown atom {tok!r}")


def parse_family(text: str) -> Graph:
    parser = _Parser(_tokenize(text))
    g = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input in family {text!r}")
    return g


# --- edge counts ------------------------------------------------------------


def edge_count_formula(s: int, n: int, variant: str) -> tuple[int, bool]:
    """Edges of K_s v (K_{n-2s} + sK_1) ("odd-case") or K_s v (K_{n-2s-1} + (s+1)K_1).

    Returns ``(count, in_domain)``; the binomial form is authoritative and
    is checked against the quadratic closed form.
    """
    if variant == "odd-case":
        count = comb(s, 2) + s * (n - s) + comb(n - 2 * s, 2)
        quad = Fraction(3 * s * s, 2) + (Fraction(1, 2) - n) * s + Fraction(n * n - n, 2)
        in_domain = 1 <= s and 2 * s <= n - 3
    elif variant == "even-case":
        count = comb(s, 2) + s * (n - s) + comb(n - 2 * s - 1, 2)
        # the constant term is (n^2 - 3n + 2)/2, i.e. C(n-2s-1, 2) expanded exactly
        quad = Fraction(3 * s * s, 2) + (Fraction(5, 2) - n) * s + Fraction(n * n - 3 * n + 2, 2)
        in_domain = 1 <= s and 2 * s <= n - 4
    else:
        raise ValueError("variant must be 'odd-case' or 'even-case'")
    if in_domain and quad != count:
        raise ArithmeticError(f"closed form disagrees at s={s}, n={n}: {quad} != {count}")
    return count, in_domain


def compare_exceptions(n: int) -> list[tuple[FamilySpec, int]]:
    """Edge counts of K_1 v (K_{n-2} + K_1) and K_{floor(n/2)} v ceil(n/2)K_1, largest first."""
    if n < 3:
        raise ValueError("n must be at least 3")
    specs = [universal_exception(n), balanced_split(n)]
    rows = [(spec, build(spec).m) for spec in specs]
    diff = rows[0][1] - rows[1][1]
    expected = Fraction((n - 3) * (n - 5), 8) if n % 2 else Fraction((n - 2) * (n - 8), 8)
    if diff != expected:
        raise ArithmeticError(f"edge difference {diff} != {expected} at n={n}")
    return sorted(rows, key=lambda r: -r[1])


def lemma4_check(s: int, parts: list[int] | tuple[int, ...], p: int) -> bool:
    """Compare e(K_s v (K_{n1}+...+K_{nt})) with e(K_s v (K_{n-s-p(t-1)} + (t-1)K_p)).

    Returns whether the first is strictly smaller; raises when the
    hypotheses ``n1 >= ... >= nt >= p >= 1`` and ``n1 < n - s - p(t-1)`` fail.
    """
    parts = list(parts)
    t = len(parts)
    n = s + sum(parts)
    if t == 0 or p < 1 or parts != sorted(parts, reverse=True) or parts[-1] < p:
        raise ValueError("need n1 >= ... >= nt >= p >= 1")
    big = n - s - p * (t - 1)
    if not parts[0] < big:
        raise ValueError(f"hypothesis n1 < n - s - p(t-1) fails ({parts[0]} >= {big})")
    left = gr.complete(parts[0])
    for size in parts[1:]:
        left = gr.disjoint_union(left, gr.complete(size))
    right = gr.complete(big)
    for _ in range(t - 1):
        right = gr.disjoint_union(right, gr.complete(p))
    return gr.join(gr.complete(s), left).m < gr.join(gr.complete(s), right).m
