"""Exact univariate polynomial tools over the rationals.

Polynomials are lists of coefficients, constant term first. Everything is
done with ``int`` / ``Fraction`` so root counts and comparisons are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list  # list[Fraction | int], constant term first


def trim(p: Sequence) -> Poly:
    q = list(p)
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q


def degree(p: Sequence) -> int:
    q = trim(p)
    return -1 if q == [0] else len(q) - 1


def evaluate(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:] or [0])


def divmod_poly(a: Sequence, b: Sequence) -> tuple[Poly, Poly]:
    a = [Fraction(c) for c in trim(a)]
    b = [Fraction(c) for c in trim(b)]
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    rem = a[:]
    while degree(rem) >= degree(b) and rem != [0]:
        shift = len(rem) - len(b)
        factor = rem[-1] / b[-1]
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[i + shift] -= factor * c
        rem = trim(rem)
    return trim(quot), rem


def monic(p: Sequence) -> Poly:
    q = [Fraction(c) for c in trim(p)]
    return [c / q[-1] for c in q]


def gcd(a: Sequence, b: Sequence) -> Poly:
    a, b = trim(a), trim(b)
    while b != [0]:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def square_free(p: Sequence) -> Poly:
    g = gcd(p, derivative(p))
    return monic(divmod_poly(p, g)[0]) if degree(g) > 0 else monic(p)


def sturm_sequence(p: Sequence) -> list[Poly]:
    seq = [monic(p), derivative(monic(p))]
    while degree(seq[-1]) > 0:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if r == [0]:
            break
        seq.append([-c for c in r])
    return seq


def _variations(seq: list[Poly], x) -> int:
    signs = [s for s in (evaluate(q, x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(p: Sequence, lo, hi, seq: list[Poly] | None = None) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(lo, hi]``."""
    if seq is None:
        seq = sturm_sequence(square_free(p))
    return _variations(seq, Fraction(lo)) - _variations(seq, Fraction(hi))


def root_bound(p: Sequence) -> Fraction:
    """Cauchy bound: every real root lies in ``[-B, B]``."""
    q = monic(p)
    return 1 + max((abs(c) for c in q[:-1]), default=Fraction(0))


def largest_root_bracket(p: Sequence, width: Fraction = Fraction(1, 2**60)) -> tuple[Fraction, Fraction]:
    """Interval ``(lo, hi]`` of width <= ``width`` holding the largest real root."""
    seq = sturm_sequence(square_free(p))
    bound = root_bound(p)
    lo, hi = -bound - 1, bound
    if count_roots(p, lo, hi, seq) == 0:
        raise ValueError("polynomial has no real roots")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots(p, mid, hi, seq) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def charpoly_int(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Characteristic polynomial ``det(xI - M)`` of an integer matrix (Faddeev-LeVerrier)."""
    n = len(matrix)
    a = [list(map(int, row)) for row in matrix]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        m = prod
        trace = sum(sum(a[i][t] * m[t][i] for t in range(n)) for i in range(n))
        if trace % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = -trace // k
    return coeffs


class AlgebraicRoot:
    """The largest real root of an integer polynomial, held exactly.

    ``lo < root <= hi`` always; :meth:`refine` halves the bracket.
    """

    def __init__(self, poly: Sequence[int]):
        self.poly = trim(list(poly))
        self._seq = sturm_sequence(square_free(self.poly))
        self.lo, self.hi = largest_root_bracket(self.poly, Fraction(1, 2**20))
        # the bracket must isolate the root from the smaller ones
        while count_roots(self.poly, self.lo, self.hi, self._seq) > 1:
            self.refine((self.hi - self.lo) / 2)

    def refine(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            if count_roots(self.poly, mid, self.hi, self._seq) >= 1:
                self.lo = mid
            else:
                self.hi = mid

    def __float__(self) -> float:
        self.refine(Fraction(1, 2**60))
        mid = (self.lo + self.hi) / 2
        # eigenvalues that are rational are integers; report those exactly
        near = round(mid)
        if self.lo < near <= self.hi and evaluate(self.poly, near) == 0:
            return float(near)
        return float(mid)

    def compare_with_largest_root_of(self, other: Sequence[int]) -> int:
        """Sign of ``(largest root of other) - self``; exact."""
        other_seq = sturm_sequence(square_free(other))
        bound = root_bound(other) + 1
        common = gcd(self.poly, other)
        root_is_shared = degree(common) > 0 and count_roots(common, self.lo, self.hi) >= 1
        if root_is_shared:
            # isolate self among the roots of `other`, then look above it
            while count_roots(other, self.lo, self.hi, other_seq) > 1:
                self.refine((self.hi - self.lo) / 2)
            return 1 if count_roots(other, self.hi, max(bound, self.hi + 1), other_seq) else 0
        while count_roots(other, self.lo, self.hi, other_seq) > 0:
            self.refine((self.hi - self.lo) / 2)
        return 1 if count_roots(other, self.hi, max(bound, self.hi + 1), other_seq) else -1
