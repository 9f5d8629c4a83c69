"""Exhaustive verification of the size and spectral criticality theorems.

Each theorem is checked order by order. A lookup table gives, for every
order, the hypothesis (an edge count or a spectral-radius threshold) and the
exact list of exception graphs. The check enumerates every connected graph
meeting the hypothesis, classifies it, and compares the failing graphs with
the expected exceptions up to isomorphism.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Iterable

from . import __version__
from .criticality import classify_gbc, classify_gfc, classify_kd, classify_parity
from .enumeration import (
    EnumerationBudgetExceeded,
    EnumerationStats,
    EnumerationTask,
    canonical_code,
    enumerate_graphs,
    labeled_connected_graphs,
)
from .extremal import FamilySpec, balanced_split, build, universal_exception
from .graph import Graph, delete_vertex
from .matchings import cycle_factor_search, fractional_matching, verify_theorem9_equivalence
from .spectral import quotient_root

SIZE_THEOREMS = ("T1", "T3", "T5", "T7")
SPECTRAL_THEOREMS = ("T2", "T4", "T6", "T8")
COROLLARIES = ("C10", "C11")
FACTOR_VARIANTS = ("cycle", "odd-cycle", "fractional")
MAX_SIZE_ORDER = 11
MAX_SPECTRAL_ORDER = 9


class RegimeError(ValueError):
    """Parameters outside the hypotheses of the statement being checked."""


@dataclass(frozen=True)
class Regime:
    theorem_id: str
    n: int
    clause: str
    measure: str  # "size" or "spectral"
    min_edges: int | None
    threshold_family: FamilySpec | None
    exceptions: tuple[FamilySpec, ...]


def _size_regime(theorem_id: str, n: int, clause: str, min_edges: int,
                 exceptions: Iterable[FamilySpec]) -> Regime:
    return Regime(theorem_id, n, clause, "size", min_edges, None, tuple(exceptions))


def _spectral_regime(theorem_id: str, n: int, clause: str, family: FamilySpec) -> Regime:
    return Regime(theorem_id, n, clause, "spectral", None, family, (family,))


def regime(theorem_id: str, n: int) -> Regime:
    """Hypothesis and exception list of ``theorem_id`` at order ``n``."""
    if n < 3:
        raise RegimeError("all statements need n >= 3")
    univ, bal = universal_exception(n), balanced_split(n)
    near_complete = comb(n - 1, 2) + 1
    if theorem_id == "T1":
        if n % 2 == 0:
            raise RegimeError("T1 is stated for odd n")
        if n == 5:
            return _size_regime("T1", n, "(2)", 7, (univ, bal))
        return _size_regime("T1", n, "(1)", near_complete, (univ,))
    if theorem_id == "T2":
        if n % 2 == 0:
            raise RegimeError("T2 is stated for odd n")
        return _spectral_regime("T2", n, "", univ)
    if theorem_id == "T3":
        if n % 2:
            raise RegimeError("T3 is stated for even n")
        if n <= 6:
            return _size_regime("T3", n, "(2)", (3 * n * n - 2 * n) // 8, (bal,))
        if n == 8:
            return _size_regime("T3", n, "(3)", 22, (bal, univ))
        return _size_regime("T3", n, "(1)", near_complete, (univ,))
    if theorem_id == "T4":
        if n % 2:
            raise RegimeError("T4 is stated for even n")
        if n <= 6:
            return _spectral_regime("T4", n, "(2)", bal)
        return _spectral_regime("T4", n, "(1)", univ)
    if theorem_id in ("T5", "T7", "C10"):
        if n in (4, 6):
            return _size_regime(theorem_id, n, "(2)", (3 * n * n - 2 * n) // 8, (bal,))
        if n == 5:
            return _size_regime(theorem_id, n, "(3)", 7, (bal, univ))
        if n == 8:
            return _size_regime(theorem_id, n, "(4)", 22, (bal, univ))
        return _size_regime(theorem_id, n, "(1)", near_complete, (univ,))
    if theorem_id in ("T6", "T8", "C11"):
        if n in (4, 6):
            return _spectral_regime(theorem_id, n, "(2)", bal)
        return _spectral_regime(theorem_id, n, "(1)", univ)
    raise RegimeError(f"unknown theorem id {theorem_id!r}")


def _check_parameters(theorem_id: str, n: int, k: int, d: int | None) -> None:
    odd_k = theorem_id in ("T1", "T2", "T3", "T4", "T5", "T6")
    if odd_k and (k < 3 or k % 2 == 0):
        raise RegimeError(f"{theorem_id} needs odd k >= 3")
    if not odd_k and (k < 2 or k % 2):
        raise RegimeError(f"{theorem_id} needs even k >= 2")
    if theorem_id in ("T5", "T6"):
        if d is None:
            raise RegimeError(f"{theorem_id} needs d")
        if not 1 <= d < k:
            raise RegimeError("d must satisfy 1 <= d < k")
        if (n - d) % 2:
            raise RegimeError("d must have the parity of n")
    elif d is not None:
        raise RegimeError(f"{theorem_id} takes no d")


def valid_d_values(n: int, k: int) -> list[int]:
    return [d for d in range(1, k) if (n - d) % 2 == 0]


# --- reports ----------------------------------------------------------------


@dataclass
class VerificationReport:
    theorem_id: str
    n: int
    k: int | None
    d: int | None
    threshold: float | None
    domain_size: int
    exceptions_found: list[str]
    expected_exceptions: list[str]
    passed: bool
    runtime_s: float
    tool_version: str = __version__
    variant: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls(**json.loads(text))

    def reproducible_part(self) -> dict:
        """Everything except the wall-clock runtime."""
        out = asdict(self)
        out.pop("runtime_s")
        return out


def _code(g: Graph) -> str:
    return canonical_code(g).decode("ascii")


def _finish(theorem_id, n, k, d, threshold, domain_size, found, expected, start,
            variant=None) -> VerificationReport:
    found = sorted(set(found))
    expected = sorted(set(expected))
    return VerificationReport(
        theorem_id, n, k, d, threshold, domain_size, found, expected,
        passed=domain_size > 0 and found == expected,
        runtime_s=round(time.perf_counter() - start, 6), variant=variant,
    )


# --- per-graph checks (module level so worker processes can import them) ----


def _property_holds(theorem_id: str, g: Graph, k: int, d: int | None) -> bool:
    if theorem_id in ("T1", "T2"):
        return classify_gfc(g, k).holds
    if theorem_id in ("T3", "T4"):
        return classify_gbc(g, k).holds
    if theorem_id in ("T5", "T6"):
        return classify_kd(g, k, d).holds
    return classify_parity(g, k).holds


def deletion_factor_ok(g: Graph, variant: str) -> bool:
    """Whether ``G - v`` has the requested factor for every vertex v.

    Positive answers come with a validated witness: a {K2, cycle}-factor, a
    {K2, odd cycle}-factor, or a half-integral fractional perfect matching.
    """
    for v in range(g.n):
        h = delete_vertex(g, v)
        if variant == "cycle":
            ok = cycle_factor_search(h) is not None
        elif variant == "odd-cycle":
            ok = cycle_factor_search(h, odd_only=True) is not None
        elif variant == "fractional":
            frac = fractional_matching(h)
            frac.validate(h)
            ok = frac.total_doubled == h.n
        else:
            raise ValueError(f"unknown factor variant {variant!r}")
        if not ok:
            return False
    return True


def _job(args) -> bool:
    kind, g, p1, p2, p3 = args
    if kind == "property":
        return _property_holds(p1, g, p2, p3)
    if kind == "deletion":
        return deletion_factor_ok(g, p1)
    return verify_theorem9_equivalence(g, p1)


def _map(jobs: Iterable, workers: int) -> Iterable[bool]:
    # order-preserving, so reports do not depend on the worker count
    if workers <= 1:
        return map(_job, jobs)
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        return list(pool.map(_job, jobs, chunksize=256))
    finally:
        pool.shutdown()


# --- domains ----------------------------------------------------------------


def _domain(reg: Regime, dedup: bool, stats: EnumerationStats) -> tuple[Iterable[Graph], float]:
    n = reg.n
    if reg.measure == "size":
        if n > MAX_SIZE_ORDER:
            raise EnumerationBudgetExceeded(f"size checks are limited to n <= {MAX_SIZE_ORDER}")
        task = EnumerationTask(n, "dense-by-complement",
                               max_complement_edges=comb(n, 2) - reg.min_edges, dedup=dedup)
        return enumerate_graphs(task, stats), float(reg.min_edges)
    if n > MAX_SPECTRAL_ORDER:
        raise EnumerationBudgetExceeded(f"spectral checks are limited to n <= {MAX_SPECTRAL_ORDER}")
    s, a, b = _join_params(reg.threshold_family)
    root = quotient_root(s, a, b)
    task = EnumerationTask(n, "spectral-filtered", rho_threshold=root, dedup=dedup)
    return enumerate_graphs(task, stats), float(root)


def _join_params(spec: FamilySpec) -> tuple[int, int, int]:
    if spec.kind == "join":
        return spec.params
    if spec.kind == "split":
        return spec.params[0], 0, spec.params[1]
    raise ValueError(f"no quotient form for {spec}")


def _run(theorem_id: str, n: int, k: int | None, d: int | None, job: Callable[[Graph], tuple],
         dedup: bool, workers: int, verdicts: dict | None, variant: str | None = None
         ) -> VerificationReport:
    start = time.perf_counter()
    reg = regime(theorem_id, n)
    stats = EnumerationStats()
    graphs, threshold = _domain(reg, dedup, stats)
    graphs = list(graphs)
    results = _map((job(g) for g in graphs), workers)
    found = []
    for g, ok in zip(graphs, results):
        if verdicts is not None or not ok:
            code = _code(g)
            if verdicts is not None:
                verdicts[code] = ok
            if not ok:
                found.append(code)
    expected = [_code(build(spec)) for spec in reg.exceptions]
    return _finish(theorem_id, n, k, d, threshold, len(graphs), found, expected, start, variant)


def verify_size_theorem(theorem_id: str, n: int, k: int, d: int | None = None, *,
                        dedup: bool = True, workers: int = 1,
                        verdicts: dict | None = None) -> VerificationReport:
    """Check a size theorem at order ``n`` over every graph meeting its edge bound.

    With ``dedup`` one graph per isomorphism class is checked, otherwise
    every labelled graph. ``verdicts``, when given, collects the verdict of
    every checked graph keyed by canonical code.
    """
    if theorem_id not in SIZE_THEOREMS:
        raise RegimeError(f"{theorem_id} is not a size theorem")
    _check_parameters(theorem_id, n, k, d)
    return _run(theorem_id, n, k, d, lambda g: ("property", g, theorem_id, k, d),
                dedup, workers, verdicts)


def verify_spectral_theorem(theorem_id: str, n: int, k: int, d: int | None = None, *,
                            dedup: bool = True, workers: int = 1,
                            verdicts: dict | None = None) -> VerificationReport:
    """Check a spectral theorem at order ``n`` over every graph with certified radius at least the threshold."""
    if theorem_id not in SPECTRAL_THEOREMS:
        raise RegimeError(f"{theorem_id} is not a spectral theorem")
    _check_parameters(theorem_id, n, k, d)
    return _run(theorem_id, n, k, d, lambda g: ("property", g, theorem_id, k, d),
                dedup, workers, verdicts)


def verify_corollary_factor_deletion(corollary_id: str, n: int, variant: str = "cycle", *,
                                     dedup: bool = True, workers: int = 1,
                                     verdicts: dict | None = None) -> VerificationReport:
    """Per-vertex deletion factors over the size (C10) or spectral (C11) domain.

    ``variant`` picks the factor: ``"cycle"`` ({K2, cycle}), ``"odd-cycle"``
    ({K2, odd cycle}) or ``"fractional"`` (fractional perfect matching).
    """
    if corollary_id not in COROLLARIES:
        raise RegimeError(f"{corollary_id} is not a corollary id")
    if variant not in FACTOR_VARIANTS:
        raise RegimeError(f"variant must be one of {FACTOR_VARIANTS}")
    return _run(corollary_id, n, None, None, lambda g: ("deletion", g, variant, None, None),
                dedup, workers, verdicts, variant)


def verify_theorem9(n_max: int, k_even: int, *, n_min: int = 1, workers: int = 1,
                    progress: Callable[[int, int], None] | None = None) -> VerificationReport:
    """Four-factor agreement on every labelled connected graph of order ``n_min..n_max``."""
    if k_even < 2 or k_even % 2:
        raise RegimeError("k_even must be an even integer >= 2")
    start = time.perf_counter()
    found, size = [], 0
    for n in range(n_min, n_max + 1):
        graphs = list(labeled_connected_graphs(n))
        results = _map((("theorem9", g, k_even, None, None) for g in graphs), workers)
        for g, ok in zip(graphs, results):
            if not ok:
                found.append(_code(g))
        size += len(graphs)
        if progress is not None:
            progress(n, len(graphs))
    return _finish("T9", n_max, k_even, None, None, size, found, [], start)


def verify(theorem_id: str, n: int, k: int | None = None, d: int | None = None, **kwargs
           ) -> VerificationReport:
    """Dispatch on ``theorem_id``; ``k`` is ignored for the corollaries."""
    if theorem_id in SIZE_THEOREMS:
        return verify_size_theorem(theorem_id, n, k, d, **kwargs)
    if theorem_id in SPECTRAL_THEOREMS:
        return verify_spectral_theorem(theorem_id, n, k, d, **kwargs)
    if theorem_id in COROLLARIES:
        return verify_corollary_factor_deletion(theorem_id, n, **kwargs)
    if theorem_id == "T9":
        return verify_theorem9(n, k, workers=kwargs.get("workers", 1))
    raise RegimeError(f"unknown theorem id {theorem_id!r}")


@dataclass
class TightnessCheck:
    family: str
    meets_hypothesis: bool
    fails_property: bool
    notes: list[str] = field(default_factory=list)


def tightness(theorem_id: str, n: int, k: int, d: int | None = None) -> list[TightnessCheck]:
    """Each stated exception meets the hypothesis and fails the conclusion."""
    reg = regime(theorem_id, n)
    _check_parameters(theorem_id, n, k, d)
    out = []
    for spec in reg.exceptions:
        g = build(spec)
        if reg.measure == "size":
            meets = g.m >= reg.min_edges
        else:
            from .spectral import compare_to_threshold

            meets = compare_to_threshold(g, quotient_root(*_join_params(reg.threshold_family))).at_least
        out.append(TightnessCheck(str(spec), meets, not _property_holds(theorem_id, g, k, d)))
    return out
