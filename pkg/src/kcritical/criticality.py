"""GFC_k / GBC_k / k-d-critical classification.

Three independent routes are provided and cross-checked in the tests:

* structural: scan nonempty subsets for a violated inequality;
* definitional: search for the required k-matchings vertex by vertex;
* barrier uniqueness: compute all k-barriers and ask whether only the empty
  set attains the deficiency.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import barriers
from .graph import Graph, bits, delete_vertex
from .matchings import has_perfect_k_matching, kd_critical_witness


@dataclass(frozen=True)
class CriticalityVerdict:
    property: str  # "GFC", "GBC" or "KD"
    k: int
    holds: bool
    witness: int | None = None  # violating subset (bitset) or failing vertex
    method: str = "structural"
    d: int | None = None
    witness_kind: str | None = None  # "subset", "vertex" or "parity"
    note: str | None = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    def to_dict(self) -> dict:
        return {
            "property": self.property, "k": self.k, "d": self.d, "holds": self.holds,
            "witness": (list(bits(self.witness)) if self.witness_kind == "subset"
                        else self.witness),
            "witness_kind": self.witness_kind,
            "method": self.method, "note": self.note,
        }


def _parity_failure(prop: str, k: int, n: int, d: int | None = None) -> CriticalityVerdict:
    return CriticalityVerdict(prop, k, False, witness=n, method="structural", d=d,
                              witness_kind="parity", note=f"order {n} has the wrong parity")


def barrier_uniqueness_check(g: Graph, k: int) -> CriticalityVerdict:
    """GFC_k (odd n) or GBC_k (even n) straight from the barrier definition."""
    report = barriers.deficiency_k(g, k)
    prop = "GFC" if g.n % 2 else "GBC"
    if report.empty_is_unique:
        return CriticalityVerdict(prop, k, True, method="barrier-uniqueness")
    # beyond ALL_BARRIERS_CAP only one barrier is listed and it may be the empty set
    witness = next((s for s in report.barriers if s), report.barriers[0])
    return CriticalityVerdict(prop, k, False, witness=witness, method="barrier-uniqueness",
                              witness_kind="subset")


def _small_order(g: Graph, prop: str, k: int) -> CriticalityVerdict | None:
    if g.n >= 3:
        return None
    verdict = barrier_uniqueness_check(g, k)
    if verdict.property != prop:
        return _parity_failure(prop, k, g.n)
    return CriticalityVerdict(prop, k, verdict.holds, verdict.witness, "barrier-uniqueness",
                              witness_kind=verdict.witness_kind,
                              note="order below 3: decided from the barrier definition")


def _classify(g: Graph, k: int, prop: str) -> CriticalityVerdict:
    wanted_parity = 1 if prop == "GFC" else 0
    if k < 2:
        raise ValueError("classification needs k >= 2")
    early = _small_order(g, prop, k)
    if early is not None:
        return early
    if g.n % 2 != wanted_parity:
        return _parity_failure(prop, k, g.n)
    if k % 2 == 0:
        s = barriers.violates_even_k_inequality(g)
    elif prop == "GFC":
        s = barriers.violates_gfc_inequality(g, k)
    else:
        s = barriers.violates_gbc_inequality(g, k)
    if s is None:
        return CriticalityVerdict(prop, k, True)
    return CriticalityVerdict(prop, k, False, witness=s, witness_kind="subset")


def classify_gfc(g: Graph, k: int) -> CriticalityVerdict:
    return _classify(g, k, "GFC")


def classify_gbc(g: Graph, k: int) -> CriticalityVerdict:
    return _classify(g, k, "GBC")


def classify_parity(g: Graph, k: int) -> CriticalityVerdict:
    """GFC_k for odd order, GBC_k for even order."""
    return classify_gfc(g, k) if g.n % 2 else classify_gbc(g, k)


def classify_kd(g: Graph, k: int, d: int) -> CriticalityVerdict:
    if k < 3 or k % 2 == 0:
        raise ValueError("k-d-criticality is characterised for odd k >= 3")
    if not 1 <= d <= k:
        raise ValueError("d must satisfy 1 <= d <= k")
    if (g.n - d) % 2:
        raise ValueError(f"parity mismatch: n={g.n} and d={d} differ mod 2")
    if g.n < 3:
        holds = kd_by_definition(g, k, d)
        return CriticalityVerdict("KD", k, holds.holds, holds.witness, "definitional", d=d,
                                  witness_kind=holds.witness_kind,
                                  note="order below 3: decided from the definition")
    s = barriers.violates_kd_inequality(g, k, d)
    if s is None:
        return CriticalityVerdict("KD", k, True, d=d)
    return CriticalityVerdict("KD", k, False, witness=s, d=d, witness_kind="subset")


def kd_by_definition(g: Graph, k: int, d: int) -> CriticalityVerdict:
    """k-d-critical iff every vertex admits a witness k-matching."""
    for v in range(g.n):
        if kd_critical_witness(g, v, k, d) is None:
            return CriticalityVerdict("KD", k, False, witness=v, method="definitional", d=d,
                                      witness_kind="vertex")
    return CriticalityVerdict("KD", k, True, method="definitional", d=d)


def gfc_by_definition(g: Graph, k: int) -> CriticalityVerdict:
    """GFC_k for odd k via the load-(k-1) characterisation of odd-order graphs."""
    if k < 3 or k % 2 == 0:
        raise ValueError("the definitional GFC test needs odd k >= 3")
    if g.n % 2 == 0:
        return _parity_failure("GFC", k, g.n)
    verdict = kd_by_definition(g, k, 1)
    return CriticalityVerdict("GFC", k, verdict.holds, verdict.witness, "definitional",
                              witness_kind=verdict.witness_kind)


def even_k_by_deletion(g: Graph, k: int, definitional: bool = False) -> CriticalityVerdict:
    """Even k: GFC/GBC iff ``G - v`` has a perfect k-matching for every v.

    With ``definitional`` the perfect k-matching of each ``G - v`` is searched
    for directly instead of using the structural test.
    """
    if k < 2 or k % 2:
        raise ValueError("k must be an even integer >= 2")
    prop = "GFC" if g.n % 2 else "GBC"
    if definitional:
        from .matchings import perfect_k_matching_search

        def has_pkm(h: Graph) -> bool:
            return perfect_k_matching_search(h, k) is not None
    else:
        def has_pkm(h: Graph) -> bool:
            return has_perfect_k_matching(h, k)

    for v in range(g.n):
        if not has_pkm(delete_vertex(g, v)):
            return CriticalityVerdict(prop, k, False, witness=v, method="definitional",
                                      witness_kind="vertex")
    return CriticalityVerdict(prop, k, True, method="definitional")
