"""
Barriers and the criticality classifiers
========================================

The k-deficiency of a graph is the largest value of
odd(G-S) + k*i(G-S) - k|S| (odd k) or k*i(G-S) - k|S| (even k) over vertex
subsets S; the subsets reaching it are its k-barriers. A graph is GFC_k
(odd order) or GBC_k (even order) when the empty set is its only barrier.
"""

from kcritical import graph as gr
from kcritical.barriers import deficiency_k
from kcritical.criticality import (
    barrier_uniqueness_check,
    classify_gfc,
    classify_kd,
    gfc_by_definition,
)
from kcritical.extremal import build, parse_family, universal_exception

# The complete graph K_7 is as well connected as it gets.
k7 = gr.complete(7)
print("K7 deficiency, k=3:", deficiency_k(k7, 3).deficiency)
print("K7 GFC_3?", classify_gfc(k7, 3).holds)

# Hang a pendant vertex off K_6 through one hub: K_1 v (K_5 + K_1).
# Deleting the hub isolates the pendant, so {hub} ties the empty set.
g = build(universal_exception(7))
report = deficiency_k(g, 3)
print("\nK1 v (K5 + K1): edges", g.m)
print("  barriers:", [sorted(gr.bits(s)) for s in report.barriers])
verdict = classify_gfc(g, 3)
print("  GFC_3?", verdict.holds, "witness", sorted(gr.bits(verdict.witness)))

# Three routes to the same answer: the subset inequality, barrier
# uniqueness, and the search for a k-matching with load k-1 at each vertex.
for text in ["C5", "K2 v 3*K1", "K1 v (K3 + 1*K1)", "K5"]:
    h = parse_family(text)
    routes = (classify_gfc(h, 3).holds, barrier_uniqueness_check(h, 3).holds,
              gfc_by_definition(h, 3).holds)
    print(f"{text:>18}: structural/barrier/definitional = {routes}")

# k-d-criticality generalises both: d = 1 is GFC_k, d = 2 is GBC_k.
print("\nK4 3-2-critical?", classify_kd(gr.complete(4), 3, 2).holds)
print("K5 3-3-critical?", classify_kd(gr.complete(5), 3, 3).holds)
