"""
Fractional matchings, cycle factors and perfect k-matchings
===========================================================

For even k these four are equivalent on any graph: a {K2, cycle} factor, a
{K2, odd cycle} factor, a fractional perfect matching, and a perfect
k-matching. Each conversion below is constructive and validated.
"""

from kcritical import graph as gr
from kcritical.matchings import (
    factor_from_fractional,
    factor_predicates,
    fractional_from_k_matching,
    fractional_matching,
    k_matching_from_factor,
    k_matching_number,
)

# A maximum fractional matching from the bipartite double cover; weights are
# stored doubled, so 1 means one half.
g = gr.disjoint_union(gr.cycle(5), gr.complete(2))
frac = fractional_matching(g)
print("C5 + K2 doubled weights:", frac.doubled_weights, "value", frac.value)

# Half-weight edges form cycles; odd ones are kept, even ones alternate into K2s.
factor = factor_from_fractional(g, frac)
print("factor: K2 edges", factor.k2_edges, "cycles", factor.cycles)

# Weight k on each K2 and k/2 around each cycle gives a perfect k-matching.
km = k_matching_from_factor(g, factor, 4)
print("perfect 4-matching:", km.weights, "loads", km.vertex_load)
print("back to fractional:", fractional_from_k_matching(km))

# The star K_{1,3} fails all four at once.
print("\nK1,3:", factor_predicates(gr.star(4), 2))
print("C7 :", factor_predicates(gr.cycle(7), 2))

# Exact k-matching numbers by branch and bound.
for k in (1, 2, 3):
    value, witness = k_matching_number(gr.cycle(5), k)
    print(f"mu_{k}(C5) = {value}")
