"""
Spectral radius: power iteration, quotient matrices and exact comparison
========================================================================

Power iteration on A + I gives a certified bracket for the Perron root.
For K_s v (K_a + bK_1) the three-cell quotient matrix gives the radius as
the largest root of a cubic, held exactly with Sturm sequences.
"""

import numpy as np

from kcritical import graph as gr
from kcritical.extremal import FamilySpec, build
from kcritical.spectral import (
    compare_to_threshold,
    quotient_radius_join_family,
    quotient_root,
    spectral_radius,
)

# A bipartite example: power iteration on A alone would oscillate here.
c6 = gr.cycle(6)
r = spectral_radius(c6)
print(f"C6: rho = {r.rho:.12f}, bracket width {r.error_bound:.1e}, {r.iterations} steps")

# Quotient radius against the full graph and against numpy.
for s, a, b in [(1, 6, 1), (4, 0, 4), (2, 2, 2), (3, 2, 3)]:
    g = build(FamilySpec.join_clique_plus_isolated(s, a, b))
    q = quotient_radius_join_family(s, a, b)
    p = spectral_radius(g).rho
    ev = np.linalg.eigvalsh(g.adjacency_matrix().astype(float))[-1]
    print(f"K{s} v (K{a} + {b}K1): quotient {q:.6f}  power {p:.6f}  eigvalsh {ev:.6f}")

# Radii of G_s = K_s v (K_{n-2s} + sK_1) and of the balanced split,
# next to two-decimal reference values; deviations beyond 0.005 are flagged.
reference = {(2, 0, 2): 2.56, (3, 0, 3): 4.16, (4, 0, 4): 5.77,
             (1, 2, 1): 2.17, (1, 4, 1): 4.05, (1, 6, 1): 6.02,
             (2, 2, 2): 3.62, (2, 4, 2): 5.27, (3, 2, 3): 5.18}
print()
for params, value in reference.items():
    got = quotient_radius_join_family(*params)
    flag = "" if abs(got - value) <= 0.005 else "   <-- differs by %.4f" % (got - value)
    print(f"K{params[0]} v (K{params[1]} + {params[2]}K1): {got:.4f}  (reference {value}){flag}")

# The exception graph sits exactly on its own threshold. Float brackets
# cannot settle a tie, so the comparison escalates to exact arithmetic.
threshold = quotient_root(1, 6, 1)
decision = compare_to_threshold(build(FamilySpec.join_clique_plus_isolated(1, 6, 1)), threshold)
print("\nK1 v (K6 + K1) vs its own radius: sign", decision.sign, "escalated", decision.escalated)
