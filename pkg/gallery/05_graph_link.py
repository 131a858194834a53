"""Fibrations of the graph link K^(4) and the degree of Δ'.

The offset p_2^+ - b_2 = 1 + deg Δ' depends only on the power of 3
dividing m1 or m2.
"""

from __future__ import annotations

from fibersym.graphlink import GraphLinkSpec, delta_prime, gcd_data, is_fibration, p2_offsets

for m1, m2 in [(1, 1), (3, 1), (9, 1), (27, 1), (5, 81)]:
    spec = GraphLinkSpec(2, m1, m2)
    g = gcd_data(spec)
    prod = delta_prime(spec)
    plus, minus, case = p2_offsets(spec)
    print(f"(m1, m2) = ({m1}, {m2}): dE = {g.dE}, dV = {g.dV}")
    print(f"   Δ' = {prod}  (cyclotomic factors {prod.cyclotomic_multiplicities()})")
    print(f"   p2+ - b2 = {plus}, p2- - b2 = {minus}, case k = {case}")

print("\n(-27, 1) is a fibration:", is_fibration(2, -27, 1))
