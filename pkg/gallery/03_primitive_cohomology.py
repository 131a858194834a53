"""Betti numbers and primitive Betti numbers of X = S^1 x Y_f.

The two fibrations below give diffeomorphic four-manifolds with the same
Betti numbers, yet p_2^+ tells their symplectic forms apart.
"""

from __future__ import annotations

from fibersym.exactla import MatrixQ
from fibersym.surfaces import SPHERE4, SPHERICAL_MONODROMY, TORUS4, evaluate_word, parse_word
from fibersym.wang import FiberedFourManifold, primitive_betti

f_minus_one = MatrixQ(
    [
        [-1, -1, -1, -1, 1],
        [0, 0, 0, 0, -1],
        [1, 1, 1, 1, 1],
        [0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0],
    ]
)
xf = FiberedFourManifold(TORUS4, f_minus_one + MatrixQ.identity(5))
g = evaluate_word(parse_word(SPHERICAL_MONODROMY, SPHERE4)).on_h1_dual
xg = FiberedFourManifold(SPHERE4, g)

print("Jordan chain sizes of f* at 1:", xf.census.chain_sizes())
for label, report in [
    ("X_f", primitive_betti(xf)),
    ("X_f, eta moving a long chain", primitive_betti(xf, (0, 1, 0))),
    ("X_f, eta on the short chain", primitive_betti(xf, (1, 0, 0))),
    ("X_g", primitive_betti(xg)),
]:
    print(f"{label:30s} b = {report.b}  p+ = {report.p_plus}  p- = {report.p_minus}  chi_p = {report.chi_p}")
