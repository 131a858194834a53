"""Exact linear algebra: kernels, images and a Jordan census.

Everything is rational, so the census below is a count, never an estimate.
"""

from __future__ import annotations

from fibersym.exactla import EPS, MatrixQ, image_basis, jordan_census, kernel_basis

N = MatrixQ(
    [
        [-1, -1, -1, -1, 1],
        [0, 0, 0, 0, -1],
        [1, 1, 1, 1, 1],
        [0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0],
    ]
)
print("N =")
print(N)

K, Im = kernel_basis(N), image_basis(N)
print(f"\nker N has dimension {K.dim}, basis in reduced echelon form:")
for v in K.basis:
    print("  ", tuple(map(str, v)))
print(f"Im N has dimension {Im.dim}; Im N inside ker N: {Im <= K}")

# The filtration ker N ∩ Im N^k shrinks by one step per block length.
census = jordan_census(N)
print("\nfiltration dims d_k:", census.filtration_dims)
print("blocks by size:", dict(census.blocks_of_size), " nu2 =", census.nu2)

# Infinitesimals are ordinary values with a lexicographic order.
x, y = 1 - 3 * EPS, 1 - EPS
print(f"\n{x} < {y} < 1: {x < y < 1};  frac(-e) = {(-EPS).frac()}")
