"""Jordan-block census at a single rational eigenvalue.

The census uses the filtration ker(N) ∩ Im(N^k) with N = M - λI: its k-th
term has one vector per Jordan block of size > k, so consecutive differences
count blocks of each exact size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .matrix import MatrixQ, as_rational, image_basis, kernel_basis, subspace_intersect


@dataclass(frozen=True)
class JordanCensus:
    eigenvalue: Fraction
    filtration_dims: tuple[int, ...]
    blocks_of_size: Mapping[int, int]

    @property
    def nu2(self) -> int:
        """Number of blocks of size at least 2."""
        return self.filtration_dims[1] if len(self.filtration_dims) > 1 else 0

    @property
    def geometric_multiplicity(self) -> int:
        return self.filtration_dims[0]

    @property
    def algebraic_multiplicity(self) -> int:
        return sum(k * c for k, c in self.blocks_of_size.items())

    def chain_sizes(self) -> tuple[int, ...]:
        """Block sizes in ascending order, so size-1 chains come first."""
        return tuple(k for k in sorted(self.blocks_of_size) for _ in range(self.blocks_of_size[k]))

    def blocks_at_least(self, k: int) -> int:
        return sum(c for size, c in self.blocks_of_size.items() if size >= k)

    def __hash__(self) -> int:
        return hash((self.eigenvalue, self.filtration_dims))


def jordan_census(M: MatrixQ, eigenvalue=0) -> JordanCensus:
    """Count Jordan blocks of M at ``eigenvalue``.

    >>> jordan_census(MatrixQ([[1, 1], [0, 1]]), 1).blocks_of_size[2]
    1
    """
    M._require_square()
    lam = as_rational(eigenvalue)
    n = M.rows
    N = M - MatrixQ.identity(n) * lam
    kernel = kernel_basis(N)
    dims = [kernel.dim]
    power = N
    while dims[-1] > 0 and len(dims) <= n:
        dims.append(subspace_intersect(kernel, image_basis(power)).dim)
        power = power.matmul(N)
    blocks = {k: dims[k - 1] - dims[k] for k in range(1, len(dims)) if dims[k - 1] > dims[k]}
    return JordanCensus(lam, tuple(dims), MappingProxyType(blocks))
