"""Betti numbers of Y_f and X = S^1 x Y_f, and primitive Betti numbers p_i^±.

Everything is read off from f* on H^1 of an open fiber: the Wang sequence
gives H^1(Y_f) = <dπ> ⊕ ker(f* - 1) and H^2(Y_f) = coker(f* - 1), Künneth
does the rest, and the primitive numbers add the count ν2 of Jordan blocks
of f* - 1 at 0 of size at least two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ShapeError
from .exactla import JordanCensus, MatrixQ, jordan_census, rank
from .surfaces import SurfaceModel


@dataclass(frozen=True)
class FiberedFourManifold:
    surface: SurfaceModel
    fstar: MatrixQ

    def __post_init__(self):
        n = self.surface.h1_rank
        if self.fstar.shape != (n, n):
            raise ShapeError(f"f* must be {n}x{n} on {self.surface.name}, got {self.fstar.shape}")
        if self.fstar.det() == 0:
            raise ValueError("f* must be invertible")

    @property
    def census(self) -> JordanCensus:
        return jordan_census(self.fstar, 1)


@dataclass(frozen=True)
class EtaClass:
    """Coefficients of [dπ ∧ η] against the chain tops dπ ∧ x_{i,n_i}.

    ``jordan_sizes`` lists chain lengths in census order (size-1 chains first);
    ``size_one_chains`` is the number s of those.
    """

    lambdas: tuple[Fraction, ...]
    jordan_sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.lambdas) != len(self.jordan_sizes):
            raise ValueError(
                f"eta has {len(self.lambdas)} coefficients but ker(f* - 1) has dimension "
                f"{len(self.jordan_sizes)}"
            )
        if list(self.jordan_sizes) != sorted(self.jordan_sizes):
            raise ValueError("chains must be listed with size-1 chains first")

    @classmethod
    def from_census(cls, lambdas: Sequence, census: JordanCensus) -> EtaClass:
        return cls(tuple(Fraction(x) for x in lambdas), census.chain_sizes())

    @property
    def size_one_chains(self) -> int:
        return sum(1 for k in self.jordan_sizes if k == 1)

    def moves_class(self) -> bool:
        """True when some λ_i with i > s is nonzero, i.e. η is not a class in ker(f* - 1)."""
        return any(self.lambdas[self.size_one_chains :])


@dataclass(frozen=True)
class BettiReport:
    b: tuple[int, int, int, int, int]
    bY: tuple[int, int, int, int]
    p_plus: tuple[int, int, int]
    p_minus: tuple[int, int, int]
    nu2: int

    @property
    def chi_p(self) -> int:
        """Primitive Euler characteristic sum(-1)^i p_i^+ - sum(-1)^i p_i^-."""
        alt = lambda p: p[0] - p[1] + p[2]  # noqa: E731
        return alt(self.p_plus) - alt(self.p_minus)


def _ker_coker(fstar: MatrixQ) -> tuple[int, int]:
    if not fstar.is_square:
        raise ShapeError(f"f* must be square, got {fstar.shape}")
    n = fstar.rows
    r = rank(fstar - MatrixQ.identity(n))
    return n - r, n - r


def mapping_torus_betti(fstar: MatrixQ) -> tuple[int, int, int, int]:
    """(b0, b1, b2, b3) of Y_f for an open fiber."""
    ker, coker = _ker_coker(fstar)
    return (1, ker + 1, coker, 0)


def product_betti(fstar: MatrixQ) -> tuple[int, int, int, int, int]:
    """(b0, ..., b4) of S^1 x Y_f."""
    ker, coker = _ker_coker(fstar)
    return (1, 2 + ker, 1 + coker + ker, coker, 0)


def primitive_betti(m: FiberedFourManifold, eta: EtaClass | Sequence | None = None) -> BettiReport:
    """Primitive Betti numbers for [ω] = [dt ∧ dπ], or for ω_η when ``eta`` is given.

    ``eta`` may be an :class:`EtaClass` or a plain sequence of λ coefficients in
    census order.
    """
    census = m.census
    bY = mapping_torus_betti(m.fstar)
    b = product_betti(m.fstar)
    nu2 = census.nu2
    b2 = b[2]
    if eta is not None and not isinstance(eta, EtaClass):
        eta = EtaClass.from_census(eta, census)
    if eta is not None and eta.jordan_sizes != census.chain_sizes():
        raise ValueError(
            f"eta was built for chains {eta.jordan_sizes}, f* has {census.chain_sizes()}"
        )
    if eta is None:
        p2p, p2m = b2 + 1 + nu2, b2 + nu2
    else:
        k = census.geometric_multiplicity
        long_chains = k - eta.size_one_chains
        if eta.moves_class():
            p2p, p2m = (b2 - 1) + 1 + long_chains, b2 + long_chains - 1
        else:
            p2p, p2m = (b2 - 1) + 2 + long_chains, b2 + long_chains
    return BettiReport(b=b, bY=bY, p_plus=(1, b[1], p2p), p_minus=(0, b[3], p2m), nu2=nu2)


def trivial_product_report(surface: SurfaceModel) -> BettiReport:
    """Report for T^2 x Σ, i.e. identity monodromy."""
    return primitive_betti(FiberedFourManifold(surface, MatrixQ.identity(surface.h1_rank)))


def torelli_product_check(m: FiberedFourManifold) -> bool:
    """True iff f* = 1; the report then coincides with that of T^2 x Σ."""
    if not m.fstar.is_identity():
        return False
    assert primitive_betti(m) == trivial_product_report(m.surface)
    return True

