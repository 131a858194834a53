"""Exact rational linear algebra, subspaces, Jordan census and ε-numbers."""

from fractions import Fraction as Rational

from .eps import EPS, EpsNumber
from .jordan import JordanCensus, jordan_census
from .matrix import MatrixQ, Subspace, image_basis, kernel_basis, rank, subspace_intersect

__all__ = [
    "EPS",
    "EpsNumber",
    "JordanCensus",
    "MatrixQ",
    "Rational",
    "Subspace",
    "image_basis",
    "jordan_census",
    "kernel_basis",
    "rank",
    "subspace_intersect",
]
