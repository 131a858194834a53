"""Dense exact matrices over Q and subspaces in canonical echelon form.

Entries are :class:`fractions.Fraction`; nothing here ever touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from ..errors import DimensionError, ShapeError

Rational = Fraction
Vector = tuple[Fraction, ...]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def _vec(xs: Iterable) -> Vector:
    return tuple(as_rational(x) for x in xs)


@dataclass(frozen=True)
class MatrixQ:
    """An immutable rows x cols grid of rationals.

    >>> MatrixQ([[1, 2], [3, 4]]).det()
    Fraction(-2, 1)
    """

    entries: tuple[Vector, ...]
    cols: int

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        grid = tuple(_vec(r) for r in rows)
        if cols is None:
            if not grid:
                raise ShapeError("cannot infer the column count of an empty matrix")
            cols = len(grid[0])
        if any(len(r) != cols for r in grid):
            raise ShapeError("matrix rows have unequal lengths")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> MatrixQ:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> MatrixQ:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, values: Sequence) -> MatrixQ:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> MatrixQ:
        if not columns:
            if rows is None:
                raise ShapeError("need the row count for a matrix with no columns")
            return cls([[] for _ in range(rows)], 0)
        return cls(zip(*columns), len(columns))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    @property
    def T(self) -> MatrixQ:
        return MatrixQ(self.columns(), self.rows)

    transpose = T

    def __add__(self, other: MatrixQ) -> MatrixQ:
        self._same_shape(other)
        return MatrixQ(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols
        )

    def __sub__(self, other: MatrixQ) -> MatrixQ:
        self._same_shape(other)
        return MatrixQ(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols
        )

    def __neg__(self) -> MatrixQ:
        return MatrixQ([[-a for a in r] for r in self.entries], self.cols)

    def __mul__(self, other):
        if isinstance(other, MatrixQ):
            return self.matmul(other)
        c = as_rational(other)
        return MatrixQ([[c * a for a in r] for r in self.entries], self.cols)

    def __rmul__(self, other):
        return self * other

    __matmul__ = __mul__

    def matmul(self, other: MatrixQ) -> MatrixQ:
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return MatrixQ(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols] for r in self.entries],
            other.cols,
        )

    def apply(self, v: Sequence) -> Vector:
        """Return M v for a column vector v."""
        if len(v) != self.cols:
            raise ShapeError(f"vector of length {len(v)} for a matrix with {self.cols} columns")
        v = _vec(v)
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.entries)

    def __pow__(self, k: int) -> MatrixQ:
        self._require_square()
        if k < 0:
            return self.inverse() ** (-k)
        result, base = MatrixQ.identity(self.rows), self
        while k:
            if k & 1:
                result = result.matmul(base)
            base = base.matmul(base)
            k >>= 1
        return result

    def det(self) -> Fraction:
        self._require_square()
        m = [list(r) for r in self.entries]
        n, sign = self.rows, 1
        out = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                sign = -sign
            out *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                if f:
                    for k in range(c, n):
                        m[r][k] -= f * m[c][k]
        return sign * out

    def inverse(self) -> MatrixQ:
        self._require_square()
        n = self.rows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.entries)]
        reduced, pivots = _rref(aug, limit=n)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return MatrixQ([r[n:] for r in reduced], n)

    def is_identity(self) -> bool:
        return self.is_square and self == MatrixQ.identity(self.rows)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for r in self.entries for a in r)

    def _require_square(self) -> None:
        if not self.is_square:
            raise ShapeError(f"expected a square matrix, got {self.shape}")

    def _same_shape(self, other: MatrixQ) -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __str__(self) -> str:
        cells = [[str(a) for a in r] for r in self.entries]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _rref(rows: list[list[Fraction]], limit: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; pivots are searched in the first ``limit`` columns only."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0]) if limit is None else limit
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(M: MatrixQ) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer-scaled rows."""
    m = []
    for r in M.entries:
        scale = lcm(*(a.denominator for a in r)) if r else 1
        m.append([int(a * scale) for a in r])
    nrows, ncols = M.rows, M.cols
    rk, prev = 0, 1
    for c in range(ncols):
        p = next((i for i in range(rk, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rk], m[p] = m[p], m[rk]
        piv = m[rk][c]
        for i in range(rk + 1, nrows):
            for k in range(c + 1, ncols):
                m[i][k] = (piv * m[i][k] - m[i][c] * m[rk][k]) // prev
            m[i][c] = 0
        prev = piv
        rk += 1
        if rk == nrows:
            break
    return rk


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by its reduced row-echelon basis.

    Because the basis is canonical, ``==`` is subspace equality.

    >>> Subspace.span([(1, 1), (2, 2)], 2) == Subspace.span([(3, 3)], 2)
    True
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        rows = [list(_vec(v)) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionError(f"vector of length {len(r)} in Q^{ambient_dim}")
        reduced, pivots = _rref(rows)
        return cls(ambient_dim, tuple(tuple(reduced[i]) for i in range(len(pivots))))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls.span(MatrixQ.identity(ambient_dim).entries, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return Subspace.span(self.basis + (_vec(v),), self.ambient_dim).dim == self.dim

    __contains__ = contains

    def __le__(self, other: Subspace) -> bool:
        _check_ambient(self, other)
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        _check_ambient(self, other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def as_matrix(self) -> MatrixQ:
        """Basis vectors as the rows of a matrix."""
        return MatrixQ(self.basis, self.ambient_dim)


def _check_ambient(U: Subspace, V: Subspace) -> None:
    if U.ambient_dim != V.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {U.ambient_dim} vs {V.ambient_dim}")


def _nullspace_vectors(M: MatrixQ) -> list[Vector]:
    reduced, pivots = _rref([list(r) for r in M.entries])
    free = [c for c in range(M.cols) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        out.append(tuple(v))
    return out


def kernel_basis(M: MatrixQ) -> Subspace:
    """{v : M v = 0} as a canonical subspace of Q^cols."""
    return Subspace.span(_nullspace_vectors(M), M.cols)


def image_basis(M: MatrixQ) -> Subspace:
    """Column span of M as a canonical subspace of Q^rows."""
    return Subspace.span(M.columns(), M.rows)


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    _check_ambient(U, V)
    n = U.ambient_dim
    if not U.basis or not V.basis:
        return Subspace.zero(n)
    # x.U = y.V  <=>  [U^T | -V^T] (x, y) = 0
    cols = list(U.basis) + [tuple(-a for a in b) for b in V.basis]
    system = MatrixQ.from_columns(cols, n)
    vecs = []
    for sol in _nullspace_vectors(system):
        x = sol[: U.dim]
        vecs.append(tuple(sum((xi * b[k] for xi, b in zip(x, U.basis)), Fraction(0)) for k in range(n)))
    return Subspace.span(vecs, n)
