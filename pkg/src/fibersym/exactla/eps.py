"""Polynomials in a positive infinitesimal ε with rational coefficients.

``EpsNumber((c0, c1, c2))`` stands for c0 + c1 ε + c2 ε². Comparison is
lexicographic on the coefficient sequence, which is exactly the order of
Q[ε] when ε is smaller than every positive rational. Nothing is ever
evaluated numerically.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from itertools import zip_longest
from math import floor
from typing import Iterable

from .matrix import as_rational


@total_ordering
class EpsNumber:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def coerce(cls, x) -> EpsNumber:
        return x if isinstance(x, EpsNumber) else cls((x,))

    @property
    def rational_part(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def infinitesimal_part(self) -> EpsNumber:
        return EpsNumber((0,) + self.coeffs[1:])

    @property
    def degree(self) -> int:
        """Highest power of ε present; -1 for zero."""
        return len(self.coeffs) - 1

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def sign(self) -> int:
        for c in self.coeffs:
            if c:
                return 1 if c > 0 else -1
        return 0

    def floor(self) -> int:
        """Largest integer not exceeding this number."""
        c0 = self.rational_part
        f = floor(c0)
        if c0 == f and self.infinitesimal_part.sign() < 0:
            f -= 1
        return f

    def frac(self) -> EpsNumber:
        """Representative in [0, 1)."""
        return self - self.floor()

    def __add__(self, other):
        other = EpsNumber.coerce(other)
        return EpsNumber(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0)))

    __radd__ = __add__

    def __neg__(self) -> EpsNumber:
        return EpsNumber(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-EpsNumber.coerce(other))

    def __rsub__(self, other):
        return EpsNumber.coerce(other) - self

    def __mul__(self, other):
        other = EpsNumber.coerce(other)
        if not self.coeffs or not other.coeffs:
            return EpsNumber()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return EpsNumber(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, EpsNumber):
            if not other.is_rational():
                raise ValueError("division by a non-rational ε-number is not supported")
            other = other.rational_part
        d = as_rational(other)
        return EpsNumber(c / d for c in self.coeffs)

    def __eq__(self, other) -> bool:
        try:
            other = EpsNumber.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __lt__(self, other) -> bool:
        return (self - EpsNumber.coerce(other)).sign() < 0

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.rational_part)
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"EpsNumber({str(self)!r})"

    def __str__(self) -> str:
        """Human form with ε written as ``e``: ``1-3e``, ``1/2+e``, ``3/2e``."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                unit = "e" if k == 1 else f"e^{k}"
                body = unit if mag == 1 else f"{mag}{unit}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts) or "0"

    @classmethod
    def parse(cls, text: str) -> EpsNumber:
        """Inverse of ``str``: accepts forms such as ``1-3e``, ``1/2+e``, ``-e^2``."""
        import re

        s = text.replace(" ", "").replace("ε", "e")
        if s in ("", "0"):
            return cls()
        coeffs: dict[int, Fraction] = {}
        for sign, mag, unit, power in re.findall(r"([+-]?)(\d+(?:/\d+)?)?(e)?(?:\^(\d+))?", s)[:-1]:
            if not mag and not unit:
                raise ValueError(f"cannot parse ε-number {text!r}")
            k = (int(power) if power else 1) if unit else 0
            c = Fraction(mag) if mag else Fraction(1)
            coeffs[k] = coeffs.get(k, Fraction(0)) + (-c if sign == "-" else c)
        top = max(coeffs, default=-1)
        return cls(coeffs.get(k, 0) for k in range(top + 1))


EPS = EpsNumber((0, 1))
