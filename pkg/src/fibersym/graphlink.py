"""Fibrations (m1, m2) of the graph-link complement S^3 - K^(2n).

The restricted characteristic polynomial is a signed product of factors
t^e - 1. Its roots count the size-2 Jordan blocks of the monodromy, so its
degree shifts p_2^± relative to b_2.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from types import MappingProxyType
from typing import Mapping

from .errors import InconsistentProductError, InvalidFibrationError


def failing_index(n: int, m1: int, m2: int) -> int | None:
    """First i in 1..2n with 3^i m1 + 3^(2n-i+1) m2 = 0, or None."""
    if n < 1:
        raise ValueError("n must be at least 1")
    for i in range(1, 2 * n + 1):
        if 3**i * m1 + 3 ** (2 * n - i + 1) * m2 == 0:
            return i
    return None


def is_fibration(n: int, m1: int, m2: int) -> bool:
    if (m1, m2) == (0, 0):
        return False
    return failing_index(n, m1, m2) is None


@dataclass(frozen=True)
class GraphLinkSpec:
    n: int
    m1: int
    m2: int

    def __post_init__(self):
        if (self.m1, self.m2) == (0, 0):
            raise ValueError("(m1, m2) = (0, 0) is not a cohomology class of a fibration")
        i = failing_index(self.n, self.m1, self.m2)
        if i is not None:
            raise InvalidFibrationError(self.n, self.m1, self.m2, i)

    @property
    def d(self) -> int:
        return gcd(self.m1, self.m2)


@dataclass(frozen=True)
class GcdData:
    dE: tuple[int, ...]
    dV: tuple[int, ...]


def gcd_data(spec: GraphLinkSpec) -> GcdData:
    n2 = 2 * spec.n
    dE = tuple(gcd(3**i * spec.m1, 3 ** (n2 - i) * spec.m2) for i in range(1, n2))
    dV = [gcd(spec.m1, dE[0])]
    dV += [gcd(dE[i - 2], dE[i - 1]) for i in range(2, n2)]
    dV.append(gcd(spec.m2, dE[-1]))
    return GcdData(dE, tuple(dV))


# ---- integer polynomials as coefficient tuples, constant term first ----

IntPoly = tuple[int, ...]


def _trim(c: list[int]) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_divmod(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division by a monic polynomial q."""
    if not q or q[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    dq = len(q) - 1
    quot = [0] * max(len(p) - dq, 0)
    for k in range(len(p) - 1, dq - 1, -1):
        c = rem[k]
        if c:
            quot[k - dq] = c
            for j, b in enumerate(q):
                rem[k - dq + j] -= c * b
    return _trim(quot), _trim(rem[:dq])


def t_pow_minus_one(e: int) -> IntPoly:
    return tuple([-1] + [0] * (e - 1) + [1])


@lru_cache(maxsize=None)
def cyclotomic(j: int) -> IntPoly:
    """Φ_j = (t^j - 1) / prod_{d | j, d < j} Φ_d."""
    p = t_pow_minus_one(j)
    for d in range(1, j):
        if j % d == 0:
            p, r = poly_divmod(p, cyclotomic(d))
            assert not r
    return p


def _divisors(e: int) -> list[int]:
    return [j for j in range(1, e + 1) if e % j == 0]


def format_poly(p: IntPoly, var: str = "t") -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        mag = str(abs(c)) if abs(c) != 1 or k == 0 else ""
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{mag}{mono}")
    return "".join(parts)


@dataclass(frozen=True)
class CycloProduct:
    """prod_e (t^e - 1)^{m_e} for a signed multiset {e: m_e}."""

    factors: Mapping[int, int]

    def __init__(self, factors: Mapping[int, int]):
        clean = {e: m for e, m in sorted(factors.items()) if m}
        object.__setattr__(self, "factors", MappingProxyType(clean))

    def __hash__(self) -> int:
        return hash(tuple(self.factors.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloProduct) and dict(self.factors) == dict(other.factors)

    def cyclotomic_multiplicities(self) -> dict[int, int]:
        """Multiplicity of Φ_j: sum of m_e over e divisible by j."""
        mult: Counter = Counter()
        for e, m in self.factors.items():
            for j in _divisors(e):
                mult[j] += m
        return {j: m for j, m in sorted(mult.items()) if m}

    def is_polynomial(self) -> bool:
        return all(m >= 0 for m in self.cyclotomic_multiplicities().values())

    @property
    def degree(self) -> int:
        return sum(e * m for e, m in self.factors.items())

    def expansion(self) -> IntPoly:
        """Exact coefficients, by multiplying numerators and dividing out denominators."""
        num: IntPoly = (1,)
        for e, m in self.factors.items():
            for _ in range(max(m, 0)):
                num = poly_mul(num, t_pow_minus_one(e))
        for e, m in self.factors.items():
            for _ in range(max(-m, 0)):
                num, rem = poly_divmod(num, t_pow_minus_one(e))
                if rem:
                    raise InconsistentProductError(f"t^{e} - 1 does not divide the numerator")
        return num

    def __str__(self) -> str:
        return format_poly(self.expansion())


def delta_prime(spec: GraphLinkSpec) -> CycloProduct:
    """(t^d - 1) prod_i (t^{dE_i} - 1) / prod_i (t^{dV_i} - 1)."""
    g = gcd_data(spec)
    factors: Counter = Counter({spec.d: 1})
    for e in g.dE:
        factors[e] += 1
    for e in g.dV:
        factors[e] -= 1
    prod = CycloProduct(factors)
    if not prod.is_polynomial():
        raise InconsistentProductError(f"Δ' for {spec} has a negative cyclotomic multiplicity")
    return prod


def jordan_size2_data(spec: GraphLinkSpec) -> tuple[int, dict[int, int]]:
    """deg Δ' and {j: multiplicity of Φ_j in Δ'}."""
    prod = delta_prime(spec)
    return prod.degree, prod.cyclotomic_multiplicities()


def three_adic_valuation(m: int) -> int:
    if m == 0:
        raise ValueError("0 has no finite 3-adic valuation")
    k, m = 0, abs(m)
    while m % 3 == 0:
        m //= 3
        k += 1
    return k


def theorem_case(spec: GraphLinkSpec) -> str | None:
    """Case label '0', '1', '2' or '>=3' for coprime (m1, m2) on K^(4), else None."""
    if spec.n != 2 or spec.d != 1 or 0 in (spec.m1, spec.m2):
        return None
    k = max(three_adic_valuation(spec.m1), three_adic_valuation(spec.m2))
    return ">=3" if k >= 3 else str(k)


def p2_offsets(spec: GraphLinkSpec) -> tuple[int, int, str | None]:
    """(p2+ - b2, p2- - b2, case label)."""
    deg = delta_prime(spec).degree
    return 1 + deg, deg, theorem_case(spec)


