from __future__ import annotations

from math import gcd

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from fibersym.errors import InconsistentProductError, InvalidFibrationError
from fibersym.graphlink import (
    CycloProduct,
    GraphLinkSpec,
    cyclotomic,
    delta_prime,
    failing_index,
    format_poly,
    gcd_data,
    is_fibration,
    jordan_size2_data,
    p2_offsets,
    three_adic_valuation,
)

OFFSET_BY_CASE = {"0": 9, "1": 7, "2": 19, ">=3": 1}
t = sympy.symbols("t")


def sympy_expansion(prod: CycloProduct) -> tuple[int, ...]:
    expr = sympy.Integer(1)
    for e, m in prod.factors.items():
        expr *= (t**e - 1) ** m
    poly = sympy.Poly(sympy.cancel(expr), t)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def test_validity_examples():
    assert is_fibration(2, 1, 1)
    assert is_fibration(1, 3, 5)
    assert not is_fibration(2, -27, 1)
    assert failing_index(2, -27, 1) == 1
    assert not is_fibration(2, 0, 0)
    with pytest.raises(InvalidFibrationError) as err:
        GraphLinkSpec(2, -27, 1)
    assert err.value.index == 1


@pytest.mark.parametrize(
    "m1, m2, dE, dV",
    [
        (3, 1, (9, 9, 3), (3, 9, 3, 1)),
        (1, 1, (3, 9, 3), (1, 3, 3, 1)),
        (9, 1, (27, 9, 3), (9, 9, 3, 1)),
    ],
)
def test_gcd_data(m1, m2, dE, dV):
    g = gcd_data(GraphLinkSpec(2, m1, m2))
    assert (g.dE, g.dV) == (dE, dV)


@pytest.mark.parametrize(
    "m1, m2, poly, degree, mults, offsets, case",
    [
        (1, 1, "t^8+t^7+t^6+t^5+t^4+t^3+t^2+t+1", 8, {3: 1, 9: 1}, (9, 8), "0"),
        (3, 1, "t^6+t^3+1", 6, {9: 1}, (7, 6), "1"),
        (9, 1, "t^18+t^9+1", 18, {27: 1}, (19, 18), "2"),
        (27, 5, "1", 0, {}, (1, 0), ">=3"),
    ],
)
def test_theorem_cases(m1, m2, poly, degree, mults, offsets, case):
    spec = GraphLinkSpec(2, m1, m2)
    assert str(delta_prime(spec)) == poly
    assert jordan_size2_data(spec) == (degree, mults)
    assert p2_offsets(spec) == (*offsets, case)


def test_k0_product_factorization():
    expected = sympy.Poly(sympy.expand((t**2 + t + 1) * (t**6 + t**3 + 1)), t)
    got = delta_prime(GraphLinkSpec(2, 1, 1)).expansion()
    assert got == tuple(int(c) for c in reversed(expected.all_coeffs()))


def test_cyclotomic_against_sympy():
    for j in range(1, 40):
        expected = sympy.Poly(sympy.cyclotomic_poly(j, t), t)
        assert cyclotomic(j) == tuple(int(c) for c in reversed(expected.all_coeffs()))


def test_non_polynomial_product_is_rejected():
    bad = CycloProduct({2: 1, 3: -1})
    assert not bad.is_polynomial()
    with pytest.raises(InconsistentProductError):
        bad.expansion()


def test_case_label_only_for_k4():
    assert p2_offsets(GraphLinkSpec(1, 3, 5))[2] is None
    assert p2_offsets(GraphLinkSpec(2, 2, 4))[2] is None
    assert format_poly((1, -2, 0, 1)) == "t^3-2t+1"


@st.composite
def specs(draw):
    n = draw(st.integers(1, 3))
    m1 = draw(st.integers(-60, 60))
    m2 = draw(st.integers(-60, 60))
    assume(is_fibration(n, m1, m2))
    return GraphLinkSpec(n, m1, m2)


@given(specs())
def test_expansion_matches_sympy_and_degree(spec):
    prod = delta_prime(spec)
    exp = prod.expansion()
    assert exp == sympy_expansion(prod)
    assert len(exp) - 1 == prod.degree
    if 1 not in prod.cyclotomic_multiplicities():
        assert sum(exp) != 0


@given(specs())
def test_swap_symmetry(spec):
    assume(spec.n == 2)
    a, b = gcd_data(spec), gcd_data(GraphLinkSpec(2, spec.m2, spec.m1))
    assert a.dE == b.dE[::-1] and a.dV == b.dV[::-1]
    assert delta_prime(spec).degree == delta_prime(GraphLinkSpec(2, spec.m2, spec.m1)).degree


@given(specs(), st.sampled_from([2, 5, 7, -1]))
def test_scaling_recomputes_consistently(spec, c):
    scaled = GraphLinkSpec(spec.n, c * spec.m1, c * spec.m2)
    prod = delta_prime(scaled)
    assert len(prod.expansion()) - 1 == prod.degree
    assert scaled.d == abs(c) * spec.d


def test_theorem_sweep():
    seen = {}
    for m1 in range(1, 201):
        for m2 in range(1, 201):
            if gcd(m1, m2) != 1:
                continue
            spec = GraphLinkSpec(2, m1, m2)
            plus, minus, case = p2_offsets(spec)
            assert plus == OFFSET_BY_CASE[case] and minus == plus - 1
            k = max(three_adic_valuation(m1), three_adic_valuation(m2))
            assert case == (">=3" if k >= 3 else str(k))
            seen[case] = seen.get(case, 0) + 1
    assert set(seen) == set(OFFSET_BY_CASE)
