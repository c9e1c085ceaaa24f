from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from specgraph.polynomial import IntPolynomial, RatPolynomial, poly_divmod, poly_gcd, squarefree_part

coeff_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=7)


def test_basic_arithmetic():
    p = IntPolynomial([-1, 0, 1])
    q = IntPolynomial([1, 1])
    assert p.degree == 2 and p.lc == 1 and p.is_monic()
    assert (p * q).coeffs == (-1, -1, 1, 1)
    assert (p - p).is_zero()
    assert p.divmod_exact(q) == IntPolynomial([-1, 1])
    assert IntPolynomial([1, 2]).divmod_exact(IntPolynomial([0, 2])) is None
    assert p(3) == 8 and p.derivative() == IntPolynomial([0, 2])
    assert str(IntPolynomial([1, -8, 0, 1])) == "T^3 - 8T + 1"
    assert str(IntPolynomial([0, -1])) == "-T"


def test_content_and_primitive():
    p = IntPolynomial([-6, 0, -4])
    assert p.content() == -2
    assert p.primitive() == IntPolynomial([3, 0, 2])


def test_json_roundtrip_big_coefficients():
    p = IntPolynomial([10**40, -3, 7])
    assert IntPolynomial.from_json(p.to_json()) == p
    assert p.to_json()["coeffs"][0] == str(10**40)


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divmod_identity(a, b):
    q, r = poly_divmod(a, b)
    bb = [Fraction(x) for x in b]
    while bb and bb[-1] == 0:
        bb.pop()
    assert len(r) < len(bb)
    prod = [Fraction(0)] * (len(q) + len(bb))
    for i, x in enumerate(q):
        for j, y in enumerate(bb):
            prod[i + j] += x * y
    for i, x in enumerate(r):
        prod[i] += x
    aa = list(a) + [0] * max(0, len(prod) - len(a))
    assert all(prod[i] == aa[i] for i in range(len(prod))) and all(x == 0 for x in aa[len(prod):])


@given(coeff_lists.filter(lambda c: any(c)), coeff_lists.filter(lambda c: any(c)))
def test_gcd_divides_both(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    g = poly_gcd(p, q)
    assert g.divides(p) and g.divides(q)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.integers(1, 3))
def test_squarefree_part_has_distinct_roots(roots, power):
    p = IntPolynomial.from_roots_int(roots) ** power
    sf = squarefree_part(p)
    assert sf == IntPolynomial.from_roots_int(sorted(set(roots)))


def test_squarefree_of_zero_raises():
    with pytest.raises(ValueError):
        squarefree_part(IntPolynomial([]))


def test_rat_polynomial_monic():
    r = RatPolynomial([1, 2])
    assert r.coeffs == (Fraction(1, 2), Fraction(1))
    assert not r.is_integral()
    assert RatPolynomial([-3, 0, 1]).to_int() == IntPolynomial([-3, 0, 1])
    assert RatPolynomial([0, 1]).divides(IntPolynomial([0, -3, 0, 1]))
    with pytest.raises(ValueError):
        RatPolynomial([0])
