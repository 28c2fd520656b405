import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octaboson.laurent import (
    LaurentPoly,
    NotDivisibleError,
    apply_w,
    div_binomial_exact,
    div_exact,
    from_json_dict,
    symmetrize_w,
    to_json_dict,
)
from octaboson.partitions import (
    SignedPermutation,
    group_generators,
    hyperoctahedral_group,
)


def x(j, n=1, power=1):
    return LaurentPoly.variable(n, j, power)


def test_product_example():
    p = (x(0) - x(0, power=-1)) * (x(0) + x(0, power=-1))
    assert p == LaurentPoly(1, {(2,): 1, (-2,): -1})


def test_additive_identity():
    p = LaurentPoly(2, {(1, -1): Fraction(3, 7)})
    assert p + LaurentPoly.zero(2) == p


def test_telescoping():
    p = (LaurentPoly.one(1) - x(0)) * (LaurentPoly.one(1) + x(0) + x(0) ** 2)
    assert p == LaurentPoly(1, {(0,): 1, (3,): -1})


def test_nvars_mismatch():
    with pytest.raises(ValueError):
        LaurentPoly.one(1) + LaurentPoly.one(2)
    with pytest.raises(ValueError):
        LaurentPoly.one(1) * LaurentPoly.one(2)


def test_powers():
    p = x(0) + LaurentPoly.one(1)
    assert p**0 == LaurentPoly.one(1)
    assert p**3 == p * p * p
    with pytest.raises(ValueError):
        p**-1


def test_div_exact_examples():
    one = LaurentPoly.one(1)
    assert div_exact(one - x(0) ** 2, one - x(0)) == one + x(0)
    a = LaurentPoly(2, {(2, 0): 1, (0, 2): -1})
    b = LaurentPoly(2, {(1, 0): 1, (0, 1): -1})
    assert div_exact(a, b) == LaurentPoly(2, {(1, 0): 1, (0, 1): 1})
    with pytest.raises(NotDivisibleError) as info:
        div_exact(one + x(0), one - x(0))
    assert not info.value.remainder.is_zero


def test_div_exact_laurent_shifts():
    # quotients may carry negative exponents
    a = LaurentPoly(1, {(1,): 1, (-1,): -1})
    b = LaurentPoly(1, {(1,): 1, (0,): -1})
    assert div_exact(a, b) == LaurentPoly(1, {(0,): 1, (-1,): 1})


def test_div_binomial_matches_general():
    p = (LaurentPoly.one(2) - x(0, 2) * x(1, 2)) * LaurentPoly(
        2, {(1, -2): Fraction(2, 3), (0, 0): 1, (-1, 1): Fraction(-1, 5)}
    )
    alpha = (1, 1)
    divisor = LaurentPoly(2, {(0, 0): 1, alpha: -1})
    assert div_binomial_exact(p, alpha) == div_exact(p, divisor)
    with pytest.raises(NotDivisibleError):
        div_binomial_exact(LaurentPoly.one(2) + x(0, 2), alpha)


def test_apply_w_examples():
    p = x(0, 2) + x(1, 2)
    identity = SignedPermutation.identity(2)
    assert apply_w(identity, p) == p
    flip0 = SignedPermutation((0, 1), (-1, 1))
    assert apply_w(flip0, p) == LaurentPoly(2, {(-1, 0): 1, (0, 1): 1})
    swap = SignedPermutation((1, 0), (1, 1))
    assert apply_w(swap, LaurentPoly(2, {(1, -1): 1})) == LaurentPoly(2, {(-1, 1): 1})
    with pytest.raises(ValueError):
        apply_w(identity, LaurentPoly.one(1))


def test_symmetrize_examples():
    assert symmetrize_w(LaurentPoly.one(2)) == LaurentPoly.constant(2, 8)
    assert symmetrize_w(x(0)) == LaurentPoly(1, {(1,): 1, (-1,): 1})
    assert symmetrize_w(x(0, 2)) == LaurentPoly(
        2, {(1, 0): 2, (-1, 0): 2, (0, 1): 2, (0, -1): 2}
    )


def test_symmetrize_invariant_under_generators():
    for n in (1, 2, 3):
        p = LaurentPoly(n, {tuple(range(1, n + 1)): Fraction(1, 2), (0,) * n: 3})
        sym = symmetrize_w(p)
        for g in group_generators(n):
            assert apply_w(g, sym) == sym


def test_apply_w_is_ring_homomorphism():
    p = LaurentPoly(2, {(1, 0): 1, (0, -2): Fraction(1, 3)})
    q = LaurentPoly(2, {(1, 1): -2, (0, 0): 1})
    for w in hyperoctahedral_group(2):
        assert apply_w(w, p * q) == apply_w(w, p) * apply_w(w, q)


def test_evaluate():
    p = x(0) + x(0, power=-1)
    assert abs(p.evaluate([cmath.exp(1j * cmath.pi / 2)])) < 1e-15
    assert LaurentPoly.one(3).evaluate([1j, 2.0, -1.0]) == 1
    assert p.evaluate_exact([Fraction(2)]) == Fraction(5, 2)
    with pytest.raises(ZeroDivisionError):
        p.evaluate([0.0])


def test_json_round_trip():
    p = LaurentPoly(2, {(3, -2): Fraction(-7, 11), (0, 0): 5})
    data = to_json_dict(p)
    assert data["nvars"] == 2
    assert all(isinstance(t["num"], str) for t in data["terms"])
    assert from_json_dict(data) == p


small_coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def polys_strategy(nvars: int, max_terms: int):
    exps = st.tuples(*([st.integers(-3, 3)] * nvars))
    return st.dictionaries(exps, small_coeffs, max_size=max_terms).map(
        lambda d: LaurentPoly(nvars, d)
    )


@st.composite
def poly_triples(draw):
    nvars = draw(st.integers(1, 3))
    strat = polys_strategy(nvars, 3)
    return draw(strat), draw(strat), draw(strat)


@given(poly_triples())
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@st.composite
def poly_divisor_pairs(draw):
    nvars = draw(st.integers(1, 3))
    a = draw(polys_strategy(nvars, 4))
    b = draw(polys_strategy(nvars, 4).filter(lambda p: not p.is_zero))
    return a, b


@settings(max_examples=80)
@given(poly_divisor_pairs())
def test_div_exact_roundtrip(pair):
    a, b = pair
    assert div_exact(a * b, b) == a
