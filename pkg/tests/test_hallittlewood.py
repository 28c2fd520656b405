from fractions import Fraction

import pytest

from octaboson.hallittlewood import (
    expand_in_monomials,
    hl_gram_schmidt,
    hl_polynomial,
    macdonald_formula,
    monomial_symmetric,
    normalized_polynomial,
    pieri_residual,
    principal_specialization,
    reconstruct_from_expansion,
    wave_coefficient,
)
from octaboson.laurent import LaurentPoly, apply_w
from octaboson.partitions import (
    dominance_leq,
    enumerate_partitions,
    group_generators,
    lower_set,
)
from octaboson.qkernels import ParamSet, principal_normalizer, tau_vector
from octaboson.torus import QuadratureSpec

F = Fraction


def test_monomial_symmetric_examples():
    assert monomial_symmetric((0, 0)) == LaurentPoly.one(2)
    assert monomial_symmetric((1, 0)) == LaurentPoly(
        2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
    )
    assert monomial_symmetric((1, 1)) == LaurentPoly(
        2, {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1}
    )


def test_wave_coefficient_structure(params4):
    c0 = wave_coefficient((0,), params4)
    assert c0.numerator == LaurentPoly.one(1)
    assert c0.denominator_factors == ()

    c1 = wave_coefficient((1,), params4)
    expected = LaurentPoly.one(1)
    for t in params4.ts:
        expected = expected * LaurentPoly(1, {(0,): F(1), (1,): -t})
    assert c1.numerator == expected
    assert c1.denominator_factors == (LaurentPoly(1, {(0,): 1, (2,): -1}),)

    c10 = wave_coefficient((1, 0), params4)
    assert len(c10.denominator_factors) == 3
    assert LaurentPoly(2, {(0, 0): 1, (1, -1): -1}) in c10.denominator_factors
    assert LaurentPoly(2, {(0, 0): 1, (1, 1): -1}) in c10.denominator_factors
    assert LaurentPoly(2, {(0, 0): 1, (2, 0): -1}) in c10.denominator_factors


def test_zero_partition_is_constant_one(params4):
    for n in (1, 2, 3):
        hl = hl_polynomial((0,) * n, params4)
        assert hl.poly == LaurentPoly.one(n)
        assert hl.expansion == {(0,) * n: 1}


def test_closed_form_n1(params4):
    t1, t2, t3, t4 = params4.ts
    e1 = t1 + t2 + t3 + t4
    e3 = t1 * t2 * t3 + t1 * t2 * t4 + t1 * t3 * t4 + t2 * t3 * t4
    e4 = t1 * t2 * t3 * t4
    hl = hl_polynomial((1,), params4)
    assert hl.expansion == {(1,): F(1), (0,): (e3 - e1) / (1 - e4)}


def test_monicity_triangularity_invariance(params4):
    for lam in enumerate_partitions(2, 3):
        hl = hl_polynomial(lam, params4)
        assert hl.expansion[lam] == 1
        down = lower_set(lam)
        for mu in hl.expansion:
            assert mu in down and dominance_leq(mu, lam)
        for g in group_generators(2):
            assert apply_w(g, hl.poly) == hl.poly
        assert reconstruct_from_expansion(hl.expansion, 2) == hl.poly


def test_expand_rejects_noninvariant():
    with pytest.raises(ValueError):
        expand_in_monomials(LaurentPoly(2, {(1, 0): F(1)}))


def test_gram_schmidt_route(params4):
    quad = QuadratureSpec(points_per_dim=64, n=1)
    assert hl_gram_schmidt((0,), params4, quad) == {(0,): 1.0}
    exact = hl_polynomial((1,), params4)
    numeric = hl_gram_schmidt((1,), params4, quad)
    assert abs(numeric[(0,)] - float(exact.expansion[(0,)])) < 1e-10

    # higher single-variable members still match to quadrature accuracy
    for k in (2, 3):
        exact_k = hl_polynomial((k,), params4)
        numeric_k = hl_gram_schmidt((k,), params4, quad)
        for mu in set(numeric_k) | set(exact_k.expansion):
            assert abs(
                numeric_k.get(mu, 0.0) - float(exact_k.expansion.get(mu, 0))
            ) < 1e-10

    quad2 = QuadratureSpec(points_per_dim=64, n=2)
    exact2 = hl_polynomial((2, 0), params4)
    numeric2 = hl_gram_schmidt((2, 0), params4, quad2)
    assert set(numeric2) == set(lower_set((2, 0)))
    for mu, coeff in numeric2.items():
        assert abs(coeff - float(exact2.expansion.get(mu, 0))) < 1e-8


def test_normalized_polynomial_scaling(params4):
    hl = hl_polynomial((1,), params4)
    scaled = normalized_polynomial(hl)
    c = principal_normalizer((1,), params4)
    point = [F(2)]
    assert scaled.evaluate_exact(point) == c * hl.poly.evaluate_exact(point)
    # value 1 at the principal point
    assert scaled.evaluate_exact(tau_vector(1, params4)) == 1


def test_principal_specialization(params4):
    for lam in enumerate_partitions(2, 3):
        hl = hl_polynomial(lam, params4)
        assert principal_specialization(hl) * principal_normalizer(lam, params4) == 1


def test_principal_specialization_negative_t1():
    params = ParamSet(
        q=F(1, 2), ts=(F(-1, 3), F(-1, 4), F(1, 5), F(-1, 6)), profile="four"
    )
    for lam in ((1,), (2,), (1, 0)):
        hl = hl_polynomial(lam, params)
        assert principal_specialization(hl) * principal_normalizer(lam, params) == 1


def test_pieri_residual_examples(params4):
    assert pieri_residual((0,), params4).is_zero
    assert pieri_residual((2,), params4).is_zero
    assert pieri_residual((1, 1), params4).is_zero


def test_pieri_residual_multi_params(param_triple):
    for params in param_triple:
        for lam in enumerate_partitions(2, 2):
            assert pieri_residual(lam, params).is_zero


def test_macdonald_formula(params2, params4):
    assert macdonald_formula((0, 0), params2).poly == LaurentPoly.one(2)
    assert macdonald_formula((1,), params2).poly == hl_polynomial((1,), params2).poly
    assert (
        macdonald_formula((2, 1), params2).poly == hl_polynomial((2, 1), params2).poly
    )
    with pytest.raises(ValueError):
        macdonald_formula((1,), params4)


def test_cross_route_agreement(params4):
    quad = QuadratureSpec(points_per_dim=64, n=2)
    for lam in enumerate_partitions(2, 2):
        exact = hl_polynomial(lam, params4)
        numeric = hl_gram_schmidt(lam, params4, quad)
        keys = set(numeric) | set(exact.expansion)
        for mu in keys:
            diff = abs(numeric.get(mu, 0.0) - float(exact.expansion.get(mu, 0)))
            assert diff < 1e-8, (lam, mu, diff)


def test_construction_bound(params4):
    with pytest.raises(ValueError):
        hl_polynomial((1, 0, 0, 0, 0), params4)


def test_gram_schmidt_conditioning_error(params4):
    from octaboson.hallittlewood import ConditioningError

    # 6 basis elements sampled on 4 nodes: the Gram system is rank deficient
    quad = QuadratureSpec(points_per_dim=4, n=1)
    with pytest.raises(ConditioningError):
        hl_gram_schmidt((5,), params4, quad)
