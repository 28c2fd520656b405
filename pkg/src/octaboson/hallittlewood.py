"""Hyperoctahedral Hall-Littlewood polynomials by two independent routes.

The primary route symmetrizes an explicit plane-wave coefficient over the
hyperoctahedral group and divides exactly by the type-C Weyl denominator;
all arithmetic is exact.  The secondary route orthogonalizes the monomial
basis numerically against the torus inner product and is used only as a
cross check.  A third construction, valid when t_3 = t_4 = 0, uses the
classical lambda-independent coefficient and is compared against the
primary route as an exact polynomial identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from . import torus
from .laurent import LaurentPoly, apply_w, div_binomial_exact
from .partitions import (
    dominance_leq,
    hyperoctahedral_group,
    is_partition,
    lower_indices,
    lower_set,
    multiplicity,
    orbit,
    raise_indices,
    unit_step,
)
from .qkernels import (
    ParamSet,
    monic_normalizer,
    pieri_coeff,
    principal_normalizer,
    quadratic_norm,
    tau_vector,
)

#: Exact construction is kept at desk scale; the group has 2^n n! elements.
MAX_VARIABLES = 4


class ConditioningError(RuntimeError):
    """The Gram system of the numerical route is too ill-conditioned."""


@dataclass(frozen=True)
class HLPolynomial:
    """A constructed polynomial with its monomial expansion and norm."""

    lam: tuple[int, ...]
    poly: LaurentPoly
    expansion: Mapping[tuple[int, ...], Fraction]
    norm: Fraction
    params: ParamSet


@dataclass(frozen=True)
class CFactorization:
    """Numerator polynomial and binomial denominator factors of the
    plane-wave coefficient, kept factored so the orbit sum can be put over
    a common denominator without rational-function arithmetic."""

    numerator: LaurentPoly
    denominator_factors: tuple[LaurentPoly, ...]


def monomial_symmetric(lam: tuple[int, ...], nvars: int | None = None) -> LaurentPoly:
    """Orbit sum m_lam = sum of x^mu over the signed-permutation orbit."""
    lam = tuple(lam)
    n = len(lam) if nvars is None else nvars
    if n != len(lam):
        raise ValueError("nvars must equal the partition length")
    return LaurentPoly(n, {mu: Fraction(1) for mu in orbit(lam)})


def _positive_roots(n: int) -> list[tuple[int, ...]]:
    """e_j - e_k, e_j + e_k (j < k) and 2 e_j, as exponent vectors."""
    roots = []
    for j in range(n):
        for k in range(j + 1, n):
            minus = [0] * n
            minus[j], minus[k] = 1, -1
            plus = [0] * n
            plus[j], plus[k] = 1, 1
            roots.append(tuple(minus))
            roots.append(tuple(plus))
    for j in range(n):
        double = [0] * n
        double[j] = 2
        roots.append(tuple(double))
    return roots


def _one_minus_monomial(n: int, exp: Sequence[int]) -> LaurentPoly:
    return LaurentPoly(n, {(0,) * n: Fraction(1), tuple(exp): Fraction(-1)})


def wave_coefficient(lam: tuple[int, ...], params: ParamSet) -> CFactorization:
    """Factored coefficient of the plane wave e^{-i<lam, xi>} in the orbit sum.

    Numerator: prod_{j<k} (1 - q x_j/x_k)(1 - q x_j x_k) times, for every j
    with lam_j > 0, prod_r (1 - t_r x_j).  Denominator factors: the matching
    (1 - x_j/x_k), (1 - x_j x_k) and, for lam_j > 0, (1 - x_j^2).
    """
    lam = tuple(lam)
    n = len(lam)
    q = params.q
    numerator = LaurentPoly.one(n)
    denominator: list[LaurentPoly] = []
    for j in range(n):
        for k in range(j + 1, n):
            for sign in (-1, 1):
                exp = [0] * n
                exp[j], exp[k] = 1, sign
                numerator = numerator * LaurentPoly(
                    n, {(0,) * n: Fraction(1), tuple(exp): -q}
                )
                denominator.append(_one_minus_monomial(n, exp))
    for j in range(n):
        if lam[j] > 0:
            for t in params.ts:
                exp = [0] * n
                exp[j] = 1
                numerator = numerator * LaurentPoly(
                    n, {(0,) * n: Fraction(1), tuple(exp): -t}
                )
            double = [0] * n
            double[j] = 2
            denominator.append(_one_minus_monomial(n, double))
    return CFactorization(numerator, tuple(denominator))


def _denominator_cocycle(w, roots: Sequence[tuple[int, ...]]) -> tuple[int, tuple[int, ...]]:
    """sign and monomial shift with w(D) = sign * x^shift * D for the
    product D over positive roots of (1 - x^root)."""
    n = len(roots[0]) if roots else 0
    sign = 1
    shift = [0] * n
    for alpha in roots:
        image = w.apply(alpha)
        first = next((v for v in image if v != 0), 0)
        if first < 0:
            sign = -sign
            for i, v in enumerate(image):
                shift[i] += v
    return sign, tuple(shift)


def _orbit_sum_over_denominator(seed: LaurentPoly, n: int) -> LaurentPoly:
    """Exact evaluation of sum over the group of w(seed / D).

    D is the full product of (1 - x^alpha) over positive roots; each group
    image of D is sign * monomial * D, so the sum collapses to a single
    exact division of the accumulated numerator by the binomial factors.
    A nonzero remainder at any stage is an internal-consistency failure
    and is surfaced as NotDivisibleError.
    """
    roots = _positive_roots(n)
    budget = torus.node_budget()
    acc: dict[tuple[int, ...], Fraction] = {}
    for w in hyperoctahedral_group(n):
        sign, shift = _denominator_cocycle(w, roots)
        for exp, coeff in apply_w(w, seed).terms.items():
            key = tuple(e - s for e, s in zip(exp, shift))
            new = acc.get(key, Fraction(0)) + (coeff if sign > 0 else -coeff)
            if new:
                acc[key] = new
            else:
                acc.pop(key, None)
        if len(acc) > budget:
            raise torus.BudgetExceededError(
                f"symmetrization exceeds the {budget}-term budget"
            )
    result = LaurentPoly(n, acc)
    for alpha in roots:
        result = div_binomial_exact(result, alpha)
    return result


def expand_in_monomials(p: LaurentPoly) -> dict[tuple[int, ...], Fraction]:
    """Expansion of an invariant polynomial in the orbit-sum basis.

    Repeatedly strips a dominance-maximal dominant exponent (graded-lex
    tie break among incomparable maxima); failure to exhaust the residual
    proves the input was not invariant.
    """
    residual = p
    out: dict[tuple[int, ...], Fraction] = {}
    budget = sum(1 for exp in p.terms if is_partition(exp)) + 1
    while not residual.is_zero:
        dominants = [exp for exp in residual.terms if is_partition(exp)]
        if not dominants or budget == 0:
            raise ValueError("polynomial is not invariant under the group action")
        budget -= 1
        maximal = [
            d
            for d in dominants
            if not any(e != d and dominance_leq(d, e) for e in dominants)
        ]
        mu = max(maximal, key=lambda e: (sum(e), e))
        coeff = residual.terms[mu]
        out[mu] = coeff
        residual = residual - coeff * monomial_symmetric(mu)
    return out


def reconstruct_from_expansion(
    expansion: Mapping[tuple[int, ...], Fraction], n: int
) -> LaurentPoly:
    """Inverse of expand_in_monomials."""
    total = LaurentPoly.zero(n)
    for mu, coeff in expansion.items():
        total = total + coeff * monomial_symmetric(tuple(mu), n)
    return total


def _finalize(
    lam: tuple[int, ...], poly: LaurentPoly, params: ParamSet
) -> HLPolynomial:
    expansion = expand_in_monomials(poly)
    if expansion.get(lam) != 1:
        raise AssertionError(f"constructed polynomial for {lam} is not monic")
    down = lower_set(lam)
    for mu in expansion:
        if mu not in down:
            raise AssertionError(
                f"expansion of {lam} has support {mu} outside the lower set"
            )
    return HLPolynomial(
        lam=lam,
        poly=poly,
        expansion=expansion,
        norm=quadratic_norm(lam, params),
        params=params,
    )


@lru_cache(maxsize=None)
def _seed_block(n: int, zero_count: int, params: ParamSet) -> LaurentPoly:
    """Numerator block shared by all partitions with the same number of
    zero parts: cross numerator factors, boundary factors on the positive
    parts, and (1 - x_j^2) top-ups on the zero parts."""
    q = params.q
    block = LaurentPoly.one(n)
    for j in range(n):
        for k in range(j + 1, n):
            for sign in (-1, 1):
                exp = [0] * n
                exp[j], exp[k] = 1, sign
                block = block * LaurentPoly(n, {(0,) * n: Fraction(1), tuple(exp): -q})
    for j in range(n):
        if j < n - zero_count:
            for t in params.ts:
                exp = [0] * n
                exp[j] = 1
                block = block * LaurentPoly(n, {(0,) * n: Fraction(1), tuple(exp): -t})
        else:
            double = [0] * n
            double[j] = 2
            block = block * _one_minus_monomial(n, double)
    return block


@lru_cache(maxsize=None)
def hl_polynomial(lam: tuple[int, ...], params: ParamSet) -> HLPolynomial:
    """Primary exact construction via group symmetrization.

    The plane-wave coefficient times x^{-lam} is put over the full Weyl-type
    denominator (missing (1 - x_j^2) factors for zero parts are topped up in
    the numerator), symmetrized, divided exactly, and scaled monic.
    """
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    n = len(lam)
    if n > MAX_VARIABLES:
        raise ValueError(f"exact construction supports at most {MAX_VARIABLES} variables")
    if n == 0:
        return HLPolynomial((), LaurentPoly.one(0), {(): Fraction(1)},
                            quadratic_norm((), params), params)
    seed = _seed_block(n, multiplicity(lam, 0), params).shift([-p for p in lam])
    summed = _orbit_sum_over_denominator(seed, n)
    poly = summed * (1 / monic_normalizer(lam, params))
    return _finalize(lam, poly, params)


@lru_cache(maxsize=None)
def macdonald_formula(lam: tuple[int, ...], params: ParamSet) -> HLPolynomial:
    """Classical two-parameter construction (requires t_3 = t_4 = 0).

    Uses the lambda-independent plane-wave coefficient whose denominator
    carries (1 - x_j^2) for every j, and scales by the quadratic norm
    instead of the monic normalizer.
    """
    lam = tuple(lam)
    if params.profile != "two":
        raise ValueError("the classical formula requires the two-parameter profile")
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    n = len(lam)
    if n > MAX_VARIABLES:
        raise ValueError(f"exact construction supports at most {MAX_VARIABLES} variables")
    if n == 0:
        return HLPolynomial((), LaurentPoly.one(0), {(): Fraction(1)},
                            quadratic_norm((), params), params)
    q = params.q
    seed = LaurentPoly.one(n)
    for j in range(n):
        for k in range(j + 1, n):
            for sign in (-1, 1):
                exp = [0] * n
                exp[j], exp[k] = 1, sign
                seed = seed * LaurentPoly(n, {(0,) * n: Fraction(1), tuple(exp): -q})
    for j in range(n):
        for t in params.ts[:2]:
            exp = [0] * n
            exp[j] = 1
            seed = seed * LaurentPoly(n, {(0,) * n: Fraction(1), tuple(exp): -t})
    seed = seed.shift([-p for p in lam])
    summed = _orbit_sum_over_denominator(seed, n)
    poly = summed * quadratic_norm(lam, params)
    return _finalize(lam, poly, params)


def normalized_polynomial(hl: HLPolynomial) -> LaurentPoly:
    """The principally normalized family member c_lam * p_lam."""
    return principal_normalizer(hl.lam, hl.params) * hl.poly


def principal_specialization(hl: HLPolynomial) -> Fraction:
    """Exact value of the polynomial at x_j = q^{n-j} t_1.

    Contract: equals 1 / principal_normalizer (verified by the test suite;
    evaluation is algebraic, so any nonzero rational t_1 is admissible).
    """
    tau = tau_vector(len(hl.lam), hl.params)
    return hl.poly.evaluate_exact(tau)


def pieri_residual(lam: tuple[int, ...], params: ParamSet) -> LaurentPoly:
    """Left side minus right side of the lattice recurrence; contract: zero.

    LHS: P_lam * (sum_j (x_j + 1/x_j) - sum_j (tau_j + 1/tau_j)).
    RHS: sum over valid steps of the step coefficient times
    (P_{lam +- e_j} - P_lam).
    """
    lam = tuple(lam)
    n = len(lam)
    base = hl_polynomial(lam, params)
    p_base = normalized_polynomial(base)

    spectral = LaurentPoly.zero(n)
    for j in range(n):
        up = [0] * n
        up[j] = 1
        spectral = spectral + LaurentPoly(
            n, {tuple(up): Fraction(1), tuple(-u for u in up): Fraction(1)}
        )
    tau = tau_vector(n, params)
    offset = sum((tj + 1 / tj for tj in tau), Fraction(0))
    lhs = p_base * spectral - offset * p_base

    rhs = LaurentPoly.zero(n)
    for j in raise_indices(lam):
        coeff = pieri_coeff(lam, j, +1, params)
        neighbor = normalized_polynomial(hl_polynomial(unit_step(lam, j, 1), params))
        rhs = rhs + coeff * (neighbor - p_base)
    for j in lower_indices(lam):
        coeff = pieri_coeff(lam, j, -1, params)
        neighbor = normalized_polynomial(hl_polynomial(unit_step(lam, j, -1), params))
        rhs = rhs + coeff * (neighbor - p_base)
    return lhs - rhs


def hl_gram_schmidt(
    lam: tuple[int, ...],
    params: ParamSet,
    quad: "torus.QuadratureSpec",
) -> dict[tuple[int, ...], float]:
    """Numerical construction: solve for the triangular expansion whose
    projections onto every strictly smaller orbit sum vanish.

    One linear system per partition (the order is partial, so a sequential
    sweep is not even well defined); the system matrix is the Gram matrix
    of the lower-set orbit sums under the torus inner product.
    """
    lam = tuple(lam)
    support = lower_set(lam)
    if len(support) == 1:
        return {lam: 1.0}
    basis = [monomial_symmetric(mu, len(lam)) for mu in support]
    gram = torus.gram_matrix(basis, params, quad).real
    idx = support.index(lam)
    others = [i for i in range(len(support)) if i != idx]
    sub = gram[np.ix_(others, others)]
    condition = np.linalg.cond(sub)
    if condition > 1e12:
        raise ConditioningError(f"Gram system condition {condition:.3e} exceeds 1e12")
    rhs = -gram[others, idx]
    coeffs = np.linalg.solve(sub, rhs)
    result = {support[i]: float(c) for i, c in zip(others, coeffs)}
    result[lam] = 1.0
    return result
