#!/usr/bin/env python3
"""Tour of the five-parameter hyperoctahedral polynomial family.

Builds a few members exactly, prints their expansions in the orbit-sum
basis, and demonstrates the identities that pin the family down: monic
triangularity, the principal evaluation, and the lattice recurrence.
"""

from fractions import Fraction

from octaboson import (
    default_params,
    enumerate_partitions,
    hl_polynomial,
    pieri_residual,
    principal_normalizer,
    principal_specialization,
    tau_vector,
)

params = default_params()
print("parameters:", params.to_json_dict())
print()

# --- expansions ------------------------------------------------------------
# Every member is the orbit sum of its leading exponent plus a combination
# of strictly dominated orbit sums.
print("monomial expansions at n = 2 (parts <= 2):")
for lam in enumerate_partitions(2, 2):
    hl = hl_polynomial(lam, params)
    terms = ", ".join(
        f"m_{list(mu)} * {coeff}"
        for mu, coeff in sorted(hl.expansion.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    )
    print(f"  p_{list(lam)} = {terms}")
print()

# --- principal evaluation ---------------------------------------------------
# Evaluating at the geometric point x_j = q^(n-j) t_1 produces exactly the
# reciprocal of the normalizing constant.
lam = (2, 1)
hl = hl_polynomial(lam, params)
tau = tau_vector(2, params)
value = principal_specialization(hl)
print(f"principal evaluation at x = {[str(t) for t in tau]}:")
print(f"  p_{list(lam)}(tau) = {value}")
print(f"  1 / c_{list(lam)}  = {1 / principal_normalizer(lam, params)}")
print(f"  equal: {value == 1 / principal_normalizer(lam, params)}")
print()

# --- the lattice recurrence --------------------------------------------------
# The normalized family satisfies a unit-step recurrence whose left minus
# right side is the literal zero polynomial.
print("recurrence residuals (exact):")
for lam in [(0,), (3,), (2, 2), (3, 1)]:
    residual = pieri_residual(lam, params)
    print(f"  lambda = {list(lam)}: residual is zero -> {residual.is_zero}")
