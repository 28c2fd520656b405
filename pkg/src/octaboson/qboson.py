"""Deformed q-boson operators on particle sectors and their verification.

States of the n-particle sector are finitely supported functions on
length-n partitions; the parts are particle positions on the nonnegative
integer lattice.  Creation and annihilation carry an extra deformation at
the two boundary sites 0 and 1, which breaks ultralocality there: the
operators attached to those sites commute only up to a diagonal twist.

All algebraic identity checks run in exact rational arithmetic on delta
bases and must produce literal zeros; complex floats enter only where the
spectral parameter does (wave functions, eigenvalue residuals, scattering).
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .hallittlewood import hl_polynomial
from .partitions import (
    add_part,
    enumerate_partitions,
    lower_indices,
    multiplicity,
    raise_indices,
    remove_part,
    unit_step,
)
from .qkernels import (
    GenericityError,
    ParamSet,
    boundary_potential,
    hop_coeff,
    qinteger,
    quadratic_norm,
)

RELATION_IDS = ("a1", "a2", "b", "c", "d1", "d2", "e1", "e2")


@dataclass(frozen=True)
class LatticeFunction:
    """Finitely supported function on the length-n partition sector.

    Values are exact rationals in identity checks and complex numbers for
    wave functions; zeros are never stored.
    """

    n: int
    values: Mapping[tuple[int, ...], object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for lam, value in self.values.items():
            lam = tuple(lam)
            if len(lam) != self.n:
                raise ValueError(f"key {lam} has length != {self.n}")
            if value != 0:
                clean[lam] = value
        object.__setattr__(self, "values", clean)

    @classmethod
    def delta(cls, lam: Sequence[int]) -> "LatticeFunction":
        lam = tuple(lam)
        return cls(len(lam), {lam: Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> "LatticeFunction":
        return cls(n, {})

    @property
    def is_zero(self) -> bool:
        return not self.values

    def __call__(self, lam: Sequence[int]):
        return self.values.get(tuple(lam), 0)

    def __add__(self, other: "LatticeFunction") -> "LatticeFunction":
        # The zero function is sector-agnostic (an annihilator applied to the
        # vacuum sector yields it), so mismatched sectors combine when one
        # side is zero.
        if self.n != other.n:
            if self.is_zero:
                return other
            if other.is_zero:
                return self
            raise ValueError("sector mismatch")
        out = dict(self.values)
        for lam, v in other.values.items():
            out[lam] = out.get(lam, 0) + v
        return LatticeFunction(self.n, out)

    def __sub__(self, other: "LatticeFunction") -> "LatticeFunction":
        return self + other.scale(-1)

    def scale(self, factor) -> "LatticeFunction":
        return LatticeFunction(self.n, {k: factor * v for k, v in self.values.items()})

    def max_abs(self):
        """Largest absolute value over the support (0 for the zero function)."""
        return max((abs(v) for v in self.values.values()), default=0)


# ---------------------------------------------------------------------------
# Elementary operators
# ---------------------------------------------------------------------------


def _occupation_pair(lam: tuple[int, ...]) -> tuple[int, int]:
    return multiplicity(lam, 0), multiplicity(lam, 1)


def annihilate(
    l: int, f: LatticeFunction, params: ParamSet, formula: str | None = None
) -> LatticeFunction:
    """Remove a particle from site l (sector n -> n-1).

    The value at a target state is the source value divided, for l = 0 in
    the full profile, by (1 - t q^{2 m_0 + m_1}) of the target state; the
    reduced profiles have no denominator.  On the vacuum sector the result
    is zero.  ``formula`` overrides the profile's formula variant (used by
    the degeneration checks, which evaluate the full formula at zeroed t_r).
    """
    variant = formula or params.profile
    if f.n == 0:
        return LatticeFunction.zero(0)
    out: dict[tuple[int, ...], object] = {}
    for mu, value in f.values.items():
        if multiplicity(mu, l) == 0:
            continue
        lam = remove_part(mu, l)
        scaled = value
        if l == 0 and variant == "four":
            m0, m1 = _occupation_pair(lam)
            denom = 1 - params.t * params.q ** (2 * m0 + m1)
            if denom == 0:
                raise GenericityError("annihilation denominator vanishes")
            scaled = value / denom
        out[lam] = out.get(lam, 0) + scaled
    return LatticeFunction(f.n - 1, out)


def _creation_coeff(
    lam: tuple[int, ...], l: int, q: Fraction, ts: Sequence[Fraction], profile: str
) -> Fraction:
    """Coefficient of the created state lam (which contains a part l)."""
    m = multiplicity(lam, l)
    m0, m1 = _occupation_pair(lam)
    value = qinteger(m, q)
    if profile == "four":
        t = ts[0] * ts[1] * ts[2] * ts[3]
        if l in (0, 1):
            value *= 1 - t * q ** (2 * m0 + m1 - 1)
        if l == 0:
            numerator = 1 - t * q ** (m0 - 2)
            for r, s in itertools.combinations(range(4), 2):
                numerator *= 1 - ts[r] * ts[s] * q ** (m0 - 1)
            denominator = (
                (1 - t * q ** (2 * m0 - 3))
                * (1 - t * q ** (2 * m0 - 2)) ** 2
                * (1 - t * q ** (2 * m0 - 1))
            )
            if denominator == 0:
                raise GenericityError("creation coefficient denominator vanishes")
            value *= numerator / denominator
    elif profile == "three":
        if l == 0:
            for r, s in itertools.combinations(range(3), 2):
                value *= 1 - ts[r] * ts[s] * q ** (m0 - 1)
    else:
        if l == 0:
            value *= 1 - ts[0] * ts[1] * q ** (m0 - 1)
    return value


def create(
    l: int, f: LatticeFunction, params: ParamSet, formula: str | None = None
) -> LatticeFunction:
    """Add a particle at site l (sector n -> n+1); adjoint of annihilate."""
    variant = formula or params.profile
    out: dict[tuple[int, ...], object] = {}
    for mu, value in f.values.items():
        lam = add_part(mu, l)
        coeff = _creation_coeff(lam, l, params.q, params.ts, variant)
        out[lam] = out.get(lam, 0) + value * coeff
    return LatticeFunction(f.n + 1, out)


def number_op(l: int, f: LatticeFunction, params: ParamSet) -> LatticeFunction:
    """Multiplication by q^{m_l(lam)}."""
    return LatticeFunction(
        f.n,
        {lam: params.q ** multiplicity(lam, l) * v for lam, v in f.values.items()},
    )


def sector_inner_product(f: LatticeFunction, g: LatticeFunction, params: ParamSet):
    """<f, g> = sum over lam of f(lam) conj(g(lam)) N_lam."""
    if f.n != g.n:
        raise ValueError("sector mismatch")
    total = 0
    for lam, fv in f.values.items():
        gv = g.values.get(lam)
        if gv is None:
            continue
        gv = gv.conjugate() if isinstance(gv, complex) else gv
        total += fv * gv * quadratic_norm(lam, params)
    return total


# ---------------------------------------------------------------------------
# Commutation relations
# ---------------------------------------------------------------------------


def _twist_ratio(lam: tuple[int, ...], params: ParamSet, inverse: bool) -> Fraction:
    """(1 - q t N0^2 N1) / (1 - t N0^2 N1) on a basis state (or its inverse)."""
    m0, m1 = _occupation_pair(lam)
    base = params.t * params.q ** (2 * m0 + m1)
    num, den = 1 - params.q * base, 1 - base
    if inverse:
        num, den = den, num
    if den == 0:
        raise GenericityError("twist factor denominator vanishes")
    return num / den


def _apply_diag(
    f: LatticeFunction, scalar: Callable[[tuple[int, ...]], Fraction]
) -> LatticeFunction:
    return LatticeFunction(f.n, {lam: scalar(lam) * v for lam, v in f.values.items()})


def _pair_scalar_b(lam: tuple[int, ...], l: int, params: ParamSet) -> Fraction:
    """Diagonal value of the normal-ordered product create(l) annihilate(l)."""
    q, ts, t = params.q, params.ts, params.t
    m0, m1 = _occupation_pair(lam)
    value = (1 - q ** multiplicity(lam, l)) / (1 - q)
    if params.profile == "four":
        if l in (0, 1):
            value *= 1 - t * q ** (2 * m0 + m1 - 1)
        if l == 0:
            numerator = 1 - t * q ** (m0 - 2)
            for r, s in itertools.combinations(range(4), 2):
                numerator *= 1 - ts[r] * ts[s] * q ** (m0 - 1)
            denominator = (
                (1 - t * q ** (2 * m0 - 3))
                * (1 - t * q ** (2 * m0 - 2)) ** 2
                * (1 - t * q ** (2 * m0 - 1))
                * (1 - t * q ** (2 * m0 + m1 - 2))
            )
            if denominator == 0:
                raise GenericityError("relation scalar denominator vanishes")
            value *= numerator / denominator
    elif params.profile == "three":
        if l == 0:
            for r, s in itertools.combinations(range(3), 2):
                value *= 1 - ts[r] * ts[s] * q ** (m0 - 1)
    else:
        if l == 0:
            value *= 1 - ts[0] * ts[1] * q ** (m0 - 1)
    return value


def _pair_scalar_c(lam: tuple[int, ...], l: int, params: ParamSet) -> Fraction:
    """Diagonal value of the anti-normal-ordered product annihilate(l) create(l)."""
    q, ts, t = params.q, params.ts, params.t
    m0, m1 = _occupation_pair(lam)
    value = (1 - q ** (multiplicity(lam, l) + 1)) / (1 - q)
    if params.profile == "four":
        base = t * q ** (2 * m0 + m1)
        if l == 1:
            value *= 1 - base
        if l == 0:
            if 1 - base == 0:
                raise GenericityError("relation scalar denominator vanishes")
            value /= 1 - base
            numerator = (1 - t * q ** (m0 - 1)) * (1 - q * base)
            for r, s in itertools.combinations(range(4), 2):
                numerator *= 1 - ts[r] * ts[s] * q**m0
            denominator = (
                (1 - t * q ** (2 * m0 - 1))
                * (1 - t * q ** (2 * m0)) ** 2
                * (1 - t * q ** (2 * m0 + 1))
            )
            if denominator == 0:
                raise GenericityError("relation scalar denominator vanishes")
            value *= numerator / denominator
    elif params.profile == "three":
        if l == 0:
            for r, s in itertools.combinations(range(3), 2):
                value *= 1 - ts[r] * ts[s] * q**m0
    else:
        if l == 0:
            value *= 1 - ts[0] * ts[1] * q**m0
    return value


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification sweep; residuals are exact strings in
    exact mode and floats otherwise."""

    name: str
    n: int
    max_part: int
    mode: str
    max_residual: str
    passed: bool
    cases: int

    def to_json_dict(self) -> dict:
        return {
            "relation": self.name,
            "n": self.n,
            "maxPart": self.max_part,
            "mode": self.mode,
            "maxResidual": self.max_residual,
            "pass": self.passed,
            "cases": self.cases,
        }


def _relation_sides(
    relation_id: str,
    l: int,
    k: int,
    params: ParamSet,
    twisted: bool,
) -> Callable[[LatticeFunction], tuple[LatticeFunction, LatticeFunction]]:
    q = params.q

    def sides(f: LatticeFunction) -> tuple[LatticeFunction, LatticeFunction]:
        if relation_id == "a1":
            lhs = annihilate(l, number_op(k, f, params), params)
            rhs = number_op(k, annihilate(l, f, params), params).scale(
                q if l == k else 1
            )
        elif relation_id == "a2":
            lhs = create(l, number_op(k, f, params), params)
            rhs = number_op(k, create(l, f, params), params).scale(
                1 / q if l == k else 1
            )
        elif relation_id == "b":
            lhs = create(l, annihilate(l, f, params), params)
            rhs = _apply_diag(f, lambda lam: _pair_scalar_b(lam, l, params))
        elif relation_id == "c":
            lhs = annihilate(l, create(l, f, params), params)
            rhs = _apply_diag(f, lambda lam: _pair_scalar_c(lam, l, params))
        elif relation_id in ("d1", "d2", "e1", "e2"):
            twist_on = twisted and l == 0 and k == 1 and params.profile == "four"
            if relation_id == "d1":
                lhs = annihilate(l, annihilate(k, f, params), params)
                rhs = annihilate(k, annihilate(l, f, params), params)
                if twist_on:
                    rhs = _apply_diag(rhs, lambda lam: _twist_ratio(lam, params, False))
            elif relation_id == "d2":
                lhs = create(l, create(k, f, params), params)
                inner = (
                    _apply_diag(f, lambda lam: _twist_ratio(lam, params, True))
                    if twist_on
                    else f
                )
                rhs = create(k, create(l, inner, params), params)
            elif relation_id == "e1":
                lhs = annihilate(l, create(k, f, params), params)
                rhs = create(k, annihilate(l, f, params), params)
                if twist_on:
                    rhs = _apply_diag(rhs, lambda lam: _twist_ratio(lam, params, False))
            else:  # e2
                lhs = create(l, annihilate(k, f, params), params)
                inner = (
                    _apply_diag(f, lambda lam: _twist_ratio(lam, params, True))
                    if twist_on
                    else f
                )
                rhs = annihilate(k, create(l, inner, params), params)
        else:
            raise ValueError(f"unknown relation {relation_id!r}")
        return lhs, rhs

    return sides


def verify_relation(
    relation_id: str,
    l: int,
    k: int,
    n: int,
    max_part: int,
    params: ParamSet,
    twisted: bool = True,
) -> VerificationReport:
    """Apply both sides of a field-algebra relation to every delta basis
    function of the sector and report the worst residual (exact mode).

    The exchange relations (d*/e*) require l < k; with ``twisted=False``
    the diagonal correction at the boundary pair (0, 1) is dropped, which
    documents the breakdown of ultralocality in the full profile.
    """
    if relation_id not in RELATION_IDS:
        raise ValueError(f"relation must be one of {RELATION_IDS}")
    if relation_id in ("d1", "d2", "e1", "e2") and not l < k:
        raise ValueError("exchange relations require l < k")
    sides = _relation_sides(relation_id, l, k, params, twisted)
    worst = Fraction(0)
    cases = 0
    for mu in enumerate_partitions(n, max_part):
        lhs, rhs = sides(LatticeFunction.delta(mu))
        residual = (lhs - rhs).max_abs()
        worst = max(worst, residual)
        cases += 1
    suffix = "" if twisted else "-untwisted"
    return VerificationReport(
        name=f"com-{relation_id}{suffix}",
        n=n,
        max_part=max_part,
        mode="exact",
        max_residual=str(worst),
        passed=worst == 0,
        cases=cases,
    )


# ---------------------------------------------------------------------------
# Hamiltonian
# ---------------------------------------------------------------------------


def apply_hamiltonian(f: LatticeFunction, params: ParamSet) -> LatticeFunction:
    """Coefficient form of the sector Hamiltonian: boundary potential on the
    diagonal plus nearest-neighbor hops with multiplicity-weighted rates."""
    out: dict[tuple[int, ...], object] = {}

    def accumulate(lam, value):
        out[lam] = out.get(lam, 0) + value

    for lam, value in f.values.items():
        m0, m1 = _occupation_pair(lam)
        accumulate(lam, boundary_potential(m0, m1, params) * value)
        # (Hf)(target) collects f(lam) with the step coefficient of target,
        # so each source state scatters into its unit-step neighbors.
        for j in raise_indices(lam):
            target = unit_step(lam, j, 1)
            accumulate(target, hop_coeff(target, j, -1, params) * value)
        for j in lower_indices(lam):
            target = unit_step(lam, j, -1)
            accumulate(target, hop_coeff(target, j, 1, params) * value)
    return LatticeFunction(f.n, out)


def hamiltonian_from_operators(f: LatticeFunction, params: ParamSet) -> LatticeFunction:
    """Assemble the Hamiltonian from creation/annihilation pairs; on a
    finitely supported function the site sum truncates at the largest part."""
    result = _apply_diag(
        f,
        lambda lam: boundary_potential(*_occupation_pair(lam), params),
    )
    if f.is_zero or f.n == 0:
        return result
    top = max((max(lam) for lam in f.values if lam), default=0)
    for l in range(top + 1):
        result = result + create(l, annihilate(l + 1, f, params), params)
        result = result + create(l + 1, annihilate(l, f, params), params)
    return result


# ---------------------------------------------------------------------------
# Wave functions, spectrum, scattering
# ---------------------------------------------------------------------------


def wave_function(xi: Sequence[float], lam: Sequence[int], params: ParamSet) -> complex:
    """Value of the eigenfunction with spectral parameter xi at a state."""
    lam = tuple(lam)
    hl = hl_polynomial(lam, params)
    point = [cmath.exp(1j * x) for x in xi]
    return hl.poly.evaluate(point) / float(quadratic_norm(lam, params))


def wave_function_dump(
    xi: Sequence[float], lams: Sequence[Sequence[int]], params: ParamSet
) -> dict:
    """JSON-ready dump of wave-function values on a list of states."""
    values = []
    for lam in lams:
        value = wave_function(xi, lam, params)
        values.append({"lambda": list(lam), "re": value.real, "im": value.imag})
    return {"xi": list(xi), "values": values}


def energy(xi: Sequence[float]) -> float:
    """Eigenvalue 2 * sum_j cos(xi_j)."""
    return 2.0 * sum(math.cos(x) for x in xi)


def eigen_residual(
    xi: Sequence[float], lam_set: Sequence[Sequence[int]], params: ParamSet
) -> VerificationReport:
    """Relative residual of the eigenvalue equation on the given states.

    For each state the Hamiltonian row is assembled from the potential and
    hop coefficients, applied to wave-function values on the state and its
    unit-step neighbors, and compared with energy * value.
    """
    lam_set = [tuple(lam) for lam in lam_set]
    n = len(xi)
    needed = set(lam_set)
    for lam in lam_set:
        for j in raise_indices(lam):
            needed.add(unit_step(lam, j, 1))
        for j in lower_indices(lam):
            needed.add(unit_step(lam, j, -1))
    phi = {lam: wave_function(xi, lam, params) for lam in sorted(needed)}
    e_val = energy(xi)
    worst = 0.0
    for lam in lam_set:
        m0, m1 = _occupation_pair(lam)
        total = float(boundary_potential(m0, m1, params)) * phi[lam]
        for j in raise_indices(lam):
            total += float(hop_coeff(lam, j, +1, params)) * phi[unit_step(lam, j, 1)]
        for j in lower_indices(lam):
            total += float(hop_coeff(lam, j, -1, params)) * phi[unit_step(lam, j, -1)]
        residual = abs(total - e_val * phi[lam]) / max(1.0, abs(phi[lam]))
        worst = max(worst, residual)
    return VerificationReport(
        name="eigenvalue-equation",
        n=n,
        max_part=max((lam[0] for lam in lam_set if lam), default=0),
        mode="complex",
        max_residual=repr(worst),
        passed=worst < 1e-10,
        cases=len(lam_set),
    )


def scattering_factors(x: float, params: ParamSet) -> tuple[complex, complex]:
    """Two-particle bulk factor s and one-particle boundary factor s0.

    Both are ratios of a value and its conjugate-reciprocal partner, hence
    unimodular for real x; zero parameters contribute trivial factors, so
    the same product covers every profile.
    """
    q = float(params.q)
    down = cmath.exp(-1j * x)
    up = cmath.exp(1j * x)
    s = (1 - q * down) / (1 - q * up)
    s0 = 1 + 0j
    for t in params.ts:
        tf = float(t)
        if tf:
            s0 *= (1 - tf * down) / (1 - tf * up)
    return s, s0


def scattering_matrix(xi: Sequence[float], params: ParamSet) -> complex:
    """Factorized n-particle scattering matrix: bulk pairs times boundary."""
    n = len(xi)
    total = 1 + 0j
    for j in range(n):
        for k in range(j + 1, n):
            sjk, _ = scattering_factors(xi[j] - xi[k], params)
            total *= sjk
            sjk, _ = scattering_factors(xi[j] + xi[k], params)
            total *= sjk
    for j in range(n):
        _, s0 = scattering_factors(xi[j], params)
        total *= s0
    return total
