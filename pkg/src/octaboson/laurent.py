"""Exact multivariate Laurent-polynomial arithmetic over the rationals.

A polynomial is a finite map from integer exponent vectors (entries may be
negative) to nonzero ``fractions.Fraction`` coefficients.  The variable x_j
stands for the unit-circle exponential e^{i xi_j}, so exponent vectors are
the frequencies of trigonometric polynomials and the signed-permutation
action on variables is dual to the action on the angles xi.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

from .partitions import SignedPermutation, hyperoctahedral_group


class NotDivisibleError(ArithmeticError):
    """Exact division failed; carries the nonzero remainder as evidence."""

    def __init__(self, message: str, remainder: "LaurentPoly | None" = None):
        super().__init__(message)
        self.remainder = remainder


def _as_coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"coefficients must be rational, got {type(value).__name__}")


class LaurentPoly:
    """Immutable-by-convention Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} has length != {nvars}")
                c = _as_coeff(coeff)
                if c != 0:
                    clean[exp] = c
        self.nvars = nvars
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: _as_coeff(value)})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, nvars: int, exp: Sequence[int], coeff=1) -> "LaurentPoly":
        return cls(nvars, {tuple(exp): _as_coeff(coeff)})

    @classmethod
    def variable(cls, nvars: int, j: int, power: int = 1) -> "LaurentPoly":
        exp = [0] * nvars
        exp[j] = power
        return cls.monomial(nvars, exp)

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return "LaurentPoly(0)"
        bits = []
        for exp in sorted(self.terms):
            bits.append(f"{self.terms[exp]}*x^{list(exp)}")
        return "LaurentPoly(" + " + ".join(bits) + ")"

    def _check_same_ring(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, Rational):
            other = LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_ring(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            new = terms.get(exp, Fraction(0)) + c
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, Rational):
            other = LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, Rational):
            c = _as_coeff(other)
            out = LaurentPoly.__new__(LaurentPoly)
            out.nvars = self.nvars
            out.terms = {} if c == 0 else {e: v * c for e, v in self.terms.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_ring(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exp, Fraction(0)) + c1 * c2
                if new:
                    terms[exp] = new
                else:
                    terms.pop(exp, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if not isinstance(power, int) or power < 0:
            raise ValueError("only nonnegative integer powers")
        result = LaurentPoly.one(self.nvars)
        base = self
        n = power
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, exp: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial x^exp."""
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError("shift vector length mismatch")
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = {
            tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()
        }
        return out

    # -- evaluation ---------------------------------------------------

    def evaluate(self, point: Sequence[complex]) -> complex:
        """Numerical evaluation at nonzero complex coordinates."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        pt = [complex(z) for z in point]
        for j, z in enumerate(pt):
            if z == 0 and any(e[j] < 0 for e in self.terms):
                raise ZeroDivisionError(f"coordinate {j} is zero but appears inverted")
        total = 0j
        for exp, coeff in self.terms.items():
            value = complex(coeff)
            for z, e in zip(pt, exp):
                if e:
                    value *= z**e
            total += value
        return total

    def evaluate_exact(self, point: Sequence[Fraction]) -> Fraction:
        """Exact evaluation at nonzero rational coordinates."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        pt = [Fraction(z) for z in point]
        for j, z in enumerate(pt):
            if z == 0 and any(e[j] < 0 for e in self.terms):
                raise ZeroDivisionError(f"coordinate {j} is zero but appears inverted")
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            value = coeff
            for z, e in zip(pt, exp):
                if e:
                    value *= z**e
            total += value
        return total


# ---------------------------------------------------------------------------
# Group action and symmetrization
# ---------------------------------------------------------------------------


def apply_w(w: SignedPermutation, p: LaurentPoly) -> LaurentPoly:
    """Variable substitution x_j -> x_{sigma_j}^{eps_j}; a ring automorphism."""
    if w.size != p.nvars:
        raise ValueError(f"group element size {w.size} != nvars {p.nvars}")
    out = LaurentPoly.__new__(LaurentPoly)
    out.nvars = p.nvars
    out.terms = {w.apply(exp): c for exp, c in p.terms.items()}
    return out


def symmetrize_w(p: LaurentPoly) -> LaurentPoly:
    """Plain orbit sum over the full hyperoctahedral group (no averaging)."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for w in hyperoctahedral_group(p.nvars):
        for exp, c in p.terms.items():
            key = w.apply(exp)
            new = terms.get(key, Fraction(0)) + c
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
    out = LaurentPoly.__new__(LaurentPoly)
    out.nvars = p.nvars
    out.terms = terms
    return out


# ---------------------------------------------------------------------------
# Exact division
# ---------------------------------------------------------------------------


def _min_exponents(p: LaurentPoly) -> tuple[int, ...]:
    mins = [0] * p.nvars
    first = True
    for exp in p.terms:
        if first:
            mins = list(exp)
            first = False
        else:
            for i, e in enumerate(exp):
                if e < mins[i]:
                    mins[i] = e
    return tuple(mins)


def _heap_key(exp: tuple[int, ...]) -> tuple:
    # Min-heap key whose minimum is the graded-lex maximum.
    return (-sum(exp), tuple(-e for e in exp))


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient a/b; raises NotDivisibleError on a nonzero remainder.

    Both operands are shifted by monomials into ordinary polynomials, then
    divided by the single divisor b using graded-lex ordering.  For Laurent
    polynomials this decides divisibility: the quotient of the shifted
    operands, when it exists, has nonnegative exponents.
    """
    a._check_same_ring(b)
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return LaurentPoly.zero(a.nvars)

    shift_a = _min_exponents(a)
    shift_b = _min_exponents(b)
    ra = {tuple(e - s for e, s in zip(exp, shift_a)): c for exp, c in a.terms.items()}
    rb = {tuple(e - s for e, s in zip(exp, shift_b)): c for exp, c in b.terms.items()}

    lead_b = min(rb, key=_heap_key)
    cb = rb[lead_b]

    quotient: dict[tuple[int, ...], Fraction] = {}
    remainder: dict[tuple[int, ...], Fraction] = {}
    heap = [_heap_key(e) + (e,) for e in ra]
    heapq.heapify(heap)
    scheduled = set(ra)

    while heap:
        entry = heapq.heappop(heap)
        exp = entry[-1]
        scheduled.discard(exp)
        coeff = ra.get(exp)
        if not coeff:
            continue
        mono = tuple(e - f for e, f in zip(exp, lead_b))
        if any(m < 0 for m in mono):
            remainder[exp] = ra.pop(exp)
            continue
        factor = coeff / cb
        quotient[mono] = quotient.get(mono, Fraction(0)) + factor
        for eb, c in rb.items():
            key = tuple(m + e for m, e in zip(mono, eb))
            new = ra.get(key, Fraction(0)) - factor * c
            if new:
                ra[key] = new
                if key not in scheduled:
                    scheduled.add(key)
                    heapq.heappush(heap, _heap_key(key) + (key,))
            else:
                ra.pop(key, None)

    if remainder:
        rem = LaurentPoly(
            a.nvars,
            {tuple(e + s for e, s in zip(exp, shift_a)): c for exp, c in remainder.items()},
        )
        raise NotDivisibleError("polynomials do not divide exactly", remainder=rem)

    unshift = tuple(sa - sb for sa, sb in zip(shift_a, shift_b))
    return LaurentPoly(
        a.nvars,
        {tuple(e + s for e, s in zip(exp, unshift)): c for exp, c in quotient.items()},
    )


def div_binomial_exact(p: LaurentPoly, alpha: Sequence[int]) -> LaurentPoly:
    """Exact quotient p / (1 - x^alpha) via the recurrence q[m] = p[m] + q[m-alpha].

    Positions are processed in increasing <m, alpha> order, so q[m - alpha]
    is always available.  Exactness forces <m, alpha> <= max over p minus
    |alpha|^2 for every quotient term; any nonzero coefficient past that
    bound proves the division inexact.
    """
    alpha = tuple(alpha)
    if len(alpha) != p.nvars:
        raise ValueError("alpha length mismatch")
    if all(a == 0 for a in alpha):
        raise ZeroDivisionError("binomial divisor degenerates to zero")
    if p.is_zero:
        return p

    def height(exp: tuple[int, ...]) -> int:
        return sum(e * a for e, a in zip(exp, alpha))

    bound = max(height(e) for e in p.terms) - sum(a * a for a in alpha)
    quotient: dict[tuple[int, ...], Fraction] = {}
    heap = [(height(e), e) for e in p.terms]
    heapq.heapify(heap)
    scheduled = set(p.terms)

    while heap:
        h, exp = heapq.heappop(heap)
        scheduled.discard(exp)
        prev = tuple(e - a for e, a in zip(exp, alpha))
        value = p.terms.get(exp, Fraction(0)) + quotient.get(prev, Fraction(0))
        if value == 0:
            continue
        if h > bound:
            raise NotDivisibleError(
                "polynomial is not divisible by the binomial factor",
                remainder=LaurentPoly.monomial(p.nvars, exp, value),
            )
        quotient[exp] = value
        nxt = tuple(e + a for e, a in zip(exp, alpha))
        if nxt not in scheduled:
            scheduled.add(nxt)
            heapq.heappush(heap, (h + sum(a * a for a in alpha), nxt))

    return LaurentPoly(p.nvars, quotient)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def to_json_dict(p: LaurentPoly) -> dict:
    """JSON form with big integers as decimal strings, terms sorted."""
    return {
        "nvars": p.nvars,
        "terms": [
            {
                "exp": list(exp),
                "num": str(p.terms[exp].numerator),
                "den": str(p.terms[exp].denominator),
            }
            for exp in sorted(p.terms)
        ],
    }


def from_json_dict(data: Mapping) -> LaurentPoly:
    terms = {
        tuple(item["exp"]): Fraction(int(item["num"]), int(item["den"]))
        for item in data["terms"]
    }
    return LaurentPoly(int(data["nvars"]), terms)
