"""Partitions, signed permutations, and the hyperoctahedral dominance order.

A partition is a weakly decreasing tuple of nonnegative integers of fixed
length n; the empty tuple encodes the length-0 partition.  Partitions index
both the polynomial family and the states of the lattice model (the parts
are particle positions on the half line).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Part = int
Partition = tuple  # alias for documentation purposes; entries are ints


def is_partition(parts: Sequence[int]) -> bool:
    """True iff the sequence is weakly decreasing with nonnegative entries."""
    return all(isinstance(p, int) for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    ) and (len(parts) == 0 or parts[-1] >= 0)


def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate and freeze a partition given as any iterable of integers."""
    tup = tuple(int(p) for p in parts)
    if not is_partition(tup):
        raise ValueError(f"not a partition: {tup}")
    return tup


def multiplicity(lam: tuple[int, ...], l: int) -> int:
    """m_l(lam): the number of parts equal to l (0 for the empty partition)."""
    return lam.count(l)


def dominance_leq(mu: tuple[int, ...], lam: tuple[int, ...]) -> bool:
    """Hyperoctahedral dominance: all partial sums of mu bounded by lam's.

    Unlike ordinary dominance there is no equal-degree requirement, so
    partitions of different sizes can be comparable.
    """
    if len(mu) != len(lam):
        raise ValueError(f"length mismatch: {len(mu)} vs {len(lam)}")
    total_mu = 0
    total_lam = 0
    for a, b in zip(mu, lam):
        total_mu += a
        total_lam += b
        if total_mu > total_lam:
            return False
    return True


def enumerate_partitions(n: int, max_part: int) -> list[tuple[int, ...]]:
    """All length-n partitions with parts <= max_part, in graded lex order.

    The count is binomial(n + max_part, n).  Graded lex (total size first,
    then lexicographic) is the deterministic order used by every report.
    """
    if n < 0 or max_part < 0:
        raise ValueError("n and max_part must be nonnegative")

    def gen(length: int, bound: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for first in range(bound + 1):
            for rest in gen(length - 1, first):
                yield (first,) + rest

    return sorted(gen(n, max_part), key=lambda p: (sum(p), p))


def lower_set(lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All mu with mu <= lam in dominance order (lam included), graded lex."""
    n = len(lam)
    bound = lam[0] if lam else 0
    return [mu for mu in enumerate_partitions(n, bound) if dominance_leq(mu, lam)]


def orbit(lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    """The signed-permutation orbit of lam, duplicates removed, sorted."""
    images: set[tuple[int, ...]] = set()
    for perm in set(itertools.permutations(lam)):
        choices = [(v,) if v == 0 else (v, -v) for v in perm]
        for image in itertools.product(*choices):
            images.add(image)
    return sorted(images)


def add_part(lam: tuple[int, ...], l: int) -> tuple[int, ...]:
    """The partition obtained by inserting one part of size l."""
    if l < 0:
        raise ValueError("part must be nonnegative")
    return tuple(sorted(lam + (l,), reverse=True))


def remove_part(lam: tuple[int, ...], l: int) -> tuple[int, ...]:
    """Discard one part of size l; error if no such part exists."""
    if l not in lam:
        raise ValueError(f"partition {lam} has no part of size {l}")
    idx = lam.index(l)
    return lam[:idx] + lam[idx + 1 :]


def raise_indices(lam: tuple[int, ...]) -> list[int]:
    """0-based indices j where lam + e_j is still a partition."""
    return [j for j in range(len(lam)) if j == 0 or lam[j - 1] > lam[j]]


def lower_indices(lam: tuple[int, ...]) -> list[int]:
    """0-based indices j where lam - e_j is still a partition."""
    n = len(lam)
    return [
        j
        for j in range(n)
        if lam[j] >= 1 and (j == n - 1 or lam[j + 1] < lam[j])
    ]


def unit_step(lam: tuple[int, ...], j: int, step: int) -> tuple[int, ...]:
    """lam +- e_j, validated to stay inside the partition cone."""
    if step == 1:
        valid = j in raise_indices(lam)
    elif step == -1:
        valid = j in lower_indices(lam)
    else:
        raise ValueError("step must be +1 or -1")
    if not valid:
        raise ValueError(f"{lam} {'+' if step == 1 else '-'} e_{j} leaves the cone")
    return lam[:j] + (lam[j] + step,) + lam[j + 1 :]


@dataclass(frozen=True)
class SignedPermutation:
    """Element (sigma, eps) of the hyperoctahedral group on n letters.

    perm is the 0-based image tuple of sigma; signs are +-1.  Acting on a
    vector v produces w with w[perm[j]] = signs[j] * v[j], matching the
    variable substitution x_j -> x_{sigma_j}^{eps_j}.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"perm {self.perm} is not a bijection on 0..{n-1}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs {self.signs} must be +-1 of length {n}")

    @property
    def size(self) -> int:
        return len(self.perm)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Image of an integer (exponent) vector."""
        if len(vector) != self.size:
            raise ValueError("vector length mismatch")
        out = [0] * self.size
        for j, v in enumerate(vector):
            out[self.perm[j]] = self.signs[j] * v
        return tuple(out)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)


def group_order(n: int) -> int:
    """|W| = 2^n n!."""
    return (2**n) * math.factorial(n)


def hyperoctahedral_group(n: int) -> Iterator[SignedPermutation]:
    """All 2^n n! signed permutations, in a fixed deterministic order."""
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(perm, signs)


def group_generators(n: int) -> list[SignedPermutation]:
    """Adjacent transpositions plus one sign flip; they generate the group."""
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(SignedPermutation(tuple(perm), (1,) * n))
    if n >= 1:
        signs = [1] * n
        signs[n - 1] = -1
        gens.append(SignedPermutation(tuple(range(n)), tuple(signs)))
    return gens
