"""
Exact closed forms for crossings of K_{m,n} in alternating circular drawings.

Everything here is integer or :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb
from typing import FrozenSet, Tuple

from .errors import InvalidInputError, PreconditionError
from .model import ArcProfile, CompleteBipartiteSpec


@dataclass(frozen=True)
class RationalBound:
    numerator: int
    denominator: int
    ceiling_value: int

    @classmethod
    def from_fraction(cls, q: Fraction) -> "RationalBound":
        return cls(q.numerator, q.denominator, ceil(q))

    @property
    def exact(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def binom(n: int, r: int) -> int:
    if n < 0 or r < 0:
        raise InvalidInputError("binom takes non-negative arguments")
    return comb(n, r)


def quadruple_count(m: int, n: int) -> int:
    """C(m,2) C(n,2): the number of pink-pair/black-pair quadruples."""
    return binom(m, 2) * binom(n, 2)


def theorem1_outerplanar(m: int, n: int) -> int:
    """Outerplanar crossing number of K_{m,n}, valid when ``m`` divides ``n``."""
    CompleteBipartiteSpec(m, n)
    if n % m:
        raise PreconditionError(f"formula holds only when m | n (got m={m}, n={n})")
    num = n * (m - 1) * (2 * m * n - 3 * m - n)
    q, r = divmod(num, 12)
    assert r == 0, "n(m-1)(2mn-3m-n) is divisible by 12 whenever m | n"
    return q


def theorem2_lower_bound(m: int, n: int, k: int) -> RationalBound:
    """Lower bound on crossings over drawings with 2k alternating arcs.

    C(m,2) C(n,2) - (k^4 - k^2) m^2 n^2 / (12 k^4), kept as an exact rational.
    """
    if k < 1:
        raise InvalidInputError(f"k must be >= 1 (got {k})")
    subtrahend = Fraction((k**4 - k**2) * m * m * n * n, 12 * k**4)
    return RationalBound.from_fraction(quadruple_count(m, n) - subtrahend)


def separated_black_pairs(i: int, j: int, k: int) -> FrozenSet[Tuple[int, int]]:
    """Black-arc index pairs split apart by pink arcs ``M_i`` and ``M_j``.

    Indices are 1-based.  ``s`` runs over ``i .. j-1`` and ``t`` over
    ``j .. i-1`` taken cyclically mod ``k``; the result has
    ``(j-i)(k-(j-i))`` elements.
    """
    if not (1 <= i < j <= k):
        raise InvalidInputError(f"need 1 <= i < j <= k, got i={i}, j={j}, k={k}")
    inside = range(i, j)
    outside = [((t - 1) % k) + 1 for t in range(j, i + k)]
    return frozenset((s, t) for s in inside for t in outside)


def eq1_subtrahend(profile: ArcProfile) -> int:
    """Number of quadruples whose colors alternate around the circle.

    Sum over pink-arc pairs ``i < j`` of ``m_i m_j`` times the black pairs
    separated by them.
    """
    k = profile.k
    pink, black = profile.pink, profile.black
    total = 0
    for i in range(1, k):
        for j in range(i + 1, k + 1):
            weight = pink[i - 1] * pink[j - 1]
            if not weight:
                continue
            total += weight * sum(
                black[s - 1] * black[t - 1] for s, t in separated_black_pairs(i, j, k)
            )
    return total


def eq1_crossings(spec: CompleteBipartiteSpec, profile: ArcProfile) -> int:
    profile.check(spec)
    return quadruple_count(spec.m, spec.n) - eq1_subtrahend(profile)


def cpr4_exact(m: int, n: int) -> int:
    """Minimum crossings over drawings with at most four alternating arcs."""
    CompleteBipartiteSpec(m, n)
    hm, hn = m // 2, n // 2
    return quadruple_count(m, n) - (m - hm) * hm * (n - hn) * hn
