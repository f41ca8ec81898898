"""Weight systems, weighted monomial enumeration, degree/index bookkeeping.

A weight system is an ascending primitive 4-tuple of positive integers
(w0, w1, w2, w3).  A degree-d hypersurface in the corresponding weighted
projective 3-space has Fano index I = w0+w1+w2+w3 - d.  All arithmetic in
this module is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NonPrimitiveWeights

# Exponent vector (a0, a1, a2, a3) of a monomial z0^a0 z1^a1 z2^a2 z3^a3.
ExponentVector = tuple[int, int, int, int]


@dataclass(frozen=True, order=True)
class WeightSystem:
    """Four ascending positive integer weights with gcd 1."""

    w: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.w) != 4:
            raise ValueError(f"need exactly four weights, got {self.w!r}")
        if any(x < 1 for x in self.w):
            raise ValueError(f"weights must be positive, got {self.w!r}")
        if list(self.w) != sorted(self.w):
            raise ValueError(f"weights must be ascending, got {self.w!r}")
        if gcd(*self.w) != 1:
            raise NonPrimitiveWeights(
                f"weights {self.w!r} have common factor {gcd(*self.w)}"
            )

    @property
    def total(self) -> int:
        return sum(self.w)

    def __getitem__(self, i: int) -> int:
        return self.w[i]

    def __iter__(self):
        return iter(self.w)

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.w)


def normalize_weights(raw) -> WeightSystem:
    """Sort a 4-tuple of positive integers into a canonical WeightSystem.

    Non-primitive input (all four sharing a factor) is rejected rather than
    rescaled, so that caller bugs are not silently masked.
    """
    t = tuple(int(x) for x in raw)
    if len(t) != 4:
        raise ValueError(f"need exactly four weights, got {raw!r}")
    if any(x < 1 for x in t):
        raise ValueError(f"weights must be positive, got {raw!r}")
    return WeightSystem(tuple(sorted(t)))


@dataclass(frozen=True)
class Candidate:
    """A degree-d hypersurface family in P(w) with its Fano index I = |w| - d.

    Degrees equal to a weight (linear cones) are excluded: d > w3 is
    required, which rules out every d = w_i since the weights ascend.
    """

    weights: WeightSystem
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"degree must be positive, got {self.d}")
        if self.I < 1:
            raise ValueError(
                f"index {self.I} < 1 for weights {self.weights} degree {self.d}"
            )
        if self.d <= self.weights[3]:
            raise ValueError(
                f"degree {self.d} <= largest weight {self.weights[3]}: linear cone "
                f"or empty monomial space, excluded"
            )

    @property
    def I(self) -> int:
        return self.weights.total - self.d

    @classmethod
    def from_index(cls, weights: WeightSystem, index: int) -> "Candidate":
        return cls(weights, weights.total - index)

    def key(self) -> tuple:
        """Canonical sort key: index ascending, then weights, then degree."""
        return (self.I, self.weights.w, self.d)

    def __str__(self) -> str:
        return f"{self.weights} d={self.d} I={self.I}"


def fano_index(w: WeightSystem, d: int) -> int:
    """|w| - d; may be <= 0, in which case no Candidate exists."""
    return w.total - d


def monomials_of_degree(w: WeightSystem, d: int) -> list[ExponentVector]:
    """All exponent vectors with a0*w0 + ... + a3*w3 = d.

    Ordered with the highest-index variable outermost: the emitted sequence
    is ascending in (a3, a2, a1).  Deterministic, so serialized artifacts
    are byte-stable.
    """
    if d < 0:
        return []
    w0, w1, w2, w3 = w.w
    out: list[ExponentVector] = []
    for a3 in range(d // w3 + 1):
        r3 = d - a3 * w3
        for a2 in range(r3 // w2 + 1):
            r2 = r3 - a2 * w2
            for a1 in range(r2 // w1 + 1):
                r1 = r2 - a1 * w1
                if r1 % w0 == 0:
                    out.append((r1 // w0, a1, a2, a3))
    return out


def count_monomials(w: WeightSystem, d: int) -> int:
    """len(monomials_of_degree(w, d)) without building the list."""
    if d < 0:
        return 0
    w0, w1, w2, w3 = w.w
    n = 0
    for a3 in range(d // w3 + 1):
        r3 = d - a3 * w3
        for a2 in range(r3 // w2 + 1):
            r2 = r3 - a2 * w2
            for a1 in range(r2 // w1 + 1):
                if (r2 - a1 * w1) % w0 == 0:
                    n += 1
    return n


def is_well_formed(w: WeightSystem) -> bool:
    """True iff every triple of weights is coprime (no codimension-1 singularities)."""
    a, b, c, e = w.w
    return (
        gcd(a, b, c) == 1
        and gcd(a, b, e) == 1
        and gcd(a, c, e) == 1
        and gcd(b, c, e) == 1
    )


def pair_has_monomial(wi: int, wj: int, d: int) -> bool:
    """Does a*wi + b*wj = d have a solution in non-negative integers?"""
    if d < 0:
        return False
    g = gcd(wi, wj)
    if d % g:
        return False
    for b in range(d // wj + 1):
        if (d - b * wj) % wi == 0:
            return True
    return False
