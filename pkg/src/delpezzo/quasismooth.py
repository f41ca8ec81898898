"""Quasi-smoothness of the general degree-d hypersurface in P(w).

Three arithmetic conditions on (w, d) decide whether the general member is
quasi-smooth (smooth affine cone away from the origin):

  I.   each variable z_i admits a monomial z_i^{m_i} z_j of degree d,
  II.  each pair with gcd(w_i, w_j) > 1 admits a monomial z_i^a z_j^b,
  III. each pair admits either a pure monomial z_i^a z_j^b, or monomials
       z_i^a z_j^b z_k and z_i^c z_j^e z_l with {k, l} != {i, j}.

Condition III is implemented in two variants (see `condition_III`); the
default is fixed by the table regression in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .weights import WeightSystem, pair_has_monomial

# Pair-witness rule for condition III.  The literal reading of {k,l} != {i,j}
# permits k = l, so a single monomial (pair)*z_k suffices; the strict variant
# demands witnesses with both extra variables outside the pair.  The catalog
# regression is the arbiter between the two; literal reproduces the tables.
STRICT_PAIRS_DEFAULT = False


@dataclass(frozen=True)
class ConditionIWitness:
    """Minimal exponents m_i and partners j(i) with m_i*w_i + w_{j(i)} = d."""

    m: tuple[int, int, int, int]
    j: tuple[int, int, int, int]

    def check(self, w: WeightSystem, d: int) -> bool:
        return all(self.m[i] * w[i] + w[self.j[i]] == d for i in range(4))


def condition_I(w: WeightSystem, d: int) -> ConditionIWitness | None:
    """Minimal witness of condition I, or None if some variable has no monomial.

    For each i the witness takes the smallest m_i >= 1 with
    m_i*w_i + w_j = d for some j, ties broken by the smallest j.
    """
    ms = []
    js = []
    for i in range(4):
        best = None
        for j in range(4):
            r = d - w[j]
            if r >= w[i] and r % w[i] == 0:
                m = r // w[i]
                if best is None or m < best[0]:
                    best = (m, j)
        if best is None:
            return None
        ms.append(best[0])
        js.append(best[1])
    return ConditionIWitness(tuple(ms), tuple(js))


def condition_II(w: WeightSystem, d: int) -> bool:
    """Every pair with non-coprime weights must support a pure pair monomial."""
    for i in range(4):
        for j in range(i + 1, 4):
            if gcd(w[i], w[j]) > 1 and not pair_has_monomial(w[i], w[j], d):
                return False
    return True


def _pair_witness_extras(w: WeightSystem, d: int, i: int, j: int) -> set[int]:
    """Indices k outside {i,j} with a monomial z_i^a z_j^b z_k of degree d."""
    extras = set()
    for k in range(4):
        if k == i or k == j:
            continue
        if pair_has_monomial(w[i], w[j], d - w[k]):
            extras.add(k)
    return extras


def condition_III(w: WeightSystem, d: int, strict: bool = STRICT_PAIRS_DEFAULT) -> bool:
    """Pair condition ensuring smoothness along coordinate axes.

    With strict=False (the literal set inequality {k,l} != {i,j}) one
    witness monomial z_i^a z_j^b z_k suffices when no pure pair monomial
    exists, since then k is forced outside {i,j} and the singleton {k}
    already differs from {i,j}.  With strict=True both extra variables
    must occur among the witnesses.
    """
    for i in range(4):
        for j in range(i + 1, 4):
            if pair_has_monomial(w[i], w[j], d):
                continue
            extras = _pair_witness_extras(w, d, i, j)
            if strict:
                if len(extras) < 2:
                    return False
            else:
                if not extras:
                    return False
    return True


def is_quasismooth(w: WeightSystem, d: int, strict: bool = STRICT_PAIRS_DEFAULT) -> bool:
    """Conjunction of conditions I, II, III for the general member."""
    return (
        condition_I(w, d) is not None
        and condition_II(w, d)
        and condition_III(w, d, strict=strict)
    )
