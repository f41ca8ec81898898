"""Kähler-Einstein sufficiency: exclusion gates, certificate cascade, local bound.

Two arithmetic gates (2I >= 3*w0, 2I = w0+w1) mark candidates for which the
log-terminality needed for the Kähler-Einstein construction provably fails.
Past the gates, three strict integer inequalities can certify existence:

  R1: 2*I*d < 3*w0*w1                        (unconditional)
  R2: 2*I*d < 3*w0*w2   if the line z0=z1=0 misses the general member
  R3: 2*I*d < 3*w0*w3   if the vertex (0,0,0,1) misses the general member

A candidate passing the gates but no rule stays Unknown; Unknown is a
first-class verdict, never collapsed to "not klt".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PreconditionError
from .quasismooth import is_quasismooth
from .weights import Candidate, WeightSystem, is_well_formed, pair_has_monomial

GATE_INDEX_VS_SMALLEST = "G1"  # 2I >= 3*w0
GATE_INDEX_PAIR_SUM = "G2"  # 2I = w0 + w1


@dataclass(frozen=True)
class NotKltGate:
    gate: str  # "G1" or "G2"

    def __str__(self) -> str:
        reason = "2I >= 3w0" if self.gate == GATE_INDEX_VS_SMALLEST else "2I = w0+w1"
        return f"NotKlt (gate {self.gate}: {reason})"


@dataclass(frozen=True)
class Certified:
    rule: str  # "R1", "R2" or "R3"
    lhs: int  # 2*I*d
    rhs: int  # 3*w0*w_i for the rule's weight

    def __post_init__(self):
        if not self.lhs < self.rhs:
            raise ValueError(f"certificate not strict: {self.lhs} < {self.rhs} fails")

    def __str__(self) -> str:
        return f"Certified (rule {self.rule}: {self.lhs} < {self.rhs})"


@dataclass(frozen=True)
class Unknown:
    def __str__(self) -> str:
        return "Unknown"


KltVerdict = Union[NotKltGate, Certified, Unknown]


def gate_check(c: Candidate) -> str | None:
    """First failing gate ("G1" before "G2"), or None if both pass."""
    w = c.weights
    if 2 * c.I >= 3 * w[0]:
        return GATE_INDEX_VS_SMALLEST
    if 2 * c.I == w[0] + w[1]:
        return GATE_INDEX_PAIR_SUM
    return None


def line_23_free(w: WeightSystem, d: int) -> bool:
    """True iff some z2^a z3^b has degree d, so z0=z1=0 is not contained."""
    return pair_has_monomial(w[2], w[3], d)


def vertex_3_free(w: WeightSystem, d: int) -> bool:
    """True iff w3 | d, so z3^(d/w3) keeps (0,0,0,1) off the general member."""
    return d % w[3] == 0


def certify_KE(c: Candidate) -> KltVerdict:
    """Run the gate checks, then the rule cascade R1, R2, R3 in order.

    Requires a well-formed quasi-smooth candidate; the verdict is undefined
    otherwise and the call is rejected.
    """
    w, d = c.weights, c.d
    if not is_well_formed(w):
        raise PreconditionError(f"{c}: weights are not well-formed")
    if not is_quasismooth(w, d):
        raise PreconditionError(f"{c}: general member is not quasi-smooth")
    gate = gate_check(c)
    if gate is not None:
        return NotKltGate(gate)
    lhs = 2 * c.I * d
    if lhs < 3 * w[0] * w[1]:
        return Certified("R1", lhs, 3 * w[0] * w[1])
    if line_23_free(w, d) and lhs < 3 * w[0] * w[2]:
        return Certified("R2", lhs, 3 * w[0] * w[2])
    if vertex_3_free(w, d) and lhs < 3 * w[0] * w[3]:
        return Certified("R3", lhs, 3 * w[0] * w[3])
    return Unknown()


def rule_triple(rule: str, w: WeightSystem) -> tuple[int, int, int]:
    """Weight triple of the local bound each cascade rule folds in.

    R1 comes from the generic bound with triple (w0,w1,w3), R2 from the
    line-free bound with (w0,w2,w3), R3 from the vertex-free bound with
    (w1,w2,w3); in each case the worst local order and alpha=2/3 are
    absorbed into the 2Id < 3*w0*w_i form.
    """
    if rule == "R1":
        return (w[0], w[1], w[3])
    if rule == "R2":
        return (w[0], w[2], w[3])
    if rule == "R3":
        return (w[1], w[2], w[3])
    raise ValueError(f"unknown rule {rule!r}")


@dataclass(frozen=True)
class KltLocalQuery:
    """Inputs of the local klt bound: alpha*ell*d*I < product of a weight triple."""

    alpha: Fraction
    ell: int
    d: int
    index: int
    triple: tuple[int, int, int]

    def __post_init__(self):
        if not (0 < self.alpha <= 1):
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.ell < 1:
            raise ValueError(f"local order must be positive, got {self.ell}")


def klt_local_bound(q: KltLocalQuery) -> bool:
    """Exact rational comparison alpha*ell*d*I < t0*t1*t2 (strict)."""
    lhs = q.alpha * q.ell * q.d * q.index
    rhs = q.triple[0] * q.triple[1] * q.triple[2]
    return lhs < rhs
