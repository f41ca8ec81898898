"""Topology of the link: Milnor number, characteristic divisor, Betti number.

The 5-manifold link of the affine cone over a quasi-smooth member is
simply connected with torsion-free H2 when the weights are well-formed,
so its diffeomorphism type is S^5 # l(S^2 x S^3).  The integer l equals
the second Betti number of the link, which is read off the divisor of
the characteristic polynomial of the monodromy.

That divisor lives in the integral ring Z[C*] with basis elements L_n
("all n-th roots of unity"), multiplied by L_a * L_b = gcd(a,b) * L_lcm(a,b),
and equals the four-fold product of (L_{u_i}/v_i - 1) where d/w_i = u_i/v_i
in lowest terms.  Coefficients are rational mid-computation and provably
integral at the end; integrality is asserted, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import InvariantViolation, PreconditionError
from .quasismooth import is_quasismooth
from .weights import Candidate, is_well_formed


class VirtualCharacter:
    """Sparse element sum_n c_n * L_n of Z[C*] with exact rational c_n.

    L_1 is the multiplicative unit; zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        clean: dict[int, Fraction] = {}
        for n, c in (coeffs or {}).items():
            if n < 1:
                raise ValueError(f"character order must be positive, got {n}")
            c = Fraction(c)
            if c != 0:
                clean[int(n)] = c
        self.coeffs = clean

    @classmethod
    def lam(cls, n: int, coeff=1) -> "VirtualCharacter":
        return cls({n: Fraction(coeff)})

    @classmethod
    def one(cls) -> "VirtualCharacter":
        return cls({1: Fraction(1)})

    def coeff(self, n: int) -> Fraction:
        return self.coeffs.get(n, Fraction(0))

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, Fraction(0)) + c
        return VirtualCharacter(out)

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, Fraction(0)) - c
        return VirtualCharacter(out)

    def scaled(self, s) -> "VirtualCharacter":
        s = Fraction(s)
        return VirtualCharacter({n: c * s for n, c in self.coeffs.items()})

    def __mul__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return char_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, VirtualCharacter) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def coefficient_sum(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def degree_sum(self) -> Fraction:
        """sum_n n * c_n: the size of the underlying root-of-unity multiset."""
        return sum((Fraction(n) * c for n, c in self.coeffs.items()), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n in sorted(self.coeffs):
            c = self.coeffs[n]
            term = "1" if n == 1 else f"L{n}"
            if n > 1 and c == 1:
                coef = ""
            elif n > 1 and c == -1:
                coef = "-"
            else:
                coef = str(c) if c.denominator > 1 else str(c.numerator)
            txt = f"{coef}{term}" if n > 1 else str(c)
            if parts and not txt.startswith("-"):
                parts.append("+ " + txt)
            elif parts:
                parts.append("- " + txt[1:])
            else:
                parts.append(txt)
        return " ".join(parts)

    __repr__ = __str__


def char_mul(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    """Bilinear extension of L_a * L_b = gcd(a,b) * L_lcm(a,b)."""
    out: dict[int, Fraction] = {}
    for n, cn in a.coeffs.items():
        for m, cm in b.coeffs.items():
            k = lcm(n, m)
            out[k] = out.get(k, Fraction(0)) + cn * cm * gcd(n, m)
    return VirtualCharacter(out)


def reduced_ratios(c: Candidate) -> list[tuple[int, int]]:
    """d/w_i in lowest terms (u_i, v_i) for i = 0..3."""
    out = []
    for wi in c.weights:
        g = gcd(c.d, wi)
        out.append((c.d // g, wi // g))
    return out


def milnor_number(c: Candidate) -> int:
    """Product of (d/w_i - 1) over the four weights, checked to be integral."""
    mu = Fraction(1)
    for wi in c.weights:
        mu *= Fraction(c.d, wi) - 1
    if mu.denominator != 1 or mu <= 0:
        raise InvariantViolation(f"{c}: Milnor number {mu} is not a positive integer")
    return mu.numerator


def characteristic_divisor(c: Candidate) -> VirtualCharacter:
    """Expand the product of (L_{u_i}/v_i - 1) over the four reduced ratios.

    The result must have integral coefficients with L_1 coefficient exactly 1;
    anything else signals an invalid candidate upstream.
    """
    div = VirtualCharacter.one()
    for u, v in reduced_ratios(c):
        factor = VirtualCharacter.lam(u, Fraction(1, v)) - VirtualCharacter.one()
        div = char_mul(div, factor)
    if not div.is_integral():
        raise InvariantViolation(f"{c}: characteristic divisor {div} not integral")
    if div.coeff(1) != 1:
        raise InvariantViolation(f"{c}: divisor unit coefficient {div.coeff(1)} != 1")
    return div


def second_betti_link(c: Candidate) -> int:
    """Total coefficient sum of the characteristic divisor.

    Equals 1 + sum of the L_j coefficients for j >= 2, since the L_1
    coefficient is always 1.
    """
    b2 = characteristic_divisor(c).coefficient_sum()
    if b2.denominator != 1 or b2 < 0:
        raise InvariantViolation(f"{c}: link b2 = {b2} is not a non-negative integer")
    return b2.numerator


@dataclass(frozen=True)
class LinkReport:
    """Milnor number, characteristic divisor, and S^5 # l(S^2 x S^3) type."""

    mu: int
    divisor: VirtualCharacter
    b2_link: int
    l: int

    def __post_init__(self):
        if self.divisor.degree_sum() != self.mu:
            raise InvariantViolation(
                f"divisor degree {self.divisor.degree_sum()} != Milnor number {self.mu}"
            )
        if self.divisor.coefficient_sum() != self.b2_link:
            raise InvariantViolation(
                f"divisor mass {self.divisor.coefficient_sum()} != b2 {self.b2_link}"
            )
        if self.l != self.b2_link:
            raise InvariantViolation(f"l = {self.l} != b2 = {self.b2_link}")


def diffeo_type(c: Candidate) -> LinkReport:
    """Full link report; valid only when torsion vanishes and Smale applies.

    Requires well-formed weights and a quasi-smooth general member, which
    together guarantee H2 of the link is torsion-free.
    """
    if not is_well_formed(c.weights):
        raise PreconditionError(
            f"{c}: weights not well-formed, torsion-freeness not guaranteed"
        )
    if not is_quasismooth(c.weights, c.d):
        raise PreconditionError(
            f"{c}: not quasi-smooth, the link is not a smooth manifold"
        )
    div = characteristic_divisor(c)
    mu = milnor_number(c)
    b2 = second_betti_link(c)
    return LinkReport(mu=mu, divisor=div, b2_link=b2, l=b2)


def orbifold_b2(c: Candidate) -> int:
    """Second Betti number of the base orbifold: link b2 + 1.

    The classification tables print this number; the link itself realizes
    one less.
    """
    return diffeo_type(c).b2_link + 1
