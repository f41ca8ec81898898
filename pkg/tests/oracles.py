"""Independent brute-force oracles the implementation must agree with.

Everything here deliberately avoids the package's algebra: the divisor
oracle works with explicit root-of-unity multisets in Z[Z/L], and the
monomial oracle counts lattice points by blunt iteration.
"""

from fractions import Fraction
from math import gcd, lcm

from delpezzo.topology import VirtualCharacter, reduced_ratios


def roots_vector(char: VirtualCharacter, L: int) -> list[Fraction]:
    """Multiplicity of each L-th root of unity in a virtual character."""
    out = [Fraction(0)] * L
    for n, c in char.coeffs.items():
        assert L % n == 0, (n, L)
        step = L // n
        for j in range(n):
            out[j * step] += c
    return out


def divisor_roots_oracle(candidate) -> list[Fraction]:
    """Expand the characteristic divisor as explicit root multiplicities.

    Each factor (Lambda_u / v - 1) contributes the multiset of all u-th
    roots of unity with weight 1/v minus the trivial root; the product is
    convolution in the group ring Q[Z/L].
    """
    ratios = reduced_ratios(candidate)
    L = lcm(*(u for u, _ in ratios))
    acc = [Fraction(0)] * L
    acc[0] = Fraction(1)
    for u, v in ratios:
        factor = [Fraction(0)] * L
        step = L // u
        for j in range(u):
            factor[j * step] += Fraction(1, v)
        factor[0] -= 1
        nxt = [Fraction(0)] * L
        for a, ca in enumerate(acc):
            if ca == 0:
                continue
            for b in range(0, L, step):  # factor supported on multiples of step
                cb = factor[b]
                if cb != 0:
                    nxt[(a + b) % L] += ca * cb
        acc = nxt
    return acc


def count_monomials_oracle(weights, d: int) -> int:
    """Count solutions of sum a_i w_i = d by nested iteration."""
    w0, w1, w2, w3 = weights
    count = 0
    for a3 in range(d // w3 + 1):
        for a2 in range((d - a3 * w3) // w2 + 1):
            rem = d - a3 * w3 - a2 * w2
            count += sum(1 for a1 in range(rem // w1 + 1) if (rem - a1 * w1) % w0 == 0)
    return count


def pair_solvable_oracle(wi: int, wj: int, d: int) -> bool:
    if d < 0:
        return False
    return any((d - b * wj) % wi == 0 for b in range(d // wj + 1))


def order_dividing(n: int, L: int) -> bool:
    return L % n == 0


def milnor_oracle(weights, d: int) -> Fraction:
    mu = Fraction(1)
    for w in weights:
        mu *= Fraction(d - w, w)
    return mu


def gcd4(*xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
