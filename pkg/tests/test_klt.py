from fractions import Fraction

import pytest

from delpezzo.errors import PreconditionError
from delpezzo.klt import (
    Certified,
    KltLocalQuery,
    NotKltGate,
    Unknown,
    certify_KE,
    gate_check,
    klt_local_bound,
    line_23_free,
    rule_triple,
    vertex_3_free,
)
from delpezzo.weights import Candidate, normalize_weights


def cand(w, d):
    return Candidate(normalize_weights(w), d)


def test_gate_51_fires_for_small_w0():
    # (1,1,k,k) of degree 2k has index 2 and 2I = 4 >= 3*w0
    for k in (2, 3, 7):
        assert gate_check(cand((1, 1, k, k), 2 * k)) == "G1"


def test_gate_52_fires_for_pair_sum():
    # (I-n, I+n, w, w+n) instance with 3n < I so that gate G1 stays silent
    c = cand((3, 5, 5, 6), 15)  # I = 4, 2I = 8 = 3 + 5, and 8 < 9
    assert c.I == 4
    assert gate_check(c) == "G2"


def test_gate_order_51_before_52():
    # (1,3,5,6) at index 2 satisfies both 2I >= 3w0 and 2I = w0+w1;
    # the first check wins
    c = cand((1, 3, 5, 6), 13)
    assert c.I == 2
    assert 2 * c.I >= 3 * c.weights[0] and 2 * c.I == c.weights[0] + c.weights[1]
    assert gate_check(c) == "G1"


def test_no_gate():
    assert gate_check(cand((2, 3, 5, 9), 18)) is None


@pytest.mark.parametrize(
    "w,d,expected",
    [
        ((2, 3, 5, 9), 18, True),
        ((9, 11, 12, 17), 45, False),
        ((1, 1, 1, 1), 3, True),
    ],
)
def test_line_23_free(w, d, expected):
    assert line_23_free(normalize_weights(w), d) is expected


@pytest.mark.parametrize(
    "w,d,expected",
    [
        ((2, 3, 5, 9), 18, True),
        ((1, 2, 3, 5), 10, True),
        ((5, 7, 11, 13), 33, False),
    ],
)
def test_vertex_3_free(w, d, expected):
    assert vertex_3_free(normalize_weights(w), d) is expected


def test_certify_R3_after_R1_R2_fail():
    verdict = certify_KE(cand((2, 3, 5, 9), 18))
    assert verdict == Certified("R3", 36, 54)


def test_certify_unknown():
    assert certify_KE(cand((1, 2, 3, 5), 10)) == Unknown()


def test_certify_near_equality_rows():
    # 280 < 285 certifies; 630 < 627 fails, leaving the verdict open
    assert certify_KE(cand((5, 13, 19, 35), 70)) == Certified("R2", 280, 285)
    assert certify_KE(cand((11, 13, 19, 25), 63)) == Unknown()


def test_certify_gated():
    verdict = certify_KE(cand((1, 1, 4, 4), 8))
    assert verdict == NotKltGate("G1")


def test_certify_requires_quasismooth():
    with pytest.raises(PreconditionError):
        certify_KE(cand((2, 3, 4, 5), 13))


def test_boundary_equality_never_certifies():
    # the series (4,2k+1,4k+2,6k+1) sits exactly on 2Id = 3*w0*w2 for k >= 2;
    # strictness keeps every member unknown
    for k in range(1, 21):
        w = tuple(sorted((4, 2 * k + 1, 4 * k + 2, 6 * k + 1)))
        d = 12 * k + 6
        c = cand(w, d)
        assert c.I == 2
        verdict = certify_KE(c)
        assert verdict == Unknown(), (k, verdict)
        if k >= 2:
            assert 2 * c.I * d == 3 * c.weights[0] * c.weights[2]
            assert line_23_free(c.weights, d)


def test_cascade_certifies_two_series_for_all_k():
    for k in range(1, 30):
        c1 = cand((3, 3 * k + 1, 6 * k + 1, 9 * k + 3), 18 * k + 6)
        assert isinstance(certify_KE(c1), Certified)
        c2 = cand((6, 6 * k + 5, 12 * k + 8, 18 * k + 15), 36 * k + 30)
        assert isinstance(certify_KE(c2), Certified)


def test_rule_order_does_not_change_outcome():
    # evaluating the three inequalities independently must agree with the
    # cascade's certified-vs-unknown split
    rows = [
        ((2, 3, 5, 9), 18),
        ((1, 2, 3, 5), 10),
        ((5, 13, 19, 35), 70),
        ((13, 35, 81, 128), 256),
        ((7, 10, 15, 19), 45),
    ]
    for w, d in rows:
        c = cand(w, d)
        if gate_check(c) is not None:
            continue
        lhs = 2 * c.I * c.d
        ws = c.weights
        rules = [
            lhs < 3 * ws[0] * ws[1],
            line_23_free(ws, d) and lhs < 3 * ws[0] * ws[2],
            vertex_3_free(ws, d) and lhs < 3 * ws[0] * ws[3],
        ]
        verdict = certify_KE(c)
        assert isinstance(verdict, Certified) == any(rules)


def test_scaling_monotonicity_vs_local_bound():
    # a cascade certificate implies the local bound with alpha=2/3, ell=1
    # and the rule's weight triple
    for w, d in [((2, 3, 5, 9), 18), ((5, 13, 19, 35), 70), ((9, 15, 17, 20), 60)]:
        c = cand(w, d)
        verdict = certify_KE(c)
        assert isinstance(verdict, Certified)
        triple = rule_triple(verdict.rule, c.weights)
        q = KltLocalQuery(
            alpha=Fraction(2, 3), ell=1, d=c.d, index=c.I, triple=triple
        )
        assert klt_local_bound(q)


def test_local_bound_examples():
    # the (3,3k+1,6k+1,9k+3) singular-point computation at k=1
    q = KltLocalQuery(
        alpha=Fraction(5, 7), ell=7, d=24, index=2, triple=(3, 7, 12)
    )
    assert klt_local_bound(q) is True
    assert klt_local_bound(
        KltLocalQuery(alpha=Fraction(1), ell=1, d=1, index=1, triple=(1, 1, 1))
    ) is False
    assert klt_local_bound(
        KltLocalQuery(alpha=Fraction(2, 3), ell=1, d=3, index=1, triple=(1, 1, 1))
    ) is False


def test_local_bound_series_family():
    for k in range(1, 51):
        q = KltLocalQuery(
            alpha=Fraction(5, 7),
            ell=6 * k + 1,
            d=18 * k + 6,
            index=2,
            triple=(3, 6 * k + 1, 9 * k + 3),
        )
        assert klt_local_bound(q) is True


def test_local_query_validates_alpha():
    with pytest.raises(ValueError):
        KltLocalQuery(alpha=Fraction(3, 2), ell=1, d=1, index=1, triple=(1, 1, 1))
