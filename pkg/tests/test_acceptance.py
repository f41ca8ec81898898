"""Acceptance suite: one test per criterion, each printing a PASS line.

Deviations between the recomputation and the printed tables are accepted
only where the catalog ships a verified erratum for them; everything else
must match exactly.
"""

import time
from fractions import Fraction
from math import gcd, lcm

from delpezzo import catalog
from delpezzo.klt import (
    Certified,
    KltLocalQuery,
    Unknown,
    certify_KE,
    klt_local_bound,
)
from delpezzo.moduli import aut_dimension, is_minimal_torus, monomial_dimension
from delpezzo.topology import (
    VirtualCharacter,
    char_mul,
    characteristic_divisor,
    diffeo_type,
    milnor_number,
    reduced_ratios,
)
from delpezzo.weights import Candidate, normalize_weights
from oracles import divisor_roots_oracle, roots_vector


def test_criterion_1_table1_reproduction(enumeration_150):
    records, elapsed = enumeration_150
    report = catalog.diff_against_reference(records)
    assert not report.missing, report.summary()
    assert not report.extra, report.summary()
    assert not report.mismatched, report.summary()
    # partition: every record is a sporadic row or a tagged series instance
    sporadic_keys = {(r.index, r.weights, r.degree) for r in catalog.reference_table1()}
    matched = 0
    series_instances = 0
    errata_instances = 0
    printed_ids = {f.id for f in catalog.reference_series()}
    for rec in records:
        key = (rec.candidate.I, rec.candidate.weights.w, rec.candidate.d)
        if rec.series_id in printed_ids:
            series_instances += 1
        elif rec.series_id is not None:
            errata_instances += 1
        else:
            assert key in sporadic_keys, rec.candidate
            matched += 1
    assert matched == 73
    assert errata_instances == 22  # (3,3k+1,3k+2,6k+1): k = 1 and 4..24
    assert elapsed < 600, f"single-threaded enumeration took {elapsed:.0f}s"
    print(
        f"\nACCEPTANCE 1 PASS: 73/73 sporadic rows, {series_instances} series "
        f"instances, {errata_instances} members of the documented omitted "
        f"family, 0 unexplained extras ({elapsed:.0f}s single-threaded)"
    )


def test_criterion_2_ke_column(enumeration_150):
    records, _ = enumeration_150
    by_key = {
        (r.candidate.I, r.candidate.weights.w, r.candidate.d): r for r in records
    }
    agree = 0
    for row in catalog.reference_table1():
        rec = by_key[(row.index, row.weights, row.degree)]
        assert rec.ke == row.ke, (row.weights, row.degree, rec.ke, row.ke)
        agree += 1
    assert agree == 73
    # near-equality rows the hand verification singled out
    assert certify_KE(Candidate(normalize_weights((5, 13, 19, 35)), 70)) == Certified(
        "R2", 280, 285
    )
    assert certify_KE(Candidate(normalize_weights((11, 13, 19, 25)), 63)) == Unknown()
    print("\nACCEPTANCE 2 PASS: certificate cascade matches the K-E column 73/73")


def test_criterion_3_topology_reproduction(enumeration_150):
    records, _ = enumeration_150
    errata = catalog.b2_errata()
    exact = 0
    documented = 0
    by_key = {
        (r.candidate.I, r.candidate.weights.w, r.candidate.d): r for r in records
    }
    for row in catalog.reference_table1():
        rec = by_key[(row.index, row.weights, row.degree)]
        err = errata.get((row.weights, row.degree))
        if err is None:
            assert rec.b2_orbifold == row.b2_printed, row
            exact += 1
        else:
            assert rec.b2_orbifold == err["computed"]["b2"], row
            documented += 1
    assert (exact, documented) == (69, 4)
    for fam in catalog.reference_series() + catalog.errata_series():
        for k in range(fam.k_min, fam.k_min + 5):
            c = fam.candidate_at(k)
            assert diffeo_type(c).b2_link + 1 == fam.b2_printed, (fam.id, k)
    # link-type column of the moduli table
    t3_exact = 0
    t3_documented = 0
    for row in catalog.reference_table3():
        if row.series_id:
            fam = next(f for f in catalog.reference_series() if f.id == row.series_id)
            c = fam.candidate_at(fam.k_min)
            assert diffeo_type(c).l == row.l_printed
            t3_exact += 1
            continue
        c = Candidate(normalize_weights(row.weights), row.degree)
        err = errata.get((tuple(row.weights), row.degree))
        link = diffeo_type(c).l
        if err is None:
            assert link == row.l_printed, row
            t3_exact += 1
        else:
            assert link == err["computed"]["l"], row
            t3_documented += 1
    assert (t3_exact, t3_documented) == (14, 2)
    print(
        "\nACCEPTANCE 3 PASS: orbifold b2 matches 69/73 printed cells exactly, "
        "4 verified errata; all series families match at first five k; "
        "link column 14/16 exact + 2 errata"
    )


def test_criterion_4_milnor_orlik_cross_checks(enumeration_150):
    records, _ = enumeration_150
    checked_oracle = 0
    for rec in records:
        c = rec.candidate
        div = characteristic_divisor(c)
        mu = milnor_number(c)
        assert div.degree_sum() == mu, c
        assert div.coeff(1) == 1, c
        assert div.is_integral(), c
        order = lcm(*(u for u, _ in reduced_ratios(c)))
        if order <= 10**4:
            oracle = divisor_roots_oracle(c)
            assert roots_vector(div, order) == oracle, c
            assert oracle[0] == rec.b2_link
            assert sum(oracle) == mu
            checked_oracle += 1
    assert checked_oracle == len(records)  # every enumerated order is small
    print(
        f"\nACCEPTANCE 4 PASS: divisor degree, unit coefficient, integrality "
        f"and the root-of-unity oracle agree on all {len(records)} records"
    )


def test_criterion_5_moduli_reproduction():
    errata = catalog.moduli_errata()
    exact = 0
    documented = []
    for row in catalog.reference_table3():
        if row.series_id:
            fam = next(f for f in catalog.reference_series() if f.id == row.series_id)
            values = set()
            for k in range(fam.k_min, fam.k_min + 5):
                c = fam.candidate_at(k)
                m = monomial_dimension(c)
                values.add((m, m - aut_dimension(c.weights)))
            assert values == {(12, 4)}  # printed n = 5: documented discrepancy
            documented.append("series row: computed (m=12, n=4) vs printed n=5")
            continue
        c = Candidate(normalize_weights(row.weights), row.degree)
        m = monomial_dimension(c)
        n = m - aut_dimension(c.weights)
        err = errata.get((tuple(row.weights), row.degree))
        if err is None:
            assert (m, n) == (row.m_printed, row.n_printed), row
            exact += 1
        else:
            assert (m, n) == (err["computed"]["m"], err["computed"]["n"]), row
            documented.append(err["id"])
    assert exact == 12 and len(documented) == 4
    # the worked classical anchors
    anchors = [
        ((1, 1, 1, 1), 3, 20, 4),
        ((1, 1, 1, 2), 4, 22, 6),
        ((1, 1, 2, 3), 6, 23, 8),
    ]
    for w, d, m, n in anchors:
        c = Candidate(normalize_weights(w), d)
        assert monomial_dimension(c) == m
        assert m - aut_dimension(c.weights) == n
    assert aut_dimension(normalize_weights((1, 1, 2, 3))) == 15
    print(
        "\nACCEPTANCE 5 PASS: (m, n) matches 12/15 sporadic moduli rows exactly; "
        "series row reports computed (m=12, n=4) against printed n=5; "
        "3 further rows carry verified errata; classical anchors exact"
    )


def test_criterion_6_theorem_a_tally(enumeration_150):
    records, _ = enumeration_150
    tally = catalog.theorem_a_tally(records)
    ok, lines = catalog.compare_theorem_a(tally)
    assert ok, "\n".join(lines)
    # the S^2 x S^3 bucket: exactly 14 certified rigid structures
    assert tally[1].rigid == 14
    assert tally[1].families == {} and tally[1].series == []
    # stated l=3 content {n=2 x2, n=1 x4} + 1 series: after the verified
    # errata the two 2-parameter rows are 1-parameter and a relocated row
    # joins, giving 7 one-parameter entries + the same series family
    assert tally[3].rigid == 0
    assert tally[3].families == {1: 7}
    assert [sid for sid, _ in tally[3].series] == ["(6,6k+5,12k+8,18k+15)"]
    print("\nACCEPTANCE 6 PASS: tally matches the errata-adjusted expectation;")
    for line in lines:
        print("  " + line)


def test_criterion_7_oracle_equivalence(enumeration_150, structured_150, enumeration_60_both):
    records, _ = enumeration_150
    per_index = {}
    for rec in records:
        per_index.setdefault(rec.candidate.I, []).append(rec.key())
    for index in range(1, 11):
        skeys = [r.key() for r in structured_150[index]]
        assert per_index.get(index, []) == skeys, f"I={index} at w_max=150"
    brute60, structured60 = enumeration_60_both
    for index in range(1, 11):
        assert [r.key() for r in brute60[index]] == [
            r.key() for r in structured60[index]
        ], f"I={index} at w_max=60"
    from delpezzo.search import brute_force_enumerate, structured_enumerate

    for index in (11, 12):
        assert brute_force_enumerate(index, index, 150) == []
        assert structured_enumerate(index, 150) == []
    print(
        "\nACCEPTANCE 7 PASS: structured search equals the exhaustive oracle "
        "for I=1..10 at w_max 60 and 150; both empty at I=11, 12"
    )


def test_criterion_8_property_suites():
    t0 = time.monotonic()
    # exact multiplication: commutativity and associativity on random
    # sparse characters (deterministic sample, orders <= 60)
    import random

    rng = random.Random(20260810)
    chars = []
    for _ in range(40):
        coeffs = {
            rng.randint(1, 60): Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            for _ in range(rng.randint(1, 4))
        }
        chars.append(VirtualCharacter(coeffs))
    for _ in range(250):
        a, b, c = rng.sample(chars, 3)
        assert char_mul(a, b) == char_mul(b, a)
        assert char_mul(char_mul(a, b), c) == char_mul(a, char_mul(b, c))
    # strictness on the 2Id = 3*w0*w2 boundary family
    for k in range(1, 21):
        w = normalize_weights((4, 2 * k + 1, 4 * k + 2, 6 * k + 1))
        c = Candidate(w, 12 * k + 6)
        assert certify_KE(c) == Unknown(), k
    # minimal torus iff automorphism dimension 4: catalog rows plus fuzz
    for row in catalog.reference_table1():
        w = row.candidate().weights
        assert is_minimal_torus(w) is (aut_dimension(w) == 4)
    rng2 = random.Random(987)
    fuzzed = 0
    while fuzzed < 10**4:
        raw = tuple(rng2.randint(1, 60) for _ in range(4))
        if gcd(*raw) != 1:
            continue
        w = normalize_weights(raw)
        assert is_minimal_torus(w) is (aut_dimension(w) == 4), w
        fuzzed += 1
    # the local klt bound on the certified series, alpha = 5/7
    for k in range(1, 51):
        q = KltLocalQuery(
            alpha=Fraction(5, 7),
            ell=6 * k + 1,
            d=18 * k + 6,
            index=2,
            triple=(3, 6 * k + 1, 9 * k + 3),
        )
        assert klt_local_bound(q) is True
    elapsed = time.monotonic() - t0
    assert elapsed < 60, f"property suites took {elapsed:.1f}s"
    print(f"\nACCEPTANCE 8 PASS: property suites completed in {elapsed:.1f}s")
