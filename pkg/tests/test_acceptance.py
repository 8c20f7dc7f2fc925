"""Acceptance suite: one test per criterion, each printing a pass/fail line.

All arithmetic in the package is exact, so every comparison below is exact
equality (tolerance zero).  Run with ``pytest -v -s tests/test_acceptance.py``
to see the per-criterion lines as they complete.
"""

import itertools
import math
import random

import pytest

from mbsurf import (
    Case1Witness,
    Genus0Verdict,
    IntegerMatrix,
    ObstructionVerdict,
    case1_bruteforce,
    case1_decide,
    construct_certificate,
    genus0_report,
    h1_formula,
    homology_h1,
    lemma_witness,
    linking_matrix_of_braid,
    make_xg,
    s3_obstruction,
    slopes_from_witness,
    smith_normal_form,
    witness_sums,
)


def _report(number: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {number} [{name}]: {status}{suffix}")
    assert ok, f"criterion {number} ({name}) failed{suffix}"


def _family_sweep():
    for genus in range(6):
        for n in (1, 2, 3):
            for degrees in itertools.product(range(2, 13), repeat=n):
                yield genus, degrees


@pytest.fixture(scope="module")
def coprime_triples_50():
    return [
        (a, b, c)
        for a, b, c in itertools.product(range(2, 51), repeat=3)
        if math.gcd(a, b, c) == 1
    ]


def test_criterion_1_homology_formula_equivalence():
    checked = 0
    ok = True
    for genus, degrees in _family_sweep():
        if homology_h1(make_xg(genus, degrees)) != h1_formula(genus, degrees):
            ok = False
            break
        checked += 1
    _report(1, "homology formula equivalence", ok, f"{checked} family members")


def test_criterion_2_torsion_obstruction():
    checked = 0
    ok = True
    for genus, degrees in _family_sweep():
        report = s3_obstruction(make_xg(genus, degrees))
        obstructed = report.verdict is ObstructionVerdict.OBSTRUCTED_IN_S3
        if obstructed != (math.gcd(*degrees) > 1) or not report.regular:
            ok = False
            break
        checked += 1
    _report(2, "torsion obstruction", ok, f"{checked} family members")


def test_criterion_3_lemma_witness_exhaustive(coprime_triples_50):
    ok = True
    for a, b, c in coprime_triples_50:
        n1, n2, n3 = witness_sums(a, b, c, *lemma_witness(a, b, c))
        if math.gcd(a, n1) != 1 or math.gcd(b, n2) != 1 or math.gcd(c, n3) != 1:
            ok = False
            break
    _report(3, "gcd-1 witness conditions", ok, f"{len(coprime_triples_50)} triples")


def test_criterion_4_certificate_exhaustive(coprime_triples_50):
    ok = True
    for p1, p2, p3 in coprime_triples_50:
        cert = construct_certificate(p1, p2, p3)
        q1, q2, q3 = cert.slopes
        if cert.linking_sums() != (0, 0, 0):
            ok = False
            break
        if math.gcd(p1, q1) != 1 or math.gcd(p2, q2) != 1 or math.gcd(p3, q3) != 1:
            ok = False
            break
        if linking_matrix_of_braid(cert.braid) != cert.linking:
            ok = False
            break
    _report(4, "embedding certificates", ok, f"{len(coprime_triples_50)} triples")


def test_criterion_5_5_7_18_reproduction():
    decision = genus0_report(5, 7, 18)
    ok = decision.verdict is Genus0Verdict.NO_CASE1_OR_CASE2
    for assignment in decision.assignments:
        ok = ok and assignment.case1 is None and assignment.case2 is None
        eps_seen = {ev.eps for ev in assignment.case1_exhaustion}
        ok = ok and eps_seen == {1, -1}
        ok = ok and case1_bruteforce(assignment.p1, assignment.p2, assignment.p3, 1000) is None
    _report(5, "{5,7,18} has no Case 1 or Case 2 realization", ok)


def test_criterion_6_oracle_equivalence():
    ok = True
    mismatch = ""
    checked = 0
    for p1, p2, p3 in itertools.product(range(2, 31), repeat=3):
        decided = case1_decide(p1, p2, p3)
        scanned = case1_bruteforce(p1, p2, p3, 1000)
        if (decided is None) != (scanned is None):
            ok = False
            mismatch = f"existence mismatch at {(p1, p2, p3)}"
            break
        for witness in (decided, scanned):
            if witness is None:
                continue
            r, s, eps = witness
            if eps not in (1, -1) or s * p2 + r * p3 + s * r * p1 != eps:
                ok = False
                mismatch = f"invalid witness {witness} at {(p1, p2, p3)}"
                break
        if not ok:
            break
        checked += 1
    _report(6, "divisor decision matches brute-force oracle", ok, mismatch or f"{checked} triples")


def _xgcd(a, b):
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        quotient = g // next_g
        x, next_x = next_x, x - quotient * next_x
        y, next_y = next_y, y - quotient * next_y
        g, next_g = next_g, g - quotient * next_g
    return x, y, g


def test_criterion_7_slope_identity():
    rng = random.Random(20250810)
    ok = True
    produced = 0
    while produced < 1000:
        r = rng.randint(-50, 50)
        s = rng.randint(-50, 50)
        if math.gcd(r, s) != 1:
            continue
        x, y, _ = _xgcd(s, r)
        eps = rng.choice((1, -1))
        p, q = eps * x, -eps * y
        shift = rng.randint(-3, 3)
        p, q = p + shift * r, q + shift * s
        if abs(p) > 50 or abs(q) > 50:
            continue
        witness = Case1Witness(p, q, r, s, rng.randint(-50, 50), rng.randint(-50, 50))
        produced += 1

        data = slopes_from_witness(witness)
        m1, m2, m3 = (pair[0] for pair in data.raw)
        identity = witness.s * m2 + witness.r * m3 + witness.s * witness.r * m1
        if identity != witness.determinant:
            ok = False
            break
        if any(math.gcd(lam, mu) != 1 for lam, mu in data.raw[1:]):
            ok = False
            break
    _report(7, "slope identity and coprimality", ok, f"{produced} random witnesses")


def _laplace_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, value in enumerate(rows[0]):
        if value:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * value * _laplace_det(minor)
    return total


def test_criterion_8_snf_contract():
    rng = random.Random(1729)
    ok = True
    for _ in range(500):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        matrix = IntegerMatrix(
            [[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)]
        )
        d, u, v = smith_normal_form(matrix)
        if (u @ matrix @ v) != d:
            ok = False
            break
        if _laplace_det(u.entries) not in (1, -1) or _laplace_det(v.entries) not in (1, -1):
            ok = False
            break
        diag = d.diagonal()
        if any(x < 0 for x in diag):
            ok = False
            break
        for a, b in zip(diag, diag[1:]):
            if not ((a == 0 and b == 0) or (a != 0 and b % a == 0)):
                ok = False
                break
        else:
            continue
        break
    _report(8, "Smith normal form contract", ok, "500 random matrices")
