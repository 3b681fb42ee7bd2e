"""Tests for vertex equation enumeration and the lemma audits.

The enumeration oracle is an independent full scan over the cube
p, q, r <= ceil(S / min(a, 1-a, 1)); the small-range audit oracle
re-runs each sweep with plain Fraction arithmetic.
"""
from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tilegate.errors import DomainError
from tilegate.vertex import (
    LEMMA4_EXCEPTIONS,
    AngleFamily,
    AuditReport,
    CornerOutcome,
    PointClass,
    PointKind,
    VertexSolution,
    allowed_angles,
    audit_lemma,
    corner_families,
    corner_has_only_p_gt_q,
    enumerate_solutions,
    point_target,
)


def oracle_solutions(target: Fraction, a: Fraction) -> set[tuple[int, int, int]]:
    # independent full-cube scan over the cleared-denominator equation
    d = math.lcm(a.denominator, target.denominator)
    ap, bq, cr, t = int(a * d), int((1 - a) * d), d, int(target * d)
    bound = math.ceil(target / min(a, 1 - a, Fraction(1))) + 1
    return {
        (p, q, r)
        for p in range(bound)
        for q in range(bound)
        for r in range(bound)
        if ap * p + bq * q + cr * r == t
    }


def angles(max_den=20):
    return st.fractions(
        min_value=Fraction(1, max_den), max_value=Fraction(max_den - 1, max_den),
        max_denominator=max_den,
    )


# -- enumerate_solutions --------------------------------------------------


def test_enumeration_examples():
    assert enumerate_solutions(Fraction(3, 2), Fraction(1, 4)) == (
        (0, 2, 0),
        (2, 0, 1),
        (3, 1, 0),
        (6, 0, 0),
    )
    assert enumerate_solutions(Fraction(3, 2), Fraction(1, 5)) == ()
    assert VertexSolution(0, 6, 0) in enumerate_solutions(Fraction(4), Fraction(1, 3))


@settings(max_examples=150, deadline=None)
@given(
    a=angles(),
    target=st.fractions(min_value=0, max_value=5, max_denominator=12),
)
def test_enumeration_matches_brute_force_oracle(a, target):
    got = enumerate_solutions(target, a)
    assert set(map(tuple, got)) == oracle_solutions(target, a)
    assert list(got) == sorted(got)


@settings(max_examples=100, deadline=None)
@given(a=angles(), target=st.fractions(min_value=0, max_value=5, max_denominator=12))
def test_solutions_satisfy_their_equation(a, target):
    for p, q, r in enumerate_solutions(target, a):
        assert p * a + q * (1 - a) + r == target
        assert p >= 0 and q >= 0 and r >= 0


def test_enumeration_domain_errors():
    with pytest.raises(DomainError):
        enumerate_solutions(Fraction(3, 2), Fraction(0))
    with pytest.raises(DomainError):
        enumerate_solutions(Fraction(3, 2), Fraction(1))
    with pytest.raises(DomainError):
        enumerate_solutions(Fraction(3, 2), Fraction(7, 5))
    with pytest.raises(DomainError):
        enumerate_solutions(Fraction(-1), Fraction(1, 4))


# -- point classes ---------------------------------------------------------


def test_point_targets():
    assert point_target(PointClass(PointKind.POLYGON_VERTEX), 8) == Fraction(3, 2)
    assert point_target(PointClass(PointKind.POLYGON_VERTEX), 5) == Fraction(6, 5)
    assert point_target(PointClass(PointKind.POLYGON_SIDE_INTERIOR), 8) == 2
    assert point_target(PointClass(PointKind.TRIANGLE_SIDE_INTERIOR, 1), 8) == 2
    assert point_target(PointClass(PointKind.TRIANGLE_SIDE_INTERIOR, 2), 17) == 0
    assert point_target(PointClass(PointKind.FREE_INTERIOR), 8) == 4
    assert point_target(PointClass(PointKind.FREE_INTERIOR), 200) == 4


def test_point_class_validation():
    with pytest.raises(DomainError):
        PointClass(PointKind.TRIANGLE_SIDE_INTERIOR, 0)
    with pytest.raises(DomainError):
        PointClass(PointKind.FREE_INTERIOR, 1)
    with pytest.raises(DomainError):
        point_target(PointClass(PointKind.FREE_INTERIOR), 4)
    assert str(PointClass(PointKind.TRIANGLE_SIDE_INTERIOR, 2)) == "TriangleSideInterior(2)"
    assert str(PointClass(PointKind.POLYGON_VERTEX)) == "PolygonVertex"


# -- corner families --------------------------------------------------------


def test_corner_families_examples():
    f1, f2 = corner_families(8)
    assert (f1.numerator, f2.numerator) == (Fraction(3, 2), Fraction(1, 2))
    f1, f2 = corner_families(5)
    assert (f1.numerator, f2.numerator) == (Fraction(6, 5), Fraction(1, 5))
    f1, f2 = corner_families(12)
    assert (f1.numerator, f2.numerator) == (Fraction(5, 3), Fraction(2, 3))
    with pytest.raises(DomainError):
        corner_families(4)


@settings(max_examples=100, deadline=None)
@given(n=st.integers(min_value=5, max_value=200), s=st.integers(min_value=1, max_value=50))
def test_family_membership_round_trip(n, s):
    for family in corner_families(n):
        a = family.member(s)
        assert family.parameter_for(a) == s
        assert (a <= Fraction(1, 2)) == (s >= family.min_feasible_s())


def test_family_non_membership():
    f1, f2 = corner_families(28)
    assert f2.parameter_for(Fraction(3, 7)) == 2
    assert f1.parameter_for(Fraction(3, 7)) is None
    assert f2.instance_label(2) == "(1-4/28)/2"
    assert f1.parameter_for(Fraction(0)) is None
    # s would be below 1
    assert f2.parameter_for(Fraction(12, 7)) is None


def test_allowed_angles():
    assert allowed_angles(8) == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 2))
    assert allowed_angles(5) == (Fraction(2, 5), Fraction(4, 5), Fraction(3, 5))
    assert allowed_angles(14) == (Fraction(1, 7), Fraction(2, 7), Fraction(3, 7))


# -- corner outcomes ---------------------------------------------------------


def test_corner_outcome_examples():
    assert corner_has_only_p_gt_q(8, Fraction(1, 8)) is CornerOutcome.ALL_STRICT
    assert corner_has_only_p_gt_q(8, Fraction(1, 5)) is CornerOutcome.NO_SOLUTIONS
    assert corner_has_only_p_gt_q(8, Fraction(1, 4)) is CornerOutcome.VIOLATION_EXISTS
    with pytest.raises(DomainError):
        corner_has_only_p_gt_q(8, Fraction(1, 2))
    with pytest.raises(DomainError):
        corner_has_only_p_gt_q(3, Fraction(1, 8))


@settings(max_examples=150, deadline=None)
@given(n=st.integers(min_value=5, max_value=60), a=angles())
def test_corner_outcome_consistent_with_enumeration(n, a):
    if not 0 < a < Fraction(1, 2):
        a = Fraction(1, 3 + a.denominator)
    sols = enumerate_solutions(2 - Fraction(4, n), a)
    outcome = corner_has_only_p_gt_q(n, a)
    if not sols:
        assert outcome is CornerOutcome.NO_SOLUTIONS
    elif all(s.p > s.q for s in sols):
        assert outcome is CornerOutcome.ALL_STRICT
    else:
        assert outcome is CornerOutcome.VIOLATION_EXISTS


def test_lemma3_family_members_never_violate():
    # a = 3/(2s) inside (0,1/2) must give AllStrict or NoSolutions for
    # S=3/2 -- except s=6, where the member is the excluded value 1/4
    for s in range(2, 101):
        a = Fraction(3, 2 * s)
        if not 0 < a < Fraction(1, 2) or a == Fraction(1, 4):
            continue
        sols = enumerate_solutions(Fraction(3, 2), a)
        assert all(sol.p > sol.q for sol in sols)
    assert corner_has_only_p_gt_q(8, Fraction(3, 12)) is CornerOutcome.VIOLATION_EXISTS


# -- audits -------------------------------------------------------------------


def naive_audit_l3(max_den):
    bad = []
    for v in range(3, max_den + 1):
        for u in range(1, v):
            a = Fraction(u, v)
            if a.denominator != v or not a < Fraction(1, 2) or a == Fraction(1, 4):
                continue
            sols = enumerate_solutions(Fraction(3, 2), a)
            for s in sols:
                if s.p <= s.q:
                    bad.append((a, s))
            if sols and (Fraction(3, 2) / a).denominator != 1:
                bad.append((a, None))
    return bad


def naive_audit_l4(max_den):
    bad = []
    for v in range(3, max_den + 1):
        for u in range(1, v):
            a = Fraction(u, v)
            if a.denominator != v or not a < Fraction(1, 2) or a in LEMMA4_EXCEPTIONS:
                continue
            for s in enumerate_solutions(Fraction(4), a):
                if s.p < s.q:
                    bad.append((a, s))
    return bad


def naive_audit_l5(ns, max_den):
    bad = []
    for n in ns:
        allowed = set(allowed_angles(n))
        f1, f2 = corner_families(n)
        for v in range(3, max_den + 1):
            for u in range(1, v):
                a = Fraction(u, v)
                if a.denominator != v or not a < Fraction(1, 2) or a in allowed:
                    continue
                sols = enumerate_solutions(2 - Fraction(4, n), a)
                for s in sols:
                    if s.p <= s.q:
                        bad.append((n, a, s))
                if sols and f1.parameter_for(a) is None and f2.parameter_for(a) is None:
                    bad.append((n, a, None))
    return bad


def test_audit_l3_small_range_matches_naive():
    report = audit_lemma("L3", max_den=40)
    assert report.passed
    assert naive_audit_l3(40) == []
    assert [tuple(w.solution) for w in report.witnesses] == [(0, 2, 0)]


def test_audit_l4_small_range_matches_naive():
    report = audit_lemma("L4", max_den=40)
    assert report.passed
    assert naive_audit_l4(40) == []
    assert len(report.witnesses) == 5
    witnessed = {w.a: w.solution for w in report.witnesses}
    assert set(witnessed) == set(LEMMA4_EXCEPTIONS)
    for a, sol in witnessed.items():
        assert sol.q > sol.p
        assert sol.p * a + sol.q * (1 - a) + sol.r == 4


def test_audit_l5_small_range_matches_naive():
    report = audit_lemma("L5", ns=range(5, 40), max_den=25)
    assert report.passed
    assert naive_audit_l5(range(5, 40), 25) == []


def test_audit_l6_passes_away_from_28():
    ns = [n for n in range(5, 120) if n != 28]
    report = audit_lemma("L6", ns=ns)
    assert report.passed
    # membership pairs the paper proof pins down, e.g. a=1/3 at n=12
    hits = {(w.n, w.a) for w in report.witnesses}
    assert (12, Fraction(1, 3)) in hits
    assert (20, Fraction(2, 5)) in hits


def test_audit_l6_counterexample_at_28():
    report = audit_lemma("L6", ns=[28])
    assert not report.passed
    assert len(report.counterexamples) == 1
    case = report.counterexamples[0]
    assert case.n == 28 and case.a == Fraction(3, 7)
    assert "(1-4/28)/2" in case.detail


def test_audit_dispatcher_errors():
    with pytest.raises(DomainError):
        audit_lemma("L3")
    with pytest.raises(DomainError):
        audit_lemma("L3", max_den=2)
    with pytest.raises(DomainError):
        audit_lemma("L5", max_den=10)
    with pytest.raises(DomainError):
        audit_lemma("L6", ns=[])
    with pytest.raises(DomainError):
        audit_lemma("L6", ns=[4])
    with pytest.raises(DomainError):
        audit_lemma("L7", max_den=10)


def test_audit_report_serialization():
    report = audit_lemma("L6", ns=[28])
    obj = report.to_obj()
    assert obj["lemma"] == "L6"
    assert obj["passed"] is False
    assert obj["counterexamples"][0]["a"] == "3/7"
    assert obj["counterexamples"][0]["n"] == 28
    report = audit_lemma("L3", max_den=20)
    obj = report.to_obj()
    assert obj["passed"] is True and obj["counterexamples"] == []
    assert obj["witnesses"][0]["solution"] == [0, 2, 0]
