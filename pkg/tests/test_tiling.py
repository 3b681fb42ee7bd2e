"""Tests for the tiling data model, generator, verifier and file format.

The verifier is cross-checked against hand-computed ledgers for the
trivial tiling, an altitude-split variant that creates a T-joint, and
mutation oracles (deletions, vertex moves) that must never pass.
"""
from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tilegate.classify import Outcome, impossibility_audit
from tilegate.errors import (
    DomainError,
    FormatError,
    ModulusError,
    StructuralError,
)
from tilegate.exact import CycloReal
from tilegate.geometry import Point, Triangle
from tilegate.tiling import (
    CHECK_ORDER,
    Tiling,
    VerificationReport,
    angle_matches,
    classify_point,
    default_modulus,
    gen_trivial,
    load_tiling,
    polygon_vertices,
    regularity_class,
    save_tiling,
    verify,
)
from tilegate.vertex import PointKind, VertexSolution


def rp(x, y, modulus) -> Point:
    return Point(
        CycloReal.from_rational(Fraction(x), modulus),
        CycloReal.from_rational(Fraction(y), modulus),
    )


def shifted(pt: Point, dx: Fraction, dy: Fraction) -> Point:
    m = pt.modulus
    return Point(
        pt.x + CycloReal.from_rational(dx, m),
        pt.y + CycloReal.from_rational(dy, m),
    )


def replace_vertex(t: Tiling, tri_idx: int, v_idx: int, pt: Point) -> Tiling:
    tri = t.triangles[tri_idx]
    vs = list(tri.vertices)
    vs[v_idx] = pt
    tris = list(t.triangles)
    tris[tri_idx] = Triangle(*vs)
    return Tiling(t.n, t.alpha, t.modulus, tris)


def altitude_split(t: Tiling, idx: int) -> Tiling:
    # split (O, V, F) at the foot of the altitude from the right corner F
    # onto the hypotenuse OV; V has unit length, so the foot is (F.V) V
    o, v, f = t.triangles[idx].vertices
    d = f.x * v.x + f.y * v.y
    h = Point(d * v.x, d * v.y)
    tris = list(t.triangles)
    tris[idx : idx + 1] = [Triangle(o, h, f), Triangle(h, v, f)]
    return Tiling(t.n, t.alpha, t.modulus, tris)


# -- generator ---------------------------------------------------------------


def test_gen_trivial_examples():
    t5 = gen_trivial(5)
    assert len(t5.triangles) == 10
    assert t5.alpha == Fraction(2, 5)
    assert t5.modulus == 20
    t8 = gen_trivial(8)
    assert len(t8.triangles) == 16
    assert t8.alpha == Fraction(1, 4)
    assert t8.modulus == 16
    t6 = gen_trivial(6)
    assert len(t6.triangles) == 12
    assert t6.alpha == Fraction(1, 3)


def test_gen_trivial_domain():
    with pytest.raises(DomainError):
        gen_trivial(4)
    with pytest.raises(DomainError):
        gen_trivial("8")


def test_polygon_vertices_on_unit_circle():
    for n in (5, 8, 12):
        m = default_modulus(n, Fraction(2, n))
        verts = polygon_vertices(n, m)
        assert len(verts) == n
        assert verts[0] == rp(1, 0, m)
        for v in verts:
            assert (v.x * v.x + v.y * v.y).as_fraction() == 1
    with pytest.raises(DomainError):
        polygon_vertices(3, 12)


def test_default_modulus_examples():
    assert default_modulus(8, Fraction(1, 4)) == 16
    assert default_modulus(5, Fraction(2, 5)) == 20
    for n in range(5, 30):
        m = default_modulus(n, Fraction(2, n))
        a = Fraction(2, n)
        assert m % 4 == 0 and m % (2 * n) == 0 and m % (2 * a.denominator) == 0


# -- structural validation ------------------------------------------------------


def test_tiling_structural_errors():
    t = gen_trivial(5)
    with pytest.raises(StructuralError):
        Tiling(4, Fraction(2, 5), 20, t.triangles)
    with pytest.raises(StructuralError):
        Tiling(5, Fraction(3, 5), 20, t.triangles)  # alpha > 1/2
    with pytest.raises(StructuralError):
        Tiling(5, Fraction(0), 20, t.triangles)
    with pytest.raises(StructuralError):
        Tiling(5, Fraction(2, 5), 12, t.triangles)  # 10 does not divide 12
    with pytest.raises(StructuralError, match="triangle 0"):
        Tiling(5, Fraction(2, 5), 40, t.triangles)  # coordinate modulus 20
    degenerate = Triangle(rp(0, 0, 20), rp(1, 0, 20), rp(2, 0, 20))
    with pytest.raises(StructuralError, match="degenerate"):
        Tiling(5, Fraction(2, 5), 20, [degenerate])
    clockwise = Triangle(rp(0, 0, 20), rp(0, 1, 20), rp(1, 0, 20))
    with pytest.raises(StructuralError, match="counterclockwise"):
        Tiling(5, Fraction(2, 5), 20, [clockwise])
    with pytest.raises(StructuralError):
        Tiling(5, Fraction(2, 5), 20, ["nope"])


# -- angle predicate -------------------------------------------------------------


def test_angle_matches_trivial_corners():
    t = gen_trivial(8)
    tri = t.triangles[0]  # (center, vertex, apothem foot)
    assert angle_matches(tri, 0, Fraction(1, 4))
    assert angle_matches(tri, 1, Fraction(3, 4))
    assert angle_matches(tri, 2, Fraction(1))
    # a corner matches at most one of gamma, 1-gamma for gamma != 1/2
    for i in range(3):
        hits = [
            angle_matches(tri, i, g)
            for g in (Fraction(1, 4), Fraction(3, 4))
        ]
        assert sum(hits) <= 1
    assert not angle_matches(tri, 0, Fraction(1, 2))


def test_angle_matches_errors():
    tri = gen_trivial(8).triangles[0]
    with pytest.raises(DomainError):
        angle_matches(tri, 3, Fraction(1, 4))
    with pytest.raises(DomainError):
        angle_matches(tri, 0, Fraction(0))
    with pytest.raises(DomainError):
        angle_matches(tri, 0, Fraction(2))
    # cos(pi/4) needs modulus divisible by 8; 20 is not
    tri20 = Triangle(rp(0, 0, 20), rp(1, 0, 20), rp(0, 1, 20))
    with pytest.raises(ModulusError):
        angle_matches(tri20, 1, Fraction(1, 2))


# -- verifier on honest tilings -----------------------------------------------------


def test_verify_trivial_ledger():
    n = 8
    t = gen_trivial(n)
    rep = verify(t)
    assert rep.verdict
    assert all(rep.checks[name].status == "pass" for name in CHECK_ORDER)
    assert rep.certificate == (2 * n, 2 * n, 2 * n)
    assert len(rep.ledger) == 2 * n + 1
    by_class = {}
    for entry in rep.ledger:
        by_class.setdefault(entry.point_class.kind, []).append(entry.solution)
    assert by_class[PointKind.FREE_INTERIOR] == [VertexSolution(2 * n, 0, 0)]
    assert by_class[PointKind.POLYGON_VERTEX] == [VertexSolution(0, 2, 0)] * n
    assert by_class[PointKind.POLYGON_SIDE_INTERIOR] == [VertexSolution(0, 0, 2)] * n
    # certificate equals the ledger column sums
    sums = [sum(e.solution[i] for e in rep.ledger) for i in range(3)]
    assert tuple(sums) == rep.certificate


def test_verify_report_serialization():
    rep = verify(gen_trivial(5))
    obj = rep.to_obj()
    assert obj["verdict"] == "pass"
    assert list(obj["checks"]) == list(CHECK_ORDER)
    assert obj["certificate"] == [10, 10, 10]
    assert len(obj["ledger"]) == 11
    assert obj["ledger"][0]["class"] == "FreeInterior"
    json.dumps(obj)  # must be JSON-ready


def test_altitude_split_creates_t_joint():
    t = altitude_split(gen_trivial(8), 0)
    assert len(t.triangles) == 17
    rep = verify(t)
    assert rep.verdict
    assert rep.certificate == (17, 17, 17)
    joints = [
        e for e in rep.ledger
        if e.point_class.kind is PointKind.TRIANGLE_SIDE_INTERIOR
    ]
    assert len(joints) == 1
    assert joints[0].point_class.flat_sides == 1
    assert joints[0].solution == VertexSolution(0, 0, 2)
    sums = [sum(e.solution[i] for e in rep.ledger) for i in range(3)]
    assert tuple(sums) == rep.certificate


def test_round_trip_through_file(tmp_path):
    t = gen_trivial(7)
    path = tmp_path / "t7.json"
    save_tiling(t, str(path))
    first = path.read_bytes()
    save_tiling(t, str(path))
    assert path.read_bytes() == first  # byte-stable writer
    back = load_tiling(str(path))
    assert back == t
    assert verify(back).verdict


def test_verifier_auditor_coherence():
    for n in (5, 8, 12):
        t = gen_trivial(n)
        assert verify(t).verdict
        verdict = impossibility_audit(n, t.alpha)
        assert verdict.outcome is Outcome.NOT_EXCLUDED


# -- verifier on mutants ---------------------------------------------------------


def test_deletion_fails_area_cover():
    t = gen_trivial(5)
    mutant = Tiling(t.n, t.alpha, t.modulus, t.triangles[1:])
    rep = verify(mutant)
    assert not rep.verdict
    assert rep.first_failure == "area_cover"
    for name in ("similarity", "containment", "non_overlap"):
        assert rep.checks[name].status == "pass"
    assert rep.checks["point_ledger"].status == "skipped"


def test_empty_tiling_fails_area_cover():
    rep = verify(Tiling(5, Fraction(2, 5), 20, []))
    assert not rep.verdict
    assert rep.first_failure == "area_cover"


def test_centroid_move_fails_similarity_first():
    # moving one vertex to the triangle's centroid destroys the angles,
    # so under the fixed check order the failure surfaces at similarity
    t = gen_trivial(5)
    a, b, c = t.triangles[0].vertices
    centroid = Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
    mutant = replace_vertex(t, 0, 2, centroid)
    rep = verify(mutant)
    assert not rep.verdict
    assert rep.first_failure == "similarity"
    assert "triangle 0" in rep.checks["similarity"].detail


def test_translated_triangle_fails_containment():
    # translating a whole triangle preserves its angles, so the failure
    # surfaces at containment, not similarity
    t = gen_trivial(5)
    moved = Triangle(*(shifted(v, Fraction(2), Fraction(0))
                       for v in t.triangles[0].vertices))
    tris = list(t.triangles)
    tris[0] = moved
    rep = verify(Tiling(t.n, t.alpha, t.modulus, tris))
    assert not rep.verdict
    assert rep.first_failure == "containment"
    assert "triangle 0" in rep.checks["containment"].detail


def test_duplicated_triangle_fails_non_overlap():
    t = gen_trivial(5)
    rep = verify(Tiling(t.n, t.alpha, t.modulus, t.triangles + t.triangles[:1]))
    assert not rep.verdict
    assert rep.first_failure == "non_overlap"
    assert "10" in rep.checks["non_overlap"].detail


@settings(max_examples=15, deadline=None)
@given(
    tri_idx=st.integers(min_value=0, max_value=15),
    v_idx=st.integers(min_value=0, max_value=2),
    num=st.integers(min_value=-4, max_value=4),
    den=st.sampled_from([16, 32, 64, 128]),
    axis=st.booleans(),
)
def test_single_vertex_perturbations_never_pass(tri_idx, v_idx, num, den, axis):
    if num == 0:
        return
    t = gen_trivial(8)
    delta = Fraction(num, den)
    pt = t.triangles[tri_idx].vertices[v_idx]
    moved = shifted(pt, delta, Fraction(0)) if axis else shifted(pt, Fraction(0), delta)
    try:
        mutant = replace_vertex(t, tri_idx, v_idx, moved)
    except StructuralError:
        return  # flipped or flattened the triangle: rejected even earlier
    rep = verify(mutant)
    assert not rep.verdict
    assert rep.first_failure in CHECK_ORDER


# -- point classification ----------------------------------------------------------


def test_classify_point_trivial():
    t = gen_trivial(8)
    center = t.triangles[0].vertices[0]
    vertex = t.triangles[0].vertices[1]
    foot = t.triangles[0].vertices[2]
    assert classify_point(center, t).kind is PointKind.FREE_INTERIOR
    assert classify_point(vertex, t).kind is PointKind.POLYGON_VERTEX
    assert classify_point(foot, t).kind is PointKind.POLYGON_SIDE_INTERIOR
    with pytest.raises(DomainError):
        classify_point(rp(0, Fraction(1, 3), t.modulus), t)


def test_classify_point_two_flat_sides():
    # P = (1/2, 0) is a vertex of the third triangle and lies interior to
    # one open side of each of the first two: k = 2, target 0
    m = 20
    t_a = Triangle(rp(0, 0, m), rp(1, 0, m), rp(0, 1, m))
    t_b = Triangle(rp(1, 0, m), rp(0, 0, m), rp(Fraction(1, 2), Fraction(-1, 2), m))
    t_c = Triangle(
        rp(Fraction(1, 2), 0, m),
        rp(Fraction(3, 4), Fraction(1, 4), m),
        rp(Fraction(1, 4), Fraction(1, 4), m),
    )
    t = Tiling(5, Fraction(2, 5), m, [t_a, t_b, t_c])
    pc = classify_point(rp(Fraction(1, 2), 0, m), t)
    assert pc.kind is PointKind.TRIANGLE_SIDE_INTERIOR
    assert pc.flat_sides == 2


# -- regularity --------------------------------------------------------------------


def test_regularity_trivial_is_empty():
    t = gen_trivial(8)
    rep = verify(t)
    assert regularity_class(t, rep) == frozenset()


def test_regularity_conditions_on_synthetic_ledger():
    t = gen_trivial(8)
    rep = verify(t)
    entries = [
        type(rep.ledger[0])(rep.ledger[0].point, rep.ledger[0].point_class, sol)
        for sol in (VertexSolution(1, 1, 2), VertexSolution(3, 3, 2))
    ]
    synthetic = VerificationReport(rep.checks, tuple(entries), rep.certificate, True)
    assert regularity_class(t, synthetic) == frozenset({"a1"})


def test_regularity_errors():
    t = gen_trivial(8)
    rep = verify(t)
    failed = verify(Tiling(t.n, t.alpha, t.modulus, t.triangles[1:]))
    with pytest.raises(DomainError):
        regularity_class(t, failed)
    half = Tiling(8, Fraction(1, 2), 16, [])
    with pytest.raises(DomainError):
        regularity_class(half, rep)


# -- structural aborts in verify -----------------------------------------------------


def test_verify_modulus_cannot_express_alpha():
    # modulus 20 holds the coordinates but not cos(pi/4), so similarity
    # cannot even be tested: structural abort naming the triangle
    tri = Triangle(rp(0, 0, 20), rp(1, 0, 20), rp(0, 1, 20))
    t = Tiling(5, Fraction(1, 2), 20, [tri])
    with pytest.raises(StructuralError, match="triangle 0"):
        verify(t)


# -- file format strictness ----------------------------------------------------------


def good_doc():
    return gen_trivial(5).to_obj()


def test_from_obj_round_trip():
    t = gen_trivial(5)
    assert Tiling.from_obj(good_doc()) == t


def test_from_obj_rejects_bad_documents():
    with pytest.raises(FormatError):
        Tiling.from_obj([])
    doc = good_doc()
    del doc["alpha"]
    with pytest.raises(FormatError, match="missing"):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["extra"] = 1
    with pytest.raises(FormatError, match="unknown"):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["format"] = "tilegate-tiling/2"
    with pytest.raises(FormatError, match="format"):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["alpha"] = "0.4"
    with pytest.raises(FormatError, match="alpha"):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["alpha"] = 0.4
    with pytest.raises(FormatError, match="alpha"):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["n"] = "5"
    with pytest.raises(FormatError):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["triangles"] = {}
    with pytest.raises(FormatError):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["triangles"][0]["w"] = 1
    with pytest.raises(FormatError, match="triangle 0"):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["triangles"][0]["v"] = doc["triangles"][0]["v"][:2]
    with pytest.raises(FormatError, match="three"):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["triangles"][0]["v"][0] = doc["triangles"][0]["v"][0][:1]
    with pytest.raises(FormatError, match="vertex 0"):
        Tiling.from_obj(doc)
    doc = good_doc()
    doc["modulus"] = 40
    with pytest.raises(FormatError, match="modulus"):
        Tiling.from_obj(doc)


def test_from_obj_structural_violation():
    doc = good_doc()
    doc["alpha"] = "3/5"
    with pytest.raises(StructuralError):
        Tiling.from_obj(doc)


def test_load_tiling_rejects_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(FormatError, match="JSON"):
        load_tiling(str(path))
