"""Exact tilings of the canonical regular n-gon by similar right triangles.

The polygon is fixed once and for all: unit circumradius, centered at the
origin, one vertex on the positive x-axis.  A Tiling carries the polygon
parameter n, the smaller acute angle alpha (as a = 2*alpha/pi, in units of
the right angle), a cyclotomic modulus M, and the triangle list; every
coordinate is a CycloReal in Q(zeta_M).

verify() checks, in a fixed order, everything the impossibility argument
assumes about a genuine tiling: similarity of every triangle to the
(alpha, 1-alpha, right) shape, containment in the polygon, pairwise
interior disjointness, exact area coverage, and the per-point angle
ledger p*a + q*(1-a) + r = target.
"""
from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, FormatError, ModulusError, StructuralError
from .exact import CycloReal, cos_pi, sin_pi
from .geometry import (
    Point,
    Triangle,
    midpoint,
    on_open_segment,
    orientation,
    triangles_interior_disjoint,
)
from .vertex import (
    AngleUnits,
    PointClass,
    PointKind,
    VertexSolution,
    point_target,
)

FORMAT_TAG = "tilegate-tiling/1"

CHECK_ORDER = ("similarity", "containment", "non_overlap", "area_cover", "point_ledger")

_KIND_SLOT = {"alpha": 0, "beta": 1, "right": 2}


def _angle_modulus(gamma: AngleUnits) -> int:
    # smallest valid modulus whose field contains cos and sin of gamma*pi/2
    half = Fraction(gamma) / 2
    return math.lcm(4, 2 * half.denominator)


def default_modulus(n: int, alpha: AngleUnits) -> int:
    """Smallest modulus that holds the n-gon vertices and the rotation
    entries for the angles alpha, 1-alpha and the right angle."""
    alpha = Fraction(alpha)
    return math.lcm(4, 2 * n, _angle_modulus(alpha), _angle_modulus(1 - alpha))


@lru_cache(maxsize=64)
def polygon_vertices(n: int, modulus: int) -> tuple[Point, ...]:
    """V_k = (cos(2k*pi/n), sin(2k*pi/n)) for k = 0..n-1, exact in the
    given modulus (which must be divisible by 2n)."""
    if n < 5:
        raise DomainError(f"polygon needs n >= 5, got {n}")
    return tuple(
        Point(cos_pi(2 * k, n, modulus), sin_pi(2 * k, n, modulus))
        for k in range(n)
    )


class Tiling:
    """n, alpha (units of pi/2), modulus, and the triangle list.

    Construction validates the structural invariants: n >= 5, alpha in
    (0, 1/2], modulus divisible by 4, by 2n and by 2*denominator(alpha),
    and every triangle counterclockwise with all coordinates in the
    stated modulus.  Violations raise StructuralError naming the
    offending triangle.
    """

    __slots__ = ("n", "alpha", "modulus", "triangles")

    def __init__(self, n: int, alpha: AngleUnits, modulus: int,
                 triangles: "list[Triangle] | tuple[Triangle, ...]") -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 5:
            raise StructuralError(f"polygon parameter must be an integer >= 5, got {n!r}")
        alpha = Fraction(alpha)
        if not 0 < alpha <= Fraction(1, 2):
            raise StructuralError(
                f"smaller acute angle must lie in (0, 1/2] right angles, got {alpha}")
        if not isinstance(modulus, int) or isinstance(modulus, bool):
            raise StructuralError(f"modulus must be an integer, got {modulus!r}")
        for req in (4, 2 * n, 2 * alpha.denominator):
            if modulus % req:
                raise StructuralError(
                    f"modulus {modulus} is not divisible by {req}")
        triangles = tuple(triangles)
        for i, tri in enumerate(triangles):
            if not isinstance(tri, Triangle):
                raise StructuralError(f"triangle {i} is not a Triangle")
            if tri.vertices[0].modulus != modulus:
                raise StructuralError(
                    f"triangle {i}: coordinate modulus {tri.vertices[0].modulus} "
                    f"differs from tiling modulus {modulus}")
            s = tri.orientation_sign()
            if s == 0:
                raise StructuralError(f"triangle {i} is degenerate")
            if s < 0:
                raise StructuralError(f"triangle {i} is not counterclockwise")
        self.n = n
        self.alpha = alpha
        self.modulus = modulus
        self.triangles = triangles

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return (self.n == other.n and self.alpha == other.alpha
                and self.modulus == other.modulus
                and self.triangles == other.triangles)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (f"Tiling(n={self.n}, alpha={self.alpha}, "
                f"modulus={self.modulus}, triangles=<{len(self.triangles)}>)")

    def to_obj(self) -> dict:
        """JSON-ready document in the tilegate-tiling/1 format."""
        return {
            "format": FORMAT_TAG,
            "n": self.n,
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "modulus": self.modulus,
            "triangles": [
                {"v": [[v.x.to_obj(), v.y.to_obj()] for v in tri.vertices]}
                for tri in self.triangles
            ],
        }

    @classmethod
    def from_obj(cls, obj: object) -> "Tiling":
        """Parse a tilegate-tiling/1 document; strict about keys."""
        if not isinstance(obj, dict):
            raise FormatError("tiling document must be a JSON object")
        expected = {"format", "n", "alpha", "modulus", "triangles"}
        missing = expected - obj.keys()
        unknown = obj.keys() - expected
        if missing:
            raise FormatError(f"missing keys: {sorted(missing)}")
        if unknown:
            raise FormatError(f"unknown keys: {sorted(unknown)}")
        if obj["format"] != FORMAT_TAG:
            raise FormatError(f"unsupported format tag {obj['format']!r}")
        n, modulus = obj["n"], obj["modulus"]
        for label, value in (("n", n), ("modulus", modulus)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise FormatError(f"{label} must be an integer, got {value!r}")
        alpha = _parse_fraction(obj["alpha"])
        raw = obj["triangles"]
        if not isinstance(raw, list):
            raise FormatError("triangles must be a list")
        triangles = []
        for i, item in enumerate(raw):
            if not isinstance(item, dict) or set(item) != {"v"}:
                raise FormatError(f"triangle {i}: expected an object with key 'v'")
            v = item["v"]
            if not isinstance(v, list) or len(v) != 3:
                raise FormatError(f"triangle {i}: 'v' must list three vertices")
            points = []
            for j, pair in enumerate(v):
                if not isinstance(pair, list) or len(pair) != 2:
                    raise FormatError(
                        f"triangle {i} vertex {j}: expected [x, y]")
                x, y = CycloReal.from_obj(pair[0]), CycloReal.from_obj(pair[1])
                if x.modulus != modulus or y.modulus != modulus:
                    raise FormatError(
                        f"triangle {i} vertex {j}: coordinate modulus differs "
                        f"from file modulus {modulus}")
                points.append(Point(x, y))
            triangles.append(Triangle(*points))
        return cls(n, alpha, modulus, triangles)


def _parse_fraction(value: object) -> Fraction:
    if not isinstance(value, str) or not re.fullmatch(r"\d+/\d+", value):
        raise FormatError(f"alpha must be a 'num/den' string, got {value!r}")
    num, den = value.split("/")
    if int(den) == 0:
        raise FormatError("alpha denominator must be nonzero")
    return Fraction(int(num), int(den))


def save_tiling(tiling: Tiling, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(tiling.to_obj(), fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_tiling(path: str) -> Tiling:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not valid JSON: {exc}") from None
    return Tiling.from_obj(obj)


def gen_trivial(n: int) -> Tiling:
    """The trivial tiling: join the center to every vertex and drop the
    apothem in each central triangle, giving 2n congruent right triangles
    with smaller acute angle pi/n (a = 2/n)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 5:
        raise DomainError(f"gen_trivial needs an integer n >= 5, got {n!r}")
    alpha = Fraction(2, n)
    modulus = default_modulus(n, alpha)
    verts = polygon_vertices(n, modulus)
    zero = CycloReal.zero(modulus)
    center = Point(zero, zero)
    triangles = []
    for k in range(n):
        v0, v1 = verts[k], verts[(k + 1) % n]
        foot = midpoint(v0, v1)
        triangles.append(Triangle(center, v0, foot))
        triangles.append(Triangle(center, foot, v1))
    return Tiling(n, alpha, modulus, triangles)


@lru_cache(maxsize=256)
def _rotation(gamma: Fraction, modulus: int) -> tuple[CycloReal, CycloReal]:
    # entries of the exact rotation by gamma*pi/2; reduce the half-angle
    # fraction before the 2m | modulus precondition of cos_pi/sin_pi
    half = gamma / 2
    if modulus % (2 * half.denominator):
        raise ModulusError(
            f"modulus {modulus} cannot express the angle {gamma} right angles")
    return (
        cos_pi(half.numerator, half.denominator, modulus),
        sin_pi(half.numerator, half.denominator, modulus),
    )


def angle_matches(tri: Triangle, corner_index: int, gamma: AngleUnits) -> bool:
    """Exact test that the interior angle at the given corner equals
    gamma*pi/2.

    Square-root-free: with u, v the edge vectors out of the corner, the
    counterclockwise rotation R by gamma*pi/2 must satisfy
    cross(R u, v) = 0 and dot(R u, v) > 0.
    """
    if corner_index not in (0, 1, 2):
        raise DomainError(f"corner index must be 0, 1 or 2, got {corner_index!r}")
    gamma = Fraction(gamma)
    if not 0 < gamma < 2:
        raise DomainError(f"angle must lie in (0, 2) right angles, got {gamma}")
    a = tri.vertices[corner_index]
    b = tri.vertices[(corner_index + 1) % 3]
    c = tri.vertices[(corner_index + 2) % 3]
    cosg, sing = _rotation(gamma, a.modulus)
    ux, uy = b.x - a.x, b.y - a.y
    vx, vy = c.x - a.x, c.y - a.y
    rx = cosg * ux - sing * uy
    ry = sing * ux + cosg * uy
    if not (rx * vy - ry * vx).is_zero():
        return False
    return (rx * vx + ry * vy).sign() > 0


def _corner_kinds(tri: Triangle, alpha: Fraction) -> "tuple[str, str, str] | str":
    """('alpha'|'beta'|'right') per corner, or a failure description.

    Only two corners are tested exactly: once the right corner and an
    alpha corner are confirmed, the third angle is pi - pi/2 - alpha*pi/2
    because the angles of a triangle sum to pi.  For alpha = 1/2 the two
    acute corners coincide in size; the first one found counts as alpha.
    """
    right = [i for i in range(3) if angle_matches(tri, i, Fraction(1))]
    if len(right) != 1:
        return "no right corner" if not right else "several right corners"
    kinds = [""] * 3
    kinds[right[0]] = "right"
    j, k = [i for i in range(3) if i != right[0]]
    if angle_matches(tri, j, alpha):
        kinds[j], kinds[k] = "alpha", "beta"
    elif angle_matches(tri, k, alpha):
        kinds[k], kinds[j] = "alpha", "beta"
    else:
        return f"no corner has angle {alpha}*pi/2"
    return tuple(kinds)


class CheckResult:
    """Outcome of one verification stage."""

    __slots__ = ("status", "detail")

    def __init__(self, status: str, detail: "str | None" = None) -> None:
        self.status = status
        self.detail = detail

    def to_obj(self) -> dict:
        return {"status": self.status, "detail": self.detail}

    def __repr__(self) -> str:
        return f"CheckResult({self.status!r}, {self.detail!r})"


class LedgerEntry:
    """One meeting point: its class and the incident corner counts."""

    __slots__ = ("point", "point_class", "solution")

    def __init__(self, point: Point, point_class: PointClass,
                 solution: VertexSolution) -> None:
        self.point = point
        self.point_class = point_class
        self.solution = solution

    def to_obj(self) -> dict:
        return {
            "point": [self.point.x.to_obj(), self.point.y.to_obj()],
            "class": str(self.point_class),
            "solution": list(self.solution),
        }


class VerificationReport:
    """Check table, point ledger, corner-count certificate, verdict."""

    __slots__ = ("checks", "ledger", "certificate", "verdict")

    def __init__(self, checks: "dict[str, CheckResult]",
                 ledger: "tuple[LedgerEntry, ...]",
                 certificate: "tuple[int, int, int]", verdict: bool) -> None:
        self.checks = checks
        self.ledger = ledger
        self.certificate = certificate
        self.verdict = verdict

    @property
    def first_failure(self) -> "str | None":
        for name in CHECK_ORDER:
            if self.checks[name].status == "fail":
                return name
        return None

    def to_obj(self) -> dict:
        return {
            "verdict": "pass" if self.verdict else "fail",
            "checks": {name: self.checks[name].to_obj() for name in CHECK_ORDER},
            "certificate": list(self.certificate),
            "ledger": [entry.to_obj() for entry in self.ledger],
        }


def _classify(pt: Point, tiling: Tiling, polygon: tuple[Point, ...]) -> PointClass:
    n = tiling.n
    key = pt.key()
    if any(key == v.key() for v in polygon):
        return PointClass(PointKind.POLYGON_VERTEX)
    if any(on_open_segment(pt, polygon[i], polygon[(i + 1) % n]) for i in range(n)):
        return PointClass(PointKind.POLYGON_SIDE_INTERIOR)
    flat = 0
    for tri in tiling.triangles:
        vs = tri.vertices
        for i in range(3):
            if on_open_segment(pt, vs[i], vs[(i + 1) % 3]):
                flat += 1
                break  # a point interior to two sides of one triangle is impossible
    if flat:
        return PointClass(PointKind.TRIANGLE_SIDE_INTERIOR, flat)
    return PointClass(PointKind.FREE_INTERIOR)


def classify_point(pt: Point, tiling: Tiling) -> PointClass:
    """Class of a triangle-vertex point: polygon vertex, polygon side
    interior, interior point on k open triangle sides, or free interior.

    Open sides exclude their endpoints, so a shared corner does not make
    a point lie "on" the sides meeting there.
    """
    key = pt.key()
    if not any(key == v.key() for tri in tiling.triangles for v in tri.vertices):
        raise DomainError("point is not a vertex of any triangle in the tiling")
    polygon = polygon_vertices(tiling.n, tiling.modulus)
    return _classify(pt, tiling, polygon)


def verify(tiling: Tiling) -> VerificationReport:
    """Run the five checks in order, stopping at the first failure.

    similarity: every triangle has corner angles {alpha, 1-alpha, 1}*pi/2.
    containment: every triangle vertex is inside or on the polygon; the
      polygon is convex, so the triangles then lie inside it.
    non_overlap: pairwise open interiors are disjoint.
    area_cover: triangle areas sum exactly to the polygon area, which
      with containment and disjointness proves coverage.
    point_ledger: at every distinct triangle-vertex point the incident
      corners satisfy p*a + q*(1-a) + r = target(class).

    Later checks are reported as skipped once one fails.  The certificate
    counts (alpha, beta, right) corners over all triangles whenever
    similarity passes.
    """
    checks = {name: CheckResult("skipped") for name in CHECK_ORDER}
    certificate = (0, 0, 0)
    ledger: tuple[LedgerEntry, ...] = ()

    def report() -> VerificationReport:
        verdict = all(checks[name].status == "pass" for name in CHECK_ORDER)
        return VerificationReport(checks, ledger, certificate, verdict)

    polygon = polygon_vertices(tiling.n, tiling.modulus)
    alpha = tiling.alpha

    # similarity
    kinds: list[tuple[str, str, str]] = []
    for idx, tri in enumerate(tiling.triangles):
        try:
            got = _corner_kinds(tri, alpha)
        except ModulusError as exc:
            raise StructuralError(f"triangle {idx}: {exc}") from None
        if isinstance(got, str):
            checks["similarity"] = CheckResult("fail", f"triangle {idx}: {got}")
            return report()
        kinds.append(got)
    checks["similarity"] = CheckResult("pass")
    counts = [0, 0, 0]
    for tri_kinds in kinds:
        for kind in tri_kinds:
            counts[_KIND_SLOT[kind]] += 1
    certificate = (counts[0], counts[1], counts[2])

    # distinct vertex points, in first-occurrence order, with incident corners
    order: list[Point] = []
    incident: dict[tuple, list[int]] = {}
    owner: dict[tuple, int] = {}
    for idx, tri in enumerate(tiling.triangles):
        for ci, v in enumerate(tri.vertices):
            key = v.key()
            if key not in incident:
                incident[key] = [0, 0, 0]
                owner[key] = idx
                order.append(v)
            incident[key][_KIND_SLOT[kinds[idx][ci]]] += 1

    # containment
    n = tiling.n
    for pt in order:
        if all(orientation(polygon[i], polygon[(i + 1) % n], pt) >= 0
               for i in range(n)):
            continue
        checks["containment"] = CheckResult(
            "fail",
            f"triangle {owner[pt.key()]}: vertex ({float(pt.x):.6g}, "
            f"{float(pt.y):.6g}) lies outside the polygon")
        return report()
    checks["containment"] = CheckResult("pass")

    # non_overlap
    tris = tiling.triangles
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            if not triangles_interior_disjoint(tris[i], tris[j]):
                checks["non_overlap"] = CheckResult(
                    "fail", f"triangles {i} and {j} have overlapping interiors")
                return report()
    checks["non_overlap"] = CheckResult("pass")

    # area_cover
    poly_area2 = CycloReal.zero(tiling.modulus)
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        poly_area2 = poly_area2 + (a.x * b.y - b.x * a.y)
    total2 = CycloReal.zero(tiling.modulus)
    for tri in tris:
        total2 = total2 + tri.twice_area()
    if not (total2 - poly_area2).is_zero():
        gap = float(poly_area2) - float(total2)
        checks["area_cover"] = CheckResult(
            "fail",
            f"triangle areas differ from the polygon area (gap ~ {gap:.6g} "
            "in doubled-area units)")
        return report()
    checks["area_cover"] = CheckResult("pass")

    # point_ledger
    entries = []
    for pt in order:
        pclass = _classify(pt, tiling, polygon)
        p, q, r = incident[pt.key()]
        entries.append(LedgerEntry(pt, pclass, VertexSolution(p, q, r)))
        total = p * alpha + q * (1 - alpha) + r
        target = point_target(pclass, n)
        if total != target:
            checks["point_ledger"] = CheckResult(
                "fail",
                f"point ({float(pt.x):.6g}, {float(pt.y):.6g}) [{pclass}]: "
                f"corners (p={p}, q={q}, r={r}) fill {total} of target {target}")
            ledger = tuple(entries)
            return report()
    checks["point_ledger"] = CheckResult("pass")
    ledger = tuple(entries)
    return report()


def regularity_class(tiling: Tiling, report: VerificationReport) -> frozenset:
    """Which of the regularity conditions hold at every ledger point:
    'a1' (p = q), 'a2' (p = r), 'a3' (q = r).  Empty set: irregular.

    Defined only for verified tilings with alpha != 1/2 (for the
    isosceles shape the two acute angle kinds coincide and the counts
    are not well defined).
    """
    if not report.verdict:
        raise DomainError("regularity is defined only for tilings that verify")
    if tiling.alpha == Fraction(1, 2):
        raise DomainError("regularity is not defined for alpha = 1/2")
    conditions = {
        "a1": lambda s: s.p == s.q,
        "a2": lambda s: s.p == s.r,
        "a3": lambda s: s.q == s.r,
    }
    return frozenset(
        label for label, holds in conditions.items()
        if all(holds(entry.solution) for entry in report.ledger)
    )
