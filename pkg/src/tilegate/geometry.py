"""Exact planar predicates over cyclotomic coordinates.

Every predicate first tries an outward-rounded floating-point interval
evaluation; only when the interval straddles zero does it fall back to
exact CycloReal arithmetic.  The filter is sound: interval endpoints
are widened by one ulp after every operation, so the interval always
contains the true value.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError
from .exact import CycloReal

Interval = tuple[float, float]

_INF = math.inf


def _widen(lo: float, hi: float) -> Interval:
    return math.nextafter(lo, -_INF), math.nextafter(hi, _INF)


def _iadd(a: Interval, b: Interval) -> Interval:
    return _widen(a[0] + b[0], a[1] + b[1])


def _isub(a: Interval, b: Interval) -> Interval:
    return _widen(a[0] - b[1], a[1] - b[0])


def _imul(a: Interval, b: Interval) -> Interval:
    p = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return _widen(min(p), max(p))


def _isign(a: Interval) -> int | None:
    if a[0] > 0:
        return 1
    if a[1] < 0:
        return -1
    if a[0] == a[1] == 0.0:
        return 0
    return None


class Point:
    """An exact point; both coordinates share one cyclotomic modulus."""

    __slots__ = ("x", "y", "_box")

    def __init__(self, x: CycloReal, y: CycloReal) -> None:
        if x.modulus != y.modulus:
            raise DomainError(
                f"coordinate moduli differ: {x.modulus} vs {y.modulus}"
            )
        self.x = x
        self.y = y
        self._box: tuple[Interval, Interval] | None = None

    @property
    def modulus(self) -> int:
        return self.x.modulus

    def key(self) -> tuple:
        """Hashable exact identity (within a fixed modulus)."""
        return (self.x.num, self.x.den, self.y.num, self.y.den)

    def box(self) -> tuple[Interval, Interval]:
        if self._box is None:
            self._box = (self.x.float_box(), self.y.float_box())
        return self._box

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __repr__(self) -> str:
        return f"Point({float(self.x):.6g}, {float(self.y):.6g})"


def midpoint(a: Point, b: Point) -> Point:
    half = Fraction(1, 2)
    return Point((a.x + b.x) * half, (a.y + b.y) * half)


def _cross_sign(a: Point, b: Point, c: Point) -> int:
    # sign of (b - a) x (c - a), exact
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return cross.sign()


def orientation(a: Point, b: Point, c: Point) -> int:
    """+1 if a,b,c turn counterclockwise, -1 clockwise, 0 collinear."""
    ka, kb, kc = a.key(), b.key(), c.key()
    if ka == kb or kb == kc or ka == kc:
        return 0
    (ax, ay), (bx, by), (cx, cy) = a.box(), b.box(), c.box()
    cross = _isub(
        _imul(_isub(bx, ax), _isub(cy, ay)),
        _imul(_isub(by, ay), _isub(cx, ax)),
    )
    s = _isign(cross)
    if s is not None:
        return s
    return _cross_sign(a, b, c)


def sign_dot(a: Point, b: Point, c: Point) -> int:
    """Sign of (b - a) . (c - a)."""
    ka, kb, kc = a.key(), b.key(), c.key()
    if ka == kb or ka == kc:
        return 0
    if kb == kc:
        return 1  # |b - a|^2 with b != a
    (ax, ay), (bx, by), (cx, cy) = a.box(), b.box(), c.box()
    dot = _iadd(
        _imul(_isub(bx, ax), _isub(cx, ax)),
        _imul(_isub(by, ay), _isub(cy, ay)),
    )
    s = _isign(dot)
    if s is not None:
        return s
    exact = (b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y)
    return exact.sign()


def on_open_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on segment ab strictly between the endpoints."""
    kp = p.key()
    if kp == a.key() or kp == b.key():
        return False
    return orientation(a, b, p) == 0 and sign_dot(p, a, b) < 0


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff open segments ab and cd cross at a single interior point."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    if o1 * o2 >= 0:
        return False
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    return o3 * o4 < 0


class Triangle:
    """Three exact vertices; the verifier requires counterclockwise order."""

    __slots__ = ("vertices", "_box")

    def __init__(self, a: Point, b: Point, c: Point) -> None:
        if not (a.modulus == b.modulus == c.modulus):
            raise DomainError("triangle vertices must share a modulus")
        self.vertices = (a, b, c)
        self._box: tuple[Interval, Interval] | None = None

    def orientation_sign(self) -> int:
        a, b, c = self.vertices
        return orientation(a, b, c)

    def twice_area(self) -> CycloReal:
        a, b, c = self.vertices
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)

    def box(self) -> tuple[Interval, Interval]:
        if self._box is None:
            boxes = [v.box() for v in self.vertices]
            xs = [b[0] for b in boxes]
            ys = [b[1] for b in boxes]
            self._box = (
                (min(x[0] for x in xs), max(x[1] for x in xs)),
                (min(y[0] for y in ys), max(y[1] for y in ys)),
            )
        return self._box

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.vertices == other.vertices

    def __repr__(self) -> str:
        return f"Triangle({', '.join(map(repr, self.vertices))})"


def point_in_triangle(p: Point, t: Triangle, *, strict: bool) -> bool:
    """Membership in a counterclockwise triangle; strict means the open
    interior, otherwise the closed triangle."""
    a, b, c = t.vertices
    low = 1 if strict else 0
    return (
        orientation(a, b, p) >= low
        and orientation(b, c, p) >= low
        and orientation(c, a, p) >= low
    )


def _boxes_disjoint(t: Triangle, u: Triangle) -> bool:
    (txl, txh), (tyl, tyh) = t.box()
    (uxl, uxh), (uyl, uyh) = u.box()
    return txh < uxl or uxh < txl or tyh < uyl or uyh < tyl


def _separated_by_edge(t: Triangle, u: Triangle) -> bool:
    # a counterclockwise triangle lies strictly left of each directed
    # edge, so an edge line with all of u on the closed right side
    # separates the interiors
    a, b, c = t.vertices
    for p, q in ((a, b), (b, c), (c, a)):
        if all(orientation(p, q, v) <= 0 for v in u.vertices):
            return True
    return False


def triangles_interior_disjoint(t: Triangle, u: Triangle) -> bool:
    """True iff the open interiors of two counterclockwise triangles do
    not meet (touching along points or edges is allowed).  Convexity
    makes the edge lines a complete set of separating-axis candidates."""
    if _boxes_disjoint(t, u):
        return True
    return _separated_by_edge(t, u) or _separated_by_edge(u, t)
