"""Upper half-plane model: points, isometries, geodesics, areas, polygons.

Conventions used throughout the package:

* finite points are x + iy with y > 0, ideal points are boundary
  coordinates in R together with a single point at infinity;
* orientation is the standard complex one, anticlockwise positive;
* signed triangle area is +(pi - angle sum) for anticlockwise vertex
  triples, so areas lie strictly between -pi and pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

# Points closer than this (hyperbolic distance, or chart distance for
# ideal points) are treated as coincident when testing degeneracy.
COINCIDENT_TOL = 1e-9
# Klein-chart cross products below this are treated as collinear.
COLLINEAR_TOL = 1e-12
# Chart-space tolerance for segment intersection tests.
SEGMENT_TOL = 1e-9

_TWO_PI = 2.0 * math.pi


def wrap_angle(t: float) -> float:
    """Reduce an angle to the interval (-pi, pi]."""
    r = math.remainder(t, _TWO_PI)
    if r <= -math.pi:
        r += _TWO_PI
    return r


@dataclass(frozen=True)
class Point:
    """A point of the closed hyperbolic plane.

    ``y > 0`` is the finite point ``x + iy``; ``y == 0`` is the ideal
    boundary point with coordinate ``x`` (``math.inf`` for the point at
    infinity).  Use :meth:`finite` and :meth:`ideal` rather than the
    raw constructor.
    """

    x: float
    y: float

    @staticmethod
    def finite(x: float, y: float) -> "Point":
        if not (y > 0.0) or not math.isfinite(y) or not math.isfinite(x):
            raise ValueError(f"finite point needs finite x and y > 0, got ({x}, {y})")
        return Point(float(x), float(y))

    @staticmethod
    def ideal(b: float) -> "Point":
        if math.isnan(b):
            raise ValueError("ideal coordinate may not be NaN")
        if math.isinf(b):
            return Point(math.inf, 0.0)
        return Point(float(b), 0.0)

    @staticmethod
    def from_complex(z: complex) -> "Point":
        return Point.finite(z.real, z.imag)

    @property
    def is_ideal(self) -> bool:
        return self.y == 0.0

    @property
    def is_infinity(self) -> bool:
        return self.y == 0.0 and math.isinf(self.x)

    @property
    def z(self) -> complex:
        if self.is_ideal:
            raise ValueError("ideal point has no finite complex coordinate")
        return complex(self.x, self.y)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "Point.ideal(inf)"
        if self.is_ideal:
            return f"Point.ideal({self.x!r})"
        return f"Point.finite({self.x!r}, {self.y!r})"


I_POINT = Point.finite(0.0, 1.0)
INFINITY = Point.ideal(math.inf)


@dataclass(frozen=True)
class Isometry:
    """An orientation-preserving isometry as a unit-determinant 2x2 matrix.

    The sign of the matrix is kept (it matters for the double cover);
    the plane action z -> (az+b)/(cz+d) is sign-blind.  Entries are
    rescaled to determinant one at construction.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        det = self.a * self.d - self.b * self.c
        if not math.isfinite(det) or det <= 1e-12:
            raise ValueError(f"matrix must have positive determinant, got {det}")
        if det != 1.0:
            s = math.sqrt(det)
            object.__setattr__(self, "a", self.a / s)
            object.__setattr__(self, "b", self.b / s)
            object.__setattr__(self, "c", self.c / s)
            object.__setattr__(self, "d", self.d / s)

    @property
    def trace(self) -> float:
        return self.a + self.d

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Isometry":
        return Isometry(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Isometry":
        return Isometry(self.d, -self.b, -self.c, self.a)

    def power(self, n: int) -> "Isometry":
        g = IDENTITY
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            g = g @ base
        return g

    def apply_z(self, z: complex) -> complex:
        return (self.a * z + self.b) / (self.c * z + self.d)

    def deriv(self, z: complex) -> complex:
        """Complex derivative of the plane action at finite z."""
        den = self.c * z + self.d
        return 1.0 / (den * den)

    def __call__(self, p: Point) -> Point:
        if not p.is_ideal:
            w = self.apply_z(p.z)
            return Point.finite(w.real, w.imag)
        if p.is_infinity:
            if self.c == 0.0:
                return INFINITY
            return Point.ideal(self.a / self.c)
        den = self.c * p.x + self.d
        if den == 0.0:
            return INFINITY
        return Point.ideal((self.a * p.x + self.b) / den)

    def is_central(self, tol: float = 1e-9) -> bool:
        """True when the matrix is +-identity within tol."""
        return (
            max(abs(self.a - self.d), abs(self.b), abs(self.c)) <= tol
            and abs(abs(self.a) - 1.0) <= tol
        )


IDENTITY = Isometry(1.0, 0.0, 0.0, 1.0)


def apply(g: Isometry, p: Point) -> Point:
    """Fractional linear action of g on a finite or ideal point."""
    return g(p)


def rotation_about_i(angle: float) -> Isometry:
    """Plane rotation about i by ``angle``, anticlockwise positive."""
    h = 0.5 * angle
    return Isometry(math.cos(h), math.sin(h), -math.sin(h), math.cos(h))


def vertical_translation(d: float) -> Isometry:
    """Hyperbolic translation by signed distance d along the imaginary axis."""
    e = math.exp(0.5 * d)
    return Isometry(e, 0.0, 0.0, 1.0 / e)


def standard_parabolic(t: float) -> Isometry:
    """The parabolic z -> z + t fixing infinity."""
    return Isometry(1.0, t, 0.0, 1.0)


def move_to_i(p: Point) -> Isometry:
    """The canonical isometry sending the finite point p to i."""
    if p.is_ideal:
        raise ValueError("conjugator requires a finite point")
    s = math.sqrt(p.y)
    return Isometry(1.0 / s, -p.x / s, 0.0, s)


@dataclass(frozen=True)
class Geodesic:
    """An oriented geodesic, stored by its ordered ideal endpoints."""

    start: Point
    end: Point

    def __post_init__(self) -> None:
        if not (self.start.is_ideal and self.end.is_ideal):
            raise ValueError("geodesic endpoints must be ideal")
        if points_close(self.start, self.end):
            raise ValueError("geodesic endpoints must be distinct")


@dataclass(frozen=True)
class Polygon:
    """A closed geodesic polygon given by its ordered vertices."""

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Iterable[Point]):
        object.__setattr__(self, "vertices", tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def reversed(self) -> "Polygon":
        return Polygon(tuple(reversed(self.vertices)))


# ---------------------------------------------------------------------------
# charts


def to_disk(p: Point) -> complex:
    """Poincare-disk coordinate of a point (i -> 0, 0 -> -i, inf -> i)."""
    if p.is_infinity:
        return 1j
    if p.is_ideal:
        b = p.x
        return 1j * (b - 1j) / (b + 1j)
    z = p.z
    return (1j * z + 1.0) / (z + 1j)


def from_disk(w: complex, boundary_tol: float = 1e-12) -> Point:
    """Inverse of :func:`to_disk`; |w| within boundary_tol of 1 maps to an
    ideal point (the coordinate i itself to infinity)."""
    if abs(w) >= 1.0 - boundary_tol:
        if abs(w - 1j) <= 1e-12:
            return INFINITY
        z = (1.0 - 1j * w) / (w - 1j)
        return Point.ideal(z.real)
    z = (1.0 - 1j * w) / (w - 1j)
    return Point.finite(z.real, z.imag)


def _klein(p: Point) -> complex:
    """Klein-chart coordinate; geodesics are straight chords there."""
    w = to_disk(p)
    if p.is_ideal:
        return w
    return 2.0 * w / (1.0 + abs(w) ** 2)


def _klein_to_point(k: complex) -> Point:
    r2 = abs(k) ** 2
    if r2 >= 1.0 - 1e-15:
        return from_disk(k / max(abs(k), 1e-300), boundary_tol=1.0)
    w = k / (1.0 + math.sqrt(1.0 - r2))
    return from_disk(w)


def points_close(p: Point, q: Point, tol: float = COINCIDENT_TOL) -> bool:
    """Coincidence test: hyperbolic distance for finite pairs, chart
    distance (tol 1e-12) for pairs involving an ideal point."""
    if p.is_ideal != q.is_ideal:
        return False
    if p.is_ideal:
        return abs(to_disk(p) - to_disk(q)) <= 1e-12
    return distance(p, q) <= tol


# ---------------------------------------------------------------------------
# metric quantities


def distance(p: Point, q: Point) -> float:
    """Hyperbolic distance between two finite points."""
    if p.is_ideal or q.is_ideal:
        raise ValueError("distance requires finite points")
    dx = p.x - q.x
    dy = p.y - q.y
    arg = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y)
    return math.acosh(max(arg, 1.0))


def _tangent(v: complex, target: Point) -> complex:
    """Unit Euclidean direction at the finite point v of the geodesic
    toward ``target`` (finite or ideal, distinct from v)."""
    x0, y0 = v.real, v.imag
    if target.is_infinity:
        return 1j
    x1 = target.x
    if x1 == x0:
        if target.is_ideal:
            return -1j
        return 1j if target.y > y0 else -1j
    if target.is_ideal:
        sq1 = x1 * x1
        y1 = 0.0
    else:
        sq1 = x1 * x1 + target.y * target.y
        y1 = target.y
    c = (sq1 - (x0 * x0 + y0 * y0)) / (2.0 * (x1 - x0))
    t = complex(-y0, x0 - c)
    phi0 = math.atan2(y0, x0 - c)
    phi1 = math.atan2(y1, x1 - c)
    d = t if phi1 > phi0 else -t
    return d / abs(d)


def _dir_at_i(target: Point) -> complex:
    """Unit direction at i of the geodesic toward ``target`` (not i)."""
    if target.is_infinity:
        return 1j
    x = target.x
    y = 0.0 if target.is_ideal else target.y
    if x == 0.0:
        return 1j if y > 1.0 else -1j
    c = (x * x + y * y - 1.0) / (2.0 * x)
    t = complex(-1.0, -c)
    phi0 = math.atan2(1.0, -c)
    phi1 = math.atan2(y, x - c)
    d = t if phi1 > phi0 else -t
    return d / abs(d)


def _signed_angle(v: Point, p: Point, q: Point) -> float:
    """Anticlockwise angle, in (-pi, pi], at finite v from the geodesic
    toward p to the geodesic toward q.

    Conjugates v to i first: angles are conformally invariant and the
    tangent formula at i stays well-conditioned near the boundary.
    """
    g = move_to_i(v)
    dp = _dir_at_i(g(p))
    dq = _dir_at_i(g(q))
    return wrap_angle(cmath.phase(dq * dp.conjugate()))


def angle_between(v: Point, a: Point, b: Point) -> float:
    """Anticlockwise angle at finite v from the geodesic toward a to the
    geodesic toward b, in (-pi, pi]."""
    if v.is_ideal:
        raise ValueError("angle vertex must be finite")
    if points_close(a, v) or points_close(b, v):
        raise ValueError("angle legs must be distinct from the vertex")
    return _signed_angle(v, a, b)


def _ideal_orientation(a: Point, b: Point, c: Point) -> int:
    """Cyclic orientation of three ideal points on the boundary circle."""
    ka, kb, kc = to_disk(a), to_disk(b), to_disk(c)
    u = kb - ka
    v = kc - ka
    cross = u.real * v.imag - u.imag * v.real
    if abs(cross) < COLLINEAR_TOL:
        return 0
    return 1 if cross > 0.0 else -1


def tri_area(a: Point, b: Point, c: Point) -> float:
    """Signed area of the geodesic triangle abc (anticlockwise positive).

    Ideal vertices contribute zero interior angle; degenerate triples
    give zero.  Values lie in (-pi, pi), hitting +-pi only for three
    distinct ideal vertices.
    """
    if points_close(a, b) or points_close(b, c) or points_close(a, c):
        return 0.0
    if a.is_ideal and b.is_ideal and c.is_ideal:
        return _ideal_orientation(a, b, c) * math.pi
    total = 0.0
    sign = 0
    for v, p, q in ((a, b, c), (b, c, a), (c, a, b)):
        if v.is_ideal:
            continue
        s = _signed_angle(v, p, q)
        total += abs(s)
        if sign == 0 and min(abs(s), math.pi - abs(s)) > COLLINEAR_TOL:
            sign = 1 if s > 0.0 else -1
    if sign == 0:
        return 0.0
    return sign * (math.pi - total)


def poly_area(poly: Polygon) -> float:
    """Signed area by fan triangulation from the first vertex."""
    vs = poly.vertices
    if len(vs) < 3:
        raise ValueError("polygon area needs at least three vertices")
    return sum(tri_area(vs[0], vs[k], vs[k + 1]) for k in range(1, len(vs) - 1))


# ---------------------------------------------------------------------------
# geodesics


def geodesic_through(p: Point, q: Point) -> Geodesic:
    """The oriented geodesic through p then q, as ideal endpoints."""
    if points_close(p, q):
        raise ValueError("geodesic requires two distinct points")
    if p.is_ideal and q.is_ideal:
        return Geodesic(p, q)
    if p.is_ideal or q.is_ideal:
        ideal, finite, flipped = (p, q, False) if p.is_ideal else (q, p, True)
        if ideal.is_infinity:
            other = Point.ideal(finite.x)
        else:
            b = ideal.x
            if b == finite.x:
                other = INFINITY
            else:
                c = (b * b - (finite.x**2 + finite.y**2)) / (2.0 * (b - finite.x))
                other = Point.ideal(2.0 * c - b)
        return Geodesic(other, q) if flipped else Geodesic(p, other)
    if p.x == q.x:
        if q.y > p.y:
            return Geodesic(Point.ideal(p.x), INFINITY)
        return Geodesic(INFINITY, Point.ideal(p.x))
    c = ((q.x**2 + q.y**2) - (p.x**2 + p.y**2)) / (2.0 * (q.x - p.x))
    r = math.hypot(p.x - c, p.y)
    phi_p = math.atan2(p.y, p.x - c)
    phi_q = math.atan2(q.y, q.x - c)
    if phi_q > phi_p:
        return Geodesic(Point.ideal(c + r), Point.ideal(c - r))
    return Geodesic(Point.ideal(c - r), Point.ideal(c + r))


def geodesic_contains(geo: Geodesic, p: Point, tol: float = 1e-9) -> bool:
    """Whether a point lies on the geodesic (closure included)."""
    if p.is_ideal:
        return points_close(p, geo.start) or points_close(p, geo.end)
    if geo.start.is_infinity or geo.end.is_infinity:
        b = geo.start.x if geo.end.is_infinity else geo.end.x
        return abs(p.x - b) <= tol * p.y
    u, v = geo.start.x, geo.end.x
    c = 0.5 * (u + v)
    r = 0.5 * abs(v - u)
    return abs(math.hypot(p.x - c, p.y) - r) <= tol * r


def geodesic_interpolate(p: Point, q: Point, t: float) -> Point:
    """Point at fraction t of the geodesic segment from finite p to finite q."""
    if p.is_ideal or q.is_ideal:
        raise ValueError("interpolation requires finite endpoints")
    if points_close(p, q):
        return p
    g1 = move_to_i(p)
    w = g1.apply_z(q.z)
    direction = _tangent(complex(0.0, 1.0), Point.finite(w.real, w.imag))
    rot = rotation_about_i(0.5 * math.pi - cmath.phase(direction))
    m = rot @ g1
    dist = distance(p, q)
    sample = complex(0.0, math.exp(t * dist))
    return m.inverse()(Point.from_complex(sample))


# ---------------------------------------------------------------------------
# segment intersection / simplicity / convexity


@dataclass(frozen=True)
class SegmentIntersection:
    kind: str  # "none" | "point" | "overlap"
    point: Point | None = None


def _seg_hits(
    s1: tuple[Point, Point], s2: tuple[Point, Point]
) -> tuple[list[complex], bool]:
    """Intersections of two geodesic segments in the Klein chart.

    Returns candidate intersection points (Klein coordinates) plus an
    overlap flag for collinear segments sharing more than a point.
    """
    p1, p2 = _klein(s1[0]), _klein(s1[1])
    q1, q2 = _klein(s2[0]), _klein(s2[1])
    d1 = p2 - p1
    d2 = q2 - q1
    denom = d1.real * d2.imag - d1.imag * d2.real
    w = q1 - p1
    if abs(denom) <= SEGMENT_TOL * max(abs(d1) * abs(d2), 1e-30):
        # parallel chords: either disjoint or collinear
        off = w.real * d1.imag - w.imag * d1.real
        if abs(off) > SEGMENT_TOL * max(abs(d1), 1e-30):
            return [], False
        # collinear: project onto d1
        L = abs(d1) ** 2
        t1 = (w.real * d1.real + w.imag * d1.imag) / L
        t2 = ((q2 - p1).real * d1.real + (q2 - p1).imag * d1.imag) / L
        lo, hi = min(t1, t2), max(t1, t2)
        tol = SEGMENT_TOL / max(abs(d1), 1e-30)
        lo = max(lo, 0.0)
        hi = min(hi, 1.0)
        if hi < lo - tol:
            return [], False
        if hi - lo <= tol:
            return [p1 + 0.5 * (lo + hi) * d1], False
        return [], True
    t = (w.real * d2.imag - w.imag * d2.real) / denom
    u = (w.real * d1.imag - w.imag * d1.real) / denom
    tol1 = SEGMENT_TOL / max(abs(d1), 1e-30)
    tol2 = SEGMENT_TOL / max(abs(d2), 1e-30)
    if -tol1 <= t <= 1.0 + tol1 and -tol2 <= u <= 1.0 + tol2:
        return [p1 + t * d1], False
    return [], False


def segments_intersect(
    s1: tuple[Point, Point],
    s2: tuple[Point, Point],
    include_endpoints: bool = True,
) -> SegmentIntersection:
    """Intersection report for two geodesic segments.

    With ``include_endpoints=False``, hits within tolerance of any
    segment endpoint are discarded (shared-vertex adjacency queries).
    """
    for s in (s1, s2):
        if points_close(s[0], s[1]):
            raise ValueError("segment endpoints must be distinct")
    hits, overlap = _seg_hits(s1, s2)
    if overlap:
        return SegmentIntersection("overlap")
    if not include_endpoints:
        ends = [_klein(e) for e in (*s1, *s2)]
        hits = [h for h in hits if all(abs(h - e) > SEGMENT_TOL for e in ends)]
    if not hits:
        return SegmentIntersection("none")
    return SegmentIntersection("point", _klein_to_point(hits[0]))


def _check_nondegenerate(poly: Polygon) -> None:
    vs = poly.vertices
    if len(vs) < 3:
        raise ValueError("polygon needs at least three vertices")
    for k in range(len(vs)):
        if points_close(vs[k], vs[(k + 1) % len(vs)]):
            raise ValueError("degenerate polygon: consecutive vertices coincide")


def is_simple(poly: Polygon) -> bool:
    """No two non-adjacent sides meet; adjacent sides meet only at the
    shared vertex.  Raises on degenerate input."""
    _check_nondegenerate(poly)
    vs = poly.vertices
    m = len(vs)
    sides = [(vs[k], vs[(k + 1) % m]) for k in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            adjacent = (j == i + 1) or (i == 0 and j == m - 1)
            hits, overlap = _seg_hits(sides[i], sides[j])
            if overlap:
                return False
            if not adjacent:
                if hits:
                    return False
                continue
            shared = vs[j] if j == i + 1 else vs[0]
            ks = _klein(shared)
            for h in hits:
                if abs(h - ks) > SEGMENT_TOL:
                    return False
    return True


def _turning_angles(poly: Polygon) -> list[float]:
    """Signed exterior turn at each finite vertex (ideal vertices skipped)."""
    vs = poly.vertices
    m = len(vs)
    turns = []
    for k in range(m):
        v = vs[k]
        if v.is_ideal:
            continue
        g = move_to_i(v)
        arrive = -_dir_at_i(g(vs[(k - 1) % m]))
        depart = _dir_at_i(g(vs[(k + 1) % m]))
        turns.append(wrap_angle(cmath.phase(depart * arrive.conjugate())))
    return turns


def is_convex(poly: Polygon) -> bool:
    """Simple with all interior angles at most pi for one boundary orientation."""
    if not is_simple(poly):
        return False
    turns = _turning_angles(poly)
    return all(t >= -1e-9 for t in turns) or all(t <= 1e-9 for t in turns)


# ---------------------------------------------------------------------------
# isometry classification helpers


def fixed_points(g: Isometry) -> list[Point]:
    """Fixed points: two ideal (hyperbolic, repulsive first), one ideal
    (parabolic) or one finite (elliptic)."""
    if g.is_central():
        raise ValueError("central element fixes every point")
    t = g.trace
    if abs(t) > 2.0:
        geo = axis(g)
        return [geo.start, geo.end]
    if abs(abs(t) - 2.0) <= 1e-9:
        if g.c == 0.0:
            return [INFINITY]
        return [Point.ideal((g.a - g.d) / (2.0 * g.c))]
    im = math.sqrt(max(4.0 - t * t, 0.0)) / (2.0 * abs(g.c))
    return [Point.finite((g.a - g.d) / (2.0 * g.c), im)]


def axis(g: Isometry) -> Geodesic:
    """Invariant geodesic of a hyperbolic isometry, oriented from the
    repulsive to the attractive fixed point."""
    t = g.trace
    if abs(t) <= 2.0:
        raise ValueError("axis requires a hyperbolic isometry (|trace| > 2)")
    if g.c == 0.0:
        other = Point.ideal(g.b / (g.d - g.a))
        if abs(g.a) > abs(g.d):
            return Geodesic(other, INFINITY)
        return Geodesic(INFINITY, other)
    disc = math.sqrt(t * t - 4.0)
    t_plus = ((g.a - g.d) + disc) / (2.0 * g.c)
    t_minus = ((g.a - g.d) - disc) / (2.0 * g.c)
    if t > 2.0:
        return Geodesic(Point.ideal(t_minus), Point.ideal(t_plus))
    return Geodesic(Point.ideal(t_plus), Point.ideal(t_minus))


def translation_length(g: Isometry) -> float:
    """2 arcosh(|tr|/2) for hyperbolic g."""
    t = abs(g.trace)
    if t <= 2.0:
        raise ValueError("translation length requires a hyperbolic isometry")
    return 2.0 * math.acosh(0.5 * t)


def dist_to_axis(g: Isometry, p: Point) -> float:
    """Perpendicular hyperbolic distance from a finite point to Axis(g)."""
    if p.is_ideal:
        raise ValueError("dist_to_axis requires a finite point")
    geo = axis(g)
    if geo.start.is_infinity or geo.end.is_infinity:
        b = geo.start.x if geo.end.is_infinity else geo.end.x
        return math.asinh(abs(p.x - b) / p.y)
    u, v = geo.start.x, geo.end.x
    c = 0.5 * (u + v)
    r = 0.5 * abs(v - u)
    num = abs((p.x - c) ** 2 + p.y**2 - r * r)
    return math.asinh(num / (2.0 * r * p.y))


def axes_cross(g: Isometry, h: Isometry) -> bool:
    """True when both are hyperbolic and their axes cross transversely."""
    if abs(g.trace) <= 2.0 or abs(h.trace) <= 2.0:
        return False
    ga = axis(g)
    ha = axis(h)
    es = [to_disk(e) for e in (ga.start, ga.end, ha.start, ha.end)]
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(es[i] - es[j]) < 1e-9:
                return False
    a1, a2, b1, b2 = (cmath.phase(e) for e in es)
    span = (a2 - a1) % _TWO_PI
    in_arc = sum(1 for b in (b1, b2) if 0.0 < (b - a1) % _TWO_PI < span)
    return in_arc == 1
