"""Commutators in the cover: the pentagon identity, area formula,
region theorem, trace corollary and the explicit crossing-axes family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import (
    LiftedIsometry,
    PARABOLIC_TOL,
    Region,
    classify,
    compose,
    inverse,
    lift,
    trace,
)
from .halfplane import (
    Isometry,
    Point,
    Polygon,
    axes_cross,
    is_simple,
    points_close,
    poly_area,
    tri_area,
)
from .twist import twist_value

_PI = math.pi


class CommutatorTheoremError(AssertionError):
    """A violation of the commutator region/trace theorem: means a bug."""


def commutator(a: LiftedIsometry, b: LiftedIsometry) -> LiftedIsometry:
    """The lifted commutator a b a^-1 b^-1 (independent of lift choice)."""
    return compose(compose(compose(a, b), inverse(a)), inverse(b))


@dataclass(frozen=True)
class PentagonReport:
    """Pentagon generated by the plane parts of (a, b) at p.

    ``polygon`` carries the boundary order p0, p4, p1, p2, p3;
    ``twist_of_commutator`` is the twist of the commutator of the
    inverse lifts at p, and ``residual`` is area minus that twist.
    """

    polygon: Polygon
    degenerate: bool
    simple: bool
    area: float
    twist_of_commutator: float
    residual: float


def pentagon_vertices(
    alpha: Isometry, beta: Isometry, p: Point
) -> tuple[Point, Point, Point, Point, Point]:
    """Orbit vertices p0..p4 = p, beta p, alpha beta p, beta^-1 alpha
    beta p, alpha^-1 beta^-1 alpha beta p."""
    p1 = beta(p)
    p2 = alpha(p1)
    p3 = beta.inverse()(p2)
    p4 = alpha.inverse()(p3)
    return p, p1, p2, p3, p4


def pentagon(a: LiftedIsometry, b: LiftedIsometry, p: Point) -> PentagonReport:
    """Build Pent at a finite point and compare its fan area with the
    twist of the commutator of the inverse lifts."""
    if p.is_ideal:
        raise ValueError("pentagon requires a finite base point")
    p0, p1, p2, p3, p4 = pentagon_vertices(a.mat, b.mat, p)
    poly = Polygon((p0, p4, p1, p2, p3))
    vs = poly.vertices
    degenerate = any(
        points_close(vs[k], vs[(k + 1) % 5]) for k in range(5)
    )
    simple = False if degenerate else is_simple(poly)
    area = poly_area(poly)
    tw = twist_value(commutator(inverse(a), inverse(b)), p)
    return PentagonReport(poly, degenerate, simple, area, tw, area - tw)


def commutator_area_identity(
    a: LiftedIsometry, b: LiftedIsometry, p: Point
) -> float:
    """Residual of the three-triangle area formula for the commutator twist."""
    alpha = a.mat
    beta = b.mat
    ab = alpha @ beta
    comm = ab @ (beta @ alpha).inverse()
    return (
        twist_value(commutator(a, b), p)
        - tri_area(p, beta(p), beta(alpha(p)))
        + tri_area(p, alpha(p), ab(p))
        + tri_area(p, ab(p), comm(p))
    )


def cross_ratio_identity(a: LiftedIsometry, b: LiftedIsometry, p: Point) -> float:
    """Residual of the twist cross-ratio identity against the two
    pentagon fan areas (exact whenever the pentagon identity is)."""
    if p.is_ideal:
        raise ValueError("cross-ratio identity requires a finite base point")
    alpha = a.mat
    beta = b.mat
    p0, p1, p2, p3, p4 = pentagon_vertices(alpha, beta, p)
    q = alpha(beta(p))
    lhs = (
        twist_value(a, q)
        - twist_value(a, beta.inverse()(q))
        - twist_value(b, q)
        + twist_value(b, alpha.inverse()(q))
    )
    rhs = poly_area(Polygon((p0, p1, p2, p3, p4))) + poly_area(
        Polygon((p0, p4, p1, p2, p3))
    )
    return lhs - rhs


_ALLOWED_PARABOLIC = {(-1, 1), (0, 1), (0, -1), (1, -1)}


def allowed_commutator_region(r: Region) -> bool:
    """Whether a region can contain a commutator of lifted isometries."""
    if r.kind == "central":
        return r.n == 0
    if r.kind == "hyp":
        return abs(r.n) <= 1
    if r.kind == "ell":
        return abs(r.n) == 1
    return (r.n, r.chirality) in _ALLOWED_PARABOLIC


@dataclass(frozen=True)
class TraceRegionReport:
    trace: float
    region: Region


def trace_region_corollary(
    a: LiftedIsometry, b: LiftedIsometry, par_tol: float = PARABOLIC_TOL
) -> TraceRegionReport:
    """Classify the commutator and check the five-case trace table.

    The table is unconditional, so a mismatch raises
    :class:`CommutatorTheoremError` rather than reporting failure.
    """
    c = commutator(a, b)
    t = trace(c)
    r = classify(c, par_tol=par_tol)
    if abs(t - 2.0) <= par_tol:
        ok = r == Region.central(0) or (r.kind == "par" and r.n == 0)
    elif abs(t + 2.0) <= par_tol:
        ok = r in (Region.parabolic(-1, 1), Region.parabolic(1, -1))
    elif t > 2.0:
        ok = r == Region.hyperbolic(0)
    elif t < -2.0:
        ok = r.kind == "hyp" and abs(r.n) == 1
    else:
        ok = r.kind == "ell" and abs(r.n) == 1
    if not ok:
        raise CommutatorTheoremError(
            f"commutator with trace {t} classified as {r}"
        )
    return TraceRegionReport(t, r)


def goldman_pair(x: float, y: float, r: float) -> tuple[Isometry, Isometry]:
    """The two-parameter-plus-offset hyperbolic pair with axes (-1, 1)
    and (r, infinity); the commutator trace is
    2 + 4 (r^2 - 1) sinh^2 x sinh^2 y."""
    if not -1.0 < r < 1.0:
        raise ValueError("offset parameter must lie in (-1, 1)")
    alpha = Isometry(math.cosh(x), math.sinh(x), math.sinh(x), math.cosh(x))
    ey = math.exp(y)
    beta = Isometry(ey, -2.0 * r * math.sinh(y), 0.0, 1.0 / ey)
    return alpha, beta


def goldman_commutator_trace(x: float, y: float, r: float) -> float:
    """Closed form for the commutator trace of :func:`goldman_pair`."""
    sx = math.sinh(x)
    sy = math.sinh(y)
    return 2.0 + 4.0 * (r * r - 1.0) * sx * sx * sy * sy


_CROSSING_REGIONS = {
    Region.elliptic(1),
    Region.elliptic(-1),
    Region.parabolic(-1, 1),
    Region.parabolic(1, -1),
    Region.hyperbolic(1),
    Region.hyperbolic(-1),
}


@dataclass(frozen=True)
class AxesCrossingReport:
    crossing: bool
    region_in_set: bool
    trace_below_two: bool

    @property
    def consistent(self) -> bool:
        return self.crossing == self.region_in_set == self.trace_below_two


def axes_crossing_equivalence(g: Isometry, h: Isometry) -> AxesCrossingReport:
    """Evaluate the three equivalent conditions: crossing axes, the
    commutator landing in an index +-1 region, and commutator trace < 2."""
    c = commutator(lift(g, 0), lift(h, 0))
    region = classify(c)
    return AxesCrossingReport(
        crossing=axes_cross(g, h),
        region_in_set=region in _CROSSING_REGIONS,
        trace_below_two=trace(c) < 2.0,
    )
