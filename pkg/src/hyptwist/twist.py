"""The twist of a lifted isometry at a point, with independent oracles.

``twist`` evaluates a closed form obtained by conjugating the base
point to i and composing in the cover; ``twist_mod2pi`` measures the
same angle geometrically modulo a full turn, and ``twist_continuation``
unwraps the geometric value along a geodesic path.  The three must
agree, and the test suite holds them to that.
"""

from __future__ import annotations

import cmath
import functools
import math

from .cover import (
    LiftedIsometry,
    classify,
    compose,
    inverse,
)
from .halfplane import (
    I_POINT,
    Isometry,
    Point,
    _tangent,
    axis,
    distance,
    fixed_points,
    from_disk,
    geodesic_interpolate,
    move_to_i,
    to_disk,
    tri_area,
    wrap_angle,
)

_PI = math.pi
_TWO_PI = 2.0 * math.pi

# Distance below which a point counts as fixed in the geometric oracle.
FIXED_POINT_TOL = 1e-9
# Chart distance below which an ideal point is taken to be an axis
# endpoint / parabolic fixed point, and the band around it that raises.
ENDPOINT_MATCH_TOL = 1e-12
ENDPOINT_AMBIGUITY_TOL = 1e-9


class AxisEndpointAmbiguityError(ValueError):
    """Ideal evaluation too close to (but not at) a boundary fixed point."""


def twist(a: LiftedIsometry, p: Point) -> float:
    """Twist of the lifted isometry at a finite point.

    Conjugates p to i by the canonical map g and reads the angle off the
    cover's group law; equals ``2 a.theta`` exactly at p = i.
    """
    if p.is_ideal:
        raise ValueError("twist requires a finite point; use twist_at_infinity")
    g = move_to_i(p)
    alpha = a.mat
    gi = g(I_POINT)
    gai = g(alpha(I_POINT))
    gap = g(alpha(p))
    return (
        2.0 * a.theta
        - tri_area(I_POINT, gi, gai)
        - tri_area(I_POINT, gai, gap)
    )


def twist_value(a: LiftedIsometry, p: Point) -> float:
    """Twist at a finite or ideal point (dispatching on the point kind)."""
    if p.is_ideal:
        return twist_at_infinity(a, p)
    return twist(a, p)


def twist_mod2pi(g: Isometry, p: Point) -> float:
    """Geometric twist of a plane isometry at a finite point, in (-pi, pi].

    Measures the image of the forward unit tangent against parallel
    transport along the geodesic from p to g(p); at (numerically) fixed
    points it returns the rotation angle of the derivative instead.
    """
    if p.is_ideal:
        raise ValueError("twist_mod2pi requires a finite point")
    q = g(p)
    if distance(p, q) < FIXED_POINT_TOL:
        return wrap_angle(cmath.phase(g.deriv(p.z)))
    v = _tangent(p.z, q)
    w = -_tangent(q.z, p)  # forward direction of the same geodesic at q
    u = g.deriv(p.z) * v
    return wrap_angle(cmath.phase(u * w.conjugate()))


def twist_continuation(a: LiftedIsometry, p: Point, steps: int) -> float:
    """Twist by unwrapping the mod-2pi oracle along the geodesic i -> p.

    Anchored at the exact value ``2 a.theta`` at i.  Raises when two
    consecutive samples disagree by pi or more (sampling too coarse).
    """
    if steps < 2:
        raise ValueError("continuation needs at least two samples")
    if p.is_ideal:
        raise ValueError("continuation requires a finite point")
    current = 2.0 * a.theta
    if p.x == 0.0 and p.y == 1.0:
        return current
    g = a.mat
    for k in range(1, steps):
        q = geodesic_interpolate(I_POINT, p, k / (steps - 1))
        m = twist_mod2pi(g, q)
        cand = m + _TWO_PI * round((current - m) / _TWO_PI)
        if abs(cand - current) >= _PI:
            raise ValueError(
                f"twist jump of {abs(cand - current):.3f} at step {k}; "
                "increase the sample count"
            )
        current = cand
    return current


def twist_continuation_auto(
    a: LiftedIsometry, p: Point, steps: int = 64, max_steps: int = 65536
) -> float:
    """Continuation oracle with step doubling on coarse-sampling failures."""
    while True:
        try:
            return twist_continuation(a, p, steps)
        except ValueError:
            if steps >= max_steps:
                raise
            steps *= 2


def _limit_multiple_at_angle(a: LiftedIsometry, phi: float) -> int:
    """round(twist/pi) in the radial limit toward the boundary point at
    chart angle phi, verified at two approach scales."""
    ks = []
    for eps in (1e-5, 1e-7):
        q = from_disk((1.0 - eps) * cmath.rect(1.0, phi))
        ks.append(round(twist(a, q) / _PI))
    if ks[0] != ks[1]:
        raise ArithmeticError(
            f"boundary twist limit did not stabilise at angle {phi} ({ks})"
        )
    return ks[0]


@functools.lru_cache(maxsize=4096)
def _hyperbolic_arc_values(a: LiftedIsometry) -> tuple[float, float, int, int]:
    """For hyperbolic a: (phase of axis start, phase of axis end, twist
    multiple of pi on the anticlockwise arc start->end, multiple on the
    other arc)."""
    geo = axis(a.mat)
    w1 = to_disk(geo.start)
    w2 = to_disk(geo.end)
    phi1 = cmath.phase(w1)
    phi2 = cmath.phase(w2)
    span = (phi2 - phi1) % _TWO_PI
    mid_a = phi1 + 0.5 * span
    mid_b = phi2 + 0.5 * (_TWO_PI - span)
    k_a = _limit_multiple_at_angle(a, mid_a)
    k_b = _limit_multiple_at_angle(a, mid_b)
    return phi1, phi2, k_a, k_b


def twist_at_infinity(a: LiftedIsometry, p: Point) -> float:
    """Twist at an ideal point: always an integer multiple of pi.

    Central powers give 2n pi everywhere; elliptics (2n -+ 1) pi;
    parabolics 2n pi at the fixed point and (2n +- chirality) pi away
    from it; hyperbolics 2n pi at the axis endpoints and (2n +- 1) pi on
    the two open side arcs, the side values pinned by a limit
    evaluation.  Raises :class:`AxisEndpointAmbiguityError` within the
    ambiguity band of a boundary fixed point.
    """
    if not p.is_ideal:
        raise ValueError("twist_at_infinity requires an ideal point")
    region = classify(a)
    n = region.n
    if region.kind == "central":
        return 2.0 * n * _PI
    if region.kind == "ell":
        k = (2 * n - 1) if n > 0 else (2 * n + 1)
        return k * _PI
    if region.kind == "par":
        fp = fixed_points(a.mat)[0]
        d = abs(to_disk(p) - to_disk(fp))
        if d <= ENDPOINT_MATCH_TOL:
            return 2.0 * n * _PI
        if d <= ENDPOINT_AMBIGUITY_TOL:
            raise AxisEndpointAmbiguityError(
                f"ideal point within {d:.2e} of the parabolic fixed point"
            )
        return (2 * n + region.chirality) * _PI
    # hyperbolic
    phi1, phi2, k_a, k_b = _hyperbolic_arc_values(a)
    w = to_disk(p)
    d = min(abs(w - cmath.rect(1.0, phi1)), abs(w - cmath.rect(1.0, phi2)))
    if d <= ENDPOINT_MATCH_TOL:
        return 2.0 * n * _PI
    if d <= ENDPOINT_AMBIGUITY_TOL:
        raise AxisEndpointAmbiguityError(
            f"ideal point within {d:.2e} of an axis endpoint"
        )
    phi = cmath.phase(w)
    span = (phi2 - phi1) % _TWO_PI
    on_first_arc = 0.0 < (phi - phi1) % _TWO_PI < span
    return (k_a if on_first_arc else k_b) * _PI


def check_composition(a: LiftedIsometry, b: LiftedIsometry, p: Point) -> float:
    """Residual of the composition identity at a finite or ideal point."""
    alpha = a.mat
    beta = b.mat
    ap = alpha(p)
    return (
        twist_value(compose(b, a), p)
        - twist_value(a, p)
        - twist_value(b, ap)
        + tri_area(p, ap, beta(ap))
    )


def check_translation_invariance(a: LiftedIsometry, p: Point, n: int) -> float:
    """Residual of twist invariance under moving p by the n-th power of a."""
    moved = a.mat.power(n)(p)
    return twist_value(a, p) - twist_value(a, moved)
