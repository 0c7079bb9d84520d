"""Seeded random generation of isometries, lifts and points.

Every sweep derives one ``random.Random`` per trial from a single
64-bit seed, so results are reproducible and trials are independent of
execution order.
"""

from __future__ import annotations

import math
import random

from .cover import LiftedIsometry, lift
from .halfplane import (
    INFINITY,
    Isometry,
    Point,
    from_disk,
    rotation_about_i,
    standard_parabolic,
    vertical_translation,
)

_TWO_PI = 2.0 * math.pi


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent generator for one trial of a seeded sweep."""
    return random.Random((seed & 0xFFFFFFFFFFFFFFFF) * 1_000_003 + trial)


def random_isometry(
    rng: random.Random, avoid_parabolic_tol: float = 1e-6
) -> Isometry:
    """Normal matrix entries normalised to determinant one, redrawn away
    from the parabolic locus and from tiny determinants."""
    while True:
        a, b, c, d = (rng.gauss(0.0, 1.0) for _ in range(4))
        if a * d - b * c < 0.2:
            continue
        m = Isometry(a, b, c, d)
        if abs(abs(m.trace) - 2.0) < avoid_parabolic_tol:
            continue
        return m


def _random_conjugator(rng: random.Random, max_translation: float = 2.0) -> Isometry:
    """Bounded-norm conjugator; keeps conjugated standard forms far
    enough from the boundary for double precision."""
    r1 = rotation_about_i(rng.uniform(-_TWO_PI, _TWO_PI))
    r2 = rotation_about_i(rng.uniform(-_TWO_PI, _TWO_PI))
    return r1 @ vertical_translation(rng.uniform(0.0, max_translation)) @ r2


def random_isometry_spread(
    rng: random.Random, max_translation: float = 6.0
) -> Isometry:
    """Rotation-translation-rotation sampling; large translations push
    orbit points toward the boundary (used for quasimorphism tightness)."""
    r1 = rotation_about_i(rng.uniform(-_TWO_PI, _TWO_PI))
    r2 = rotation_about_i(rng.uniform(-_TWO_PI, _TWO_PI))
    return r1 @ vertical_translation(rng.uniform(0.0, max_translation)) @ r2


def random_hyperbolic(
    rng: random.Random, min_length: float = 0.2, max_length: float = 4.0
) -> Isometry:
    g = _random_conjugator(rng)
    ell = rng.uniform(min_length, max_length) * rng.choice((-1.0, 1.0))
    return g @ vertical_translation(ell) @ g.inverse()


def random_elliptic(rng: random.Random, min_angle: float = 0.1) -> Isometry:
    g = _random_conjugator(rng)
    psi = rng.uniform(min_angle, _TWO_PI - min_angle)
    return g @ rotation_about_i(psi) @ g.inverse()


def random_parabolic(rng: random.Random) -> Isometry:
    g = _random_conjugator(rng)
    t = rng.uniform(0.2, 3.0) * rng.choice((-1.0, 1.0))
    sign = rng.choice((1.0, -1.0))
    p = standard_parabolic(t)
    return g @ (p if sign > 0 else -p) @ g.inverse()


def random_mixed_isometry(rng: random.Random) -> Isometry:
    """Hyperbolic, elliptic or exactly-parabolic plane isometry."""
    u = rng.random()
    if u < 0.4:
        return random_hyperbolic(rng)
    if u < 0.8:
        return random_elliptic(rng)
    return random_parabolic(rng)


def random_lifted(
    rng: random.Random,
    mat: Isometry | None = None,
    n_range: int = 2,
    spread: float | None = None,
) -> LiftedIsometry:
    """Random lift of a random (or supplied) isometry, hint in
    [-n_range, n_range]."""
    if mat is None:
        if spread is not None:
            mat = random_isometry_spread(rng, max_translation=spread)
        else:
            mat = random_isometry(rng)
    return lift(mat, rng.randint(-n_range, n_range))


def random_handle_generator(
    rng: random.Random, max_length: float = 4.0
) -> LiftedIsometry:
    """Generator draw for genus handles in relator sweeps: half the
    draws are long conjugated hyperbolics, whose axes cross often
    enough to reach nonzero winding."""
    if rng.random() < 0.5:
        mat = random_hyperbolic(
            rng, min_length=0.25 * max_length, max_length=max_length
        )
    else:
        mat = random_isometry(rng)
    return lift(mat, rng.randint(-2, 2))


def random_finite_point(rng: random.Random, spread: float = 1.0) -> Point:
    return Point.finite(rng.gauss(0.0, spread), math.exp(rng.gauss(0.0, spread)))


def random_ideal_point(rng: random.Random) -> Point:
    """Boundary point with chart-uniform distribution (infinity included)."""
    if rng.random() < 1.0 / 64.0:
        return INFINITY
    phi = rng.uniform(0.0, _TWO_PI)
    return from_disk(complex(math.cos(phi), math.sin(phi)), boundary_tol=1.0)
