"""Named verification sweeps for every lemma-level property.

Each suite draws seeded random instances, measures residuals against
the stated tolerance and reports the first counterexample if any.
The same suites back the command-line ``verify`` command and the
acceptance tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

from . import documents
from .commutator import (
    allowed_commutator_region,
    axes_crossing_equivalence,
    commutator,
    commutator_area_identity,
    CommutatorTheoremError,
    goldman_commutator_trace,
    goldman_pair,
    pentagon,
    trace_region_corollary,
)
from .cover import (
    PARABOLIC_TOL,
    classify,
    compose,
    inverse,
    lift,
    polar_theta,
    trace,
)
from .halfplane import (
    I_POINT,
    Point,
    axis,
    standard_parabolic,
    vertical_translation,
    wrap_angle,
)
from .sampling import (
    random_finite_point,
    random_hyperbolic,
    random_ideal_point,
    random_isometry,
    random_lifted,
    random_mixed_isometry,
    trial_rng,
)
from .surface import (
    SurfaceRep,
    c_polygon,
    d_polygon,
    efficient_lift,
    milnor_wood_sweep,
)
from .twist import (
    AxisEndpointAmbiguityError,
    check_composition,
    twist,
    twist_at_infinity,
    twist_value,
)

_PI = math.pi


@dataclass
class VerifyResult:
    suite: str
    passed: bool
    trials: int
    seed: int
    max_residual: float | None = None
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "trials": self.trials,
            "seed": self.seed,
            "max_residual": self.max_residual,
            "details": self.details,
            "counterexample": self.counterexample,
        }


def _pair_example(a, b, p, residual) -> dict:
    return {
        "a": documents.generator_to_obj(a),
        "b": documents.generator_to_obj(b),
        "point": documents.point_obj(p),
        "residual": residual,
    }


def _residual_sweep(
    name: str,
    trials: int,
    seed: int,
    tol: float,
    value: Callable[[Any, Any, Point], float],
    ideal_fraction: float = 0.0,
    ideal_tol: float = 1e-6,
) -> VerifyResult:
    worst = 0.0
    example = None
    passed = True
    for t in range(trials):
        rng = trial_rng(seed, t)
        a = random_lifted(rng)
        b = random_lifted(rng)
        use_ideal = rng.random() < ideal_fraction
        p = random_ideal_point(rng) if use_ideal else random_finite_point(rng)
        try:
            r = abs(value(a, b, p))
        except AxisEndpointAmbiguityError:
            continue
        bound = ideal_tol if use_ideal else tol
        if r > worst:
            worst = r
        if r > bound and passed:
            passed = False
            example = _pair_example(a, b, p, r)
    return VerifyResult(name, passed, trials, seed, worst, counterexample=example)


def verify_composition(trials: int = 10000, seed: int = 0, tol: float = 1e-8) -> VerifyResult:
    return _residual_sweep(
        "composition", trials, seed, tol, check_composition, ideal_fraction=0.2
    )


def verify_addition(trials: int = 10000, seed: int = 0, tol: float = 1e-8) -> VerifyResult:
    from .halfplane import tri_area

    def value(a, b, p):
        beta = b.mat
        return (
            twist_value(compose(b, a), p)
            - twist_value(b, p)
            - twist_value(a, p)
            + tri_area(p, beta(p), beta(a.mat(p)))
        )

    return _residual_sweep("addition", trials, seed, tol, value, ideal_fraction=0.2)


def verify_conjugation(trials: int = 10000, seed: int = 0, tol: float = 1e-8) -> VerifyResult:
    def value(a, b, p):
        return twist_value(a, p) - twist_value(
            compose(b, compose(a, inverse(b))), b.mat(p)
        )

    return _residual_sweep("conjugation", trials, seed, tol, value, ideal_fraction=0.2)


def verify_inverse(trials: int = 10000, seed: int = 0, tol: float = 1e-8) -> VerifyResult:
    def value(a, b, p):
        return twist_value(a, p) + twist_value(inverse(a), p)

    return _residual_sweep("inverse", trials, seed, tol, value, ideal_fraction=0.2)


def verify_bounds(
    trials: int = 10000, seed: int = 0, points_per_element: int = 10, tol: float = 1e-6
) -> VerifyResult:
    """Twist ranges per region at finite points, and the integer-multiple
    table at ideal points."""
    worst_gap = 0.0
    example = None
    passed = True
    for t in range(trials):
        rng = trial_rng(seed, t)
        a = lift(random_mixed_isometry(rng), rng.randint(-2, 2))
        region = classify(a)
        lo, hi = region.twist_range()
        for _ in range(points_per_element):
            p = random_finite_point(rng)
            tw = twist(a, p)
            if not lo < tw < hi:
                passed = False
                if example is None:
                    example = _pair_example(a, a, p, tw)
        for _ in range(points_per_element):
            q = random_ideal_point(rng)
            try:
                tw = twist_at_infinity(a, q)
            except AxisEndpointAmbiguityError:
                continue
            gap = abs(tw / _PI - round(tw / _PI))
            worst_gap = max(worst_gap, gap)
            if gap > tol / _PI:
                passed = False
                if example is None:
                    example = _pair_example(a, a, q, tw)
    return VerifyResult(
        "bounds", passed, trials, seed, worst_gap, counterexample=example
    )


def verify_pentagon(
    trials: int = 10000,
    seed: int = 0,
    simple_tol: float = 1e-6,
    congruence_tol: float = 1e-6,
    min_simple: int = 200,
) -> VerifyResult:
    """Exact identity on simple pentagons, mod-2pi congruence on all."""
    worst_simple = 0.0
    worst_cong = 0.0
    n_simple = 0
    example = None
    passed = True
    for t in range(trials):
        rng = trial_rng(seed, t)
        a = random_lifted(rng)
        b = random_lifted(rng)
        p = random_finite_point(rng)
        rep = pentagon(a, b, p)
        if rep.degenerate:
            continue
        cong = abs(wrap_angle(rep.area - rep.twist_of_commutator))
        worst_cong = max(worst_cong, cong)
        if cong > congruence_tol and passed:
            passed = False
            example = _pair_example(a, b, p, cong)
        if rep.simple:
            n_simple += 1
            worst_simple = max(worst_simple, abs(rep.residual))
            if abs(rep.residual) > simple_tol and passed:
                passed = False
                example = _pair_example(a, b, p, rep.residual)
    if n_simple < min_simple:
        passed = False
    return VerifyResult(
        "pentagon",
        passed,
        trials,
        seed,
        worst_cong,
        details={"simple_instances": n_simple, "max_simple_residual": worst_simple},
        counterexample=example,
    )


def verify_commutator_area(
    trials: int = 10000, seed: int = 0, tol: float = 1e-8
) -> VerifyResult:
    """Three-triangle identity plus the strict 3 pi twist bound."""
    worst = 0.0
    max_twist = 0.0
    example = None
    passed = True
    for t in range(trials):
        rng = trial_rng(seed, t)
        a = random_lifted(rng)
        b = random_lifted(rng)
        p = random_finite_point(rng)
        r = abs(commutator_area_identity(a, b, p))
        tw = abs(twist_value(commutator(a, b), p))
        worst = max(worst, r)
        max_twist = max(max_twist, tw)
        if (r > tol or tw >= 3 * _PI) and passed:
            passed = False
            example = _pair_example(a, b, p, r)
    return VerifyResult(
        "commutator-area",
        passed,
        trials,
        seed,
        worst,
        details={"max_commutator_twist": max_twist},
        counterexample=example,
    )


def _parabolic_commutator_pair(rng):
    """Pairs whose commutator has trace exactly +-2: crossing long
    hyperbolics tuned to trace -2, or a parabolic sharing a fixed point
    with a hyperbolic (trace +2)."""
    if rng.random() < 0.5:
        while True:
            x = rng.uniform(1.0, 2.5)
            y = rng.uniform(1.0, 2.5)
            s = math.sinh(x) * math.sinh(y)
            if abs(s) >= 1.0:
                r = math.sqrt(1.0 - 1.0 / (s * s))
                g, h = goldman_pair(x, y, r)
                return lift(g, rng.randint(-1, 1)), lift(h, rng.randint(-1, 1))
    g = standard_parabolic(rng.uniform(0.5, 2.0) * rng.choice((-1.0, 1.0)))
    h = vertical_translation(rng.uniform(0.5, 2.0) * rng.choice((-1.0, 1.0)))
    conj = random_hyperbolic(rng)
    return (
        lift(conj @ g @ conj.inverse(), rng.randint(-1, 1)),
        lift(conj @ h @ conj.inverse(), rng.randint(-1, 1)),
    )


def verify_regions(
    trials: int = 100000, seed: int = 0, parabolic_trials: int = 1000
) -> VerifyResult:
    """Commutators only land in the allowed regions."""
    example = None
    passed = True
    for t in range(trials):
        rng = trial_rng(seed, t)
        if t < parabolic_trials:
            a, b = _parabolic_commutator_pair(rng)
        else:
            a = random_lifted(rng)
            b = random_lifted(rng)
        region = classify(commutator(a, b))
        if not allowed_commutator_region(region) and passed:
            passed = False
            example = _pair_example(a, b, I_POINT, 0.0)
            example["region"] = str(region)
    return VerifyResult("regions", passed, trials, seed, counterexample=example)


def verify_traces(
    trials: int = 100000, seed: int = 0, parabolic_trials: int = 1000
) -> VerifyResult:
    """Five-case trace table for commutators."""
    example = None
    passed = True
    for t in range(trials):
        rng = trial_rng(seed, t)
        if t < parabolic_trials:
            a, b = _parabolic_commutator_pair(rng)
        else:
            a = random_lifted(rng)
            b = random_lifted(rng)
        try:
            trace_region_corollary(a, b)
        except CommutatorTheoremError as exc:
            if passed:
                passed = False
                example = _pair_example(a, b, I_POINT, 0.0)
                example["violation"] = str(exc)
    return VerifyResult("traces", passed, trials, seed, counterexample=example)


def verify_axes(trials: int = 100000, seed: int = 0) -> VerifyResult:
    """Crossing axes <=> index +-1 commutator <=> commutator trace < 2."""
    example = None
    passed = True
    checked = 0
    for t in range(trials):
        rng = trial_rng(seed, t)
        g = random_mixed_isometry(rng)
        h = random_mixed_isometry(rng)
        if abs(trace(commutator(lift(g, 0), lift(h, 0))) - 2.0) < 1e-9:
            continue  # boundary of the equivalence: commuting-like pairs
        checked += 1
        rep = axes_crossing_equivalence(g, h)
        if not rep.consistent and passed:
            passed = False
            example = {
                "g": documents.matrix_rows(g),
                "h": documents.matrix_rows(h),
                "crossing": rep.crossing,
                "region_in_set": rep.region_in_set,
                "trace_below_two": rep.trace_below_two,
            }
    return VerifyResult(
        "axes", passed, trials, seed, details={"checked": checked}, counterexample=example
    )


def verify_goldman(
    trials: int = 20, seed: int = 0, tol: float = 1e-9
) -> VerifyResult:
    """Commutator trace of the explicit pair against its closed form on
    a trials^3 grid."""
    worst = 0.0
    example = None
    passed = True
    m = trials
    for ix in range(m):
        x = -2.0 + 4.0 * (ix + 0.5) / m
        for iy in range(m):
            y = -2.0 + 4.0 * (iy + 0.5) / m
            for ir in range(m):
                r = -0.95 + 1.9 * (ir + 0.5) / m
                g, h = goldman_pair(x, y, r)
                c = commutator(lift(g, 0), lift(h, 0))
                err = abs(trace(c) - goldman_commutator_trace(x, y, r))
                if err > worst:
                    worst = err
                if err > tol and passed:
                    passed = False
                    example = {"x": x, "y": y, "r": r, "error": err}
    return VerifyResult(
        "goldman", passed, m**3, seed, worst, counterexample=example
    )


def verify_cpoly(
    trials: int = 2000, seed: int = 0, tol: float = 1e-7, min_simple: int = 50
) -> VerifyResult:
    """Composition-polygon identity on simple instances."""
    worst = 0.0
    n_simple = 0
    example = None
    passed = True
    for t in range(trials):
        rng = trial_rng(seed, t)
        k = rng.choice((2, 3, 4))
        cs = [random_lifted(rng) for _ in range(k)]
        if rng.random() < 0.3:
            prod = cs[0].mat
            for c in cs[1:]:
                prod = prod @ c.mat
            cs.append(lift(prod.inverse(), 0))
        p = random_finite_point(rng)
        rep = c_polygon(cs, p)
        if rep.degenerate or not rep.simple:
            continue
        n_simple += 1
        worst = max(worst, abs(rep.residual))
        if abs(rep.residual) > tol and passed:
            passed = False
            example = {
                "factors": [documents.generator_to_obj(c) for c in cs],
                "point": documents.point_obj(p),
                "residual": rep.residual,
            }
    if n_simple < min_simple:
        passed = False
    return VerifyResult(
        "cpoly",
        passed,
        trials,
        seed,
        worst,
        details={"simple_instances": n_simple},
        counterexample=example,
    )


def goldman_surface_rep(x: float, y: float, r: float) -> SurfaceRep:
    """Genus-one, one-boundary representation from the explicit pair,
    based at the apex of the commutator axis (closes up by construction)."""
    alpha, beta = goldman_pair(x, y, r)
    la, lb = lift(alpha, 0), lift(beta, 0)
    cmat = (
        alpha @ beta @ alpha.inverse() @ beta.inverse()
    )
    geo = axis(cmat)
    u, v = geo.start.x, geo.end.x
    p = Point.finite(0.5 * (u + v), 0.5 * abs(v - u))
    gamma = efficient_lift(lift(cmat.inverse(), 0), p)
    return SurfaceRep(1, 1, (la,), (lb,), (gamma,), p)


def three_boundary_rep(rng) -> SurfaceRep:
    """Random genus-zero representation with three boundary curves that
    closes up by construction."""
    c1 = lift(random_hyperbolic(rng, 0.5, 2.0), 0)
    c2 = lift(random_hyperbolic(rng, 0.5, 2.0), 0)
    c3 = lift((c1.mat @ c2.mat).inverse(), 0)
    p = random_finite_point(rng, 0.7)
    return SurfaceRep(0, 3, (), (), (c1, c2, c3), p)


def verify_dpoly(
    trials: int = 2000,
    seed: int = 0,
    tol: float = 1e-6,
    min_convex: int = 50,
    decomposition_tol: float = 1e-6,
) -> VerifyResult:
    """Relator-polygon identity on convex instances plus the polygon =
    composition polygon + pentagons decomposition on all instances."""
    worst = 0.0
    worst_dec = 0.0
    n_convex = 0
    example = None
    passed = True
    for t in range(trials):
        rng = trial_rng(seed, t)
        if t % 2 == 0:
            x = rng.uniform(0.7, 2.3)
            y = rng.uniform(0.7, 2.3)
            r = rng.uniform(-0.7, 0.7)
            rep = goldman_surface_rep(x, y, r)
        else:
            rep = three_boundary_rep(rng)
        try:
            report = d_polygon(rep)
        except ValueError:
            continue
        if report.degenerate:
            continue
        worst_dec = max(worst_dec, abs(report.decomposition_residual))
        if abs(report.decomposition_residual) > decomposition_tol and passed:
            passed = False
            example = {"degenerate_decomposition": report.decomposition_residual}
        if report.convex:
            n_convex += 1
            worst = max(worst, abs(report.residual))
            if abs(report.residual) > tol and passed:
                passed = False
                example = {
                    "rep": documents.rep_to_dict(rep),
                    "residual": report.residual,
                }
    if n_convex < min_convex:
        passed = False
    return VerifyResult(
        "dpoly",
        passed,
        trials,
        seed,
        worst,
        details={"convex_instances": n_convex, "max_decomposition_residual": worst_dec},
        counterexample=example,
    )


def verify_milnor_wood(
    trials: int = 10000, seed: int = 0, g: int = 1, n: int = 1
) -> VerifyResult:
    report = milnor_wood_sweep(g, n, trials, seed)
    example = None
    if report.violations:
        v = report.violations[0]
        example = {
            "trial": v.trial,
            "rep": documents.rep_to_dict(v.rep),
            "m": v.report.m,
            "chi": v.report.chi,
        }
    return VerifyResult(
        "milnor-wood",
        report.passed,
        trials,
        seed,
        details={
            "genus": g,
            "boundary_count": n,
            "histogram": {str(k): v for k, v in sorted(report.histogram.items())},
        },
        counterexample=example,
    )


SUITES: dict[str, Callable[..., VerifyResult]] = {
    "composition": verify_composition,
    "addition": verify_addition,
    "conjugation": verify_conjugation,
    "inverse": verify_inverse,
    "bounds": verify_bounds,
    "pentagon": verify_pentagon,
    "commutator-area": verify_commutator_area,
    "regions": verify_regions,
    "traces": verify_traces,
    "axes": verify_axes,
    "goldman": verify_goldman,
    "cpoly": verify_cpoly,
    "dpoly": verify_dpoly,
    "milnor-wood": verify_milnor_wood,
}
