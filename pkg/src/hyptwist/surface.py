"""Surface-group relators in the cover: efficient boundary lifts, the
winding integer of a closed-up representation, the bound it satisfies,
and the two relator polygons with their area identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .commutator import commutator, pentagon, PentagonReport
from .cover import (
    LiftedIsometry,
    central_power,
    compose,
    identity_lift,
    inverse,
    lift,
    z_shift,
)
from .halfplane import (
    IDENTITY,
    I_POINT,
    Isometry,
    Point,
    Polygon,
    is_convex,
    is_simple,
    points_close,
    poly_area,
)
from .twist import twist, twist_value

_PI = math.pi
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SurfaceRep:
    """Generators of a genus-g, n-boundary surface group representation,
    lifted, together with the base point used for twist measurements."""

    genus: int
    boundary_count: int
    alphas: tuple[LiftedIsometry, ...]
    betas: tuple[LiftedIsometry, ...]
    gammas: tuple[LiftedIsometry, ...]
    basepoint: Point

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be nonnegative")
        if len(self.alphas) != self.genus or len(self.betas) != self.genus:
            raise ValueError("need exactly genus many alpha and beta lifts")
        if len(self.gammas) != self.boundary_count:
            raise ValueError("need exactly boundary_count many gamma lifts")
        if self.basepoint.is_ideal:
            raise ValueError("the base point must be finite")

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count

    def plane_relator(self) -> Isometry:
        m = IDENTITY
        for a, b in zip(self.alphas, self.betas):
            am, bm = a.mat, b.mat
            m = m @ (am @ bm @ am.inverse() @ bm.inverse())
        for c in self.gammas:
            m = m @ c.mat
        return m

    def closed_up(self, tol: float = 1e-8) -> bool:
        """Whether the plane relator is the identity isometry within tol."""
        return self.plane_relator().is_central(tol)

    def efficient(self, tol: float = 1e-9) -> bool:
        """Whether every gamma has twist magnitude at most pi at the
        base point."""
        return all(
            abs(twist(c, self.basepoint)) <= _PI + tol for c in self.gammas
        )

    def with_efficient_gammas(self) -> "SurfaceRep":
        return SurfaceRep(
            self.genus,
            self.boundary_count,
            self.alphas,
            self.betas,
            tuple(efficient_lift(c, self.basepoint) for c in self.gammas),
            self.basepoint,
        )


def relator_product(rep: SurfaceRep) -> LiftedIsometry:
    """Left-to-right product of the g lifted commutators and n gammas."""
    acc = identity_lift()
    for a, b in zip(rep.alphas, rep.betas):
        acc = compose(acc, commutator(a, b))
    for c in rep.gammas:
        acc = compose(acc, c)
    return acc


def efficient_lift(c: LiftedIsometry, p: Point) -> LiftedIsometry:
    """The z-shift of c whose twist at p lies in (-pi, pi]; a twist of
    exactly -pi is resolved to the +pi lift."""
    t = twist(c, p)
    k = -math.floor((t + _PI) / _TWO_PI)
    if t + _TWO_PI * k <= -_PI:
        k += 1
    return z_shift(c, k)


@dataclass(frozen=True)
class EulerReport:
    m: int
    theta_residual: float
    chi: int
    bound_satisfied: bool


def euler_number(rep: SurfaceRep) -> EulerReport:
    """Winding integer of a closed-up representation, measured after the
    gammas are re-based to efficient lifts at the base point; checks
    |m| <= 2g + n - 2 whenever chi < 0."""
    if not rep.closed_up():
        raise ValueError("representation does not close up to the identity")
    prod = relator_product(rep.with_efficient_gammas())
    m = central_power(prod, central_tol=1e-6)
    residual = abs(prod.theta - m * _PI)
    chi = rep.chi
    bound = True if chi >= 0 else abs(m) <= -chi
    return EulerReport(m, residual, chi, bound)


@dataclass(frozen=True)
class CPolygonReport:
    polygon: Polygon
    area: float
    residual: float
    degenerate: bool
    simple: bool


def c_polygon(cs: Sequence[LiftedIsometry], p: Point) -> CPolygonReport:
    """Composition polygon of a product: vertices p, (c1..cn)p,
    (c2..cn)p, ..., cn p, dropping the repeated vertex when the product
    is the identity.  The residual compares the twist of the product
    against the suffix twists plus the fan area."""
    if len(cs) < 2:
        raise ValueError("composition polygon needs at least two factors")
    n = len(cs)
    suffix = [IDENTITY] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = cs[i].mat @ suffix[i + 1]
    verts = [p] + [suffix[i](p) for i in range(n)]
    if points_close(verts[1], p):
        del verts[1]
    poly = Polygon(verts)
    degenerate = len(poly) < 3 or any(
        points_close(poly.vertices[k], poly.vertices[(k + 1) % len(poly)])
        for k in range(len(poly))
    )
    area = poly_area(poly) if len(poly) >= 3 else 0.0
    prod = identity_lift()
    for c in cs:
        prod = compose(prod, c)
    twist_sum = sum(
        twist_value(cs[i], suffix[i + 1](p)) for i in range(n)
    )
    residual = twist_value(prod, p) - twist_sum - area
    simple = False if degenerate else is_simple(poly)
    return CPolygonReport(poly, area, residual, degenerate, simple)


@dataclass(frozen=True)
class DPolygonReport:
    polygon: Polygon
    area: float
    residual: float
    degenerate: bool
    simple: bool
    convex: bool
    c_area: float
    pentagon_areas: tuple[float, ...]
    decomposition_residual: float


def d_polygon(rep: SurfaceRep) -> DPolygonReport:
    """Relator polygon: one vertex per letter of the relator word, with
    a pentagon excursion per commutator, collapsing by one vertex when
    the relator closes up.

    The residual compares the relator twist against the gamma suffix
    twists plus the fan area (the identity asserted when convex); the
    decomposition residual checks area = composition-polygon area plus
    the attached pentagon areas, which holds unconditionally.
    """
    g, n = rep.genus, rep.boundary_count
    if g < 1 and n < 3:
        raise ValueError("relator polygon needs genus >= 1 or >= 3 boundaries")
    p = rep.basepoint
    alphas = [a.mat for a in rep.alphas]
    betas = [b.mat for b in rep.betas]
    gammas = [c.mat for c in rep.gammas]
    comms = [
        am @ bm @ am.inverse() @ bm.inverse() for am, bm in zip(alphas, betas)
    ]
    gsuffix = [IDENTITY] * (n + 1)
    for j in range(n - 1, -1, -1):
        gsuffix[j] = gammas[j] @ gsuffix[j + 1]
    tails = [IDENTITY] * (g + 1)
    tails[g] = gsuffix[0]
    for i in range(g - 1, -1, -1):
        tails[i] = comms[i] @ tails[i + 1]
    verts = [p]
    for i in range(g):
        bi_inv = betas[i].inverse()
        ai_inv = alphas[i].inverse()
        t1 = bi_inv @ tails[i + 1]
        t2 = ai_inv @ t1
        t3 = betas[i] @ t2
        verts += [tails[i](p), t1(p), t2(p), t3(p)]
    verts += [gsuffix[j](p) for j in range(n)]
    if points_close(verts[1], p):
        del verts[1]
    poly = Polygon(verts)
    degenerate = len(poly) < 3 or any(
        points_close(poly.vertices[k], poly.vertices[(k + 1) % len(poly)])
        for k in range(len(poly))
    )
    area = poly_area(poly) if len(poly) >= 3 else 0.0
    twist_sum = sum(
        twist_value(rep.gammas[j], gsuffix[j + 1](p)) for j in range(n)
    )
    residual = twist_value(relator_product(rep), p) - twist_sum - area
    # unconditional decomposition into the composition polygon and pentagons
    c_factors = [commutator(a, b) for a, b in zip(rep.alphas, rep.betas)] + list(
        rep.gammas
    )
    c_report = c_polygon(c_factors, p) if len(c_factors) >= 2 else None
    c_area = c_report.area if c_report is not None else 0.0
    pent_areas = tuple(
        pentagon(inverse(rep.alphas[i]), inverse(rep.betas[i]), tails[i + 1](p)).area
        for i in range(g)
    )
    decomposition_residual = area - c_area - sum(pent_areas)
    simple = False if degenerate else is_simple(poly)
    convex = False if degenerate else (simple and is_convex(poly))
    return DPolygonReport(
        poly,
        area,
        residual,
        degenerate,
        simple,
        convex,
        c_area,
        pent_areas,
        decomposition_residual,
    )


@dataclass(frozen=True)
class MilnorWoodViolation:
    trial: int
    rep: SurfaceRep
    report: EulerReport


@dataclass(frozen=True)
class MilnorWoodReport:
    genus: int
    boundary_count: int
    trials: int
    seed: int
    histogram: dict[int, int] = field(default_factory=dict)
    violations: tuple[MilnorWoodViolation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations


def milnor_wood_sweep(
    g: int, n: int, trials: int, seed: int
) -> MilnorWoodReport:
    """Random closed-up representations with efficient boundary lifts;
    every trial must satisfy the winding bound, and the histogram of
    observed m is returned."""
    from .sampling import random_handle_generator, random_lifted, trial_rng

    if n < 1:
        raise ValueError("the sweep needs at least one boundary component")
    if 2 - 2 * g - n >= 0:
        raise ValueError("the bound only applies when 2 - 2g - n < 0")
    histogram: dict[int, int] = {}
    violations: list[MilnorWoodViolation] = []
    # longer handles reach nonzero winding, but products of many long
    # elements drive orbit points below double-precision resolution
    max_len = 4.0 / max(1, g + n - 1)
    for t in range(trials):
        rng = trial_rng(seed, t)
        alphas = tuple(random_handle_generator(rng, max_len) for _ in range(g))
        betas = tuple(random_handle_generator(rng, max_len) for _ in range(g))
        first = tuple(random_handle_generator(rng, max_len) for _ in range(n - 1))
        closing = IDENTITY
        for a, b in zip(alphas, betas):
            am, bm = a.mat, b.mat
            closing = closing @ (am @ bm @ am.inverse() @ bm.inverse())
        for c in first:
            closing = closing @ c.mat
        last = lift(closing.inverse(), 0)
        rep = SurfaceRep(g, n, alphas, betas, first + (last,), I_POINT)
        report = euler_number(rep)
        histogram[report.m] = histogram.get(report.m, 0) + 1
        if not report.bound_satisfied:
            violations.append(MilnorWoodViolation(t, rep, report))
    return MilnorWoodReport(
        g, n, trials, seed, histogram, tuple(violations)
    )
