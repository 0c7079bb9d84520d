"""Twist angles on the universal cover of the orientation-preserving
isometry group of the hyperbolic plane.

The package models the upper half-plane, the universal covering group
with its exact angle bookkeeping, the twist of a lifted isometry at
finite and ideal points, commutator pentagons and region theorems, and
surface-group relators with their winding bound.  Every lemma-level
identity ships with a seeded verification sweep (see
:mod:`hyptwist.verify` and the ``hyptwist verify`` command).
"""

from .halfplane import (
    Geodesic,
    I_POINT,
    IDENTITY,
    INFINITY,
    Isometry,
    Point,
    Polygon,
    angle_between,
    apply,
    axes_cross,
    axis,
    dist_to_axis,
    distance,
    fixed_points,
    from_disk,
    geodesic_through,
    is_convex,
    is_simple,
    move_to_i,
    poly_area,
    rotation_about_i,
    segments_intersect,
    standard_parabolic,
    to_disk,
    translation_length,
    tri_area,
    vertical_translation,
)
from .cover import (
    AmbiguousRegionError,
    LiftedIsometry,
    Region,
    Z,
    central_power,
    classify,
    compose,
    identity_lift,
    inverse,
    lift,
    polar_theta,
    rotation_lift,
    trace,
    z_power,
    z_shift,
)
from .twist import (
    AxisEndpointAmbiguityError,
    check_composition,
    check_translation_invariance,
    twist,
    twist_at_infinity,
    twist_continuation,
    twist_continuation_auto,
    twist_mod2pi,
    twist_value,
)
from .commutator import (
    AxesCrossingReport,
    PentagonReport,
    allowed_commutator_region,
    axes_crossing_equivalence,
    commutator,
    commutator_area_identity,
    cross_ratio_identity,
    goldman_commutator_trace,
    goldman_pair,
    pentagon,
    trace_region_corollary,
)
from .surface import (
    CPolygonReport,
    DPolygonReport,
    EulerReport,
    MilnorWoodReport,
    SurfaceRep,
    c_polygon,
    d_polygon,
    efficient_lift,
    euler_number,
    milnor_wood_sweep,
    relator_product,
)

__version__ = "0.1.0"
