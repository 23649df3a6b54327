"""Projective geometric algebra of the six two-dimensional Cayley-Klein planes."""

from .algebra import (
    BASIS,
    I,
    ONE,
    ZERO,
    Multivector,
    Signature,
    commutator,
    e0,
    e01,
    e012,
    e1,
    e12,
    e2,
    e20,
    exponential,
    geometric_product,
    grade_select,
    inner_product,
    inverse,
    norm,
    normalise,
    outer_product,
    reverse,
)
from .duality import DualMultivector, dual, join, undual
from .errors import *  # noqa: F401,F403
from .geometry import (
    ALL_SPACES,
    ANTI_DE_SITTER,
    DE_SITTER,
    ELLIPTIC,
    EUCLIDEAN,
    HYPERBOLIC,
    MINKOWSKI,
    SPACES,
    Classification,
    Space,
    angle,
    central_point,
    classify,
    dehomogenize,
    distance,
    distance_point_line,
    ideal_point,
    line,
    null_lines_through,
    null_points_on,
    origin_distance,
    perpendicular_through,
    point,
    polar_point,
)
from .transforms import (
    BOTTOM_UP,
    TOP_DOWN,
    IsometryParams,
    Spinor,
    axial_scale,
    boost,
    is_spinor,
    make_isometry,
    project,
    reflect,
    reject,
    rotation,
    sandwich,
    spinor_from_generator,
    translation,
)

__version__ = "0.1.0"
