"""The six Cayley-Klein planes: constructors, classification, distances, angles and null structure."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    ONE,
    Multivector,
    Signature,
    _balanced,
    _mv,
    e0,
    e1,
    e2,
    e012,
    geometric_product,
    grade_select,
    inner_product,
    metric_weights,
    normalise,
    outer_product,
    reverse,
)
from .duality import join
from .errors import (
    DegenerateInput,
    NotABlade,
    NotAVector,
    NotIncident,
    NullAuxiliary,
    UndefinedAngle,
    UndefinedDistance,
    UnsupportedSpace,
    ZeroNorm,
)

CLASSIFY_RTOL = 1e-9
INCIDENCE_RTOL = 1e-9


class Measure(enum.Enum):
    DEGENERATE = "degenerate"
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


class Classification(enum.Enum):
    PROPER = "proper"
    IMPROPER = "improper"
    NULL = "null"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Space:
    name: str
    signature: Signature
    distance_measure: Measure
    angle_measure: Measure

    @property
    def kinematic(self) -> bool:
        return self.angle_measure is Measure.HYPERBOLIC

    @property
    def key(self) -> str:
        return self.name.lower()

    def __str__(self):
        return self.name

    @classmethod
    def from_name(cls, name: str) -> "Space":
        key = "".join(ch for ch in name.lower() if ch.isalnum())
        try:
            return SPACES[key]
        except KeyError:
            raise ValueError(f"unknown space {name!r}; choose from {', '.join(SPACES)}") from None


EUCLIDEAN = Space("Euclidean", Signature((0, 1, 1)), Measure.DEGENERATE, Measure.ELLIPTIC)
ELLIPTIC = Space("Elliptic", Signature((1, 1, 1)), Measure.ELLIPTIC, Measure.ELLIPTIC)
HYPERBOLIC = Space("Hyperbolic", Signature((-1, 1, 1)), Measure.HYPERBOLIC, Measure.ELLIPTIC)
MINKOWSKI = Space("Minkowski", Signature((0, 1, -1)), Measure.DEGENERATE, Measure.HYPERBOLIC)
ANTI_DE_SITTER = Space("AntiDeSitter", Signature((-1, 1, -1)), Measure.ELLIPTIC, Measure.HYPERBOLIC)
DE_SITTER = Space("DeSitter", Signature((1, 1, -1)), Measure.HYPERBOLIC, Measure.HYPERBOLIC)

SPACES = {
    "euclidean": EUCLIDEAN,
    "elliptic": ELLIPTIC,
    "hyperbolic": HYPERBOLIC,
    "minkowski": MINKOWSKI,
    "desitter": DE_SITTER,
    "antidesitter": ANTI_DE_SITTER,
}
ALL_SPACES = tuple(SPACES.values())


def point(x: float, y: float) -> Multivector:
    """The finite point ``(x, y)``; the second coordinate is read as ``t`` in kinematic spaces."""
    return Multivector([0, 0, 0, 0, 1.0, x, y, 0])


def ideal_point(a: float, b: float) -> Multivector:
    """The point shared by the stack of lines ``ax + by + d = 0``."""
    if a == 0 and b == 0:
        raise DegenerateInput("ideal_point needs (a, b) != (0, 0)")
    return outer_product(e0, a * e1 + b * e2)


def line(d: float, a: float, b: float) -> Multivector:
    """The line ``ax + by + d = 0`` (``e0`` scaled when ``a = b = 0``)."""
    return Multivector([0, d, a, b, 0, 0, 0, 0])


def dehomogenize(p: Multivector) -> tuple:
    """Cartesian ``(x, y)`` of a finite point, dividing by its ``e12`` weight."""
    p = _mv(p)
    if abs(p.w) <= 1e-12 * max(1.0, p.scale()):
        raise DegenerateInput(f"{p} is not a finite point")
    return p.x / p.w, p.y / p.w


def _blade_grade(a: Multivector, allowed=(1, 2)) -> int:
    grades = a.grades(1e-12 * a.scale())
    if len(grades) > 1:
        raise NotABlade(f"{a} mixes grades {sorted(grades)}")
    g = grades.pop() if grades else None
    if g not in allowed:
        raise NotABlade(f"{a} is not a line or a point")
    return g


def self_product(a: Multivector, sig) -> float:
    """Scalar ``A rev(A)`` of a blade."""
    return geometric_product(a, reverse(a), sig).s


def classify(a: Multivector, space: Space) -> Classification:
    """Sign of ``A rev(A)``, with points of kinematic spaces read with the opposite sign.

    Null means the self-product is lost in cancellation: ``|A rev(A)|`` is at most
    ``1e-9`` of the sum of the magnitudes of its terms, so coefficients the metric
    ignores (``d`` of a Minkowski line, say) never mask the cone.
    """
    a = _mv(a)
    g = _blade_grade(a)
    a, _ = _balanced(a)  # the test is homogeneous; keep a rev(a) in range
    q = self_product(a, space)
    weight = float(metric_weights(space.signature) @ (a.coefficients ** 2))
    if abs(q) <= CLASSIFY_RTOL * weight:
        return Classification.NULL
    if g == 2 and space.kinematic:
        q = -q
    return Classification.PROPER if q > 0 else Classification.IMPROPER


def is_proper(a: Multivector, space: Space) -> bool:
    return classify(a, space) is Classification.PROPER


def _unit(a: Multivector, space: Space, what: str, error) -> Multivector:
    try:
        return normalise(a, space)
    except ZeroNorm:
        raise error(f"{what} {a} cannot be normalised in {space}") from None


def _coincident(p: Multivector, q: Multivector) -> bool:
    # proportional bivectors: every 2x2 minor of the coefficient pair vanishes
    u, v = p.coefficients[4:7], q.coefficients[4:7]
    return float(np.max(np.abs(np.cross(u, v)))) <= 1e-12 * max(1e-300, np.max(np.abs(u)) * np.max(np.abs(v)))


def _invert_measure(m: float, measure: Measure, companion: float | None = None) -> float:
    if measure is Measure.DEGENERATE:
        return m
    if measure is Measure.HYPERBOLIC:
        return math.asinh(m)
    # elliptic: with the companion cosine the inversion stays well conditioned near pi/2
    if companion is not None:
        return math.atan2(m, abs(companion))
    return math.asin(min(1.0, m))


def distance(p: Multivector, q: Multivector, space: Space) -> float:
    """Distance between two proper points joined by a proper line."""
    p, q = _mv(p), _mv(q)
    for pt in (p, q):
        if _blade_grade(pt) != 2:
            raise UndefinedDistance(f"{pt} is not a point")
        if not is_proper(pt, space):
            raise UndefinedDistance(f"{pt} is not a proper point in {space}")
    if _coincident(p, q):
        return 0.0
    pn = _unit(p, space, "point", UndefinedDistance)
    qn = _unit(q, space, "point", UndefinedDistance)
    j = join(pn, qn)
    if not is_proper(j, space):
        raise UndefinedDistance(f"the line through {p} and {q} is not proper in {space}")
    m = math.sqrt(abs(self_product(j, space)))
    companion = None
    if space.distance_measure is Measure.ELLIPTIC:
        companion = inner_product(pn, qn, space).s
    return _invert_measure(m, space.distance_measure, companion)


def angle(a: Multivector, b: Multivector, space: Space, signed: bool = False) -> float:
    """Angle between two proper lines meeting at a proper point.

    ``signed=True`` returns the orientation-aware angle in ``[0, pi]``
    (non-kinematic spaces only).
    """
    a, b = _mv(a), _mv(b)
    for ln in (a, b):
        if _blade_grade(ln) != 1:
            raise UndefinedAngle(f"{ln} is not a line")
        if not is_proper(ln, space):
            raise UndefinedAngle(f"{ln} is not a proper line in {space}")
    an = _unit(a, space, "line", UndefinedAngle)
    bn = _unit(b, space, "line", UndefinedAngle)
    meet = outer_product(an, bn)
    if meet.is_zero() or not is_proper(meet, space):
        raise UndefinedAngle(f"{a} and {b} do not meet at a proper point in {space}")
    cos = inner_product(an, bn, space).s
    sin = math.sqrt(abs(self_product(meet, space)))
    if signed:
        if space.kinematic:
            raise UnsupportedSpace("signed angles are only defined in non-kinematic spaces")
        return math.atan2(sin, cos)
    if space.kinematic:
        return math.asinh(sin)
    return math.atan2(sin, abs(cos))


def distance_point_line(a: Multivector, p: Multivector, space: Space) -> float:
    """Distance from point ``p`` to line ``a`` through the foot of the perpendicular."""
    a, p = _mv(a), _mv(p)
    if _blade_grade(a) != 1 or _blade_grade(p) != 2:
        raise UndefinedDistance("distance_point_line expects a line and a point")
    if not is_proper(p, space):
        raise UndefinedDistance(f"{p} is not a proper point in {space}")
    an = _unit(a, space, "line", UndefinedDistance)
    pn = _unit(p, space, "point", UndefinedDistance)
    perp = inner_product(an, pn, space)
    if perp.is_zero() or not is_proper(perp, space):
        raise UndefinedDistance(f"the perpendicular from {p} to {a} is not proper in {space}")
    foot = outer_product(an, perp)
    if foot.is_zero() or not is_proper(foot, space):
        raise UndefinedDistance(f"the foot of the perpendicular is not proper in {space}")
    m = abs(join(an, pn).s)
    companion = None
    if space.distance_measure is Measure.ELLIPTIC:
        companion = math.sqrt(abs(self_product(perp, space)))
    return _invert_measure(m, space.distance_measure, companion)


def central_point(a: Multivector) -> Multivector:
    """Point of line ``a`` on the line through the origin and the point with the same coordinates.

    Metric-independent; de-homogenizes to ``(-ad, -bd) / (a^2 + b^2)``.
    """
    a = _mv(a)
    if a.grades() - {1}:
        raise NotAVector(f"{a} is not a line")
    if a.a == 0 and a.b == 0:
        raise DegenerateInput("central_point needs a line with (a, b) != (0, 0)")
    origin = point(0, 0)
    through_origin = join(origin, point(a.a, a.b))
    return outer_product(a, through_origin)


def polar_point(a: Multivector, space: Space) -> Multivector:
    a = _mv(a)
    if a.grades() - {1}:
        raise NotAVector(f"{a} is not a line")
    return geometric_product(a, e012, space)


def perpendicular_through(a: Multivector, p: Multivector, space: Space) -> Multivector:
    """The line through ``p`` perpendicular to ``a``."""
    return inner_product(a, p, space)


def _incident(a: Multivector, p: Multivector) -> bool:
    meet = outer_product(a, p).p
    return abs(meet) <= INCIDENCE_RTOL * max(1.0, a.scale() * p.scale())


def _auxiliary_line(p: Multivector, space: Space) -> Multivector:
    for axis in (e1, e2, e0):
        b = perpendicular_through(axis, p, space)
        if not b.is_zero(1e-12) and classify(b, space) is not Classification.NULL:
            return b
    raise NullAuxiliary(f"no non-null auxiliary line through {p}")


def null_lines_through(p: Multivector, space: Space, b: Multivector | None = None):
    """The two null lines through a proper point of a kinematic space, ``(1 + P) b`` and ``(1 - P) b``."""
    p = _mv(p)
    if not space.kinematic:
        raise UnsupportedSpace(f"no null lines pass through proper points of {space}")
    if _blade_grade(p) != 2 or not is_proper(p, space):
        raise DegenerateInput(f"{p} is not a proper point in {space}")
    pn = normalise(p, space)
    if b is None:
        b = _auxiliary_line(pn, space)
    b = _mv(b)
    if not _incident(b, pn):
        raise NotIncident(f"{b} does not pass through {p}")
    if classify(b, space) is Classification.NULL:
        raise NullAuxiliary(f"auxiliary line {b} is null")
    plus = grade_select(geometric_product(ONE + pn, b, space), 1)
    minus = grade_select(geometric_product(ONE - pn, b, space), 1)
    return plus, minus


def null_points_on(a: Multivector, space: Space, b: Multivector | None = None):
    """The two null points on a proper line, ``(a + I) b`` and ``(a - I) b``.

    ``b`` is any non-null line through the polar point of ``a``.
    """
    a = _mv(a)
    if space.signature.degenerate:
        raise UnsupportedSpace(f"null points on lines are not finite in {space}")
    if _blade_grade(a) != 1 or not is_proper(a, space):
        raise DegenerateInput(f"{a} is not a proper line in {space}")
    an = normalise(a, space)
    pole = polar_point(an, space)
    if b is None:
        b = _auxiliary_line(pole, space)
    b = _mv(b)
    if not _incident(b, pole):
        raise NotIncident(f"{b} does not pass through the polar point of {a}")
    if classify(b, space) is Classification.NULL:
        raise NullAuxiliary(f"auxiliary line {b} is null")
    plus = grade_select(geometric_product(an + e012, b, space), 2)
    minus = grade_select(geometric_product(an - e012, b, space), 2)
    return plus, minus


def origin_distance(x: float, y: float, space: Space) -> float:
    """Closed-form distance from the origin to the point ``(x, y)`` (``(x, t)`` in kinematic spaces)."""
    if x == 0 and y == 0:
        return 0.0
    rho2 = y * y - x * x if space.kinematic else x * x + y * y
    measure = space.distance_measure
    if rho2 <= 0:
        raise UndefinedDistance(f"({x}, {y}) is not at a defined distance from the origin in {space}")
    rho = math.sqrt(rho2)
    if measure is Measure.DEGENERATE:
        return rho
    if measure is Measure.ELLIPTIC:
        return math.asin(rho / math.sqrt(1 + rho2))
    if rho2 >= 1:
        raise UndefinedDistance(f"({x}, {y}) is not a proper point of {space}")
    return math.asinh(rho / math.sqrt(1 - rho2))
