"""Projections, rejections, reflections and spinor isometries (rotations, translations, boosts)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .algebra import (
    ONE,
    Multivector,
    _mv,
    commutator,
    e0,
    e1,
    e2,
    exponential,
    geometric_product,
    inner_product,
    inverse,
    normalise,
    outer_product,
    reverse,
)
from .errors import (
    DegenerateInput,
    InvalidSpinor,
    NotABivector,
    UnsupportedSpace,
    WrongGeneratorClass,
)
from .geometry import EUCLIDEAN, Classification, Space, _blade_grade, classify, point

SPINOR_TOL = 1e-9


class Convention(enum.Enum):
    BOTTOM_UP = "bottom-up"
    TOP_DOWN = "top-down"


BOTTOM_UP = Convention.BOTTOM_UP
TOP_DOWN = Convention.TOP_DOWN


def _grade(a: Multivector) -> int:
    return _blade_grade(a, allowed=(0, 1, 2, 3))


def project(a: Multivector, b: Multivector, space: Space) -> Multivector:
    """``(A . B) B^-1``."""
    a, b = _mv(a), _mv(b)
    return geometric_product(inner_product(a, b, space), inverse(b, space), space)


def reject(a: Multivector, b: Multivector, space: Space) -> Multivector:
    """``(A ^ B) B^-1``; for two points the commutator ``(P x Q) Q^-1`` replaces the wedge."""
    a, b = _mv(a), _mv(b)
    if _grade(a) == 2 and _grade(b) == 2:
        part = commutator(a, b, space)
    else:
        part = outer_product(a, b)
    return geometric_product(part, inverse(b, space), space)


def axial_scale(p: Multivector, a: Multivector, gamma: float, space: Space) -> Multivector:
    """Push the point ``p`` away from (``gamma > 1``) or towards (``gamma < 1``) the line ``a``.

    Euclidean only: the rejection there is a point at infinity, so mixing it
    back in with weight ``gamma`` scales the distance to ``a`` by ``gamma``.
    """
    if space != EUCLIDEAN:
        raise UnsupportedSpace("axial_scale is defined in Euclidean space only")
    p, a = _mv(p), _mv(a)
    ainv = inverse(a, space)
    along = geometric_product(inner_product(p, a, space), ainv, space)
    across = geometric_product(outer_product(p, a), ainv, space)
    return along + gamma * across


def reflect(x: Multivector, m: Multivector, space: Space, convention: Convention = BOTTOM_UP) -> Multivector:
    """Reflect ``x`` in the point or line ``m``.

    Reflections in a point are the same in both conventions.  Reflections in a
    line differ by a sign: bottom-up keeps points as ``-a P a^-1`` and lines as
    ``a b a^-1``; top-down uses ``a P a^-1`` and ``-a b a^-1``.
    """
    x, m = _mv(x), _mv(m)
    conj = geometric_product(geometric_product(m, x, space), inverse(m, space), space)
    if _grade(m) != 1:
        return conj
    flip = (_grade(x) == 2) == (convention is BOTTOM_UP)
    return -conj if flip else conj


@dataclass(frozen=True)
class Spinor:
    """An even multivector ``S`` with ``S rev(S) = 1``, acting by ``X -> S X rev(S)``."""

    value: Multivector
    space: Space

    def __post_init__(self):
        if not is_spinor(self.value, self.space):
            raise InvalidSpinor(f"{self.value} is not a spinor in {self.space}")

    def __mul__(self, other: "Spinor") -> "Spinor":
        if not isinstance(other, Spinor):
            return NotImplemented
        if other.space != self.space:
            raise UnsupportedSpace("spinors from different spaces cannot be composed")
        return Spinor(geometric_product(self.value, other.value, self.space), self.space)

    def __neg__(self) -> "Spinor":
        return Spinor(-self.value, self.space)

    def reverse(self) -> "Spinor":
        return Spinor(reverse(self.value), self.space)

    inverse = reverse

    def __call__(self, x: Multivector) -> Multivector:
        return sandwich(self, x)


def is_spinor(a: Multivector, space: Space, tol: float = SPINOR_TOL) -> bool:
    a = _mv(a)
    if not a.is_even(tol * max(1.0, a.scale())):
        return False
    residual = geometric_product(a, reverse(a), space) - ONE
    return residual.scale() < tol


def spinor_from_generator(p: Multivector, theta: float, space: Space) -> Spinor:
    """``exp(-theta/2 P)`` for a bivector ``P``."""
    p = _mv(p)
    if p.grades(1e-12 * p.scale()) - {2}:
        raise NotABivector(f"{p} is not a bivector")
    return Spinor(exponential(p * (-0.5 * theta), space), space)


def sandwich(s: Spinor, x: Multivector) -> Multivector:
    """``S X rev(S)``, without re-normalising the result."""
    if isinstance(s, Spinor):
        value, space = s.value, s.space
    else:
        raise InvalidSpinor("sandwich needs a Spinor")
    if not is_spinor(value, space):
        raise InvalidSpinor(f"{value} is not a spinor in {space}")
    return geometric_product(geometric_product(value, _mv(x), space), reverse(value), space)


class IsometryKind(enum.Enum):
    ROTATION = "rotation"
    TRANSLATION = "translation"
    BOOST = "boost"


@dataclass(frozen=True)
class IsometryParams:
    """What to build: a rotation/boost about ``center`` or a translation along ``direction``.

    ``center`` is a point ``[w, x, y]`` (for translations it may name the
    null or improper generator point directly); ``direction`` is ``[a, b]``.
    ``amount`` is an angle, a rapidity or a distance.
    """

    kind: IsometryKind
    amount: float
    center: tuple | None = None
    direction: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", IsometryKind(self.kind))
        if not math.isfinite(self.amount):
            raise ValueError("isometry amount must be finite")
        if self.center is not None:
            object.__setattr__(self, "center", tuple(float(c) for c in self.center))
            if len(self.center) != 3:
                raise ValueError("center is [w, x, y]")
        if self.direction is not None:
            object.__setattr__(self, "direction", tuple(float(c) for c in self.direction))
            if len(self.direction) != 2:
                raise ValueError("direction is [a, b]")
        if self.kind is IsometryKind.TRANSLATION and (self.center is None) == (self.direction is None):
            raise ValueError("a translation needs exactly one of center or direction")
        if self.kind is not IsometryKind.TRANSLATION and self.direction is not None:
            raise ValueError(f"a {self.kind.value} takes a center, not a direction")

    def center_point(self) -> Multivector:
        w, x, y = self.center if self.center is not None else (1.0, 0.0, 0.0)
        return Multivector([0, 0, 0, 0, w, x, y, 0])

    @classmethod
    def from_json(cls, data: dict) -> "IsometryParams":
        unknown = set(data) - {"kind", "amount", "center", "direction"}
        if unknown:
            raise ValueError(f"unknown isometry fields: {', '.join(sorted(unknown))}")
        return cls(
            kind=str(data["kind"]).lower(),
            amount=float(data["amount"]),
            center=data.get("center"),
            direction=data.get("direction"),
        )

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "amount": self.amount}
        if self.center is not None:
            out["center"] = list(self.center)
        if self.direction is not None:
            out["direction"] = list(self.direction)
        return out


def translation_generator(a: float, b: float, space: Space) -> Multivector:
    """Ideal point whose spinor ``exp(-r/2 N)`` moves finite points by ``r`` along ``(a, b)``.

    In E2 this is ``e0 ^ (cos e1 + sin e2)``.  With ``e2*e2 = -1`` (Minkowski) the
    ``e2`` component changes sign, which makes ``(0, 1)`` give ``N = e20``.
    """
    if not space.signature.degenerate or space.signature.sigma[0] != 0:
        raise UnsupportedSpace(f"directional translations need a flat space, not {space}")
    length = math.hypot(a, b)
    if length == 0:
        raise DegenerateInput("translation direction must be nonzero")
    a, b = a / length, b / length
    return outer_product(e0, a * e1 + space.signature.sigma[2] * b * e2)


def make_isometry(params: IsometryParams, space: Space) -> Spinor:
    kind = params.kind
    if kind is IsometryKind.TRANSLATION:
        if params.direction is not None:
            gen = translation_generator(*params.direction, space)
        else:
            gen = params.center_point()
            cls = classify(gen, space)
            if cls is Classification.PROPER:
                raise WrongGeneratorClass(f"translations need a null or improper point; {gen} is proper in {space}")
            if cls is Classification.IMPROPER:
                gen = normalise(gen, space)
        return spinor_from_generator(gen, params.amount, space)

    center = params.center_point()
    if classify(center, space) is not Classification.PROPER:
        raise WrongGeneratorClass(f"a {kind.value} needs a proper center; {center} is not proper in {space}")
    center = normalise(center, space)
    if kind is IsometryKind.ROTATION:
        return spinor_from_generator(center, params.amount, space)
    if not space.kinematic:
        raise UnsupportedSpace(f"boosts need a kinematic space, not {space}")
    # boosts take the opposite exponent sign to rotations: B = exp(+phi/2 P)
    return spinor_from_generator(center, -params.amount, space)


def rotation(center: Multivector, angle: float, space: Space = EUCLIDEAN) -> Spinor:
    c = _mv(center)
    return make_isometry(IsometryParams(IsometryKind.ROTATION, angle, center=(c.w, c.x, c.y)), space)


def translation(direction, distance: float, space: Space = EUCLIDEAN) -> Spinor:
    return make_isometry(IsometryParams(IsometryKind.TRANSLATION, distance, direction=tuple(direction)), space)


def boost(rapidity: float, space: Space, center: Multivector | None = None) -> Spinor:
    c = _mv(center) if center is not None else point(0, 0)
    return make_isometry(IsometryParams(IsometryKind.BOOST, rapidity, center=(c.w, c.x, c.y)), space)
