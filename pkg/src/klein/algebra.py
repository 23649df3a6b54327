"""Multivector arithmetic of the 8-dimensional algebra over basis 1, e0, e1, e2, e12, e20, e01, e012.

The same eight coefficients carry the Grassmann (outer) structure, which is
metric-free, and a Clifford (geometric) structure that depends on a diagonal
:class:`Signature` ``(e0*e0, e1*e1, e2*e2)``.  Products are evaluated through
a precomputed 8x8 Cayley table per signature.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import RepresentationMismatch, ZeroNorm

BASIS_NAMES = ("1", "e0", "e1", "e2", "e12", "e20", "e01", "e012")
BASIS_INDEXES = ((), (0,), (1,), (2,), (1, 2), (2, 0), (0, 1), (0, 1, 2))
GRADES = (0, 1, 1, 1, 2, 2, 2, 3)
COEFFICIENT_NAMES = ("s", "d", "a", "b", "w", "x", "y", "p")

_GRADE_MASKS = tuple(np.array([g == k for g in GRADES]) for k in range(4))

ZERO_NORM_RTOL = 1e-9
TAYLOR_TERMS = 32
TAYLOR_EXIT = 1e-16


def _check_grade(k: int) -> int:
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= 3:
        raise ValueError(f"grade must be an integer in 0..3, got {k!r}")
    return int(k)


class _Coefficients:
    """Immutable 8-vector shared by :class:`Multivector` and its dual-space twin."""

    __slots__ = ("_c",)
    __array_ufunc__ = None  # make numpy scalars defer to __rmul__ and friends
    representation = "abstract"
    basis_names: tuple = BASIS_NAMES

    def __init__(self, coefficients: Iterable[float] = (0.0,) * 8):
        c = np.array(coefficients, dtype=float).reshape(-1)
        if c.shape != (8,):
            raise ValueError(f"a multivector has exactly 8 coefficients, got {c.size}")
        c.flags.writeable = False
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _wrap(cls, array: np.ndarray):
        out = cls.__new__(cls)
        array = np.asarray(array, dtype=float)
        array.flags.writeable = False
        object.__setattr__(out, "_c", array)
        return out

    @classmethod
    def basis(cls, index: int, coefficient: float = 1.0):
        c = np.zeros(8)
        c[index] = coefficient
        return cls._wrap(c)

    @classmethod
    def scalar(cls, value: float):
        return cls.basis(0, value)

    @property
    def coefficients(self) -> np.ndarray:
        return self._c

    def __iter__(self):
        return iter(self._c.tolist())

    def __getitem__(self, index):
        return float(self._c[index])

    def __len__(self):
        return 8

    def _same(self, other):
        if type(other) is not type(self):
            if isinstance(other, _Coefficients):
                raise RepresentationMismatch(
                    f"cannot combine {self.representation} and {other.representation} multivectors"
                )
            return False
        return True

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = type(self).scalar(other)
        if not self._same(other):
            return NotImplemented
        return self._wrap(self._c + other._c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = type(self).scalar(other)
        if not self._same(other):
            return NotImplemented
        return self._wrap(self._c - other._c)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._wrap(-self._c)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self._wrap(self._c * float(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self._wrap(self._c / float(other))
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash((type(self).__name__, tuple((self._c + 0.0).tolist())))

    def isclose(self, other, tol: float = 1e-12) -> bool:
        """Coefficient-wise comparison with absolute tolerance ``tol``."""
        if type(other) is not type(self):
            return False
        return bool(np.max(np.abs(self._c - other._c)) <= tol)

    def scale(self) -> float:
        """Largest absolute coefficient."""
        return float(np.max(np.abs(self._c)))

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.scale() <= tol

    def grades(self, tol: float = 0.0) -> set:
        return {g for g, c in zip(GRADES, self._c) if abs(c) > tol}

    def grade_of(self, tol: float = 0.0):
        """The single grade this multivector has, or None when mixed (zero counts as any grade)."""
        gs = self.grades(tol)
        if len(gs) == 1:
            return gs.pop()
        return None

    def to_list(self) -> list:
        # `+ 0.0` folds negative zero into positive zero
        return [float(c) + 0.0 for c in self._c]

    def to_json(self, precision: int | None = None) -> dict:
        values = self.to_list()
        if precision is not None:
            # same suppression rule as the text form, so residue never reaches a golden file
            floor = max(abs(v) for v in values) * 10.0 ** (-precision)
            values = [round_real(v, precision) if abs(v) >= floor else 0.0 for v in values]
        return {"representation": self.representation, "coefficients": values}

    def to_text(self, precision: int = 12) -> str:
        return format_terms(self._c, self.basis_names, precision)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_list()})"


class Multivector(_Coefficients):
    """An element of the dual-space algebra; points are bivectors, lines are vectors.

    Coefficients are ordered ``(s, d, a, b, w, x, y, p)`` so that
    ``A = s + d e0 + a e1 + b e2 + w e12 + x e20 + y e01 + p e012``.
    """

    __slots__ = ()
    representation = "dual-weighted"

    def __xor__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return outer_product(self, other)

    def __and__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        from .duality import join

        return join(self, other)

    @property
    def s(self) -> float:
        return float(self._c[0])

    @property
    def d(self) -> float:
        return float(self._c[1])

    @property
    def a(self) -> float:
        return float(self._c[2])

    @property
    def b(self) -> float:
        return float(self._c[3])

    @property
    def w(self) -> float:
        return float(self._c[4])

    @property
    def x(self) -> float:
        return float(self._c[5])

    @property
    def y(self) -> float:
        return float(self._c[6])

    @property
    def p(self) -> float:
        return float(self._c[7])

    def reverse(self) -> "Multivector":
        return reverse(self)

    def grade(self, k: int) -> "Multivector":
        return grade_select(self, k)

    def is_even(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self._c[[1, 2, 3, 7]]) <= tol))


def round_real(value: float, precision: int = 12) -> float:
    """Round to ``precision`` significant digits; negative zero becomes zero."""
    if value == 0 or not math.isfinite(value):
        return float(value) + 0.0
    return float(f"{value:.{precision}g}") + 0.0


def format_real(value: float, precision: int = 12) -> str:
    """Shortest text for ``value`` at ``precision`` significant digits (trailing zeros trimmed)."""
    text = f"{round_real(value, precision):.{precision}g}"
    return "0" if text in ("-0", "0") else text


def format_terms(coeffs: Sequence[float], names: Sequence[str], precision: int = 12) -> str:
    """Canonical ``s + d e0 + ...`` text; terms negligible at ``precision`` digits are omitted."""
    coeffs = [float(c) for c in coeffs]
    biggest = max(abs(c) for c in coeffs)
    floor = biggest * 10.0 ** (-precision)
    parts = []
    for c, name in zip(coeffs, names):
        if c == 0 or abs(c) < floor:
            continue
        mag = format_real(abs(c), precision)
        if mag == "0":
            continue
        if name == "1":
            body = mag
        elif mag == "1":
            body = name
        else:
            body = f"{mag} {name}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def _reorder_sign(a: int, b: int) -> int:
    """Sign of bringing the concatenation of two sorted bitmask blades into sorted order."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def _orientation(indexes: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(indexes)) for j in range(i + 1, len(indexes)) if indexes[i] > indexes[j])
    return -1 if inversions & 1 else 1


_MASKS = tuple(sum(1 << i for i in idx) for idx in BASIS_INDEXES)
_ORIENT = tuple(_orientation(idx) for idx in BASIS_INDEXES)
_MASK_TO_INDEX = {m: k for k, m in enumerate(_MASKS)}


def _cayley_entries(sigma: Sequence[int]):
    """The 64 ``(i, j, k, sign)`` entries with ``basis_i basis_j = sign * basis_k``."""
    entries = []
    for i, mi in enumerate(_MASKS):
        for j, mj in enumerate(_MASKS):
            sign = _ORIENT[i] * _ORIENT[j] * _reorder_sign(mi, mj)
            common = mi & mj
            for axis in range(3):
                if common >> axis & 1:
                    sign *= sigma[axis]
            k = _MASK_TO_INDEX[mi ^ mj]
            entries.append((i, j, k, sign * _ORIENT[k]))
    return entries


def _tensor(entries, keep=lambda i, j, k: True) -> np.ndarray:
    t = np.zeros((8, 8, 8))
    for i, j, k, sign in entries:
        if keep(i, j, k):
            t[i, j, k] = sign
    t = t.reshape(64, 8)
    t.flags.writeable = False
    return t


_OUTER_TENSOR = _tensor(_cayley_entries((0, 0, 0)))


@dataclass(frozen=True)
class Signature:
    """Diagonal metric ``(e0*e0, e1*e1, e2*e2)`` with entries in {-1, 0, 1}."""

    sigma: tuple
    _gp: np.ndarray = field(init=False, repr=False, compare=False)
    _inner: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        if len(sigma) != 3 or any(s not in (-1, 0, 1) for s in sigma):
            raise ValueError(f"signature must be three values in {{-1, 0, 1}}, got {self.sigma!r}")
        object.__setattr__(self, "sigma", sigma)
        entries = _cayley_entries(sigma)
        object.__setattr__(self, "_gp", _tensor(entries))
        object.__setattr__(
            self,
            "_inner",
            _tensor(entries, lambda i, j, k: GRADES[k] == abs(GRADES[i] - GRADES[j])),
        )

    def cayley_table(self) -> list:
        """Rows of ``(k, sign)`` such that ``basis_i basis_j = sign basis_k`` (sign may be 0)."""
        t = self._gp.reshape(8, 8, 8)
        table = []
        for i in range(8):
            row = []
            for j in range(8):
                nz = np.flatnonzero(t[i, j])
                if nz.size:
                    row.append((int(nz[0]), int(t[i, j, nz[0]])))
                else:
                    row.append((_MASK_TO_INDEX[_MASKS[i] ^ _MASKS[j]], 0))
            table.append(row)
        return table

    @property
    def degenerate(self) -> bool:
        return 0 in self.sigma

    def gp(self, a: Multivector, b: Multivector) -> Multivector:
        return Multivector._wrap(np.outer(a._c, b._c).reshape(64) @ self._gp)

    def inner(self, a: Multivector, b: Multivector) -> Multivector:
        return Multivector._wrap(np.outer(a._c, b._c).reshape(64) @ self._inner)




def _sig(sig) -> Signature:
    if isinstance(sig, Signature):
        return sig
    inner = getattr(sig, "signature", None)
    if isinstance(inner, Signature):
        return inner
    if isinstance(sig, (tuple, list)):
        return Signature(tuple(sig))
    raise TypeError(f"expected a Signature or Space, got {type(sig).__name__}")


def _mv(a) -> Multivector:
    if isinstance(a, Multivector):
        return a
    if isinstance(a, (int, float)):
        return Multivector.scalar(a)
    if isinstance(a, _Coefficients):
        raise RepresentationMismatch(f"expected a dual-weighted multivector, got {a.representation}")
    raise TypeError(f"expected a Multivector, got {type(a).__name__}")


ONE = Multivector.basis(0)
e0 = Multivector.basis(1)
e1 = Multivector.basis(2)
e2 = Multivector.basis(3)
e12 = Multivector.basis(4)
e20 = Multivector.basis(5)
e01 = Multivector.basis(6)
e012 = Multivector.basis(7)
I = e012
BASIS = (ONE, e0, e1, e2, e12, e20, e01, e012)
ZERO = Multivector()


def linear_combine(alpha: float, a: Multivector, beta: float, b: Multivector) -> Multivector:
    return Multivector._wrap(alpha * _mv(a)._c + beta * _mv(b)._c)


def outer_product(a: Multivector, b: Multivector) -> Multivector:
    a, b = _mv(a), _mv(b)
    return Multivector._wrap(np.outer(a._c, b._c).reshape(64) @ _OUTER_TENSOR)


def geometric_product(a: Multivector, b: Multivector, sig) -> Multivector:
    return _sig(sig).gp(_mv(a), _mv(b))


def inner_product(a: Multivector, b: Multivector, sig) -> Multivector:
    """Sum over grade pairs of the grade-|k-l| part of the geometric product."""
    return _sig(sig).inner(_mv(a), _mv(b))


def commutator(a: Multivector, b: Multivector, sig) -> Multivector:
    s = _sig(sig)
    a, b = _mv(a), _mv(b)
    return Multivector._wrap(0.5 * (s.gp(a, b)._c - s.gp(b, a)._c))


def grade_select(a: Multivector, k: int) -> Multivector:
    k = _check_grade(k)
    return Multivector._wrap(np.where(_GRADE_MASKS[k], _mv(a)._c, 0.0))


def grade_negate(a: Multivector, grades: Iterable[int]) -> Multivector:
    """Flip the sign of every component whose grade is listed."""
    flip = np.ones(8)
    for k in set(grades):
        flip[_GRADE_MASKS[_check_grade(k)]] = -1.0
    return Multivector._wrap(_mv(a)._c * flip)


_REVERSE = np.array([1.0, 1, 1, 1, -1, -1, -1, -1])


def reverse(a: Multivector) -> Multivector:
    return Multivector._wrap(_mv(a)._c * _REVERSE)


def _norm_parts(a: Multivector, s: Signature):
    q = s.gp(a, reverse(a))
    q1 = grade_negate(q, (1,))
    return q1, s.gp(q, q1).s


def norm(a: Multivector, sig) -> float:
    """``|A rev(A) (A rev(A))_1|^(1/4)``; for blades this is ``|A rev(A)|^(1/2)``."""
    a = _mv(a)
    _, quartic = _norm_parts(a, _sig(sig))
    return abs(quartic) ** 0.25


@functools.lru_cache(maxsize=None)
def metric_weights(sig: Signature) -> np.ndarray:
    """``|e_k rev(e_k)|`` per basis element: how much each coefficient can contribute to a self-product."""
    return np.array([abs(sig.gp(b, reverse(b)).s) for b in BASIS])


def _balanced(a: Multivector, even: bool = False):
    """``(a / 2^k, k)`` with the largest coefficient near 1, so products of ``a`` stay in range."""
    scale = a.scale()
    if scale == 0:
        return a, 0
    k = math.frexp(scale)[1]
    if even:
        k += k % 2
    return Multivector._wrap(np.ldexp(a._c, -k)), k


def _invertible_parts(a: Multivector, s: Signature):
    """Pieces of ``a^-1 = rev(a) q1 / norm^4`` with ``q = a rev(a)``, each rescaled by a power of two.

    Returns ``(b, k, q1, quartic, m)`` where ``a = 2^k b`` and ``q = 2^m q_hat``, or
    None when ``a`` has zero norm. Both products may lose everything to cancellation:
    a ``q`` entry counts only above ``1e-9`` of the metric-weighted size of ``a``, and
    norm^4 must clear ``1e-9`` of its own terms.
    """
    w = metric_weights(s)
    b, k = _balanced(a)
    q = s.gp(b, reverse(b))
    kept = np.where(np.abs(q._c) <= ZERO_NORM_RTOL * float(w @ b._c ** 2), 0.0, q._c)
    if not kept.any():
        return None
    kept, m = _balanced(Multivector._wrap(kept), even=True)
    if abs(s.gp(kept, grade_negate(kept, (1,))).s) <= ZERO_NORM_RTOL * float(w @ kept._c ** 2):
        return None
    q1 = grade_negate(Multivector._wrap(np.ldexp(q._c, -m)), (1,))
    return b, k, q1, s.gp(Multivector._wrap(np.ldexp(q._c, -m)), q1).s, m


def inverse(a: Multivector, sig) -> Multivector:
    a = _mv(a)
    parts = _invertible_parts(a, _sig(sig))
    if parts is None:
        raise ZeroNorm(f"{a} has zero norm and no inverse")
    b, k, q1, quartic, m = parts
    with np.errstate(over="ignore", invalid="ignore"):
        inv = np.ldexp((_sig(sig).gp(reverse(b), q1) / quartic)._c, -(k + m))
    if not np.all(np.isfinite(inv)):
        raise ZeroNorm(f"{a} is too close to zero norm for its inverse to be a finite double")
    return Multivector._wrap(inv)


def normalise(a: Multivector, sig) -> Multivector:
    a = _mv(a)
    parts = _invertible_parts(a, _sig(sig))
    if parts is None:
        raise ZeroNorm(f"{a} has zero norm and cannot be normalised")
    b, _, _, quartic, m = parts
    # norm(b) = 2^(m/2) |quartic|^(1/4); m is even
    return Multivector._wrap(np.ldexp(b._c / abs(quartic) ** 0.25, -(m // 2)))


def exponential(a: Multivector, sig) -> Multivector:
    """``e^A``; closed form whenever ``A - <A>_0`` squares to a scalar, Taylor series otherwise.

    Every blade (and every even multivector) squares to a scalar in this
    algebra, so the series is only used for mixed odd/even inputs.
    """
    a = _mv(a)
    s = _sig(sig)
    scalar = a.s
    rest = Multivector._wrap(np.where(_GRADE_MASKS[0], 0.0, a._c))
    sq = s.gp(rest, rest)
    off = np.abs(sq._c[1:]).max()
    if off <= 1e-13 * max(1.0, rest.scale() ** 2):
        beta = sq.s
        if abs(beta) < 1e-8:
            c = 1 + beta / 2 + beta * beta / 24
            k = 1 + beta / 6 + beta * beta / 120
        elif beta > 0:
            r = math.sqrt(beta)
            c, k = math.cosh(r), math.sinh(r) / r
        else:
            r = math.sqrt(-beta)
            c, k = math.cos(r), math.sin(r) / r
        out = rest * k + c
        return out * math.exp(scalar) if scalar else out
    return _taylor(a, s)


def _taylor(a: Multivector, s: Signature) -> Multivector:
    total = ONE
    term = ONE
    for n in range(1, TAYLOR_TERMS):
        term = s.gp(term, a) / n
        total = total + term
        if term.scale() < TAYLOR_EXIT:
            break
    return total


def is_even(a: Multivector, tol: float = 0.0) -> bool:
    return _mv(a).is_even(tol)
