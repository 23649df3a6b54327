"""Duality between the dual-space algebra and the model-space algebra, and the join built on it.

:func:`dual` is a fixed signed permutation of coefficients; it never consults
a metric.  The join of two multivectors is the model-space outer product
pulled back through the duality.
"""

from __future__ import annotations

import numpy as np

from .algebra import _OUTER_TENSOR, Multivector, _Coefficients, _mv
from .errors import NotAVector, RepresentationMismatch

MODEL_BASIS_NAMES = ("1", "e^0", "e^1", "e^2", "e^12", "e^20", "e^01", "e^012")


class DualMultivector(_Coefficients):
    """An element of the model-space algebra over 1, e^0, e^1, e^2, e^12, e^20, e^01, e^012.

    Points of the target space are vectors here and lines are bivectors.
    """

    __slots__ = ()
    representation = "model"
    basis_names = MODEL_BASIS_NAMES

    def __or__(self, other):
        if not isinstance(other, DualMultivector):
            return NotImplemented
        return outer_product_dual(self, other)


# dual(basis_i) = _DUAL_SIGN[i] * model_basis[_DUAL_TARGET[i]]
_DUAL_TARGET = np.array([7, 4, 5, 6, 1, 2, 3, 0])
_DUAL_SIGN = np.array([-1.0, -1, -1, -1, 1, 1, 1, 1])
_UNDUAL_TARGET = np.argsort(_DUAL_TARGET)
_UNDUAL_SIGN = _DUAL_SIGN[_UNDUAL_TARGET]


def _dmv(x) -> DualMultivector:
    if isinstance(x, DualMultivector):
        return x
    if isinstance(x, _Coefficients):
        raise RepresentationMismatch(f"expected a model multivector, got {x.representation}")
    raise TypeError(f"expected a DualMultivector, got {type(x).__name__}")


def dual(a: Multivector) -> DualMultivector:
    a = _mv(a)
    out = np.empty(8)
    out[_DUAL_TARGET] = _DUAL_SIGN * a.coefficients
    return DualMultivector._wrap(out)


def undual(x: DualMultivector) -> Multivector:
    x = _dmv(x)
    out = np.empty(8)
    out[_UNDUAL_TARGET] = _UNDUAL_SIGN * x.coefficients
    return Multivector._wrap(out)


def identity_map(a: Multivector) -> DualMultivector:
    """Index-preserving relabelling ``e_I -> e^I``."""
    return DualMultivector._wrap(_mv(a).coefficients.copy())


def identity_map_inverse(x: DualMultivector) -> Multivector:
    return Multivector._wrap(_dmv(x).coefficients.copy())


def outer_product_dual(x: DualMultivector, y: DualMultivector) -> DualMultivector:
    x, y = _dmv(x), _dmv(y)
    return DualMultivector._wrap(np.outer(x.coefficients, y.coefficients).reshape(64) @ _OUTER_TENSOR)


def join(a: Multivector, b: Multivector) -> Multivector:
    return undual(outer_product_dual(dual(a), dual(b)))


def _meet_dual(f: DualMultivector, g: DualMultivector) -> DualMultivector:
    # test-only counterpart of join; not part of the public surface
    from .algebra import outer_product

    return dual(outer_product(undual(f), undual(g)))


def functional_apply(f: Multivector, v: DualMultivector) -> float:
    """Value of the functional ``(d, a, b)`` on the model vector ``(w, x, y)``: ``dw + ax + by``."""
    f = _mv(f)
    v = _dmv(v)
    fc, vc = f.coefficients, v.coefficients
    if np.any(fc[[0, 4, 5, 6, 7]] != 0):
        raise NotAVector(f"{f} is not a pure vector")
    if np.any(vc[[0, 4, 5, 6, 7]] != 0):
        raise NotAVector(f"{v} is not a pure vector")
    return float(fc[1:4] @ vc[1:4])
