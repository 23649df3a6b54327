"""Evaluate parsed expressions by delegating to the library."""

from __future__ import annotations

import json

import numpy as np

from .. import algebra
from ..algebra import BASIS_NAMES, Multivector, _Coefficients
from ..duality import DualMultivector, dual, join, outer_product_dual, undual
from ..errors import ExpressionSyntaxError, RepresentationMismatch
from ..geometry import Space
from .parser import Basis, BinOp, Call, Neg, Num, Scale, parse

_BASIS = {name: Multivector.basis(k) for k, name in enumerate(BASIS_NAMES) if name != "1"}
_BASIS["I"] = algebra.I


def _require_mv(value, what: str) -> Multivector:
    if not isinstance(value, Multivector):
        raise RepresentationMismatch(f"{what} needs a dual-weighted multivector, got a {value.representation} one")
    return value


def _product(op: str, left, right, space: Space):
    if isinstance(left, DualMultivector) or isinstance(right, DualMultivector):
        if op == "&" and isinstance(left, DualMultivector) and isinstance(right, DualMultivector):
            return outer_product_dual(left, right)
        raise RepresentationMismatch(f"'{op}' is not defined for model multivectors (only +, -, scaling and &)")
    sig = space.signature
    if op == "*":
        return algebra.geometric_product(left, right, sig)
    if op == "^":
        return algebra.outer_product(left, right)
    if op == ".":
        return algebra.inner_product(left, right, sig)
    if op == "x":
        return algebra.commutator(left, right, sig)
    if op == "&":
        return join(left, right)
    raise ValueError(f"unknown operator {op!r}")


def _call(name: str, arg, k, space: Space):
    sig = space.signature
    if name == "undual":
        if not isinstance(arg, DualMultivector):
            raise RepresentationMismatch("undual needs a model multivector")
        return undual(arg)
    if name == "grade":
        # grade selection is representation-agnostic: both bases share the grade layout
        return type(arg)._wrap(algebra.grade_select(Multivector._wrap(arg.coefficients), k).coefficients)
    arg = _require_mv(arg, name)
    if name == "exp":
        return algebra.exponential(arg, sig)
    if name == "rev":
        return algebra.reverse(arg)
    if name == "inv":
        return algebra.inverse(arg, sig)
    if name == "norm":
        return Multivector.scalar(algebra.norm(arg, sig))
    if name == "dual":
        return dual(arg)
    if name == "normalise":
        return algebra.normalise(arg, sig)
    raise ValueError(f"unknown function {name!r}")


def evaluate(node, space: Space) -> _Coefficients:
    """Value of an AST (or expression text) under ``space``'s signature."""
    if isinstance(node, str):
        node = parse(node)
    if isinstance(node, Num):
        return Multivector.scalar(node.value)
    if isinstance(node, Basis):
        return _BASIS[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.operand, space)
    if isinstance(node, Scale):
        return evaluate(node.operand, space) * node.factor
    if isinstance(node, Call):
        return _call(node.name, evaluate(node.argument, space), node.k, space)
    if isinstance(node, BinOp):
        left = evaluate(node.left, space)
        right = evaluate(node.right, space)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return _product(node.op, left, right, space)
    raise TypeError(f"not an expression node: {node!r}")


def parse_blade(text: str, space: Space, allow_json: bool = False) -> Multivector:
    """Read a command-line blade: canonical text form, or (with ``allow_json``) JSON.

    JSON may be an 8-array or an object ``{"coefficients": [...]}`` whose
    representation, if given, must be ``dual-weighted``.
    """
    stripped = text.strip()
    if allow_json and stripped[:1] in ("[", "{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ExpressionSyntaxError(exc.pos, ("JSON value",), stripped[exc.pos : exc.pos + 1]) from None
        if isinstance(data, dict):
            rep = data.get("representation", Multivector.representation)
            if rep != Multivector.representation:
                raise RepresentationMismatch(f"expected a dual-weighted multivector, got {rep}")
            data = data.get("coefficients")
        coeffs = np.asarray(data, dtype=float) if isinstance(data, list) else None
        if coeffs is None or coeffs.shape != (8,):
            raise ExpressionSyntaxError(0, ("array of 8 numbers",), stripped[:1])
        return Multivector(coeffs)
    value = evaluate(parse(text), space)
    return _require_mv(value, "a blade argument")
