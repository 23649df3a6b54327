import numpy as np
import pytest
from hypothesis import given

from conftest import bivectors, multivectors, vectors
from klein.algebra import BASIS, I, Multivector, Signature, e0, e01, e1, e12, e2, e20, geometric_product, outer_product
from klein.duality import (
    DualMultivector,
    _meet_dual,
    dual,
    functional_apply,
    identity_map,
    identity_map_inverse,
    join,
    outer_product_dual,
    undual,
)
from klein.errors import NotAVector, RepresentationMismatch
from klein.oracle import oracle_dual_multivector


def model(k, c=1.0):
    return DualMultivector.basis(k, c)


@pytest.mark.parametrize(
    "blade, image",
    [
        (BASIS[0], -model(7)),
        (e0, -model(4)),
        (e1, -model(5)),
        (e2, -model(6)),
        (e12, model(1)),
        (e20, model(2)),
        (e01, model(3)),
        (BASIS[7], model(0)),
    ],
)
def test_table(blade, image):
    assert dual(blade) == image
    assert undual(image) == blade


@given(multivectors)
def test_round_trips(a):
    assert undual(dual(a)) == a
    assert identity_map_inverse(identity_map(a)) == a


@given(multivectors)
def test_matches_oracle(a):
    assert dual(a) == oracle_dual_multivector(a)


def test_model_text_form():
    assert str(dual(e1 + 2 * e12)) == "2 e^0 - e^20"
    assert dual(e1).to_json()["representation"] == "model"


def test_representations_do_not_mix():
    with pytest.raises(RepresentationMismatch):
        dual(dual(e1))
    with pytest.raises(RepresentationMismatch):
        undual(e1)
    with pytest.raises(RepresentationMismatch):
        identity_map(e1) + e1


def test_join_worked_example():
    assert join(e12, e12 + 3 * e20 + 4 * e01) == 4 * e1 - 3 * e2
    assert (e12 & (e12 + 3 * e20 + 4 * e01)) == 4 * e1 - 3 * e2


@given(bivectors, bivectors)
def test_join_is_antisymmetric_on_points(p, q):
    assert join(p, q).isclose(-join(q, p), 1e-12)


@given(bivectors, bivectors)
def test_join_contains_both_points(p, q):
    ln = join(p, q)
    scale = max(1.0, ln.scale() * max(p.scale(), q.scale()))
    assert abs(outer_product(ln, p).p) <= 1e-12 * scale
    assert abs(outer_product(ln, q).p) <= 1e-12 * scale


@given(vectors, vectors)
def test_low_grade_join_vanishes(a, b):
    # grades adding to less than three have no join
    assert join(a, b).is_zero()
    assert join(Multivector.scalar(2.0), e12).is_zero()


@given(multivectors)
def test_elliptic_dual_is_identity_times_inverse_pseudoscalar(a):
    ell = Signature((1, 1, 1))
    inv_i = -I  # I^2 = -1 in the elliptic algebra
    assert dual(a).isclose(identity_map(geometric_product(a, inv_i, ell)), 1e-12)


def test_degenerate_dual_is_not_a_product():
    euc = Signature((0, 1, 1))
    mismatches = [b for b in BASIS if dual(b) != identity_map(geometric_product(b, -I, euc))]
    assert mismatches


def test_outer_product_dual_and_meet():
    assert outer_product_dual(model(1), model(2)) == model(6)
    assert (model(2) | model(3)) == model(4)
    assert _meet_dual(dual(e1), dual(e2)) == dual(outer_product(e1, e2))


def test_functional_apply():
    f = 1 * e0 + 2 * e1 + 3 * e2
    v = identity_map(4 * e0 + 5 * e1 + 6 * e2)
    assert functional_apply(f, v) == 4 + 10 + 18
    with pytest.raises(NotAVector):
        functional_apply(f + e12, v)
    with pytest.raises(NotAVector):
        functional_apply(f, v + model(4))


def test_coefficients_read_only():
    d = dual(e1)
    with pytest.raises(ValueError):
        d.coefficients[0] = 1.0
    assert np.array_equal(d.coefficients, [0, 0, 0, 0, 0, -1, 0, 0])
