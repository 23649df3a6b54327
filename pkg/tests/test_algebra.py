import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SIGNATURES, bivectors, multivectors, vectors
from klein.algebra import (
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
    format_real,
    geometric_product,
    grade_negate,
    grade_select,
    inner_product,
    inverse,
    linear_combine,
    norm,
    normalise,
    outer_product,
    reverse,
)
from klein.duality import DualMultivector
from klein.errors import RepresentationMismatch, ZeroNorm
from klein.geometry import ALL_SPACES, Classification, classify
from klein.oracle import oracle_multiply

EUC = Signature((0, 1, 1))
MINK = Signature((0, 1, -1))
ELL = Signature((1, 1, 1))

signatures = st.sampled_from(SIGNATURES).map(Signature)


class TestConstruction:
    def test_coefficients_and_names(self):
        a = Multivector([1, 2, 3, 4, 5, 6, 7, 8])
        assert (a.s, a.d, a.a, a.b, a.w, a.x, a.y, a.p) == (1, 2, 3, 4, 5, 6, 7, 8)
        assert a.to_list() == [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            Multivector([1, 2, 3])

    def test_immutable(self):
        with pytest.raises(AttributeError):
            e1.foo = 3
        with pytest.raises(ValueError):
            e1.coefficients[0] = 5.0

    def test_negative_zero_is_folded(self):
        a = Multivector([-0.0] * 8)
        assert all(math.copysign(1, c) == 1 for c in a.to_list())
        assert a.to_json()["coefficients"] == [0.0] * 8

    def test_text_form(self):
        assert str(4 * e1 - 3 * e2) == "4 e1 - 3 e2"
        assert str(-e12) == "-e12"
        assert str(ZERO) == "0"
        assert str(2 + e0 + 0.5 * e012) == "2 + e0 + 0.5 e012"
        assert (e1 + 1e-20 * e2).to_text() == "e1"

    def test_json_form(self):
        doc = (e12 + 3 * e20).to_json(12)
        assert doc == {"representation": "dual-weighted", "coefficients": [0, 0, 0, 0, 1, 3, 0, 0]}

    def test_json_drops_residue(self):
        doc = Multivector([1, 1e-17, 0, 0, 0, 0, 0, 0]).to_json(12)
        assert doc["coefficients"][1] == 0.0

    def test_format_real_trims(self):
        assert format_real(5.0) == "5"
        assert format_real(-0.0) == "0"
        assert format_real(0.1 + 0.2) == "0.3"
        assert format_real(math.pi, 4) == "3.142"

    def test_mixing_representations(self):
        with pytest.raises(RepresentationMismatch):
            e1 + DualMultivector.basis(1)

    def test_numpy_scalars_scale(self):
        assert np.float64(2.0) * e1 == 2 * e1
        assert e1 * np.float64(2.0) == 2 * e1

    def test_linear_combine(self):
        assert linear_combine(2, e1, -1, e2) == 2 * e1 - e2


class TestProducts:
    def test_examples(self):
        assert geometric_product(e12, e12, EUC) == -ONE
        assert geometric_product(e1, e1, EUC) == ONE
        assert commutator(e12, e20, EUC) == -e01
        assert geometric_product(e0, e0, EUC) == ZERO
        assert geometric_product(e2, e2, MINK) == -ONE

    def test_minkowski_inner_example(self):
        assert inner_product(e0 + 3 * e1 + e2, e12, MINK) == e1 + 3 * e2

    def test_cayley_table_shape(self):
        table = EUC.cayley_table()
        assert len(table) == 8 and all(len(row) == 8 for row in table)
        assert table[4][4] == (0, -1.0)
        assert table[5][5] == (0, 0.0)

    def test_bad_signature(self):
        with pytest.raises(ValueError):
            Signature((2, 1, 1))
        with pytest.raises(ValueError):
            Signature((1, 1))

    def test_outer_product_is_metric_free(self):
        assert outer_product(e1, e2) == e12
        assert outer_product(e2, e0) == e20
        assert outer_product(e0, e1) == e01
        assert outer_product(e12, e0) == e012
        assert outer_product(e1, e1) == ZERO

    @given(multivectors, multivectors, signatures)
    def test_matches_oracle(self, a, b, sig):
        assert geometric_product(a, b, sig).isclose(oracle_multiply(a, b, sig.sigma), 1e-12)

    @given(multivectors, multivectors, multivectors, signatures)
    def test_associative(self, a, b, c, sig):
        left = geometric_product(geometric_product(a, b, sig), c, sig)
        right = geometric_product(a, geometric_product(b, c, sig), sig)
        assert left.isclose(right, 1e-10)

    @given(vectors, vectors, signatures)
    def test_vector_product_splits(self, a, b, sig):
        ab = geometric_product(a, b, sig)
        assert ab.isclose(inner_product(a, b, sig) + outer_product(a, b), 1e-12)

    @given(multivectors, signatures)
    def test_pseudoscalar_is_central(self, a, sig):
        assert geometric_product(I, a, sig).isclose(geometric_product(a, I, sig), 1e-12)

    @given(multivectors, multivectors, signatures)
    def test_even_subalgebra_closed(self, a, b, sig):
        def even(m):
            return m - grade_select(m, 1) - grade_select(m, 3)

        assert geometric_product(even(a), even(b), sig).is_even(1e-12)

    @given(multivectors, multivectors)
    def test_commutator_antisymmetric(self, a, b):
        assert commutator(a, b, ELL).isclose(-commutator(b, a, ELL), 1e-12)


class TestGradesAndReverse:
    def test_grade_select(self):
        a = Multivector(range(1, 9))
        assert grade_select(a, 0) == ONE
        assert grade_select(a, 1) == 2 * e0 + 3 * e1 + 4 * e2
        assert grade_select(a, 3) == 8 * e012
        with pytest.raises(ValueError):
            grade_select(a, 4)

    def test_reverse(self):
        a = Multivector(range(1, 9))
        assert reverse(a) == grade_negate(a, (2, 3))
        assert reverse(reverse(a)) == a

    @given(multivectors, multivectors, signatures)
    def test_reverse_anti_homomorphism(self, a, b, sig):
        lhs = reverse(geometric_product(a, b, sig))
        rhs = geometric_product(reverse(b), reverse(a), sig)
        assert lhs.isclose(rhs, 1e-12)


class TestNormInverse:
    def test_examples(self):
        assert norm(4 * e1 - 3 * e2, EUC) == 5
        assert norm(e0, EUC) == 0
        assert inverse(e12, EUC) == -e12
        assert inverse(e0 + e1, EUC) == e0 + e1
        assert normalise(2 * e12, EUC) == e12
        assert normalise(4 * e1 - 3 * e2, EUC).isclose((4 * e1 - 3 * e2) / 5)

    @pytest.mark.parametrize("f", [inverse, normalise])
    def test_null_line(self, f):
        with pytest.raises(ZeroNorm):
            f(e0, EUC)

    def test_zero_norm_nonzero_element(self):
        # norm zero does not mean zero
        assert norm(e1 + e2, MINK) == 0
        with pytest.raises(ZeroNorm):
            inverse(e1 + e2, MINK)

    @pytest.mark.parametrize(
        "coefficients",
        [
            # null in exact arithmetic; float round-off leaves norm^4 near 1e-15 and 1e-32
            [0.9346415283026399, 0.9346415283026399, 1.0, 0.0, 0.0, 0.9346415283026399, 0.9346415283026399, 1.0],
            [0.9346415283026399, 0.9346415283026399, 0.0, 1.0, 0.0, 0.9346415283026399, 0.9346415283026399, 1.0],
        ],
    )
    def test_exactly_null_non_blades(self, coefficients):
        with pytest.raises(ZeroNorm):
            inverse(Multivector(coefficients), Signature((-1, 1, 1)))

    def test_unrepresentable_inverse(self):
        a = Multivector([1e-160, 2.0, 0.0, 1e-160, 1e-160, 0.0, 0.0, 0.0])
        with pytest.raises(ZeroNorm, match="finite double"):
            inverse(a, EUC)

    def test_zero_norm_is_scale_free(self):
        assert inverse(1e-20 * e1, EUC) == 1e20 * e1
        assert normalise(1e-30 * e12, EUC) == e12

    @given(st.one_of(vectors, bivectors).filter(lambda b: not b.is_zero()), st.sampled_from(ALL_SPACES))
    def test_zero_norm_matches_classification(self, a, space):
        try:
            inverse(a, space.signature)
            invertible = True
        except ZeroNorm:
            invertible = False
        assert invertible == (classify(a, space) is not Classification.NULL)

    @given(multivectors, signatures)
    def test_inverse_is_two_sided(self, a, sig):
        try:
            inv = inverse(a, sig)
        except ZeroNorm:
            return
        # compare a (inv / 2^e) with 2^-e so the check cannot overflow near the float limit
        e = math.frexp(inv.scale())[1]
        inv = Multivector(np.ldexp(inv.coefficients, -e))
        one = Multivector.scalar(math.ldexp(1.0, -e))
        tol = 1e-9 * max(math.ldexp(1.0, -e), inv.scale() * a.scale())
        assert geometric_product(a, inv, sig).isclose(one, tol)
        assert geometric_product(inv, a, sig).isclose(one, tol)

    @given(multivectors, multivectors, signatures)
    def test_quartic_form_multiplicative(self, a, b, sig):
        # norm^4 is a polynomial in the coefficients, so it carries no root-amplified rounding
        ab = geometric_product(a, b, sig)
        scale = (8 * a.scale() * b.scale()) ** 4
        assert abs(norm(ab, sig) ** 4 - (norm(a, sig) * norm(b, sig)) ** 4) <= 1e-13 * max(1.0, scale)


class TestExponential:
    @pytest.mark.parametrize("alpha", [-3.0, -0.5, 0.0, 1e-9, 0.7, 3.0])
    def test_closed_forms(self, alpha):
        assert exponential(alpha * e12, EUC).isclose(math.cos(alpha) + math.sin(alpha) * e12, 1e-15)
        assert exponential(alpha * e1, EUC).isclose(math.cosh(alpha) + math.sinh(alpha) * e1, 1e-14)
        assert exponential(alpha * e20, EUC) == 1 + alpha * e20

    def test_translation_example(self):
        r = 2.5
        assert exponential(-0.5 * r * e20, EUC) == 1 - 0.5 * r * e20

    def test_scalar_part_factors_out(self):
        got = exponential(1.0 + 0.3 * e12, EUC)
        want = math.e * (math.cos(0.3) + math.sin(0.3) * e12)
        assert got.isclose(want, 1e-14)

    @given(bivectors.filter(lambda b: b.scale() < 2), signatures)
    def test_inverse_is_negation(self, b, sig):
        assert geometric_product(exponential(b, sig), exponential(-b, sig), sig).isclose(ONE, 1e-10)

    def test_mixed_grades_use_series(self):
        a = 0.3 * e1 + 0.2 * e12
        got = exponential(a, ELL)
        total, term = ONE, ONE
        for n in range(1, 40):
            term = geometric_product(term, a, ELL) / n
            total = total + term
        assert got.isclose(total, 1e-14)


def test_basis_tuple():
    assert BASIS[7] is e012 or BASIS[7] == e012
    assert I == e012
    assert [b.grade_of() for b in BASIS] == [0, 1, 1, 1, 2, 2, 2, 3]
