import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import POINTS, eval_poly, eval_scalar, qint_b_value, qint_value
from tljw.scalar import (
    DOT_MERGE,
    DOTTED_LOOP,
    LOOP,
    ONE,
    ZERO,
    LaurentPoly,
    Q,
    S,
    Scalar,
    ScalarError,
    ZeroDenominatorError,
    ZeroInversionError,
    qint,
    qint_b,
    quantum,
)

exponent = st.integers(-3, 3)
polys = st.dictionaries(st.tuples(exponent, exponent), st.integers(-4, 4), max_size=4).map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
scalars = st.builds(Scalar, polys, nonzero_polys)
nonzero_scalars = st.builds(Scalar, nonzero_polys, nonzero_polys)


def lp(terms):
    return LaurentPoly(terms)


class TestQuantumIntegers:
    def test_small_values(self):
        assert qint(0) == LaurentPoly()
        assert qint(1) == lp({(0, 0): 1})
        assert qint(2) == lp({(1, 0): 1, (-1, 0): 1})
        assert qint(3) == lp({(2, 0): 1, (0, 0): 1, (-2, 0): 1})

    def test_small_b_values(self):
        assert qint_b(0) == lp({(0, 0): 1})
        assert qint_b(1) == lp({(0, 1): 1, (0, -1): 1})
        assert qint_b(3) == lp({(2, 1): 1, (-2, -1): 1})

    @pytest.mark.parametrize("n", range(0, 25))
    def test_qint_matches_closed_form(self, n):
        for q, _ in POINTS:
            assert eval_poly(qint(n), q, 1) == qint_value(n, q)

    @pytest.mark.parametrize("n", range(0, 25))
    def test_qint_b_matches_formula(self, n):
        for q, s in POINTS:
            assert eval_poly(qint_b(n), q, s) == qint_b_value(n, q, s)

    @pytest.mark.parametrize("n", range(1, 33))
    def test_q_symmetry(self, n):
        assert qint(n).invert_q() == qint(n)

    @pytest.mark.parametrize("n", range(2, 33))
    def test_two_times_b_integer(self, n):
        assert qint(2) * qint_b(n) == qint_b(n + 1) + qint_b(n - 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            qint(-1)
        with pytest.raises(ValueError):
            qint_b(-2)

    def test_quantum_dispatch(self):
        assert quantum("A", 3) == Scalar(qint(3))
        assert quantum("B", 3) == Scalar(qint_b(3))

    def test_loop_constants(self):
        assert LOOP == -Scalar(qint(2))
        assert DOT_MERGE == -Scalar(qint_b(1))
        q, s = POINTS[0]
        assert eval_scalar(DOTTED_LOOP, q, s) == q / s + s / q


class TestLaurentPoly:
    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == LaurentPoly()

    @given(polys, polys)
    def test_evaluation_homomorphism(self, a, b):
        for q, s in POINTS:
            assert eval_poly(a * b, q, s) == eval_poly(a, q, s) * eval_poly(b, q, s)
            assert eval_poly(a + b, q, s) == eval_poly(a, q, s) + eval_poly(b, q, s)

    @given(polys)
    def test_json_round_trip(self, a):
        data = json.loads(json.dumps(a.to_json()))
        assert LaurentPoly.from_json(data) == a

    def test_zero_coefficients_dropped(self):
        assert lp({(1, 0): 0}) == LaurentPoly()
        assert len(Q - Q) == 0

    def test_format(self):
        assert str(qint(2)) == "q + q^-1"
        assert (Q * S).format(latex=True) == "qs"
        assert qint(3).format(latex=True) == "q^{2} + 1 + q^{-2}"


class TestScalar:
    def test_spec_examples(self):
        half = Scalar(1, qint(2))
        assert half + half == Scalar(2, qint(2))
        assert Scalar(qint(2), qint(3)) * Scalar(qint(3), qint(2)) == ONE
        assert Scalar(lp({(2, 0): 1, (-2, 0): -1}), lp({(1, 0): 1, (-1, 0): -1})) == Scalar(qint(2))

    @given(scalars, scalars, scalars)
    def test_field_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a and a * ONE == a
        assert a - a == ZERO
        if not a.is_zero():
            assert a * a.inv() == ONE
            assert b / a * a == b

    @given(scalars, scalars)
    def test_agrees_with_rational_evaluation(self, a, b):
        for q, s in POINTS:
            va, vb = eval_scalar(a, q, s), eval_scalar(b, q, s)
            assert eval_scalar(a + b, q, s) == va + vb
            assert eval_scalar(a * b, q, s) == va * vb
            assert eval_scalar(a - b, q, s) == va - vb

    @given(polys, nonzero_polys, polys, nonzero_polys)
    def test_agrees_with_laurent_cross_multiplication(self, n1, d1, n2, d2):
        total = Scalar(n1, d1) + Scalar(n2, d2)
        assert total == Scalar(n1 * d2 + n2 * d1, d1 * d2)
        assert total.num * (d1 * d2) == (n1 * d2 + n2 * d1) * total.den

    @given(scalars)
    def test_canonical_form(self, a):
        num, den = a.canonical()
        assert Scalar(num, den) == a
        assert Scalar(num, den).canonical() == (num, den)
        assert den.min_exponents() == (0, 0)
        assert den.sorted_terms()[0][1] > 0

    @given(scalars)
    def test_json_round_trip(self, a):
        data = json.loads(json.dumps(a.to_json()))
        assert Scalar.from_json(data) == a
        assert Scalar.from_json(data).to_json() == a.to_json()

    @given(scalars, scalars)
    def test_equal_scalars_hash_equal(self, a, b):
        if a == b:
            assert hash(a) == hash(b)
        assert hash(a * b / b if not b.is_zero() else a) == hash(a)

    def test_equality_with_ints(self):
        assert Scalar(3) == 3
        assert Scalar(qint(2), qint(2)) == 1

    def test_error_types_are_distinct(self):
        with pytest.raises(ZeroInversionError):
            ZERO.inv()
        with pytest.raises(ZeroDenominatorError):
            Scalar(1, 0)
        assert not issubclass(ZeroInversionError, ZeroDenominatorError)
        assert issubclass(ZeroInversionError, ScalarError)
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_powers(self):
        x = Scalar(qint(2), qint(3))
        assert x**3 == x * x * x
        assert x**-2 == (x * x).inv()
        assert x**0 == ONE

    def test_format(self):
        x = Scalar(1, qint(2))
        assert x.format() == "(q)/(q^2 + 1)"
        assert x.format(latex=True).startswith("\\frac{")

    def test_exact_at_sample_points(self):
        x = Scalar(qint(2) * qint_b(1), qint_b(4) * qint_b(2))
        for q, s in POINTS:
            want = qint_value(2, q) * qint_b_value(1, q, s) / (qint_b_value(4, q, s) * qint_b_value(2, q, s))
            assert eval_scalar(x, q, s) == want
        assert isinstance(eval_scalar(x, *POINTS[0]), Fraction)
