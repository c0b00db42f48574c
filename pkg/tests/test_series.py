"""Series engine: Laurent polynomials, windowed series, products."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from bpskit import (
    BiSeries,
    EmptyWindow,
    InsufficientWindow,
    LaurentPoly,
    NonUnitLeading,
    TruncSeries,
    binom_pow,
    eta_power,
    involution_check,
    lp_arith,
    product_family,
    q_negate,
    series_arith,
    series_inverse,
)
from conftest import laurent_terms, naive_mul, trunc_series, unit_series


class TestLaurentPoly:
    def test_zero_coefficients_never_stored(self):
        p = LaurentPoly({0: 1, 3: 0, -2: 5})
        assert p.support == (-2, 0)
        assert p.coeff(3) == 0

    def test_duplicate_exponents_accumulate(self):
        p = LaurentPoly([(1, 2), (1, -2), (0, 7)])
        assert p == LaurentPoly({0: 7})

    def test_lp_arith_add(self):
        a = LaurentPoly({1: 2, 0: 20, -1: 2})
        b = LaurentPoly({1: -2, 2: 1})
        assert lp_arith(a, b, "add") == LaurentPoly({2: 1, 0: 20, -1: 2})

    def test_lp_arith_mul(self):
        a = LaurentPoly({1: 1, -1: 1})
        b = LaurentPoly({1: 1, -1: -1})
        assert lp_arith(a, b, "mul") == LaurentPoly({2: 1, -2: -1})

    def test_lp_arith_rejects_unknown_op(self):
        with pytest.raises(ValueError):
            lp_arith(LaurentPoly(), LaurentPoly(), "div")

    def test_pow_matches_repeated_mul(self):
        p = LaurentPoly({1: 1, 0: -2, -1: 1})
        assert p ** 3 == p * p * p
        assert p ** 0 == LaurentPoly({0: 1})

    def test_scale_and_neg(self):
        p = LaurentPoly({2: 3})
        assert p.scale(-2) == LaurentPoly({2: -6})
        assert -p == p.scale(-1)
        assert p.scale(0) == LaurentPoly()

    def test_involution_check(self):
        assert involution_check(LaurentPoly({1: 2, 0: 20, -1: 2}))
        assert not involution_check(LaurentPoly({1: 2, 0: 20, -1: 3}))
        assert involution_check(LaurentPoly())

    def test_eval_at_one(self):
        assert LaurentPoly({1: 2, 0: 20, -1: 2}).eval_at_one() == 24

    def test_json_roundtrip(self):
        p = LaurentPoly({-3: 12345678901234567890, 4: -7})
        assert LaurentPoly.from_json(p.to_json()) == p

    @given(laurent_terms, laurent_terms, laurent_terms)
    def test_ring_axioms(self, ta, tb, tc):
        a, b, c = LaurentPoly(ta), LaurentPoly(tb), LaurentPoly(tc)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(laurent_terms)
    def test_symmetrised_poly_passes_involution_check(self, terms):
        p = LaurentPoly(terms)
        assert involution_check(p + p.involution())


class TestTruncSeries:
    def test_window_reporting(self):
        s = TruncSeries.from_terms({-1: 1, 0: 2, 1: 1}, order=5)
        assert (s.min_exp, s.order) == (-1, 5)
        assert s.coeff(-1) == 1 and s.coeff(4) == 0
        assert s.coeff(-10) == 0  # below the valuation bound: known zero
        with pytest.raises(InsufficientWindow):
            s.coeff(6)  # beyond the window: never reported

    def test_leading_zeros_are_stripped(self):
        s = TruncSeries(0, [0, 0, 5, 0], 3)
        assert (s.min_exp, s.order) == (2, 3)
        assert s.coeff_list() == [5, 0]

    def test_all_zero_is_canonical(self):
        s = TruncSeries(0, [0, 0, 0], 2)
        assert s.is_zero and s == TruncSeries.zero(2)
        assert s != TruncSeries.zero(5)  # different knowledge

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            TruncSeries(0, [1, 2], 5)

    def test_from_terms_rejects_terms_above_order(self):
        with pytest.raises(ValueError):
            TruncSeries.from_terms({3: 1}, order=2)

    def test_add_window_is_min_of_orders(self):
        a = TruncSeries.from_terms({0: 1, 1: 1}, order=5)
        b = TruncSeries.from_terms({-2: 3}, order=9)
        out = series_arith(a, b, "add")
        assert (out.min_exp, out.order) == (-2, 5)
        assert out.coeff(-2) == 3 and out.coeff(0) == 1

    def test_mul_window_rule(self):
        a = TruncSeries.from_terms({0: 1, 1: 1}, order=5)   # 1 + q
        b = TruncSeries.from_terms({0: 1, 1: -1}, order=5)  # 1 - q
        out = series_arith(a, b, "mul")
        assert (out.min_exp, out.order) == (0, 5)
        assert out == TruncSeries.from_terms({0: 1, 2: -1}, order=5)

    def test_mul_identity_needs_wide_one(self):
        s = TruncSeries.from_terms({-1: 1, 0: 2, 1: 1})
        one = TruncSeries.one(2)
        assert series_arith(s, one, "mul") == s

    def test_empty_window_raises(self):
        with pytest.raises(EmptyWindow):
            series_arith(TruncSeries.zero(5), TruncSeries.one(9), "mul")

    def test_truncate(self):
        s = TruncSeries.from_terms({0: 1, 4: 2}, order=6)
        t = s.truncate(2)
        assert (t.min_exp, t.order) == (0, 2)
        with pytest.raises(InsufficientWindow):
            s.truncate(7)

    def test_shift_and_scale(self):
        s = TruncSeries.from_terms({1: 2}, order=3)
        assert s.shift(-2) == TruncSeries.from_terms({-1: 2}, order=1)
        assert s.scale(3).coeff(1) == 6

    def test_json_roundtrip(self):
        s = TruncSeries(-2, [1, 0, 10 ** 30, -4], 1)
        assert TruncSeries.from_json(s.to_json()) == s
        assert s.to_json()["coeffs"][2] == str(10 ** 30)

    @given(trunc_series(), trunc_series())
    def test_mul_matches_naive_double_loop(self, a, b):
        assert a * b == naive_mul(a, b)

    @given(trunc_series(), trunc_series(), trunc_series())
    def test_mul_distributes_over_add(self, a, b, c):
        left = a * (b + c)
        right = a * b + a * c
        # both truncations of the same product; compare on the common window
        order = min(left.order, right.order)
        assert left.truncate(order) == right.truncate(order)

    @given(trunc_series())
    def test_q_negate_is_an_involution(self, a):
        assert q_negate(q_negate(a)) == a

    @given(trunc_series(), trunc_series())
    def test_q_negate_is_multiplicative(self, a, b):
        assert q_negate(a * b) == q_negate(a) * q_negate(b)


class TestSeriesInverse:
    def test_geometric_example(self):
        s = TruncSeries.from_terms({0: 1, 1: 2, 2: 1}, order=3)  # (1+q)^2
        assert series_inverse(s, 3) == TruncSeries(0, [1, -2, 3, -4], 3)

    def test_laurent_leading_term(self):
        s = TruncSeries.from_terms({-1: 1, 0: 2, 1: 1}, order=3)  # q^-1 (1+q)^2
        inv = series_inverse(s, 5)
        assert inv == TruncSeries(1, [1, -2, 3, -4, 5], 5)

    def test_non_unit_leading(self):
        with pytest.raises(NonUnitLeading):
            series_inverse(TruncSeries.from_terms({0: 2}, order=4), 2)
        with pytest.raises(NonUnitLeading):
            series_inverse(TruncSeries.zero(4), 0)

    def test_window_too_short_for_requested_order(self):
        s = TruncSeries.from_terms({1: 1, 2: -1}, order=4)  # q(1 - q), valuation 1
        assert series_inverse(s, 2) == TruncSeries(-1, [1, 1, 1, 1], 2)
        with pytest.raises(InsufficientWindow):
            series_inverse(s, 3)

    @given(unit_series(), st.integers(0, 6))
    @settings(max_examples=150)
    def test_multiply_back_gives_one(self, a, extra):
        order = a.order - 2 * a.min_exp - extra
        if order < -a.min_exp:
            return
        inv = series_inverse(a, order)
        prod = a * inv
        assert prod == TruncSeries.one(prod.order)


class TestBinomPow:
    def test_plus_negative_exponent(self):
        assert binom_pow(-2, "plus", 3) == TruncSeries(0, [1, -2, 3, -4], 3)

    def test_minus_negative_exponent(self):
        assert binom_pow(-2, "minus", 3) == TruncSeries(0, [1, 2, 3, 4], 3)

    def test_positive_exponent_is_polynomial(self):
        assert binom_pow(2, "minus", 4) == TruncSeries(0, [1, -2, 1, 0, 0], 4)

    def test_minus_24(self):
        assert binom_pow(-24, "minus", 3).coeff_list() == [1, 24, 300, 2600]

    @pytest.mark.parametrize("e", range(-10, 11))
    def test_inverse_pair_identity(self, e):
        prod = binom_pow(e, "plus", 12) * binom_pow(-e, "plus", 12)
        assert prod == TruncSeries.one(12)

    @pytest.mark.parametrize("sign", ["plus", "minus"])
    def test_exponents_add(self, sign):
        prod = binom_pow(3, sign, 10) * binom_pow(-7, sign, 10)
        assert prod == binom_pow(-4, sign, 10)

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            binom_pow(2, "times", 3)


class TestProducts:
    def test_empty_factor_list_gives_one(self):
        B = product_family([], 5)
        assert B.coeff(0) == LaurentPoly({0: 1})
        assert all(not B.coeff(h) for h in range(1, 6))

    def test_eta_24_first_values(self):
        B = product_family([(0, -24)], 3)
        assert [B.coeff(h).coeff(0) for h in range(4)] == [1, 24, 324, 3200]

    def test_eta_power_matches_product_family(self):
        s = eta_power(-24, 8)
        B = product_family([(0, -24)], 8)
        assert [s.coeff(h) for h in range(9)] == [B.coeff(h).coeff(0) for h in range(9)]

    def test_eta_plus_one_is_pentagonal(self):
        assert eta_power(1, 12).coeff_list() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]

    def test_eta_minus_one_counts_partitions(self):
        assert eta_power(-1, 10).coeff_list() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_eta_opposite_exponents_cancel(self):
        prod = eta_power(5, 15) * eta_power(-5, 15)
        assert prod == TruncSeries.one(15)

    def test_degree_bound(self):
        B = product_family([(1, -2), (-1, -2), (0, -20)], 9)
        for h in range(10):
            p = B.coeff(h)
            if p:
                assert -h <= p.min_exp and p.max_exp <= h

    @pytest.mark.parametrize(
        "factors",
        [
            [(1, -2), (-1, -2), (0, -20)],
            [(2, 3), (-2, 3)],
            [(1, 5), (-1, 5), (2, -1), (-2, -1)],
        ],
    )
    def test_symmetric_factors_give_symmetric_rows(self, factors):
        B = product_family(factors, 7)
        assert all(involution_check(B.coeff(h)) for h in range(8))

    def test_mirror_factors_give_mirror_rows(self):
        B = product_family([(1, -3), (0, 2)], 6)
        C = product_family([(-1, -3), (0, 2)], 6)
        assert all(B.coeff(h).involution() == C.coeff(h) for h in range(7))

    def test_product_matches_factorwise_series_mul(self):
        # univariate cross-check: expand each (1 - q^n)^-2 separately
        order = 10
        acc = TruncSeries.one(order)
        for n in range(1, order + 1):
            factor = TruncSeries.from_terms(
                {n * k: k + 1 for k in range(order // n + 1)}, order=order
            )
            acc = acc * factor
        B = product_family([(0, -2)], order)
        assert acc.coeff_list() == [B.coeff(h).coeff(0) for h in range(order + 1)]

    def test_biseries_window_enforced(self):
        B = product_family([(0, -1)], 4)
        with pytest.raises(InsufficientWindow):
            B.coeff(5)

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            product_family([(0, -1)], -1)
