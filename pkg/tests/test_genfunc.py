from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from polyperm.enumerator import count_avoiders
from polyperm.errors import InvalidInput
from polyperm.genfunc import (
    catalan,
    check_g_laws,
    eventual_poly_of_f,
    expected_leading,
    f_series,
    g_poly,
    mv_consistency,
    substitution_round_trip,
)
from polyperm.perms import increasing, perm
from polyperm.series import (
    PowerSeries,
    RationalPolynomial,
    lagrange_through,
    x_over_one_minus_x,
    x_over_one_plus_x,
)

R = RationalPolynomial
small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


class TestRationalPolynomial:
    def test_trimmed_and_degree(self):
        assert R([1, 2, 0, 0]).coeffs == (1, 2)
        assert R().degree == -1 and R([3]).degree == 0
        assert R([0, 0, 5]).leading == 5

    def test_arithmetic(self):
        a, b = R([1, 1]), R([1, -1])
        assert a * b == R([1, 0, -1])
        assert a + b == R([2])
        assert (a - a).is_zero()
        assert a(Fraction(1, 2)) == Fraction(3, 2)

    @given(st.lists(small_fracs, max_size=4), st.lists(small_fracs, max_size=4), small_fracs)
    def test_evaluation_is_a_ring_map(self, xs, ys, t):
        a, b = R(xs), R(ys)
        assert (a * b)(t) == a(t) * b(t)
        assert (a + b)(t) == a(t) + b(t)

    def test_str(self):
        assert str(R([1, Fraction(-1, 2), Fraction(1, 2)])) == "1 + (-1/2)*n + (1/2)*n^2"
        assert str(R()) == "0"

    def test_interpolation(self):
        pts = [(n, n * n - 3) for n in range(4, 8)]
        assert lagrange_through(pts) == R([-3, 0, 1])


class TestPowerSeries:
    def test_truncation_is_enforced(self):
        s = PowerSeries([1, 2, 3, 4], 2)
        assert s.coeffs == (1, 2, 3)
        with pytest.raises(IndexError):
            s[3]

    def test_order_of_combination(self):
        a, b = PowerSeries([1, 1, 1, 1], 3), PowerSeries([1, 1], 1)
        assert (a * b).order == 1
        assert (a + b).order == 1

    def test_geometric_inverse(self):
        one_minus_x = PowerSeries([1, -1], 6)
        assert one_minus_x.inverse() == PowerSeries([1] * 7, 6)
        with pytest.raises(InvalidInput):
            PowerSeries([0, 1], 3).inverse()

    def test_substitution_helpers_are_inverse(self):
        y = x_over_one_plus_x(8)
        back = R([0, 1]).compose_series(y)
        assert R(x_over_one_minus_x(8).coeffs).compose_series(y) == PowerSeries([0, 1], 8)
        assert back == y

    def test_compose_needs_zero_constant(self):
        with pytest.raises(InvalidInput):
            R([1, 1]).compose_series(PowerSeries([1, 1], 3))


class TestGPolynomials:
    def test_small_cases(self):
        assert g_poly(0) == R()
        assert g_poly(1) == R([1])
        assert g_poly(2) == R([1, 1])
        assert g_poly(3) == R([1, 1, 1, 1])
        assert g_poly(4) == R([1, 1, 1, 2, 3, 2])

    def test_catalan(self):
        assert [catalan(k) for k in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]

    def test_laws(self):
        report = check_g_laws(10)
        assert report.ok
        rows = {row["r"]: row for row in report.rows}
        assert (rows[2]["degree"], rows[2]["leading"]) == (1, 1)
        assert (rows[4]["degree"], rows[4]["leading"]) == (5, 2)
        assert (rows[8]["degree"], rows[8]["leading"]) == (13, 132)

    def test_laws_reject_small_range(self):
        with pytest.raises(InvalidInput):
            check_g_laws(1)


class TestSeries:
    @pytest.mark.parametrize("r, order, expected", [
        (2, 5, [1, 1, 1, 1, 1, 1]),
        (3, 4, [1, 1, 2, 4, 7]),
        (1, 3, [1, 0, 0, 0]),
    ])
    def test_examples(self, r, order, expected):
        assert list(f_series(r, order).coeffs) == expected

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_matches_counts(self, r):
        counts = count_avoiders([increasing(r), perm((2, 3, 1))], 10)
        assert [int(c) for c in f_series(r, 10).coeffs] == list(counts)

    @pytest.mark.parametrize("r, order", [(1, 5), (2, 8), (3, 10), (5, 12), (7, 12)])
    def test_recursive_identity(self, r, order):
        assert mv_consistency(r, order)

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 6])
    def test_round_trip(self, r):
        assert substitution_round_trip(r, 14)


class TestEventualPolynomial:
    def test_r3_closed_form(self):
        fit = eventual_poly_of_f(3)
        assert fit.poly == R([1, Fraction(-1, 2), Fraction(1, 2)])

    @pytest.mark.parametrize("r", [3, 4, 5, 6])
    def test_degree_and_leading(self, r):
        fit = eventual_poly_of_f(r)
        assert fit.degree == 2 * r - 4
        assert fit.poly.leading == Fraction(1, factorial(r - 1) * factorial(r - 2))
        assert all((c * factorial(2 * r - 4)).denominator == 1 for c in fit.poly.coeffs)

    def test_leading_values(self):
        assert expected_leading(4) == Fraction(1, 12)
        assert expected_leading(5) == Fraction(1, 144)

    def test_order_too_small(self):
        with pytest.raises(InvalidInput, match="need at least 7"):
            eventual_poly_of_f(4, order=5)
        with pytest.raises(InvalidInput):
            eventual_poly_of_f(2)
