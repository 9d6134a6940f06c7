from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from polyperm.classifier import Basis
from polyperm.enumerator import (
    CountSequence,
    EventualPolynomial,
    GrowthProbe,
    InsufficientData,
    avoider_lower_bounds,
    count_avoiders,
    empirical_growth_probe,
    fibonacci,
    fibonacci_dominated,
    finite_differences,
    fit_eventual_polynomial,
    fit_while_counting,
    generate_avoiders,
)
from polyperm.errors import BudgetExceeded, InvalidInput
from polyperm.perms import EMPTY, all_perms, avoids_basis

B = Basis.parse
POOL = [*all_perms(3), *all_perms(4)]


def brute_avoiders(basis, n):
    return sorted(p for p in all_perms(n) if avoids_basis(p, basis))


class TestGeneration:
    def test_examples(self):
        assert [str(p) for p in generate_avoiders(B("132 321"), 3)] == ["123", "213", "231", "312"]
        assert generate_avoiders(B("1"), 3) == []
        assert generate_avoiders(B("123"), 0) == [EMPTY]

    @given(st.lists(st.sampled_from(POOL), min_size=1, max_size=3))
    def test_matches_filtering(self, members):
        basis = Basis(members)
        for n in range(0, 7):
            assert generate_avoiders(basis, n) == brute_avoiders(basis, n)

    def test_negative_length(self):
        with pytest.raises(InvalidInput):
            generate_avoiders(B("12"), -1)


class TestCounting:
    def test_simion_schmidt(self):
        assert list(count_avoiders(B("132 321"), 12)) == [n * (n - 1) // 2 + 1 for n in range(13)]

    def test_degenerate(self):
        assert list(count_avoiders(B("1"), 10)) == [1] + [0] * 10
        assert list(count_avoiders(B("12"), 10)) == [1] * 11
        assert list(count_avoiders(B("21"), 10)) == [1] * 11

    def test_catalan_and_fibonacci_classes(self):
        assert list(count_avoiders(B("132"), 8)) == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
        # Av(123, 132, 213) is counted by Fibonacci numbers.
        assert list(count_avoiders(B("123 132 213"), 8)) == [fibonacci(n + 1) for n in range(9)]

    def test_count_sequence(self):
        seq = count_avoiders(B("12"), 4)
        assert isinstance(seq, CountSequence) and seq.max_n == 4

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as info:
            count_avoiders(B("123"), 12, max_nodes=1000)
        assert info.value.nodes > 1000
        count_avoiders(B("123"), 12, max_nodes=None)

    def test_lower_bounds(self):
        exact = count_avoiders(B("123"), 10)
        bounds = avoider_lower_bounds(B("123"), 10, keep=20)
        assert all(b <= e for b, e in zip(bounds, exact))
        assert list(bounds[:4]) == list(exact[:4])
        assert avoider_lower_bounds(B("123"), 10, keep=10**6) == exact


class TestFit:
    def test_simion_schmidt_polynomial(self):
        fit = fit_eventual_polynomial(count_avoiders(B("132 321"), 12))
        assert isinstance(fit, EventualPolynomial)
        assert fit.degree == 2 and fit.threshold == 0
        assert fit.to_json() == {"degree": 2, "coefficients": ["1", "-1/2", "1/2"], "threshold": 0}

    def test_constant_and_zero(self):
        fit = fit_eventual_polynomial(count_avoiders(B("1"), 8))
        assert (fit.degree, fit.threshold, fit.poly(5)) == (0, 1, 0)
        fit = fit_eventual_polynomial([1] * 6)
        assert (fit.degree, fit.threshold) == (0, 0)

    def test_exponential_is_insufficient(self):
        assert isinstance(fit_eventual_polynomial([2 ** n for n in range(15)]), InsufficientData)

    def test_needs_two_extra_agreeing_terms(self):
        # Four points define a cubic; two more must agree before it is accepted.
        cubic = [comb(n, 3) + 7 for n in range(6)]
        assert isinstance(fit_eventual_polynomial(cubic[:5]), InsufficientData)
        fit = fit_eventual_polynomial(cubic)
        assert (fit.degree, fit.threshold) == (3, 0)

    def test_threshold_is_least(self):
        seq = [5, 3] + [n * n for n in range(2, 12)]
        fit = fit_eventual_polynomial(seq)
        assert (fit.degree, fit.threshold) == (2, 2)
        assert fit.poly.coeffs == (Fraction(0), Fraction(0), Fraction(1))

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(0, 3))
    def test_recovers_polynomials(self, coeffs, shift):
        values = [sum(c * n ** k for k, c in enumerate(coeffs)) for n in range(len(coeffs) + 6 + shift)]
        fit = fit_eventual_polynomial(values)
        assert isinstance(fit, EventualPolynomial)
        assert all(fit.poly(n) == values[n] for n in range(fit.threshold, len(values)))
        d = len(coeffs) - 1
        while d > 0 and coeffs[d] == 0:
            d -= 1
        assert fit.degree <= d

    def test_finite_differences(self):
        assert finite_differences([n * n for n in range(6)], 2) == [2, 2, 2, 2]
        assert finite_differences([1, 2, 4], 0) == [1, 2, 4]

    def test_fit_while_counting_stops_early(self):
        fit, counts = fit_while_counting(B("132 321"), 14)
        assert isinstance(fit, EventualPolynomial) and fit.degree == 2
        assert counts.max_n < 14


class TestProbe:
    def test_fibonacci(self):
        assert [fibonacci(k) for k in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]

    def test_dominance(self):
        assert fibonacci_dominated(count_avoiders(B("123 132"), 12))
        assert not fibonacci_dominated(count_avoiders(B("132 321"), 12))

    def test_probe_kinds(self):
        assert empirical_growth_probe(count_avoiders(B("132 321"), 12)) == GrowthProbe("poly_stabilized", 2)
        assert empirical_growth_probe(count_avoiders(B("123 132"), 12)).kind == "fibonacci_dominant"
        assert empirical_growth_probe(count_avoiders(B("132 321"), 6)).kind == "inconclusive"
        assert str(GrowthProbe("poly_stabilized", 2)) == "poly_stabilized(2)"
