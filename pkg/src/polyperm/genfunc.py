"""
Generating functions for Av(12...r, 231).

G_r enumerates the irreducible members by length (variable y) and obeys an
explicit recurrence, so each G_r is a polynomial. F_r, the ordinary
generating function of the whole class, is G_r with y = x/(1-x).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .enumerator import InsufficientData, fit_eventual_polynomial
from .errors import Discrepancy, InvalidInput
from .series import PowerSeries, RationalPolynomial, x_over_one_minus_x, x_over_one_plus_x


@lru_cache(maxsize=None)
def g_poly(r: int) -> RationalPolynomial:
    """G_0 = 0, G_1 = 1, G_r = 1 + y + y * sum_{i=2}^{r-1} (G_i - G_{i-1}) G_{r+1-i}."""
    if r < 0:
        raise InvalidInput("r must be nonnegative")
    if r == 0:
        return RationalPolynomial()
    if r == 1:
        return RationalPolynomial([1])
    acc = RationalPolynomial()
    for i in range(2, r):
        acc = acc + (g_poly(i) - g_poly(i - 1)) * g_poly(r + 1 - i)
    return RationalPolynomial([1, 1]) + RationalPolynomial.x() * acc


def f_series(r: int, order: int) -> PowerSeries:
    """Coefficients of x^0..x^order in F_r(x) = G_r(x/(1-x))."""
    if r < 1:
        raise InvalidInput("r must be at least 1")
    if order < 0:
        raise InvalidInput("order must be nonnegative")
    return g_poly(r).compose_series(x_over_one_minus_x(order))


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    """cat(0) = 1, cat(k+1) = sum_{i=0}^{k} cat(i) cat(k-i)."""
    if k == 0:
        return 1
    return sum(catalan(i) * catalan(k - 1 - i) for i in range(k))


@dataclass
class LawReport:
    rows: list = field(default_factory=list)

    @property
    def degree_ok(self) -> bool:
        return all(row["degree_ok"] for row in self.rows)

    @property
    def leading_ok(self) -> bool:
        return all(row["leading_ok"] for row in self.rows)

    @property
    def ok(self) -> bool:
        return self.degree_ok and self.leading_ok


def check_g_laws(r_max: int) -> LawReport:
    """degree(G_r) = 2r - 3 and leading coefficient cat(r - 2), for 2 <= r <= r_max."""
    if r_max < 2:
        raise InvalidInput("r_max must be at least 2")
    report = LawReport()
    for r in range(2, r_max + 1):
        g = g_poly(r)
        report.rows.append({
            "r": r,
            "degree": g.degree,
            "expected_degree": 2 * r - 3,
            "leading": g.leading,
            "expected_leading": catalan(r - 2),
            "degree_ok": g.degree == 2 * r - 3,
            "leading_ok": g.leading == catalan(r - 2),
        })
    return report


def mv_consistency(r: int, order: int) -> bool:
    """
    Check F_r = 1 + x * sum_{i=1}^{r-1} (F_i - F_{i-1}) F_{r+1-i} through x^order
    for the series produced by substitution.
    """
    if r < 1:
        raise InvalidInput("r must be at least 1")
    fs = [PowerSeries([0], order)] + [f_series(i, order) for i in range(1, r + 1)]
    acc = PowerSeries([0], order)
    for i in range(1, r):
        acc = acc + (fs[i] - fs[i - 1]) * fs[r + 1 - i]
    rhs = PowerSeries([1], order) + acc.shift(1)
    return rhs == fs[r]


def substitution_round_trip(r: int, order: int) -> bool:
    """F_r(y/(1+y)) recovers G_r coefficient-wise through y^order."""
    f = f_series(r, order)
    back = RationalPolynomial(f.coeffs).compose_series(x_over_one_plus_x(order))
    g = PowerSeries(g_poly(r).coeffs, order)
    return back == g


def expected_leading(r: int) -> Fraction:
    """1 / ((r-1)! (r-2)!)."""
    return Fraction(1, factorial(r - 1) * factorial(r - 2))


def eventual_poly_of_f(r: int, order: int | None = None):
    """
    Fit the eventual counting polynomial of Av(12...r, 231) from the series
    coefficients. Raises ``InvalidInput`` when the order is too small and
    ``Discrepancy`` when the degree or leading coefficient law fails.
    """
    if r < 3:
        raise InvalidInput("r must be at least 3")
    need = 2 * r - 4 + 3
    if order is None:
        order = need + 2
    if order < need:
        raise InvalidInput(f"order {order} too small; need at least {need} for degree {2 * r - 4}")
    coeffs = f_series(r, order).coeffs
    fit = fit_eventual_polynomial([int(c) for c in coeffs])
    if isinstance(fit, InsufficientData):
        raise InvalidInput(f"order {order} too small to stabilise the fit")
    if fit.degree != 2 * r - 4 or fit.poly.leading != expected_leading(r):
        raise Discrepancy(
            f"r={r}: fitted degree {fit.degree}, leading {fit.poly.leading}; "
            f"expected {2 * r - 4}, {expected_leading(r)}"
        )
    return fit
