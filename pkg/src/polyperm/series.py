"""Exact rational polynomials and truncated power series."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalPolynomial:
    """Polynomial with Fraction coefficients, stored ascending and trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "RationalPolynomial":
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPolynomial":
        return self + (-_poly(other))

    def __rsub__(self, other) -> "RationalPolynomial":
        return _poly(other) - self

    def __mul__(self, other) -> "RationalPolynomial":
        other = _poly(other)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_series(self, s: "PowerSeries") -> "PowerSeries":
        """Substitute a series with zero constant term, keeping s's order."""
        if s[0] != 0:
            raise InvalidInput("substituted series must have zero constant term")
        acc = PowerSeries([0], s.order)
        for c in reversed(self.coeffs):
            acc = acc * s + PowerSeries([c], s.order)
        return acc

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({c})*{mono}" if c.denominator != 1 or c < 0 else f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms)


def _poly(x) -> RationalPolynomial:
    return x if isinstance(x, RationalPolynomial) else RationalPolynomial([x])


class PowerSeries:
    """
    Power series known exactly through x^order. Coefficients past the
    order are never exposed; combining series keeps the smaller order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise InvalidInput("truncation order must be nonnegative")
        cs = [_frac(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise IndexError(f"coefficient {k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        return (isinstance(other, PowerSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, RationalPolynomial):
            return PowerSeries(other.coeffs, self.order)
        return PowerSeries([other], self.order)

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries((self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "PowerSeries":
        """Multiply by x^k."""
        return PowerSeries([0] * k + list(self.coeffs), self.order)

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise InvalidInput("series with zero constant term is not invertible")
        out = [1 / self.coeffs[0]]
        for n in range(1, self.order + 1):
            acc = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out.append(-acc / self.coeffs[0])
        return PowerSeries(out, self.order)

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def x_over_one_minus_x(order: int) -> PowerSeries:
    """x/(1-x) through x^order."""
    return PowerSeries([0] + [1] * order, order)


def x_over_one_plus_x(order: int) -> PowerSeries:
    """x/(1+x) through x^order."""
    return PowerSeries([0] + [(-1) ** (k - 1) for k in range(1, order + 1)], order)


def lagrange_through(points: Sequence[tuple[int, int]]) -> RationalPolynomial:
    """Interpolating polynomial through (x, y) pairs, via Newton divided differences."""
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    coef = [table[0]]
    for level in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coef.append(table[0])
    poly = RationalPolynomial()
    basis = RationalPolynomial([1])
    for k, c in enumerate(coef):
        poly = poly + basis * c
        basis = basis * RationalPolynomial([-xs[k], 1])
    return poly
