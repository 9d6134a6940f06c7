"""
Generation and counting of avoiders, and exact fitting of the eventual
counting polynomial.

Avoiders of length n are produced from avoiders of length n-1 by inserting
the new maximum into each gap. Deleting the maximum of an avoider leaves an
avoider, so every length-n avoider has exactly one parent and the scheme is
complete without duplicates. A freshly inserted maximum can only create an
occurrence that uses it, so each candidate is tested with pinned searches.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .classifier import as_basis
from .errors import BudgetExceeded, InvalidInput
from .perms import EMPTY, Perm, PinnedMatcher
from .series import RationalPolynomial, lagrange_through

DEFAULT_MAX_NODES = 10**7


class _Extender:
    def __init__(self, basis, max_nodes: Optional[int]):
        self.basis = as_basis(basis)
        self.matchers = [PinnedMatcher(b) for b in self.basis]
        self.has_empty = any(len(b) == 0 for b in self.basis)
        self.max_nodes = max_nodes
        self.nodes = 0

    def children(self, parent: Sequence[int]) -> list[Perm]:
        n = len(parent) + 1
        out = []
        self.nodes += n
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(
                f"candidate budget of {self.max_nodes} exceeded at length {n}", self.nodes
            )
        for g in range(n):
            child = parent[:g] + (n,) + parent[g:]
            if not any(m.occurs_at(child, g) for m in self.matchers):
                out.append(Perm._trusted(child))
        return out

    def levels(self, max_n: int, keep: Optional[int] = None):
        """Yield (n, avoiders of length n); with ``keep`` only that many parents are extended."""
        level = [] if self.has_empty else [EMPTY]
        yield 0, level
        for n in range(1, max_n + 1):
            parents = level if keep is None else level[:keep]
            nxt = []
            for p in parents:
                nxt.extend(self.children(tuple(p)))
            level = nxt
            yield n, level


def generate_avoiders(basis, n: int, max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> list[Perm]:
    """Length-n members of Av(basis) in lexicographic order."""
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    ext = _Extender(basis, max_nodes)
    level = []
    for _, level in ext.levels(n):
        pass
    return sorted(level)


class CountSequence(tuple):
    """c_0, c_1, ..., c_N as exact integers."""

    __slots__ = ()

    @property
    def max_n(self) -> int:
        return len(self) - 1


def count_avoiders(basis, max_n: int, max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> CountSequence:
    if max_n < 0:
        raise InvalidInput("max_n must be nonnegative")
    ext = _Extender(basis, max_nodes)
    return CountSequence(len(level) for _, level in ext.levels(max_n))


def avoider_lower_bounds(basis, max_n: int, keep: int = 5000,
                         max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> CountSequence:
    """
    Lower bounds on c_0..c_max_n obtained by extending at most ``keep``
    parents per level. Children of distinct parents are distinct avoiders,
    so each reported value never exceeds the true count; values are exact
    while no level has been truncated.
    """
    ext = _Extender(basis, max_nodes)
    return CountSequence(len(level) for _, level in ext.levels(max_n, keep=keep))


# ---------------------------------------------------------------------------
# Eventual polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EventualPolynomial:
    poly: RationalPolynomial
    threshold: int
    degree: int
    max_n: int

    def to_json(self) -> dict:
        d = self.degree
        return {
            "degree": d,
            "coefficients": [str(self.poly[k]) for k in range(d + 1)],
            "threshold": self.threshold,
        }


@dataclass(frozen=True)
class InsufficientData:
    reason: str

    def to_json(self) -> dict:
        return {"insufficient_data": self.reason}


def finite_differences(values: Sequence[int], order: int) -> list[int]:
    out = list(values)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out


def fit_eventual_polynomial(seq: Sequence[int]):
    """
    Least degree d, then least threshold n0, such that the degree-d
    interpolant through the last d+1 terms reproduces every term from n0 on.
    At least d+3 terms must agree (two beyond those that define the
    interpolant); otherwise the result is :class:`InsufficientData`.
    """
    counts = [int(c) for c in seq]
    N = len(counts) - 1
    for d in range(0, N - 1):
        if N + 1 < d + 3:
            break
        tail = [(n, counts[n]) for n in range(N - d, N + 1)]
        poly = lagrange_through(tail)
        n0 = N - d
        while n0 > 0 and poly(n0 - 1) == counts[n0 - 1]:
            n0 -= 1
        if N - n0 + 1 >= d + 3:
            return EventualPolynomial(poly=poly, threshold=n0, degree=d, max_n=N)
    return InsufficientData(f"no polynomial stabilises within n <= {N}")


def fit_while_counting(basis, max_n: int, max_nodes: Optional[int] = DEFAULT_MAX_NODES):
    """
    Count Av(basis) one length at a time and stop at the first N <= max_n at
    which :func:`fit_eventual_polynomial` succeeds. Returns (fit, counts);
    the fit is :class:`InsufficientData` if no N up to max_n works.
    """
    if max_n < 0:
        raise InvalidInput("max_n must be nonnegative")
    counts: list[int] = []
    fit = InsufficientData("no terms")
    for _, level in _Extender(basis, max_nodes).levels(max_n):
        counts.append(len(level))
        fit = fit_eventual_polynomial(counts)
        if isinstance(fit, EventualPolynomial):
            break
    return fit, CountSequence(counts)


def fibonacci(k: int) -> int:
    """F(0) = 0, F(1) = F(2) = 1."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class GrowthProbe:
    kind: str  # "poly_stabilized", "fibonacci_dominant" or "inconclusive"
    degree: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.kind}({self.degree})" if self.degree is not None else self.kind


def fibonacci_dominated(seq: Sequence[int], lo: int = 5) -> bool:
    """c_n >= F(n-1) for lo <= n <= N."""
    return all(seq[n] >= fibonacci(n - 1) for n in range(lo, len(seq)))


def empirical_growth_probe(seq: Sequence[int]) -> GrowthProbe:
    if len(seq) - 1 < 10:
        return GrowthProbe("inconclusive")
    fit = fit_eventual_polynomial(seq)
    if isinstance(fit, EventualPolynomial):
        return GrowthProbe("poly_stabilized", fit.degree)
    if fibonacci_dominated(seq):
        return GrowthProbe("fibonacci_dominant")
    return GrowthProbe("inconclusive")
