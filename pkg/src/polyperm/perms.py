"""
Permutations in one-line notation, pattern involvement, the eight
symmetries of the square, and contraction of decreasing consecutive runs.

A permutation of length n is a tuple holding a rearrangement of 1..n.
The empty permutation is a legitimate value.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput


class Perm(tuple):
    """Immutable permutation of 1..n in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "Perm":
        values = tuple(values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidInput(f"not a permutation of 1..{len(values)}: {values}")
        return tuple.__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Perm":
        # Skips validation; callers guarantee a rearrangement of 1..n.
        return tuple.__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """
        Parse the text format: a digit string when every value is at most 9
        (``"25134"``), otherwise values joined by dots (``"1.2.11.3"``).
        """
        if not isinstance(text, str) or not text:
            raise InvalidInput(f"cannot parse permutation from {text!r}")
        if "." in text:
            parts = text.split(".")
            if not all(part.isdigit() and part[0] != "0" for part in parts):
                raise InvalidInput(f"malformed dotted permutation {text!r}")
            values = [int(part) for part in parts]
            if max(values) < 10:
                raise InvalidInput(f"dotted form is reserved for values >= 10: {text!r}")
        else:
            if not text.isdigit() or "0" in text:
                raise InvalidInput(f"malformed permutation {text!r}")
            values = [int(ch) for ch in text]
        return cls(values)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(str(v) for v in self)
        return ".".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"

    def inverse(self) -> "Perm":
        out = [0] * len(self)
        for i, v in enumerate(self):
            out[v - 1] = i + 1
        return Perm._trusted(out)

    def reverse(self) -> "Perm":
        return Perm._trusted(self[::-1])

    def complement(self) -> "Perm":
        n1 = len(self) + 1
        return Perm._trusted(n1 - v for v in self)


def perm(text_or_values) -> Perm:
    """Convenience constructor accepting either text or a sequence of ints."""
    if isinstance(text_or_values, Perm):
        return text_or_values
    if isinstance(text_or_values, str):
        return Perm.parse(text_or_values)
    return Perm(text_or_values)


EMPTY = Perm._trusted(())


def pattern_of(source: Sequence) -> Perm:
    """Return the permutation order-isomorphic to a sequence of distinct keys."""
    keys = list(source)
    order = sorted(range(len(keys)), key=keys.__getitem__)
    out = [0] * len(keys)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    for a, b in zip(order, order[1:]):
        if not keys[a] < keys[b]:
            raise InvalidInput(f"keys are not pairwise distinct: {keys}")
    return Perm._trusted(out)


def increasing(n: int) -> Perm:
    return Perm._trusted(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return Perm._trusted(range(n, 0, -1))


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of length n in lexicographic order."""
    from itertools import permutations

    for values in permutations(range(1, n + 1)):
        yield Perm._trusted(values)


# ---------------------------------------------------------------------------
# Involvement
# ---------------------------------------------------------------------------

def _neighbour_constraints(pattern: Sequence[int]) -> list[tuple[int, int]]:
    # For each index t, the earlier indices holding the closest smaller and
    # closest larger pattern values (-1 when absent). Matching host values
    # only need to respect these two bounds to stay order-isomorphic.
    out = []
    for t, v in enumerate(pattern):
        lo = hi = -1
        for i in range(t):
            w = pattern[i]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = i
            elif w > v and (hi < 0 or w < pattern[hi]):
                hi = i
        out.append((lo, hi))
    return out


def _search(pattern, host, cons, pin_index=-1, pin_pos=-1) -> bool:
    k, n = len(pattern), len(host)
    chosen = [0] * k

    def place(t: int, start: int) -> bool:
        if t == k:
            return True
        lo, hi = cons[t]
        low = host[chosen[lo]] if lo >= 0 else 0
        high = host[chosen[hi]] if hi >= 0 else n + 1
        if t == pin_index:
            if pin_pos < start:
                return False
            v = host[pin_pos]
            if low < v < high:
                chosen[t] = pin_pos
                return place(t + 1, pin_pos + 1)
            return False
        stop = n - (k - t) + 1
        if t < pin_index:
            stop = min(stop, pin_pos - (pin_index - t) + 1)
        for pos in range(start, stop):
            v = host[pos]
            if low < v < high:
                chosen[t] = pos
                if place(t + 1, pos + 1):
                    return True
        return False

    return place(0, 0)


def involves(pattern: Sequence[int], host: Sequence[int]) -> bool:
    """True iff some subsequence of ``host`` is order-isomorphic to ``pattern``."""
    if len(pattern) > len(host):
        return False
    if not pattern:
        return True
    return _search(pattern, host, _neighbour_constraints(pattern))


class PinnedMatcher:
    """
    Occurrence test for one pattern where the pattern's maximum must land on
    a given host position. Used when a new maximum has just been inserted:
    any new occurrence has to use it.
    """

    __slots__ = ("pattern", "cons", "max_index")

    def __init__(self, pattern: Sequence[int]):
        self.pattern = tuple(pattern)
        self.cons = _neighbour_constraints(self.pattern)
        self.max_index = self.pattern.index(len(self.pattern)) if self.pattern else -1

    def occurs_at(self, host: Sequence[int], pos: int) -> bool:
        k = len(self.pattern)
        if k == 0:
            return True
        j = self.max_index
        if j > pos or k - j > len(host) - pos:
            return False
        return _search(self.pattern, host, self.cons, j, pos)


def naive_involves(pattern: Sequence[int], host: Sequence[int]) -> bool:
    """Reference scan over all C(n, k) subsequences; used as a test oracle."""
    target = tuple(pattern)
    return any(pattern_of(sub) == target for sub in combinations(host, len(target)))


def avoids_basis(host: Sequence[int], basis: Iterable[Sequence[int]]) -> bool:
    basis = list(basis)
    if not basis:
        raise InvalidInput("basis must be nonempty")
    return not any(involves(b, host) for b in basis)


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Symmetry:
    """
    Element of the dihedral group of order 8 acting on permutations,
    applied as: inverse (if set), then reverse, then complement.
    """

    inverse: bool = False
    reverse: bool = False
    complement: bool = False

    @property
    def name(self) -> str:
        parts = [label for flag, label in
                 ((self.inverse, "inverse"), (self.reverse, "reverse"), (self.complement, "complement"))
                 if flag]
        return "+".join(parts) if parts else "identity"

    def __call__(self, p: Perm) -> Perm:
        if self.inverse:
            p = p.inverse()
        if self.reverse:
            p = p.reverse()
        if self.complement:
            p = p.complement()
        return p

    def inverted(self) -> "Symmetry":
        if not self.inverse:
            return self
        # inverse o reverse = complement o inverse, and symmetrically.
        return Symmetry(True, self.complement, self.reverse)

    def __str__(self) -> str:
        return self.name


IDENTITY = Symmetry()

ALL_SYMMETRIES: tuple[Symmetry, ...] = tuple(
    Symmetry(i, r, c) for i in (False, True) for r in (False, True) for c in (False, True)
)


def apply_symmetry(s: Symmetry, p: Perm) -> Perm:
    return s(perm(p))


# ---------------------------------------------------------------------------
# Contraction and expansion counts
# ---------------------------------------------------------------------------

def is_irreducible(p: Sequence[int]) -> bool:
    """No adjacent positions hold values v+1, v."""
    return all(a != b + 1 for a, b in zip(p, p[1:]))


def contract(p: Sequence[int]) -> Perm:
    """Collapse every segment v+1, v to a single point until irreducible."""
    cur = tuple(p)
    while True:
        kept = [v for i, v in enumerate(cur) if i == 0 or cur[i - 1] != v + 1]
        if len(kept) == len(cur):
            return Perm._trusted(cur)
        cur = tuple(pattern_of(kept))


def expansion_count(m: int, n: int) -> int:
    """Number of ways to expand an irreducible of length m to length n."""
    if m < 0 or n < 0 or m > n or (m == 0 and n > 0):
        raise InvalidInput(f"need 1 <= m <= n (or m = n = 0), got m={m}, n={n}")
    if n == 0:
        return 1
    return comb(n - 1, m - 1)
