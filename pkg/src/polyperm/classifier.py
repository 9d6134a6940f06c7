"""
Polynomial-growth decision for a finite basis, plus explicit matchers for
the two- and three-element characterizations.

A class Av(B) grows polynomially exactly when B meets each of the ten
classes in :class:`~polyperm.structural.TenClass`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .errors import InvalidInput
from .perms import ALL_SYMMETRIES, Perm, Symmetry, all_perms, perm
from .structural import (
    TenClass,
    in_ten_class,
    in_w_class,
    reverse_layer_decomposition,
)


def _basis_key(p: Perm):
    return (len(p), tuple(p))


class Basis(tuple):
    """Nonempty, deduplicated, sorted (by length then lexicographically) set of permutations."""

    __slots__ = ()

    def __new__(cls, members: Iterable = ()) -> "Basis":
        items = {perm(m) for m in members}
        if not items:
            raise InvalidInput("basis must be nonempty")
        return tuple.__new__(cls, sorted(items, key=_basis_key))

    @classmethod
    def parse(cls, text: str) -> "Basis":
        """Space-separated permutation tokens, e.g. ``"132 321"``."""
        tokens = text.split() if isinstance(text, str) else []
        return cls(Perm.parse(tok) for tok in tokens)

    def __str__(self) -> str:
        return " ".join(str(p) for p in self)

    def sort_key(self):
        return tuple(_basis_key(p) for p in self)


def as_basis(members) -> Basis:
    return members if isinstance(members, Basis) else Basis(members)


@dataclass(frozen=True)
class GrowthVerdict:
    polynomial: bool
    uncovered: frozenset = field(default_factory=frozenset)

    def uncovered_names(self) -> list[str]:
        order = list(TenClass)
        return [c.value for c in sorted(self.uncovered, key=order.index)]


def classify(basis) -> GrowthVerdict:
    basis = as_basis(basis)
    uncovered = frozenset(c for c in TenClass if not any(in_ten_class(b, c) for b in basis))
    return GrowthVerdict(polynomial=not uncovered, uncovered=uncovered)


def canonical_basis(basis) -> Basis:
    """Least image of the basis under the eight symmetries."""
    basis = as_basis(basis)
    images = (Basis(s(b) for b in basis) for s in ALL_SYMMETRIES)
    return min(images, key=Basis.sort_key)


# ---------------------------------------------------------------------------
# Shape predicates used by the case matchers
# ---------------------------------------------------------------------------

def is_increasing(p: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(p, p[1:]))


def is_decreasing(p: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(p, p[1:]))


def is_almost_decreasing(p: Sequence[int]) -> bool:
    """In L2 reversed with exactly one layer of size 2."""
    layers = reverse_layer_decomposition(p)
    return layers is not None and layers.count(2) == 1


def has_two_reverse_doubletons(p: Sequence[int]) -> bool:
    """In L2 reversed and involving 3412 (at least two doubleton layers)."""
    layers = reverse_layer_decomposition(p)
    return layers is not None and layers.count(2) >= 2


def is_inc_then_dec(p: Sequence[int]) -> bool:
    """p = 12...k n(n-1)...(k+1) for some 0 <= k <= n."""
    n = len(p)
    return any(tuple(p) == tuple(range(1, k + 1)) + tuple(range(n, k, -1)) for k in range(n + 1))


def is_middle_doubleton(p: Sequence[int]) -> bool:
    """p = m(m-1)...(j+2) j(j+1) (j-1)...1 with the doubleton at neither end (2 <= j <= m-2)."""
    m = len(p)
    return any(
        tuple(p) == tuple(range(m, j + 1, -1)) + (j, j + 1) + tuple(range(j - 1, 0, -1))
        for j in range(2, m - 1)
    )


def is_dec_then_12(p: Sequence[int]) -> bool:
    """p = m(m-1)...3 1 2."""
    m = len(p)
    return m >= 2 and tuple(p) == tuple(range(m, 2, -1)) + (1, 2)


def is_21_then_inc(p: Sequence[int]) -> bool:
    """p = 2 1 3 4 ... s."""
    return len(p) >= 2 and tuple(p) == (2, 1) + tuple(range(3, len(p) + 1))


def is_1_then_dec(p: Sequence[int]) -> bool:
    """p = 1 n (n-1) ... 2."""
    return len(p) >= 1 and tuple(p) == (1,) + tuple(range(len(p), 1, -1))


def _in_w_pm(p) -> bool:
    return in_w_class(p, (1, -1))


def _in_mm_both(p) -> bool:
    return in_ten_class(p, TenClass.W_MM) and in_ten_class(p, TenClass.W_MM_INV)


# ---------------------------------------------------------------------------
# Matchers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseLabel:
    """
    Which structural case a basis falls under. ``roles`` lists the original
    basis members in the order (alpha, beta[, gamma]); applying ``symmetry``
    to each gives permutations literally of the case's stated form.
    """

    theorem: int
    path: str
    symmetry: Symmetry
    roles: tuple

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "path": self.path,
            "symmetry": self.symmetry.name,
            "roles": [str(p) for p in self.roles],
        }


def _two_cases(a, b) -> list[str]:
    cases = []
    if is_increasing(a) and is_decreasing(b):
        cases.append("1")
    if is_increasing(a) and is_almost_decreasing(b):
        cases.append("2")
    return cases


def _check_members(basis: Basis, size: int) -> None:
    if len(basis) != size:
        raise InvalidInput(f"expected a basis of {size} permutations, got {len(basis)}")
    if any(len(p) < 3 for p in basis):
        raise InvalidInput("every basis member must have length at least 3")


def match_two_basis(basis, all_matches: bool = False):
    """
    Case label for a polynomial two-element basis, or None.

    Searches symmetries in the fixed order of ``ALL_SYMMETRIES``, then the
    two role assignments, then cases 1, 2. With ``all_matches`` every hit is
    returned as a list.
    """
    basis = as_basis(basis)
    _check_members(basis, 2)
    hits = []
    for s in ALL_SYMMETRIES:
        for order in permutations(range(2)):
            roles = tuple(basis[i] for i in order)
            a, b = (s(p) for p in roles)
            for path in _two_cases(a, b):
                label = CaseLabel(2, path, s, roles)
                if not all_matches:
                    return label
                hits.append(label)
    return hits if all_matches else None


def _three_cases(a, b, g) -> list[str]:
    cases = []
    if tuple(a) == (2, 1, 3):
        if has_two_reverse_doubletons(b) and is_inc_then_dec(g):
            cases.append("1a")
        if is_middle_doubleton(b) and is_inc_then_dec(g):
            cases.append("1b")
        if is_dec_then_12(b) and _in_w_pm(g):
            cases.append("1c")
    if is_increasing(a):
        if has_two_reverse_doubletons(b) and _in_mm_both(g):
            cases.append("2a")
        if match_two_basis(Basis((a, b))) is not None:
            cases.append("2b")
    if is_21_then_inc(a):
        if has_two_reverse_doubletons(b) and is_1_then_dec(g):
            cases.append("3a")
        if is_middle_doubleton(b) and is_inc_then_dec(g):
            cases.append("3b")
        if is_dec_then_12(b) and _in_w_pm(g):
            cases.append("3c")
    return cases


def match_three_basis(basis, all_matches: bool = False):
    """
    Case label for a polynomial three-element basis, or None.

    Search order: symmetries as in ``ALL_SYMMETRIES``, role assignments in
    lexicographic order, cases 1a through 3c.
    """
    basis = as_basis(basis)
    _check_members(basis, 3)
    hits = []
    for s in ALL_SYMMETRIES:
        for order in permutations(range(3)):
            roles = tuple(basis[i] for i in order)
            a, b, g = (s(p) for p in roles)
            for path in _three_cases(a, b, g):
                label = CaseLabel(3, path, s, roles)
                if not all_matches:
                    return label
                hits.append(label)
    return hits if all_matches else None


def match_basis(basis) -> Optional[CaseLabel]:
    """Dispatch to the two- or three-element matcher when it applies."""
    basis = as_basis(basis)
    if any(len(p) < 3 for p in basis):
        return None
    if len(basis) == 2:
        return match_two_basis(basis)
    if len(basis) == 3:
        return match_three_basis(basis)
    return None


def verdict_json(basis) -> dict:
    basis = as_basis(basis)
    verdict = classify(basis)
    label = match_basis(basis)
    return {
        "basis": [str(p) for p in basis],
        "polynomial": verdict.polynomial,
        "uncovered": verdict.uncovered_names(),
        "case": None if label is None else {"theorem": label.theorem, "path": label.path},
    }


def small_basis_sweep() -> list[Basis]:
    """
    Canonical representatives of every two- and three-element basis drawn
    from permutations of length 3 and 4, in sorted order.
    """
    pool = [*all_perms(3), *all_perms(4)]
    seen = {canonical_basis(combo) for k in (2, 3) for combo in combinations(pool, k)}
    return sorted(seen, key=lambda b: (len(b), b.sort_key()))
