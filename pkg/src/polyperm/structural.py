"""
Membership tests for the structural classes that decide polynomial growth:
W-classes of monotone segmentations, the layered classes L2 and L2 reversed,
and classes obtained by inflating a signed skeleton ("pegged" patterns).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import InvalidInput
from .perms import Perm, perm


def parse_signs(text: str) -> tuple[int, ...]:
    """``"+-+"`` -> ``(1, -1, 1)``."""
    if not text or any(ch not in "+-" for ch in text):
        raise InvalidInput(f"sign sequence must be a nonempty string over '+-': {text!r}")
    return tuple(1 if ch == "+" else -1 for ch in text)


def format_signs(signs: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def _monotone(values: Sequence[int], sign: int) -> bool:
    if sign > 0:
        return all(a < b for a, b in zip(values, values[1:]))
    return all(a > b for a, b in zip(values, values[1:]))


def in_w_class(p: Sequence[int], eps: Sequence[int]) -> bool:
    """Can p be cut into len(eps) consecutive blocks, block i monotone per eps[i]?"""
    if not eps:
        raise InvalidInput("sign sequence must be nonempty")
    n = len(p)
    # reach[b]: the prefix of length b is covered by the blocks handled so far.
    reach = [b == 0 for b in range(n + 1)]
    for sign in eps:
        nxt = [False] * (n + 1)
        for a in range(n + 1):
            if not reach[a]:
                continue
            nxt[a] = True
            for b in range(a + 1, n + 1):
                if b - a >= 2 and not ((p[b - 2] < p[b - 1]) == (sign > 0)):
                    break
                nxt[b] = True
        reach = nxt
    return reach[n]


def layer_decomposition(p: Sequence[int]) -> Optional[tuple[int, ...]]:
    """
    Layer sizes when p is an increasing sequence of layers, each a singleton
    or a decreasing doubleton; None otherwise.
    """
    sizes = []
    i, low, n = 0, 1, len(p)
    while i < n:
        if p[i] == low:
            sizes.append(1)
            i += 1
            low += 1
        elif p[i] == low + 1 and i + 1 < n and p[i + 1] == low:
            sizes.append(2)
            i += 2
            low += 2
        else:
            return None
    return tuple(sizes)


def reverse_layer_decomposition(p: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Layer sizes of reverse(p), i.e. the L2-reversed witness read right to left."""
    return layer_decomposition(tuple(p)[::-1])


def in_l2(p: Sequence[int]) -> bool:
    return layer_decomposition(p) is not None


def in_l2_reverse(p: Sequence[int]) -> bool:
    return reverse_layer_decomposition(p) is not None


class TenClass(enum.Enum):
    """The ten minimal non-polynomial classes; a basis must meet every one."""

    W_PP = "W++"
    W_PM = "W+-"
    W_MP = "W-+"
    W_MM = "W--"
    W_PP_INV = "W++inv"
    W_PM_INV = "W+-inv"
    W_MP_INV = "W-+inv"
    W_MM_INV = "W--inv"
    L2 = "L2"
    L2R = "L2R"

    @classmethod
    def from_name(cls, name: str) -> "TenClass":
        try:
            return cls(name)
        except ValueError:
            raise InvalidInput(f"unknown class name {name!r}") from None


_W_SIGNS = {
    TenClass.W_PP: (1, 1), TenClass.W_PM: (1, -1),
    TenClass.W_MP: (-1, 1), TenClass.W_MM: (-1, -1),
    TenClass.W_PP_INV: (1, 1), TenClass.W_PM_INV: (1, -1),
    TenClass.W_MP_INV: (-1, 1), TenClass.W_MM_INV: (-1, -1),
}

_INVERTED = {TenClass.W_PP_INV, TenClass.W_PM_INV, TenClass.W_MP_INV, TenClass.W_MM_INV}


def in_ten_class(p: Sequence[int], cls: TenClass) -> bool:
    if cls is TenClass.L2:
        return in_l2(p)
    if cls is TenClass.L2R:
        return in_l2_reverse(p)
    if cls in _INVERTED:
        p = perm(p).inverse()
    return in_w_class(p, _W_SIGNS[cls])


def l2_members(n: int) -> list[Perm]:
    """All members of L2 of length n (compositions of n into parts 1 and 2)."""
    out = []

    def build(prefix: list[int], low: int) -> None:
        if low == n + 1:
            out.append(Perm._trusted(prefix))
            return
        build(prefix + [low], low + 1)
        if low + 1 <= n:
            build(prefix + [low + 1, low], low + 2)

    build([], 1)
    return sorted(out)


def l2_intersection_check(max_n: int) -> set[Perm]:
    """Nonempty permutations of length <= max_n lying in both L2 and its reverse."""
    if max_n < 1:
        raise InvalidInput("max_n must be at least 1")
    return {p for n in range(1, max_n + 1) for p in l2_members(n) if in_l2_reverse(p)}


# ---------------------------------------------------------------------------
# Pegged patterns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PeggedPattern:
    """A skeleton permutation with a sign per point; +1 inflates to an
    increasing run, -1 to a decreasing run of consecutive values."""

    skeleton: Perm
    signs: tuple[int, ...]

    def __post_init__(self):
        skel = perm(self.skeleton)
        signs = tuple(int(s) for s in self.signs)
        object.__setattr__(self, "skeleton", skel)
        object.__setattr__(self, "signs", signs)
        if len(skel) == 0 or len(signs) != len(skel) or any(s not in (1, -1) for s in signs):
            raise InvalidInput("need one sign (+1 or -1) per skeleton point, at least one point")
        for i in range(len(skel) - 1):
            a, b = skel[i], skel[i + 1]
            if b == a + 1 and signs[i] == signs[i + 1] == 1:
                raise InvalidInput(f"not reduced: {a},{b} both signed +1")
            if a == b + 1 and signs[i] == signs[i + 1] == -1:
                raise InvalidInput(f"not reduced: {a},{b} both signed -1")

    def __str__(self) -> str:
        return f"{self.skeleton}:{format_signs(self.signs)}"


def inflate(peg: PeggedPattern, lengths: Sequence[int]) -> Perm:
    """Replace each skeleton point by a monotone run of consecutive values."""
    m = len(peg.skeleton)
    if len(lengths) != m or any(k < 0 for k in lengths):
        raise InvalidInput(f"need {m} nonnegative run lengths, got {tuple(lengths)}")
    # Runs occupy value intervals stacked in skeleton-value order.
    base = [0] * (m + 1)
    by_value = sorted(range(m), key=lambda i: peg.skeleton[i])
    start = 1
    for i in by_value:
        base[i] = start
        start += lengths[i]
    out = []
    for i in range(m):
        lo, k = base[i], lengths[i]
        run = range(lo, lo + k) if peg.signs[i] > 0 else range(lo + k - 1, lo - 1, -1)
        out.extend(run)
    return Perm._trusted(out)


def compositions(n: int, parts: int):
    """Weak compositions of n into ``parts`` nonnegative parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for bars in combinations(range(n + parts - 1), parts - 1):
        prev, out = -1, []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(n + parts - 2 - prev)
        yield tuple(out)


def peg_class_members(peg: PeggedPattern, n: int) -> set[Perm]:
    return {inflate(peg, lengths) for lengths in compositions(n, len(peg.skeleton))}


def peg_class_count(peg: PeggedPattern, n: int) -> int:
    """Distinct length-n permutations obtained by inflating ``peg``."""
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    return len(peg_class_members(peg, n))
