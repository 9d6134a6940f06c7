"""
Degree of Av(12...r, beta_pq) through irreducible permutations.

Every member of the class contracts to a unique irreducible member, so the
class is the union of expansions of finitely many irreducibles. The degree
of the counting polynomial is one less than the largest set of positions
of an irreducible that can simultaneously be blown up into arbitrarily
long decreasing runs of consecutive values (an expansible set).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetExceeded, Discrepancy, InvalidInput
from .perms import EMPTY, Perm, PinnedMatcher, increasing, involves, is_irreducible

DEFAULT_MAX_NODES = 10**7


@dataclass(frozen=True)
class BetaShape:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise InvalidInput("p and q must be nonnegative")
        if self.p + self.q < 1:
            raise InvalidInput("need p + q >= 1 so that beta has length at least 3")

    @property
    def s(self) -> int:
        return self.p + self.q + 2

    @property
    def both_positive(self) -> bool:
        return self.p > 0 and self.q > 0


def beta_perm(shape: BetaShape) -> Perm:
    """lambda (q+1)(q+2) mu with lambda = s..(q+3) and mu = q..1, both decreasing."""
    p, q = shape.p, shape.q
    lam = range(p + q + 2, q + 2, -1)
    mu = range(q, 0, -1)
    return Perm._trusted((*lam, q + 1, q + 2, *mu))


def class_basis(r: int, shape: BetaShape) -> tuple[Perm, Perm]:
    if r < 1:
        raise InvalidInput("r must be positive")
    return increasing(r), beta_perm(shape)


def in_class(p: Sequence[int], r: int, shape: BetaShape) -> bool:
    alpha, beta = class_basis(r, shape)
    return not involves(alpha, p) and not involves(beta, p)


def max_irreducible_length(r: int, shape: BetaShape) -> int:
    if shape.both_positive:
        return (r - 1) ** 2 * (shape.s - 2) - (r - 1)
    return (r - 1) ** 2 * (shape.s - 2)


def max_descent_bound(r: int, shape: BetaShape) -> int:
    if shape.both_positive:
        return (r - 1) * (shape.s - 2) - 1
    return (r - 1) * (shape.s - 2)


def degree_upper_bound(r: int, shape: BetaShape) -> int:
    if shape.both_positive:
        return (r - 1) ** 2 * (shape.s - 2) - r
    return (r - 1) ** 2 * (shape.s - 2) - 1


def degree_lower_bound(r: int, shape: BetaShape) -> int:
    return (r - 1) * (shape.s - 2) - 1


# ---------------------------------------------------------------------------
# Expansion
# ---------------------------------------------------------------------------

def expand(host: Sequence[int], run_lengths: Sequence[int]) -> Perm:
    """Replace position i of ``host`` by a decreasing run of run_lengths[i] consecutive values."""
    if len(run_lengths) != len(host):
        raise InvalidInput("need one run length per host position")
    if any(k < 1 for k in run_lengths):
        raise InvalidInput("run lengths must be positive")
    base = {}
    acc = 1
    for i in sorted(range(len(host)), key=lambda i: host[i]):
        base[i] = acc
        acc += run_lengths[i]
    out = []
    for i in range(len(host)):
        out.extend(range(base[i] + run_lengths[i] - 1, base[i] - 1, -1))
    return Perm._trusted(out)


def expand_positions(host: Sequence[int], positions, length: int) -> Perm:
    chosen = set(positions)
    return expand(host, [length if i in chosen else 1 for i in range(len(host))])


# ---------------------------------------------------------------------------
# Irreducibles
# ---------------------------------------------------------------------------

class _IrreducibleGenerator:
    """
    Irreducible members by length. Deleting the maximum of an irreducible
    and contracting removes at most one more point, so every irreducible of
    length n comes from one of length n-1 (insert the maximum anywhere) or
    n-2 (split one point into a pair v+1, v and put the maximum between).
    """

    def __init__(self, r: int, shape: BetaShape, max_nodes: Optional[int]):
        self.basis = class_basis(r, shape)
        self.matchers = [PinnedMatcher(b) for b in self.basis]
        self.max_nodes = max_nodes
        self.nodes = 0

    def _tick(self, k: int, n: int) -> None:
        self.nodes += k
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"candidate budget of {self.max_nodes} exceeded at length {n}",
                                 self.nodes)

    def _accept(self, child: tuple, g: int) -> bool:
        return is_irreducible(child) and not any(m.occurs_at(child, g) for m in self.matchers)

    def grow(self, prev1: list, prev2: list, n: int) -> list:
        out = []
        for parent in prev1:
            self._tick(n, n)
            for g in range(n):
                child = parent[:g] + (n,) + parent[g:]
                if self._accept(child, g):
                    out.append(Perm._trusted(child))
        for parent in prev2:
            self._tick(n - 2, n)
            for j, v in enumerate(parent):
                bumped = tuple(w + 1 if w > v else w for w in parent)
                split = bumped[:j] + (v + 1, v) + bumped[j + 1:]
                # Splitting a point can create occurrences away from the new maximum.
                if any(involves(b, split) for b in self.basis):
                    continue
                child = split[:j + 1] + (n,) + split[j + 1:]
                if self._accept(child, j + 1):
                    out.append(Perm._trusted(child))
        return out


def irreducible_levels(r: int, shape: BetaShape, max_nodes: Optional[int] = DEFAULT_MAX_NODES,
                       stop_after_empty: int = 2, through: int = 0) -> list[list[Perm]]:
    """
    Irreducible members grouped by length, generated until
    ``stop_after_empty`` consecutive lengths are empty and at least through
    length ``through``. Two empty lengths in a row certify that no longer
    irreducible exists. Trailing empty lengths are dropped from the result.
    """
    if r < 1:
        raise InvalidInput("r must be positive")
    gen = _IrreducibleGenerator(r, shape, max_nodes)
    levels = [[EMPTY] if r >= 1 else []]
    one = Perm._trusted((1,))
    levels.append([one] if r >= 2 else [])
    n = 1
    empty_run = 0 if levels[1] else 1
    while empty_run < stop_after_empty or n < through:
        n += 1
        level = gen.grow(levels[n - 1], levels[n - 2], n)
        levels.append(sorted(level))
        empty_run = 0 if level else empty_run + 1
    while levels and not levels[-1]:
        levels.pop()
    return levels


def irreducibles_of(r: int, shape: BetaShape, max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> list[Perm]:
    """
    All irreducible members of Av(12...r, beta_pq), shortest first, the empty
    permutation included. Raises ``Discrepancy`` if one is longer than the
    theoretical maximum.
    """
    if r < 2:
        raise InvalidInput("r must be at least 2")
    levels = irreducible_levels(r, shape, max_nodes)
    bound = max_irreducible_length(r, shape)
    if len(levels) - 1 > bound:
        raise Discrepancy(f"irreducible of length {len(levels) - 1} exceeds the bound {bound}")
    return [p for level in levels for p in level]


# ---------------------------------------------------------------------------
# Expansible sets
# ---------------------------------------------------------------------------

def _longest_decreasing(values: Sequence[int]) -> int:
    best = []
    for v in values:
        # Longest decreasing = longest increasing of negatives.
        lo, hi = 0, len(best)
        while lo < hi:
            mid = (lo + hi) // 2
            if best[mid] < -v:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(best):
            best.append(-v)
        else:
            best[lo] = -v
    return len(best)


@dataclass(frozen=True)
class ExpansionConstraints:
    """
    Positions that can never be expanded, and pairs that cannot be
    expanded together. A set avoiding both is expansible.
    """

    excluded: frozenset
    conflicts: frozenset  # pairs (i, j) with i < j

    def allows(self, positions) -> bool:
        chosen = set(positions)
        if chosen & self.excluded:
            return False
        return not any(i in chosen and j in chosen for i, j in self.conflicts)


def expansion_constraints(host: Sequence[int], shape: BetaShape) -> ExpansionConstraints:
    """
    Work through every ascent b < c (b left of c) of the host. The points
    up-left of it (left of b, above c) can supply the decreasing prefix of
    beta, the points down-right (right of c, below b) the decreasing suffix.
    A side is already supplied if it holds a decreasing subsequence of the
    required length, or once any of its points is expanded. Expanded points
    must never make both sides supplied.
    """
    n = len(host)
    p, q = shape.p, shape.q
    excluded, conflicts = set(), set()
    for i in range(n):
        b = host[i]
        for j in range(i + 1, n):
            c = host[j]
            if c < b:
                continue
            up = [k for k in range(i) if host[k] > c]
            down = [k for k in range(j + 1, n) if host[k] < b]
            top_full = _longest_decreasing([host[k] for k in up]) >= p
            bottom_full = _longest_decreasing([host[k] for k in down]) >= q
            if top_full and bottom_full:
                raise InvalidInput(f"host {Perm._trusted(host)} contains {beta_perm(shape)}")
            if top_full:
                excluded.update(down)
            elif bottom_full:
                excluded.update(up)
            else:
                conflicts.update((d, a) for d in up for a in down)
    conflicts = {(d, a) for d, a in conflicts if d not in excluded and a not in excluded}
    return ExpansionConstraints(frozenset(excluded), frozenset(conflicts))


def _max_independent(nodes: list[int], edges: set[tuple[int, int]]) -> list[int]:
    """Exact maximum independent set by branch and bound over bitmasks."""
    index = {v: k for k, v in enumerate(nodes)}
    adj = [0] * len(nodes)
    for a, b in edges:
        ia, ib = index[a], index[b]
        adj[ia] |= 1 << ib
        adj[ib] |= 1 << ia
    best = [0, 0]  # size, mask

    def search(cand: int, chosen: int, size: int) -> None:
        if size + bin(cand).count("1") <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        # Branch on the candidate of highest degree within the candidates.
        v, vdeg = -1, -1
        c = cand
        while c:
            low = c & -c
            k = low.bit_length() - 1
            d = bin(adj[k] & cand).count("1")
            if d > vdeg:
                v, vdeg = k, d
            c ^= low
        if vdeg == 0:
            size2 = size + bin(cand).count("1")
            if size2 > best[0]:
                best[0], best[1] = size2, chosen | cand
            return
        bit = 1 << v
        search(cand & ~bit & ~adj[v], chosen | bit, size + 1)
        search(cand & ~bit, chosen, size)

    search((1 << len(nodes)) - 1, 0, 0)
    return [nodes[k] for k in range(len(nodes)) if best[1] >> k & 1]


@dataclass(frozen=True)
class ExpansibleSet:
    host: Perm
    positions: tuple  # 0-based

    @property
    def size(self) -> int:
        return len(self.positions)


def max_expansible(host: Sequence[int], r: int, shape: BetaShape) -> ExpansibleSet:
    """A maximum expansible set of an irreducible member of the class."""
    host = Perm(host)
    if not is_irreducible(host):
        raise InvalidInput(f"{host} is not irreducible")
    if not in_class(host, r, shape):
        raise InvalidInput(f"{host} is not in Av({increasing(r)}, {beta_perm(shape)})")
    cons = expansion_constraints(host, shape)
    free = [i for i in range(len(host)) if i not in cons.excluded]
    chosen = _max_independent(free, set(cons.conflicts))
    return ExpansibleSet(host, tuple(sorted(chosen)))


def pairwise_4231_conflicts(host: Sequence[int]) -> set[tuple[int, int]]:
    """Pairs (d, a) that are the outer points of some 4231 occurrence."""
    n = len(host)
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            if host[j] < host[i]:
                continue
            for d in range(i):
                if host[d] <= host[j]:
                    continue
                for a in range(j + 1, n):
                    if host[a] < host[i]:
                        out.add((d, a))
    return out


def is_expansible_by_expansion(host: Sequence[int], positions, r: int, shape: BetaShape,
                               length: Optional[int] = None) -> bool:
    """
    Expand the chosen positions to runs of ``length`` and test membership.
    One run never feeds more than max(p, q) points into an occurrence of
    beta, so the default length max(p, q, 1) already decides expansibility.
    """
    if length is None:
        length = max(shape.p, shape.q, 1)
    return in_class(expand_positions(host, positions, length), r, shape)


# ---------------------------------------------------------------------------
# Degree
# ---------------------------------------------------------------------------

@dataclass
class DegreeReport:
    r: int
    p: int
    q: int
    lower_bound: int
    upper_bound: int
    exact_degree: Optional[int] = None
    witness: Optional[ExpansibleSet] = None
    irreducible_count: Optional[int] = None
    max_irreducible_length: Optional[int] = None
    note: str = ""

    def within_bounds(self) -> Optional[bool]:
        if self.exact_degree is None:
            return None
        return self.lower_bound <= self.exact_degree <= self.upper_bound

    def to_json(self) -> dict:
        return {
            "r": self.r, "p": self.p, "q": self.q,
            "exact_degree": self.exact_degree,
            "lower": self.lower_bound,
            "upper": self.upper_bound,
            "witness_host": None if self.witness is None else str(self.witness.host),
            "witness_positions": None if self.witness is None else list(self.witness.positions),
            "irreducible_count": self.irreducible_count,
            "max_irreducible_length": self.max_irreducible_length,
        }


def degree_of(r: int, shape: BetaShape, max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> DegreeReport:
    """
    Exact degree as (largest expansible set over all irreducibles) - 1.
    When the irreducible search runs out of budget the bounds are still
    reported and ``exact_degree`` stays None.
    """
    if r < 2:
        raise InvalidInput("r must be at least 2")
    report = DegreeReport(r, shape.p, shape.q, degree_lower_bound(r, shape), degree_upper_bound(r, shape))
    try:
        irreducibles = irreducibles_of(r, shape, max_nodes)
    except BudgetExceeded as exc:
        report.note = str(exc)
        return report
    report.irreducible_count = len(irreducibles)
    report.max_irreducible_length = max(len(p) for p in irreducibles)
    best = None
    # Longest hosts first: a host can never beat the current best if it is not longer.
    for host in sorted(irreducibles, key=lambda p: (-len(p), p)):
        if best is not None and len(host) < best.size:
            break
        found = max_expansible(host, r, shape)
        if best is None or found.size > best.size or (found.size == best.size and host < best.host):
            best = found
    report.witness = best
    report.exact_degree = best.size - 1
    return report


# ---------------------------------------------------------------------------
# Lower-bound witness
# ---------------------------------------------------------------------------

def _layered_witness(r: int, shape: BetaShape) -> tuple[Perm, list[list[int]]]:
    """
    r-1 decreasing layers of 2(p+q)-1 points each, running from bottom-left
    to top-right. The top x points of each layer sit, by position, in the
    gaps between the bottom x+1 points of the layer before; its bottom x
    points sit, by value, in the gaps between the top x+1 points of that
    layer (x = p+q-1). Returns the permutation and, per layer, the positions
    of its points from top to bottom.
    """
    k = r - 1
    x = shape.p + shape.q - 1
    width = 2 * x + 1
    pts = [[(layer, i) for i in range(width)] for layer in range(k)]
    by_position = list(pts[0][:x]) if k else []
    for layer in range(k):
        by_position.append(pts[layer][x])
        for j in range(x):
            if layer + 1 < k:
                by_position.append(pts[layer + 1][j])
            by_position.append(pts[layer][x + 1 + j])
    by_value_desc = list(pts[k - 1][:x]) if k else []
    for layer in range(k - 1, -1, -1):
        by_value_desc.append(pts[layer][x])
        for j in range(x):
            if layer >= 1:
                by_value_desc.append(pts[layer - 1][j])
            by_value_desc.append(pts[layer][x + 1 + j])
    total = k * width
    value = {pt: total - rank for rank, pt in enumerate(by_value_desc)}
    position = {pt: pos for pos, pt in enumerate(by_position)}
    seq = Perm._trusted(value[pt] for pt in by_position)
    layers = [[position[pt] for pt in pts[layer]] for layer in range(k)]
    return seq, layers


@dataclass(frozen=True)
class WitnessReport:
    permutation: Perm
    expansible: ExpansibleSet
    constructed: bool  # False when found by exhaustive fallback


def witness_irreducible(r: int, shape: BetaShape, max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> WitnessReport:
    """
    An irreducible member of length (r-1)(2s-5) with an expansible set of
    size (r-1)(s-2). Built from interlocking layers and verified; if the
    construction fails verification, every irreducible of that length is
    searched. Raises ``Discrepancy`` when no such permutation exists.
    """
    if r < 2:
        raise InvalidInput("r must be at least 2")
    length = (r - 1) * (2 * shape.s - 5)
    want = (r - 1) * (shape.s - 2)
    seq, _ = _layered_witness(r, shape)
    if len(seq) == length and is_irreducible(seq) and in_class(seq, r, shape):
        # Any subset of an expansible set is expansible, so keep the first `want`.
        positions = max_expansible(seq, r, shape).positions[:want]
        if len(positions) == want and is_expansible_by_expansion(seq, positions, r, shape):
            return WitnessReport(seq, ExpansibleSet(seq, positions), True)
    levels = irreducible_levels(r, shape, max_nodes)
    candidates = levels[length] if length < len(levels) else []
    for host in candidates:
        found = max_expansible(host, r, shape)
        if found.size >= want:
            return WitnessReport(host, found, False)
    raise Discrepancy(
        f"no irreducible of length {length} in Av({increasing(r)}, {beta_perm(shape)}) "
        f"carries an expansible set of size {want}"
    )
