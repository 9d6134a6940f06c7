from itertools import combinations, product
from math import comb

import pytest

from polyperm.errors import InvalidInput
from polyperm.perms import Perm, all_perms, contract, involves
from polyperm.structural import (
    PeggedPattern,
    TenClass,
    compositions,
    format_signs,
    in_l2,
    in_l2_reverse,
    in_ten_class,
    in_w_class,
    inflate,
    l2_intersection_check,
    l2_members,
    layer_decomposition,
    parse_signs,
    peg_class_count,
    peg_class_members,
)

P = Perm.parse


def brute_w(p, eps):
    """Try every cut of p into len(eps) possibly empty consecutive blocks."""
    n, k = len(p), len(eps)
    for cuts in combinations(range(n + k - 1), k - 1):
        bounds, prev = [], -1
        for c in cuts:
            bounds.append(c - prev - 1)
            prev = c
        bounds.append(n + k - 2 - prev)
        start, ok = 0, True
        for size, sign in zip(bounds, eps):
            block = p[start:start + size]
            start += size
            pairs = zip(block, block[1:])
            if not all((a < b) if sign > 0 else (a > b) for a, b in pairs):
                ok = False
                break
        if ok:
            return True
    return False


def brute_l2(p):
    """Exhaustive search over layer splittings; layers are 1 or a decreasing pair."""
    def rec(i, floor):
        if i == len(p):
            return True
        if p[i] == floor + 1 and rec(i + 1, floor + 1):
            return True
        return (i + 1 < len(p) and p[i] == floor + 2 and p[i + 1] == floor + 1
                and rec(i + 2, floor + 2))
    return rec(0, 0)


SMALL = [p for n in range(0, 7) for p in all_perms(n)]
SIGNS = [eps for k in (1, 2, 3) for eps in product((1, -1), repeat=k)]


class TestSigns:
    def test_round_trip(self):
        assert parse_signs("+-+") == (1, -1, 1)
        assert format_signs((1, -1, 1)) == "+-+"

    @pytest.mark.parametrize("bad", ["", "+x", "1-"])
    def test_rejects(self, bad):
        with pytest.raises(InvalidInput):
            parse_signs(bad)


class TestWClasses:
    def test_examples(self):
        assert in_w_class(P("12543"), (1, -1))
        assert not in_w_class(P("2143"), (1, -1))
        assert in_w_class(P("2143"), (-1, -1))
        assert in_w_class((), (1,))

    def test_matches_brute_force(self):
        for p in SMALL:
            for eps in SIGNS:
                assert in_w_class(p, eps) == brute_w(p, eps), (p, eps)

    def test_downward_closed(self):
        members = {eps: [p for p in SMALL if len(p) <= 5 and in_w_class(p, eps)] for eps in SIGNS[:6]}
        small = [q for n in range(0, 5) for q in all_perms(n)]
        for eps, ps in members.items():
            for p in ps:
                for q in small:
                    if len(q) <= len(p) and involves(q, p):
                        assert in_w_class(q, eps), (q, p, eps)


class TestLayered:
    def test_l2_examples(self):
        assert in_l2(P("2143"))
        assert in_l2(P("1324"))
        assert not in_l2(P("321"))
        assert in_l2_reverse(P("3412"))

    def test_greedy_matches_exhaustive(self):
        for p in SMALL:
            assert in_l2(p) == brute_l2(p), p
            assert in_l2_reverse(p) == brute_l2(p.reverse()), p

    def test_decomposition(self):
        assert layer_decomposition(P("21354")) == (2, 1, 2)
        assert layer_decomposition(P("312")) is None

    def test_members_are_fibonacci(self):
        sizes = [len(l2_members(n)) for n in range(1, 9)]
        assert sizes == [1, 2, 3, 5, 8, 13, 21, 34]
        for n in range(1, 7):
            assert set(l2_members(n)) == {p for p in all_perms(n) if in_l2(p)}

    @pytest.mark.parametrize("max_n, expected", [(1, {"1"}), (4, {"1", "12", "21"}), (6, {"1", "12", "21"})])
    def test_intersection(self, max_n, expected):
        assert {str(p) for p in l2_intersection_check(max_n)} == expected


class TestTenClasses:
    def test_names(self):
        names = [c.value for c in TenClass]
        assert names == ["W++", "W+-", "W-+", "W--", "W++inv", "W+-inv", "W-+inv", "W--inv", "L2", "L2R"]
        assert TenClass.from_name("W-+inv") is TenClass.W_MP_INV
        with pytest.raises(InvalidInput):
            TenClass.from_name("W+")

    def test_inverse_classes(self):
        for p in SMALL:
            assert in_ten_class(p, TenClass.W_PM_INV) == in_w_class(p.inverse(), (1, -1))

    def test_mm_intersection_is_two_block_shape(self):
        peg = PeggedPattern(P("4231"), (-1, -1, -1, -1))
        for n in range(0, 7):
            both = {p for p in all_perms(n)
                    if in_ten_class(p, TenClass.W_MM) and in_ten_class(p, TenClass.W_MM_INV)}
            assert both == peg_class_members(peg, n)


class TestPegs:
    def test_reduced_form(self):
        with pytest.raises(InvalidInput):
            PeggedPattern(P("21"), (-1, -1))
        with pytest.raises(InvalidInput):
            PeggedPattern(P("12"), (1, 1))
        with pytest.raises(InvalidInput):
            PeggedPattern(P("12"), (1,))
        PeggedPattern(P("12"), (-1, -1))

    def test_inflate_examples(self):
        assert inflate(PeggedPattern(P("12"), (-1, -1)), (2, 2)) == P("2143")
        assert inflate(PeggedPattern(P("1"), (1,)), (4,)) == P("1234")
        assert inflate(PeggedPattern(P("21"), (1, -1)), (2, 3)) == P("45321")
        assert inflate(PeggedPattern(P("312"), (1, -1, 1)), (0, 2, 0)) == P("21")

    def test_inflate_rejects_bad_lengths(self):
        peg = PeggedPattern(P("12"), (-1, -1))
        with pytest.raises(InvalidInput):
            inflate(peg, (1,))
        with pytest.raises(InvalidInput):
            inflate(peg, (1, -1))

    def test_counts(self):
        assert peg_class_count(PeggedPattern(P("1"), (1,)), 5) == 1
        assert peg_class_count(PeggedPattern(P("12"), (-1, -1)), 3) == 3
        assert {str(p) for p in peg_class_members(PeggedPattern(P("12"), (-1, -1)), 3)} == {"321", "132", "213"}
        assert peg_class_count(PeggedPattern(P("2413"), (1, -1, 1, -1)), 0) == 1

    def test_count_bounded_by_compositions(self):
        peg = PeggedPattern(P("2413"), (1, -1, -1, 1))
        for n in range(0, 7):
            assert peg_class_count(peg, n) <= comb(n + 3, 3)

    def test_compositions(self):
        assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert list(compositions(0, 0)) == [()]
        assert sum(1 for _ in compositions(5, 3)) == comb(7, 2)

    def test_all_minus_inflations_contract_small(self):
        peg = PeggedPattern(P("3142"), (-1, -1, -1, -1))
        for n in range(0, 8):
            for lengths in compositions(n, 4):
                assert len(contract(inflate(peg, lengths))) <= 4
