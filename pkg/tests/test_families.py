"""Tests for the extremal family generators."""

from __future__ import annotations

from itertools import combinations

import pytest

from layerlens.core import Drawing, brick_decomposition, crossing_profile, mutually_crossing_number
from layerlens.families import (
    FamilySpec,
    advertised_k,
    band_offset,
    general_k_family,
    generate,
    opt2planar,
    planar3_family,
    planar4_family,
    planar5_family,
    planar6_family,
    special_s,
)
from layerlens.oracles import brute_force_profile


class TestOpt2planar:
    def test_single_brick_is_k23(self):
        d = opt2planar(1)
        assert (d.n, d.m) == (5, 6)
        assert d.edges == frozenset((i, x) for i in (1, 2) for x in (1, 2, 3))
        assert len(brick_decomposition(d).bricks) == 1

    def test_counts_and_planar_edges(self):
        k23 = Drawing(2, 3, frozenset((i, x) for i in (1, 2) for x in (1, 2, 3)))
        for beta in range(1, 51):
            d = opt2planar(beta)
            assert (d.n, d.m) == (3 * beta + 2, 5 * beta + 1)
            bd = brick_decomposition(d)
            assert len(bd.planar_edges) == beta + 1
            assert len(bd.bricks) == beta
            assert all(brick.drawing == k23 for brick in bd.bricks)

    def test_two_planar(self):
        for beta in (1, 2, 3, 7):
            assert brute_force_profile(opt2planar(beta)).max_per_edge <= 2

    def test_rejects_bad_size(self):
        with pytest.raises(ValueError):
            opt2planar(0)


class TestPlanar3:
    def test_counts(self):
        assert (planar3_family(4).n, planar3_family(4).m) == (8, 12)
        assert (planar3_family(3).n, planar3_family(3).m) == (6, 8)
        for p in range(3, 51):
            d = planar3_family(p)
            assert (d.n, d.m) == (2 * p, 2 * (2 * p) - 4)

    def test_three_planar_and_quasiplanar(self):
        for p in range(3, 51):
            d = planar3_family(p)
            assert crossing_profile(d).max_per_edge <= 3
            assert mutually_crossing_number(d) <= 2

    def test_rejects_bad_size(self):
        with pytest.raises(ValueError):
            planar3_family(2)


class TestPlanar4:
    def test_single_brick_is_k33(self):
        d = planar4_family(1)
        assert (d.n, d.m) == (6, 9)
        assert brute_force_profile(d).max_per_edge == 4

    def test_counts(self):
        assert (planar4_family(2).n, planar4_family(2).m) == (10, 17)
        for beta in range(1, 51):
            d = planar4_family(beta)
            assert (d.n, d.m) == (4 * beta + 2, 8 * beta + 1)
            assert crossing_profile(d).max_per_edge <= 4


class TestPlanar5:
    def test_counts(self):
        assert (planar5_family(2).n, planar5_family(2).m) == (10, 18)
        assert (planar5_family(4).n, planar5_family(4).m) == (18, 36)
        for beta in range(2, 51):
            d = planar5_family(beta)
            assert (d.n, d.m) == (4 * beta + 2, 9 * beta)

    def test_five_planar(self):
        assert brute_force_profile(planar5_family(2)).max_per_edge <= 5
        for beta in range(2, 51):
            assert crossing_profile(planar5_family(beta)).max_per_edge <= 5

    def test_rejects_bad_size(self):
        with pytest.raises(ValueError):
            planar5_family(1)


class TestPlanar6:
    def test_counts(self):
        assert (planar6_family(2).n, planar6_family(2).m) == (10, 19)
        assert (planar6_family(3).n, planar6_family(3).m) == (14, 29)
        for beta in range(2, 51):
            d = planar6_family(beta)
            assert (d.n, d.m) == (4 * beta + 2, 10 * beta - 1)

    def test_six_planar(self):
        assert brute_force_profile(planar6_family(2)).max_per_edge <= 6
        for beta in range(2, 51):
            assert crossing_profile(planar6_family(beta)).max_per_edge <= 6


class TestGeneralK:
    def test_offset(self):
        assert band_offset(2) == 1
        assert band_offset(8) == 2
        assert band_offset(50) == 5
        assert band_offset(7) == 1

    def test_counts_k8(self):
        d = general_k_family(6, 8)
        assert (d.n, d.m) == (12, 18)

    def test_counts_k2(self):
        d = general_k_family(5, 2)
        assert d.m == 8
        assert crossing_profile(d).max_per_edge <= 2
        assert crossing_profile(d).total > 0  # not crossing-free

    def test_k_planar_across_parameters(self):
        for k in (2, 3, 8, 9, 18, 32, 50):
            ell = band_offset(k)
            for p in range(ell + 1, 31):
                d = general_k_family(p, k)
                assert (d.n, d.m) == (2 * p, 2 * (ell * p - ell * (ell + 1) // 2))
                assert crossing_profile(d).max_per_edge <= k, (k, p)

    def test_rejects_small_p(self):
        with pytest.raises(ValueError):
            general_k_family(2, 8)
        with pytest.raises(ValueError):
            general_k_family(5, 1)


class TestSpecialS:
    def test_counts_and_cap(self):
        s = special_s()
        assert (s.n, s.m) == (8, 14)
        assert brute_force_profile(s).max_per_edge <= 5

    def test_planar_and_heavy_edges(self):
        prof = brute_force_profile(special_s())
        assert prof.per_edge[(4, 4)] == 0
        assert prof.per_edge[(2, 4)] == 5
        assert prof.per_edge[(4, 2)] == 5

    def test_unique_14_edge_drawing_on_4x4(self):
        # regeneration check: scanning every 14-edge subset of the 4x4
        # grid, exactly one drawing keeps all edges within 5 crossings,
        # and it is the frozen constant
        cells = [(i, x) for i in range(1, 5) for x in range(1, 5)]
        feasible = []
        for drop in combinations(cells, 2):
            edges = frozenset(set(cells) - set(drop))
            d = Drawing(4, 4, edges)
            if crossing_profile(d).max_per_edge <= 5:
                feasible.append(edges)
        assert feasible == [special_s().edges]

    def test_rotation_invariant(self):
        s = special_s()
        assert s.rotate() == s


class TestFamilySpec:
    def test_generate_dispatch(self):
        assert generate(FamilySpec("opt2planar", 3)) == opt2planar(3)
        assert generate(FamilySpec("general_k", 6, k=8)) == general_k_family(6, 8)
        assert generate(FamilySpec("special_s")) == special_s()

    def test_advertised_k(self):
        assert advertised_k(FamilySpec("opt2planar", 1)) == 2
        assert advertised_k(FamilySpec("planar6", 2)) == 6
        assert advertised_k(FamilySpec("general_k", 6, k=9)) == 9
        assert advertised_k(FamilySpec("special_s")) == 5

    def test_validation(self):
        with pytest.raises(ValueError):
            FamilySpec("nosuch", 1)
        with pytest.raises(ValueError):
            FamilySpec("general_k", 5)  # missing k
        with pytest.raises(ValueError):
            FamilySpec("opt2planar", 0)
