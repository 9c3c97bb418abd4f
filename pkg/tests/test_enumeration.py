"""Bounded enumeration of the construction grammar and its consequences."""

from __future__ import annotations

import math
from math import gcd

import pytest

import circleact as ca


class TestEnumerate:
    def test_two_points_are_exactly_the_coprime_mirrored_pairs(self):
        corpus = ca.enumerate_data(2, 5)
        two_point = [d for d in corpus if len(d) == 2]
        # independent oracle: plain gcd filter over all pairs
        expected = {
            ca.FixedPointData.of((1, a, b), (-1, a, b))
            for a in range(1, 6)
            for b in range(a, 6)
            if gcd(a, b) == 1
        }
        assert set(two_point) == expected
        assert len(expected) == 10
        assert ca.EMPTY in corpus
        assert len(corpus) == 11

    def test_three_point_bound_three(self):
        corpus = ca.enumerate_data(3, 3)
        entries = set(corpus)
        three_point = {
            ca.FixedPointData.of((-1, 1, 1), (1, 1, 2), (1, 1, 2)),
            ca.FixedPointData.of((1, 1, 1), (-1, 1, 2), (-1, 1, 2)),
            ca.FixedPointData.of((-1, 1, 2), (1, 1, 3), (1, 2, 3)),
            ca.FixedPointData.of((1, 1, 2), (-1, 1, 3), (-1, 2, 3)),
        }
        pairs = {
            ca.FixedPointData.of((1, a, b), (-1, a, b))
            for a, b in ((1, 1), (1, 2), (1, 3), (2, 3))
        }
        assert entries == {ca.EMPTY} | pairs | three_point

    def test_degenerate_bounds(self):
        assert set(ca.enumerate_data(0, 1)) == {ca.EMPTY}
        assert set(ca.enumerate_data(1, 4)) == {ca.EMPTY}

    def test_bad_bounds_rejected(self):
        with pytest.raises(ValueError):
            ca.enumerate_data(-1, 3)
        with pytest.raises(ValueError):
            ca.enumerate_data(2, 0)

    def test_closed_under_orientation_reversal(self):
        corpus = ca.enumerate_data(4, 6)
        for entry in corpus:
            assert ca.reverse_orientation(entry) in corpus

    def test_every_trace_replays_to_its_entry(self):
        corpus = ca.enumerate_data(4, 6)
        for entry, trace in corpus.items():
            assert ca.replay(trace) == entry
            assert ca.verify_trace(trace, entry)

    def test_every_entry_passes_the_invariant_battery(self):
        corpus = ca.enumerate_data(4, 5)
        for entry in corpus:
            assert ca.structural_checks(entry).all_passed, entry

    def test_membership_queries(self, sphere_pair):
        corpus = ca.enumerate_data(2, 5)
        assert sphere_pair in corpus
        assert ca.FixedPointData.of((1, 1, 7), (-1, 1, 7)) not in corpus
        assert ca.FixedPointData.of((1, 1, 2), (1, 1, 2)) not in corpus
        with pytest.raises(KeyError):
            corpus.trace_of(ca.FixedPointData.of((1, 1, 7), (-1, 1, 7)))

    def test_iteration_order_is_canonical_and_stable(self):
        first = [ca.serialize(d) for d in ca.enumerate_data(3, 4)]
        second = [ca.serialize(d) for d in ca.enumerate_data(3, 4)]
        assert first == second
        sizes = [len(ca.parse(t)) for t in first]
        assert sizes == sorted(sizes)


class TestSpectrum:
    def test_two_points(self):
        assert ca.signature_spectrum(2, 5) == {0}

    def test_three_points(self):
        assert ca.signature_spectrum(3, 4) == {-1, 1}

    def test_five_points(self):
        # oracle: the closed form {j : |j| <= k-2, j == k mod 2}
        assert ca.signature_spectrum(5, 12) == {-3, -1, 1, 3}
        assert ca.expected_spectrum(5) == {-3, -1, 1, 3}


class TestClassification:
    def test_sphere_family(self, sphere_pair):
        match = ca.match_family(sphere_pair)
        assert match.family == "sphere"
        assert match.parameters == {"a": 1, "b": 2}

    def test_blowup_family(self, one_blowup):
        match = ca.match_family(one_blowup)
        assert match.family == "sphere-blowup"
        assert match.parameters == {"a": 1, "b": 1}
        assert match.signature == 1

    def test_two_spheres_family(self):
        match = ca.match_family(
            ca.FixedPointData.of((1, 1, 2), (-1, 1, 2), (1, 1, 1), (-1, 1, 1))
        )
        assert match.family == "two-spheres"

    def test_double_blowup_family(self):
        match = ca.match_family(
            ca.FixedPointData.of((-1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 3))
        )
        assert match.family == "sphere-double-blowup"
        assert match.parameters == {"a": 1, "b": 1}
        assert match.signature == 2

    def test_double_blowup_other_branch(self):
        # blowing up the other same-sign point swaps the roles of a and b
        data = ca.replay(
            (ca.AddSphere(1, 2), ca.BlowUp(1, 1, 2), ca.BlowUp(1, 1, 3))
        )
        assert data == ca.FixedPointData.of((-1, 1, 2), (1, 1, 4), (1, 3, 4), (1, 2, 3))
        match = ca.match_family(data)
        assert match.family == "sphere-double-blowup"
        assert match.parameters == {"a": 2, "b": 1}

    def test_unmatched_raises(self):
        with pytest.raises(ca.UnmatchedEntryError):
            ca.match_family(ca.FixedPointData.of((1, 1, 5), (1, 3, 5), (-1, 1, 3)))

    def test_every_small_entry_matches(self):
        for k in (2, 3, 4):
            matches = ca.classify_small(k, 6)
            corpus = [d for d in ca.enumerate_data(k, 6) if len(d) == k]
            assert len(matches) == len(corpus)

    def test_bad_point_count_rejected(self):
        with pytest.raises(ValueError):
            ca.classify_small(5, 6)


class TestCandidateUniverse:
    def test_count_matches_multiset_formula(self):
        # 12 coprime pairs with weights <= 6, two signs each; the universe is
        # all multisets of size <= 4 over those 24 signed pairs
        pool = 2 * sum(
            1 for a in range(1, 7) for b in range(a, 7) if gcd(a, b) == 1
        )
        assert pool == 24
        expected = sum(math.comb(pool + k - 1, k) for k in range(5))
        assert sum(1 for _ in ca.candidate_universe(4, 6)) == expected == 20475

    def test_includes_unrealizable_data(self):
        universe = set(ca.candidate_universe(2, 2))
        assert ca.FixedPointData.of((1, 1, 2), (1, 1, 2)) in universe
