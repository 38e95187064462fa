"""Enumeration helpers, suite plumbing, and benchmarks."""

import random

import pytest

from braidnorms.braid import print_braid, standard_codes
from braidnorms.sweeps import (
    all_words,
    bench_family,
    kanda_word,
    random_word,
    run_suite,
    torus_word,
    verify_kanda,
    verify_linearity,
    verify_mfw,
)


class TestEnumeration:
    def test_all_words_counts(self):
        assert sum(1 for _ in all_words(2, 3)) == 1 + 2 + 4 + 8
        assert sum(1 for _ in all_words(3, 2)) == 1 + 4 + 16

    def test_all_words_strand_count(self):
        assert all(word.n == 3 for word in all_words(3, 2))

    def test_random_word_deterministic(self):
        a = random_word(random.Random(9), 4, 7)
        b = random_word(random.Random(9), 4, 7)
        assert a == b

    def test_family_builders(self):
        assert print_braid(torus_word(4)) == "s1^4"
        assert standard_codes(kanda_word(2, 3)) == (-2, -2, 1, 1, 1)


class TestSuitePlumbing:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nonsense")

    def test_dispatch_matches_direct_call(self):
        direct = verify_kanda(k=3, max_l=3)
        routed = run_suite("kanda", k=3, max_l=3)
        assert routed.failures == direct.failures == []
        assert routed.details == direct.details

    def test_strand_ceiling_refused(self):
        with pytest.raises(ValueError):
            verify_mfw(max_strands=5, max_len=3)

    def test_length_ceiling_refused(self):
        with pytest.raises(ValueError):
            verify_mfw(max_strands=2, max_len=11)

    def test_sampled_ceiling_refused(self):
        with pytest.raises(ValueError):
            verify_linearity(samples=1, max_strands=6)

    def test_negative_samples_refused(self):
        with pytest.raises(ValueError):
            verify_linearity(samples=-1)

    def test_linearity_seeded_repeatable(self):
        first = verify_linearity(samples=20, seed=5)
        second = verify_linearity(samples=20, seed=5)
        assert first.checked == second.checked == 40
        assert first.failures == second.failures == []


class TestBench:
    def test_rows_agree_and_count(self):
        rows = bench_family("torus3", limit=3)
        assert len(rows) == 3
        assert all(row.equal for row in rows)
        assert [row.length for row in rows] == [2, 4, 6]

    def test_random_family_deterministic_words(self):
        first = bench_family("random", limit=2, seed=1)
        second = bench_family("random", limit=2, seed=1)
        assert [r.terms for r in first] == [r.terms for r in second]

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            bench_family("nonsense")
