"""Closure combinatorics and Euler characteristic formulas."""

import random

import pytest

from braidnorms.braid import BraidWord, from_codes, parse_braid
from braidnorms.diagram import (
    band_seifert_euler,
    closure_profile,
    linking_matrix,
    punctured_component_euler,
    seifert_euler,
)


class TestClosureProfile:
    def test_torus_four(self):
        prof = closure_profile(parse_braid("s1^4", 2))
        assert prof.r == 2
        assert prof.cr == ((0, 4), (4, 0))
        assert prof.strands == (1, 1)
        assert prof.over_cross == (2, 2)
        assert prof.self_cross == (0, 0)

    def test_trefoil(self):
        prof = closure_profile(parse_braid("s1^3", 2))
        assert prof.r == 1
        assert prof.cr == ((3,),)
        assert prof.strands == (2,)
        assert prof.self_cross == (3,)
        assert prof.over_cross == (0,)

    def test_identity(self):
        prof = closure_profile(BraidWord(3))
        assert prof.r == 3
        assert prof.cr == ((0, 0, 0), (0, 0, 0), (0, 0, 0))

    def test_crossing_total_identity(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(2, 5)
            codes = [
                rng.choice([c for i in range(1, n) for c in (i, -i)])
                for _ in range(rng.randint(0, 10))
            ]
            word = from_codes(n, codes)
            prof = closure_profile(word)
            assert sum(prof.self_cross) + sum(prof.over_cross) == len(codes)
            assert sum(prof.strands) == n
            for i in range(prof.r):
                for j in range(prof.r):
                    assert prof.cr[i][j] == prof.cr[j][i]

    def test_conjugation_invariance(self):
        # conjugation renumbers components; match them through the
        # permutation of the conjugating letter before comparing
        from braidnorms.braid import permutation

        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(2, 5)
            alphabet = [c for i in range(1, n) for c in (i, -i)]
            codes = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 10)))
            g = rng.choice(alphabet)
            word = from_codes(n, codes)
            conj = from_codes(n, (g,) + codes + (-g,))
            a, b = closure_profile(word), closure_profile(conj)
            assert b.r == a.r
            pg = permutation(from_codes(n, (abs(g),)))
            mapping = {}
            for s in range(1, n + 1):
                c_conj = b.comp[s - 1]
                c_word = a.comp[pg[s - 1] - 1]
                assert mapping.setdefault(c_conj, c_word) == c_word
            lk_a, lk_b = linking_matrix(a), linking_matrix(b)
            for i in range(1, a.r + 1):
                for j in range(1, a.r + 1):
                    mi, mj = mapping[i] - 1, mapping[j] - 1
                    assert b.cr[i - 1][j - 1] == a.cr[mi][mj]
                    assert lk_b[i - 1][j - 1] == lk_a[mi][mj]
            assert sorted(a.strands) == sorted(b.strands)


class TestLinkingMatrix:
    def test_torus_four(self):
        lk = linking_matrix(closure_profile(parse_braid("s1^4", 2)))
        assert lk == ((0, 2), (2, 0))

    def test_identity(self):
        lk = linking_matrix(closure_profile(BraidWord(2)))
        assert lk == ((0, 0), (0, 0))

    def test_negative_hopf(self):
        lk = linking_matrix(closure_profile(parse_braid("s1^-2", 2)))
        assert lk == ((0, -1), (-1, 0))


class TestEuler:
    def test_seifert_torus_four(self):
        report = seifert_euler(parse_braid("s1^4", 2))
        assert (report.chi, report.chi_minus, report.formula) == (-2, 2, "seifert")

    def test_seifert_disk(self):
        report = seifert_euler(BraidWord(1))
        assert (report.chi, report.chi_minus) == (1, 0)

    def test_seifert_trefoil(self):
        assert seifert_euler(parse_braid("s1^3", 2)).chi == -1

    def test_seifert_counts_expanded_letters(self):
        # a1,3 expands to three crossings
        assert seifert_euler(parse_braid("a1,3", 3)).chi == 0

    def test_band_seifert_ko_lee(self):
        word = parse_braid("a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2", 5)
        report = band_seifert_euler(word)
        assert (report.chi, report.chi_minus, report.formula) == (
            -4,
            4,
            "band_seifert",
        )

    def test_band_seifert_identity(self):
        assert band_seifert_euler(BraidWord(4)).chi == 4

    def test_band_positive_realizes_band_count(self):
        word = parse_braid("a1,3 a2,4 a1,2 a3,4^2", 4)
        assert -band_seifert_euler(word).chi == len(word.letters) - word.n

    def test_band_equals_seifert_on_standard_words(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(2, 5)
            codes = [
                rng.choice([c for i in range(1, n) for c in (i, -i)])
                for _ in range(rng.randint(0, 9))
            ]
            word = from_codes(n, codes)
            assert seifert_euler(word).chi == band_seifert_euler(word).chi
            assert seifert_euler(word).chi_minus == band_seifert_euler(word).chi_minus

    def test_punctured_torus_four(self):
        word = parse_braid("s1^4", 2)
        for j in (1, 2):
            report = punctured_component_euler(word, j)
            assert (report.chi, report.chi_minus) == (-1, 1)
            assert report.formula == "punctured_component"

    def test_punctured_identity(self):
        assert punctured_component_euler(BraidWord(2), 1).chi == 1

    def test_punctured_trefoil(self):
        assert punctured_component_euler(parse_braid("s1^3", 2), 1).chi == -1

    def test_punctured_component_range(self):
        with pytest.raises(ValueError):
            punctured_component_euler(parse_braid("s1^4", 2), 3)
        with pytest.raises(ValueError):
            punctured_component_euler(parse_braid("s1^4", 2), 0)
