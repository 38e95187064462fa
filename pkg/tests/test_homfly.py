"""The braid polynomial: evaluators, derived invariants, band words."""

import random

import pytest

from braidnorms.braid import BraidWord, from_codes, parse_braid
from braidnorms.homfly import (
    PHI,
    band_minimize,
    conway,
    homfly_h,
    homfly_p,
    homfly_report,
    homogeneous_top_term,
    linearize,
    max_bennequin_certificate,
    mfw_check,
    morton_check_3braid,
    skein_oracle,
    trace_value,
)
from braidnorms.poly import LaurentVZ, eval_v0, exact_div, min_v_degree
from braidnorms.sweeps import all_words, kanda_word, torus_word

V2 = LaurentVZ.term(1, 2, 0)
Z = LaurentVZ.term(1, 0, 1)


def random_codes(rng, n, length):
    alphabet = [c for i in range(1, n) for c in (i, -i)]
    return tuple(rng.choice(alphabet) for _ in range(length))


class TestHomflyP:
    def test_identity_words(self):
        for n in range(1, 5):
            assert homfly_p(BraidWord(n)) == PHI**n

    def test_single_negative_band_letter(self):
        assert homfly_p(parse_braid("a1,3^-1", 3)) == V2 * PHI**2
        assert homfly_p(parse_braid("a1,2^-1", 3)) == V2 * PHI**2

    def test_length_two_one_negative(self):
        expected = LaurentVZ({(2, -1): 1, (4, -1): -1})
        assert homfly_p(parse_braid("a1,2^-1 a2,3", 3)) == expected
        assert homfly_p(parse_braid("s1^-1 s2", 3)) == expected

    def test_single_positive_letter(self):
        assert homfly_p(from_codes(2, [1])) == PHI
        assert homfly_p(from_codes(2, [-1])) == V2 * PHI

    def test_conjugation_and_rotation_share_cache_soundly(self):
        word = from_codes(3, [1, -2, 1, 2])
        rotated = from_codes(3, [2, 1, -2, 1])
        assert homfly_p(word) == homfly_p(rotated)

    def test_trace_element_exposed(self):
        element = linearize(from_codes(2, [1, 1]))
        assert element.n == 2
        assert set(element.comb) == {(0, 1), (1, 0)}
        assert trace_value(element) == PHI**2 + Z * PHI

    def test_polynomial_in_v(self):
        rng = random.Random(2)
        for _ in range(50):
            n = rng.randint(2, 4)
            word = from_codes(n, random_codes(rng, n, rng.randint(0, 8)))
            assert min_v_degree(homfly_p(word)) >= 0

    def test_three_strand_v_powers(self):
        rng = random.Random(4)
        for _ in range(50):
            word = from_codes(3, random_codes(rng, 3, rng.randint(0, 8)))
            powers = {a for a, _ in homfly_p(word).terms}
            assert powers <= {0, 2, 4, 6}


class TestSkeinOracle:
    def test_forced_values(self):
        assert skein_oracle(from_codes(2, [1])) == PHI
        assert skein_oracle(from_codes(2, [-1])) == V2 * PHI

    def test_trefoil_matches_trace(self):
        word = parse_braid("s1^3", 2)
        assert skein_oracle(word) == homfly_p(word)

    def test_exhaustive_small(self):
        for n in (2, 3):
            for word in all_words(n, 4):
                assert skein_oracle(word) == homfly_p(word)

    def test_random_four_strands(self):
        rng = random.Random(9)
        for _ in range(40):
            word = from_codes(4, random_codes(rng, 4, rng.randint(0, 7)))
            assert skein_oracle(word) == homfly_p(word)

    def test_budget_error(self):
        from braidnorms.homfly import BudgetExceededError, clear_caches

        clear_caches()
        with pytest.raises(BudgetExceededError):
            skein_oracle(from_codes(4, [1, -2, 3, -1, 2, -3, 1, -2, 3]), budget=5)
        clear_caches()


class TestDerivedInvariants:
    def test_h_unknot(self):
        assert homfly_h(BraidWord(1)) == LaurentVZ.one()

    def test_h_two_unlink(self):
        assert homfly_h(BraidWord(2)) == LaurentVZ({(-1, -1): 1, (1, -1): -1})

    def test_h_trefoil(self):
        expected = LaurentVZ({(2, 0): 2, (4, 0): -1, (2, 2): 1})
        assert homfly_h(parse_braid("s1^3", 2)) == expected

    def test_h_stabilization_invariance(self):
        base = homfly_h(parse_braid("s1^3", 2))
        assert homfly_h(parse_braid("s1^3 s2", 3)) == base
        assert homfly_h(parse_braid("s1^3 s2 s3", 4)) == base

    def test_conway_values(self):
        assert conway(BraidWord(1)) == LaurentVZ.one()
        assert conway(parse_braid("s1^2", 2)) == LaurentVZ({(0, 1): 1})
        assert conway(parse_braid("s1^3", 2)) == LaurentVZ({(0, 0): 1, (0, 2): 1})

    def test_divisibility_never_fails(self):
        rng = random.Random(12)
        one_minus_v2 = LaurentVZ({(0, 0): 1, (2, 0): -1})
        for _ in range(40):
            n = rng.randint(2, 4)
            word = from_codes(n, random_codes(rng, n, rng.randint(0, 8)))
            exact_div(homfly_p(word).shift(dz=1), one_minus_v2)

    def test_report_consistency(self):
        word = parse_braid("s1^3", 2)
        report = homfly_report(word)
        assert report.beta_t == 1
        assert report.e == 2
        assert report.e_p == 0
        assert report.e == report.beta_t + 1 + report.e_p
        assert report.e_p % 2 == 0
        assert report.conway == conway(word)


class TestMfw:
    def test_unknot(self):
        report = mfw_check(BraidWord(1))
        assert report.holds and report.slack == 0

    def test_trefoil_sharp(self):
        report = mfw_check(parse_braid("s1^3", 2))
        assert (report.beta_t, report.e, report.slack) == (1, 2, 0)

    def test_twist_family_bound(self):
        # beta_t = -3 and the certificate pins max Bennequin at k - l - 3
        for k in (3, 5):
            word = kanda_word(1, k)
            report = mfw_check(word)
            assert report.holds

    def test_balanced_twist_max_bennequin_cap(self):
        # s2^-k s1^k has beta_t = -3; the degree bound caps the maximal
        # Bennequin number over all representatives by e - 1 <= 1
        for k in (3, 5):
            report = mfw_check(kanda_word(k, k))
            assert report.beta_t == -3
            assert report.holds
            assert report.e - 1 <= 1

    def test_small_sweep(self):
        for word in all_words(3, 5):
            assert mfw_check(word).holds


class TestCertificate:
    def test_positive_torus_words_certified(self):
        for k in range(1, 7):
            assert max_bennequin_certificate(torus_word(k)).certified

    def test_single_negative_twist_not_certified(self):
        for k in (3, 5):
            report = max_bennequin_certificate(kanda_word(1, k))
            assert not report.certified
            assert report.p0.is_zero()

    def test_double_negative_twist_certified(self):
        for k in (3, 5):
            report = max_bennequin_certificate(kanda_word(2, k))
            assert report.certified
            base = eval_v0(homfly_p(torus_word(k)))
            assert report.p0 == base.shift(dz=-1)


class TestHomogeneousTopTerm:
    def test_torus_words(self):
        for k in range(2, 7):
            report = homogeneous_top_term(torus_word(k))
            assert report.match
            assert report.predicted == LaurentVZ({(0, k - 2): 1, (2, k - 2): -1})

    def test_unknot_presentation(self):
        report = homogeneous_top_term(from_codes(3, [1, 2]))
        assert report.match
        assert homfly_p(from_codes(3, [1, 2])) == PHI

    def test_twist_family(self):
        for k in range(2, 6):
            word = kanda_word(k, k)
            report = homogeneous_top_term(word)
            assert report.match
            sign = 1 if (k - 1) % 2 == 0 else -1
            assert report.predicted == LaurentVZ(
                {(2, 2 * k - 3): sign, (4, 2 * k - 3): -sign}
            )

    def test_requires_homogeneous(self):
        with pytest.raises(ValueError):
            homogeneous_top_term(from_codes(2, [1, -1]))
        with pytest.raises(ValueError):
            homogeneous_top_term(from_codes(3, [1, 1]))


class TestKandaFamily:
    def test_vanishing_and_recursion(self):
        for k in (3, 5):
            base = eval_v0(homfly_p(torus_word(k)))
            assert eval_v0(homfly_p(kanda_word(1, k))).is_zero()
            assert eval_v0(homfly_p(kanda_word(2, k))) == base.shift(dz=-1)
            prev2, prev1 = None, None
            for l in range(1, 7):
                p0 = eval_v0(homfly_p(kanda_word(l, k)))
                if prev2 is not None:
                    assert p0 == prev2 - Z * prev1
                prev2, prev1 = prev1, p0

    def test_cofactor_signs(self):
        for k in (3, 5):
            base = eval_v0(homfly_p(torus_word(k)))
            for l in range(2, 7):
                f_l = exact_div(eval_v0(homfly_p(kanda_word(l, k))), base)
                coeffs = f_l.terms.values()
                if l % 2 == 0:
                    assert all(c > 0 for c in coeffs)
                else:
                    assert all(c < 0 for c in coeffs)


class TestBandMinimize:
    def test_cancelling_pair(self):
        result = band_minimize(parse_braid("a1,2 a1,2^-1", 3))
        assert len(result.word.letters) == 0 and result.certified

    def test_relation_preserves_length(self):
        result = band_minimize(parse_braid("a2,3 a1,2", 3))
        assert len(result.word.letters) == 2 and result.certified

    def test_length_three_positive(self):
        result = band_minimize(parse_braid("a1,2 a2,3 a1,3", 3))
        assert len(result.word.letters) == 3 and result.certified

    def test_conjugate_of_generator(self):
        word = parse_braid("a1,3 a1,2^-1 a2,3 a1,2 a1,3^-1", 3)
        result = band_minimize(word)
        assert len(result.word.letters) == 1 and result.certified

    def test_exhausted_budget_uncertified(self):
        word = parse_braid("a1,2 a2,3 a1,3 a1,2^-1 a2,3^-1", 3)
        result = band_minimize(word, budget=3)
        assert not result.certified

    def test_requires_three_strands(self):
        with pytest.raises(ValueError):
            band_minimize(parse_braid("s1", 2))


class TestMorton3:
    def test_short_negative_base_cases(self):
        single = morton_check_3braid(parse_braid("a1,3^-1", 3))
        assert single.holds and single.certified
        assert single.e_p == 2 and single.neg_b == 1
        assert homfly_p(single.minimal) == V2 * PHI**2

        double = morton_check_3braid(parse_braid("a1,2^-1 a2,3", 3))
        assert double.holds and double.certified
        assert double.e_p == 2 and double.neg_b == 1
        assert homfly_p(double.minimal) == LaurentVZ({(2, -1): 1, (4, -1): -1})

    def test_positive_words_have_zero_degree(self):
        for text in ["a1,2 a2,3 a1,3", "a1,3^3", "a1,2 a1,3 a2,3 a1,2"]:
            report = morton_check_3braid(parse_braid(text, 3))
            assert report.certified and report.holds
            assert report.e_p == 0 and report.neg_b == 0

    def test_random_words_hold_when_certified(self):
        rng = random.Random(31)
        alphabet = ["a1,2", "a2,3", "a1,3", "a1,2^-1", "a2,3^-1", "a1,3^-1"]
        for _ in range(30):
            text = " ".join(rng.choice(alphabet) for _ in range(rng.randint(0, 6)))
            report = morton_check_3braid(parse_braid(text, 3))
            if report.certified:
                assert report.holds


class TestMarkovAndRelations:
    def test_skein_relation_random(self):
        rng = random.Random(41)
        for _ in range(30):
            n = rng.randint(2, 4)
            codes = random_codes(rng, n, rng.randint(0, 6))
            i = rng.randint(1, n - 1)
            lhs = homfly_p(from_codes(n, codes + (i,))) - homfly_p(
                from_codes(n, codes + (-i,))
            )
            assert lhs == Z * homfly_p(from_codes(n, codes))

    def test_stabilization_random(self):
        rng = random.Random(43)
        for _ in range(30):
            n = rng.randint(2, 3)
            codes = random_codes(rng, n, rng.randint(0, 6))
            p = homfly_p(from_codes(n, codes))
            assert homfly_p(from_codes(n + 1, codes + (n,))) == p
            assert homfly_p(from_codes(n + 1, codes + (-n,))) == V2 * p
