"""Acceptance suite: one test per criterion, exact values, timed.

Run with ``pytest -s tests/test_acceptance.py`` to see the one-line
verdict per criterion.  Every assertion is an exact integer or exact
polynomial equality; the only tolerances are the wall-clock limits.
"""

import time
from contextlib import contextmanager

from braidnorms.bennequin import (
    band_positive_bracket,
    bennequin_number,
    cable_pair,
    relative_bennequin,
    relative_bennequin_subset,
    thurston_bracket,
)
from braidnorms.braid import parse_braid
from braidnorms.diagram import band_seifert_euler
from braidnorms.homfly import (
    PHI,
    homfly_p,
    max_bennequin_certificate,
    morton_check_3braid,
    skein_oracle,
)
from braidnorms.poly import (
    LaurentVZ,
    MultiPoly,
    alexander_norm,
    eval_v0,
    exact_div,
    mcmullen_check,
)
from braidnorms.sweeps import (
    all_words,
    kanda_word,
    torus_word,
    verify_homogeneous,
    verify_kanda,
    verify_linearity,
    verify_mfw,
    verify_morton3,
    verify_skein,
)

V2 = LaurentVZ.term(1, 2, 0)


@contextmanager
def criterion(number, label, limit_seconds):
    start = time.perf_counter()
    failed = True
    try:
        yield
        failed = False
    finally:
        elapsed = time.perf_counter() - start
        status = "FAIL" if failed or elapsed >= limit_seconds else "PASS"
        print(
            f"ACCEPTANCE {number} [{label}]: {status} "
            f"({elapsed:.2f}s, limit {limit_seconds}s)"
        )
    assert elapsed < limit_seconds, (
        f"criterion {number} took {elapsed:.2f}s, over the {limit_seconds}s limit"
    )


def test_criterion_1_torus_four_example():
    with criterion(1, "torus four example", 1):
        word = parse_braid("s1^4", 2)
        assert bennequin_number(word) == 2
        assert (relative_bennequin(word, 1), relative_bennequin(word, 2)) == (1, 1)
        for C, value in [((1, 1), 2), ((1, 0), 1), ((2, 1), 3)]:
            bracket = thurston_bracket(word, C)
            assert (bracket.lower, bracket.upper) == (value, value)
            assert bracket.determined
        pair = cable_pair(word, (2, 1))
        assert relative_bennequin_subset(pair.lprime, pair.subset) == 3


def test_criterion_2_ko_lee_example():
    with criterion(2, "band positive five-braid", 1):
        word = parse_braid("a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2", 5)
        assert -band_seifert_euler(word).chi == 4
        poly = MultiPoly(2, {(0, 0): 2, (1, 0): -3, (2, 0): 2})
        assert alexander_norm(poly, (1, 1)) == 2
        bracket = band_positive_bracket(word)
        report = mcmullen_check(poly, bracket, (1, 1), 2)
        assert report.holds and report.gap == 2


def test_criterion_3_relation_suite():
    with criterion(3, "defining relations", 30):
        result = verify_skein(
            max_strands=3, max_len=6, samples=500, seed=0,
            sample_strands=4, sample_len=8,
        )
        assert result.failures == []
        assert result.checked > 40000


def test_criterion_4_oracle_equivalence():
    with criterion(4, "trace evaluator equals skein oracle", 60):
        count = 0
        for n in range(1, 4):
            for word in all_words(n, 8):
                assert homfly_p(word) == skein_oracle(word)
                count += 1
        assert count == 1 + 511 + 87381


def test_criterion_5_mfw_sweep():
    with criterion(5, "Bennequin bound on the oracle corpus", 60):
        result = verify_mfw(max_strands=3, max_len=8)
        assert result.failures == []
        assert result.checked == 1 + 511 + 87381


def test_criterion_6_homogeneous_top_term():
    with criterion(6, "homogeneous top z-term", 60):
        result = verify_homogeneous(max_strands=3, max_len=8)
        assert result.failures == []
        assert result.checked > 1500


def test_criterion_7_linearity():
    with criterion(7, "cabled relative Bennequin additivity", 60):
        result = verify_linearity(
            samples=200, seed=0, max_strands=4, max_len=8, max_coeff=4
        )
        assert result.failures == []
        assert result.checked == 400


def test_criterion_8_three_braid_morton():
    with criterion(8, "framing bound on shortest 3-braid band words", 120):
        single = homfly_p(parse_braid("a1,2^-1", 3))
        assert single == V2 * PHI**2
        pair = homfly_p(parse_braid("a1,2^-1 a2,3", 3))
        assert pair == LaurentVZ({(2, -1): 1, (4, -1): -1})
        base = morton_check_3braid(parse_braid("a1,3^-1", 3))
        assert base.certified and base.holds and base.e_p == 2

        result = verify_morton3(max_len=6, budget=20000)
        assert result.failures == []
        assert result.details["certified"] == result.checked


def test_criterion_9_kanda_family():
    with criterion(9, "twist family vanishing, signs, certificates", 30):
        for k in (3, 5):
            base = eval_v0(homfly_p(torus_word(k)))
            assert eval_v0(homfly_p(kanda_word(1, k))).is_zero()
            assert not max_bennequin_certificate(kanda_word(1, k)).certified
            assert eval_v0(homfly_p(kanda_word(2, k))) == base.shift(dz=-1)
            for l in range(2, 7):
                word = kanda_word(l, k)
                assert max_bennequin_certificate(word).certified
                f_l = exact_div(eval_v0(homfly_p(word)), base)
                coeffs = f_l.terms.values()
                if l % 2 == 0:
                    assert all(c > 0 for c in coeffs)
                else:
                    assert all(c < 0 for c in coeffs)
            suite = verify_kanda(k=k, max_l=6)
            assert suite.failures == []
