"""Word enumeration, theorem sweeps, and evaluator benchmarks.

Each ``verify_*`` function runs one family of identities over an
exhaustive or seeded-random corpus and reports every violation with the
offending word; a clean run returns an empty failure list.  All sweeps
are deterministic for a fixed seed.  Enumeration ceilings are fixed here
so that every suite stays desk-scale: exhaustive corpora stop at four
strands, sampled ones at five.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .bennequin import (
    bennequin_number,
    cable_pair,
    relative_bennequin,
    relative_bennequin_subset,
)
from .braid import BraidWord, band_gen, from_codes, generator_profile, print_braid
from .diagram import closure_profile, seifert_euler
from .homfly import (
    DEFAULT_BAND_BUDGET,
    PHI,
    clear_caches,
    homfly_p,
    homogeneous_top_term,
    max_bennequin_certificate,
    mfw_check,
    morton_check_3braid,
    skein_oracle,
)
from .poly import LaurentVZ, eval_v0, exact_div

__all__ = [
    "EXHAUSTIVE_STRAND_CEILING",
    "LENGTH_CEILING",
    "SAMPLED_STRAND_CEILING",
    "SuiteResult",
    "all_words",
    "bench_families",
    "bench_family",
    "kanda_word",
    "random_word",
    "run_suite",
    "torus_word",
    "verify_homogeneous",
    "verify_kanda",
    "verify_linearity",
    "verify_mfw",
    "verify_morton3",
    "verify_skein",
]

EXHAUSTIVE_STRAND_CEILING = 4
SAMPLED_STRAND_CEILING = 5
LENGTH_CEILING = 10

_Z = LaurentVZ.term(1, 0, 1)
_V2 = LaurentVZ.term(1, 2, 0)


@dataclass
class SuiteResult:
    """Outcome of one verification sweep."""

    suite: str
    checked: int
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_limits(max_strands: int, max_len: int, exhaustive: bool) -> None:
    ceiling = EXHAUSTIVE_STRAND_CEILING if exhaustive else SAMPLED_STRAND_CEILING
    if max_strands > ceiling:
        raise ValueError(
            f"strand limit {max_strands} exceeds the ceiling {ceiling}; "
            "refusing to run an open-ended sweep"
        )
    if max_len > LENGTH_CEILING:
        raise ValueError(
            f"length limit {max_len} exceeds the ceiling {LENGTH_CEILING}; "
            "refusing to run an open-ended sweep"
        )
    if max_strands < 1 or max_len < 0:
        raise ValueError("limits must be positive")


def _check_samples(samples: int) -> None:
    if samples < 0:
        raise ValueError("sample count must be nonnegative")


def _codes_alphabet(n: int) -> list[int]:
    return [c for i in range(1, n) for c in (i, -i)]


def all_words(n: int, max_len: int):
    """All standard words on n strands up to the given length, shortest first."""
    alphabet = _codes_alphabet(n)
    for length in range(max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            yield from_codes(n, combo)


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    alphabet = _codes_alphabet(n)
    return from_codes(n, [rng.choice(alphabet) for _ in range(length)])


def torus_word(k: int) -> BraidWord:
    """The 2-strand word with k positive crossings."""
    return from_codes(2, [1] * k)


def kanda_word(l: int, k: int) -> BraidWord:
    """The 3-strand word s2^-l s1^k."""
    return from_codes(3, [-2] * l + [1] * k)


def _label(word: BraidWord) -> str:
    return print_braid(word) or "id"


# ---------------------------------------------------------------------------
# suites

def verify_skein(
    max_strands: int = 3,
    max_len: int = 6,
    samples: int = 500,
    seed: int = 0,
    sample_strands: int = 4,
    sample_len: int = 8,
) -> SuiteResult:
    """Defining relations as executable identities.

    For every corpus word w: the skein relation at each generator, both
    stabilization rules, conjugation invariance, and the derivation of
    the negative stabilization value from the skein trade plus the
    free-strand split.
    """
    _check_limits(max_strands, max_len, exhaustive=True)
    _check_limits(sample_strands, sample_len, exhaustive=False)
    _check_samples(samples)
    start = time.perf_counter()
    result = SuiteResult(suite="skein", checked=0)

    def check(word: BraidWord) -> None:
        n = word.n
        codes = tuple(
            letter.i * letter.sign for letter in word.letters
        )
        p = homfly_p(word)
        for i in range(1, n):
            plus = homfly_p(from_codes(n, codes + (i,)))
            minus = homfly_p(from_codes(n, codes + (-i,)))
            result.checked += 1
            if plus - minus != _Z * p:
                result.failures.append(
                    f"skein i={i}: {_label(word)} on {n}: "
                    f"{plus - minus} != {_Z * p}"
                )
        stab_pos = homfly_p(from_codes(n + 1, codes + (n,)))
        stab_neg = homfly_p(from_codes(n + 1, codes + (-n,)))
        result.checked += 3
        if stab_pos != p:
            result.failures.append(
                f"positive stabilization: {_label(word)} on {n}: {stab_pos} != {p}"
            )
        if stab_neg != _V2 * p:
            result.failures.append(
                f"negative stabilization: {_label(word)} on {n}: "
                f"{stab_neg} != {_V2 * p}"
            )
        if stab_neg != stab_pos - _Z * (PHI * p):
            result.failures.append(
                f"stabilization consistency: {_label(word)} on {n}: "
                f"{stab_neg} != {stab_pos - _Z * (PHI * p)}"
            )
        for i in range(1, n):
            conj = homfly_p(from_codes(n, (i,) + codes + (-i,)))
            result.checked += 1
            if conj != p:
                result.failures.append(
                    f"conjugation i={i}: {_label(word)} on {n}: {conj} != {p}"
                )

    for n in range(1, max_strands + 1):
        for word in all_words(n, max_len):
            check(word)
    rng = random.Random(seed)
    for _ in range(samples):
        length = rng.randint(0, sample_len)
        check(random_word(rng, sample_strands, length))
    result.elapsed = time.perf_counter() - start
    return result


def verify_mfw(max_strands: int = 3, max_len: int = 6) -> SuiteResult:
    """The bound beta_t + 1 <= e over an exhaustive corpus."""
    _check_limits(max_strands, max_len, exhaustive=True)
    start = time.perf_counter()
    result = SuiteResult(suite="mfw", checked=0)
    min_slack = None
    for n in range(1, max_strands + 1):
        for word in all_words(n, max_len):
            report = mfw_check(word)
            result.checked += 1
            if min_slack is None or report.slack < min_slack:
                min_slack = report.slack
            if not report.holds:
                result.failures.append(
                    f"{_label(word)} on {n}: beta_t={report.beta_t} e={report.e}"
                )
    result.details["min_slack"] = min_slack
    result.elapsed = time.perf_counter() - start
    return result


def verify_homogeneous(max_strands: int = 3, max_len: int = 8) -> SuiteResult:
    """The predicted top z-term on every homogeneous corpus word."""
    _check_limits(max_strands, max_len, exhaustive=True)
    start = time.perf_counter()
    result = SuiteResult(suite="homogeneous", checked=0)
    for n in range(2, max_strands + 1):
        for word in all_words(n, max_len):
            if not generator_profile(word).homogeneous:
                continue
            report = homogeneous_top_term(word)
            result.checked += 1
            if not report.match:
                result.failures.append(
                    f"{_label(word)} on {n}: predicted {report.predicted} "
                    f"observed {report.observed}"
                )
    result.elapsed = time.perf_counter() - start
    return result


def verify_linearity(
    samples: int = 200,
    seed: int = 0,
    max_strands: int = 4,
    max_len: int = 8,
    max_coeff: int = 4,
) -> SuiteResult:
    """Additivity of the relative Bennequin number under cabling.

    For random (word, class) pairs, the relative Bennequin number of the
    cabled subdiagram must equal the weighted sum of the original
    relative Bennequin numbers, and also the subdiagram's Bennequin
    number plus half its crossing count with the rest; all exact.
    """
    _check_limits(max_strands, max_len, exhaustive=False)
    _check_samples(samples)
    start = time.perf_counter()
    result = SuiteResult(suite="linearity", checked=0)
    rng = random.Random(seed)
    produced = 0
    while produced < samples:
        n = rng.randint(2, max_strands)
        word = random_word(rng, n, rng.randint(0, max_len))
        profile = closure_profile(word)
        C = tuple(rng.randint(0, max_coeff) for _ in range(profile.r))
        if not any(C):
            continue
        produced += 1
        expected = sum(
            C[i - 1] * relative_bennequin(word, i)
            for i in range(1, profile.r + 1)
        )
        pair = cable_pair(word, C)
        direct = relative_bennequin_subset(pair.lprime, pair.subset)
        new_profile = closure_profile(pair.lprime)
        cross = sum(
            new_profile.cr[i - 1][j - 1]
            for i in pair.subset
            for j in range(1, new_profile.r + 1)
            if j not in pair.subset
        )
        via_half = bennequin_number(pair.lprime, pair.subset) + cross // 2
        result.checked += 2
        label = f"{_label(word)} on {n} with C={C}"
        if cross % 2:
            result.failures.append(f"odd crossing total: {label}")
        if direct != expected:
            result.failures.append(f"{label}: subset {direct} != weighted {expected}")
        if via_half != expected:
            result.failures.append(f"{label}: half-count {via_half} != {expected}")
    result.elapsed = time.perf_counter() - start
    return result


def _canon_rotation(codes: tuple[int, ...]) -> tuple[int, ...]:
    if not codes:
        return codes
    return min(codes[t:] + codes[:t] for t in range(len(codes)))


def verify_morton3(
    max_len: int = 6, budget: int = DEFAULT_BAND_BUDGET
) -> SuiteResult:
    """The framing bound e_P <= 2 neg on certified-minimal 3-braid band words.

    Sweeps one representative per rotation class of band words up to the
    given length; words whose minimization stays uncertified within the
    budget are counted but not judged.
    """
    if max_len > 8:
        raise ValueError("band sweep length ceiling is 8")
    start = time.perf_counter()
    result = SuiteResult(suite="morton3", checked=0)
    certified = 0
    alphabet = (1, 2, 3, -1, -2, -3)
    for length in range(max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            if _canon_rotation(combo) != combo:
                continue
            letters = []
            for code in combo:
                i, j = {1: (1, 2), 2: (2, 3), 3: (1, 3)}[abs(code)]
                letters.append(band_gen(i, j, 1 if code > 0 else -1))
            word = BraidWord(3, tuple(letters))
            report = morton_check_3braid(word, budget=budget)
            result.checked += 1
            if report.certified:
                certified += 1
                if not report.holds:
                    result.failures.append(
                        f"{_label(word)}: minimal {_label(report.minimal)} has "
                        f"e_P={report.e_p} > 2*neg={2 * report.neg_b}"
                    )
    result.details["certified"] = certified
    result.elapsed = time.perf_counter() - start
    return result


def verify_kanda(k: int = 5, max_l: int = 6) -> SuiteResult:
    """The twist family s2^-l s1^k: vanishing, recursion, signs, gap.

    Checks that P(0, z) vanishes exactly at l = 1, that the l = 2 value
    is the 2-braid value divided by z, that the cofactor polynomial f_l
    has all-negative coefficients for odd l >= 3 and all-positive ones
    for even l, that the maximality certificate fires for every l >= 2,
    and that the gap between the norm value and the maximal Bennequin
    number grows linearly with l.
    """
    if k < 1 or max_l < 1:
        raise ValueError("limits must be positive")
    if k > 12 or max_l > 12:
        raise ValueError("twist family ceilings are k, l <= 12")
    start = time.perf_counter()
    result = SuiteResult(suite="kanda", checked=0)
    base = eval_v0(homfly_p(torus_word(k)))
    if not base:
        result.failures.append(f"2-braid value P(0,z)(s1^{k}) vanished")
    gaps = {}
    for l in range(1, max_l + 1):
        word = kanda_word(l, k)
        p0 = eval_v0(homfly_p(word))
        cert = max_bennequin_certificate(word)
        result.checked += 1
        if l == 1:
            if p0:
                result.failures.append(f"l=1: P(0,z) nonzero: {p0}")
            if cert.certified:
                result.failures.append("l=1: certificate fired on vanishing P(0,z)")
            continue
        if not cert.certified:
            result.failures.append(f"l={l}: certificate did not fire")
            continue
        if l == 2 and p0 != base.shift(dz=-1):
            result.failures.append(f"l=2: P(0,z) is not the 2-braid value over z")
        f_l = exact_div(p0, base)
        coeffs = list(f_l.terms.values())
        if l % 2 == 0 and not all(c > 0 for c in coeffs):
            result.failures.append(f"l={l}: f_l has a non-positive coefficient")
        if l % 2 == 1 and not all(c < 0 for c in coeffs):
            result.failures.append(f"l={l}: f_l has a non-negative coefficient")
        max_bennequin = bennequin_number(word)
        norm_value = -seifert_euler(word).chi
        gaps[l] = norm_value - max_bennequin
    expected_gaps = {l: 2 * l for l in gaps}
    if gaps != expected_gaps:
        result.failures.append(f"gap growth broke: {gaps} != {expected_gaps}")
    result.details["gaps"] = {str(l): g for l, g in sorted(gaps.items())}
    result.elapsed = time.perf_counter() - start
    return result


_SUITES = {
    "skein": verify_skein,
    "mfw": verify_mfw,
    "homogeneous": verify_homogeneous,
    "linearity": verify_linearity,
    "morton3": verify_morton3,
    "kanda": verify_kanda,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    """Dispatch a verification suite by name."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(_SUITES)}")
    return _SUITES[name](**kwargs)


# ---------------------------------------------------------------------------
# benchmarks

@dataclass
class BenchRow:
    family: str
    label: str
    n: int
    length: int
    trace_seconds: float
    oracle_seconds: float
    equal: bool
    terms: int


def _bench_words(family: str, limit: int, seed: int) -> list[tuple[str, BraidWord]]:
    if family == "torus2":
        return [(f"s1^{k}", torus_word(k)) for k in range(1, limit + 1)]
    if family == "torus3":
        return [
            (f"(s1 s2)^{k}", from_codes(3, [1, 2] * k)) for k in range(1, limit + 1)
        ]
    if family == "random":
        rng = random.Random(seed)
        words = []
        for idx in range(limit):
            signs = {1: rng.choice((1, -1)), 2: rng.choice((1, -1))}
            length = rng.randint(2, 8)
            codes = [g * signs[g] for g in (rng.choice((1, 2)) for _ in range(length))]
            words.append((f"random-{idx}", from_codes(3, codes)))
        return words
    raise ValueError(f"unknown family {family!r}; choose torus2, torus3 or random")


def bench_family(family: str, limit: int = 6, seed: int = 0) -> list[BenchRow]:
    """Time the trace evaluator against the skein oracle on one family.

    Caches are cleared before each measurement so both columns pay their
    full cost; the polynomials must agree exactly.
    """
    rows = []
    for label, word in _bench_words(family, limit, seed):
        clear_caches()
        t0 = time.perf_counter()
        via_trace = homfly_p(word)
        t1 = time.perf_counter()
        clear_caches()
        t2 = time.perf_counter()
        via_oracle = skein_oracle(word)
        t3 = time.perf_counter()
        rows.append(
            BenchRow(
                family=family,
                label=label,
                n=word.n,
                length=len(word.letters),
                trace_seconds=t1 - t0,
                oracle_seconds=t3 - t2,
                equal=via_trace == via_oracle,
                terms=len(via_trace.terms),
            )
        )
    return rows


def bench_families() -> list[str]:
    return ["torus2", "torus3", "random"]
