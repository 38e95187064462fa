"""The braid polynomial P(v, z) and everything derived from it.

``P`` is the unique braid-word invariant with

    P(w si) - P(w si^-1) = z P(w)          for 1 <= i <= n-1,
    P(w sn)              = P(w)            for w on n strands,
    P(w sn^-1)           = v^2 P(w),
    P(id_n)              = ((1 - v^2)/z)^n,

invariant under braid relations and conjugation.  It rescales to the
HOMFLY polynomial of the closure via

    v^(beta_t) * P = ((v^-1 - v)/z) * H,

where beta_t is the Bennequin number of the word.

Two independent evaluators are provided.

The production path linearizes the word in the basis of positive
permutation braids: multiplying a basis element by a generator either
extends it or, at a descent, splits into two terms using the quadratic
consequence P(w si^2) = P(w) + z P(w si) of the skein relation, with
inverse generators handled by si^-1 = si - z.  The resulting linear
combination is evaluated strand by strand: a basis permutation fixing
the top strand splits off one factor (1 - v^2)/z, and any other basis
permutation rewrites into a reduced word carrying the top generator
exactly once, which cyclic invariance and the stabilization rule remove.
This is polynomial time in the word length for a fixed strand count.

The oracle path works on raw words and serves as a cross-check: it
eliminates negative letters with P(w si^-1) = P(w si) - z P(w), exposes
squares in non-reduced positive words by a breadth-first search over
braid moves, reduces them with the quadratic relation, and destabilizes
reduced positive words.  Its cost is exponential in the worst case and
governed by an explicit budget: a budget overrun raises, it never
returns a wrong value.

Both evaluators memoize on the cyclic canonical form (lexicographically
least rotation) of the letter sequence, which is sound because P is
conjugation invariant.  The caches are fill-once maps whose entries
never change, so concurrent idempotent filling is harmless.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .bennequin import bennequin_number
from .braid import (
    BraidWord,
    band_gen,
    from_codes,
    generator_profile,
    standard_codes,
)
from .poly import LaurentVZ, eval_v0, exact_div, min_v_degree

__all__ = [
    "Band3Result",
    "BudgetExceededError",
    "CertificateReport",
    "HomflyReport",
    "MfwReport",
    "MortonReport",
    "PHI",
    "TopTermReport",
    "TraceElement",
    "band_minimize",
    "clear_caches",
    "conway",
    "homfly_h",
    "homfly_p",
    "homfly_report",
    "homogeneous_top_term",
    "linearize",
    "max_bennequin_certificate",
    "mfw_check",
    "morton_check_3braid",
    "skein_oracle",
    "trace_value",
]

#: The value of one free closed strand, (1 - v^2)/z.
PHI = LaurentVZ({(0, -1): 1, (2, -1): -1})

_Z = LaurentVZ.term(1, 0, 1)
_NEG_Z = LaurentVZ.term(-1, 0, 1)
_ONE = LaurentVZ.one()
_ONE_MINUS_V2 = LaurentVZ({(0, 0): 1, (2, 0): -1})

DEFAULT_ORACLE_BUDGET = 1_000_000
DEFAULT_BAND_BUDGET = 50_000


class BudgetExceededError(RuntimeError):
    """Raised when a budgeted evaluation runs out of work credits."""


# ---------------------------------------------------------------------------
# permutation helpers (0-based tuples; entry a is where top position a lands)

def _perm_of(n: int, codes: tuple[int, ...]) -> tuple[int, ...]:
    occ = list(range(n))
    for code in codes:
        k = abs(code)
        occ[k - 1], occ[k] = occ[k], occ[k - 1]
    image = [0] * n
    for position, strand in enumerate(occ):
        image[strand] = position
    return tuple(image)


def _coxeter_length(perm: tuple[int, ...]) -> int:
    return sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )


def _reduced_word(perm: tuple[int, ...]) -> list[int]:
    """A reduced word (1-based letters, left to right) for a permutation."""
    w = list(perm)
    rev: list[int] = []
    pos = [0] * len(w)
    for position, value in enumerate(w):
        pos[value] = position
    while True:
        for i in range(1, len(w)):
            if pos[i - 1] > pos[i]:
                rev.append(i)
                pa, pb = pos[i - 1], pos[i]
                w[pa], w[pb] = w[pb], w[pa]
                pos[i - 1], pos[i] = pb, pa
                break
        else:
            break
    rev.reverse()
    return rev


def _canon(codes: tuple[int, ...]) -> tuple[int, ...]:
    if not codes:
        return codes
    return min(codes[t:] + codes[:t] for t in range(len(codes)))


# ---------------------------------------------------------------------------
# production evaluator: permutation-braid linearization plus strand traces

@dataclass
class TraceElement:
    """A word linearized over the positive permutation braids on n strands."""

    n: int
    comb: dict[tuple[int, ...], LaurentVZ]


def _acc(out: dict, key: tuple[int, ...], value: LaurentVZ) -> None:
    got = out.get(key)
    total = value if got is None else got + value
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def _append_letter(
    comb: dict[tuple[int, ...], LaurentVZ], i: int, sign: int
) -> dict[tuple[int, ...], LaurentVZ]:
    a, b = i - 1, i
    out: dict[tuple[int, ...], LaurentVZ] = {}
    for w, c in comb.items():
        pa = w.index(a)
        pb = w.index(b)
        lst = list(w)
        lst[pa] = b
        lst[pb] = a
        w2 = tuple(lst)
        ascent = pa < pb
        if sign > 0:
            _acc(out, w2, c)
            if not ascent:
                _acc(out, w, c * _Z)
        else:
            _acc(out, w2, c)
            if ascent:
                _acc(out, w, c * _NEG_Z)
    return out


def linearize(word: BraidWord) -> TraceElement:
    """Expand a word into the permutation-braid basis."""
    codes = standard_codes(word)
    comb: dict[tuple[int, ...], LaurentVZ] = {tuple(range(word.n)): _ONE}
    for code in codes:
        comb = _append_letter(comb, abs(code), 1 if code > 0 else -1)
    return TraceElement(n=word.n, comb=comb)


_BASIS_CACHE: dict[tuple[int, tuple[int, ...]], LaurentVZ] = {}


def _basis_value(n: int, w: tuple[int, ...]) -> LaurentVZ:
    key = (n, w)
    hit = _BASIS_CACHE.get(key)
    if hit is not None:
        return hit
    if n == 0:
        value = _ONE
    elif w[n - 1] == n - 1:
        value = PHI * _basis_value(n - 1, w[: n - 1])
    else:
        # Write w as u * s(n-1) * v with u, v fixing the top strand and
        # lengths adding: u shifts position k = w^-1(n-1) to the right
        # edge and v is w with that position deleted.  Conjugation and
        # destabilization then reduce to the product T_v T_u one strand
        # down.
        k = w.index(n - 1)
        v_line = w[:k] + w[k + 1 :]
        comb: dict[tuple[int, ...], LaurentVZ] = {v_line: _ONE}
        for letter in range(k + 1, n - 1):
            comb = _append_letter(comb, letter, 1)
        value = LaurentVZ.zero()
        for w2, c in comb.items():
            value = value + c * _basis_value(n - 1, w2)
    _BASIS_CACHE[key] = value
    return value


def trace_value(element: TraceElement) -> LaurentVZ:
    """Evaluate a linearized word by recursive strand elimination."""
    total = LaurentVZ.zero()
    for w, c in element.comb.items():
        total = total + c * _basis_value(element.n, w)
    return total


_P_CACHE: dict[tuple[int, tuple[int, ...]], LaurentVZ] = {}


def homfly_p(word: BraidWord) -> LaurentVZ:
    """The braid polynomial P(v, z) of a word, by the trace evaluator.

    >>> from braidnorms.braid import parse_braid
    >>> print(homfly_p(parse_braid("", 1)))
    -1*v^2*z^-1 + 1*v^0*z^-1
    """
    codes = standard_codes(word)
    key = (word.n, _canon(codes))
    hit = _P_CACHE.get(key)
    if hit is not None:
        return hit
    value = trace_value(linearize(word))
    # the trace of a unit never vanishes; a zero here is a bug upstream
    assert value, "braid polynomial vanished"
    _P_CACHE[key] = value
    return value


# ---------------------------------------------------------------------------
# oracle evaluator: direct skein recursion on words

_ORACLE_CACHE: dict[tuple[int, tuple[int, ...]], LaurentVZ] = {}


def _charge(state: list[int], amount: int = 1) -> None:
    state[0] -= amount
    if state[0] < 0:
        raise BudgetExceededError("skein evaluation budget exhausted")


def _expose_square(codes: tuple[int, ...], state: list[int]) -> tuple[int, ...]:
    """Braid-move rewriting of a non-reduced positive word until a square appears."""
    seen = {codes}
    queue = deque([codes])
    while queue:
        w = queue.popleft()
        for t in range(len(w) - 1):
            if w[t] == w[t + 1]:
                return w
        for t in range(len(w) - 1):
            a, b = w[t], w[t + 1]
            if abs(a - b) >= 2:
                nxt = w[:t] + (b, a) + w[t + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    _charge(state)
                    queue.append(nxt)
        for t in range(len(w) - 2):
            a, b, c = w[t], w[t + 1], w[t + 2]
            if a == c and abs(a - b) == 1:
                nxt = w[:t] + (b, a, b) + w[t + 3 :]
                if nxt not in seen:
                    seen.add(nxt)
                    _charge(state)
                    queue.append(nxt)
    raise AssertionError("non-reduced positive word admits no square")


def _oracle(n: int, codes: tuple[int, ...], state: list[int]) -> LaurentVZ:
    key = (n, _canon(codes))
    hit = _ORACLE_CACHE.get(key)
    if hit is not None:
        return hit
    _charge(state)
    if not codes:
        value = PHI**n
    else:
        neg_idx = next((t for t, c in enumerate(codes) if c < 0), None)
        if neg_idx is not None:
            # rotate the negative letter to the end and trade it for a
            # positive letter minus a z-multiple of the shorter word
            rot = codes[neg_idx + 1 :] + codes[: neg_idx + 1]
            body = rot[:-1]
            i = -rot[-1]
            value = _oracle(n, body + (i,), state) - _Z * _oracle(n, body, state)
        else:
            perm = _perm_of(n, codes)
            if len(codes) > _coxeter_length(perm):
                sq = _expose_square(codes, state)
                t = next(t for t in range(len(sq) - 1) if sq[t] == sq[t + 1])
                rot = sq[t + 2 :] + sq[: t + 2]
                body = rot[:-2]
                i = rot[-1]
                value = _oracle(n, body, state) + _Z * _oracle(
                    n, body + (i,), state
                )
            elif perm[n - 1] == n - 1:
                # free top strand
                value = PHI * _oracle(n - 1, codes, state)
            else:
                # rewrite to end in a descending run holding the top
                # generator once, rotate, destabilize
                m0 = perm[n - 1]
                run_inv = {m0: n - 1}
                for b in range(m0 + 1, n):
                    run_inv[b] = b - 1
                rho = tuple(run_inv.get(perm[a], perm[a]) for a in range(n))
                tail = tuple(range(n - 2, m0, -1))
                body = tail + tuple(_reduced_word(rho))
                value = _oracle(n - 1, body, state)
    _ORACLE_CACHE[key] = value
    return value


def skein_oracle(word: BraidWord, budget: int = DEFAULT_ORACLE_BUDGET) -> LaurentVZ:
    """Evaluate P by direct skein recursion; exponential, budgeted, exact.

    Intended for short words; raises BudgetExceededError rather than
    approximating when the recursion tree outgrows the budget.
    """
    state = [budget]
    return _oracle(word.n, standard_codes(word), state)


def clear_caches() -> None:
    """Drop all memoized values (used for honest benchmarking)."""
    _BASIS_CACHE.clear()
    _P_CACHE.clear()
    _ORACLE_CACHE.clear()


# ---------------------------------------------------------------------------
# derived invariants

@dataclass(frozen=True)
class HomflyReport:
    """P, H and the degree data read off them for one word."""

    P: LaurentVZ
    H: LaurentVZ
    e: int
    e_p: int
    conway: LaurentVZ
    beta_t: int


def homfly_h(word: BraidWord) -> LaurentVZ:
    """The HOMFLY polynomial of the closure, rescaled exactly from P."""
    p = homfly_p(word)
    bt = bennequin_number(word)
    return exact_div(p.shift(dv=bt + 1, dz=1), _ONE_MINUS_V2)


def conway(word: BraidWord) -> LaurentVZ:
    """The one-variable Alexander polynomial of the closure, Conway form.

    Divides z * P exactly by (1 - v^2) and substitutes v := 1.
    """
    quotient = exact_div(homfly_p(word).shift(dz=1), _ONE_MINUS_V2)
    collapsed: dict[tuple[int, int], int] = {}
    for (_, b), c in quotient.terms.items():
        key = (0, b)
        collapsed[key] = collapsed.get(key, 0) + c
    return LaurentVZ(collapsed)


def homfly_report(word: BraidWord) -> HomflyReport:
    p = homfly_p(word)
    h = homfly_h(word)
    return HomflyReport(
        P=p,
        H=h,
        e=min_v_degree(h),
        e_p=min_v_degree(p),
        conway=conway(word),
        beta_t=bennequin_number(word),
    )


@dataclass(frozen=True)
class MfwReport:
    """The Bennequin bound beta_t + 1 <= e on the minimal v-degree of H."""

    beta_t: int
    e: int
    holds: bool
    slack: int


def mfw_check(word: BraidWord) -> MfwReport:
    """Check beta_t + 1 <= e; a failure would signal an implementation bug."""
    bt = bennequin_number(word)
    e = min_v_degree(homfly_h(word))
    return MfwReport(beta_t=bt, e=e, holds=bt + 1 <= e, slack=e - bt - 1)


@dataclass(frozen=True)
class CertificateReport:
    """Maximality certificate for the Bennequin number of a word.

    When P(0, z) does not vanish, no braid representative of the closure
    has a larger Bennequin number.
    """

    certified: bool
    p0: LaurentVZ


def max_bennequin_certificate(word: BraidWord) -> CertificateReport:
    p0 = eval_v0(homfly_p(word))
    return CertificateReport(certified=bool(p0), p0=p0)


@dataclass(frozen=True)
class TopTermReport:
    """Predicted versus computed highest z-term of a homogeneous word."""

    predicted: LaurentVZ
    observed: LaurentVZ
    match: bool


def homogeneous_top_term(word: BraidWord) -> TopTermReport:
    """The unique top z-term of P for a homogeneous word.

    For a homogeneous word of expanded length L on n strands with n_n
    generators occurring negatively, the coefficient of z^(L - n) is
    (-1)^(neg - n_n) (1 - v^2) v^(2 n_n) and nothing higher occurs.
    """
    profile = generator_profile(word)
    if not profile.homogeneous:
        raise ValueError("word is not homogeneous")
    length = profile.pos + profile.neg
    sign = -1 if (profile.neg - profile.n_n) % 2 else 1
    zdeg = length - word.n
    predicted = LaurentVZ(
        {(2 * profile.n_n, zdeg): sign, (2 * profile.n_n + 2, zdeg): -sign}
    )
    p = homfly_p(word)
    top = max(b for _, b in p.terms)
    observed = LaurentVZ({e: c for e, c in p.terms.items() if e[1] == top})
    return TopTermReport(
        predicted=predicted, observed=observed, match=predicted == observed
    )


# ---------------------------------------------------------------------------
# three-strand band words: shortest representatives and the framing bound

_BAND3_CODE = {(1, 2): 1, (2, 3): 2, (1, 3): 3}
_BAND3_PAIR = {1: (1, 2), 2: (2, 3), 3: (1, 3)}

# the three equal positive pairs a(1,2)a(1,3) = a(2,3)a(1,2) = a(1,3)a(2,3),
# and the inverse pairs obtained by reversing and negating them
_POSITIVE_FORMS = ((1, 3), (2, 1), (3, 2))
_NEGATIVE_FORMS = ((-3, -1), (-1, -2), (-2, -3))


@dataclass(frozen=True)
class Band3Result:
    """Shortest band word found, and whether the search ran to completion."""

    word: BraidWord
    certified: bool


def _band3_codes(word: BraidWord) -> tuple[int, ...]:
    if word.n != 3:
        raise ValueError("band rewriting is implemented for 3 strands only")
    return tuple(
        _BAND3_CODE[(letter.i, letter.j)] * letter.sign for letter in word.letters
    )


def _band3_word(codes: tuple[int, ...]) -> BraidWord:
    letters = []
    for code in codes:
        i, j = _BAND3_PAIR[abs(code)]
        letters.append(band_gen(i, j, 1 if code > 0 else -1))
    return BraidWord(3, tuple(letters))


def _free_cancel(codes: tuple[int, ...]) -> tuple[int, ...]:
    out = list(codes)
    changed = True
    while changed:
        changed = False
        t = 0
        while t < len(out) - 1:
            if out[t] == -out[t + 1]:
                del out[t : t + 2]
                changed = True
                t = max(t - 1, 0)
            else:
                t += 1
        if len(out) >= 2 and out[0] == -out[-1]:
            out = out[1:-1]
            changed = True
    return tuple(out)


def _band3_successors(w: tuple[int, ...], cap: int) -> list[tuple[int, ...]]:
    succ = []
    length = len(w)
    if length:
        succ.append(w[1:] + w[:1])
        succ.append(w[-1:] + w[:-1])
    for t in range(length - 1):
        pair = w[t : t + 2]
        if pair[0] == -pair[1]:
            succ.append(w[:t] + w[t + 2 :])
        for forms in (_POSITIVE_FORMS, _NEGATIVE_FORMS):
            if pair in forms:
                for other in forms:
                    if other != pair:
                        succ.append(w[:t] + other + w[t + 2 :])
    if length + 2 <= cap:
        for t in range(length + 1):
            for x in (1, 2, 3, -1, -2, -3):
                succ.append(w[:t] + (x, -x) + w[t:])
    return succ


def band_minimize(
    word: BraidWord,
    budget: int = DEFAULT_BAND_BUDGET,
    slack: int = 2,
) -> Band3Result:
    """Breadth-first search for a shortest band representative on 3 strands.

    Moves: the presentation relations in both directions, free
    cancellation and bounded insertion of inverse pairs, and cyclic
    rotation.  The search explores words up to ``slack`` letters longer
    than the best found; it is certified when it exhausts that space
    within the budget, and otherwise returns the best word seen.
    """
    start = _free_cancel(_band3_codes(word))
    best = start
    seen = {start}
    queue = deque([start])
    nodes = 0
    certified = True
    while queue:
        w = queue.popleft()
        cap = len(best) + slack
        if len(w) > cap:
            continue
        for nxt in _band3_successors(w, cap):
            nxt = _free_cancel(nxt)
            if nxt in seen:
                continue
            nodes += 1
            if nodes > budget:
                certified = False
                queue.clear()
                break
            seen.add(nxt)
            if len(nxt) < len(best):
                best = nxt
            if len(nxt) <= len(best) + slack:
                queue.append(nxt)
    return Band3Result(word=_band3_word(best), certified=certified)


@dataclass(frozen=True)
class MortonReport:
    """The framing-degree bound e_P <= 2 neg on a shortest band word."""

    e_p: int
    neg_b: int
    holds: bool
    certified: bool
    minimal: BraidWord


def morton_check_3braid(
    word: BraidWord, budget: int = DEFAULT_BAND_BUDGET
) -> MortonReport:
    """Minimize a 3-strand band word, then compare e_P with 2 neg.

    The bound holds for genuinely shortest words; ``certified`` carries
    the minimizer's completion flag.
    """
    if word.n != 3:
        raise ValueError("3-strand words only")
    result = band_minimize(word, budget=budget)
    minimal = result.word
    neg_b = sum(1 for letter in minimal.letters if letter.sign < 0)
    e_p = min_v_degree(homfly_p(minimal))
    return MortonReport(
        e_p=e_p,
        neg_b=neg_b,
        holds=e_p <= 2 * neg_b,
        certified=result.certified,
        minimal=minimal,
    )
