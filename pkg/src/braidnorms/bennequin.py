"""Bennequin numbers, the cabled diagram pair, and Thurston norm brackets.

The Bennequin number of a braid is writhe minus strand count,
pos - neg - n; it bounds -chi of every surface spanning the closure from
below.  The relative Bennequin number of one component credits half of
each crossing with the other components:

    rel(i) = cr(i, i) - n_i + sum over j != i of lk(i, j)

and extends additively to sublinks, with the full sum equal to the plain
Bennequin number.

A nonnegative integer class C = (C_1, ..., C_r), one entry per
component, selects a surface class in the link exterior.  The cabled
pair replaces each component having C_i > 0 by C_i parallel strands and
appends, per such component, a corrective twist on the cable of its
first strand with exponent p_i - C_i * cr(i, i), where

    p_i = - sum over j != i of C_j * lk(i, j),

so that the new diagram bounds the class-C surface in the classical
sense.  Deleting the untouched C_i = 0 components leaves the subdiagram
whose Bennequin data bounds the Thurston norm of C from below; the
punctured component surfaces bound it from above.  Both bounds are exact
integers; when they agree the norm is determined.

Classes with negative entries are rejected: fixing them requires
reorienting components and re-braiding the diagram, which this library
does not do.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .braid import BraidWord, from_codes, generator_profile, standard_codes
from .diagram import closure_profile, linking_matrix

__all__ = [
    "CablePair",
    "NormBracket",
    "band_positive_bracket",
    "bennequin_number",
    "cable_pair",
    "class_lower_bound",
    "relative_bennequin",
    "relative_bennequin_subset",
    "scholium_lower_bound",
    "thurston_bracket",
]


@dataclass(frozen=True)
class CablePair:
    """The cabled diagram and its distinguished subdiagram.

    ``lprime`` is the cabled closed braid; ``subset`` lists the
    components of ``lprime`` that survive deleting the C_i = 0
    components; ``origin`` maps each component of ``lprime`` (index
    k-1) to the component of the input diagram it cables.  ``p`` holds
    the framing integers p_i and ``m`` the strand offset, at the bottom
    of the braid, of the cable of each component's first strand: the
    corrective twist for component i acts on strands m_i+1 .. m_i+C_i.
    """

    lprime: BraidWord
    subset: frozenset[int]
    origin: tuple[int, ...]
    p: tuple[int, ...]
    m: tuple[int, ...]


@dataclass(frozen=True)
class NormBracket:
    """Lower and upper bounds for the Thurston norm of one class.

    ``lower_source`` is "corollary" for the weighted relative Bennequin
    sum, "scholium" when the cabled-subdiagram bound with its linking
    correction is strictly better, and "direct" when the value comes
    from a surface argument that pins the norm outright.  The upper
    bound is tagged "generalized_seifert" when a single diagram surface
    realizes it and "seminorm_sum" when it is a weighted sum of unit
    classes.
    """

    lower: int
    upper: int
    lower_source: str
    upper_source: str
    determined: bool


def _validate_subset(subset: Iterable[int], r: int) -> frozenset[int]:
    ids = frozenset(subset)
    for i in ids:
        if not 1 <= i <= r:
            raise ValueError(f"component {i} out of range (diagram has {r})")
    return ids


def _validate_class(C: Sequence[int], r: int) -> tuple[int, ...]:
    C = tuple(C)
    if len(C) != r:
        raise ValueError(f"class has {len(C)} entries for {r} components")
    if any(c < 0 for c in C):
        raise ValueError(
            "negative class entries are not supported: reorient the "
            "components and supply a re-braided diagram instead"
        )
    return C


def bennequin_number(word: BraidWord, subset: Iterable[int] | None = None) -> int:
    """Writhe minus strand count, optionally of a component subdiagram.

    With a subset of component ids, only crossings between subset
    strands and only subset strands are counted: the result is the
    Bennequin number of the diagram left after deleting the other
    components.
    """
    codes = standard_codes(word)
    if subset is None:
        writhe = sum(1 if c > 0 else -1 for c in codes)
        return writhe - word.n
    profile = closure_profile(word)
    ids = _validate_subset(subset, profile.r)
    occ = list(range(1, word.n + 1))
    writhe = 0
    for code in codes:
        k = abs(code)
        a, b = occ[k - 1], occ[k]
        if profile.comp[a - 1] in ids and profile.comp[b - 1] in ids:
            writhe += 1 if code > 0 else -1
        occ[k - 1], occ[k] = occ[k], occ[k - 1]
    n_sub = sum(profile.strands[i - 1] for i in ids)
    return writhe - n_sub


def relative_bennequin(word: BraidWord, i: int) -> int:
    """cr(i, i) - n_i + total linking of component i with the rest.

    For a knot this is the plain Bennequin number.
    """
    profile = closure_profile(word)
    if not 1 <= i <= profile.r:
        raise ValueError(f"component {i} out of range (diagram has {profile.r})")
    lk = linking_matrix(profile)
    return (
        profile.cr[i - 1][i - 1]
        - profile.strands[i - 1]
        + sum(lk[i - 1][j] for j in range(profile.r) if j != i - 1)
    )


def relative_bennequin_subset(word: BraidWord, subset: Iterable[int]) -> int:
    """Sum of relative Bennequin numbers over a set of components.

    Over all components this equals the Bennequin number of the word.
    """
    profile = closure_profile(word)
    ids = _validate_subset(subset, profile.r)
    return sum(relative_bennequin(word, i) for i in sorted(ids))


def cable_pair(word: BraidWord, C: Sequence[int]) -> CablePair:
    """Cable each component C_i-fold and append the corrective twists.

    Every crossing of the input blows up into a block of parallel
    crossings of the same sign, the cable strands passing one at a time,
    rightmost first.  Components with C_i = 0 keep their single strands;
    they belong to the cabled diagram but not to the subdiagram.
    Requires C_i >= 0 with at least one positive entry.
    """
    profile = closure_profile(word)
    C = _validate_class(C, profile.r)
    if not any(C):
        raise ValueError("the zero class has no cabled diagram")
    lk = linking_matrix(profile)
    n = word.n
    mult = [C[profile.comp[s - 1] - 1] or 1 for s in range(1, n + 1)]

    out: list[int] = []
    occ = list(range(1, n + 1))
    for code in standard_codes(word):
        k = abs(code)
        sign = 1 if code > 0 else -1
        a_width = mult[occ[k - 1] - 1]
        b_width = mult[occ[k] - 1]
        base = sum(mult[s - 1] for s in occ[: k - 1])
        for row in range(a_width):
            start = base + a_width - row
            for t in range(b_width):
                out.append((start + t) * sign)
        occ[k - 1], occ[k] = occ[k], occ[k - 1]

    p = tuple(
        -sum(C[j] * lk[i][j] for j in range(profile.r) if j != i)
        for i in range(profile.r)
    )
    m = []
    for i in range(1, profile.r + 1):
        first = min(s for s in range(1, n + 1) if profile.comp[s - 1] == i)
        pos = occ.index(first)
        m.append(sum(mult[s - 1] for s in occ[:pos]))
    for i in range(1, profile.r + 1):
        c = C[i - 1]
        if c < 2:
            continue
        exponent = p[i - 1] - c * profile.cr[i - 1][i - 1]
        run = list(range(m[i - 1] + 1, m[i - 1] + c))
        if exponent >= 0:
            out.extend(run * exponent)
        else:
            out.extend([-x for x in reversed(run)] * (-exponent))

    total = sum(mult)
    lprime = from_codes(total, out)

    top_offset = [0] * (n + 1)
    for s in range(1, n + 1):
        top_offset[s] = top_offset[s - 1] + mult[s - 1]
    origin_strand = [0] * total
    for s in range(1, n + 1):
        for t in range(top_offset[s - 1] + 1, top_offset[s] + 1):
            origin_strand[t - 1] = s
    new_profile = closure_profile(lprime)
    origin = [0] * new_profile.r
    for strand in range(1, total + 1):
        cid = new_profile.comp[strand - 1]
        src = profile.comp[origin_strand[strand - 1] - 1]
        if origin[cid - 1] and origin[cid - 1] != src:
            raise AssertionError("cabled component mixes source components")
        origin[cid - 1] = src
    subset = frozenset(
        cid for cid in range(1, new_profile.r + 1) if C[origin[cid - 1] - 1] > 0
    )
    return CablePair(
        lprime=lprime,
        subset=subset,
        origin=tuple(origin),
        p=p,
        m=tuple(m),
    )


def class_lower_bound(word: BraidWord, C: Sequence[int]) -> int:
    """The weighted sum of relative Bennequin numbers, sum C_i * rel(i)."""
    profile = closure_profile(word)
    C = _validate_class(C, profile.r)
    return sum(
        C[i - 1] * relative_bennequin(word, i) for i in range(1, profile.r + 1)
    )


def scholium_lower_bound(word: BraidWord, C: Sequence[int]) -> int:
    """Bennequin number of the cabled subdiagram plus linking corrections.

    The correction adds, for every deleted component, the absolute total
    linking of that component with the class; it beats the weighted
    relative sum whenever some deleted component links the class
    negatively.
    """
    profile = closure_profile(word)
    C = _validate_class(C, profile.r)
    if not any(C):
        return 0
    pair = cable_pair(word, C)
    lk = linking_matrix(profile)
    correction = sum(
        abs(sum(C[j] * lk[i][j] for j in range(profile.r)))
        for i in range(profile.r)
        if C[i] == 0
    )
    return bennequin_number(pair.lprime, pair.subset) + correction


def thurston_bracket(word: BraidWord, C: Sequence[int]) -> NormBracket:
    """Bracket the Thurston norm of the class C of the closure exterior.

    The upper bound sums the punctured component surfaces with weights
    C_j; the lower bound is the better of the weighted relative
    Bennequin sum and the cabled-subdiagram bound.  For a homogeneous
    word the Seifert surface is a fibre and the upper bound is the norm
    itself, so the bracket closes.

    Components whose punctured surface is a disk (n_j - u_j - l_j = 1)
    make chi_minus degenerate and are rejected; this covers in
    particular unknotted components unlinked from the rest.
    """
    profile = closure_profile(word)
    C = _validate_class(C, profile.r)
    unit_values = []
    for j in range(profile.r):
        chi = profile.strands[j] - profile.over_cross[j] - profile.self_cross[j]
        if chi == 1:
            raise ValueError(
                f"component {j + 1} spans an unpierced disk; the closure has "
                "an unknotted unlinked piece and the bracket does not apply"
            )
        unit_values.append(-chi)
    upper = sum(c * value for c, value in zip(C, unit_values))
    if not any(C):
        return NormBracket(0, 0, "corollary", "seminorm_sum", True)
    cor = class_lower_bound(word, C)
    sch = scholium_lower_bound(word, C)
    lower, lower_source = (cor, "corollary") if cor >= sch else (sch, "scholium")
    if generator_profile(word).homogeneous and lower < upper:
        lower, lower_source = upper, "direct"
    if lower > upper:
        raise AssertionError("lower bound exceeded upper bound")
    upper_source = (
        "generalized_seifert"
        if sum(1 for c in C if c) == 1 and max(C) == 1 or all(c == 1 for c in C)
        else "seminorm_sum"
    )
    return NormBracket(lower, upper, lower_source, upper_source, lower == upper)


def band_positive_bracket(word: BraidWord) -> NormBracket:
    """The determined bracket at the all-ones class of a band positive word.

    For a word whose letters are all positive band generators, the band
    surface with chi = n - l realizes the Bennequin bound, so the norm
    of (1, ..., 1) is exactly l - n.  Rejected when some connected piece
    of the band surface is a disk, which would make chi_minus disagree
    with -chi.
    """
    if any(letter.sign < 0 for letter in word.letters):
        raise ValueError("word is not band positive")
    parent = list(range(word.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for letter in word.letters:
        ra, rb = find(letter.i), find(letter.j)
        if ra != rb:
            parent[ra] = rb
    strand_count: dict[int, int] = {}
    band_count: dict[int, int] = {}
    for s in range(1, word.n + 1):
        root = find(s)
        strand_count[root] = strand_count.get(root, 0) + 1
    for letter in word.letters:
        root = find(letter.i)
        band_count[root] = band_count.get(root, 0) + 1
    for root, strands in strand_count.items():
        if strands - band_count.get(root, 0) == 1:
            raise ValueError(
                "a piece of the band surface is a disk; the closure has an "
                "unknotted unlinked piece and the bracket does not apply"
            )
    value = len(word.letters) - word.n
    return NormBracket(value, value, "direct", "generalized_seifert", True)
