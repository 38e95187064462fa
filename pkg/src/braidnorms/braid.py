"""Braid words in the standard and the band generators.

A braid on n strands is a word in the standard generators s1, ..., s(n-1)
(si crosses the strands at positions i and i+1, positively) or in the
band generators a(i,j) for 1 <= i < j <= n, where

    a(i,j) = si^-1 * s(i+1)^-1 * ... * s(j-2)^-1 * s(j-1) * s(j-2) * ... * si

crosses strands i and j behind the strands between them.  The standard
generator si is the band a(i,i+1).  Strand indices are 1-based
throughout.

Text grammar, whitespace separated: ``s<i>`` for a positive standard
letter, ``a<i>,<j>`` for a positive band letter, with an optional
exponent suffix ``^<k>``; a negative ``k`` means the inverse letter
repeated ``|k|`` times and ``k = 0`` expands to nothing.

>>> w = parse_braid("s1^2 a1,3^-1", 3)
>>> print_braid(w)
's1^2 a1,3^-1'
>>> permutation(parse_braid("s1 s2", 3))
(3, 1, 2)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BraidLetter",
    "BraidWord",
    "GeneratorProfile",
    "ParseError",
    "band_gen",
    "band_to_standard",
    "from_codes",
    "generator_profile",
    "parse_braid",
    "perm_cycles",
    "permutation",
    "print_braid",
    "sigma",
    "standard_codes",
]


class ParseError(ValueError):
    """Raised for malformed or out-of-range braid notation."""


@dataclass(frozen=True)
class BraidLetter:
    """One generator or inverse generator.

    ``kind`` is "standard" or "band"; standard letters carry j == i + 1
    so that both kinds expose the pair of strands they cross.
    """

    kind: str
    i: int
    j: int
    sign: int

    def __post_init__(self):
        if self.kind not in ("standard", "band"):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("letter sign must be +1 or -1")
        if self.i < 1 or self.j <= self.i:
            raise ValueError("letter indices must satisfy 1 <= i < j")
        if self.kind == "standard" and self.j != self.i + 1:
            raise ValueError("standard letters cross adjacent strands")

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.kind, self.i, self.j, -self.sign)


def sigma(i: int, sign: int = 1) -> BraidLetter:
    """The standard generator si, or its inverse for sign = -1."""
    return BraidLetter("standard", i, i + 1, sign)


def band_gen(i: int, j: int, sign: int = 1) -> BraidLetter:
    """The band generator a(i,j), or its inverse for sign = -1."""
    return BraidLetter("band", i, j, sign)


@dataclass(frozen=True)
class BraidWord:
    """An ordered word of letters on n strands; may be empty (identity)."""

    n: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.kind == "standard" and letter.i > self.n - 1:
                raise ValueError(
                    f"generator s{letter.i} out of range for {self.n} strands"
                )
            if letter.j > self.n:
                raise ValueError(
                    f"band a{letter.i},{letter.j} out of range for {self.n} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(
            self.n, tuple(letter.inverse() for letter in reversed(self.letters))
        )

    def is_standard(self) -> bool:
        return all(letter.kind == "standard" for letter in self.letters)

    def __str__(self) -> str:
        return print_braid(self)


_TOKEN_RE = re.compile(r"(?:s(\d+)|a(\d+),(\d+))(?:\^(-?\d+))?\Z")


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse braid notation into a word on n strands.

    >>> len(parse_braid("s1^4", 2).letters)
    4
    >>> parse_braid("s3", 3)
    Traceback (most recent call last):
        ...
    braidnorms.braid.ParseError: generator s3 out of range for 3 strands
    """
    if n < 1:
        raise ParseError("strand count must be at least 1")
    letters: list[BraidLetter] = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if m is None:
            raise ParseError(f"malformed token {token!r}")
        si, bi, bj, exp = m.groups()
        k = 1 if exp is None else int(exp)
        if si is not None:
            i = int(si)
            if not 1 <= i <= n - 1:
                raise ParseError(f"generator s{i} out of range for {n} strands")
            base = sigma(i)
        else:
            i, j = int(bi), int(bj)
            if i >= j:
                raise ParseError(f"band token a{i},{j} needs i < j")
            if not 1 <= i < j <= n:
                raise ParseError(f"band a{i},{j} out of range for {n} strands")
            base = band_gen(i, j)
        if k >= 0:
            letters.extend([base] * k)
        else:
            letters.extend([base.inverse()] * (-k))
    return BraidWord(n, tuple(letters))


def print_braid(word: BraidWord) -> str:
    """Render a word in the text grammar, folding runs into exponents.

    parse_braid(print_braid(w), w.n) reproduces w letter for letter.
    """
    parts: list[str] = []
    idx = 0
    letters = word.letters
    while idx < len(letters):
        letter = letters[idx]
        run = 1
        while idx + run < len(letters) and letters[idx + run] == letter:
            run += 1
        base = (
            f"s{letter.i}" if letter.kind == "standard" else f"a{letter.i},{letter.j}"
        )
        e = letter.sign * run
        parts.append(base if e == 1 else f"{base}^{e}")
        idx += run
    return " ".join(parts)


def band_to_standard(word: BraidWord) -> BraidWord:
    """Expand every band letter into its standard-generator word.

    A positive a(i,j) becomes the 2(j-i)-1 letters
    si^-1 ... s(j-2)^-1 s(j-1) s(j-2) ... si; a negative band letter
    becomes the inverse of that expansion.  Standard letters pass
    through unchanged.

    >>> print_braid(band_to_standard(parse_braid("a1,3", 3)))
    's1^-1 s2 s1'
    """
    out: list[BraidLetter] = []
    for letter in word.letters:
        if letter.kind == "standard":
            out.append(letter)
            continue
        i, j = letter.i, letter.j
        expansion = (
            [sigma(t, -1) for t in range(i, j - 1)]
            + [sigma(j - 1, 1)]
            + [sigma(t, 1) for t in range(j - 2, i - 1, -1)]
        )
        if letter.sign < 0:
            expansion = [x.inverse() for x in reversed(expansion)]
        out.extend(expansion)
    return BraidWord(word.n, tuple(out))


def standard_codes(word: BraidWord) -> tuple[int, ...]:
    """The expanded word as signed generator indices (+i for si, -i for si^-1)."""
    return tuple(
        letter.i * letter.sign for letter in band_to_standard(word).letters
    )


def from_codes(n: int, codes: Iterable[int]) -> BraidWord:
    """Build a standard word from signed generator indices."""
    return BraidWord(n, tuple(sigma(abs(c), 1 if c > 0 else -1) for c in codes))


def permutation(word: BraidWord) -> tuple[int, ...]:
    """The underlying permutation: entry s-1 is where strand s ends.

    Strands are numbered by their top position; each standard letter acts
    as the transposition of the two positions it crosses, read left to
    right.  Letter signs are irrelevant.
    """
    occ = list(range(1, word.n + 1))
    for code in standard_codes(word):
        k = abs(code)
        occ[k - 1], occ[k] = occ[k], occ[k - 1]
    image = [0] * word.n
    for position, strand in enumerate(occ, start=1):
        image[strand - 1] = position
    return tuple(image)


def perm_cycles(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles of a 1-based permutation, ordered by least element.

    >>> perm_cycles((2, 3, 1))
    ((1, 2, 3),)
    >>> perm_cycles((1, 2, 3))
    ((1,), (2,), (3,))
    """
    seen = [False] * len(perm)
    cycles = []
    for start in range(1, len(perm) + 1):
        if seen[start - 1]:
            continue
        cycle = []
        s = start
        while not seen[s - 1]:
            seen[s - 1] = True
            cycle.append(s)
            s = perm[s - 1]
        cycles.append(tuple(cycle))
    return tuple(cycles)


@dataclass(frozen=True)
class GeneratorProfile:
    """Sign statistics of a word.

    ``pos``/``neg`` count crossings of each sign in the standard-letter
    expansion; ``pos_b``/``neg_b`` count the original letters themselves,
    with a standard si treated as the band a(i,i+1).  ``per_gen`` holds
    (positive, negative) occurrence counts for each standard generator of
    the expansion.  A word is homogeneous when every standard generator
    of the group occurs and each occurring generator keeps a single sign;
    ``n_n``/``n_p`` count the generators seen only negatively or only
    positively.
    """

    pos: int
    neg: int
    pos_b: int
    neg_b: int
    per_gen: tuple[tuple[int, int], ...]
    homogeneous: bool
    n_n: int
    n_p: int


def generator_profile(word: BraidWord) -> GeneratorProfile:
    """Count letter signs and decide homogeneity.

    >>> generator_profile(parse_braid("s1^4", 2)).homogeneous
    True
    >>> generator_profile(parse_braid("s1 s1^-1", 2)).homogeneous
    False
    """
    pos_b = sum(1 for letter in word.letters if letter.sign > 0)
    neg_b = len(word.letters) - pos_b
    counts = [[0, 0] for _ in range(max(word.n - 1, 0))]
    for code in standard_codes(word):
        counts[abs(code) - 1][0 if code > 0 else 1] += 1
    pos = sum(c[0] for c in counts)
    neg = sum(c[1] for c in counts)
    n_p = sum(1 for c in counts if c[0] > 0 and c[1] == 0)
    n_n = sum(1 for c in counts if c[1] > 0 and c[0] == 0)
    homogeneous = all(c[0] + c[1] > 0 and (c[0] == 0 or c[1] == 0) for c in counts)
    return GeneratorProfile(
        pos=pos,
        neg=neg,
        pos_b=pos_b,
        neg_b=neg_b,
        per_gen=tuple((c[0], c[1]) for c in counts),
        homogeneous=homogeneous,
        n_n=n_n,
        n_p=n_p,
    )
