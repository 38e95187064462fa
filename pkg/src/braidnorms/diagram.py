"""Closure combinatorics of a braid word.

The closure of a braid on n strands joins top and bottom endpoints at
equal positions; its link components are the cycles of the underlying
permutation.  This module attributes every crossing of the closed-braid
diagram to the components involved and derives the Euler-characteristic
bookkeeping of the spanning surfaces built from the diagram:

- Seifert's algorithm on a closed braid produces one disk per strand and
  one band per crossing, so chi = n - c.
- The band-generator variant produces one disk per strand and one band
  per band letter, so chi = n - l with l the unexpanded word length.
- The surface spanning a single component j in the complement of the
  others keeps the self-crossings of j and is pierced once for every
  crossing at which j passes over a different component, so
  chi = n_j - u_j - l_j.

Crossing attribution follows the convention that in a positive crossing
the strand entering at the left position passes over, and in a negative
crossing the strand entering at the right position does.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, perm_cycles, permutation, standard_codes

__all__ = [
    "ClosureProfile",
    "EulerReport",
    "band_seifert_euler",
    "closure_profile",
    "linking_matrix",
    "punctured_component_euler",
    "seifert_euler",
]


@dataclass(frozen=True)
class ClosureProfile:
    """Per-component crossing statistics of a closed braid diagram.

    Components are numbered 1..r by least strand.  ``comp`` maps each
    strand (index s-1) to its component.  ``cr`` is the symmetric matrix
    of signed crossing counts: the diagonal holds the algebraic
    self-crossing number of each component, an off-diagonal entry the
    algebraic count of crossings between two components (twice their
    linking number).  ``self_cross`` and ``over_cross`` count, without
    sign, the self-crossings of each component and the crossings at
    which it passes over a different component; ``strands`` counts its
    strands, which for a closed braid is also its Seifert circle count.
    """

    r: int
    comp: tuple[int, ...]
    cr: tuple[tuple[int, ...], ...]
    self_cross: tuple[int, ...]
    over_cross: tuple[int, ...]
    strands: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.comp)


@dataclass(frozen=True)
class EulerReport:
    """Euler characteristic of one of the diagram surfaces.

    ``chi_minus`` is max(-chi, 0), the quantity the Thurston norm
    measures; ``formula`` records which construction produced the value.
    """

    chi: int
    chi_minus: int
    formula: str


def closure_profile(word: BraidWord) -> ClosureProfile:
    """Attribute every crossing of the expanded word to its components.

    >>> from braidnorms.braid import parse_braid
    >>> prof = closure_profile(parse_braid("s1^4", 2))
    >>> prof.r, prof.cr[0][1], prof.over_cross
    (2, 4, (2, 2))
    """
    codes = standard_codes(word)
    n = word.n
    cycles = perm_cycles(permutation(word))
    r = len(cycles)
    comp = [0] * n
    for cid, cycle in enumerate(cycles, start=1):
        for strand in cycle:
            comp[strand - 1] = cid
    cr = [[0] * r for _ in range(r)]
    self_cross = [0] * r
    over_cross = [0] * r
    occ = list(range(1, n + 1))
    for code in codes:
        k = abs(code)
        sign = 1 if code > 0 else -1
        a, b = occ[k - 1], occ[k]
        ca, cb = comp[a - 1], comp[b - 1]
        if ca == cb:
            cr[ca - 1][ca - 1] += sign
            self_cross[ca - 1] += 1
        else:
            cr[ca - 1][cb - 1] += sign
            cr[cb - 1][ca - 1] += sign
            over = ca if sign > 0 else cb
            over_cross[over - 1] += 1
        occ[k - 1], occ[k] = occ[k], occ[k - 1]
    return ClosureProfile(
        r=r,
        comp=tuple(comp),
        cr=tuple(tuple(row) for row in cr),
        self_cross=tuple(self_cross),
        over_cross=tuple(over_cross),
        strands=tuple(len(cycle) for cycle in cycles),
    )


def linking_matrix(profile: ClosureProfile) -> tuple[tuple[int, ...], ...]:
    """Halve the off-diagonal crossing counts; the diagonal is zero.

    An odd off-diagonal entry cannot occur for a closed braid and
    signals a crossing-attribution bug, so it raises rather than rounds.
    """
    lk = [[0] * profile.r for _ in range(profile.r)]
    for i in range(profile.r):
        for j in range(profile.r):
            if i == j:
                continue
            if profile.cr[i][j] % 2:
                raise ValueError(
                    f"odd crossing count {profile.cr[i][j]} between components "
                    f"{i + 1} and {j + 1}"
                )
            lk[i][j] = profile.cr[i][j] // 2
    return tuple(tuple(row) for row in lk)


def seifert_euler(word: BraidWord) -> EulerReport:
    """Euler characteristic of the Seifert surface: strands minus crossings."""
    chi = word.n - len(standard_codes(word))
    return EulerReport(chi=chi, chi_minus=max(-chi, 0), formula="seifert")


def band_seifert_euler(word: BraidWord) -> EulerReport:
    """Euler characteristic of the band surface: strands minus letters.

    The word is read in the band generators; standard letters count as
    the bands a(i,i+1).  This is the only operation that reads the
    unexpanded letter count.
    """
    chi = word.n - len(word.letters)
    return EulerReport(chi=chi, chi_minus=max(-chi, 0), formula="band_seifert")


def punctured_component_euler(word: BraidWord, j: int) -> EulerReport:
    """Euler characteristic of the surface spanning component j alone.

    The surface keeps the n_j disks and l_j self-crossing bands of the
    component and is pierced u_j times by the strands it crosses over.
    """
    profile = closure_profile(word)
    if not 1 <= j <= profile.r:
        raise ValueError(f"component {j} out of range (diagram has {profile.r})")
    chi = (
        profile.strands[j - 1]
        - profile.over_cross[j - 1]
        - profile.self_cross[j - 1]
    )
    return EulerReport(chi=chi, chi_minus=max(-chi, 0), formula="punctured_component")
