"""Exact sparse polynomial arithmetic for braid-closure invariants.

Two rings are provided:

- ``LaurentVZ``: bivariate integer Laurent polynomials in the framing
  variable ``v`` and the skein variable ``z``.  This is the value ring of
  the braid polynomial ``P(v, z)`` and of the HOMFLY polynomial.
- ``MultiPoly``: integer polynomials in one variable per link component.
  These hold multivariable Alexander polynomials, which enter this
  library as user input.

Terms are stored sparsely as a mapping from exponent tuples to nonzero
integer coefficients.  Zero coefficients are dropped on construction, so
two polynomials are equal exactly when their term mappings are equal.
Coefficients are arbitrary-precision integers; Laurent exponents may be
negative but stay machine-sized.

>>> phi = LaurentVZ({(0, -1): 1, (2, -1): -1})   # (1 - v^2) / z
>>> print(phi * phi)
1*v^4*z^-2 + -2*v^2*z^-2 + 1*v^0*z^-2
>>> print(phi + (-phi))
0
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

if TYPE_CHECKING:
    from .bennequin import NormBracket

__all__ = [
    "ExactDivisionError",
    "LaurentVZ",
    "MultiPoly",
    "McMullenReport",
    "alexander_norm",
    "dump_multipoly",
    "eval_v0",
    "exact_div",
    "load_multipoly",
    "mcmullen_check",
    "min_v_degree",
]


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _clean(terms: Mapping[tuple, int]) -> dict:
    return {e: c for e, c in terms.items() if c}


def _add_terms(acc: dict, terms: Mapping[tuple, int], scale: int = 1) -> None:
    for e, c in terms.items():
        nc = acc.get(e, 0) + scale * c
        if nc:
            acc[e] = nc
        else:
            acc.pop(e, None)


def _mul_terms(a: Mapping[tuple, int], b: Mapping[tuple, int]) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            nc = out.get(e, 0) + ca * cb
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
    return out


def _exact_div_terms(p: Mapping[tuple, int], d: Mapping[tuple, int]) -> dict:
    """Divide term mappings exactly, or raise ExactDivisionError.

    Reduction by the lexicographically leading term of ``d``.  For an
    exact multiple the loop peels off one true quotient term per pass; a
    non-multiple is detected because every quotient monomial of an exact
    division is confined, coordinate by coordinate, to the box spanned by
    the degree spreads of ``p`` and ``d``.
    """
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return {}
    width = len(next(iter(d)))
    lo = tuple(
        min(e[c] for e in p) - min(e[c] for e in d) for c in range(width)
    )
    hi = tuple(
        max(e[c] for e in p) - max(e[c] for e in d) for c in range(width)
    )
    lt_d = max(d)
    cd = d[lt_d]
    rem = dict(p)
    quo: dict = {}
    while rem:
        lt_r = max(rem)
        cr = rem[lt_r]
        if cr % cd:
            raise ExactDivisionError("leading coefficient does not divide")
        mono = tuple(x - y for x, y in zip(lt_r, lt_d))
        if any(m < a or m > b for m, a, b in zip(mono, lo, hi)):
            raise ExactDivisionError("not divisible")
        coeff = cr // cd
        quo[mono] = coeff
        for e, c in d.items():
            k = tuple(x + y for x, y in zip(mono, e))
            nc = rem.get(k, 0) - coeff * c
            if nc:
                rem[k] = nc
            else:
                rem.pop(k, None)
    return quo


class LaurentVZ:
    """An integer Laurent polynomial in v and z.

    Immutable; all arithmetic returns new values.  The exponent pair
    ``(a, b)`` stands for the monomial ``v^a * z^b``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        object.__setattr__(self, "_terms", _clean(terms or {}))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentVZ is immutable")

    @classmethod
    def zero(cls) -> "LaurentVZ":
        return cls()

    @classmethod
    def one(cls) -> "LaurentVZ":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, v: int = 0, z: int = 0) -> "LaurentVZ":
        return cls({(v, z): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentVZ):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == _clean({(0, 0): other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentVZ":
        return LaurentVZ({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "LaurentVZ") -> "LaurentVZ":
        if not isinstance(other, LaurentVZ):
            return NotImplemented
        acc = dict(self._terms)
        _add_terms(acc, other._terms)
        return LaurentVZ(acc)

    def __sub__(self, other: "LaurentVZ") -> "LaurentVZ":
        if not isinstance(other, LaurentVZ):
            return NotImplemented
        acc = dict(self._terms)
        _add_terms(acc, other._terms, -1)
        return LaurentVZ(acc)

    def __mul__(self, other) -> "LaurentVZ":
        if isinstance(other, LaurentVZ):
            return LaurentVZ(_mul_terms(self._terms, other._terms))
        if isinstance(other, int):
            return LaurentVZ({e: c * other for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "LaurentVZ":
        if exp < 0:
            raise ValueError("negative power of a polynomial")
        acc = LaurentVZ.one()
        base = self
        while exp:
            if exp & 1:
                acc = acc * base
            base = base * base
            exp >>= 1
        return acc

    def shift(self, dv: int = 0, dz: int = 0) -> "LaurentVZ":
        """Multiply by the monomial v^dv * z^dz."""
        return LaurentVZ({(a + dv, b + dz): c for (a, b), c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        keys = sorted(self._terms, key=lambda e: (-e[0], e[1]))
        return " + ".join(f"{self._terms[e]}*v^{e[0]}*z^{e[1]}" for e in keys)

    def __repr__(self) -> str:
        return f"LaurentVZ({self._terms!r})"


def exact_div(p: LaurentVZ, d: LaurentVZ) -> LaurentVZ:
    """The exact quotient q with q * d == p.

    Raises ZeroDivisionError for d == 0 and ExactDivisionError when p is
    not a multiple of d.

    >>> one_minus_v2 = LaurentVZ({(0, 0): 1, (2, 0): -1})
    >>> print(exact_div(one_minus_v2 * one_minus_v2, one_minus_v2))
    -1*v^2*z^0 + 1*v^0*z^0
    """
    return LaurentVZ(_exact_div_terms(p._terms, d._terms))


def eval_v0(p: LaurentVZ) -> LaurentVZ:
    """The part of p surviving the substitution v := 0.

    Only defined when p has no negative v-exponents; keeps exactly the
    terms with v-exponent zero.
    """
    if any(a < 0 for a, _ in p._terms):
        raise ValueError("polynomial has negative v-exponents")
    return LaurentVZ({e: c for e, c in p._terms.items() if e[0] == 0})


def min_v_degree(p: LaurentVZ) -> int:
    """The minimum v-exponent over the support of a nonzero polynomial."""
    if not p._terms:
        raise ValueError("minimum degree of the zero polynomial is undefined")
    return min(a for a, _ in p._terms)


class MultiPoly:
    """An integer polynomial in r variables, one per link component.

    Exponent vectors all share the arity r; the zero polynomial keeps an
    explicit arity so that file round trips stay unambiguous.
    """

    __slots__ = ("_arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        cleaned = _clean(terms or {})
        for e in cleaned:
            if len(e) != arity:
                raise ValueError(f"exponent vector {e} does not have arity {arity}")
        object.__setattr__(self, "_arity", arity)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._arity == other._arity and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._arity, frozenset(self._terms.items())))

    def _check(self, other: "MultiPoly") -> None:
        if self._arity != other._arity:
            raise ValueError("mismatched arities")

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self._arity, {e: -c for e, c in self._terms.items()})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        _add_terms(acc, other._terms)
        return MultiPoly(self._arity, acc)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        _add_terms(acc, other._terms, -1)
        return MultiPoly(self._arity, acc)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return MultiPoly(self._arity, _mul_terms(self._terms, other._terms))
        if isinstance(other, int):
            return MultiPoly(self._arity, {e: c * other for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "MultiPoly":
        if exp < 0:
            raise ValueError("negative power of a polynomial")
        acc = MultiPoly(self._arity, {(0,) * self._arity: 1})
        base = self
        while exp:
            if exp & 1:
                acc = acc * base
            base = base * base
            exp >>= 1
        return acc

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        keys = sorted(self._terms)
        parts = []
        for e in keys:
            mono = "*".join(f"t{i + 1}^{x}" for i, x in enumerate(e))
            parts.append(f"{self._terms[e]}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self._arity}, {self._terms!r})"


def alexander_norm(poly: MultiPoly, C: Sequence[int]) -> int:
    """Width of the Newton support of ``poly`` in the direction ``C``.

    This is max(C . e) - min(C . e) over the exponent vectors e carrying
    nonzero coefficients; it vanishes on monomials and is symmetric and
    positively homogeneous in C.

    >>> ko_lee = MultiPoly(2, {(0, 0): 2, (1, 0): -3, (2, 0): 2})
    >>> alexander_norm(ko_lee, (1, 1))
    2
    """
    if poly.is_zero():
        raise ValueError("norm of the zero polynomial is undefined")
    if len(C) != poly.arity:
        raise ValueError("class length does not match polynomial arity")
    dots = [sum(c * x for c, x in zip(C, e)) for e in poly._terms]
    return max(dots) - min(dots)


@dataclass(frozen=True)
class McMullenReport:
    """Comparison of the Alexander norm with a Thurston norm bracket.

    ``bound`` is the bracket's upper value, raised by one in the knot
    case; ``holds`` asserts alexander <= bound.  ``gap`` is the defect
    upper - alexander, reported only when the bracket is determined.
    """

    alexander: int
    upper: int
    bound: int
    holds: bool
    gap: int | None


def mcmullen_check(
    poly: MultiPoly,
    bracket: "NormBracket",
    C: Sequence[int],
    r: int,
) -> McMullenReport:
    """Check the Alexander norm against a Thurston norm bracket at C."""
    if r < 1:
        raise ValueError("component count must be positive")
    if poly.arity != r or len(C) != r:
        raise ValueError("polynomial arity, class length and component count disagree")
    norm = alexander_norm(poly, C)
    bound = bracket.upper + (1 if r == 1 else 0)
    gap = bracket.upper - norm if bracket.determined else None
    return McMullenReport(
        alexander=norm,
        upper=bracket.upper,
        bound=bound,
        holds=norm <= bound,
        gap=gap,
    )


def dump_multipoly(poly: MultiPoly) -> str:
    """Serialize to the line format ``<coeff> <e1> ... <er>``.

    Terms are written in sorted exponent order, so dump(load(dump(p)))
    is byte-identical to dump(p).
    """
    lines = []
    for e in sorted(poly.terms):
        lines.append(" ".join(str(x) for x in (poly.terms[e], *e)))
    return "\n".join(lines) + ("\n" if lines else "")


def load_multipoly(text: str | Iterable[str], arity: int | None = None) -> MultiPoly:
    """Parse the line format; ``#`` starts a comment, blank lines are skipped."""
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = list(text)
    terms: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: malformed term {raw!r}") from exc
        if len(nums) < 2:
            raise ValueError(f"line {lineno}: a term needs a coefficient and exponents")
        coeff, exps = nums[0], tuple(nums[1:])
        if arity is None:
            arity = len(exps)
        if len(exps) != arity:
            raise ValueError(f"line {lineno}: expected {arity} exponents, got {len(exps)}")
        terms[exps] = terms.get(exps, 0) + coeff
    if arity is None:
        raise ValueError("empty polynomial file with unknown arity")
    return MultiPoly(arity, terms)
