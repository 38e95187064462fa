"""Thurston norm brackets and the cabled diagram pair.

A nonnegative integer class C = (C_1, ..., C_r) assigns a weight to each
component of a closed braid.  Cabling each component C_i-fold with a
corrective twist produces a diagram whose classical Bennequin data
bounds the norm of C from below; weighted punctured-component surfaces
bound it from above.
"""

from braidnorms.bennequin import (
    bennequin_number,
    cable_pair,
    class_lower_bound,
    relative_bennequin_subset,
    scholium_lower_bound,
    thurston_bracket,
)
from braidnorms.braid import parse_braid, print_braid

word = parse_braid("s1^4", 2)

# Unit classes and the all-ones class are realized by diagram surfaces,
# so their brackets close immediately.
for C in [(1, 1), (1, 0), (0, 1)]:
    bracket = thurston_bracket(word, C)
    print(f"class {C}: bracket [{bracket.lower}, {bracket.upper}]",
          "determined" if bracket.determined else "open")

# The class (2, 1): component one is doubled.  Each strand of it becomes
# two parallel strands and a twist of exponent p_1 - C_1 cr(1,1) = -2 is
# appended, giving a 3-strand diagram.
pair = cable_pair(word, (2, 1))
print("cabled word:", print_braid(pair.lprime), "on", pair.lprime.n, "strands")
print("framing integers p:", pair.p)
print("relative Bennequin of the cabled subdiagram:",
      relative_bennequin_subset(pair.lprime, pair.subset))

bracket = thurston_bracket(word, (2, 1))
print(f"class (2, 1): bracket [{bracket.lower}, {bracket.upper}]",
      f"(lower from {bracket.lower_source}, upper from {bracket.upper_source})")

# Two lower bounds are available.  The weighted relative sum is blind to
# signs of linking; the cabled-subdiagram bound credits deleted
# components by the absolute value of their total linking with the
# class, which wins whenever that linking is negative.
neg_hopf = parse_braid("s1^-2", 2)
print("negative Hopf link, class (1, 0):")
print("  weighted relative sum:", class_lower_bound(neg_hopf, (1, 0)))
print("  cabled subdiagram bound:", scholium_lower_bound(neg_hopf, (1, 0)))
print("  bracket:", thurston_bracket(neg_hopf, (1, 0)))

# The identity that makes all of this linear: the relative Bennequin
# number of the cabled subdiagram equals its own Bennequin number plus
# half its crossing count with the rest of the cabled diagram.
sub = bennequin_number(pair.lprime, pair.subset)
print("subdiagram Bennequin:", sub, "(no deleted components here, so the",
      "bracket lower bound is the same number)")
