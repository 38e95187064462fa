"""Closure combinatorics and Bennequin numbers, step by step.

The running example is the closure of s1^4 on two strands: a pair of
unknots wrapped around each other four times (the (2,4) torus link).
"""

from braidnorms.bennequin import bennequin_number, relative_bennequin
from braidnorms.braid import parse_braid, permutation, print_braid
from braidnorms.diagram import (
    closure_profile,
    linking_matrix,
    punctured_component_euler,
    seifert_euler,
)

word = parse_braid("s1^4", 2)
print("word:", print_braid(word))

# The closure joins top and bottom endpoints; its components are the
# cycles of the underlying permutation.  Four crossings compose to the
# identity, so the closure has two components.
print("permutation:", permutation(word))

profile = closure_profile(word)
print("components:", profile.r, " strand -> component:", profile.comp)

# Every crossing is attributed to the pair of components it involves.
# The diagonal holds algebraic self-crossing counts, the off-diagonal
# entries are twice the linking numbers.
print("crossing matrix:", profile.cr)
print("linking matrix: ", linking_matrix(profile))

# Seifert's algorithm gives one disk per strand and one band per
# crossing: chi = 2 - 4 = -2, a twice-punctured torus.
print("Seifert surface chi:", seifert_euler(word).chi)

# The Bennequin number pos - neg - n bounds -chi of every spanning
# surface from below; here it meets the Seifert surface exactly.
print("Bennequin number:", bennequin_number(word))

# Per component: the surface spanning one unknot alone is pierced twice
# by the other component (chi = 1 - 2 - 0 = -1), and the relative
# Bennequin number cr(i,i) - n_i + lk matches it.
for j in (1, 2):
    chi = punctured_component_euler(word, j).chi
    rel = relative_bennequin(word, j)
    print(f"component {j}: punctured surface chi = {chi}, relative Bennequin = {rel}")

# For a knot the relative number is the plain one.
trefoil = parse_braid("s1^3", 2)
print(
    "trefoil: bennequin =",
    bennequin_number(trefoil),
    " relative =",
    relative_bennequin(trefoil, 1),
)
