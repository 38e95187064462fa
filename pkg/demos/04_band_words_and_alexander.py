"""Band positive braids, the Alexander norm, and 3-braid band words.

Band generators a(i,j) cross strands i and j behind the intermediate
strands.  For a band positive word the band surface with chi = n - l is
minimal, which pins the Thurston norm at the all-ones class; the
Alexander norm can lag strictly behind it.
"""

import pathlib

from braidnorms.bennequin import band_positive_bracket, bennequin_number
from braidnorms.braid import parse_braid, print_braid
from braidnorms.diagram import band_seifert_euler
from braidnorms.homfly import band_minimize, homfly_p, morton_check_3braid
from braidnorms.poly import alexander_norm, load_multipoly, mcmullen_check

word = parse_braid("a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2", 5)
print("band word:", print_braid(word))
print("band surface chi:", band_seifert_euler(word).chi)
print("Bennequin number:", bennequin_number(word))

bracket = band_positive_bracket(word)
print("norm at (1, 1):", bracket.lower, "(determined)" if bracket.determined else "")

# The Alexander polynomial of this closure only sees a width of 2, so
# the norm beats the Alexander bound by 2.
data = pathlib.Path(__file__).parent / "data" / "ko_lee_link.alex"
poly = load_multipoly(data.read_text())
print("Alexander norm at (1, 1):", alexander_norm(poly, (1, 1)))
report = mcmullen_check(poly, bracket, (1, 1), 2)
print("Alexander bound holds with gap:", report.gap)

# On three strands, shortest band representatives are found by rewriting
# with the presentation relations; a tangled word collapses quickly.
tangle = parse_braid("a1,3 a1,2^-1 a2,3 a1,2 a1,3^-1", 3)
result = band_minimize(tangle)
print("\ntangle:", print_braid(tangle))
print("shortest form:", print_braid(result.word) or "id",
      "(certified)" if result.certified else "(budget hit)")

# On the shortest form, the minimal v-degree of P never exceeds twice
# the number of negative letters.
for text in ["a1,2^-1", "a1,2^-1 a2,3", "a1,2 a2,3 a1,3"]:
    check = morton_check_3braid(parse_braid(text, 3))
    print(f"{text}: e_P = {check.e_p} <= 2*neg = {2 * check.neg_b}"
          f"  P = {homfly_p(check.minimal)}")
