"""The braid polynomial P(v, z), the HOMFLY polynomial, and its bounds.

P is computed by linearizing the braid word over positive permutation
braids and eliminating strands; a direct skein-recursion oracle double
checks it.  The minimal v-degree of the HOMFLY polynomial dominates the
Bennequin number, and a nonvanishing P(0, z) certifies that no braid
representative of the closure does better.
"""

from braidnorms.braid import parse_braid
from braidnorms.homfly import (
    conway,
    homfly_h,
    homfly_p,
    max_bennequin_certificate,
    mfw_check,
    skein_oracle,
)
from braidnorms.poly import eval_v0, exact_div
from braidnorms.sweeps import kanda_word, torus_word

trefoil = parse_braid("s1^3", 2)
print("trefoil P:", homfly_p(trefoil))
print("trefoil H:", homfly_h(trefoil))
print("trefoil Conway form:", conway(trefoil))
print("oracle agrees:", skein_oracle(trefoil) == homfly_p(trefoil))

# The bound beta_t + 1 <= e is sharp on the trefoil.
report = mfw_check(trefoil)
print(f"bound: beta_t + 1 = {report.beta_t + 1} <= e = {report.e}",
      f"(slack {report.slack})")

# P(0, z) != 0 certifies a maximal Bennequin number among all braid
# representatives of the closure.
print("trefoil certificate:", max_bennequin_certificate(trefoil).certified)

# The twist family s2^-l s1^k separates the Bennequin number from the
# norm by exactly 2l.  At l = 1 the certificate cannot fire; from l = 2
# on it always does, because the v-free part is a nonzero multiple of
# the 2-braid value.
k = 5
base = eval_v0(homfly_p(torus_word(k)))
print(f"\ntwist family with k = {k}:")
for l in range(1, 7):
    word = kanda_word(l, k)
    p0 = eval_v0(homfly_p(word))
    if p0.is_zero():
        print(f"  l={l}: P(0, z) = 0, certificate silent")
        continue
    cofactor = exact_div(p0, base)
    signs = {1 if c > 0 else -1 for c in cofactor.terms.values()}
    print(f"  l={l}: cofactor {cofactor}  (signs {sorted(signs)})")
