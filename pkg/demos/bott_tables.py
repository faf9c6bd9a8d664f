"""Borel-Weil-Bott bookkeeping: dot action, induced lines, step tables.

A weight lam either sits on a reflection wall (lam + rho has a repeated
coordinate) and induces nothing, or a unique Weyl element w sorts it
dominant and the induction concentrates in degree length(w).
"""

from qtypea import cohomology, weights
from qtypea.weights import Weight

print("== dominant conjugates under the dot action ==")
for coords in ((-2, 1, 1), (-1, 0, 0), (0, 2, 1)):
    lam = Weight(coords)
    conj = weights.dominant_conjugate(lam)
    if conj is None:
        print(coords, "-> singular")
    else:
        w, mu = conj
        print(coords, "-> w =", w.images, " length", w.length(),
              " mu =", mu.coords)

print()
print("== the induced-line answers for those weights ==")
for coords in ((-2, 1, 1), (-1, 0, 0), (3, 1, 0)):
    print(coords, "->", cohomology.bwb(Weight(coords)).to_json())

print()
print("== step table: which wedge weights survive induction ==")
for n, a in ((3, 1), (4, 2)):
    table = cohomology.step_lemma_table(n, a)
    print("n=%d, a=%d:" % (n, a))
    for row in table["tuples"]:
        print("   j =", row["j"], "->", row["result"])

print()
print("== wedge-weight vanishing: everything dies for 0 <= k < a < n ==")
rep = cohomology.wedge_weight_vanishing(4, 2, 1)
print("n=4, a=2, k=1: all vanish:", rep["all_vanish"])

print()
print("== Kostant subsets pair with Weyl elements of matching length ==")
for w, x in weights.kostant_sets(3):
    ans = cohomology.bwb(x.weight(3))
    print("w =", w.images, " X =", sorted(x.pairs),
          " degree =", ans.degree, "=", w.length())
