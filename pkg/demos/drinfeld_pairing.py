"""The Drinfeld pairing between the two nilpotent halves.

tau pairs words in the raising generators against words in the lowering
generators; per graded piece its Gram matrix is nondegenerate in the
generic mode, which is exactly what makes the dual map an
anti-isomorphism onto the graded dual.
"""

from qtypea import qalgebra, scalars
from qtypea.qalgebra import NCPoly, drinfeld_pairing, graded_basis
from qtypea.weights import Weight

n = 3
e1 = NCPoly.generator("e", 1, n)
e2 = NCPoly.generator("e", 2, n)
f1 = NCPoly.generator("f", 1, n)
f2 = NCPoly.generator("f", 2, n)

print("== base values ==")
print("tau(e1, f1)      =", drinfeld_pairing(e1, f1))
print("tau(e1, f2)      =", drinfeld_pairing(e1, f2))
print("tau(e1e2, f1f2)  =", drinfeld_pairing(e1 * e2, f1 * f2))
print("tau(e1e2, f2f1)  =", drinfeld_pairing(e1 * e2, f2 * f1))

print()
print("== Gram matrix on the alpha_1 + alpha_2 piece ==")
beta = Weight((1, 0, -1))
epiece = graded_basis(beta, "e", n)
fpiece = graded_basis(beta, "f", n)
for ew in epiece.basis:
    row = []
    for fw in fpiece.basis:
        val = drinfeld_pairing(NCPoly.from_word("e", ew, n),
                               NCPoly.from_word("f", fw, n))
        row.append(str(val))
    print(" ", row)
print("rank =", qalgebra.pairing_gram_rank(beta, n),
      " dimension =", epiece.dim)

print()
print("== the dual map reverses products ==")
lhs = qalgebra.functional_of(f1 * f2)
rhs = qalgebra.functional_product(
    qalgebra.functional_of(f2), qalgebra.functional_of(f1),
    (0, 1), (1, 0), n)
print("F(f1 f2) == F(f2) F(f1):", lhs == rhs)

print()
print("== Gram ranks across small degrees ==")
for coords in ((1, -1, 0), (1, 0, -1), (2, -1, -1), (2, 0, -2)):
    beta = Weight(coords)
    piece = graded_basis(beta, "e", n)
    print("beta =", coords, " rank =", qalgebra.pairing_gram_rank(beta, n),
          "of", piece.dim)
