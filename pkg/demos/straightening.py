"""Straightening quantum matrix entries into PBW normal form.

The generators x[r,s] of the quantized coordinate algebra q-commute
along rows and columns and pick up a (q - q^-1) correction across the
diagonal.  Every word straightens into a combination of weakly
increasing monomials; the triangular generators xt[r,s] straighten into
row-descending blocks instead and their adjacent relation drops degree.
"""

from qtypea import qmatrix, scalars
from qtypea.qmatrix import XiPoly

n = 3

print("== the 2x2 diagonal relation ==")
p = XiPoly(2, {((2, 2), (1, 1)): scalars.one()})
print("x[2,2] x[1,1]  ->", qmatrix.xi_normal_form(p))

print()
print("== a longer word, straightened both ways ==")
word = ((2, 3), (1, 2), (3, 1), (1, 1))
p = XiPoly(n, {word: scalars.one()})
left = qmatrix.xi_normal_form(p, "leftmost")
right = qmatrix.xi_normal_form(p, "rightmost")
print("word       :", " ".join("x[%d,%d]" % rs for rs in word))
print("leftmost   :", left)
print("rightmost  :", right)
print("confluent  :", left == right)

print()
print("== triangular generators: the degree-dropping overlap ==")
t = XiPoly(n, {((1, 2), (2, 3)): scalars.one()}, tilde=True)
print("xt[1,2] xt[2,3] ->", qmatrix.tilde_normal_form(t))

print()
print("== the row subalgebra is a quantum affine space ==")
# every row-1 word is a single sorted monomial times a power of q
for word in (((1, 2), (1, 1)), ((1, 3), (1, 2), (1, 1))):
    p = XiPoly(n, {word: scalars.one()})
    print(" ".join("x[%d,%d]" % rs for rs in word), "->",
          qmatrix.xi_normal_form(p))

print()
print("== ordered monomial counts match graded dimensions ==")
from qtypea.weights import Weight

for coords in ((1, 0, -1), (2, -1, -1), (2, 0, -2)):
    beta = Weight(coords)
    count, dim = qmatrix.pbw_count_crosscheck(beta, n)
    print("beta =", coords, " monomials =", count, " dimension =", dim)
