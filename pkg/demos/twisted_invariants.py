"""Twisted Weyl invariants and the free-basis decomposition.

The Weyl group acts on the character algebra with a z^2-valued twist;
invariants are spanned by twisted orbit sums.  Every invariant of the
row subgroup decomposes uniquely over the full invariants with the
free basis chi[a,0,..,0], a = 0..n-1, and the decomposition is found
by exact linear algebra with a rank certificate.
"""

import random

from qtypea import invariants, scalars
from qtypea.invariants import (GroupAlgebraElement, decompose,
                               elementary_symmetric, orbit_invariant_basis,
                               recompose)
from qtypea.weights import Weight, WeylElt

print("== a twisted orbit sum (n = 2) ==")
f = orbit_invariant_basis(Weight((1, 0)), "W")
print("invariant through (1,0):", f)
s1 = WeylElt.simple(1, 2)
print("fixed by s_1:", invariants.twisted_action(s1, f) == f)

print()
print("== classical check: z_1^2 = -sigma_2 + sigma_1 z_1 ==")
g = GroupAlgebraElement.chi(Weight((2, 0)))
f0, f1 = decompose(g, untwisted=True)
print("f_0 =", f0)
print("f_1 =", f1)
print("matches (-sigma_2, sigma_1):",
      f0 == elementary_symmetric(2, 2).scale(scalars.integer(-1))
      and f1 == elementary_symmetric(1, 2))

print()
print("== a twisted decomposition at a root of unity (n = 3) ==")
order = 7
rng = random.Random(4)
g = GroupAlgebraElement.zero(3, order)
for _ in range(2):
    lam = Weight(tuple(rng.randint(-2, 2) for _ in range(3)))
    g = g + orbit_invariant_basis(lam, "WJ", order)
fs, cert = decompose(g, return_certificate=True)
print("input  :", g)
for a, f in enumerate(fs):
    print("f_%d    : %s" % (a, f))
print("certificate:", cert)
print("round trip :", recompose(fs, order) == g)
