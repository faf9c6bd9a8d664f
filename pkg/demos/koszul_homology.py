"""Exactness of the quantum Koszul complex, strand by strand.

Each total degree d gives a finite complex S^{d-p} x Ext^p with the
quantum differential; all homology vanishes for d >= 1, in the generic
mode and at roots of unity.  The ranks are computed by exact
weight-blocked elimination, so every Betti number is an integer
certificate, not a numerical estimate.
"""

from qtypea import koszul

for n, order in ((2, None), (3, None), (3, 7)):
    label = "generic" if order is None else "zeta-order %d" % order
    print("== n = %d, %s ==" % (n, label))
    print("  d  dims                ranks          betti")
    for d in range(0, 6):
        h = koszul.strand_homology(n, d, order)
        print("  %d  %-18s  %-13s  %s" % (d, h.dims, h.ranks, h.betti))
    print()

print("== the differential is equivariant for every generator ==")
rep = koszul.equivariance_check(3, 3)
print("n=3, d=3:", rep["checks"], "checks,",
      "all pass" if rep["ok"] else rep["failures"])

print()
print("== a small-order probe below the validated range ==")
# order 4 means zeta^2 has order 2 < n = 3; the complex happens to stay
# exact here, which is recorded as an observation only
for d in range(1, 5):
    h = koszul.strand_homology(3, d, 4)
    print("n=3, order=4, d=%d: betti %s" % (d, h.betti))
