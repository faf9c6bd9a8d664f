"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest -v -s tests/test_acceptance.py` to see the per-criterion
lines; every tolerance is exact (integer ranks and symbolic equality).
"""

import itertools
import random

from qtypea import cohomology, invariants, koszul, qalgebra, qmatrix, scalars
from qtypea import verifysuites, weights
from qtypea.invariants import (decompose, elementary_symmetric,
                               orbit_invariant_basis, recompose)
from qtypea.qalgebra import NCPoly
from qtypea.weights import Weight


def _modes(n):
    return (None, 2 * n + 1, 2 * n + 3)


def test_criterion_1_koszul_exactness():
    for n in (2, 3, 4):
        for order in _modes(n):
            for d in range(1, 7):
                h = koszul.strand_homology(n, d, order)
                assert h.exact, (n, order, d, h.betti)
            h0 = koszul.strand_homology(n, 0, order)
            assert h0.betti[0] == 1 and not any(h0.betti[1:])
    print("ACCEPTANCE 1 (Koszul exactness, n<=4, d<=6, generic and "
          "zeta-orders 2n+1, 2n+3): PASS")


def test_criterion_2_differential_and_equivariance():
    for n in (2, 3, 4):
        for order in _modes(n):
            for d in range(1, 7):
                top = min(n, d)
                for p in range(top - 1):
                    up = koszul.koszul_differential(n, p + 1, d, order)
                    lo = koszul.koszul_differential(n, p, d, order)
                    assert lo.compose(up).is_zero(), (n, order, d, p)
                rep = koszul.equivariance_check(n, d, order)
                assert rep["ok"], (n, order, d, rep["failures"])
    print("ACCEPTANCE 2 (square-zero differential and generator "
          "equivariance, same ranges): PASS")


def test_criterion_3_pbw_crosscheck():
    for n in (2, 3, 4):
        checked = 0
        for m in itertools.product(*(range(7),) * (n - 1)):
            if sum(m) > 6:
                continue
            beta = qalgebra.rootvec_to_weight(m, n)
            count, dim = qmatrix.pbw_count_crosscheck(beta, n)
            kp = qalgebra.kostant_partition_count(beta, n)
            assert count == dim == kp, (n, m, count, dim, kp)
            checked += 1
        assert checked > 0
    print("ACCEPTANCE 3 (PBW counts = Serre-quotient dimensions = "
          "Kostant counts, |beta|<=6, n<=4): PASS")


def test_criterion_4_relation_completeness():
    for n in (2, 3, 4):
        report = qmatrix.verify_relations(n)
        assert report.ok, report.to_json()
        for family in ("same-row", "same-column", "anti-diagonal",
                       "diagonal"):
            assert not report.families[family]["failures"]
        assert report.row_one["instances"] == n * (n - 1) // 2
        assert not report.row_one["failures"]
    print("ACCEPTANCE 4 (complete operator-algebra proof of the four "
          "relation families, n<=4, incl. row-one q-commutation): PASS")


def test_criterion_5_borel_weil_bott_tables():
    for n in (2, 3, 4, 5):
        for a in range(n):
            cohomology.step_lemma_table(n, a)  # raises unless the unique
            # survivor is (2..a+1) in degree a with dim 1
        for a in range(1, n):
            for k in range(a):
                cohomology.wedge_weight_vanishing(n, a, k)
    for n in (2, 3, 4):
        sets = weights.kostant_sets(n)
        assert len(sets) == len(weights.weyl_group(n))
        for w, x in sets:
            ans = cohomology.bwb(x.weight(n))
            assert not ans.vanishes
            assert ans.degree == w.length() and ans.mu.is_zero() \
                and ans.dim == 1
    print("ACCEPTANCE 5 (step tables n<=5, wedge-weight vanishing "
          "0<=k<a<n<=5, Kostant sets with matching degrees n<=4): PASS")


def test_criterion_6_drinfeld_pairing():
    for n in (2, 3):
        for m in itertools.product(*(range(6),) * (n - 1)):
            if not sum(m) <= 5:
                continue
            beta = qalgebra.rootvec_to_weight(m, n)
            piece = qalgebra.graded_basis(beta, "e", n)
            rank = qalgebra.pairing_gram_rank(beta, n)
            assert rank == piece.dim, (n, m, rank, piece.dim)
    rng = random.Random(0)
    n = 3
    checked = 0
    while checked < 200:
        y1 = verifysuites._random_homogeneous(rng, n, None)
        y2 = verifysuites._random_homogeneous(rng, n, None)
        if sum(a + b for a, b in zip(y1.rootvec(), y2.rootvec())) > 5:
            continue
        lhs = qalgebra.functional_of(y1 * y2)
        rhs = qalgebra.functional_product(
            qalgebra.functional_of(y2), qalgebra.functional_of(y1),
            y2.rootvec(), y1.rootvec(), n)
        assert all(lhs[w] == rhs[w] for w in lhs), (y1, y2)
        checked += 1
    print("ACCEPTANCE 6 (Gram matrices full rank |beta|<=5 n<=3; dual "
          "map anti-multiplicative on 200 random pairs): PASS")


def test_criterion_7_invariant_freeness():
    for n in (2, 3, 4):
        order = 2 * n + 1
        rng = random.Random(0)
        box = n + 2
        done = 0
        while done < 100:
            g = invariants.GroupAlgebraElement.zero(n, order)
            for _ in range(rng.randint(1, 3)):
                lam = Weight(tuple(rng.randint(-n, n) for _ in range(n)))
                c = scalars.q_power(rng.randint(-2, 2), order)
                if rng.random() < 0.5:
                    c = -c
                g = g + orbit_invariant_basis(lam, "WJ", order).scale(c)
            if g.is_zero():
                continue
            fs, cert = decompose(g, box=box, return_certificate=True)
            assert cert["rank"] == cert["unknowns"]
            assert recompose(fs, order) == g
            for f in fs:
                assert invariants.is_twisted_invariant(
                    f, invariants.full_group_generators(n))
            done += 1
    f0, f1 = decompose(invariants.GroupAlgebraElement.chi(Weight((2, 0))),
                       untwisted=True)
    assert f0 == elementary_symmetric(2, 2).scale(scalars.integer(-1))
    assert f1 == elementary_symmetric(1, 2)
    print("ACCEPTANCE 7 (100 twisted decomposition round-trips per "
          "n<=4 with full-column-rank certificates; untwisted n=2 "
          "z_1^2 identity): PASS")


def test_criterion_8_property_suites():
    for seed in range(5):
        for name in ("confluence", "weyl", "scalars"):
            report = verifysuites.run_suite(name, n=3, order=7,
                                            degree_bound=5, seed=seed)
            assert report["passed"], (name, seed, report)
    print("ACCEPTANCE 8 (confluence, group-action laws, field axioms, "
          "specialization homomorphism; seeds 0-4): PASS")
