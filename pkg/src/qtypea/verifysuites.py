"""Named verification suites shared by the command line and the tests.

Every suite returns a JSON-able report with a boolean "passed" field
and enough witness data to debug a failure.  Randomized suites are
deterministic given their seed.
"""

from __future__ import annotations

import itertools
import random

from . import cohomology, invariants, koszul, qalgebra, qmatrix, scalars, weights
from .qalgebra import NCPoly
from .qmatrix import XiPoly
from .scalars import ScalarRing
from .weights import Weight, WeylElt


def _random_scalar(rng, order=None, size=2):
    ring = ScalarRing(order)
    out = ring.zero
    for _ in range(rng.randint(1, size)):
        out = out + ring.integer(rng.randint(-3, 3)) * ring.q(rng.randint(-3, 3))
    return out


def suite_scalars(order=None, seed=0, samples=40):
    """Field axioms in both modes plus the specialization homomorphism."""
    rng = random.Random(seed)
    failures = []
    orders = [None, order if order is not None else 7]
    for mode in orders:
        for _ in range(samples):
            a = _random_scalar(rng, mode)
            b = _random_scalar(rng, mode)
            c = _random_scalar(rng, mode)
            if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
                failures.append({"law": "associativity", "mode": mode})
            if a * (b + c) != a * b + a * c:
                failures.append({"law": "distributivity", "mode": mode})
            if not a.is_zero() and a * a.inverse() != scalars.one(mode):
                failures.append({"law": "inverse", "mode": mode})
    m = order if order is not None else 7
    for _ in range(samples):
        a = _random_scalar(rng, None)
        b = _random_scalar(rng, None)
        try:
            sa = scalars.specialize(a, m)
            sb = scalars.specialize(b, m)
            sab = scalars.specialize(a * b, m)
        except scalars.SpecializationError:
            continue
        if sab != sa * sb:
            failures.append({"law": "specialization", "a": str(a), "b": str(b)})
    ell = scalars.ell_of_order(m)
    for r in range(1, 4 * ell + 1):
        val = scalars.specialize(scalars.quantum_integer(r), m)
        if val.is_zero() != (r % ell == 0):
            failures.append({"law": "quantum integer vanishing", "r": r})
    return {"suite": "scalars", "seed": seed, "order": m,
            "failures": failures, "passed": not failures}


def suite_weyl(n=3, seed=0, samples=60):
    """Group laws for the dot action and the twisted action."""
    rng = random.Random(seed)
    failures = []
    group = weights.weyl_group(min(n, 4))
    m = min(n, 4)
    for _ in range(samples):
        w1 = rng.choice(group)
        w2 = rng.choice(group)
        lam = Weight(tuple(rng.randint(-4, 4) for _ in range(m)))
        lhs = weights.dot_action(w1.compose(w2), lam)
        rhs = weights.dot_action(w1, weights.dot_action(w2, lam))
        if lhs != rhs:
            failures.append({"law": "dot action", "w1": w1.images,
                             "w2": w2.images, "lam": lam.coords})
        f = invariants.GroupAlgebraElement(
            m, {tuple(rng.randint(-3, 3) for _ in range(m)):
                _random_scalar(rng)}, None)
        tl = invariants.twisted_action(w1.compose(w2), f)
        tr = invariants.twisted_action(w1, invariants.twisted_action(w2, f))
        if tl != tr:
            failures.append({"law": "twisted action", "w1": w1.images,
                             "w2": w2.images})
        conj = weights.dominant_conjugate(lam)
        if conj is not None:
            w, mu = conj
            if not mu.is_dominant() or weights.dot_action(w, lam) != mu:
                failures.append({"law": "dominant conjugate", "lam": lam.coords})
            others = [v for v in group
                      if weights.dot_action(v, lam).is_dominant()]
            if len(others) != 1:
                failures.append({"law": "unique dominant conjugate",
                                 "lam": lam.coords})
    return {"suite": "weyl", "seed": seed, "n": n,
            "failures": failures, "passed": not failures}


def suite_kostant(n=3, bound=5):
    """Kostant subset classification plus induced-degree agreement."""
    failures = []
    sets = weights.kostant_sets(n, bound)
    if len(sets) != len(weights.weyl_group(n)):
        failures.append({"law": "count", "got": len(sets)})
    hval = weights.coxeter_number(n)
    roots = weights.positive_roots(n)
    for w, x in sets:
        lam = x.weight(n)
        ans = cohomology.bwb(lam)
        if ans.vanishes or ans.degree != w.length() or not ans.mu.is_zero():
            failures.append({"law": "bwb degree", "w": w.images})
    for mask in range(1 << len(roots)):
        x = weights.RootSubset(r for i, r in enumerate(roots) if mask >> i & 1)
        shifted = x.weight(n) + Weight.rho(n)
        worst = max(abs(shifted.pair_coroot(r, s)) for r, s in roots)
        if worst > hval - 1:
            failures.append({"law": "smallness", "X": sorted(x.pairs)})
    return {"suite": "kostant", "n": n,
            "failures": failures, "passed": not failures}


def suite_pbw(n=3, order=None, degree_bound=6):
    """Ordered-monomial counts, Serre-quotient dimensions, Kostant counts."""
    failures = []
    checked = 0
    for m in itertools.product(*(range(degree_bound + 1),) * (n - 1)):
        if not 0 < sum(m) <= degree_bound:
            continue
        beta = qalgebra.rootvec_to_weight(m, n)
        count, dim = qmatrix.pbw_count_crosscheck(beta, n, order, degree_bound)
        kp = qalgebra.kostant_partition_count(beta, n)
        checked += 1
        if not count == dim == kp:
            failures.append({"beta": m, "count": count, "dim": dim,
                             "kostant": kp})
    return {"suite": "pbw", "n": n,
            "mode": "generic" if order is None else order,
            "checked": checked, "failures": failures, "passed": not failures}


def suite_relations(n=3, order=None):
    report = qmatrix.verify_relations(n, order)
    out = report.to_json()
    out["suite"] = "relations"
    out["passed"] = report.ok
    return out


def suite_equivariance(n=3, order=None, degree_bound=4):
    """Square-zero differentials plus generator equivariance."""
    failures = []
    checks = 0
    for d in range(1, degree_bound + 1):
        top = min(n, d)
        for p in range(top - 1):
            checks += 1
            upper = koszul.koszul_differential(n, p + 1, d, order)
            lower = koszul.koszul_differential(n, p, d, order)
            if not lower.compose(upper).is_zero():
                failures.append({"law": "square zero", "d": d, "p": p})
        rep = koszul.equivariance_check(n, d, order)
        checks += rep["checks"]
        if not rep["ok"]:
            failures.append({"law": "equivariance", "d": d,
                             "failures": rep["failures"]})
    return {"suite": "equivariance", "n": n,
            "mode": "generic" if order is None else order,
            "checks": checks, "failures": failures, "passed": not failures}


def _random_homogeneous(rng, n, order, max_deg=3):
    while True:
        m = tuple(rng.randint(0, 2) for _ in range(n - 1))
        if 0 < sum(m) <= max_deg:
            break
    words = qalgebra.words_of_rootvec(m)
    terms = {}
    for _ in range(rng.randint(1, 2)):
        w = rng.choice(words)
        c = scalars.q_power(rng.randint(-2, 2), order)
        if rng.random() < 0.5:
            c = -c
        cur = terms.get(w)
        terms[w] = c if cur is None else cur + c
    poly = NCPoly("f", n, terms, order)
    return poly if not poly.is_zero() else _random_homogeneous(
        rng, n, order, max_deg)


def suite_pairing(n=3, order=None, degree_bound=5, seed=0, pairs=25):
    """Generic-mode Gram nondegeneracy and anti-multiplicativity of the
    pairing-induced dual map."""
    failures = []
    gram_checked = 0
    for m in itertools.product(*(range(degree_bound + 1),) * (n - 1)):
        if not 0 < sum(m) <= min(degree_bound, 5):
            continue
        beta = qalgebra.rootvec_to_weight(m, n)
        piece = qalgebra.graded_basis(beta, "e", n, None, degree_bound)
        rank = qalgebra.pairing_gram_rank(beta, n, None, degree_bound)
        gram_checked += 1
        if rank != piece.dim:
            failures.append({"law": "gram rank", "beta": m,
                             "rank": rank, "dim": piece.dim})
    rng = random.Random(seed)
    for _ in range(pairs):
        y1 = _random_homogeneous(rng, n, order)
        y2 = _random_homogeneous(rng, n, order)
        if sum(a + b for a, b in zip(y1.rootvec(), y2.rootvec())) > 5:
            continue
        lhs = qalgebra.functional_of(y1 * y2)
        rhs = qalgebra.functional_product(
            qalgebra.functional_of(y2), qalgebra.functional_of(y1),
            y2.rootvec(), y1.rootvec(), n, order)
        if any(lhs[w] != rhs[w] for w in lhs):
            failures.append({"law": "anti-multiplicativity",
                             "y1": repr(y1), "y2": repr(y2)})
    return {"suite": "pairing", "n": n,
            "mode": "generic" if order is None else order,
            "gram_checked": gram_checked, "random_pairs": pairs,
            "failures": failures, "passed": not failures}


def _random_word(rng, n, length, tilde):
    word = []
    for _ in range(length):
        if tilde:
            r = rng.randint(1, n - 1)
            s = rng.randint(r + 1, n)
        else:
            r = rng.randint(1, n)
            s = rng.randint(1, n)
        word.append((r, s))
    return tuple(word)


def suite_confluence(n=3, order=None, seed=0, samples=40, max_len=8):
    """Strategy independence, idempotence and bi-weight preservation of
    the straightening normal forms."""
    rng = random.Random(seed)
    failures = []
    for tilde in (False, True):
        for _ in range(samples):
            word = _random_word(rng, n, rng.randint(2, max_len), tilde)
            p = XiPoly(n, {word: scalars.one(order)}, order, tilde)
            left = qmatrix.normal_form(p, "leftmost")
            right = qmatrix.normal_form(p, "rightmost")
            if left != right:
                failures.append({"law": "confluence", "word": word,
                                 "tilde": tilde})
            if qmatrix.normal_form(left) != left:
                failures.append({"law": "idempotence", "word": word,
                                 "tilde": tilde})
            # the plain algebra preserves the full bi-weight; the
            # triangular one only the root degree (columns minus rows)
            if tilde:
                degs = {tuple(c - r for r, c in zip(*bw))
                        for q in (p, left) for bw in q.bi_weights()}
                if not left.is_zero() and len(degs) != 1:
                    failures.append({"law": "root degree", "word": word,
                                     "tilde": tilde})
            elif not left.is_zero() and left.bi_weights() != p.bi_weights():
                failures.append({"law": "bi-weight", "word": word,
                                 "tilde": tilde})
    return {"suite": "confluence", "n": n,
            "mode": "generic" if order is None else order,
            "samples": samples, "failures": failures, "passed": not failures}


SUITES = {
    "relations": lambda n, order, bound, seed: suite_relations(n, order),
    "pairing": lambda n, order, bound, seed: suite_pairing(
        n, order, min(bound, 5), seed),
    "equivariance": lambda n, order, bound, seed: suite_equivariance(
        n, order, min(bound, 4)),
    "pbw": lambda n, order, bound, seed: suite_pbw(n, order, bound),
    "kostant": lambda n, order, bound, seed: suite_kostant(n),
    "confluence": lambda n, order, bound, seed: suite_confluence(
        n, order, seed),
    "scalars": lambda n, order, bound, seed: suite_scalars(order, seed),
    "weyl": lambda n, order, bound, seed: suite_weyl(n, seed),
}


def run_suite(name, n=3, order=None, degree_bound=6, seed=0):
    if name == "all":
        reports = [run_suite(key, n, order, degree_bound, seed)
                   for key in sorted(SUITES)]
        return {"suite": "all", "reports": reports,
                "passed": all(r["passed"] for r in reports)}
    fn = SUITES.get(name)
    if fn is None:
        raise ValueError("unknown suite %r (have: %s)"
                         % (name, ", ".join(sorted(SUITES)) + ", all"))
    return fn(n, order, degree_bound, seed)
