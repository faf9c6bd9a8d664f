"""Borel-Weil-Bott rule for induced line modules and its desk-scale tables.

The rule: if lam + rho lies on a reflection wall the induction vanishes
in every degree; otherwise the unique w making w o lam dominant
concentrates the answer in degree length(w), with value the dual Weyl
module of highest weight w o lam.  At a root of unity the rule is only
licensed for small weights, |<lam + rho, alpha^vee>| <= ell for every
root alpha (ell the multiplicative order of zeta^2, boundary included);
anything larger raises OutOfValidatedRangeError rather than guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalars import ell_of_order
from .weights import Weight, dominant_conjugate, positive_roots


class OutOfValidatedRangeError(ValueError):
    """Root-of-unity input outside the validated smallness range."""


class VerificationError(AssertionError):
    """A table contract that is a theorem failed to verify."""


@dataclass(frozen=True)
class CohomologyAnswer:
    """Either a vanishing answer or (degree, dominant weight, dimension)."""

    vanishes: bool
    degree: int | None = None
    mu: Weight | None = None
    dim: int | None = None

    @staticmethod
    def vanish():
        return CohomologyAnswer(True)

    @staticmethod
    def concentrated(degree, mu, dim):
        return CohomologyAnswer(False, degree, mu, dim)

    def to_json(self):
        if self.vanishes:
            return "vanishes"
        return {"i": self.degree, "mu": self.mu.serialize(), "dim": self.dim}


def weyl_dimension(mu):
    """prod over positive roots of <mu+rho, a^vee>/<rho, a^vee>."""
    if not mu.is_dominant():
        raise ValueError("weyl_dimension expects a dominant weight")
    n = mu.n
    shifted = mu + Weight.rho(n)
    num = 1
    den = 1
    for r, s in positive_roots(n):
        num *= shifted.pair_coroot(r, s)
        den *= s - r
    out = Fraction(num, den)
    assert out.denominator == 1
    return int(out)


def bwb(lam, order=None):
    """The Borel-Weil-Bott answer for the weight lam.

    order None means the generic parameter; an integer means the
    canonical root of unity of that order, in which case the smallness
    precondition is enforced.
    """
    n = lam.n
    if order is not None:
        ell = ell_of_order(order)
        shifted = lam + Weight.rho(n)
        worst = max(abs(shifted.pair_coroot(r, s))
                    for r, s in positive_roots(n))
        if worst > ell:
            raise OutOfValidatedRangeError(
                "|<lam+rho, alpha^vee>| = %d exceeds ell = %d; the rule is "
                "only validated for small weights" % (worst, ell))
    conj = dominant_conjugate(lam)
    if conj is None:
        return CohomologyAnswer.vanish()
    w, mu = conj
    return CohomologyAnswer.concentrated(w.length(), mu, weyl_dimension(mu))


def _require_ell(n, order):
    if order is not None and ell_of_order(order) < n:
        raise OutOfValidatedRangeError(
            "tables need ell >= n; got ell = %d < n = %d"
            % (ell_of_order(order), n))


def step_lemma_table(n, a, order=None):
    """Answers for the weights -(alpha_{1 j_1} + ... + alpha_{1 j_a}) over
    all tuples 2 <= j_1 < ... < j_a <= n.

    Exactly the tuple (2, ..., a+1) survives, in degree a with the
    trivial module; any other outcome raises VerificationError.
    """
    if not 0 <= a <= n - 1:
        raise ValueError("need 0 <= a <= n-1")
    _require_ell(n, order)
    rows = []
    survivors = []
    for js in itertools.combinations(range(2, n + 1), a):
        lam = Weight.zero(n)
        for j in js:
            lam = lam - Weight.alpha(1, j, n)
        ans = bwb(lam, order)
        rows.append({"j": list(js), "result": ans.to_json()})
        if not ans.vanishes:
            survivors.append((js, ans))
    expected = tuple(range(2, a + 2))
    ok = (len(survivors) == 1 and survivors[0][0] == expected
          and survivors[0][1].degree == a
          and survivors[0][1].mu.is_zero() and survivors[0][1].dim == 1)
    if not ok:
        raise VerificationError(
            "step table contract failed for n=%d a=%d: %r" % (n, a, survivors))
    return {"n": n, "a": a,
            "mode": "generic" if order is None else order,
            "tuples": rows}


def wedge_weight_vanishing(n, a, k, order=None):
    """All weights -(a-k) eps_1 - alpha_{1 j_1} - ... - alpha_{1 j_k} have
    vanishing induction, for 0 <= k < a < n; verified tuple by tuple."""
    if not 0 <= k < a < n:
        raise ValueError("need 0 <= k < a < n")
    _require_ell(n, order)
    rows = []
    failures = []
    for js in itertools.combinations(range(2, n + 1), k):
        lam = Weight.eps(1, n).scale(-(a - k))
        for j in js:
            lam = lam - Weight.alpha(1, j, n)
        ans = bwb(lam, order)
        rows.append({"j": list(js), "result": ans.to_json()})
        if not ans.vanishes:
            failures.append(js)
    if failures:
        raise VerificationError(
            "wedge-weight vanishing failed for n=%d a=%d k=%d at %r"
            % (n, a, k, failures))
    return {"n": n, "a": a, "k": k,
            "mode": "generic" if order is None else order,
            "tuples": rows, "all_vanish": True}
