"""Twisted Weyl action on the group algebra of the weight lattice, and
the free-basis decomposition of partial invariants over full invariants.

The twisted action rescales the plain permutation action by the cocycle
z^{2 <rho, j(w lam - lam)>}; the exponent is even by construction and
this is asserted at runtime.  Twisted invariants are computed orbit by
orbit (the action permutes weight lines), and the decomposition of a
twisted W_J-invariant over the full twisted invariants with free basis
{chi_{a eps_1} : a = 0..n-1} is solved by exact sparse linear algebra
over a weight box.  J is always {2, .., n-1}: the row subgroup fixing
the first coordinate.
"""

from __future__ import annotations

import itertools

from . import scalars
from .scalars import ScalarRing, ModeError
from .weights import Weight, WeylElt


class NotInvariantError(ValueError):
    """Input to decompose is not invariant under the row subgroup."""


class BoxTooSmallError(ValueError):
    """The weight box cannot close the decomposition system."""


class GroupAlgebraElement:
    """Finite combination sum c_lam chi_lam with exact coefficients."""

    __slots__ = ("n", "order", "terms")

    def __init__(self, n, terms, order=None):
        self.n = n
        self.order = order
        clean = {}
        for lam, c in terms.items():
            coords = lam.coords if isinstance(lam, Weight) else tuple(lam)
            if len(coords) != n:
                raise ValueError("weight of wrong rank: %r" % (coords,))
            if not c.is_zero():
                clean[coords] = c
        self.terms = clean

    @staticmethod
    def chi(lam, order=None, coeff=None):
        coeff = coeff if coeff is not None else scalars.one(order)
        return GroupAlgebraElement(lam.n, {lam.coords: coeff}, order)

    @staticmethod
    def zero(n, order=None):
        return GroupAlgebraElement(n, {}, order)

    def _check(self, other):
        if (self.n, self.order) != (other.n, other.order):
            raise ModeError("incompatible group algebra elements")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            v = terms.get(lam)
            terms[lam] = c if v is None else v + c
        return GroupAlgebraElement(self.n, terms, self.order)

    def __sub__(self, other):
        return self + other.scale(scalars.integer(-1, self.order))

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                lam = tuple(a + b for a, b in zip(l1, l2))
                c = c1 * c2
                v = terms.get(lam)
                terms[lam] = c if v is None else v + c
        return GroupAlgebraElement(self.n, terms, self.order)

    def scale(self, c):
        return GroupAlgebraElement(
            self.n, {lam: c * v for lam, v in self.terms.items()}, self.order)

    def is_zero(self):
        return not self.terms

    def support(self):
        return set(self.terms)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement) and self.n == other.n
                and self.order == other.order and self.terms == other.terms)

    def __str__(self):
        from .qmatrix import format_coefficient
        if not self.terms:
            return "0"
        parts = []
        for lam in sorted(self.terms):
            chi = "chi[%s]" % ",".join(str(x) for x in lam)
            neg, cs = format_coefficient(self.terms[lam])
            piece = chi if cs == "1" else "%s * %s" % (cs, chi)
            if not parts:
                parts.append(("-" if neg else "") + piece)
            else:
                parts.append((" - " if neg else " + ") + piece)
        return "".join(parts)

    def __repr__(self):
        return "GroupAlgebraElement(%s)" % str(self)


def _rho_pair(coords, n):
    rho = range(n - 1, -1, -1)
    return sum(r * c for r, c in zip(rho, coords))


def _cocycle_exponent(target, source, n):
    """2 <rho, j(w lam - lam)> for w lam = target, lam = source."""
    exp = 2 * (_rho_pair(target, n) - _rho_pair(source, n))
    assert exp % 2 == 0, "twist exponent must be even"
    return exp


def twisted_action(w, f, untwisted=False):
    """w o chi_lam = z^{2<rho, j(w lam - lam)>} chi_{w lam}, extended
    linearly; with untwisted=True the cocycle is forced to 1."""
    n = f.n
    terms = {}
    for coords, c in f.terms.items():
        target = w.act(Weight(coords)).coords
        if not untwisted:
            c = c * scalars.q_power(_cocycle_exponent(target, coords, n),
                                    f.order)
        v = terms.get(target)
        terms[target] = c if v is None else v + c
    return GroupAlgebraElement(n, terms, f.order)


def row_subgroup_generators(n):
    """Simple reflections of W_J for J = {2..n-1} (empty when n = 2)."""
    return [WeylElt.simple(j, n) for j in range(2, n)]


def full_group_generators(n):
    return [WeylElt.simple(i, n) for i in range(1, n)]


def is_twisted_invariant(f, generators, untwisted=False):
    return all(twisted_action(w, f, untwisted) == f for w in generators)


def _orbit(coords, subgroup_full):
    """Orbit under coordinate permutations; the row subgroup fixes slot 1."""
    if subgroup_full:
        perms = set(itertools.permutations(coords))
    else:
        perms = {(coords[0],) + rest
                 for rest in itertools.permutations(coords[1:])}
    return sorted(perms)


def orbit_invariant_basis(lam, subgroup="W", order=None, untwisted=False):
    """The unique (up to scale) twisted invariant supported on the orbit
    of lam, normalized to coefficient 1 on lam.

    The twist exponent depends only on the target weight, so the
    stabilizer cocycle is trivial and the invariant always exists; the
    result is verified against every simple reflection of the subgroup.
    """
    n = lam.n
    coords = lam.coords
    terms = {}
    for mu in _orbit(coords, subgroup == "W"):
        if untwisted:
            c = scalars.one(order)
        else:
            c = scalars.q_power(_cocycle_exponent(mu, coords, n), order)
        terms[mu] = c
    f = GroupAlgebraElement(n, terms, order)
    gens = (full_group_generators(n) if subgroup == "W"
            else row_subgroup_generators(n))
    if not is_twisted_invariant(f, gens, untwisted):
        raise AssertionError("orbit invariant failed verification: %r" % (lam,))
    return f


def elementary_symmetric(k, n, order=None):
    """sigma_k = sum over k-subsets S of chi_{sum_{r in S} eps_r}
    (untwisted W-invariant)."""
    terms = {}
    one = scalars.one(order)
    for subset in itertools.combinations(range(n), k):
        coords = tuple(1 if i in subset else 0 for i in range(n))
        terms[coords] = one
    return GroupAlgebraElement(n, terms, order)


def recompose(fs, order=None):
    """sum_a f_a * chi_{a eps_1}."""
    n = fs[0].n
    out = GroupAlgebraElement.zero(n, order)
    for a, f in enumerate(fs):
        shift = GroupAlgebraElement.chi(Weight.eps(1, n).scale(a), order)
        out = out + f * shift
    return out


def decompose(g, box=None, untwisted=False, return_certificate=False):
    """Write a twisted W_J-invariant g as sum_a f_a chi_{a eps_1} with
    every f_a a twisted W-invariant; the f_a are unique.

    Solved by exact linear algebra: unknowns are coefficients of full
    orbit invariants shifted by chi_{a eps_1}, restricted to the weight
    box [-box, box]^n; the system having full column rank certifies
    uniqueness, and inconsistency reports a too-small box.
    """
    n = g.n
    order = g.order
    if box is None:
        box = n + 2
    if not is_twisted_invariant(g, row_subgroup_generators(n), untwisted):
        raise NotInvariantError("input is not invariant under the row subgroup")
    for coords in g.terms:
        if any(abs(c) > box for c in coords):
            raise BoxTooSmallError("support exceeds the weight box")

    def rep_of(coords):
        return tuple(sorted(coords, reverse=True))

    # close the unknown set and the constraint rows
    unknowns = {}
    rows = set()
    pending = list(g.terms)
    seen_rows = set()
    while pending:
        nu = pending.pop()
        if nu in seen_rows:
            continue
        seen_rows.add(nu)
        rows.add(nu)
        for a in range(n):
            shifted = (nu[0] - a,) + nu[1:]
            rep = rep_of(shifted)
            if any(abs(c) > box for c in rep):
                continue
            if (a, rep) in unknowns:
                continue
            unknowns[(a, rep)] = None
            for mu in _orbit(rep, True):
                target = (mu[0] + a,) + mu[1:]
                if target not in seen_rows:
                    pending.append(target)
    unknown_list = sorted(unknowns)
    upos = {u: i for i, u in enumerate(unknown_list)}
    ring = ScalarRing(order)

    # sparse rows: weight nu -> {unknown index: coefficient}
    system = {nu: {} for nu in rows}
    for (a, rep) in unknown_list:
        j = upos[(a, rep)]
        for mu in _orbit(rep, True):
            target = (mu[0] + a,) + mu[1:]
            if target not in system:
                # contribution escapes the assembled row set: the set is
                # closed by construction, so this cannot happen
                raise AssertionError("row closure violated")
            if untwisted:
                c = ring.one
            else:
                c = ring.q(_cocycle_exponent(mu, rep, n))
            cur = system[target].get(j)
            system[target][j] = c if cur is None else cur + c
    rhs = {nu: g.terms.get(nu, ring.zero) for nu in rows}

    # sparse Gaussian elimination, certifying full column rank
    rows_left = {nu: row for nu, row in system.items()}
    by_col = {}
    for nu, row in rows_left.items():
        for j in row:
            by_col.setdefault(j, set()).add(nu)
    solution = [None] * len(unknown_list)
    elim_order = []
    pivot_of = {}
    for j in range(len(unknown_list)):
        candidates = [nu for nu in by_col.get(j, ()) if j in rows_left.get(nu, {})]
        if not candidates:
            raise BoxTooSmallError(
                "column %r lost all rows; enlarge the weight box"
                % (unknown_list[j],))
        pivot = min(candidates, key=lambda nu: (len(rows_left[nu]), nu))
        prow = rows_left.pop(pivot)
        pval = prow[j]
        inv = pval.inverse()
        prow = {k: v * inv for k, v in prow.items()}
        prhs = rhs[pivot] * inv
        for k in prow:
            by_col.setdefault(k, set()).discard(pivot)
        for nu in list(by_col.get(j, ())):
            row = rows_left.get(nu)
            if row is None or j not in row:
                continue
            c = row.pop(j)
            by_col[j].discard(nu)
            for k, v in prow.items():
                if k == j:
                    continue
                w = row.get(k)
                w = -c * v if w is None else w - c * v
                if w.is_zero():
                    row.pop(k, None)
                    by_col.setdefault(k, set()).discard(nu)
                else:
                    row[k] = w
                    by_col.setdefault(k, set()).add(nu)
            rhs[nu] = rhs[nu] - c * prhs
        pivot_of[j] = (prow, prhs)
        elim_order.append(j)
    # remaining rows must be trivial, otherwise the box clipped the system
    for nu, row in rows_left.items():
        assert not row, "elimination left a live row"
        if not rhs[nu].is_zero():
            raise BoxTooSmallError(
                "inconsistent row at weight %r; enlarge the weight box" % (nu,))
    # back substitution, in reverse elimination order
    for j in reversed(elim_order):
        prow, prhs = pivot_of[j]
        val = prhs
        for k, v in prow.items():
            if k != j:
                val = val - v * solution[k]
        solution[j] = val
    # assemble the invariants
    fs = []
    for a in range(n):
        terms = {}
        for (aa, rep), j in upos.items():
            if aa != a or solution[j].is_zero():
                continue
            for mu in _orbit(rep, True):
                c = solution[j] if untwisted else solution[j] * ring.q(
                    _cocycle_exponent(mu, rep, n))
                cur = terms.get(mu)
                terms[mu] = c if cur is None else cur + c
        fs.append(GroupAlgebraElement(n, terms, order))
    if recompose(fs, order) != g:
        raise BoxTooSmallError("solution does not recompose; enlarge the box")
    if return_certificate:
        return fs, {"unknowns": len(unknown_list), "rank": len(elim_order)}
    return fs


def untwisted_power_decomposition(p, n, order=None):
    """Classical constructive path: decompose z_1^p over {z_1^a} with
    symmetric-function coefficients via the characteristic identity
    z_1^n = sum_{k=1}^n (-1)^(k+1) sigma_k z_1^(n-k)."""
    if p < 0:
        raise ValueError("nonnegative powers only")
    zero = GroupAlgebraElement.zero(n, order)
    one = GroupAlgebraElement.chi(Weight.zero(n), order)
    if p < n:
        return [one if a == p else zero for a in range(n)]
    # z_1^p = sum_k (-1)^(k+1) sigma_k z_1^(p-k)
    out = [zero] * n
    for k in range(1, n + 1):
        sig = elementary_symmetric(k, n, order)
        if k % 2 == 0:
            sig = sig.scale(scalars.integer(-1, order))
        sub = untwisted_power_decomposition(p - k, n, order)
        for a in range(n):
            if not sub[a].is_zero():
                out[a] = out[a] + sig * sub[a]
    return out
