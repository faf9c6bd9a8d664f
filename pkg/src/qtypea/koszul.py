"""Quantum symmetric and exterior algebras on V and the Koszul complex.

S_z V is the quotient of the tensor algebra by v_r v_s - z v_s v_r
(r < s); the quantum exterior algebra by v_r v_r and v_r v_s + z^-1
v_s v_r (r < s).  Sorted monomials are the normal forms.  The strand of
total degree d is

    ... -> S^{d-p-1} x Ext^{p+1} -> S^{d-p} x Ext^p -> ... -> S^d

with differential

    D(m x v_{r_1}^...^v_{r_{p+1}})
        = sum_a (-z)^(a-1) (m v_{r_a}) x (wedge with v_{r_a} omitted).

The exponent +(a-1) is the unique sign of this shape with D o D = 0
against the relation conventions above.  All module actions come from
iterated comultiplication on tensor representatives and are pushed to
the quotient bases; descent to the quotient is checked, not assumed.
"""

from __future__ import annotations

import itertools

from . import scalars, vrep
from .scalars import GradedMap, ScalarRing


class DescentError(AssertionError):
    """The requested action does not preserve the defining ideal."""


def sym_basis(n, d):
    return list(itertools.combinations_with_replacement(range(1, n + 1), d))


def ext_basis(n, p):
    return list(itertools.combinations(range(1, n + 1), p))


def strand_basis(n, p, d):
    """Basis of S^{d-p} x Ext^p as (sym word, ext word) pairs."""
    if p < 0 or p > n or p > d:
        return []
    return [(m, w) for m in sym_basis(n, d - p) for w in ext_basis(n, p)]


def _inversions(word):
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word))
               if word[i] > word[j])


def project_sym(word, ring):
    """Image of a tensor word in S: (coefficient, sorted word)."""
    return ring.q(-_inversions(word)), tuple(sorted(word))


def project_ext(word, ring):
    """Image of a tensor word in Ext, or None when it dies."""
    if len(set(word)) < len(word):
        return None
    inv = _inversions(word)
    coeff = ring.q(inv)
    if inv % 2:
        coeff = -coeff
    return coeff, tuple(sorted(word))


def sym_product(a, b, ring):
    """(coefficient, merged word) with v_r v_s = z v_s v_r for r < s."""
    cross = sum(1 for x in a for y in b if x > y)
    return ring.q(-cross), tuple(sorted(a + b))


def ext_product(a, b, ring):
    """(coefficient, merged word), or None on a repeated index."""
    merged = a + b
    if len(set(merged)) < len(merged):
        return None
    cross = sum(1 for x in a for y in b if x > y)
    coeff = ring.q(cross)
    if cross % 2:
        coeff = -coeff
    return coeff, tuple(sorted(merged))


def _content(words, n):
    out = [0] * n
    for w in words:
        for x in w:
            out[x - 1] += 1
    return tuple(out)


def koszul_differential(n, p, d, order=None):
    """The differential from the (p+1, d) strand piece to the (p, d) one."""
    if not 0 <= p <= n - 1:
        raise ValueError("exterior degree out of range: p=%d" % p)
    ring = ScalarRing(order)
    source = strand_basis(n, p + 1, d)
    target = strand_basis(n, p, d)
    tpos = {b: i for i, b in enumerate(target)}
    cols = []
    for m, w in source:
        col = {}
        for a, r in enumerate(w):
            sign_coeff = ring.q(a)
            if a % 2:
                sign_coeff = -sign_coeff
            pc, prod = sym_product(m, (r,), ring)
            rest = w[:a] + w[a + 1:]
            idx = tpos[(prod, rest)]
            c = sign_coeff * pc
            cur = col.get(idx)
            col[idx] = c if cur is None else cur + c
        cols.append(col)
    return GradedMap(source, target, cols, order,
                     source_keys=[_content(b, n) for b in source],
                     target_keys=[_content(b, n) for b in target])


def augmentation(n, d, order=None):
    """S^d -> K: the identity for d = 0 and zero otherwise."""
    source = strand_basis(n, 0, d)
    target = [()]
    one = scalars.one(order)
    cols = [({0: one} if d == 0 else {}) for _ in source]
    return GradedMap(source, target, cols, order)


class StrandHomology:
    def __init__(self, n, d, order, dims, ranks, betti):
        self.n = n
        self.d = d
        self.order = order
        self.dims = dims
        self.ranks = ranks
        self.betti = betti

    @property
    def exact(self):
        if self.d == 0:
            return self.betti[0] == 1 and not any(self.betti[1:])
        return not any(self.betti)

    def to_json(self):
        return {"n": self.n, "d": self.d,
                "mode": "generic" if self.order is None else self.order,
                "dims": self.dims, "ranks": self.ranks, "betti": self.betti,
                "exact": self.exact}


def strand_homology(n, d, order=None):
    """Betti numbers b_0..b_n of the degree-d strand."""
    top = min(n, d)
    dims = [len(strand_basis(n, p, d)) for p in range(n + 1)]
    ranks = [koszul_differential(n, p, d, order).rank() for p in range(top)]
    betti = []
    for p in range(n + 1):
        b = dims[p]
        if p - 1 >= 0 and p - 1 < len(ranks):
            b -= ranks[p - 1]
        if p < len(ranks):
            b -= ranks[p]
        betti.append(b)
    return StrandHomology(n, d, order, dims, ranks, betti)


def homology_table(n, d_max, order=None):
    return [strand_homology(n, d, order).to_json() for d in range(d_max + 1)]


# ---------------------------------------------------------------------------
# module structure

_descent_cache = {}


def _check_descent(n, order, kind):
    """Verify each generator preserves the degree-2 defining ideal; by
    coassociativity this is exactly what descent needs in every degree."""
    key = (n, order, kind)
    if key in _descent_cache:
        return
    ring = ScalarRing(order)
    pairs = [(r, s) for r in range(1, n + 1) for s in range(1, n + 1)]
    pos = {t: i for i, t in enumerate(pairs)}
    rels = []
    if kind == "sym":
        for r in range(1, n + 1):
            for s in range(r + 1, n + 1):
                rels.append({pos[(r, s)]: ring.one, pos[(s, r)]: -ring.q(1)})
    else:
        for r in range(1, n + 1):
            rels.append({pos[(r, r)]: ring.one})
            for s in range(r + 1, n + 1):
                rels.append({pos[(r, s)]: ring.one, pos[(s, r)]: ring.q(-1)})
    echelon = {}

    def reduce(vec):
        vec = dict(vec)
        while vec:
            pmax = max(vec)
            row = echelon.get(pmax)
            if row is None:
                return vec
            c = vec[pmax]
            for k, v in row.items():
                w = vec.get(k)
                w = -c * v if w is None else w - c * v
                if w.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = w
        return vec

    for rel in rels:
        vec = reduce(rel)
        if vec:
            pmax = max(vec)
            inv = vec[pmax].inverse()
            echelon[pmax] = {k: v * inv for k, v in vec.items()}
    for token in vrep.standard_generators(n):
        for rel in rels:
            vec = {pairs[i]: c for i, c in rel.items()}
            image = vrep.apply_generator(vec, token, ring)
            residual = reduce({pos[t]: c for t, c in image.items()})
            if residual:
                raise DescentError(
                    "generator %r does not preserve the %s ideal" % (token, kind))
    _descent_cache[key] = True


def _quotient_action(token, basis, project, n, ring):
    bpos = {b: i for i, b in enumerate(basis)}
    cols = []
    for mono in basis:
        out = vrep.apply_generator({mono: ring.one}, token, ring)
        col = {}
        for word, c in out.items():
            proj = project(word, ring)
            if proj is None:
                continue
            pc, rep = proj
            idx = bpos[rep]
            v = c * pc
            cur = col.get(idx)
            v = v if cur is None else cur + v
            if v.is_zero():
                col.pop(idx, None)
            else:
                col[idx] = v
        cols.append(col)
    return cols


def generator_action(token, space, n, order=None):
    """Matrix of one generator on ("sym", d), ("ext", p) or ("strand", p, d).

    Raises DescentError if the action fails to preserve the defining
    ideal (which would signal a relation or convention bug).
    """
    ring = ScalarRing(order)
    kind = space[0]
    if kind == "sym":
        _check_descent(n, order, "sym")
        basis = sym_basis(n, space[1])
        cols = _quotient_action(token, basis, project_sym, n, ring)
        keys = [_content((b,), n) for b in basis]
        return GradedMap(basis, basis, cols, order,
                         source_keys=keys, target_keys=keys)
    if kind == "ext":
        _check_descent(n, order, "ext")
        basis = ext_basis(n, space[1])
        cols = _quotient_action(token, basis, project_ext, n, ring)
        keys = [_content((b,), n) for b in basis]
        return GradedMap(basis, basis, cols, order,
                         source_keys=keys, target_keys=keys)
    if kind != "strand":
        raise ValueError("unknown space: %r" % (space,))
    p, d = space[1], space[2]
    sym_map = generator_action(token, ("sym", d - p), n, order)
    ext_map = generator_action(token, ("ext", p), n, order)
    sbasis = sym_map.source
    ebasis = ext_map.source
    basis = strand_basis(n, p, d)
    bpos = {b: i for i, b in enumerate(basis)}
    spos = {b: i for i, b in enumerate(sbasis)}
    epos = {b: i for i, b in enumerate(ebasis)}

    def pairing(word, i):
        c = _content((word,), n)
        return c[i - 1] - c[i]

    cols = []
    kind_token = token[0]
    for m, w in basis:
        col = {}

        def add(idx, v):
            cur = col.get(idx)
            v = v if cur is None else cur + v
            if v.is_zero():
                col.pop(idx, None)
            else:
                col[idx] = v

        if kind_token == "k":
            _, r, sign = token
            count = sum(1 for x in m if x == r) + sum(1 for x in w if x == r)
            add(bpos[(m, w)], ring.q(sign * count))
        elif kind_token == "e":
            i = token[1]
            for si, c in sym_map.cols[spos[m]].items():
                add(bpos[(sbasis[si], w)], c)
            twist = ring.q(pairing(m, i))
            for ei, c in ext_map.cols[epos[w]].items():
                add(bpos[(m, ebasis[ei])], twist * c)
        else:
            i = token[1]
            twist = ring.q(-pairing(w, i))
            for si, c in sym_map.cols[spos[m]].items():
                add(bpos[(sbasis[si], w)], twist * c)
            for ei, c in ext_map.cols[epos[w]].items():
                add(bpos[(m, ebasis[ei])], c)
        cols.append(col)
    return GradedMap(basis, basis, cols, order)


def equivariance_check(n, d, order=None):
    """Check M(g) o D = D o M(g) for every generator and every strand map."""
    top = min(n, d)
    failures = []
    checks = 0
    for p in range(top):
        diff = koszul_differential(n, p, d, order)
        for token in vrep.standard_generators(n):
            src = generator_action(token, ("strand", p + 1, d), n, order)
            tgt = generator_action(token, ("strand", p, d), n, order)
            checks += 1
            if tgt.compose(diff) != diff.compose(src):
                failures.append({"p": p, "generator": token})
    return {"n": n, "d": d,
            "mode": "generic" if order is None else order,
            "checks": checks, "failures": failures,
            "ok": not failures}
