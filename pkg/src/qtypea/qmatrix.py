"""Quantum matrix-coefficient generators xi_rs and their straightening.

The generators xi_rs of the quantized coordinate algebra satisfy, for
r < r' and s < s',

    xi_rs xi_rs'  = z xi_rs' xi_rs            (same row)
    xi_rs xi_r's  = z xi_r's xi_rs            (same column)
    xi_rs xi_r's' = xi_r's' xi_rs             (anti-diagonal)
    xi_rs xi_r's' = xi_r's' xi_rs + (z - z^-1) xi_r's xi_rs'   (diagonal)

with z the deformation parameter.  Straightening orders monomials
weakly increasing in the lexicographic order on index pairs.  The
triangular generators xt_rs (r < s) obey the companion relation set and
are straightened into row-descending blocks with columns ascending
inside each row; their diagonal overlap relation drops length by one,
which is what makes the ordered monomials a PBW basis.

verify_relations proves all four relation families as functionals on
the image of the quantized enveloping algebra in End(V x V), by growing
the operator subalgebra generated by the generator matrices to a fixed
point and pairing every relation against the whole span.
"""

from __future__ import annotations

import itertools

from . import qalgebra, scalars, vrep
from .scalars import ModeError, ScalarRing
from .weights import Weight


class XiPoly:
    """Linear combination of xi- or xt-words with exact coefficients."""

    __slots__ = ("n", "order", "tilde", "terms")

    def __init__(self, n, terms, order=None, tilde=False):
        self.n = n
        self.order = order
        self.tilde = tilde
        for word in terms:
            for r, s in word:
                if not (1 <= r <= n and 1 <= s <= n):
                    raise ValueError("index out of range: (%d, %d)" % (r, s))
                if tilde and not r < s:
                    raise ValueError(
                        "triangular generators need r < s: (%d, %d)" % (r, s))
        self.terms = {tuple(w): c for w, c in terms.items() if not c.is_zero()}

    @staticmethod
    def generator(r, s, n, order=None, tilde=False):
        return XiPoly(n, {((r, s),): scalars.one(order)}, order, tilde)

    @staticmethod
    def one(n, order=None, tilde=False):
        return XiPoly(n, {(): scalars.one(order)}, order, tilde)

    def _check(self, other):
        if (self.n, self.order, self.tilde) != (other.n, other.order, other.tilde):
            raise ModeError("incompatible xi-polynomials")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            v = terms.get(w)
            terms[w] = c if v is None else v + c
        return XiPoly(self.n, terms, self.order, self.tilde)

    def __sub__(self, other):
        return self + other.scale(scalars.integer(-1, self.order))

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                v = terms.get(w)
                terms[w] = c if v is None else v + c
        return XiPoly(self.n, terms, self.order, self.tilde)

    def scale(self, c):
        return XiPoly(self.n, {w: c * v for w, v in self.terms.items()},
                      self.order, self.tilde)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, XiPoly) and self.n == other.n
                and self.order == other.order and self.tilde == other.tilde
                and self.terms == other.terms)

    def bi_weights(self):
        """Set of (row content, column content) pairs over the terms."""
        out = set()
        for w in self.terms:
            rows = [0] * self.n
            cols = [0] * self.n
            for r, s in w:
                rows[r - 1] += 1
                cols[s - 1] += 1
            out.add((tuple(rows), tuple(cols)))
        return out

    def __str__(self):
        return format_xi(self)

    def __repr__(self):
        return "XiPoly(%s)" % format_xi(self)


def _tilde_key(pair):
    return (-pair[0], pair[1])


def rewrite_pair(a, b, ring, tilde):
    """Rewrite the descending adjacent product a*b, or return None if the
    pair is already ordered.  The result is a list of (coefficient,
    replacement letters)."""
    if tilde:
        if _tilde_key(a) <= _tilde_key(b):
            return None
        (r1, s1), (r2, s2) = a, b
        if r1 == r2:                       # same row, columns descending
            return [(ring.q(-1), [b, a])]
        # here r1 < r2 since key(a) > key(b)
        if s1 == s2:                       # same column
            return [(ring.q(1), [b, a])]
        if s2 < s1:                        # nested intervals
            return [(ring.one, [b, a])]
        if r2 > s1:                        # disjoint intervals
            return [(ring.one, [b, a])]
        if r2 == s1:
            # adjacent intervals: length drops.  The swap coefficient is
            # z^-1, the unique value compatible with the PBW basis: the
            # overlap xt[1,2] xt[2,4] xt[2,3] fails to resolve otherwise.
            return [(ring.q(-1), [b, a]),
                    (ring.q_minus_qinv, [(r1, s2)])]
        return [(ring.one, [b, a]),        # proper overlap
                (ring.q_minus_qinv, [(r2, s1), (r1, s2)])]
    if a <= b:
        return None
    (r1, s1), (r2, s2) = a, b
    if r1 == r2:                           # same row
        return [(ring.q(-1), [b, a])]
    # r1 > r2 since (r1, s1) > (r2, s2) lexicographically
    if s1 == s2:                           # same column
        return [(ring.q(-1), [b, a])]
    if s1 < s2:                            # anti-diagonal: free swap
        return [(ring.one, [b, a])]
    return [(ring.one, [b, a]),            # diagonal
            (-ring.q_minus_qinv, [(r1, s2), (r2, s1)])]


def _find_descent(word, tilde, strategy):
    idx = range(len(word) - 1)
    if strategy == "rightmost":
        idx = reversed(idx)
    for i in idx:
        if tilde:
            if _tilde_key(word[i]) > _tilde_key(word[i + 1]):
                return i
        elif word[i] > word[i + 1]:
            return i
    return None


def normal_form(p, strategy="leftmost"):
    """Straighten every monomial; terminates because each step replaces a
    word by words that are strictly smaller letterwise (or shorter)."""
    ring = ScalarRing(p.order)
    done = {}
    pending = dict(p.terms)
    while pending:
        word, coeff = pending.popitem()
        i = _find_descent(word, p.tilde, strategy)
        if i is None:
            v = done.get(word)
            v = coeff if v is None else v + coeff
            if v.is_zero():
                done.pop(word, None)
            else:
                done[word] = v
            continue
        for factor, repl in rewrite_pair(word[i], word[i + 1], ring, p.tilde):
            new = word[:i] + tuple(repl) + word[i + 2:]
            c = coeff * factor
            v = pending.get(new)
            v = c if v is None else v + c
            if v.is_zero():
                pending.pop(new, None)
            else:
                pending[new] = v
    return XiPoly(p.n, done, p.order, p.tilde)


def xi_normal_form(p, strategy="leftmost"):
    if p.tilde:
        raise ValueError("xi_normal_form expects plain xi input")
    return normal_form(p, strategy)


def tilde_normal_form(p, strategy="leftmost"):
    if not p.tilde:
        raise ValueError("tilde_normal_form expects triangular input")
    return normal_form(p, strategy)


def pbw_monomial_count(beta, n=None):
    """Number of ordered triangular monomials of root content beta:
    exponent vectors a with sum a_rs * alpha_rs = beta."""
    if n is None:
        n = beta.n
    m = qalgebra.weight_to_rootvec(beta)
    if m is None:
        return 0
    roots = [(r, s) for r in range(1, n + 1) for s in range(r + 1, n + 1)]
    vecs = [tuple(1 if r <= i + 1 < s else 0 for i in range(n - 1))
            for r, s in roots]

    def count(idx, rem):
        if all(c == 0 for c in rem):
            return 1
        if idx == len(vecs):
            return 0
        total = count(idx + 1, rem)
        cur = rem
        while True:
            cur = tuple(a - b for a, b in zip(cur, vecs[idx]))
            if any(c < 0 for c in cur):
                break
            total += count(idx + 1, cur)
        return total

    return count(0, m)


def pbw_count_crosscheck(beta, n=None, order=None, degree_bound=6):
    """(ordered monomial count, Serre-quotient dimension) for content beta."""
    if n is None:
        n = beta.n
    count = pbw_monomial_count(beta, n)
    dim = qalgebra.graded_basis(beta, "e", n, order, degree_bound).dim
    return count, dim


# ---------------------------------------------------------------------------
# matrix coefficients on tensor powers

def evaluate_on_tensor(word, uword, n, order=None, tensor_bound=4):
    """<xi_{r1 s1} ... xi_{rk sk}, u> as a matrix entry on V^(x)k."""
    word = tuple(word)
    if len(word) > tensor_bound:
        raise ValueError("tensor length bound exceeded: %d > %d"
                         % (len(word), tensor_bound))
    ring = ScalarRing(order)
    if not word:
        # the empty product is the counit
        return _counit(uword, ring)
    rows = tuple(r for r, _ in word)
    cols = tuple(s for _, s in word)
    vec = vrep.apply_word({cols: ring.one}, uword, ring)
    return vec.get(rows, ring.zero)


def _counit(uword, ring):
    for token in uword:
        if token[0] != "k":
            return ring.zero
    return ring.one


def operator_algebra_span(n, order=None):
    """Echelonized weight-graded span of the unital operator algebra
    generated on V x V by the standard generators.

    Returns (blocks, dimension) where blocks maps a weight key to a dict
    {pivot unit: reduced row over unit indices} together with the unit
    list of the block.
    """
    ring = ScalarRing(order)
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]

    def content(pair):
        out = [0] * n
        out[pair[0] - 1] += 1
        out[pair[1] - 1] += 1
        return tuple(out)

    def block_key(row, col):
        return tuple(a - b for a, b in zip(content(row), content(col)))

    units = {}     # key -> ordered list of (row, col)
    unit_pos = {}  # key -> {(row, col): index}
    for row in pairs:
        for col in pairs:
            key = block_key(row, col)
            units.setdefault(key, []).append((row, col))
    for key, lst in units.items():
        unit_pos[key] = {u: i for i, u in enumerate(lst)}

    gen_mats = []
    for token in vrep.standard_generators(n):
        mat = {}
        for col in pairs:
            out = vrep.apply_generator({col: ring.one}, token, ring)
            for row, c in out.items():
                mat[(row, col)] = c
        gen_mats.append(mat)

    echelon = {key: {} for key in units}

    def op_key(mat):
        for row, col in mat:
            return block_key(row, col)
        return None

    def insert(mat):
        key = op_key(mat)
        if key is None:
            return None, None
        pos = unit_pos[key]
        vec = {pos[u]: c for u, c in mat.items() if not c.is_zero()}
        rows = echelon[key]
        while vec:
            p = max(vec)
            row = rows.get(p)
            if row is None:
                inv = vec[p].inverse()
                vec = {k: v * inv for k, v in vec.items()}
                rows[p] = vec
                return key, vec
            c = vec[p]
            for k, v in row.items():
                w = vec.get(k)
                w = -c * v if w is None else w - c * v
                if w.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = w
        return None, None

    def vec_to_mat(key, vec):
        lst = units[key]
        return {lst[i]: c for i, c in vec.items()}

    def mat_mul(a, b):
        out = {}
        by_row = {}
        for (row, col), c in b.items():
            by_row.setdefault(row, []).append((col, c))
        for (row, mid), c1 in a.items():
            for col, c2 in by_row.get(mid, ()):
                cur = out.get((row, col))
                v = c1 * c2
                v = v if cur is None else cur + v
                if v.is_zero():
                    out.pop((row, col), None)
                else:
                    out[(row, col)] = v
        return out

    identity = {(p, p): ring.one for p in pairs}
    worklist = [identity]
    while worklist:
        mat = worklist.pop()
        key, vec = insert(mat)
        if key is None:
            continue
        rep = vec_to_mat(key, vec)
        for g in gen_mats:
            prod = mat_mul(rep, g)
            if prod:
                worklist.append(prod)
    dim = sum(len(rows) for rows in echelon.values())
    return (units, unit_pos, echelon), dim


def _relation_instances(n, ring):
    """All instances of the four relation families as entry functionals."""
    zz = ring.q_minus_qinv
    out = []
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            for s2 in range(s + 1, n + 1):
                out.append(("same-row", (r, s, s2),
                            {((r, r), (s, s2)): ring.one,
                             ((r, r), (s2, s)): -ring.q(1)}))
    for s in range(1, n + 1):
        for r in range(1, n + 1):
            for r2 in range(r + 1, n + 1):
                out.append(("same-column", (r, r2, s),
                            {((r, r2), (s, s)): ring.one,
                             ((r2, r), (s, s)): -ring.q(1)}))
    for r in range(1, n + 1):
        for r2 in range(r + 1, n + 1):
            for s in range(1, n + 1):
                for s2 in range(1, n + 1):
                    if s > s2:
                        out.append(("anti-diagonal", (r, s, r2, s2),
                                    {((r, r2), (s, s2)): ring.one,
                                     ((r2, r), (s2, s)): -ring.one}))
                    elif s < s2:
                        out.append(("diagonal", (r, s, r2, s2),
                                    {((r, r2), (s, s2)): ring.one,
                                     ((r2, r), (s2, s)): -ring.one,
                                     ((r2, r), (s, s2)): -zz}))
    return out


class RelationReport:
    """Outcome of the complete operator-algebra relation check."""

    def __init__(self, n, order, algebra_dim, families, row_one):
        self.n = n
        self.order = order
        self.algebra_dim = algebra_dim
        self.families = families
        self.row_one = row_one

    @property
    def ok(self):
        return (all(not f["failures"] for f in self.families.values())
                and not self.row_one["failures"])

    def to_json(self):
        return {
            "n": self.n,
            "mode": "generic" if self.order is None else self.order,
            "algebra_dim": self.algebra_dim,
            "families": self.families,
            "row_one_q_commutation": self.row_one,
            "ok": self.ok,
        }


def verify_relations(n, order=None, bound=4):
    """Prove the defining relations as functionals on the whole operator
    subalgebra generated on V x V (complete by the span fixed point)."""
    if n > bound:
        raise ValueError("rank bound exceeded: n=%d > %d" % (n, bound))
    ring = ScalarRing(order)
    (units, unit_pos, echelon), dim = operator_algebra_span(n, order)

    def content(pair):
        out = [0] * n
        out[pair[0] - 1] += 1
        out[pair[1] - 1] += 1
        return tuple(out)

    def check(rel):
        keys = {tuple(a - b for a, b in zip(content(row), content(col)))
                for row, col in rel}
        assert len(keys) == 1, "relation functional is not weight-homogeneous"
        key = keys.pop()
        pos = unit_pos[key]
        failures = []
        for pivot, row in echelon[key].items():
            val = ring.zero
            for u, c in rel.items():
                v = row.get(pos[u])
                if v is not None:
                    val = val + c * v
            if not val.is_zero():
                failures.append({"pivot_unit": units[key][pivot],
                                 "value": str(val)})
        return failures

    families = {}
    row_one = {"instances": 0, "failures": []}
    for name, indices, rel in _relation_instances(n, ring):
        fam = families.setdefault(name, {"instances": 0, "failures": []})
        fam["instances"] += 1
        fails = check(rel)
        if fails:
            fam["failures"].append({"indices": indices, "witnesses": fails})
        if name == "same-row" and indices[0] == 1:
            row_one["instances"] += 1
            if fails:
                row_one["failures"].append({"indices": indices})
    return RelationReport(n, order, dim, families, row_one)


# ---------------------------------------------------------------------------
# display

def format_xi(p, var=None):
    """Render a xi-polynomial in the x[r,s] / xt[r,s] surface syntax."""
    if not p.terms:
        return "0"
    name = "xt" if p.tilde else "x"
    words = sorted(p.terms, key=lambda w: (-len(w), w))
    parts = []
    for w in words:
        body = " ".join("%s[%d,%d]" % (name, r, s) for r, s in w)
        neg, cs = format_coefficient(p.terms[w], var)
        if not body:
            piece = cs
        elif cs == "1":
            piece = body
        else:
            piece = "%s %s" % (cs, body)
        if not parts:
            parts.append(("-" if neg else "") + piece)
        else:
            parts.append((" - " if neg else " + ") + piece)
    return "".join(parts)


def format_coefficient(c, var=None):
    """(is_negated, rendered string), parenthesized unless atomic."""
    cs = c.str(var)
    neg = False
    if cs.startswith("-"):
        flipped = (-c).str(var)
        if not flipped.startswith("-"):
            neg = True
            cs = flipped
    if not _is_atomic_str(cs):
        cs = "(" + cs + ")"
    return neg, cs


def _is_atomic_str(s):
    return " " not in s and "/" not in s and not s.startswith("(")


def parse_expression(text, n, order=None):
    """Parse the textual syntax: words like "x[1,2] x[2,1]" or
    "xt[1,2] xt[2,3]" with scalar Laurent coefficients in q or z."""
    from . import syntax
    return syntax.parse_xi(text, n, order)
