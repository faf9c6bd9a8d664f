"""Graded pieces of the quantized nilpotent algebras and the Drinfeld pairing.

The positive part is generated by e_1..e_{n-1} subject to the quantum
Serre relations; the negative (De Concini-Kac) part by f_1..f_{n-1}.
Each graded piece is cut out exactly, per multidegree, by spanning the
embedded Serre relations inside the free algebra and eliminating.  The
Drinfeld pairing tau is evaluated by peeling letters of the second
argument through the comultiplication of the first, with all k-twists
tracked as explicit powers of the deformation parameter.
"""

from __future__ import annotations

import itertools

from . import scalars
from .scalars import ScalarRing, ModeError
from .weights import Weight


def cartan(i, j):
    """Cartan matrix entry a_{ij} of type A: also (alpha_i, alpha_j)."""
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def root_form(gamma, delta):
    """The W-invariant form (gamma, delta) on root-coordinate vectors."""
    return sum(g * cartan(i + 1, j + 1) * d
               for i, g in enumerate(gamma) if g
               for j, d in enumerate(delta) if d)


def weight_to_rootvec(beta):
    """Simple-root coordinates of a weight in the root lattice, or None.

    beta = sum_i m_i alpha_i has m_i equal to the i-th partial sum of the
    epsilon-coordinates; all partial sums must be >= 0 and the total 0.
    """
    total = 0
    out = []
    for c in beta.coords[:-1]:
        total += c
        if total < 0:
            return None
        out.append(total)
    if total + beta.coords[-1] != 0:
        return None
    return tuple(out)


def rootvec_to_weight(m, n):
    out = Weight.zero(n)
    for i, c in enumerate(m):
        out = out + Weight.simple_alpha(i + 1, n).scale(c)
    return out


def words_of_rootvec(m):
    """All words in letters 1..len(m) using letter i exactly m[i-1] times."""
    letters = []
    for i, c in enumerate(m):
        letters.extend([i + 1] * c)
    if not letters:
        return [()]
    seen = sorted(set(letters))
    counts = [letters.count(i) for i in seen]
    out = []

    def rec(prefix, counts):
        if all(c == 0 for c in counts):
            out.append(tuple(prefix))
            return
        for idx, letter in enumerate(seen):
            if counts[idx]:
                counts[idx] -= 1
                prefix.append(letter)
                rec(prefix, counts)
                prefix.pop()
                counts[idx] += 1

    rec([], counts)
    return out


class NCPoly:
    """Homogeneous noncommutative polynomial in e- or f-letters."""

    __slots__ = ("alphabet", "n", "order", "terms")

    def __init__(self, alphabet, n, terms, order=None):
        if alphabet not in ("e", "f"):
            raise ValueError("alphabet must be 'e' or 'f'")
        self.alphabet = alphabet
        self.n = n
        self.order = order
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}
        degs = {_word_rootvec(w, n) for w in self.terms}
        if len(degs) > 1:
            raise ValueError("inhomogeneous noncommutative polynomial")

    @staticmethod
    def generator(alphabet, i, n, order=None):
        return NCPoly(alphabet, n, {(i,): scalars.one(order)}, order)

    @staticmethod
    def from_word(alphabet, word, n, order=None, coeff=None):
        coeff = coeff if coeff is not None else scalars.one(order)
        return NCPoly(alphabet, n, {tuple(word): coeff}, order)

    def rootvec(self):
        """Degree as a nonnegative combination of simple roots."""
        for w in self.terms:
            return _word_rootvec(w, self.n)
        return None

    def multidegree(self):
        """Weight multidegree: +beta for e-letters, -beta for f-letters."""
        m = self.rootvec()
        if m is None:
            return None
        beta = rootvec_to_weight(m, self.n)
        return beta if self.alphabet == "e" else -beta

    def _check(self, other):
        if (self.alphabet, self.n, self.order) != (other.alphabet, other.n, other.order):
            raise ModeError("incompatible noncommutative polynomials")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            v = terms.get(w)
            terms[w] = c if v is None else v + c
        return NCPoly(self.alphabet, self.n, terms, self.order)

    def __sub__(self, other):
        return self + other.scale(scalars.integer(-1, self.order))

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = terms.get(w)
                c = c1 * c2
                terms[w] = c if v is None else v + c
        return NCPoly(self.alphabet, self.n, terms, self.order)

    def scale(self, c):
        return NCPoly(self.alphabet, self.n,
                      {w: c * v for w, v in self.terms.items()}, self.order)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, NCPoly)
                and self.alphabet == other.alphabet
                and self.n == other.n and self.order == other.order
                and self.terms == other.terms)

    def __repr__(self):
        names = {w: str(c) for w, c in sorted(self.terms.items())}
        return "NCPoly(%s, %r)" % (self.alphabet, names)


def _word_rootvec(word, n):
    m = [0] * (n - 1)
    for i in word:
        m[i - 1] += 1
    return tuple(m)


def serre_relations(n, ring):
    """Defining relations among the n-1 letters as sparse word vectors,
    together with their root-vector degrees."""
    out = []
    two = ring.quantum_integer(2)
    if n >= 3 and two.is_zero():
        # cannot happen under ell >= n, but a degenerate coefficient
        # must never silently produce a wrong ideal
        raise ArithmeticError("quantum integer [2] vanishes at this order")
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                continue
            if abs(i - j) == 1:
                rel = {(i, i, j): ring.one, (i, j, i): -two, (j, i, i): ring.one}
            elif i < j:
                rel = {(i, j): ring.one, (j, i): -ring.one}
            else:
                continue
            out.append((rel, _word_rootvec(next(iter(rel)), n)))
    return out


def _sub_rootvecs(m):
    """All componentwise splittings of m into an ordered pair (u, v)."""
    ranges = [range(c + 1) for c in m]
    for u in itertools.product(*ranges):
        v = tuple(c - x for c, x in zip(m, u))
        yield u, v


class GradedPiece:
    """One multidegree component of the Serre quotient.

    Carries the full word list, an echelon form of the embedded relation
    span, the chosen representative basis, and the reduction map sending
    an arbitrary word of the right degree to coordinates over the basis.
    """

    def __init__(self, n, alphabet, beta, order=None):
        self.n = n
        self.alphabet = alphabet
        self.beta = beta
        self.order = order
        m = weight_to_rootvec(beta)
        if m is None:
            raise ValueError("degree is not a nonnegative root combination")
        self.rootvec = m
        ring = ScalarRing(order)
        self.ring = ring
        self.words = sorted(words_of_rootvec(m))
        self.word_index = {w: i for i, w in enumerate(self.words)}
        self._echelon = {}
        for rel, relvec in serre_relations(n, ring):
            rem = tuple(a - b for a, b in zip(m, relvec))
            if any(c < 0 for c in rem):
                continue
            for mu, mv in _sub_rootvecs(rem):
                for u in words_of_rootvec(mu):
                    for v in words_of_rootvec(mv):
                        vec = {self.word_index[u + w + v]: c
                               for w, c in rel.items()}
                        self._insert(vec)
        pivots = set(self._echelon)
        self.basis = [w for i, w in enumerate(self.words) if i not in pivots]
        self.basis_pos = {w: i for i, w in enumerate(self.basis)}

    @property
    def dim(self):
        return len(self.basis)

    def _insert(self, vec):
        vec = {k: v for k, v in vec.items() if not v.is_zero()}
        while vec:
            p = max(vec)
            row = self._echelon.get(p)
            if row is None:
                inv = vec[p].inverse()
                self._echelon[p] = {k: v * inv for k, v in vec.items()}
                return p
            c = vec[p]
            for k, v in row.items():
                w = vec.get(k)
                w = -c * v if w is None else w - c * v
                if w.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = w
        return None

    def _reduce_vec(self, vec):
        vec = {k: v for k, v in vec.items() if not v.is_zero()}
        while True:
            p = max((k for k in vec if k in self._echelon), default=None)
            if p is None:
                return vec
            c = vec[p]
            for k, v in self._echelon[p].items():
                w = vec.get(k)
                w = -c * v if w is None else w - c * v
                if w.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = w

    def reduce_word(self, word):
        """Coordinates of a word over the representative basis."""
        word = tuple(word)
        if word not in self.word_index:
            raise ValueError("word has the wrong multidegree: %r" % (word,))
        reduced = self._reduce_vec({self.word_index[word]: self.ring.one})
        out = [self.ring.zero] * self.dim
        for k, v in reduced.items():
            out[self.basis_pos[self.words[k]]] = v
        return out

    def reduce_poly(self, poly):
        out = [self.ring.zero] * self.dim
        for word, c in poly.terms.items():
            for i, v in enumerate(self.reduce_word(word)):
                out[i] = out[i] + c * v
        return out

    def relation_matrix(self):
        """Dense matrix of the embedded relation span (for cross-checks)."""
        rows = []
        ring = self.ring
        m = self.rootvec
        for rel, relvec in serre_relations(self.n, ring):
            rem = tuple(a - b for a, b in zip(m, relvec))
            if any(c < 0 for c in rem):
                continue
            for mu, mv in _sub_rootvecs(rem):
                for u in words_of_rootvec(mu):
                    for v in words_of_rootvec(mv):
                        row = [ring.zero] * len(self.words)
                        for w, c in rel.items():
                            row[self.word_index[u + w + v]] = c
                        rows.append(row)
        if not rows:
            return scalars.ScalarMatrix.zeros(0, len(self.words), self.order)
        return scalars.ScalarMatrix.from_rows(rows)


_piece_cache = {}


def graded_basis(beta, alphabet="e", n=None, order=None, degree_bound=6):
    """The graded piece of the given positive-root content beta.

    For the f-alphabet the actual multidegree is -beta; beta is always
    handed over as the positive combination.  Results are cached per
    (n, beta, alphabet, order); the cache only ever stores immutable
    values, so concurrent readers see identical results.
    """
    if n is None:
        n = beta.n
    m = weight_to_rootvec(beta)
    if m is None:
        raise ValueError("degree is not a nonnegative root combination")
    if sum(m) > degree_bound:
        raise ValueError("degree bound exceeded: |beta|=%d > %d"
                         % (sum(m), degree_bound))
    if order is not None and scalars.ell_of_order(order) < n:
        raise ValueError("root-of-unity order too small: need ell >= n")
    key = (n, m, alphabet, order)
    piece = _piece_cache.get(key)
    if piece is None:
        piece = GradedPiece(n, alphabet, beta, order)
        _piece_cache[key] = piece
    return piece


def kostant_partition_count(beta, n=None):
    """Number of multisets of positive roots with sum beta."""
    if n is None:
        n = beta.n
    m = weight_to_rootvec(beta)
    if m is None:
        return 0
    roots = []
    for r in range(1, n + 1):
        for s in range(r + 1, n + 1):
            vec = tuple(1 if r <= i + 1 < s else 0 for i in range(n - 1))
            roots.append(vec)

    def count(idx, rem):
        if all(c == 0 for c in rem):
            return 1
        if idx == len(roots):
            return 0
        total = count(idx + 1, rem)
        vec = roots[idx]
        cur = rem
        while True:
            cur = tuple(a - b for a, b in zip(cur, vec))
            if any(c < 0 for c in cur):
                break
            total += count(idx + 1, cur)
        return total

    return count(0, m)


# ---------------------------------------------------------------------------
# Drinfeld pairing

def _pair_words(eword, gamma, fword, ring, inv_qq):
    """tau(e-word * k_gamma twist, f-word) by peeling the first f-letter.

    gamma is the root-vector of k-charge accumulated on the first tensor
    slot; each peeled letter contributes the crossing powers of the
    deformation parameter and one factor 1/(q - q^-1).
    """
    if not fword:
        return ring.one if not eword else ring.zero
    j = fword[0]
    rest = fword[1:]
    total = ring.zero
    for t, letter in enumerate(eword):
        if letter != j:
            continue
        exp = sum(cartan(j, eword[s]) for s in range(t + 1, len(eword)))
        exp -= sum(g * cartan(i + 1, j) for i, g in enumerate(gamma))
        gamma2 = list(gamma)
        gamma2[j - 1] += 1
        sub = _pair_words(eword[:t] + eword[t + 1:], tuple(gamma2), rest,
                          ring, inv_qq)
        if not sub.is_zero():
            total = total + ring.q(exp) * inv_qq * sub
    return total


def drinfeld_pairing(x, y):
    """tau(x, y) for x over the e-alphabet and y over the f-alphabet.

    Zero whenever the degrees do not match.  Inhomogeneous input is
    rejected by the NCPoly invariant itself.
    """
    if x.alphabet != "e" or y.alphabet != "f":
        raise ValueError("pairing expects (e-side, f-side) input")
    if x.n != y.n or x.order != y.order:
        raise ModeError("pairing operands disagree on rank or mode")
    ring = ScalarRing(x.order)
    inv_qq = ring.q_minus_qinv.inverse()
    mx = x.rootvec()
    my = y.rootvec()
    if mx is None or my is None:
        # one side is zero
        return ring.zero
    if mx != my:
        return ring.zero
    total = ring.zero
    zero_gamma = (0,) * (x.n - 1)
    for ew, cx in x.terms.items():
        for fw, cy in y.terms.items():
            val = _pair_words(ew, zero_gamma, fw, ring, inv_qq)
            if not val.is_zero():
                total = total + cx * cy * val
    return total


def pairing_gram_rank(beta, n=None, order=None, degree_bound=6):
    """Rank of the Gram matrix of tau on the degree-beta graded pieces."""
    if n is None:
        n = beta.n
    epiece = graded_basis(beta, "e", n, order, degree_bound)
    fpiece = graded_basis(beta, "f", n, order, degree_bound)
    ring = ScalarRing(order)
    rows = []
    for ew in epiece.basis:
        x = NCPoly.from_word("e", ew, n, order)
        row = []
        for fw in fpiece.basis:
            y = NCPoly.from_word("f", fw, n, order)
            row.append(drinfeld_pairing(x, y))
        rows.append(row)
    if not rows:
        return 0
    return scalars.matrix_rank(scalars.ScalarMatrix.from_rows(rows))


def functional_of(y):
    """The functional x |-> tau(x, y) as a map on e-words of matching degree."""
    n = y.n
    ring = ScalarRing(y.order)
    inv_qq = ring.q_minus_qinv.inverse()
    m = y.rootvec()
    values = {}
    zero_gamma = (0,) * (n - 1)
    for ew in words_of_rootvec(m):
        total = ring.zero
        for fw, cy in y.terms.items():
            val = _pair_words(ew, zero_gamma, fw, ring, inv_qq)
            if not val.is_zero():
                total = total + cy * val
        values[ew] = total
    return values


def dual_map_F(y, degree_bound=6):
    """Coordinate vector of x |-> tau(x, y) over the matching graded basis."""
    beta = rootvec_to_weight(y.rootvec(), y.n)
    piece = graded_basis(beta, "e", y.n, y.order, degree_bound)
    func = functional_of(y)
    return [func[w] for w in piece.basis]


def functional_product(phi, psi, deg_phi, deg_psi, n, order=None):
    """Product of graded functionals on the positive part.

    phi and psi are word-indexed value maps of root-vector degrees
    deg_phi and deg_psi.  The product is evaluated through the
    comultiplication: splitting a word w into complementary subwords
    (w_out, w_in) contributes the k-crossing power for every k passed
    rightward, and the constant twist q^{-(deg_phi, deg_psi)} from
    normal-ordering the leftover k-charge.
    """
    ring = ScalarRing(order)
    total_deg = tuple(a + b for a, b in zip(deg_phi, deg_psi))
    twist = ring.q(-root_form(deg_phi, deg_psi))
    out = {}
    for w in words_of_rootvec(total_deg):
        total = ring.zero
        k = len(w)
        for tset in itertools.combinations(range(k), sum(deg_psi)):
            inside = tuple(w[t] for t in tset)
            if _word_rootvec(inside, n) != deg_psi:
                continue
            tmark = set(tset)
            outside = tuple(w[s] for s in range(k) if s not in tmark)
            a = phi.get(outside, ring.zero)
            b = psi.get(inside, ring.zero)
            if a.is_zero() or b.is_zero():
                continue
            exp = sum(cartan(w[t], w[s])
                      for t in tset for s in range(t + 1, k) if s not in tmark)
            total = total + ring.q(exp) * a * b
        out[w] = twist * total
    return out
