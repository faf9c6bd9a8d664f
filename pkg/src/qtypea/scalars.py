"""Exact scalar arithmetic in the two coefficient modes of the engine.

Generic mode works in Q(q): every value is a reduced ratio of integer
Laurent polynomials in q.  Root-of-unity mode of order m works in the
cyclotomic field Q[x]/(Phi_m(x)), with x standing for the canonical
primitive m-th root of unity zeta.  Values are immutable and hashable
and every operation is a pure function, so scalars are safe to share
between threads.

Mixing the two modes, or two different orders m, in a single operation
raises ModeError; coercion is never silent.  Plain Python integers and
``fractions.Fraction`` values lift into either mode.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class ModeError(TypeError):
    """Raised when scalars of different modes meet in one operation."""


class SpecializationError(ArithmeticError):
    """Raised when a generic value cannot be evaluated at the chosen root."""


# ---------------------------------------------------------------------------
# integer polynomial helpers; coefficient tuples, constant term first,
# the zero polynomial is the empty tuple.

def _strip(c):
    c = tuple(c)
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _strip(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _pshift(a, k):
    """Multiply by q^k, k >= 0."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def _content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def _fr_divmod(a, b):
    """Division with remainder for Fraction coefficient lists, b nonzero."""
    r = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(0, len(r) - len(b) + 1)
    binv = Fraction(1) / b[-1]
    for i in range(len(r) - len(b), -1, -1):
        c = r[i + len(b) - 1] * binv
        if c:
            q[i] = c
            for j, y in enumerate(b):
                r[i + j] -= c * y
    while r and not r[-1]:
        r.pop()
    return q, r


def _primitive(fr):
    """Integer primitive part of a Fraction coefficient list, leading > 0."""
    if not fr:
        return ()
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = _content(ints)
    if ints[-1] < 0:
        g = -g
    return tuple(x // g for x in ints)


def _pgcd(a, b):
    """Primitive gcd of two integer polynomials (Euclid over Q)."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    while fb:
        _, r = _fr_divmod(fa, fb)
        fa, fb = fb, r
    return _primitive(fa)


def _pdiv_exact(a, g):
    """Exact quotient a/g of integer polynomials; raises if not exact."""
    if g == (1,):
        return tuple(a)
    q, r = _fr_divmod([Fraction(x) for x in a], [Fraction(x) for x in g])
    if r:
        raise ArithmeticError("inexact polynomial division")
    out = []
    for x in q:
        if x.denominator != 1:
            raise ArithmeticError("non-integral quotient")
        out.append(int(x))
    return _strip(out)


def _pdivmod_monic(a, b):
    """Integer division with remainder by a monic integer polynomial."""
    r = list(a)
    q = [0] * max(0, len(r) - len(b) + 1)
    for i in range(len(r) - len(b), -1, -1):
        c = r[i + len(b) - 1]
        if c:
            q[i] = c
            for j, y in enumerate(b):
                r[i + j] -= c * y
    return _strip(q), _strip(r)


def euler_phi(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficient tuple of Phi_m, constant term first."""
    if m < 1:
        raise ValueError("order must be positive")
    num = tuple([-1] + [0] * (m - 1) + [1])  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            q, r = _pdivmod_monic(num, cyclotomic_polynomial(d))
            assert not r
            num = q
    return num


def ell_of_order(m):
    """Multiplicative order of zeta^2 when zeta has order m."""
    return m if m % 2 else m // 2


# ---------------------------------------------------------------------------
# Scalar

class Scalar:
    """An exact coefficient: element of Q(q) or of a cyclotomic field.

    Generic representation: (shift, num, den) meaning q^shift * num/den,
    where num and den are integer polynomial tuples with nonzero constant
    terms, gcd(num, den) = 1 (including integer content) and den has a
    positive leading coefficient.  Root-of-unity representation of order
    m: (coeffs, den) with coeffs an integer polynomial of degree <
    phi(m), den a positive integer, and gcd of all entries 1.
    """

    __slots__ = ("order", "rep")

    def __init__(self, order, rep):
        self.order = order
        self.rep = rep

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rational(x, order=None):
        x = Fraction(x)
        if order is None:
            num = () if x == 0 else (x.numerator,)
            den = (x.denominator,)
            return Scalar(None, (0, num, den))
        coeffs = () if x == 0 else (x.numerator,)
        return Scalar(order, (coeffs, x.denominator))

    @staticmethod
    def _generic(shift, num, den):
        num = _strip(num)
        den = _strip(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return Scalar(None, (0, (), (1,)))
        while num[0] == 0:
            num = num[1:]
            shift += 1
        while den[0] == 0:
            den = den[1:]
            shift -= 1
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        c = gcd(_content(num), _content(den))
        if den[-1] < 0:
            c = -c
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
        return Scalar(None, (shift, num, den))

    @staticmethod
    def _cyclotomic(order, coeffs, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        phi = cyclotomic_polynomial(order)
        _, coeffs = _pdivmod_monic(_strip(coeffs), phi)
        if not coeffs:
            return Scalar(order, ((), 1))
        g = gcd(_content(coeffs), den)
        if den < 0:
            g = -g
        return Scalar(order, (tuple(x // g for x in coeffs), den // g))

    # -- basic predicates ---------------------------------------------------

    def is_zero(self):
        if self.order is None:
            return not self.rep[1]
        return not self.rep[0]

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other):
        if not isinstance(other, Scalar):
            raise TypeError("expected a Scalar")
        if self.order != other.order:
            raise ModeError(
                "mixed scalar modes: %r vs %r" % (self.order, other.order))

    def _lift(self, other):
        if isinstance(other, Scalar):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(other, self.order)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.order is None:
            s1, n1, d1 = self.rep
            s2, n2, d2 = other.rep
            if not n1:
                return other
            if not n2:
                return self
            s = min(s1, s2)
            num = _padd(_pmul(_pshift(n1, s1 - s), d2),
                        _pmul(_pshift(n2, s2 - s), d1))
            return Scalar._generic(s, num, _pmul(d1, d2))
        c1, d1 = self.rep
        c2, d2 = other.rep
        l = d1 * d2 // gcd(d1, d2)
        coeffs = _padd(tuple(x * (l // d1) for x in c1),
                       tuple(x * (l // d2) for x in c2))
        return Scalar._cyclotomic(self.order, coeffs, l)

    __radd__ = __add__

    def __neg__(self):
        if self.order is None:
            s, n, d = self.rep
            return Scalar(None, (s, _pneg(n), d))
        c, d = self.rep
        return Scalar(self.order, (_pneg(c), d))

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.order is None:
            s1, n1, d1 = self.rep
            s2, n2, d2 = other.rep
            return Scalar._generic(s1 + s2, _pmul(n1, n2), _pmul(d1, d2))
        c1, d1 = self.rep
        c2, d2 = other.rep
        return Scalar._cyclotomic(self.order, _pmul(c1, c2), d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.order is None:
            s, n, d = self.rep
            return Scalar._generic(-s, d, n)
        c, den = self.rep
        phi = cyclotomic_polynomial(self.order)
        # extended Euclid over Q[x]: u*c + v*phi = g with g a nonzero constant
        a = [Fraction(x) for x in phi]
        b = [Fraction(x) for x in c]
        ua, ub = [], [Fraction(1)]
        while b:
            q, r = _fr_divmod(a, b)
            a, b = b, r
            nxt = list(ua)
            for i, x in enumerate(_strip_fr(_mul_fr(q, ub))):
                while len(nxt) <= i:
                    nxt.append(Fraction(0))
                nxt[i] -= x
            ua, ub = ub, _strip_fr(nxt)
        assert len(a) == 1, "cyclotomic polynomial must be irreducible"
        inv = [x / a[0] * den for x in ua]
        l = 1
        for x in inv:
            l = l * x.denominator // gcd(l, x.denominator)
        coeffs = tuple(int(x * l) for x in inv)
        return Scalar._cyclotomic(self.order, coeffs, l)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other, self.order)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.order == other.order and self.rep == other.rep

    def __hash__(self):
        return hash((self.order, self.rep))

    # -- display ------------------------------------------------------------

    def variable_name(self):
        return "q" if self.order is None else "z"

    def __str__(self):
        return self.str()

    def __repr__(self):
        return "Scalar(%s)" % self.str()

    def str(self, var=None):
        var = var or self.variable_name()
        if self.order is None:
            s, n, d = self.rep
            num = _laurent_str(n, s, var)
            if d == (1,):
                return num
            den = _laurent_str(d, 0, var)
            if len(_terms(n)) > 1:
                num = "(%s)" % num
            if len(_terms(d)) > 1:
                den = "(%s)" % den
            return "%s/%s" % (num, den)
        nice = self._short_root_form(var)
        if nice is not None:
            return nice
        c, den = self.rep
        num = _laurent_str(c, 0, var)
        if den == 1:
            return num
        if len(_terms(c)) > 1:
            num = "(%s)" % num
        return "%s/%d" % (num, den)

    def _short_root_form(self, var):
        """Readable form c*z^k or z^a +- z^b of a cyclotomic residue, if
        one exists; display only, the canonical representation is rep."""
        m = self.order
        coeffs, den = self.rep
        if den != 1 or len(coeffs) < 2:
            return None
        powers = _power_table(m)

        def mono(k, neg=False):
            e = k if k <= m // 2 else k - m
            body = var if e == 1 else ("1" if e == 0 else "%s^%d" % (var, e))
            return ("-" if neg else "") + body

        for k in range(m):
            if self == powers[k]:
                return mono(k)
            if self == -powers[k]:
                return mono(k, neg=True)
        for a in range(m):
            for b in range(m):
                if a == b:
                    continue
                if self == powers[a] - powers[b]:
                    return "%s - %s" % (mono(a), mono(b))
                if self == powers[a] + powers[b]:
                    return "%s + %s" % (mono(a), mono(b))
        return None


@lru_cache(maxsize=None)
def _power_table(m):
    return [q_power(k, m) for k in range(m)]


def _strip_fr(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _mul_fr(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _terms(coeffs):
    return [i for i, c in enumerate(coeffs) if c]


def _laurent_str(coeffs, shift, var):
    if not coeffs:
        return "0"
    parts = []
    idx = [i for i, c in enumerate(coeffs) if c]
    for i in reversed(idx):
        c = coeffs[i]
        e = i + shift
        if e == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            body = "%s%s" % (mag, var) if e == 1 else "%s%s^%d" % (mag, var, e)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# mode-level helpers

def zero(order=None):
    return Scalar.from_rational(0, order)


def one(order=None):
    return Scalar.from_rational(1, order)


def integer(c, order=None):
    return Scalar.from_rational(c, order)


def q_power(k, order=None):
    """q^k in generic mode, zeta^k in root-of-unity mode."""
    if order is None:
        return Scalar(None, (k, (1,), (1,)))
    k %= order
    return Scalar._cyclotomic(order, (0,) * k + (1,), 1)


def quantum_integer(r, order=None):
    """[r] = (q^r - q^-r)/(q - q^-1) = q^(r-1) + q^(r-3) + ... + q^(1-r)."""
    if r < 0:
        return -quantum_integer(-r, order)
    out = zero(order)
    for i in range(r):
        out = out + q_power(r - 1 - 2 * i, order)
    return out


def quantum_factorial(m):
    """[m]! = prod_{r=1}^m (q^r - q^-r)/(q - q^-1), in generic mode."""
    if m < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = one()
    for r in range(1, m + 1):
        out = out * quantum_integer(r)
    return out


def make_root_of_unity(m):
    """Canonical generator zeta of the order-m cyclotomic field and the
    multiplicative order ell of zeta^2."""
    if m < 2:
        raise ValueError("root-of-unity order must be at least 2")
    return q_power(1, m), ell_of_order(m)


def specialize(a, m):
    """Evaluate a generic-mode scalar at the canonical order-m root."""
    if a.order is not None:
        raise ModeError("specialize expects a generic-mode scalar")
    shift, num, den = a.rep
    num_v = _eval_at_zeta(num, m)
    den_v = _eval_at_zeta(den, m)
    if den_v.is_zero():
        raise SpecializationError("denominator vanishes at the chosen root")
    return q_power(shift, m) * num_v / den_v


def _eval_at_zeta(coeffs, m):
    out = zero(m)
    for i, c in enumerate(coeffs):
        if c:
            out = out + integer(c, m) * q_power(i, m)
    return out


class ScalarRing:
    """Convenience facade bundling a mode: ring = ScalarRing() or ScalarRing(m)."""

    def __init__(self, order=None):
        if order is not None and order < 2:
            raise ValueError("root-of-unity order must be at least 2")
        self.order = order
        self.one = one(order)
        self.zero = zero(order)
        self.q_minus_qinv = q_power(1, order) - q_power(-1, order)

    def integer(self, c):
        return integer(c, self.order)

    def q(self, k):
        return q_power(k, self.order)

    def quantum_integer(self, r):
        return quantum_integer(r, self.order)

    @property
    def ell(self):
        return None if self.order is None else ell_of_order(self.order)

    def __repr__(self):
        if self.order is None:
            return "ScalarRing(generic)"
        return "ScalarRing(order=%d)" % self.order


# ---------------------------------------------------------------------------
# exact dense matrices and graded maps

class ScalarMatrix:
    """Dense matrix of scalars sharing one mode."""

    def __init__(self, rows, cols, entries):
        self.rows = rows
        self.cols = cols
        self.entries = entries
        if entries:
            order = entries[0][0].order if cols else None
            for row in entries:
                for x in row:
                    if x.order != order:
                        raise ModeError("matrix entries mix modes")

    @staticmethod
    def from_rows(entries):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return ScalarMatrix(rows, cols, [list(r) for r in entries])

    @staticmethod
    def zeros(rows, cols, order=None):
        z = zero(order)
        return ScalarMatrix(rows, cols, [[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(n, order=None):
        m = ScalarMatrix.zeros(n, n, order)
        for i in range(n):
            m.entries[i][i] = one(order)
        return m

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("matrix shape mismatch")
        order = self._order()
        out = ScalarMatrix.zeros(self.rows, other.cols, order)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.entries[i][k]
                if a.is_zero():
                    continue
                for j in range(other.cols):
                    b = other.entries[k][j]
                    if not b.is_zero():
                        out.entries[i][j] = out.entries[i][j] + a * b
        return out

    def _order(self):
        for row in self.entries:
            for x in row:
                return x.order
        return None

    def rank(self):
        return matrix_rank(self)

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot column list)."""
        order = self._order()
        rows = [list(r) for r in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.rows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return rows, pivots

    def nullspace(self):
        """Basis of the right kernel as coordinate lists."""
        order = self._order()
        rows, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [zero(order)] * self.cols
            vec[fc] = one(order)
            for r, pc in enumerate(pivots):
                vec[pc] = -rows[r][fc]
            basis.append(vec)
        return basis


def matrix_rank(m):
    """Exact rank by fraction-free (Bareiss-style) elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    order = m._order()
    rows = [list(r) for r in m.entries]
    prev = one(order)
    rank = 0
    r = 0
    for c in range(m.cols):
        pr = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m.rows):
            head = rows[i][c]
            if head.is_zero():
                for j in range(c + 1, m.cols):
                    if rows[i][j]:
                        rows[i][j] = (piv * rows[i][j]) / prev
            else:
                for j in range(c + 1, m.cols):
                    rows[i][j] = (piv * rows[i][j] - head * rows[r][j]) / prev
                rows[i][c] = zero(order)
        prev = piv
        rank += 1
        r += 1
        if r == m.rows:
            break
    return rank


class GradedMap:
    """Exact linear map between two based graded pieces.

    Columns are stored sparsely as {target index: Scalar}.  When both
    bases carry weight keys the rank computation splits into weight
    blocks, which keeps the eliminations small.
    """

    def __init__(self, source, target, cols, order=None,
                 source_keys=None, target_keys=None):
        self.source = list(source)
        self.target = list(target)
        self.cols = [dict(c) for c in cols]
        self.order = order
        self.source_keys = source_keys
        self.target_keys = target_keys

    @staticmethod
    def zero_map(source, target, order=None, **kw):
        return GradedMap(source, target, [{} for _ in source], order, **kw)

    def compose(self, other):
        """self o other; other maps into self.source."""
        if len(other.target) != len(self.source):
            raise ValueError("graded map composition shape mismatch")
        cols = []
        for col in other.cols:
            out = {}
            for mid, a in col.items():
                for tgt, b in self.cols[mid].items():
                    v = out.get(tgt)
                    v = a * b if v is None else v + a * b
                    if v.is_zero():
                        out.pop(tgt, None)
                    else:
                        out[tgt] = v
            cols.append(out)
        return GradedMap(other.source, self.target, cols, self.order,
                         source_keys=other.source_keys,
                         target_keys=self.target_keys)

    def is_zero(self):
        return all(not c for c in self.cols)

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if len(self.cols) != len(other.cols):
            return False
        for a, b in zip(self.cols, other.cols):
            keys = set(a) | set(b)
            for k in keys:
                x = a.get(k)
                y = b.get(k)
                if x is None:
                    if y is not None and not y.is_zero():
                        return False
                elif y is None:
                    if not x.is_zero():
                        return False
                elif x != y:
                    return False
        return True

    def apply(self, vec):
        """Apply to a sparse source vector {source index: Scalar}."""
        out = {}
        for si, a in vec.items():
            for ti, b in self.cols[si].items():
                v = out.get(ti)
                v = a * b if v is None else v + a * b
                if v.is_zero():
                    out.pop(ti, None)
                else:
                    out[ti] = v
        return out

    def to_matrix(self):
        m = ScalarMatrix.zeros(len(self.target), len(self.source), self.order)
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                m.entries[i][j] = v
        return m

    def rank(self):
        if self.source_keys is None or self.target_keys is None:
            return matrix_rank(self.to_matrix())
        blocks = {}
        for j, key in enumerate(self.source_keys):
            blocks.setdefault(key, []).append(j)
        tblocks = {}
        for i, key in enumerate(self.target_keys):
            tblocks.setdefault(key, []).append(i)
        total = 0
        for key, js in blocks.items():
            tis = tblocks.get(key)
            if tis is None:
                if any(self.cols[j] for j in js):
                    raise ValueError("map does not preserve weight blocks")
                continue
            tpos = {ti: i for i, ti in enumerate(tis)}
            sub = ScalarMatrix.zeros(len(tis), len(js), self.order)
            for jj, j in enumerate(js):
                for ti, v in self.cols[j].items():
                    sub.entries[tpos[ti]][jj] = v
            total += matrix_rank(sub)
        return total
