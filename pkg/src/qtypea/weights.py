"""Root and weight combinatorics for GL_n (type A_{n-1}).

Weights are integer vectors in the epsilon-basis of the GL_n weight
lattice.  The positive root alpha_{rs} (1 <= r < s <= n) is eps_r -
eps_s, the Weyl group is the symmetric group permuting coordinates, and
rho is fixed as (n-1, n-2, ..., 0).  The dot action w o lam =
w(lam + rho) - rho does not depend on that choice of rho.
"""

from __future__ import annotations

import itertools


class Weight:
    """Integer vector in the epsilon-basis; length equals the rank n."""

    __slots__ = ("n", "coords")

    def __init__(self, coords):
        self.coords = tuple(int(c) for c in coords)
        self.n = len(self.coords)

    @staticmethod
    def zero(n):
        return Weight((0,) * n)

    @staticmethod
    def eps(r, n):
        """The basis weight eps_r, 1-indexed."""
        return Weight(tuple(1 if i == r - 1 else 0 for i in range(n)))

    @staticmethod
    def alpha(r, s, n):
        """The root alpha_{rs} = eps_r - eps_s for r != s."""
        return Weight(tuple((i == r - 1) - (i == s - 1) for i in range(n)))

    @staticmethod
    def simple_alpha(i, n):
        return Weight.alpha(i, i + 1, n)

    @staticmethod
    def rho(n):
        return Weight(tuple(range(n - 1, -1, -1)))

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch: %d vs %d" % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords))

    def scale(self, c):
        return Weight(tuple(c * a for a in self.coords))

    def pair_coroot(self, r, s):
        """<lam, alpha_{rs}^vee> = lam_r - lam_s."""
        return self.coords[r - 1] - self.coords[s - 1]

    def dot(self, other):
        """W-invariant bilinear form with (alpha, alpha) = 2: the standard
        inner product in epsilon-coordinates."""
        self._check(other)
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def is_dominant(self):
        return all(self.coords[i] >= self.coords[i + 1]
                   for i in range(self.n - 1))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def serialize(self):
        return ",".join(str(c) for c in self.coords)

    @staticmethod
    def parse(text):
        return Weight(tuple(int(p) for p in text.split(",")))

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Weight(%s)" % (self.coords,)


class WeylElt:
    """Permutation of {1..n}, stored as the tuple of images (1-indexed)."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation of 1..n: %r" % (images,))
        self.images = images

    @property
    def n(self):
        return len(self.images)

    @staticmethod
    def identity(n):
        return WeylElt(range(1, n + 1))

    @staticmethod
    def simple(i, n):
        """The simple reflection s_i swapping i and i+1."""
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return WeylElt(img)

    def __call__(self, r):
        return self.images[r - 1]

    def compose(self, other):
        """(self * other)(r) = self(other(r))."""
        return WeylElt(tuple(self(other(r)) for r in range(1, self.n + 1)))

    def inverse(self):
        inv = [0] * self.n
        for r in range(1, self.n + 1):
            inv[self(r) - 1] = r
        return WeylElt(inv)

    def length(self):
        img = self.images
        return sum(1 for i in range(len(img)) for j in range(i + 1, len(img))
                   if img[i] > img[j])

    def act(self, lam):
        """w eps_r = eps_{w(r)}: permute coordinates."""
        if lam.n != self.n:
            raise ValueError("rank mismatch")
        out = [0] * self.n
        for r in range(1, self.n + 1):
            out[self(r) - 1] = lam.coords[r - 1]
        return Weight(out)

    def inversion_set(self):
        """Positive roots alpha_{rs} sent to negative ones: w(r) > w(s)."""
        n = self.n
        return RootSubset((r, s) for r in range(1, n + 1)
                          for s in range(r + 1, n + 1) if self(r) > self(s))

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "WeylElt(%s)" % (self.images,)


def weyl_group(n):
    """All n! Weyl elements, in a deterministic order."""
    return [WeylElt(p) for p in itertools.permutations(range(1, n + 1))]


class RootSubset:
    """A set of positive roots alpha_{rs}, stored as pairs (r, s), r < s."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        pairs = frozenset((int(r), int(s)) for r, s in pairs)
        for r, s in pairs:
            if not 1 <= r < s:
                raise ValueError("bad positive root index pair (%d, %d)" % (r, s))
        self.pairs = pairs

    def weight(self, n):
        """lambda_X = -sum of the roots in the subset."""
        out = Weight.zero(n)
        for r, s in self.pairs:
            out = out - Weight.alpha(r, s, n)
        return out

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __eq__(self, other):
        return isinstance(other, RootSubset) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "RootSubset(%s)" % (sorted(self.pairs),)


def positive_roots(n):
    return [(r, s) for r in range(1, n + 1) for s in range(r + 1, n + 1)]


def coxeter_number(n):
    """max <rho, alpha^vee> + 1, which is n in type A_{n-1}."""
    if n < 2:
        raise ValueError("rank parameter must be at least 2")
    return n


def dot_action(w, lam):
    """The shifted action w o lam = w(lam + rho) - rho."""
    rho = Weight.rho(lam.n)
    return w.act(lam + rho) - rho


def dominant_conjugate(lam):
    """Unique (w, mu) with w o lam = mu dominant, or None when lam + rho
    has a repeated coordinate (the singular case)."""
    rho = Weight.rho(lam.n)
    v = (lam + rho).coords
    if len(set(v)) < len(v):
        return None
    order = sorted(v, reverse=True)
    pos = {val: i + 1 for i, val in enumerate(order)}
    w = WeylElt(tuple(pos[val] for val in v))
    mu = Weight(order) - rho
    assert dot_action(w, lam) == mu and mu.is_dominant()
    return w, mu


def kostant_sets(n, bound=5):
    """All subsets X of the positive roots with W o lambda_X meeting the
    dominant cone exactly in {0}, paired with the Weyl element whose
    inversion set is X.

    Also brute-forces the dichotomy that W o lambda_X intersects the
    dominant cone in either the empty set or {0}, for every subset X.
    """
    if n > bound:
        raise ValueError("enumeration bound exceeded: n=%d > %d" % (n, bound))
    roots = positive_roots(n)
    group = weyl_group(n)
    qualifying = {}
    for mask in range(1 << len(roots)):
        x = RootSubset(r for i, r in enumerate(roots) if mask >> i & 1)
        lam = x.weight(n)
        dominants = {dot_action(w, lam) for w in group}
        dominants = {mu for mu in dominants if mu.is_dominant()}
        if dominants:
            if dominants != {Weight.zero(n)}:
                raise AssertionError(
                    "dominant dot-orbit of lambda_X is not {0}: %r" % (x,))
            qualifying[x] = None
    out = []
    for w in group:
        x = w.inversion_set()
        if x not in qualifying:
            raise AssertionError("inversion set fails the orbit test: %r" % (w,))
        assert dot_action(w, x.weight(n)).is_zero()
        out.append((w, x))
    assert len(out) == len(qualifying), "inversion-set map is not onto"
    return out
