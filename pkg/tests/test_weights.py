import itertools
import random

import pytest

from qtypea import weights as W
from qtypea.weights import RootSubset, Weight, WeylElt


def test_weight_basics():
    lam = Weight((-2, 1, 1))
    assert lam.serialize() == "-2,1,1"
    assert Weight.parse("-2,1,1") == lam
    assert Weight.alpha(1, 3, 3) == Weight((1, 0, -1))
    assert Weight.rho(3) == Weight((2, 1, 0))
    assert lam.pair_coroot(1, 2) == -3
    with pytest.raises(ValueError):
        lam + Weight((1, 0))


def test_weyl_elt_basics():
    s1 = WeylElt.simple(1, 3)
    s2 = WeylElt.simple(2, 3)
    w = s2.compose(s1)
    assert w.images == (3, 1, 2)
    assert w.length() == 2
    assert w.inverse().compose(w) == WeylElt.identity(3)
    assert s1.act(Weight((5, 7, 0))) == Weight((7, 5, 0))
    assert w.inversion_set() == RootSubset([(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        WeylElt((1, 1, 2))


def test_dot_action_examples():
    for n in (2, 3, 4):
        lam = Weight(tuple(range(n)))
        assert W.dot_action(WeylElt.identity(n), lam) == lam
    assert W.dot_action(WeylElt.simple(1, 2), Weight((-1, 1))) == Weight((0, 0))
    w = WeylElt((3, 1, 2))  # s_2 s_1
    assert W.dot_action(w, Weight((-2, 1, 1))) == Weight((0, 0, 0))
    with pytest.raises(ValueError):
        W.dot_action(WeylElt.identity(2), Weight((1, 2, 3)))


def test_dot_action_group_law_seeded():
    for seed in range(5):
        rng = random.Random(seed)
        for _ in range(40):
            n = rng.choice([2, 3, 4])
            group = W.weyl_group(n)
            w1, w2 = rng.choice(group), rng.choice(group)
            lam = Weight(tuple(rng.randint(-5, 5) for _ in range(n)))
            assert W.dot_action(w1.compose(w2), lam) == \
                W.dot_action(w1, W.dot_action(w2, lam))


def test_dot_action_is_independent_of_rho_shift():
    # w(lam + rho') - rho' agrees for rho' = rho + c*(1,..,1)
    rng = random.Random(0)
    for _ in range(30):
        n = rng.choice([2, 3, 4])
        w = rng.choice(W.weyl_group(n))
        lam = Weight(tuple(rng.randint(-4, 4) for _ in range(n)))
        c = rng.randint(-3, 3)
        shift = Weight((c,) * n)
        rho2 = Weight.rho(n) + shift
        alt = w.act(lam + rho2) - rho2
        assert alt == W.dot_action(w, lam)


def test_dominant_conjugate_examples():
    n = 3
    w, mu = W.dominant_conjugate(Weight.zero(n))
    assert w == WeylElt.identity(n) and mu == Weight.zero(n)
    assert W.dominant_conjugate(Weight((-1, 0))) is None
    w, mu = W.dominant_conjugate(Weight((-2, 1, 1)))
    assert w.length() == 2 and mu == Weight.zero(3)
    assert w == WeylElt((3, 1, 2))


def test_dominant_conjugate_unique_for_regular():
    for n in (2, 3, 4):
        group = W.weyl_group(n)
        rng = random.Random(n)
        for _ in range(25):
            lam = Weight(tuple(rng.randint(-4, 4) for _ in range(n)))
            conj = W.dominant_conjugate(lam)
            dominant = [v for v in group
                        if W.dot_action(v, lam).is_dominant()]
            if conj is None:
                shifted = (lam + Weight.rho(n)).coords
                assert len(set(shifted)) < n
            else:
                assert dominant == [conj[0]] or len(dominant) == 1


def test_kostant_sets_n2():
    sets = W.kostant_sets(2)
    as_dict = {w.images: x for w, x in sets}
    assert as_dict == {(1, 2): RootSubset([]),
                       (2, 1): RootSubset([(1, 2)])}


def test_kostant_sets_counts_and_empty_set():
    for n in (2, 3, 4):
        sets = W.kostant_sets(n)
        assert len(sets) == len(W.weyl_group(n))
        lookup = {w.images: x for w, x in sets}
        assert lookup[tuple(range(1, n + 1))] == RootSubset([])
    # n = 3: exactly 6 of the 8 subsets qualify
    sets3 = {x for _, x in W.kostant_sets(3)}
    assert len(sets3) == 6
    with pytest.raises(ValueError):
        W.kostant_sets(6)


def test_kostant_weight_smallness_exhaustive():
    for n in (2, 3, 4, 5):
        roots = W.positive_roots(n)
        h = W.coxeter_number(n)
        rho = Weight.rho(n)
        for mask in range(1 << len(roots)):
            x = RootSubset(r for i, r in enumerate(roots) if mask >> i & 1)
            shifted = x.weight(n) + rho
            for r, s in roots:
                assert abs(shifted.pair_coroot(r, s)) <= h - 1


def test_coxeter_number():
    assert W.coxeter_number(2) == 2
    assert W.coxeter_number(3) == 3
    # max <rho, alpha^vee> + 1 computed directly
    n = 5
    rho = Weight.rho(n)
    assert W.coxeter_number(n) == max(
        rho.pair_coroot(r, s) for r, s in W.positive_roots(n)) + 1
    with pytest.raises(ValueError):
        W.coxeter_number(1)
