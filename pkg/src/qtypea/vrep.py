"""The n-dimensional vector representation V and its tensor-power actions.

Basis v_1..v_n with h v_r = chi_{eps_r}(h) v_r, e_i v_r = delta_{r,i+1}
v_{r-1}, f_i v_r = delta_{r,i} v_{r+1}.  Generator tokens are ("e", i),
("f", i) and ("k", r, sign) for the torus elements k_{+-eps_r^vee}; a
tensor vector is a sparse map from index tuples to scalars.  Tensor
powers are acted on through the iterated comultiplication
Delta(e_i) = e_i x 1 + k_i x e_i, Delta(f_i) = f_i x k_i^-1 + 1 x f_i,
Delta(k) = k x k.
"""

from __future__ import annotations


def eps_pairing(r, i):
    """<eps_r, alpha_i^vee>."""
    return (r == i) - (r == i + 1)


def apply_generator(vec, token, ring):
    """Apply one generator token to a sparse tensor vector."""
    kind = token[0]
    out = {}

    def accum(key, val):
        cur = out.get(key)
        val = val if cur is None else cur + val
        if val.is_zero():
            out.pop(key, None)
        else:
            out[key] = val

    if kind == "k":
        _, r, sign = token
        for t, c in vec.items():
            count = sum(1 for x in t if x == r)
            accum(t, c * ring.q(sign * count))
        return out
    _, i = token
    if kind == "e":
        for t, c in vec.items():
            exp = 0
            for a, x in enumerate(t):
                if x == i + 1:
                    accum(t[:a] + (i,) + t[a + 1:], c * ring.q(exp))
                exp += eps_pairing(x, i)
        return out
    if kind == "f":
        for t, c in vec.items():
            tail = [0] * (len(t) + 1)
            for a in range(len(t) - 1, -1, -1):
                tail[a] = tail[a + 1] + eps_pairing(t[a], i)
            for a, x in enumerate(t):
                if x == i:
                    accum(t[:a] + (i + 1,) + t[a + 1:],
                          c * ring.q(-tail[a + 1]))
        return out
    raise ValueError("unknown generator token: %r" % (token,))


def apply_word(vec, tokens, ring):
    """Apply a product of generators, rightmost factor acting first."""
    for token in reversed(list(tokens)):
        vec = apply_generator(vec, token, ring)
        if not vec:
            return {}
    return vec


def standard_generators(n):
    """e_i, f_i for i < n and k_{+-eps_r^vee} for r <= n."""
    gens = []
    for i in range(1, n):
        gens.append(("e", i))
        gens.append(("f", i))
    for r in range(1, n + 1):
        gens.append(("k", r, 1))
        gens.append(("k", r, -1))
    return gens
