"""Random generators shared by the tests."""

import random
from math import gcd

from dwcat import cohomology as H
from dwcat import picard as P
from dwcat.picard import Discrete, FramedLines, discrete, lines

POOL = [lines(2), lines(4), lines(6), discrete(2), discrete(0), discrete(2, 4), discrete(0, 3)]


def _factors(G):
    return list(G.A.factors)


def random_hom(rng, S, T):
    if isinstance(S, FramedLines) and isinstance(T, FramedLines):
        m, m2 = S.phase.modulus, T.phase.modulus
        k = rng.randint(-3, 3)
        step = m2 // gcd(m, m2)
        c = step * rng.randint(0, m2)
        c0 = rng.randrange(m2)
        return P.Homomorphism(S, T, lambda x, k=k: k * x, lambda s, t, c0=c0: c0, c)
    if isinstance(S, Discrete) and isinstance(T, FramedLines):
        m2 = T.phase.modulus
        ds = _factors(S)
        w = [rng.randint(-3, 3) for _ in ds]
        b = {}
        for i, di in enumerate(ds):
            for j, dj in enumerate(ds):
                if j < i:
                    continue
                g = m2
                for d in (di, dj):
                    if d:
                        g = gcd(g, d)
                b[(i, j)] = b[(j, i)] = (m2 // g) * rng.randrange(g) if g else 0

        def coh(s, t, b=b, n=len(ds)):
            return sum(b[(i, j)] * s[i] * t[j] for i in range(n) for j in range(n))

        return P.Homomorphism(S, T, lambda x, w=w: sum(a * v for a, v in zip(w, x)), coh, 0)
    if isinstance(S, FramedLines) and isinstance(T, Discrete):
        return P.Homomorphism(S, T, lambda x, z=T.zero(): z, None, 0)
    ds, dt = _factors(S), _factors(T)
    M = []
    for di in dt:
        row = []
        for dj in ds:
            v = rng.randint(-3, 3)
            if di == 0 and dj != 0:
                v = 0
            elif di and dj:
                v *= di // gcd(di, dj)
            row.append(v)
        M.append(row)
    return P.Homomorphism(S, T, lambda x, M=M: tuple(sum(a * v for a, v in zip(r, x)) for r in M), None, 0)


def random_twist(rng, F):
    """(G, theta) with theta: F => G a monoidal transformation."""
    S, B = F.src, F.dst
    m = B.phase.modulus
    if isinstance(S, FramedLines):
        c = rng.randrange(m) if m > 1 else 0
        theta = lambda s, c=c: c
    else:
        a = [rng.randrange(max(m, 1)) for _ in S.A.factors]
        q = rng.randrange(max(m, 1))
        theta = lambda s, a=a, q=q: (sum(x * y for x, y in zip(a, s)) + q * s[0] * s[0]) % max(m, 1)
    shift = rng.randint(-2, 2) if isinstance(B, FramedLines) else 0
    if isinstance(B, FramedLines):
        obj = lambda x, F=F, shift=shift: F(x) + shift * (x if isinstance(x, int) else 0)
    else:
        obj = F.obj
    coh = lambda s, t, F=F, th=theta, S=S: F.phi(s, t) + th(S.obj_add(s, t)) - th(s) - th(t)
    G = P.Homomorphism(S, B, obj, coh, F.phase_mult)
    return G, P.MonoidalTransformation(F, G, lambda s, th=theta, S=S: th(S.norm(s)))


def random_chain(rng, length):
    gs = [rng.choice(POOL) for _ in range(length + 1)]
    return gs, [random_hom(rng, gs[i], gs[i + 1]) for i in range(length)]


def seeded(seed):
    return random.Random(seed)


def random_cocycle(rng, C, n, h=None):
    """Random class representative plus a coboundary and a phase gauge."""
    h = h or H.cohomology(C, n)
    x = H.zero_cocycle(C, n)
    for g in h.pi0_generators():
        x = H.add_cocycles(x, H.scale_cocycle(g, rng.randint(-3, 3)))
    a = list(x.a.values)
    if n >= 1 and C.size(n - 1):
        b = [rng.randint(-3, 3) for _ in range(C.size(n - 1))]
        a = [u + v for u, v in zip(a, C.obj_d(n - 1, b))]
    gauge = [rng.randrange(C.modulus) for _ in range(C.size(n))]
    ph = [u + v for u, v in zip(x.phi.phases, C.phase_d(n, gauge))]
    return H.make_cocycle(C, n, a, ph)


def random_class(rng, C, n):
    """Random combination of pi_0 generators (any coefficient model)."""
    x = H.zero_cocycle(C, n)
    for g in H.cohomology(C, n).pi0_generators():
        x = H.add_cocycles(x, H.scale_cocycle(g, rng.randint(-2, 2)))
    return x
