"""Computable Picard groupoids.

Two models are provided: a discrete abelian group A[0] and framed hermitian
lines with phases in Z/m. In both, the associator, unitors, braiding and the
inverse data are identity phases, but they are still produced explicitly so
that law checks can be run generically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable


class PicardError(ValueError):
    pass


class CoherenceError(PicardError):
    def __init__(self, msg, witness=None):
        super().__init__(msg if witness is None else f"{msg}: {witness}")
        self.witness = witness


@dataclass(frozen=True)
class PhaseGroup:
    """Z/m read multiplicatively as m-th roots of unity."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise PicardError("phase modulus must be positive")

    def norm(self, k):
        return k % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def elements(self):
        return range(self.modulus)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^r + sum Z/d_i, stored as a tuple of factors with 0 meaning Z."""

    factors: tuple = ()

    @classmethod
    def presented(cls, rank, torsion=()):
        return cls(tuple([0] * rank) + tuple(d for d in torsion if d != 1))

    @property
    def rank(self):
        return sum(1 for d in self.factors if d == 0)

    @property
    def order(self):
        if any(d == 0 for d in self.factors):
            return 0
        out = 1
        for d in self.factors:
            out *= d
        return out

    def norm(self, x):
        if isinstance(x, int):
            x = (x,)
        if len(x) != len(self.factors):
            raise PicardError(f"element {x} has wrong length for {self}")
        return tuple(v % d if d else v for v, d in zip(x, self.factors))

    def zero(self):
        return tuple(0 for _ in self.factors)

    def add(self, x, y):
        return self.norm(tuple(a + b for a, b in zip(x, y)))

    def neg(self, x):
        return self.norm(tuple(-a for a in x))

    def scale(self, k, x):
        return self.norm(tuple(k * a for a in x))

    def elements(self, window=2):
        ranges = [range(d) if d else range(-window, window + 1) for d in self.factors]
        return [tuple(t) for t in itertools.product(*ranges)]

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.factors)


class CoeffGroupoid:
    """Common interface; concrete models below."""

    phase: PhaseGroup

    def zero(self):
        raise NotImplementedError

    def obj_add(self, x, y):
        raise NotImplementedError

    def obj_neg(self, x):
        raise NotImplementedError

    def norm(self, x):
        raise NotImplementedError

    def connected(self, x, y):
        raise NotImplementedError

    def automorphisms(self, x):
        return list(self.phase.elements())

    def objects(self, window=2):
        raise NotImplementedError

    # morphisms
    def mor(self, src, dst, phase=0):
        src, dst = self.norm(src), self.norm(dst)
        if not self.connected(src, dst):
            raise PicardError(f"no morphism {src} -> {dst} in {self}")
        return GpdMorphism(self, src, dst, self.phase.norm(phase))

    def identity(self, x):
        return self.mor(x, x, 0)


@dataclass(frozen=True)
class Discrete(CoeffGroupoid):
    A: AbelianGroup

    @property
    def phase(self):
        return PhaseGroup(1)

    def zero(self):
        return self.A.zero()

    def obj_add(self, x, y):
        return self.A.add(x, y)

    def obj_neg(self, x):
        return self.A.neg(x)

    def norm(self, x):
        return self.A.norm(x)

    def connected(self, x, y):
        return self.norm(x) == self.norm(y)

    def objects(self, window=2):
        return self.A.elements(window)

    def pi0(self):
        return self.A

    def pi1(self):
        return AbelianGroup(())

    def __str__(self):
        return f"Discrete({self.A})"


@dataclass(frozen=True)
class FramedLines(CoeffGroupoid):
    P: PhaseGroup

    @property
    def phase(self):
        return self.P

    @property
    def modulus(self):
        return self.P.modulus

    def zero(self):
        return 0

    def obj_add(self, x, y):
        return x + y

    def obj_neg(self, x):
        return -x

    def norm(self, x):
        if not isinstance(x, int):
            raise PicardError(f"line label must be an int, got {x!r}")
        return x

    def connected(self, x, y):
        return True

    def objects(self, window=2):
        return list(range(-window, window + 1))

    def pi0(self):
        return AbelianGroup(())

    def pi1(self):
        return AbelianGroup.presented(0, (self.P.modulus,))

    def __str__(self):
        return f"FramedLines(Z/{self.P.modulus})"


def lines(m):
    return FramedLines(PhaseGroup(m))


def discrete(*factors):
    return Discrete(AbelianGroup(tuple(factors)))


@dataclass(frozen=True)
class GpdMorphism:
    groupoid: CoeffGroupoid
    src: object
    dst: object
    phase: int = 0


def _same(x, y):
    if x != y:
        raise PicardError(f"coefficient groupoids differ: {x} vs {y}")


def tensor(G, x, y):
    return G.obj_add(G.norm(x), G.norm(y))


def tensor_mor(f, g):
    _same(f.groupoid, g.groupoid)
    G = f.groupoid
    return GpdMorphism(G, G.obj_add(f.src, g.src), G.obj_add(f.dst, g.dst), G.phase.add(f.phase, g.phase))


def negate(G, x):
    return G.obj_neg(G.norm(x))


def negate_mor(f):
    G = f.groupoid
    return GpdMorphism(G, G.obj_neg(f.src), G.obj_neg(f.dst), G.phase.neg(f.phase))


def compose(f, g):
    """g after f (diagrammatic order: first f, then g)."""
    _same(f.groupoid, g.groupoid)
    if f.dst != g.src:
        raise PicardError(f"not composable: {f.dst} != {g.src}")
    return GpdMorphism(f.groupoid, f.src, g.dst, f.groupoid.phase.add(f.phase, g.phase))


def invert(f):
    return GpdMorphism(f.groupoid, f.dst, f.src, f.groupoid.phase.neg(f.phase))


# structure morphisms; all identity phases in these models

def alpha(G, s, t, u):
    return G.mor(G.obj_add(G.obj_add(s, t), u), G.obj_add(s, G.obj_add(t, u)))


def lunit(G, s):
    return G.mor(G.obj_add(G.zero(), s), s)


def runit(G, s):
    return G.mor(G.obj_add(s, G.zero()), s)


def braid(G, s, t):
    return G.mor(G.obj_add(s, t), G.obj_add(t, s))


def m_inv(G, s):
    """s + (-s) -> 0"""
    return G.mor(G.obj_add(s, G.obj_neg(s)), G.zero())


def n_inv(G, s):
    """(-s) + s -> 0"""
    return G.mor(G.obj_add(G.obj_neg(s), s), G.zero())


def inverse_law_holds(G, s):
    lhs = compose(tensor_mor(m_inv(G, s), G.identity(s)), lunit(G, s))
    rhs = compose(alpha(G, s, G.obj_neg(s), s), compose(tensor_mor(G.identity(s), n_inv(G, s)), runit(G, s)))
    return lhs == rhs


@dataclass(frozen=True)
class Homomorphism:
    """A symmetric monoidal functor F: src -> dst.

    ``obj`` maps objects, ``phase_mult`` sends a source phase k to
    k * phase_mult, ``coh(s, t)`` is the phase of F(s) + F(t) -> F(s + t).
    """

    src: CoeffGroupoid
    dst: CoeffGroupoid
    obj: Callable
    coh: Callable = None
    phase_mult: int = 0

    def __call__(self, x):
        return self.dst.norm(self.obj(self.src.norm(x)))

    def phi(self, s, t):
        return 0 if self.coh is None else self.dst.phase.norm(self.coh(s, t))

    def on_mor(self, f):
        return GpdMorphism(self.dst, self(f.src), self(f.dst), self.dst.phase.norm(f.phase * self.phase_mult))

    def coherence_mor(self, s, t):
        return self.dst.mor(self.dst.obj_add(self(s), self(t)), self(self.src.obj_add(s, t)), self.phi(s, t))


def hom_of_groupoids(src, dst, obj, coh=None, phase_mult=0, window=2):
    F = Homomorphism(src, dst, obj, coh, phase_mult)
    check_homomorphism(F, window)
    return F


def check_homomorphism(F, window=2):
    S, T = F.src, F.dst
    if (F.phase_mult * S.phase.modulus) % T.phase.modulus:
        raise CoherenceError("phase map is not a homomorphism", F.phase_mult)
    objs = S.objects(window)
    for s, t in itertools.product(objs, repeat=2):
        st = S.obj_add(s, t)
        if not T.connected(T.obj_add(F(s), F(t)), F(st)):
            raise CoherenceError("F(s)+F(t) not isomorphic to F(s+t)", (s, t))
        if F.phi(s, t) != F.phi(t, s):
            raise CoherenceError("braiding equation fails", (s, t))
    for s, s2 in itertools.product(objs, repeat=2):
        if S.connected(s, s2) and not T.connected(F(s), F(s2)):
            raise CoherenceError("morphism has no image", (s, s2))
    # naturality of the coherence in each slot
    for s, s2, t in itertools.product(objs, repeat=3):
        if S.connected(s, s2) and F.phi(s, t) != F.phi(s2, t):
            raise CoherenceError("coherence not natural", (s, s2, t))
    for s, t, u in itertools.product(objs, repeat=3):
        lhs = F.phi(t, u) + F.phi(s, S.obj_add(t, u))
        rhs = F.phi(s, t) + F.phi(S.obj_add(s, t), u)
        if T.phase.norm(lhs - rhs):
            raise CoherenceError("associativity equation fails", (s, t, u))
    return True


def identity_hom(G):
    return Homomorphism(G, G, lambda x: x, None, 1)


def compose_hom(F, G):
    """G after F."""
    _same(F.dst, G.src)

    def coh(s, t):
        return G.src.phase.norm(F.phi(s, t)) * G.phase_mult + G.phi(F(s), F(t))

    return Homomorphism(F.src, G.dst, lambda x: G(F(x)), coh, F.phase_mult * G.phase_mult)


def add_hom(F, G):
    """Pointwise sum, the monoidal structure on Hom(A, B)."""
    _same(F.src, G.src)
    _same(F.dst, G.dst)
    B = F.dst
    return Homomorphism(
        F.src, B, lambda x: B.obj_add(F(x), G(x)),
        lambda s, t: F.phi(s, t) + G.phi(s, t), F.phase_mult + G.phase_mult,
    )


def neg_hom(F):
    B = F.dst
    return Homomorphism(F.src, B, lambda x: B.obj_neg(F(x)), lambda s, t: -F.phi(s, t), -F.phase_mult)


@dataclass(frozen=True)
class MonoidalTransformation:
    """theta: F => G with components theta(s): F(s) -> G(s) given as phases."""

    F: Homomorphism
    G: Homomorphism
    theta: Callable

    def at(self, s):
        return self.F.dst.mor(self.F(s), self.G(s), self.theta(s))


def check_transformation(T, window=2):
    F, G = T.F, T.G
    S, B = F.src, F.dst
    objs = S.objects(window)
    for s in objs:
        if not B.connected(F(s), G(s)):
            raise CoherenceError("component has no morphism", s)
    if (F.phase_mult - G.phase_mult) % B.phase.modulus:
        raise CoherenceError("naturality fails on automorphisms", (F.phase_mult, G.phase_mult))
    for s, s2 in itertools.product(objs, repeat=2):
        if S.connected(s, s2) and B.phase.norm(T.theta(s) - T.theta(s2)):
            raise CoherenceError("naturality fails", (s, s2))
    for s, t in itertools.product(objs, repeat=2):
        lhs = T.theta(s) + T.theta(t) + G.phi(s, t)
        rhs = F.phi(s, t) + T.theta(S.obj_add(s, t))
        if B.phase.norm(lhs - rhs):
            raise CoherenceError("monoidality fails", (s, t))
    return True


def vcompose(T1, T2):
    """T2 after T1 (vertical)."""
    return MonoidalTransformation(T1.F, T2.G, lambda s: T1.theta(s) + T2.theta(s))


def hcompose(T1, T2):
    """Horizontal composite of T1: F => F' (A -> B) and T2: G => G' (B -> C)."""
    F2 = T1.G
    G = T2.F
    return MonoidalTransformation(
        compose_hom(T1.F, G), compose_hom(F2, T2.G),
        lambda s: T1.theta(s) * G.phase_mult + T2.theta(F2(s)),
    )


def identity_transformation(F):
    return MonoidalTransformation(F, F, lambda s: 0)


def transformations_equal(T1, T2, window=2):
    S = T1.F.src
    B = T1.F.dst
    for s in S.objects(window):
        if T1.F(s) != T2.F(s) or T1.G(s) != T2.G(s):
            return False
        if B.phase.norm(T1.theta(s) - T2.theta(s)):
            return False
    return True


def homs_equal(F, G, window=2):
    if F.src != G.src or F.dst != G.dst:
        return False
    B = F.dst
    if (F.phase_mult - G.phase_mult) % B.phase.modulus:
        return False
    objs = F.src.objects(window)
    if any(F(s) != G(s) for s in objs):
        return False
    return all(not B.phase.norm(F.phi(s, t) - G.phi(s, t)) for s in objs for t in objs)
