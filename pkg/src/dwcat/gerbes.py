"""Cech covers and flat hermitian line gerbes over their nerves.

A constant hermitian line over an intersection is a single integer label, and
a section of a tensor product of such lines is a phase in Z/m. Gerbe data on
ordered tuples is related to data on increasing tuples by the alternating
rule: permuting the indices multiplies labels and phases by the sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import cohomology as H
from .picard import lines
from .simplicial import DeltaComplex


class GerbeError(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg if witness is None else f"{msg}: {witness}")
        self.witness = witness


class CechCover:
    """Index set 0..n-1 and the collection of nonempty intersections."""

    def __init__(self, n, nonempty, name="cover"):
        self.n = n
        self.name = name
        sets = {frozenset(s) for s in nonempty}
        sets |= {frozenset([i]) for i in range(n)}
        self.sets = sets
        for s in sets:
            if any(not 0 <= i < n for i in s):
                raise GerbeError("index out of range", tuple(sorted(s)))
            for k in range(1, len(s)):
                for t in itertools.combinations(sorted(s), k):
                    if frozenset(t) not in sets:
                        raise GerbeError("intersection oracle is not downward closed", tuple(sorted(s)))

    @classmethod
    def generated(cls, n, maximal, name="cover"):
        sets = set()
        for m in maximal:
            for k in range(1, len(m) + 1):
                sets.update(frozenset(t) for t in itertools.combinations(sorted(m), k))
        return cls(n, sets, name)

    def nonempty(self, idx):
        return frozenset(idx) in self.sets

    def simplices(self, k):
        return sorted(tuple(sorted(s)) for s in self.sets if len(s) == k + 1)


def cech_nerve(U):
    """k-simplices: increasing (k+1)-tuples with nonempty intersection."""
    top = max(len(s) for s in U.sets) - 1
    tuples = [U.simplices(k) for k in range(top + 1)]
    index = [{t: i for i, t in enumerate(level)} for level in tuples]
    faces = []
    for k in range(1, top + 1):
        faces.append([tuple(index[k - 1][t[:i] + t[i + 1:]] for i in range(k + 1)) for t in tuples[k]])
    X = DeltaComplex(U.n, faces, name=f"N({U.name})")
    X.tuples = tuples
    X.index = index
    X.cover = U
    return X.validate()


@dataclass
class CoverCategory:
    """Objects: nonempty intersections U_S; a morphism U_S -> U_T when T is in S."""

    cover: CechCover
    objects: list = field(init=False)

    def __post_init__(self):
        self.objects = sorted((tuple(sorted(s)) for s in self.cover.sets), key=lambda t: (len(t), t))

    def hom(self, S, T):
        return set(T) <= set(S)

    def compose(self, a, b):
        """U_{i,j} o U_{j,k} := U_{i,j,k}."""
        out = tuple(sorted(set(a) | set(b)))
        if not self.cover.nonempty(out):
            raise GerbeError("composite intersection is empty", out)
        return out


def cover_category(U):
    return CoverCategory(U)


def _sorted_sign(t):
    """(sorted tuple, sign of the sorting permutation) or (None, 0) on repeats."""
    if len(set(t)) != len(t):
        return None, 0
    perm = sorted(range(len(t)), key=lambda i: t[i])
    sign = 1
    seen = [False] * len(t)
    for i in range(len(t)):
        if seen[i]:
            continue
        j, cyc = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cyc += 1
        if cyc % 2 == 0:
            sign = -sign
    return tuple(sorted(t)), sign


class _Alternating:
    """Values on increasing tuples, read on any ordering with the sign rule."""

    def __init__(self, values, modulus=0):
        self.values = dict(values)
        self.modulus = modulus

    def __call__(self, *t):
        s, sign = _sorted_sign(t)
        if s is None:
            return 0
        v = sign * self.values.get(s, 0)
        return v % self.modulus if self.modulus else v


@dataclass
class Gerbe1Data:
    cover: CechCover
    modulus: int
    labels: dict  # increasing pairs -> line label
    theta: dict  # increasing triples -> section phase

    def label(self, i, j):
        return _Alternating(self.labels)(i, j)

    def section(self, i, j, k):
        return _Alternating(self.theta, self.modulus)(i, j, k)

    def check(self):
        U, m = self.cover, self.modulus
        for q in U.simplices(3):
            i, j, k, l = q
            v = self.section(j, k, l) - self.section(i, k, l) + self.section(i, j, l) - self.section(i, j, k)
            if v % m:
                raise GerbeError("1-gerbe cocycle condition fails", q)
        return self


@dataclass
class ObjectData:
    labels: dict  # index -> line label L_i
    isos: dict  # increasing pair -> phase of L_i = Lambda_ij + L_j

    def iso(self, i, j):
        return _Alternating(self.isos)(i, j)


def check_object(g, obj):
    """Triple condition: m_ij + m_jk - m_ik equals theta_ijk."""
    m = g.modulus
    for t in g.cover.simplices(2):
        i, j, k = t
        v = obj.iso(i, j) + obj.iso(j, k) - obj.iso(i, k) - g.section(i, j, k)
        if v % m:
            raise GerbeError("object is not compatible with the gerbe", t)
    return True


@dataclass
class Gerbe2Data:
    cover: CechCover
    modulus: int
    pair_gerbes: dict  # increasing pair -> Gerbe1Data on the restricted cover (zero here)
    objects: dict  # increasing triple -> object label
    theta: dict  # increasing quadruple -> phase

    def section(self, *t):
        return _Alternating(self.theta, self.modulus)(*t)

    def check(self):
        m = self.modulus
        for q in self.cover.simplices(4):
            v = sum((-1) ** r * self.section(*(q[:r] + q[r + 1:])) for r in range(5))
            if v % m:
                raise GerbeError("2-gerbe quintuple condition fails", q)
        return self


def nerve_complex(U, m):
    X = cech_nerve(U)
    return X, H.cochain_complex(X, lines(m))


def gerbe_from_cocycle(x):
    C = x.complex
    X = C.X
    U = X.cover
    m = C.modulus
    if x.n == 1:
        labels = {X.tuples[1][s]: v for s, v in zip(C.keep[1], x.a.values)}
        theta = {X.tuples[2][s]: v for s, v in zip(C.keep.get(2, ()), x.phi.phases)}
        return Gerbe1Data(U, m, labels, theta).check()
    if x.n == 2:
        objs = {X.tuples[2][s]: v for s, v in zip(C.keep[2], x.a.values)}
        theta = {X.tuples[3][s]: v for s, v in zip(C.keep.get(3, ()), x.phi.phases)}
        pairs = {t: Gerbe1Data(U, m, {}, {}) for t in X.tuples[1]}
        return Gerbe2Data(U, m, pairs, objs, theta).check()
    raise GerbeError("only degrees 1 and 2 correspond to gerbes")


def cocycle_from_gerbe(g, C=None):
    U = g.cover
    if C is None:
        _, C = nerve_complex(U, g.modulus)
    X = C.X
    if isinstance(g, Gerbe1Data):
        g.check()
        a = [g.labels.get(X.tuples[1][s], 0) for s in C.keep[1]]
        ph = [g.theta.get(X.tuples[2][s], 0) for s in C.keep.get(2, ())]
        n = 1
    else:
        g.check()
        if any(pg.labels or pg.theta for pg in g.pair_gerbes.values()):
            raise GerbeError("nonzero pair gerbes are not representable by a nerve cocycle")
        a = [g.objects.get(X.tuples[2][s], 0) for s in C.keep[2]]
        ph = [g.theta.get(X.tuples[3][s], 0) for s in C.keep.get(3, ())]
        n = 2
    try:
        return H.make_cocycle(C, n, a, ph)
    except H.CocycleError as e:
        w = e.witness
        raise GerbeError("gerbe data fails the cocycle condition", X.tuples[n + 2][w] if w is not None else None)


def find_object(g, C=None):
    """An Object compatible with the 1-gerbe, or None when its class is nonzero."""
    x = cocycle_from_gerbe(g, C)
    Cx = x.complex
    X = Cx.X
    u = H.find_morphism(x, H.zero_cocycle(Cx, 1))
    if u is None:
        return None
    L = {X.tuples[0][s][0]: -v for s, v in zip(Cx.keep[0], u.b.values)}
    isos = {X.tuples[1][s]: v for s, v in zip(Cx.keep[1], u.f.phases)}
    obj = ObjectData(L, isos)
    check_object(g, obj)
    return obj


def tensor_gerbes(g, h):
    if g.cover is not h.cover and g.cover.sets != h.cover.sets:
        raise GerbeError("gerbes live on different covers")
    if g.modulus != h.modulus:
        raise GerbeError("gerbes have different phase groups")
    m = g.modulus
    if isinstance(g, Gerbe1Data):
        labels = {t: g.labels.get(t, 0) + h.labels.get(t, 0) for t in set(g.labels) | set(h.labels)}
        theta = {t: (g.theta.get(t, 0) + h.theta.get(t, 0)) % m for t in set(g.theta) | set(h.theta)}
        return Gerbe1Data(g.cover, m, labels, theta).check()
    objs = {t: g.objects.get(t, 0) + h.objects.get(t, 0) for t in set(g.objects) | set(h.objects)}
    theta = {t: (g.theta.get(t, 0) + h.theta.get(t, 0)) % m for t in set(g.theta) | set(h.theta)}
    return Gerbe2Data(g.cover, m, dict(g.pair_gerbes), objs, theta).check()


def inverse_gerbe(g):
    m = g.modulus
    return Gerbe1Data(g.cover, m, {t: -v for t, v in g.labels.items()}, {t: (-v) % m for t, v in g.theta.items()})


def zero_gerbe(U, m):
    return Gerbe1Data(U, m, {}, {})


def global_trivialization_check(g):
    """True when every section phase is the identity in the displayed bases."""
    return all(v % g.modulus == 0 for v in g.theta.values())


def gerbes_equivalent(g, h):
    return H.find_morphism(cocycle_from_gerbe(g), cocycle_from_gerbe(h)) is not None


@dataclass
class LocalSystem:
    """A functor from the edge-path groupoid to framed lines."""

    X: object
    modulus: int
    labels: list  # per vertex
    phases: list  # per edge, from source to target

    def holonomy(self, path):
        """Composite phase along a list of (edge, +1/-1) steps."""
        return sum(e * self.phases[s] for s, e in path) % self.modulus

    def is_closed(self, path):
        X = self.X
        pos = None
        for s, e in path:
            a, b = X.edge_ends(s)
            u, v = (a, b) if e == 1 else (b, a)
            if pos is not None and pos != u:
                return False
            if pos is None:
                start = u
            pos = v
        return pos == start if path else True


def zero_gerbe_functor(x):
    """Local system of a degree 0 cocycle: labels a(v), edge phases phi(e)."""
    C = x.complex
    if x.n != 0 or C.step != 1:
        raise GerbeError("a 0-gerbe is a degree 0 cocycle")
    return LocalSystem(C.X, C.modulus, list(x.a.values), list(x.phi.phases))


def star_cover(X, name=None):
    """Cover by open vertex stars: S is nonempty iff S spans a simplex."""
    sets = []
    for k in range(X.dim + 1):
        for s in range(X.count(k)):
            vs = X.vertices(k, s)
            if len(set(vs)) != len(vs):
                raise GerbeError("star cover needs a complex with distinct simplex vertices")
            sets.append(frozenset(vs))
    return CechCover(X.n0, sets, name or f"star({X.name})")


def circle3():
    return CechCover.generated(3, [(0, 1), (1, 2), (0, 2)], "circle3")


def interval2():
    return CechCover.generated(2, [(0, 1)], "interval2")


def sphere4():
    return CechCover.generated(4, [t for t in itertools.combinations(range(4), 3)], "sphere4")


COVERS = {"circle3": circle3, "interval2": interval2, "sphere4": sphere4}
