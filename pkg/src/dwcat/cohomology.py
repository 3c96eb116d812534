"""(Co)chain complexes of Picard groupoids over a Delta-complex.

Since both coefficient models have identity structure phases, a cochain
splits into an object part (over the object group) and a phase part (over
Z/m). A complex is described by its basis in each degree (a list of simplex
indices of the underlying complex) and by the integer differential. Chains
and cochains share the code; ``step`` is +1 for cochains and -1 for chains.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg as il
from .picard import AbelianGroup, Discrete, FramedLines


class CohomologyError(ValueError):
    pass


class CocycleError(CohomologyError):
    def __init__(self, msg, witness=None):
        super().__init__(msg if witness is None else f"{msg} (witness simplex {witness})")
        self.witness = witness


class PicardComplex:
    """Normalized (co)chains on the simplices ``keep[k]`` of X with values in G."""

    def __init__(self, X, G, step, keep=None, name=""):
        self.X = X
        self.G = G
        self.step = step
        self.name = name or X.name
        if keep is None:
            keep = {k: list(range(X.count(k))) for k in range(X.dim + 1)}
        self.keep = {k: list(v) for k, v in keep.items()}
        self.pos = {k: {s: i for i, s in enumerate(v)} for k, v in self.keep.items()}
        self._D = {}
        self._sq = {}

    # shape
    def size(self, k):
        return len(self.keep.get(k, ()))

    @property
    def modulus(self):
        return self.G.phase.modulus

    def obj_factors(self):
        """Moduli of the object-level coefficient summands."""
        if isinstance(self.G, Discrete):
            return list(self.G.A.factors)
        return []

    def D(self, k):
        """Integer matrix of the differential from degree k to k + step."""
        if k not in self._D:
            t = k + self.step
            rows, cols = self.size(t), self.size(k)
            M = il.zeros(rows, cols)
            if rows and cols:
                X = self.X
                if self.step == 1:
                    for r, s in enumerate(self.keep[t]):
                        for i, f in enumerate(X.faces[t][s]):
                            c = self.pos[k].get(f)
                            if f is not None and c is not None:
                                M[r][c] += -1 if i % 2 else 1
                else:
                    for c, s in enumerate(self.keep[k]):
                        for i, f in enumerate(X.faces[k][s]):
                            r = self.pos[t].get(f)
                            if f is not None and r is not None:
                                M[r][c] += -1 if i % 2 else 1
            self._D[k] = M
        return self._D[k]

    def apply(self, k, vec, modulus=0):
        out = il.matvec(self.D(k), vec) if self.size(k + self.step) else []
        return [x % modulus for x in out] if modulus else out

    def subquotient(self, k, modulus):
        key = (k, modulus)
        if key not in self._sq:
            n = self.size(k)
            d_out = self.D(k) if self.size(k + self.step) and n else []
            d_in = self.D(k - self.step) if self.size(k - self.step) and n else []
            self._sq[key] = il.subquotient_at(d_out, d_in, n, modulus)
        return self._sq[key]

    # objects
    def zero_values(self, k):
        z = self.G.zero()
        return [z] * self.size(k)

    def obj_split(self, values):
        """Per-factor integer vectors of an object cochain."""
        if isinstance(self.G, FramedLines):
            return [list(values)]
        return [[v[j] for v in values] for j in range(len(self.G.A.factors))]

    def obj_join(self, parts, n):
        if isinstance(self.G, FramedLines):
            return list(parts[0]) if parts else [0] * n
        factors = self.G.A.factors
        if not factors:
            return [()] * n
        return [self.G.norm(tuple(p[i] for p in parts)) for i in range(n)]

    def obj_d(self, k, values):
        if isinstance(self.G, FramedLines):
            return self.apply(k, list(values))
        parts = [self.apply(k, p, d) for p, d in zip(self.obj_split(values), self.G.A.factors)]
        return self.obj_join(parts, self.size(k + self.step))

    def obj_add(self, a, b):
        return [self.G.obj_add(x, y) for x, y in zip(a, b)]

    def obj_neg(self, a):
        return [self.G.obj_neg(x) for x in a]

    def phase_d(self, k, phases):
        return self.apply(k, list(phases), self.modulus)

    def norm_phases(self, phases):
        m = self.modulus
        return [p % m for p in phases]

    def connected(self, a, b):
        return all(self.G.connected(x, y) for x, y in zip(a, b))

    # embeddings between complexes on the same X
    def transfer(self, k, vec, other, zero=0):
        """Re-index a value vector from ``other``'s basis to ours (zero-fill)."""
        out = [zero] * self.size(k)
        for i, s in enumerate(other.keep.get(k, ())):
            j = self.pos[k].get(s)
            if j is not None:
                out[j] = vec[i]
        return out

    def simplex(self, k, i):
        return self.keep[k][i]


def cochain_complex(X, G, rel=None, only=None, name=""):
    """Cochains on X; ``rel`` drops a subcomplex (relative), ``only`` keeps one."""
    return PicardComplex(X, G, 1, _keep(X, rel, only), name)


def chain_complex(X, G, rel=None, only=None, name=""):
    return PicardComplex(X, G, -1, _keep(X, rel, only), name)


def _keep(X, rel, only):
    if rel is None and only is None:
        return None
    keep = {}
    for k in range(X.dim + 1):
        if only is not None:
            keep[k] = sorted(only.get(k, ()))
        else:
            keep[k] = [s for s in range(X.count(k)) if s not in rel.get(k, ())]
    return keep


@dataclass(frozen=True)
class Cochain:
    degree: int
    values: tuple


@dataclass(frozen=True)
class CochainMorphism:
    degree: int
    src: tuple
    dst: tuple
    phases: tuple


@dataclass(frozen=True)
class Cocycle2:
    """An object (a, phi) of Ker(d, chi): phi is a morphism da -> 0."""

    complex: PicardComplex
    n: int
    a: Cochain
    phi: CochainMorphism


@dataclass(frozen=True)
class CohClassMorphism:
    """Representative (b, f) of a morphism x -> y; f: x.a -> db + y.a."""

    complex: PicardComplex
    n: int
    src: Cocycle2
    dst: Cocycle2
    b: Cochain
    f: CochainMorphism


def coboundary(C, a):
    return Cochain(a.degree + C.step, tuple(C.obj_d(a.degree, a.values)))


def chi(C, a):
    dd = coboundary(C, coboundary(C, a))
    if any(v != C.G.zero() for v in dd.values):
        raise CohomologyError("d^2 is not zero on objects")
    return CochainMorphism(dd.degree, dd.values, dd.values, tuple([0] * len(dd.values)))


def d_mor(C, f):
    return CochainMorphism(
        f.degree + C.step,
        tuple(C.obj_d(f.degree, f.src)),
        tuple(C.obj_d(f.degree, f.dst)),
        tuple(C.phase_d(f.degree, f.phases)),
    )


def cochain(C, k, values=None):
    if values is None:
        return Cochain(k, tuple(C.zero_values(k)))
    if isinstance(values, dict):
        out = C.zero_values(k)
        for s, v in values.items():
            out[C.pos[k][s]] = C.G.norm(v)
        return Cochain(k, tuple(out))
    if len(values) != C.size(k):
        raise CohomologyError("cochain has wrong length")
    return Cochain(k, tuple(C.G.norm(v) for v in values))


def make_cocycle(C, n, a=None, phases=None):
    """Validate and build (a, phi); ``phases`` are the phases of phi: da -> 0."""
    a = cochain(C, n, a) if not isinstance(a, Cochain) else a
    k1 = n + C.step
    da = coboundary(C, a)
    if phases is None:
        phases = [0] * C.size(k1)
    elif isinstance(phases, dict):
        ph = [0] * C.size(k1)
        for s, v in phases.items():
            ph[C.pos[k1][s]] = v
        phases = ph
    if len(phases) != C.size(k1):
        raise CohomologyError("phi has wrong length")
    phases = C.norm_phases(phases)
    zero = C.zero_values(k1)
    for i, v in enumerate(da.values):
        if not C.G.connected(v, zero[i]):
            raise CocycleError("da is not isomorphic to 0", C.simplex(k1, i))
    phi = CochainMorphism(k1, da.values, tuple(zero), tuple(phases))
    # d(phi) must equal chi_a, which has identity phases
    dphi = C.phase_d(k1, phases)
    for i, v in enumerate(dphi):
        if v:
            raise CocycleError("cocycle condition d(phi) = chi_a fails", C.simplex(k1 + C.step, i))
    return Cocycle2(C, n, a, phi)


def zero_cocycle(C, n):
    return make_cocycle(C, n)


def add_cocycles(x, y):
    C = x.complex
    return make_cocycle(C, x.n, Cochain(x.n, tuple(C.obj_add(x.a.values, y.a.values))),
                        [p + q for p, q in zip(x.phi.phases, y.phi.phases)])


def neg_cocycle(x):
    C = x.complex
    return make_cocycle(C, x.n, Cochain(x.n, tuple(C.obj_neg(x.a.values))), [-p for p in x.phi.phases])


def scale_cocycle(x, k):
    out = zero_cocycle(x.complex, x.n)
    base = x if k >= 0 else neg_cocycle(x)
    for _ in range(abs(k)):
        out = add_cocycles(out, base)
    return out


def make_morphism(x, y, b=None, f_phases=None):
    """Validate (b, f): x -> y with f: x.a -> db + y.a carrying ``f_phases``."""
    C = x.complex
    n = x.n
    kb = n - C.step
    b = cochain(C, kb, b) if not isinstance(b, Cochain) else b
    target = tuple(C.obj_add(coboundary(C, b).values, y.a.values)) if C.size(kb) else y.a.values
    if not C.connected(x.a.values, target):
        raise CohomologyError("f has no underlying morphism x.a -> db + y.a")
    if f_phases is None:
        f_phases = [0] * C.size(n)
    f = CochainMorphism(n, x.a.values, target, tuple(C.norm_phases(f_phases)))
    lhs = C.phase_d(n, f.phases)
    rhs = C.norm_phases([p - q for p, q in zip(x.phi.phases, y.phi.phases)])
    if lhs != rhs:
        bad = next(i for i, (u, v) in enumerate(zip(lhs, rhs)) if u != v)
        raise CohomologyError(f"diagram for (b, f) does not commute at simplex {C.simplex(n + C.step, bad)}")
    return CohClassMorphism(C, n, x, y, b, f)


def identity_morphism(x):
    return make_morphism(x, x)


def compose_morphisms(u, v):
    """v after u."""
    C = u.complex
    b = Cochain(u.b.degree, tuple(C.obj_add(u.b.values, v.b.values)))
    return make_morphism(u.src, v.dst, b, [p + q for p, q in zip(u.f.phases, v.f.phases)])


def invert_morphism(u):
    C = u.complex
    return make_morphism(u.dst, u.src, Cochain(u.b.degree, tuple(C.obj_neg(u.b.values))), [-p for p in u.f.phases])


def _solve(C, k, target, modulus):
    """x with D_k x = target (mod modulus), or None."""
    if not C.size(k):
        return [] if not any(t % modulus if modulus else t for t in target) else None
    if not C.size(k + C.step):
        return [0] * C.size(k)
    return il.solve_mod(C.D(k), list(target), modulus, cols=C.size(k))


def find_morphism(x, y):
    """Some (b, f): x -> y, or None when the classes differ."""
    C = x.complex
    n = x.n
    kb = n - C.step
    if isinstance(C.G, Discrete):
        parts = []
        diff = C.obj_split(C.obj_add(x.a.values, C.obj_neg(y.a.values)))
        for vec, d in zip(diff, C.G.A.factors):
            sol = _solve(C, kb, vec, d)
            if sol is None:
                return None
            parts.append(sol)
        b = C.obj_join(parts, C.size(kb))
        return make_morphism(x, y, b)
    target = C.norm_phases([p - q for p, q in zip(x.phi.phases, y.phi.phases)])
    sol = _solve(C, n, target, C.modulus)
    if sol is None:
        return None
    return make_morphism(x, y, None, sol)


def are_equivalent_morphisms(u, v):
    """Decide whether (b, f) ~ (b', f') via some (c, g)."""
    C = u.complex
    if u.src != v.src or u.dst != v.dst:
        return False
    kb = u.n - C.step
    kc = kb - C.step
    if isinstance(C.G, Discrete):
        diff = C.obj_split(C.obj_add(u.b.values, C.obj_neg(v.b.values)))
        return all(_solve(C, kc, vec, d) is not None for vec, d in zip(diff, C.G.A.factors))
    target = C.norm_phases([q - p for p, q in zip(u.f.phases, v.f.phases)])
    return _solve(C, kb, target, C.modulus) is not None


def equivalence_witness(u, v):
    """(c, g) with b - b' = dc on objects and f' - f = dg on phases."""
    C = u.complex
    kb = u.n - C.step
    kc = kb - C.step
    if isinstance(C.G, Discrete):
        parts = []
        diff = C.obj_split(C.obj_add(u.b.values, C.obj_neg(v.b.values)))
        for vec, d in zip(diff, C.G.A.factors):
            sol = _solve(C, kc, vec, d)
            if sol is None:
                return None
            parts.append(sol)
        return C.obj_join(parts, C.size(kc)), [0] * C.size(kb)
    target = C.norm_phases([q - p for p, q in zip(u.f.phases, v.f.phases)])
    g = _solve(C, kb, target, C.modulus)
    if g is None:
        return None
    return C.zero_values(kc), g


class HnGroupoid:
    """H^n (or H_n) of a Picard complex, with pi_0 and pi_1 data."""

    def __init__(self, C, n):
        self.complex = C
        self.n = n
        s = C.step
        self._obj0 = [C.subquotient(n, d) for d in C.obj_factors()]
        self._obj1 = [C.subquotient(n - s, d) for d in C.obj_factors()]
        lines = isinstance(C.G, FramedLines)
        self._ph0 = C.subquotient(n + s, C.modulus) if lines else None
        self._ph1 = C.subquotient(n, C.modulus) if lines else None
        f0 = [f for sq in self._obj0 for f in sq.factors]
        f1 = [f for sq in self._obj1 for f in sq.factors]
        if lines:
            f0 += self._ph0.factors
            f1 += self._ph1.factors
        self.pi0 = _group(f0)
        self.pi1 = _group(f1)
        self._f0 = f0
        self._f1 = f1

    def classify(self, x):
        """Coordinates of the class of x in pi_0."""
        C = self.complex
        out = []
        for sq, vec in zip(self._obj0, C.obj_split(x.a.values)):
            out.extend(sq.coords(vec))
        if self._ph0 is not None:
            out.extend(self._ph0.coords(list(x.phi.phases)))
        return tuple(out)

    def classify_auto(self, u):
        """Coordinates in pi_1 of an automorphism (b, f) of a zero-class object."""
        C = self.complex
        out = []
        for sq, vec in zip(self._obj1, C.obj_split(u.b.values)):
            out.extend(sq.coords(vec))
        if self._ph1 is not None:
            out.extend(self._ph1.coords(list(u.f.phases)))
        return tuple(out)

    def is_zero(self, x):
        return not any(self.classify(x))

    def pi0_generators(self):
        C = self.complex
        gens = []
        nf = len(self._obj0)
        for j, sq in enumerate(self._obj0):
            for g in sq.gens:
                parts = [[0] * C.size(self.n) for _ in range(nf)]
                parts[j] = g
                gens.append(make_cocycle(C, self.n, C.obj_join(parts, C.size(self.n))))
        if self._ph0 is not None:
            for g in self._ph0.gens:
                gens.append(make_cocycle(C, self.n, None, g))
        return gens

    def pi1_generators(self):
        C = self.complex
        z = zero_cocycle(C, self.n)
        kb = self.n - C.step
        gens = []
        nf = len(self._obj1)
        for j, sq in enumerate(self._obj1):
            for g in sq.gens:
                parts = [[0] * C.size(kb) for _ in range(nf)]
                parts[j] = g
                gens.append(make_morphism(z, z, C.obj_join(parts, C.size(kb))))
        if self._ph1 is not None:
            for g in self._ph1.gens:
                gens.append(make_morphism(z, z, None, g))
        return gens

    def report(self):
        return {
            "pi0": str(self.pi0),
            "pi1": str(self.pi1),
            "pi0_factors": [str(d) if d else "Z" for d in self._f0],
            "pi1_factors": [str(d) if d else "Z" for d in self._f1],
        }


def _group(factors):
    # free summands first, then torsion in divisibility order as produced by SNF
    free = [d for d in factors if d == 0]
    tors = sorted(d for d in factors if d)
    return AbelianGroup(tuple(free + _normalize_torsion(tors)))


def _normalize_torsion(ds):
    """Invariant factors of a direct sum of cyclic groups."""
    if not ds:
        return []
    n = len(ds)
    diag = [[ds[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return [d for d in il.smith(diag).diag if d != 1]


def cohomology(C, n):
    return HnGroupoid(C, n)


def classify(x):
    return HnGroupoid(x.complex, x.n).classify(x)


# functoriality

def pullback(fmap, x, target=None):
    """f^*(a, phi) along a simplicial map f: X -> Y, for x on cochains of Y."""
    C = x.complex
    if C.step != 1:
        raise CohomologyError("pullback acts on cochains")
    T = target or cochain_complex(fmap.src, C.G)
    n = x.n

    def pull(k, vals, zero):
        out = []
        for s in T.keep.get(k, ()):
            img = fmap.maps[k][s] if k < len(fmap.maps) else None
            j = None if img is None else C.pos[k].get(img)
            out.append(zero if j is None else vals[j])
        return out

    a = pull(n, x.a.values, C.G.zero())
    ph = pull(n + 1, x.phi.phases, 0)
    return make_cocycle(T, n, a, ph)


def restrict(x, target):
    """Restriction to a complex on the same X with a smaller basis."""
    C = x.complex
    n = x.n
    a = [x.a.values[C.pos[n][s]] for s in target.keep.get(n, ())]
    ph = [x.phi.phases[C.pos[n + C.step][s]] for s in target.keep.get(n + C.step, ())]
    return make_cocycle(target, n, a, ph)


def extend(x, target):
    """Zero-extension into a complex on the same X with a larger basis."""
    C = x.complex
    n = x.n
    a = target.transfer(n, list(x.a.values), C, C.G.zero())
    ph = target.transfer(n + C.step, list(x.phi.phases), C, 0)
    return make_cocycle(target, n, a, ph)


# the pair sequences

@dataclass
class CohomologyPair:
    """0 -> C(X, Y) -> C(X) -> C(Y) -> 0 for a subcomplex Y of X."""

    X: object
    sub: dict
    G: object

    def __post_init__(self):
        self.CX = cochain_complex(self.X, self.G, name=self.X.name)
        self.CY = cochain_complex(self.X, self.G, only=self.sub, name="Y")
        self.CR = cochain_complex(self.X, self.G, rel=self.sub, name="(X,Y)")

    def connecting(self, c):
        """d^n: H^n(Y) -> H^{n+1}(X, Y) by lifting and differentiating."""
        n = c.n
        CX, CY, CR = self.CX, self.CY, self.CR
        B = CX.transfer(n, list(c.a.values), CY, self.G.zero())
        dB = CX.obj_d(n, B)
        A = [dB[CX.pos[n + 1][s]] for s in CR.keep.get(n + 1, ())]
        ext_c = CX.transfer(n + 1, list(c.phi.phases), CY, 0)
        dext = CX.phase_d(n + 1, ext_c)
        a = [-dext[CX.pos[n + 2][s]] for s in CR.keep.get(n + 2, ())]
        return make_cocycle(CR, n + 1, A, a)

    def psi(self, c):
        """The morphism i(d c) -> 0 in H^{n+1}(X), represented by (B, a^-1)."""
        n = c.n
        CX, CY = self.CX, self.CY
        dc = self.connecting(c)
        src = extend(dc, CX)
        B = CX.transfer(n, list(c.a.values), CY, self.G.zero())
        j = [-p for p in CX.transfer(n + 1, list(c.phi.phases), CY, 0)]
        return make_morphism(src, zero_cocycle(CX, n + 1), Cochain(n, tuple(B)), j)


@dataclass(frozen=True)
class RelativeHomologyObject:
    """(lift, X', w): a chain on X, a chain on Y, and w: d(lift) -> i(X')."""

    pair: object
    n: int
    lift: tuple
    yb: tuple
    w: tuple


@dataclass
class HomologyPair:
    """0 -> C(Y) -> C(X) -> C(X, Y) -> 0 on chains."""

    X: object
    sub: dict
    G: object

    def __post_init__(self):
        self.CX = chain_complex(self.X, self.G, name=self.X.name)
        self.CY = chain_complex(self.X, self.G, only=self.sub, name="Y")
        self.CR = chain_complex(self.X, self.G, rel=self.sub, name="(X,Y)")

    def relative_object(self, n, lift, yb, w):
        CX, CY = self.CX, self.CY
        dl = CX.obj_d(n, list(lift))
        iy = CX.transfer(n - 1, list(yb), CY, self.G.zero())
        if not CX.connected(dl, iy):
            raise CohomologyError("witness has no underlying morphism d(lift) -> i(X')")
        w = CX.norm_phases(list(w))
        dw = CX.phase_d(n - 1, w)
        inY = set(CY.keep.get(n - 2, ()))
        for i, s in enumerate(CX.keep.get(n - 2, ())):
            if s not in inY and dw[i]:
                raise CocycleError("relative cycle condition fails", s)
        return RelativeHomologyObject(self, n, tuple(lift), tuple(yb), tuple(w))

    def to_relative(self, obj):
        """The underlying object of H_n(X, Y): project lift and witness."""
        CX, CR = self.CX, self.CR
        n = obj.n
        a = [obj.lift[CX.pos[n][s]] for s in CR.keep.get(n, ())]
        ph = [obj.w[CX.pos[n - 1][s]] for s in CR.keep.get(n - 1, ())]
        return make_cocycle(CR, n, a, ph)

    def connecting(self, obj):
        """d_n(lift, [X', w]) = (X', x') with x' = -dw restricted to Y."""
        CX, CY = self.CX, self.CY
        n = obj.n
        dw = CX.phase_d(n - 1, list(obj.w))
        xp = [-dw[CX.pos[n - 2][s]] for s in CY.keep.get(n - 2, ())]
        return make_cocycle(CY, n - 1, list(obj.yb), xp)

    def psi(self, obj):
        """Psi_n = [lift, w^-1]: i(d obj) -> 0 in H_{n-1}(X)."""
        CX = self.CX
        n = obj.n
        src = extend(self.connecting(obj), CX)
        return make_morphism(src, zero_cocycle(CX, n - 1), Cochain(n, obj.lift), [-p for p in obj.w])
