"""Finite gauge theory: gauge fields, the line of a field, state spaces and
cobordism maps, with exact cyclotomic arithmetic.

Fields are flat G-colorings of edges. A gauge transformation h acts on the
right by (f.h)(e) = h(src)^-1 f(e) h(tgt). Weights are sums of the group
cocycle over top simplices, evaluated on spine colors.
"""

from __future__ import annotations

import copy
import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import cap as K
from . import cohomology as H
from .cyclotomic import Cyclotomic
from .picard import lines
from .simplicial import (BoundaryMismatch, Chain, boundary, check_relative_cycle,
                         fundamental_cycle, nerve, prism, same_complex)


class DWError(ValueError):
    pass


class HolonomyError(DWError):
    pass


# group cocycles

class GroupCocycle:
    """Normalized G-valued cocycle omega: G^d -> Z/modulus."""

    def __init__(self, G, degree, modulus, values=None, name="omega"):
        self.G = G
        self.degree = degree
        self.modulus = modulus
        self.name = name
        self.values = {}
        for t, v in (values or {}).items():
            t = tuple(t)
            if len(t) != degree:
                raise DWError(f"cocycle argument {t} has wrong length")
            if v % modulus:
                self.values[t] = v % modulus

    def __call__(self, *gs):
        return self.values.get(gs, 0)

    def is_trivial(self):
        return not self.values

    def validate(self):
        G, d, m = self.G, self.degree, self.modulus
        for t in self.values:
            if any(g == G.e for g in t):
                raise DWError(f"cocycle is not normalized at {t}")
        for t in itertools.product(G.elements(), repeat=d + 1):
            v = self(*t[1:])
            for i in range(1, d + 1):
                v += (-1) ** i * self(*(t[: i - 1] + (G.mul(t[i - 1], t[i]),) + t[i + 1:]))
            v += (-1) ** (d + 1) * self(*t[:-1])
            if v % m:
                raise DWError(f"cocycle condition fails at {t}")
        return self

    def as_cocycle2(self, N=None):
        """(0, omega) on the nerve: a degree d-1 object of H(BG; lines)."""
        B = N or nerve(self.G, self.degree + 1)
        C = H.cochain_complex(B, lines(self.modulus))
        ph = [self(*t) for t in B.tuples[self.degree]]
        return H.make_cocycle(C, self.degree - 1, None, ph)


def trivial_cocycle(G, degree=3):
    return GroupCocycle(G, degree, 1, {}, "trivial")


def cyclic_cocycle(n, p, G=None):
    """p * a * (b + c - ((b + c) mod n)) mod n^2 on Z/n."""
    from .groups import cyclic
    G = G or cyclic(n)
    vals = {}
    for a, b, c in itertools.product(range(n), repeat=3):
        vals[(a, b, c)] = p * a * (b + c - ((b + c) % n))
    return GroupCocycle(G, 3, n * n, vals, f"p{p % n}").validate()


# fields

@dataclass(frozen=True)
class GaugeField:
    X: object
    G: object
    colors: tuple

    def flat(self):
        return flatness_witness(self.X, self.G, self.colors) is None

    def act(self, h):
        return GaugeField(self.X, self.G, gauge_act(self.X, self.G, self.colors, h))

    def restrict(self, inclusion):
        return GaugeField(inclusion.src, self.G, tuple(self.colors[e] for e in inclusion.maps[1]))

    def nerve_map(self, B):
        """The simplicial map X -> nerve(G) given by spine colors."""
        X = self.X
        maps = [[0] * X.n0]
        for k in range(1, min(X.dim, len(B.tuples) - 1) + 1):
            maps.append([B.lookup(tuple(self.colors[e] for e in X.spine(k, s))) for s in range(X.count(k))])
        from .simplicial import SimplicialMap
        return SimplicialMap(X, B, maps)


def flatness_witness(X, G, colors):
    for t in range(X.count(2)):
        d0, d1, d2 = X.faces[2][t]
        if G.mul(colors[d2], colors[d0]) != colors[d1]:
            return t
    return None


def gauge_act(X, G, colors, h):
    out = []
    for e, g in enumerate(colors):
        s, t = X.edge_ends(e)
        out.append(G.mul(G.mul(G.inv[h[s]], g), h[t]))
    return tuple(out)


class _Top:
    """Precomputed spine edges of the top simplices and a fundamental chain."""

    def __init__(self, X, z):
        n = z.degree
        self.items = [(X.spine(n, s), c) for s, c in sorted(z.coeffs.items())]

    def weight(self, omega, colors):
        total = 0
        for sp, c in self.items:
            v = omega.values.get(tuple(colors[e] for e in sp))
            if v:
                total += c * v
        return total % omega.modulus


def weight(X, omega, colors, z=None):
    """Sum over top simplices of eps(s) * omega(spine colors): the fast path."""
    z = z if z is not None else fundamental_cycle(X)
    return _Top(X, z).weight(omega, colors)


def field_cocycle_pairing(f, omega, z=None, route="fast"):
    """deg(f^* omega cap z) as an element of Z/modulus."""
    X = f.X
    z = z if z is not None else fundamental_cycle(X)
    if z.degree != omega.degree:
        raise DWError(f"cannot pair a degree {omega.degree} cocycle with a degree {z.degree} cycle")
    if route == "fast":
        return _Top(X, z).weight(omega, f.colors)
    # through the cap module: pull back (0, omega) along f and cap
    ph = [0] * X.count(omega.degree)
    for s in range(X.count(omega.degree)):
        t = tuple(f.colors[e] for e in X.spine(omega.degree, s))
        ph[s] = omega(*t)
    pulled = K.cap_phases(X, z, ph, omega.modulus, omega.degree)
    return sum(pulled) % omega.modulus


# enumeration of flat fields with fixed edges

class _Solver:
    """DFS over edge colorings with triangle propagation."""

    def __init__(self, X, G):
        self.X = X
        self.G = G
        self.tris = [[] for _ in range(X.count(1))]
        for t in range(X.count(2)):
            for e in set(X.faces[2][t]):
                self.tris[e].append(t)

    def solve(self, fixed, free_order):
        X, G = self.X, self.G
        colors = [None] * X.count(1)
        for e, g in fixed.items():
            if colors[e] is not None and colors[e] != g:
                return
            colors[e] = g
        trail = []

        def propagate(start):
            queue = list(start)
            while queue:
                e = queue.pop()
                for t in self.tris[e]:
                    d0, d1, d2 = X.faces[2][t]
                    a, b, c = colors[d2], colors[d0], colors[d1]
                    known = (a is not None) + (b is not None) + (c is not None)
                    if known == 3:
                        if G.mul(a, b) != c:
                            return False
                    elif known == 2:
                        if c is None:
                            e2, v = d1, G.mul(a, b)
                        elif b is None:
                            e2, v = d0, G.mul(G.inv[a], c)
                        else:
                            e2, v = d2, G.mul(c, G.inv[b])
                        colors[e2] = v
                        trail.append(e2)
                        queue.append(e2)
            return True

        if not propagate(list(fixed)):
            return

        def rec(i):
            while i < len(free_order) and colors[free_order[i]] is not None:
                i += 1
            if i == len(free_order):
                if all(c is not None for c in colors):
                    yield tuple(colors)
                return
            e = free_order[i]
            for g in G.elements():
                mark = len(trail)
                colors[e] = g
                trail.append(e)
                if propagate([e]):
                    yield from rec(i + 1)
                while len(trail) > mark:
                    colors[trail.pop()] = None

        yield from rec(0)


def rooted_forest(X, roots):
    """BFS forest from the given root vertices (treated as already joined).

    Returns (tree edges, new roots for vertices not reached, parent edge per vertex).
    """
    adj = [[] for _ in range(X.n0)]
    for e in range(X.count(1)):
        a, b = X.edge_ends(e)
        if a != b:
            adj[a].append((e, b))
            adj[b].append((e, a))
    seen = [False] * X.n0
    parent = [None] * X.n0
    tree = []
    extra = []
    queue = []
    for r in sorted(set(roots)):
        seen[r] = True
        queue.append(r)

    def bfs(q):
        for v in q:
            for e, w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = e
                    tree.append(e)
                    q.append(w)

    bfs(queue)
    for v in range(X.n0):
        if not seen[v]:
            seen[v] = True
            extra.append(v)
            bfs([v])
    return tree, extra, parent


def gauge_fixed_fields(X, G, fixed=None, roots=()):
    """All flat fields with tree edges = e and the ``fixed`` edge colors."""
    fixed = dict(fixed or {})
    tree, extra, _ = rooted_forest(X, roots)
    for e in tree:
        fixed[e] = G.e
    free = [e for e in range(X.count(1)) if e not in fixed]
    return list(_Solver(X, G).solve(fixed, free)), tree, extra


# field groupoid on a closed complex

@dataclass
class OrbitData:
    rep: tuple
    stabilizer: list  # gauge transformations (tuples over vertices) fixing rep
    size: int
    theta: dict = field(default_factory=dict)
    holonomy_free: bool = True


class FieldGroupoid:
    """Gauge-fixed fields on X and their orbits under the residual conjugation."""

    def __init__(self, X, G):
        self.X = X
        self.G = G
        fields, tree, roots = gauge_fixed_fields(X, G)
        self.tree = tree
        comp = X.components()
        self.roots = sorted(set(comp))
        self.comp_of = [self.roots.index(c) for c in comp]
        self.fields = sorted(fields)
        self._index = {}
        self.orbits = []
        for f in self.fields:
            if f in self._index:
                continue
            members = {}
            for c in itertools.product(G.elements(), repeat=len(self.roots)):
                h = tuple(c[self.comp_of[v]] for v in range(X.n0))
                g = gauge_act(X, G, f, h)
                members.setdefault(g, c)
            rep = min(members)
            # recompute conjugators relative to the minimal representative
            conj = {}
            stab = []
            for c in itertools.product(G.elements(), repeat=len(self.roots)):
                h = tuple(c[self.comp_of[v]] for v in range(X.n0))
                g = gauge_act(X, G, rep, h)
                conj.setdefault(g, c)
                if g == rep:
                    stab.append(h)
            i = len(self.orbits)
            for g, c in conj.items():
                self._index[g] = (i, c)
            size = G.order ** X.n0 // len(stab)
            self.orbits.append(OrbitData(rep, stab, size))
        self._paths = self._tree_paths()

    def _tree_paths(self):
        """Order vertices so each non-root vertex follows its tree parent."""
        X = self.X
        parent = [None] * X.n0
        adj = [[] for _ in range(X.n0)]
        for e in self.tree:
            a, b = X.edge_ends(e)
            adj[a].append((e, b))
            adj[b].append((e, a))
        order = []
        seen = [False] * X.n0
        for r in self.roots:
            seen[r] = True
            q = [r]
            for v in q:
                order.append(v)
                for e, w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        parent[w] = (e, v)
                        q.append(w)
        return order, parent

    def locate(self, colors):
        """(orbit index, h) with colors = rep . h."""
        X, G = self.X, self.G
        order, parent = self._paths
        k = [G.e] * X.n0
        for v in order:
            if parent[v] is None:
                continue
            e, u = parent[v]
            s, t = X.edge_ends(e)
            if s == u:
                k[v] = G.mul(G.inv[colors[e]], k[u])
            else:
                k[v] = G.mul(colors[e], k[u])
        fixed = gauge_act(X, G, colors, tuple(k))
        i, c = self._index[fixed]
        h = tuple(G.mul(c[self.comp_of[v]], G.inv[k[v]]) for v in range(X.n0))
        if gauge_act(X, G, self.orbits[i].rep, h) != tuple(colors):
            raise DWError("gauge path does not reach the field")
        return i, h


def enumerate_fields(X, G):
    return FieldGroupoid(X, G)


# cylinders and holonomy

@lru_cache(maxsize=None)
def _prism_of(Y):
    return prism(Y)


@lru_cache(maxsize=None)
def _top_of(X):
    return _Top(X, check_relative_cycle(X) if X.boundaries else fundamental_cycle(X))


def cylinder_field(Y, G, f, h, P=None):
    """Field on prism(Y) with bottom f, top f.h, vertical edges h(v)."""
    P = P or _prism_of(Y)
    return GaugeField(P, G, _cylinder_colors(Y, P, G, f, h))


def _cylinder_colors(Y, P, G, f, h):
    idx = P.prism_index[1]
    top = gauge_act(Y, G, f, h)
    colors = [None] * P.count(1)
    for e in range(Y.count(1)):
        colors[idx[("B", 1, e)]] = f[e]
        colors[idx[("T", 1, e)]] = top[e]
        _, t = Y.edge_ends(e)
        colors[idx[("Q", 1, e, 0)]] = G.mul(f[e], h[t])
    for v in range(Y.n0):
        colors[idx[("P", 0, v, 0)]] = h[v]
    return tuple(colors)


def holonomy_phase(Y, G, omega, f, h):
    """theta(f, h): the weight of the cylinder from f to f.h."""
    P = _prism_of(Y)
    return _top_of(P).weight(omega, _cylinder_colors(Y, P, G, f, h))


# state spaces

@dataclass
class StateSpace:
    Y: object
    G: object
    omega: object
    groupoid: FieldGroupoid
    basis: list  # indices of holonomy-free orbits

    @property
    def dim(self):
        return len(self.basis)

    @property
    def orbits(self):
        return self.groupoid.orbits

    def basis_reps(self):
        return [self.orbits[i].rep for i in self.basis]

    def report(self):
        return {
            "dim": self.dim,
            "orbits": len(self.orbits),
            "basis": [
                {"rep": list(self.orbits[i].rep), "stabilizer": len(self.orbits[i].stabilizer)}
                for i in self.basis
            ],
        }


def _compose_h(G, h1, h2):
    return tuple(G.mul(a, b) for a, b in zip(h1, h2))


def state_space(Y, G, omega, check_character=True):
    if omega.degree != Y.dim + 1:
        raise DWError(f"state space of a {Y.dim}-manifold needs a degree {Y.dim + 1} cocycle")
    fundamental_cycle(Y)
    fg = FieldGroupoid(Y, G)
    basis = []
    for i, orb in enumerate(fg.orbits):
        for h in orb.stabilizer:
            orb.theta[h] = holonomy_phase(Y, G, omega, orb.rep, h)
        if check_character:
            for h1 in orb.stabilizer:
                for h2 in orb.stabilizer:
                    lhs = orb.theta[_compose_h(G, h1, h2)]
                    if (lhs - orb.theta[h1] - orb.theta[h2]) % omega.modulus:
                        raise DWError("stabilizer holonomy is not a character")
        orb.holonomy_free = all(v == 0 for v in orb.theta.values())
        if orb.holonomy_free:
            basis.append(i)
    return StateSpace(Y, G, omega, fg, basis)


# lines of fields

@dataclass
class LineOfField:
    Y: object
    field: tuple
    label: int
    canonical_phase: int
    checked_cycles: int


def line_of_field(Y, G, omega, f, samples=100, seed=0, ambient=None):
    """The line of f with a computational no-holonomy certificate.

    Fundamental cycles of Y live in the ambient prism(prism(Y)), where
    (n+1)-chains exist; for every generated (n+1)-cycle x the phase
    <f^* omega, x> must vanish.
    """
    n = Y.dim
    if omega.degree != n + 1:
        raise DWError("line of a field needs a degree n+1 cocycle")
    rng = random.Random(seed)
    if ambient is None:
        # the outer prism needs no orientation, and the inner one has boundary
        inner = copy.copy(prism(Y))
        inner.orientation = None
        ambient = prism(inner)
    A = ambient
    inner = A.prism_base
    # iterated trivial cylinder, then a random gauge transformation
    c1 = _cylinder_colors(Y, inner, G, f, tuple([G.e] * Y.n0))
    c2 = _cylinder_colors(inner, A, G, c1, tuple([G.e] * inner.n0))
    h = tuple(rng.randrange(G.order) for _ in range(A.n0))
    colors = gauge_act(A, G, c2, h)
    if flatness_witness(A, G, colors) is not None:
        raise DWError("ambient field is not flat")
    ph = [omega(*(colors[e] for e in A.spine(n + 1, s))) for s in range(A.count(n + 1))]
    m = omega.modulus
    cycles = [boundary(A, Chain(n + 2, {t: 1})) for t in range(A.count(n + 2))]
    for _ in range(samples):
        x = Chain(n + 1, {})
        for _ in range(3):
            x = x + cycles[rng.randrange(len(cycles))].scale(rng.randint(-3, 3))
        cycles.append(x)
    for x in cycles:
        if boundary(A, x).coeffs:
            raise DWError("generated chain is not a cycle")
        if sum(c * ph[s] for s, c in x.coeffs.items()) % m:
            raise HolonomyError(f"nonzero holonomy on cycle {sorted(x.coeffs.items())[:4]}")
    return LineOfField(Y, tuple(f), 0, 0, len(cycles))


# cobordism maps

@dataclass
class CobordismMatrix:
    rows: list  # basis reps of the outgoing state space (or [()] if none)
    cols: list
    entries: list  # rows x cols of Cyclotomic

    def render(self):
        return [[v.render() for v in row] for row in self.entries]

    def __eq__(self, other):
        return self.entries == other.entries

    def shape(self):
        return len(self.entries), len(self.entries[0]) if self.entries else 0


def _boundary(X, role):
    bs = X.boundary(role)
    if len(bs) > 1:
        raise DWError(f"more than one {role} boundary component is not supported")
    return bs[0] if bs else None


def cobordism_map(X, G, omega, space_in=None, space_out=None, threads=1):
    """Matrix of Z(X) in the bases of holonomy-free orbits."""
    if omega.degree != X.dim:
        raise DWError(f"a {X.dim}-dimensional cobordism needs a degree {X.dim} cocycle")
    z = check_relative_cycle(X)
    top = _Top(X, z)
    b_in, b_out = _boundary(X, "in"), _boundary(X, "out")
    if b_in is not None:
        space_in = space_in or state_space(b_in.model, G, omega)
        if not same_complex(space_in.Y, b_in.model):
            raise BoundaryMismatch("incoming state space is for a different complex")
    if b_out is not None:
        space_out = space_out or state_space(b_out.model, G, omega)
        if not same_complex(space_out.Y, b_out.model):
            raise BoundaryMismatch("outgoing state space is for a different complex")
    out_reps = space_out.basis_reps() if b_out else [()]
    in_idx = space_in.basis if b_in else [0]
    col_of = {i: c for c, i in enumerate(in_idx)}
    roots = []
    if b_out is not None:
        roots = list(b_out.inclusion.maps[0])
    m = omega.modulus
    Yin = b_in.model if b_in else None

    def row(rep):
        fixed = {}
        if b_out is not None:
            for e, g in zip(b_out.inclusion.maps[1], rep):
                if fixed.get(e, g) != g:
                    return None
                fixed[e] = g
        fs, tree, extra = gauge_fixed_fields(X, G, fixed, roots)
        counts = [[0] * m for _ in in_idx]
        for F in fs:
            w = top.weight(omega, F)
            if b_in is not None:
                fin = tuple(F[e] for e in b_in.inclusion.maps[1])
                i, h = space_in.groupoid.locate(fin)
                if i not in col_of:
                    continue
                w += holonomy_phase(Yin, G, omega, space_in.orbits[i].rep, h)
                counts[col_of[i]][w % m] += 1
            else:
                counts[0][w % m] += 1
        scale = Fraction(1, G.order ** len(extra))
        return [Cyclotomic.from_counts(m, c, scale) for c in counts]

    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            entries = list(ex.map(row, out_reps))
    else:
        entries = [row(r) for r in out_reps]
    cols = [space_in.orbits[i].rep for i in in_idx] if b_in else [()]
    return CobordismMatrix(out_reps, cols, entries)


def partition_function(X, G, omega):
    if X.boundaries:
        raise DWError("partition function needs a closed complex")
    return cobordism_map(X, G, omega).entries[0][0]


def matmul(A, B):
    """Product of cobordism matrices (A after B)."""
    n, k = len(A.entries), len(B.entries)
    cols = len(B.entries[0]) if B.entries else 0
    out = []
    for i in range(n):
        row = []
        for j in range(cols):
            acc = Cyclotomic.rational(0)
            for t in range(k):
                acc = acc + A.entries[i][t] * B.entries[t][j]
            row.append(acc)
        out.append(row)
    return CobordismMatrix(A.rows, B.cols, out)


def identity_matrix(space):
    n = space.dim
    return [[Cyclotomic.rational(1 if i == j else 0) for j in range(n)] for i in range(n)]
