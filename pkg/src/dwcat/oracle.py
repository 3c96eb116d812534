"""Brute-force state sums used as an independent check of the dw module.

Nothing here uses gauge fixing, orbit tables or the cap module: fields are
enumerated by plain DFS over all edge colorings, weights are read off vertex
orderings, and gauge paths are found by trying every gauge transformation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cyclotomic import Cyclotomic


def _edge_of(X, k, s, i, j):
    """Edge from vertex i to vertex j (i < j) of the k-simplex s."""
    cur, verts = s, list(range(k + 1))
    for r in reversed(range(k + 1)):
        if r not in (i, j):
            cur = X.faces[len(verts) - 1][cur][verts.index(r)]
            verts.remove(r)
    return cur


def _spines(X, k):
    return [tuple(_edge_of(X, k, s, i, i + 1) for i in range(k)) for s in range(X.count(k))]


def _triangles(X):
    return [(_edge_of(X, 2, t, 0, 1), _edge_of(X, 2, t, 1, 2), _edge_of(X, 2, t, 0, 2)) for t in range(X.count(2))]


class _Enumerator:
    """DFS over edge colorings for a fixed set of pinned edges."""

    def __init__(self, X, G, pinned):
        self.X, self.G = X, G
        self.pinned = set(pinned)
        tris = _triangles(X)
        self.tris = tris
        # greedy order: prefer edges closing many triangles with placed edges
        placed = set(self.pinned)
        order = []
        rest = [e for e in range(X.count(1)) if e not in placed]
        while rest:
            best = max(rest, key=lambda e: (sum(1 for t in tris if e in t and all(x in placed or x == e for x in t)), -e))
            order.append(best)
            placed.add(best)
            rest.remove(best)
        self.order = order
        done = set()
        seen = set(self.pinned)
        self.checks = {}
        for e in order:
            seen.add(e)
            self.checks[e] = [t for t in tris if t not in done and all(x in seen for x in t)]
            done.update(self.checks[e])
        self.initial = [t for t in tris if all(x in self.pinned for x in t)]

    def run(self, fixed):
        G, order, checks = self.G, self.order, self.checks
        colors = [None] * self.X.count(1)
        for e, g in fixed.items():
            colors[e] = g
        for a, b, c in self.initial:
            if G.mul(colors[a], colors[b]) != colors[c]:
                return

        def rec(i):
            if i == len(order):
                yield tuple(colors)
                return
            e = order[i]
            for g in G.elements():
                colors[e] = g
                if all(G.mul(colors[a], colors[b]) == colors[c] for a, b, c in checks[e]):
                    yield from rec(i + 1)
            colors[e] = None

        yield from rec(0)


def colorings(X, G, fixed=None):
    """Every flat coloring extending ``fixed``, by DFS over edges."""
    fixed = dict(fixed or {})
    return _Enumerator(X, G, fixed).run(fixed)


def _weight(spines, orient, omega, colors):
    total = 0
    for sp, c in zip(spines, orient):
        if c:
            total += c * omega(*(colors[e] for e in sp))
    return total % omega.modulus


def _act(X, G, colors, h):
    out = []
    for e, g in enumerate(colors):
        verts = X.vertices(1, e)
        out.append(G.mul(G.mul(G.inv[h[verts[0]]], g), h[verts[1]]))
    return tuple(out)


def _fixes(X, G, colors, h):
    for e, g in enumerate(colors):
        verts = X.vertices(1, e)
        if G.mul(g, h[verts[1]]) != G.mul(h[verts[0]], g):
            return False
    return True


class _Cylinder:
    """Cylinder phases on a prism found by completing bottom and vertical edges."""

    def __init__(self, P, G, omega):
        self.P, self.G, self.omega = P, G, omega
        self.bottom = next(b for b in P.boundaries if b.role == "in").inclusion
        self.top = next(b for b in P.boundaries if b.role == "out").inclusion
        self.Y = self.bottom.src
        self.vertical = [P.prism_index[1][("P", 0, v, 0)] for v in range(self.Y.n0)]
        self.spines = _spines(P, P.dim)
        self.orient = list(P.orientation)
        self.enum = _Enumerator(P, G, list(self.bottom.maps[1]) + self.vertical)

    def phase(self, f, h):
        fixed = {self.bottom.maps[1][e]: g for e, g in enumerate(f)}
        for v, e in enumerate(self.vertical):
            fixed[e] = h[v]
        (colors,) = list(self.enum.run(fixed))
        top = tuple(colors[e] for e in self.top.maps[1])
        if top != _act(self.Y, self.G, f, h):
            raise AssertionError("cylinder top differs from the gauge transformed field")
        return _weight(self.spines, self.orient, self.omega, colors)


def _psi_tables(Y, G, omega, reps):
    """For each anchor field, the invariant section as a dict field -> phase."""
    from .simplicial import prism
    cyl = _Cylinder(prism(Y), G, omega)
    tables = []
    for rep in reps:
        tab = {}
        for h in itertools.product(G.elements(), repeat=Y.n0):
            g = _act(Y, G, rep, h)
            ph = cyl.phase(rep, h)
            if tab.setdefault(g, ph) != ph:
                raise AssertionError("anchor orbit carries holonomy")
        tables.append(tab)
    return tables


def state_sum_oracle(X, G, omega, reps_in=None, reps_out=None):
    """Matrix entries [out][in] as Cyclotomic values.

    The anchors ``reps_in``/``reps_out`` fix the basis vectors; the sum
    itself runs over all colorings of X.
    """
    b_in = [b for b in X.boundaries if b.role == "in"]
    b_out = [b for b in X.boundaries if b.role == "out"]
    m = omega.modulus
    spines = _spines(X, X.dim)
    orient = list(X.orientation)
    n_out_vertices = len(set(b_out[0].inclusion.maps[0])) if b_out else 0
    scale = Fraction(1, G.order ** (X.n0 - n_out_vertices))
    tables = _psi_tables(b_in[0].model, G, omega, reps_in) if b_in else [None]
    rows = []
    for rep in (reps_out if b_out else [None]):
        fixed = {}
        if b_out:
            for e, g in zip(b_out[0].inclusion.maps[1], rep):
                fixed[e] = g
        counts = [[0] * m for _ in tables]
        for F in colorings(X, G, fixed):
            w = _weight(spines, orient, omega, F)
            if not b_in:
                counts[0][w] += 1
                continue
            fin = tuple(F[e] for e in b_in[0].inclusion.maps[1])
            for c, tab in enumerate(tables):
                if fin in tab:
                    counts[c][(w + tab[fin]) % m] += 1
        rows.append([Cyclotomic.from_counts(m, c, scale) for c in counts])
    return rows


def closed_oracle(X, G, omega):
    return state_sum_oracle(X, G, omega)[0][0]


def dimension_oracle(Y, G, omega):
    """(1/|G|^V) sum over pairs (f, h) with f.h = f of the cylinder phase."""
    from .simplicial import prism
    cyl = _Cylinder(prism(Y), G, omega)
    counts = [0] * omega.modulus
    for f in colorings(Y, G):
        for h in itertools.product(G.elements(), repeat=Y.n0):
            if _fixes(Y, G, f, h):
                counts[cyl.phase(f, h)] += 1
    return Cyclotomic.from_counts(omega.modulus, counts, Fraction(1, G.order ** Y.n0))


def commuting_orbits(G, k=2):
    """Number of conjugation orbits on commuting k-tuples, by Burnside."""
    els = G.elements()
    tuples = [t for t in itertools.product(els, repeat=k)
              if all(G.mul(a, b) == G.mul(b, a) for a in t for b in t)]
    fixed = sum(1 for g in els for t in tuples if all(G.mul(G.mul(G.inv[g], a), g) == a for a in t))
    return Fraction(fixed, G.order)


def hom_count(G, generators, relations):
    """|Hom(pi, G)| for a presentation with relations as lists of (gen, +-1)."""
    count = 0
    for vals in itertools.product(G.elements(), repeat=generators):
        ok = True
        for rel in relations:
            acc = G.e
            for gi, e in rel:
                acc = G.mul(acc, vals[gi] if e > 0 else G.inv[vals[gi]])
            if acc != G.e:
                ok = False
                break
        if ok:
            count += 1
    return count
