"""Finite groups given by multiplication tables. Elements are 0..n-1."""

from __future__ import annotations

import itertools


class GroupError(ValueError):
    pass


class FiniteGroup:
    def __init__(self, table, name="G", labels=None):
        self.table = tuple(tuple(row) for row in table)
        self.order = n = len(self.table)
        self.name = name
        self.labels = list(labels) if labels else [str(i) for i in range(n)]
        if n == 0 or any(len(r) != n for r in self.table):
            raise GroupError("table must be square and nonempty")
        for row in self.table:
            if sorted(row) != list(range(n)):
                raise GroupError("table rows must be permutations")
        ids = [e for e in range(n) if all(self.table[e][x] == x == self.table[x][e] for x in range(n))]
        if len(ids) != 1:
            raise GroupError("no unique identity")
        self.e = ids[0]
        self.inv = tuple(next(y for y in range(n) if self.table[x][y] == self.e) for x in range(n))
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise GroupError(f"associativity fails at {(a, b, c)}")

    def mul(self, a, b):
        return self.table[a][b]

    def prod(self, *xs):
        out = self.e
        for x in xs:
            out = self.table[out][x]
        return out

    def conj(self, h, g):
        """h^-1 g h"""
        return self.table[self.table[self.inv[h]][g]][h]

    def elements(self):
        return range(self.order)

    def is_abelian(self):
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(self.order))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def from_permutations(perms, name):
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(q[p[i]] for i in range(len(p)))] for q in perms] for p in perms]
    # (p*q)(i) = q(p(i)): left-to-right composition keeps the table a group law
    return FiniteGroup(table, name)


def cyclic(n):
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], f"Z{n}")


def product(G, H):
    pairs = [(g, h) for g in G.elements() for h in H.elements()]
    idx = {p: i for i, p in enumerate(pairs)}
    table = [[idx[(G.mul(a, c), H.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    return FiniteGroup(table, f"{G.name}x{H.name}")


def symmetric(k):
    perms = sorted(itertools.permutations(range(k)))
    return from_permutations(perms, f"S{k}")


def dihedral(n):
    """Symmetries of the n-gon, order 2n."""
    rots = [tuple((i + r) % n for i in range(n)) for r in range(n)]
    refl = [tuple((r - i) % n for i in range(n)) for r in range(n)]
    return from_permutations(rots + refl, f"D{n}")


def quaternion():
    # elements (s, u) = s*u with s in {1,-1}, u in {1,i,j,k}
    unit = {("1", "1"): (1, "1")}
    mults = {
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    }
    names = ["1", "i", "j", "k"]
    for u in names:
        unit[("1", u)] = (1, u)
        unit[(u, "1")] = (1, u)
    unit.update(mults)
    elems = [(s, u) for s in (1, -1) for u in names]
    idx = {x: i for i, x in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = unit[(u1, u2)]
            row.append(idx[(s1 * s2 * s, u)])
        table.append(row)
    return FiniteGroup(table, "Q8")


def commuting_tuples(G, k):
    out = []
    for t in itertools.product(G.elements(), repeat=k):
        if all(G.mul(a, b) == G.mul(b, a) for a, b in itertools.combinations(t, 2)):
            out.append(t)
    return out
