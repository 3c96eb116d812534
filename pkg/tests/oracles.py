"""Independent reference computations (sympy homology, vertex-list cap)."""

from math import gcd

from sympy import Matrix, ZZ, factorint
from sympy.matrices.normalforms import invariant_factors


def integral_homology(X):
    """[(rank, torsion list)] per degree from sympy invariant factors."""
    out = []
    for k in range(X.dim + 1):
        nk = X.count(k)
        rank_in = 0
        if k > 0 and nk and X.count(k - 1):
            rank_in = Matrix(X.boundary_matrix(k)).rank()
        invs = []
        if k + 1 <= X.dim and X.count(k + 1) and nk:
            invs = [abs(int(x)) for x in invariant_factors(Matrix(X.boundary_matrix(k + 1)), domain=ZZ) if x != 0]
        out.append((nk - rank_in - len(invs), [d for d in invs if d != 1]))
    return out


def cohomology_mod(hom, k, m):
    """Cyclic orders of H^k(X; Z/m) by universal coefficients."""
    res = []
    if 0 <= k < len(hom):
        r, t = hom[k]
        res += [m] * r + [gcd(d, m) for d in t]
    if 0 <= k - 1 < len(hom):
        res += [gcd(d, m) for d in hom[k - 1][1]]
    return primary(x for x in res if x != 1)


def homology_mod(hom, k, m):
    res = []
    if 0 <= k < len(hom):
        r, t = hom[k]
        res += [m] * r + [gcd(d, m) for d in t]
    if 0 <= k - 1 < len(hom):
        res += [gcd(d, m) for d in hom[k - 1][1]]
    return primary(x for x in res if x != 1)


def primary(orders):
    out = []
    for d in orders:
        if d == 0:
            out.append(0)
            continue
        for p, e in factorint(d).items():
            out.append(p ** e)
    return sorted(out)


def group_primary(G):
    return primary(G.factors)


def _vertex_lookup(X):
    """Simplices keyed by vertex tuple; None if some tuple repeats."""
    out = []
    for k in range(X.dim + 1):
        d = {}
        for s in range(X.count(k)):
            t = tuple(X.vertices(k, s))
            if t in d:
                return None
            d[t] = s
        out.append(d)
    return out


def classical_cap(X, xi, values, p, add, zero):
    """Front/back cap read off vertex lists (needs distinct vertex tuples)."""
    look = _vertex_lookup(X)
    q = xi.degree
    out = [zero] * X.count(q - p)
    for s, c in xi.coeffs.items():
        v = tuple(X.vertices(q, s))
        front = look[p][v[: p + 1]]
        back = look[q - p][v[p:]]
        for _ in range(abs(c)):
            val = values[front] if c > 0 else -values[front]
            out[back] = add(out[back], val)
    return out
