"""Exact integer linear algebra: Smith normal form with transforms, integer
and modular solving, and subquotients of lattices.

Matrices are lists of rows of Python ints. Nothing here is fast; everything
is exact.
"""

from __future__ import annotations

from dataclasses import dataclass


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x) if a) for row in A]


def matmul(A, B):
    if not A:
        return []
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col) if a) for col in Bt] for row in A]


@dataclass
class SmithForm:
    """``U @ A @ V == D`` with U, V unimodular and ``diag`` the nonzero
    diagonal of D in divisibility order. ``Uinv`` is U's inverse."""

    rows: int
    cols: int
    diag: list
    U: list
    Uinv: list
    V: list

    @property
    def rank(self):
        return len(self.diag)


def smith(A, rows=None, cols=None):
    m = len(A) if rows is None else rows
    n = (len(A[0]) if A else 0) if cols is None else cols
    D = [list(r) for r in A]
    U = identity(m)
    Uinv = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]
            for row in Uinv:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row_dst += q * row_src
        if q:
            rs, rd = D[src], D[dst]
            for k in range(n):
                if rs[k]:
                    rd[k] += q * rs[k]
            us, ud = U[src], U[dst]
            for k in range(m):
                if us[k]:
                    ud[k] += q * us[k]
            for row in Uinv:
                if row[dst]:
                    row[src] -= q * row[dst]

    def add_col(src, dst, q):
        if q:
            for row in D:
                if row[src]:
                    row[dst] += q * row[src]
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for row in Uinv:
            row[i] = -row[i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    if D[t][j]:
                        done = False
            if done:
                # enforce divisibility of the remaining block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if D[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                add_row(bad, t, 1)
                continue
            # move the smallest entry of row/col t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, m):
                if D[i][t] and abs(D[i][t]) < best[0]:
                    best = (abs(D[i][t]), i, t)
            for j in range(t + 1, n):
                if D[t][j] and abs(D[t][j]) < best[0]:
                    best = (abs(D[t][j]), t, j)
            swap_rows(t, best[1])
            swap_cols(t, best[2])
        if D[t][t] < 0:
            negate_row(t)
        t += 1
    diag = [D[i][i] for i in range(t)]
    return SmithForm(m, n, diag, U, Uinv, V)


def invariant_factors(A, rows=None, cols=None):
    return [d for d in smith(A, rows, cols).diag if d != 1]


def solve_int(A, b, cols=None, sf=None):
    """Return an integer x with ``A x == b`` or None."""
    m = len(A)
    n = (len(A[0]) if A else 0) if cols is None else cols
    if sf is None:
        sf = smith(A, m, n)
    c = matvec(sf.U, b) if m else []
    y = [0] * n
    for i, d in enumerate(sf.diag):
        q, r = divmod(c[i], d)
        if r:
            return None
        y[i] = q
    if any(c[sf.rank:]):
        return None
    return matvec(sf.V, y) if n else []


def solve_mod(A, b, modulus, cols=None):
    """Integer x with ``A x == b (mod modulus)``; modulus 0 means over Z."""
    n = (len(A[0]) if A else 0) if cols is None else cols
    if modulus == 0:
        return solve_int(A, b, cols=n)
    m = len(A)
    ext = [list(A[i]) + [modulus if k == i else 0 for k in range(m)] for i in range(m)]
    x = solve_int(ext, b, cols=n + m)
    if x is None:
        return None
    return [v % modulus for v in x[:n]]


def kernel_int(A, cols=None):
    """Basis (as list of vectors) of the integer kernel of A."""
    n = (len(A[0]) if A else 0) if cols is None else cols
    if not A:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    sf = smith(A, len(A), n)
    return [[sf.V[i][j] for i in range(n)] for j in range(sf.rank, n)]


def lattice_basis(gens, dim):
    """A basis of the sublattice of Z^dim spanned by ``gens``."""
    if not gens:
        return []
    G = transpose(gens)  # dim x len(gens)
    sf = smith(G, dim, len(gens))
    return [[sf.Uinv[i][j] * d for i in range(dim)] for j, d in enumerate(sf.diag)]


class Subquotient:
    """The finitely generated abelian group Z/B for lattices B <= Z <= Z^N.

    ``factors`` lists invariant factors (0 for a free summand); ``gens`` are
    representatives in Z^N of the corresponding generators.
    """

    def __init__(self, z_basis, b_gens, dim):
        self.dim = dim
        self.z_basis = z_basis
        r = len(z_basis)
        self._zmat = transpose(z_basis, dim) if r else [[] for _ in range(dim)]
        self._zsf = smith(self._zmat, dim, r) if r else None
        coords = []
        for b in b_gens:
            c = self._zcoords(b)
            if c is None:
                raise ValueError("boundary lattice is not contained in cycle lattice")
            coords.append(c)
        C = transpose(coords, r) if coords else zeros(r, 0)
        sf = smith(C, r, len(coords))
        self._U = sf.U
        factors, keep, gens = [], [], []
        for i in range(r):
            d = sf.diag[i] if i < sf.rank else 0
            if d == 1:
                continue
            factors.append(d)
            keep.append(i)
            col = [sf.Uinv[k][i] for k in range(r)]
            gens.append(matvec(self._zmat, col))
        self.factors = factors
        self._keep = keep
        self.gens = gens

    def _zcoords(self, v):
        if not self.z_basis:
            return [] if not any(v) else None
        return solve_int(self._zmat, list(v), cols=len(self.z_basis), sf=self._zsf)

    @property
    def order(self):
        if any(d == 0 for d in self.factors):
            return 0
        out = 1
        for d in self.factors:
            out *= d
        return out

    def contains(self, v):
        return self._zcoords(v) is not None

    def coords(self, v):
        """Class of ``v`` (which must lie in Z) in the invariant-factor basis."""
        c = self._zcoords(v)
        if c is None:
            raise ValueError("vector is not a cycle")
        u = matvec(self._U, c)
        out = []
        for d, i in zip(self.factors, self._keep):
            out.append(u[i] % d if d else u[i])
        return tuple(out)

    def is_zero(self, v):
        return not any(self.coords(v))


def subquotient_at(d_out, d_in, n, modulus):
    """Cohomology-style subquotient at a node with ``n`` basis elements.

    ``d_out``: matrix (rows = next basis) of the outgoing differential;
    ``d_in``: matrix (rows = n) of the incoming one. Coefficients are Z/modulus
    (modulus 0 means Z). Vectors are integer lifts.
    """
    rows_out = len(d_out)
    if modulus == 0:
        z = kernel_int(d_out, cols=n) if rows_out else [[int(i == j) for j in range(n)] for i in range(n)]
    else:
        if rows_out:
            ext = [list(d_out[i]) + [modulus if k == i else 0 for k in range(rows_out)] for i in range(rows_out)]
            ker = kernel_int(ext, cols=n + rows_out)
            z = lattice_basis([v[:n] for v in ker], n)
        else:
            z = [[int(i == j) for j in range(n)] for i in range(n)]
    b = [list(col) for col in transpose(d_in, 0)] if d_in and d_in[0] else []
    if modulus:
        b += [[modulus if k == i else 0 for k in range(n)] for i in range(n)]
    return Subquotient(z, b, n)
