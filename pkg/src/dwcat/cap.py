"""Cap products of integer chains with Picard-valued cochains.

Convention: sigma cap a = a(front p-face) * (back (q-p)-face), with the
front face obtained by deleting the last vertex repeatedly and the back face
by deleting the first one. The Leibniz rule then reads

    d(sigma cap a) = (-1)^p (d sigma cap a - sigma cap delta a).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cohomology as H
from . import intlinalg as il
from .picard import Discrete, FramedLines
from .simplicial import Chain, boundary


class CapError(ValueError):
    pass


def front_back(X, q, s, p):
    """(front p-face, back (q-p)-face) of the q-simplex s; None if degenerate."""
    front = s
    for k in range(q, p, -1):
        if front is None:
            break
        front = X.faces[k][front][k]
    back = s
    for k in range(q, q - p, -1):
        if back is None:
            break
        back = X.faces[k][back][0]
    return front, back


def cap_terms(X, xi, p):
    """Sparse list of (back, front, coeff) for the chain xi against p-cochains."""
    q = xi.degree
    if not 0 <= p <= q:
        raise CapError(f"cannot cap a degree {q} chain with a degree {p} cochain")
    out = []
    for s, c in sorted(xi.coeffs.items()):
        f, b = front_back(X, q, s, p)
        if f is not None and b is not None:
            out.append((b, f, c))
    return out


def cap_matrix(X, xi, p, rows=None, cols=None):
    """Integer matrix of a -> xi cap a in given bases (simplex index lists)."""
    q = xi.degree
    rows = rows if rows is not None else list(range(X.count(q - p)))
    cols = cols if cols is not None else list(range(X.count(p)))
    rpos = {s: i for i, s in enumerate(rows)}
    cpos = {s: i for i, s in enumerate(cols)}
    M = il.zeros(len(rows), len(cols))
    for b, f, c in cap_terms(X, xi, p):
        if b in rpos and f in cpos:
            M[rpos[b]][cpos[f]] += c
    return M


def cap_values(G, terms, values, size, zero, is_phase=False, modulus=0):
    """Apply cap terms to a value vector indexed by simplex."""
    if is_phase:
        out = [0] * size
        for b, f, c in terms:
            out[b] += c * values[f]
        return [v % modulus for v in out]
    out = [zero] * size
    for b, f, c in terms:
        v = values[f]
        out[b] = G.obj_add(out[b], _scale(G, c, v))
    return out


def _scale(G, c, v):
    if isinstance(G, FramedLines):
        return c * v
    return G.A.scale(c, v)


@dataclass
class CapChain:
    """The homomorphism a -> xi cap a from p-cochains to (q-p)-chains."""

    X: object
    xi: Chain
    p: int

    def __post_init__(self):
        self.terms = cap_terms(self.X, self.xi, self.p)

    @property
    def degree(self):
        return self.xi.degree - self.p

    def on_objects(self, G, a_full):
        return cap_values(G, self.terms, a_full, self.X.count(self.degree), G.zero())

    def on_phases(self, ph_full, m):
        return cap_values(None, self.terms, ph_full, self.X.count(self.degree), 0, True, m)

    def matrix(self):
        return cap_matrix(self.X, self.xi, self.p)


def cap_chain(X, xi, p):
    return CapChain(X, xi, p)


def _full(C, k, vec, zero):
    """Values of a complex vector re-indexed by all k-simplices of X."""
    out = [zero] * C.X.count(k)
    for i, s in enumerate(C.keep.get(k, ())):
        out[s] = vec[i]
    return out


def _xi_chain(xi):
    if isinstance(xi, Chain):
        return xi
    # an object of H_q(X; Z[0]) on a chain complex
    C = xi.complex
    return Chain(xi.n, {C.keep[xi.n][i]: v[0] for i, v in enumerate(xi.a.values) if v[0]})


def cap_objects(X, xi, a_full, G, p):
    """Object chain xi cap a (indexed by all (q-p)-simplices)."""
    q = xi.degree
    return cap_values(G, cap_terms(X, xi, p), a_full, X.count(q - p), G.zero())


def cap_phases(X, xi, ph_full, m, p):
    q = xi.degree
    return cap_values(None, cap_terms(X, xi, p), ph_full, X.count(q - p), 0, True, m)


def cap(xi, x, target=None):
    """[xi] cap (a, phi): an object of H_{q-p}(X; A).

    The object part is xi cap a; the witness d(xi cap a) -> 0 has phases
    (-1)^(p+1) xi cap phi.
    """
    C = x.complex
    X = C.X
    xi = _xi_chain(xi)
    if boundary(X, xi).coeffs:
        raise CapError("cap needs a cycle")
    if C.step != 1 or len(C.keep.get(0, ())) != X.count(0) or any(len(C.keep[k]) != X.count(k) for k in C.keep):
        raise CapError("cap needs an absolute cocycle on X")
    p, q = x.n, xi.degree
    G = C.G
    T = target or H.chain_complex(X, G)
    a_full = list(x.a.values)
    A = cap_objects(X, xi, a_full, G, p)
    sign = -1 if p % 2 == 0 else 1
    if q - p - 1 >= 0:
        psi = [sign * v for v in cap_phases(X, xi, list(x.phi.phases), C.modulus, p + 1)] if p + 1 <= q else []
    else:
        psi = []
    return H.make_cocycle(T, q - p, A, psi)


@dataclass
class RelativeCapResult:
    obj: object  # RelativeHomologyObject
    relative: object  # Cocycle2 on the relative chain complex


def relative_cap(pair, xi, x):
    """xi a relative cycle of (X, Y); x a cocycle on X. Returns an object of H_{q-p}(X, Y)."""
    C = x.complex
    X = C.X
    xi = _xi_chain(xi)
    p, q = x.n, xi.degree
    inY = pair.sub.get(q - 1, set())
    if any(s not in inY for s in boundary(X, xi).coeffs):
        raise CapError("relative cap needs a relative cycle")
    G = C.G
    sgn = -1 if p % 2 else 1
    lift = cap_objects(X, xi, list(x.a.values), G, p)
    dxi = boundary(X, xi)
    yb_full = cap_objects(X, dxi, list(x.a.values), G, p) if q - 1 >= p else [G.zero()] * X.count(q - p - 1)
    yb_full = [_scale(G, sgn, v) for v in yb_full]
    CY = pair.CY
    yb = [yb_full[s] for s in CY.keep.get(q - p - 1, ())]
    if q - p - 1 >= 0 and p + 1 <= q:
        w = [-sgn * v for v in cap_phases(X, xi, list(x.phi.phases), C.modulus, p + 1)]
    else:
        w = [0] * X.count(q - p - 1)
    obj = pair.relative_object(q - p, lift, yb, w)
    return RelativeCapResult(obj, pair.to_relative(obj))


@dataclass
class CapDelResult:
    lhs: object
    rhs: object
    sign: int
    witness: object


def cap_del_check(pair, xi, x):
    """Compare d(xi cap x) with (d xi) cap (i^* x) on Y.

    With the classical sign convention the two agree up to (-1)^p; the
    returned witness is a morphism lhs -> (-1)^p rhs in H_{q-p-1}(Y; A).
    """
    p, q = x.n, _xi_chain(xi).degree
    if q - p < 1:
        raise CapError("cap-del needs q - p >= 1")
    X = x.complex.X
    rel = relative_cap(pair, xi, x)
    lhs = pair.connecting(rel.obj)
    dxi = boundary(X, _xi_chain(xi))
    CYc = H.cochain_complex(X, x.complex.G, only=pair.sub)
    ix = H.restrict(x, CYc)
    rhs_full = _cap_on_sub(X, dxi, ix, pair.CY)
    sign = -1 if p % 2 else 1
    target = rhs_full if sign == 1 else H.scale_cocycle(rhs_full, -1)
    try:
        witness = H.make_morphism(lhs, target)
    except H.CohomologyError:
        witness = H.find_morphism(lhs, target)
    if witness is None:
        raise CapError("no witness for the boundary compatibility of cap")
    return CapDelResult(lhs, rhs_full, sign, witness)


def _cap_on_sub(X, xi, x, CY):
    """Cap of a cycle supported on a subcomplex with a cocycle on it."""
    C = x.complex
    p, q = x.n, xi.degree
    G = C.G
    a_full = _full(C, p, list(x.a.values), G.zero())
    A_full = cap_objects(X, xi, a_full, G, p)
    A = [A_full[s] for s in CY.keep.get(q - p, ())]
    sign = -1 if p % 2 == 0 else 1
    if q - p - 1 >= 0:
        ph_full = _full(C, p + 1, list(x.phi.phases), 0)
        psi_full = [sign * v for v in cap_phases(X, xi, ph_full, C.modulus, p + 1)]
        psi = [psi_full[s] for s in CY.keep.get(q - p - 1, ())]
    else:
        psi = []
    return H.make_cocycle(CY, q - p, A, psi)


def independence_morphism(xi, w, x, target=None):
    """Morphism cap(xi + dw, x) -> cap(xi, x) built from w cap x."""
    C = x.complex
    X = C.X
    p = x.n
    xi = _xi_chain(xi)
    xi2 = xi + boundary(X, w)
    T = target or H.chain_complex(X, C.G)
    src = cap(xi2, x, T)
    dst = cap(xi, x, T)
    sgn = -1 if p % 2 else 1
    b = [_scale(C.G, sgn, v) for v in cap_objects(X, w, list(x.a.values), C.G, p)]
    if p + 1 <= w.degree:
        f = cap_phases(X, w, list(x.phi.phases), C.modulus, p + 1)
    else:
        f = [0] * X.count(w.degree - p - 1)
    return H.make_morphism(src, dst, H.Cochain(w.degree - p, tuple(b)), f)


class HomComplex:
    """Families f_k: C^k -> C_{n-k} of integer maps of total degree n, with
    differential (df)_k = d f_k + (-1)^(n+1) f_{k+1} delta (object level)."""

    def __init__(self, X, n):
        self.X = X
        self.n = n

    def shape(self, k, n=None):
        n = self.n if n is None else n
        return self.X.count(n - k), self.X.count(k)

    def degrees(self, n=None):
        n = self.n if n is None else n
        return [k for k in range(self.X.dim + 1) if 0 <= n - k <= self.X.dim]

    def d(self, fam, n=None):
        """Differential of a family of total degree n; result has degree n - 1."""
        n = self.n if n is None else n
        X = self.X
        out = {}
        for k in self.degrees(n - 1):
            rows, cols = self.shape(k, n - 1)
            M = il.zeros(rows, cols)
            if k in fam and n - k >= 1 and rows and cols:
                M = _madd(M, il.matmul(X.boundary_matrix(n - k), fam[k]))
            if k + 1 in fam and X.count(k + 1) and rows and cols:
                delta = il.transpose(X.boundary_matrix(k + 1))
                term = il.matmul(fam[k + 1], delta)
                s = 1 if (n + 1) % 2 == 0 else -1
                M = _madd(M, [[s * v for v in row] for row in term])
            out[k] = M
        return out


def _madd(A, B):
    if not B:
        return A
    return [[a + b for a, b in zip(r, s)] for r, s in zip(A, B)]


def cap_sign(k, q):
    """Twist making xi -> (k -> sign * xi cap -) a chain map into HomComplex."""
    return -1 if (k * (q + 1) + k * (k - 1) // 2) % 2 else 1


def cap_family(X, xi, twist=True):
    """k -> cap_sign(k, q) (xi cap -), a family of total degree q."""
    q = xi.degree
    fam = {}
    for k in range(0, q + 1):
        M = cap_matrix(X, xi, k)
        if twist and cap_sign(k, q) < 0:
            M = [[-v for v in row] for row in M]
        fam[k] = M
    return fam
