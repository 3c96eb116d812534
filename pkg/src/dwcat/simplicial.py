"""Finite Delta-complexes, simplicial maps, chains, nerves and prisms.

A k-simplex (k >= 1) is stored as the tuple of its faces (d_0, ..., d_k),
each an index into the (k-1)-simplices. A face may be ``None``, meaning it is
degenerate; such faces contribute nothing to normalized chains. Vertex order
inside a simplex is implicit in the face order, as for ordered simplicial sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import intlinalg as il


class ComplexError(ValueError):
    pass


class OrientationError(ComplexError):
    def __init__(self, unmatched):
        super().__init__(f"orientation check failed; unmatched faces {unmatched}")
        self.unmatched = unmatched


@dataclass
class Boundary:
    """A marked boundary piece: ``inclusion`` embeds ``model`` into the complex."""

    name: str
    role: str  # "in" or "out"
    model: "DeltaComplex"
    inclusion: "SimplicialMap"


class DeltaComplex:
    def __init__(self, n0, faces, orientation=None, boundaries=(), name=""):
        self.n0 = n0
        self.faces = [None] + [[tuple(f) for f in level] for level in faces]
        while len(self.faces) > 1 and not self.faces[-1]:
            self.faces.pop()
        self.orientation = list(orientation) if orientation is not None else None
        self.boundaries = list(boundaries)
        self.name = name
        self._vert_cache = {}

    # basic shape
    @property
    def dim(self):
        return len(self.faces) - 1 if self.n0 else -1

    def count(self, k):
        if k == 0:
            return self.n0
        if k < 0 or k >= len(self.faces):
            return 0
        return len(self.faces[k])

    def counts(self):
        return [self.count(k) for k in range(self.dim + 1)]

    def face(self, k, idx, i):
        return self.faces[k][idx][i]

    def euler(self):
        return sum((-1) ** k * self.count(k) for k in range(self.dim + 1))

    def validate(self):
        for k in range(1, self.dim + 1):
            lower = self.count(k - 1)
            for idx, fs in enumerate(self.faces[k]):
                if len(fs) != k + 1:
                    raise ComplexError(f"simplex {k}:{idx} needs {k + 1} faces")
                for f in fs:
                    if f is not None and not 0 <= f < lower:
                        raise ComplexError(f"simplex {k}:{idx} has bad face {f}")
                if k >= 2:
                    for i in range(k + 1):
                        for j in range(i + 1, k + 1):
                            a, b = fs[j], fs[i]
                            x = None if a is None else self.faces[k - 1][a][i]
                            y = None if b is None else self.faces[k - 1][b][j - 1]
                            if a is not None and b is not None and x != y:
                                raise ComplexError(f"simplicial identity fails on {k}:{idx} at ({i},{j})")
        for b in self.boundaries:
            b.inclusion.check()
        return self

    # vertices and subfaces
    def subface(self, k, idx, keep):
        """The face spanned by local vertex positions ``keep`` (sorted)."""
        cur_k, cur, pos = k, idx, list(range(k + 1))
        for j in reversed(range(k + 1)):
            if j in keep:
                continue
            if cur is None:
                return None
            local = pos.index(j)
            cur = self.faces[cur_k][cur][local]
            pos.pop(local)
            cur_k -= 1
        return cur

    def vertices(self, k, idx):
        key = (k, idx)
        out = self._vert_cache.get(key)
        if out is None:
            if k == 0:
                out = (idx,)
            else:
                out = tuple(self.subface(k, idx, (i,)) for i in range(k + 1))
            self._vert_cache[key] = out
        return out

    def edge_between(self, k, idx, i, j):
        return self.subface(k, idx, (i, j))

    def spine(self, k, idx):
        return tuple(self.subface(k, idx, (i, i + 1)) for i in range(k))

    def edge_ends(self, e):
        f = self.faces[1][e]
        return f[1], f[0]

    # chains
    def boundary_matrix(self, k):
        """Rows: (k-1)-simplices; columns: k-simplices."""
        rows, cols = self.count(k - 1), self.count(k)
        M = il.zeros(rows, cols)
        if k <= 0 or k > self.dim:
            return M
        for c, fs in enumerate(self.faces[k]):
            for i, f in enumerate(fs):
                if f is not None:
                    M[f][c] += -1 if i % 2 else 1
        return M

    def components(self):
        parent = list(range(self.n0))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in range(self.count(1)):
            a, b = self.edge_ends(e)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        return [find(v) for v in range(self.n0)]

    def boundary(self, role):
        out = [b for b in self.boundaries if b.role == role]
        return out

    def __repr__(self):
        return f"DeltaComplex({self.name or '?'}, counts={self.counts()})"


@dataclass
class SimplicialMap:
    """``maps[k][i]`` is the image of the k-simplex i, or None if it degenerates."""

    src: DeltaComplex
    dst: DeltaComplex
    maps: list

    def __call__(self, k, idx):
        return self.maps[k][idx]

    def check(self):
        for k in range(1, self.src.dim + 1):
            for idx, img in enumerate(self.maps[k]):
                if img is None:
                    continue
                for i in range(k + 1):
                    f = self.src.faces[k][idx][i]
                    want = self.dst.faces[k][img][i]
                    got = None if f is None else self.maps[k - 1][f]
                    if got != want:
                        raise ComplexError(f"map does not commute with d_{i} on {k}:{idx}")
        return self

    def then(self, other):
        """other after self."""
        maps = []
        for k, level in enumerate(self.maps):
            maps.append([None if x is None else other.maps[k][x] for x in level])
        return SimplicialMap(self.src, other.dst, maps)

    def push(self, k, chain):
        out = {}
        for s, c in chain.items():
            t = self.maps[k][s]
            if t is not None:
                out[t] = out.get(t, 0) + c
        return {s: c for s, c in out.items() if c}


def identity_map(X):
    return SimplicialMap(X, X, [list(range(X.count(k))) for k in range(X.dim + 1)])


@dataclass
class Chain:
    """Integer chain: finite support, zero coefficients absent."""

    degree: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {s: c for s, c in self.coeffs.items() if c}

    def __add__(self, other):
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return Chain(self.degree, out)

    def __neg__(self):
        return Chain(self.degree, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return Chain(self.degree, {s: k * c for s, c in self.coeffs.items()})

    def vector(self, n):
        v = [0] * n
        for s, c in self.coeffs.items():
            v[s] = c
        return v

    @classmethod
    def from_vector(cls, degree, v):
        return cls(degree, {i: c for i, c in enumerate(v) if c})

    def is_zero(self):
        return not self.coeffs


def boundary(X, c):
    out = {}
    if c.degree == 0:
        return Chain(-1, {})
    for s, a in c.coeffs.items():
        for i, f in enumerate(X.faces[c.degree][s]):
            if f is not None:
                out[f] = out.get(f, 0) + (-a if i % 2 else a)
    return Chain(c.degree - 1, out)


def is_cycle(X, c):
    return boundary(X, c).is_zero()


def is_boundary(X, c):
    """(True, w) with boundary(w) == c, or (False, None)."""
    k = c.degree
    M = X.boundary_matrix(k + 1)
    if not M or X.count(k + 1) == 0:
        return (c.is_zero(), Chain(k + 1, {}) if c.is_zero() else None)
    x = il.solve_int(M, c.vector(X.count(k)), cols=X.count(k + 1))
    if x is None:
        return False, None
    return True, Chain.from_vector(k + 1, x)


def homology(X, k, modulus=0, subcomplex=None):
    """Classical H_k(X, sub; Z/modulus) as a Subquotient (chains not in sub)."""
    keep = {j: _outside(X, j, subcomplex) for j in (k - 1, k, k + 1)}
    def restricted(j):
        M = X.boundary_matrix(j)
        return [[M[r][c] for c in keep[j]] for r in keep[j - 1]]
    d_out = restricted(k) if k >= 1 else []
    d_in = restricted(k + 1)
    n = len(keep[k])
    if d_out and not d_out[0]:
        d_out = []
    return il.subquotient_at(d_out, d_in, n, modulus), keep[k]


def _outside(X, k, sub):
    if k < 0:
        return []
    if sub is None:
        return list(range(X.count(k)))
    inside = sub.get(k, set())
    return [s for s in range(X.count(k)) if s not in inside]


# subcomplexes

def closure(X, tops):
    """Face-closed subcomplex generated by (k, idx) pairs; dict k -> set."""
    sub = {}
    stack = list(tops)
    while stack:
        k, s = stack.pop()
        if s in sub.setdefault(k, set()):
            continue
        sub[k].add(s)
        if k > 0:
            for f in X.faces[k][s]:
                if f is not None:
                    stack.append((k - 1, f))
    return sub


def boundary_support(X):
    sub = {}
    for b in X.boundaries:
        for k, level in enumerate(b.inclusion.maps):
            sub.setdefault(k, set()).update(x for x in level if x is not None)
    return sub


def extract(X, sub, name=""):
    """Model complex of a face-closed subcomplex and its inclusion."""
    index = {}
    order = {}
    for k in sorted(sub):
        order[k] = sorted(sub[k])
        index[k] = {s: i for i, s in enumerate(order[k])}
    top = max(order) if order else -1
    faces = []
    for k in range(1, top + 1):
        faces.append([tuple(None if f is None else index[k - 1][f] for f in X.faces[k][s]) for s in order.get(k, [])])
    Y = DeltaComplex(len(order.get(0, [])), faces, name=name)
    inc = SimplicialMap(Y, X, [list(order.get(k, [])) for k in range(top + 1)])
    return Y, inc


# orientation and fundamental cycles

def fundamental_cycle(X):
    if X.orientation is None:
        raise ComplexError(f"{X.name}: no orientation declared")
    n = X.dim
    z = Chain(n, {i: e for i, e in enumerate(X.orientation)})
    dz = boundary(X, z)
    allowed = boundary_support(X).get(n - 1, set())
    bad = sorted(s for s in dz.coeffs if s not in allowed)
    if bad:
        raise OrientationError(bad)
    return z


def boundary_cycles(X):
    """Pairs (Boundary, model fundamental cycle) for every marked piece."""
    return [(b, fundamental_cycle(b.model)) for b in X.boundaries]


class BoundaryMismatch(ComplexError):
    pass


def check_relative_cycle(X):
    """Require d[X] = sum_out i[Y] - sum_in i[Y] exactly."""
    z = fundamental_cycle(X)
    dz = boundary(X, z)
    want = Chain(X.dim - 1, {})
    for b, y in boundary_cycles(X):
        pushed = Chain(X.dim - 1, b.inclusion.push(X.dim - 1, y.coeffs))
        want = want + pushed if b.role == "out" else want - pushed
    if (dz - want).coeffs:
        raise BoundaryMismatch(f"{X.name}: boundary of fundamental cycle disagrees with marked boundaries")
    return z


# nerve of a finite group

class Nerve(DeltaComplex):
    def __init__(self, G, N):
        self.group = G
        nonid = [g for g in G.elements() if g != G.e]
        self.tuples = [[()]]
        self.index = [{(): 0}]
        faces = []
        for k in range(1, N + 1):
            prev = self.tuples[-1]
            level = [t + (g,) for t in prev for g in nonid]
            self.tuples.append(level)
            self.index.append({t: i for i, t in enumerate(level)})
            fl = []
            for t in level:
                fl.append(tuple(self._face_index(t, i) for i in range(k + 1)))
            faces.append(fl)
        super().__init__(1, faces, name=f"B{G.name}")

    def _face_index(self, t, i):
        k = len(t)
        G = self.group
        if i == 0:
            f = t[1:]
        elif i == k:
            f = t[:-1]
        else:
            f = t[: i - 1] + (G.mul(t[i - 1], t[i]),) + t[i + 1:]
        if any(g == G.e for g in f):
            return None
        return self.index[k - 1][f]

    def lookup(self, t):
        if any(g == self.group.e for g in t):
            return None
        return self.index[len(t)][tuple(t)]


def nerve(G, N):
    return Nerve(G, N)


# prisms

def prism(Y, closed=False, name=None):
    """Y x I (or Y x S^1 when ``closed``) with bottom marked in, top out."""
    n = Y.dim
    index = [dict() for _ in range(n + 2)]
    faces_of = [list() for _ in range(n + 2)]

    def key_q(k, s, i):
        if i >= k:
            return ("B", k, s)
        if i < 0:
            return ("B", k, s) if closed else ("T", k, s)
        return ("Q", k, s, i)

    def add(d, key, fs):
        index[d][key] = len(faces_of[d])
        faces_of[d].append(fs)

    for k in range(n + 1):
        for s in range(Y.count(k)):
            add(k, ("B", k, s), None)
    if not closed:
        for k in range(n + 1):
            for s in range(Y.count(k)):
                add(k, ("T", k, s), None)
    for k in range(1, n + 1):
        for s in range(Y.count(k)):
            for i in range(k):
                add(k, ("Q", k, s, i), None)
    for k in range(n + 1):
        for s in range(Y.count(k)):
            for i in range(k + 1):
                add(k + 1, ("P", k, s, i), None)

    def face_keys(key):
        tag = key[0]
        if tag in ("B", "T"):
            _, k, s = key
            return [(tag, k - 1, f) for f in Y.faces[k][s]]
        if tag == "Q":
            _, k, s, i = key
            return [key_q(k - 1, Y.faces[k][s][j], i - 1 if j <= i else i) for j in range(k + 1)]
        _, k, s, i = key
        out = []
        for j in range(k + 2):
            if j < i:
                out.append(("P", k - 1, Y.faces[k][s][j], i - 1))
            elif j == i:
                out.append(key_q(k, s, i - 1))
            elif j == i + 1:
                out.append(key_q(k, s, i))
            else:
                out.append(("P", k - 1, Y.faces[k][s][j - 1], i))
        return out

    faces = []
    for d in range(1, n + 2):
        level = [None] * len(faces_of[d])
        for key, idx in index[d].items():
            level[idx] = tuple(index[d - 1][fk] for fk in face_keys(key))
        faces.append(level)
    n0 = len(faces_of[0])
    X = DeltaComplex(n0, faces, name=name or f"{'loop' if closed else 'prism'}({Y.name})")

    def copy_map(tag):
        return SimplicialMap(Y, X, [[index[k][(tag, k, s)] for s in range(Y.count(k))] for k in range(n + 1)])

    X.prism_index = index
    X.prism_base = Y
    if Y.orientation is not None:
        orient = [0] * X.count(n + 1)
        for s, e in enumerate(Y.orientation):
            for i in range(n + 1):
                orient[index[n + 1][("P", n, s, i)]] = e * (-1) ** i
        X.orientation = orient
        if not closed:
            X.boundaries = [Boundary("bottom", "in", Y, copy_map("B")), Boundary("top", "out", Y, copy_map("T"))]
            # fix the global sign so that d[X] = top - bottom
            try:
                check_relative_cycle(X)
            except BoundaryMismatch:
                X.orientation = [-e for e in orient]
                check_relative_cycle(X)
        else:
            fundamental_cycle(X)
    elif not closed:
        X.boundaries = [Boundary("bottom", "in", Y, copy_map("B")), Boundary("top", "out", Y, copy_map("T"))]
    return X


def prism_orientation_sign(Y):
    """+1 when the prism orientation is e(s)(-1)^i, -1 if globally flipped."""
    X = prism(Y)
    s = next(i for i, e in enumerate(Y.orientation) if e)
    return X.orientation[X.prism_index[Y.dim + 1][("P", Y.dim, s, 0)]] * Y.orientation[s]


# gluing cobordisms

def glue(X1, X2, name=None):
    """X2 after X1: glue the out boundary of X1 to the in boundary of X2."""
    (b1,) = X1.boundary("out")
    (b2,) = X2.boundary("in")
    Y = b1.model
    if not same_complex(Y, b2.model):
        raise BoundaryMismatch("boundary models differ")
    n = X1.dim
    if X2.dim != n:
        raise ComplexError("dimension mismatch")
    ident = [dict() for _ in range(n + 1)]
    for k in range(n):
        for y in range(Y.count(k)):
            ident[k][b2.inclusion.maps[k][y]] = b1.inclusion.maps[k][y]
    remap = [dict() for _ in range(n + 1)]
    counts = [X1.count(k) for k in range(n + 1)]
    for k in range(n + 1):
        for s in range(X2.count(k)):
            if s in ident[k]:
                remap[k][s] = ident[k][s]
            else:
                remap[k][s] = counts[k]
                counts[k] += 1
    faces = []
    for k in range(1, n + 1):
        level = list(X1.faces[k])
        extra = [None] * (counts[k] - X1.count(k))
        for s in range(X2.count(k)):
            t = remap[k][s]
            if t >= X1.count(k):
                extra[t - X1.count(k)] = tuple(None if f is None else remap[k - 1][f] for f in X2.faces[k][s])
        faces.append(level + extra)
    X = DeltaComplex(counts[0], faces, name=name or f"({X2.name})o({X1.name})")
    if X1.orientation is not None and X2.orientation is not None:
        orient = list(X1.orientation) + [0] * (counts[n] - X1.count(n))
        for s, e in enumerate(X2.orientation):
            orient[remap[n][s]] += e
        X.orientation = orient
    inc_in = X1.boundary("in")
    bds = [Boundary(b.name, "in", b.model, SimplicialMap(b.model, X, b.inclusion.maps)) for b in inc_in]
    for b in X2.boundary("out"):
        maps = [[remap[k][x] for x in level] for k, level in enumerate(b.inclusion.maps)]
        bds.append(Boundary(b.name, "out", b.model, SimplicialMap(b.model, X, maps)))
    X.boundaries = bds
    return X.validate()


def same_complex(A, B):
    return A.n0 == B.n0 and A.faces[1:] == B.faces[1:]


def mapping_cylinder(Y, phi, name=None):
    """prism(Y) with the top marked through the automorphism ``phi``."""
    X = prism(Y, name=name or f"cyl({Y.name},{getattr(phi, 'name', 'phi')})")
    top = next(b for b in X.boundaries if b.role == "out")
    maps = [[top.inclusion.maps[k][phi.maps[k][y]] for y in range(Y.count(k))] for k in range(Y.dim + 1)]
    X.boundaries = [b for b in X.boundaries if b.role != "out"] + [Boundary("top", "out", Y, SimplicialMap(Y, X, maps))]
    X.validate()
    check_relative_cycle(X)
    return X


def automorphism_from_vertices(Y, vmap, name="phi"):
    """Extend a vertex bijection to a Delta-automorphism (faces must match)."""
    maps = [list(vmap)]
    for k in range(1, Y.dim + 1):
        lookup = {}
        for s in range(Y.count(k)):
            lookup.setdefault(tuple(Y.vertices(k, s)), []).append(s)
        level = []
        for s in range(Y.count(k)):
            want = tuple(maps[0][v] for v in Y.vertices(k, s))
            cands = [t for t in lookup.get(want, []) if tuple(maps[k - 1][f] for f in Y.faces[k][s]) == Y.faces[k][t]]
            if len(cands) != 1:
                raise ComplexError(f"vertex map does not extend on {k}:{s}")
            level.append(cands[0])
        maps.append(level)
    f = SimplicialMap(Y, Y, maps).check()
    f.name = name
    return f


def relabel(X, perms, name=None):
    """Permute simplex indices in every dimension; ``perms[k][old] = new``."""
    n = X.dim
    faces = []
    for k in range(1, n + 1):
        level = [None] * X.count(k)
        for s, fs in enumerate(X.faces[k]):
            level[perms[k][s]] = tuple(None if f is None else perms[k - 1][f] for f in fs)
        faces.append(level)
    Z = DeltaComplex(X.n0, faces, name=name or f"relabel({X.name})")
    if X.orientation is not None:
        orient = [0] * X.count(n)
        for s, e in enumerate(X.orientation):
            orient[perms[n][s]] = e
        Z.orientation = orient
    Z.boundaries = [
        Boundary(b.name, b.role, b.model,
                 SimplicialMap(b.model, Z, [[perms[k][x] for x in level] for k, level in enumerate(b.inclusion.maps)]))
        for b in X.boundaries
    ]
    return Z.validate()


def from_spec(data, name=""):
    """Build a complex from the JSON layout used by the CLI."""
    simp = data["simplices"]
    dim = data["dim"]
    n0 = simp.get("0", simp.get(0))
    n0 = n0 if isinstance(n0, int) else len(n0)
    faces = [[tuple(f) for f in simp.get(str(k), simp.get(k, []))] for k in range(1, dim + 1)]
    X = DeltaComplex(n0, faces, orientation=data.get("orientation"), name=name)
    X.validate()
    if X.orientation is not None:
        z = Chain(dim, {i: e for i, e in enumerate(X.orientation)})
        dz = boundary(X, z)
    bds = []
    for b in data.get("boundaries", []):
        sub = closure(X, [(dim - 1, t) for t in b["top_simplices"]])
        model, inc = extract(X, sub, name=b["name"])
        if X.orientation is not None:
            sign = 1 if b["role"] == "out" else -1
            model.orientation = [sign * dz.coeffs.get(inc.maps[dim - 1][y], 0) for y in range(model.count(dim - 1))]
        bds.append(Boundary(b["name"], b["role"], model, inc))
    X.boundaries = bds
    if X.orientation is not None:
        fundamental_cycle(X)
    return X


def to_spec(X):
    data = {
        "dim": X.dim,
        "simplices": {"0": X.n0, **{str(k): [list(f) for f in X.faces[k]] for k in range(1, X.dim + 1)}},
    }
    if X.orientation is not None:
        data["orientation"] = list(X.orientation)
    data["boundaries"] = [
        {"name": b.name, "role": b.role, "top_simplices": list(b.inclusion.maps[X.dim - 1])} for b in X.boundaries
    ]
    return data


# edge-path groupoid

@dataclass
class Presentation:
    generators: list  # surviving edge indices
    relations: list  # words: lists of (generator, +-1)
    tree: set
    edge_words: dict  # edge -> word in generators
    components: int


def _reduce(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return out


def _inverse(word):
    return [(g, -e) for g, e in reversed(word)]


def _substitute(word, g, repl):
    out = []
    for h, e in word:
        if h == g:
            out.extend(repl if e == 1 else _inverse(repl))
        else:
            out.append((h, e))
    return out


def spanning_forest(X):
    """BFS spanning forest; returns (tree edge set, root of each vertex, parent edge)."""
    adj = [[] for _ in range(X.n0)]
    for e in range(X.count(1)):
        a, b = X.edge_ends(e)
        adj[a].append((e, b))
        adj[b].append((e, a))
    tree, root, parent = set(), [None] * X.n0, [None] * X.n0
    for r in range(X.n0):
        if root[r] is not None:
            continue
        root[r] = r
        queue = [r]
        for v in queue:
            for e, w in adj[v]:
                if root[w] is None:
                    root[w] = r
                    parent[w] = e
                    tree.add(e)
                    queue.append(w)
    return tree, root, parent


def edge_path_groupoid(X):
    tree, root, _ = spanning_forest(X)
    gens = [e for e in range(X.count(1)) if e not in tree]
    words = {e: ([] if e in tree else [(e, 1)]) for e in range(X.count(1))}
    rels = []
    for t in range(X.count(2)):
        d0, d1, d2 = X.faces[2][t]
        # g(e01) g(e12) g(e02)^-1
        r = _reduce(words[d2] + words[d0] + _inverse(words[d1]))
        if r:
            rels.append(r)
    alive = list(gens)
    changed = True
    while changed:
        changed = False
        for ri, r in enumerate(rels):
            counts = {}
            for g, _ in r:
                counts[g] = counts.get(g, 0) + 1
            single = [g for g in alive if counts.get(g) == 1]
            if not single:
                continue
            g = single[0]
            pos = next(i for i, (h, _) in enumerate(r) if h == g)
            e = r[pos][1]
            rest = r[pos + 1:] + r[:pos]
            # r = g^e * rest (cyclically) = 1  =>  g = rest^-1 (e = 1) or rest (e = -1)
            repl = _inverse(rest) if e == 1 else rest
            rels = [_reduce(_substitute(x, g, repl)) for j, x in enumerate(rels) if j != ri]
            rels = [x for x in rels if x]
            for k in list(words):
                words[k] = _reduce_free(_substitute(words[k], g, repl))
            alive.remove(g)
            changed = True
            break
    ncomp = len({root[v] for v in range(X.n0)})
    return Presentation(alive, rels, tree, words, ncomp)


def _reduce_free(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return out


def disjoint_union(X1, X2, name=None):
    n = max(X1.dim, X2.dim)
    faces = []
    for k in range(1, n + 1):
        a = X1.faces[k] if k <= X1.dim else []
        off = X1.count(k - 1)
        b = [tuple(None if f is None else f + off for f in fs) for fs in (X2.faces[k] if k <= X2.dim else [])]
        faces.append(list(a) + b)
    X = DeltaComplex(X1.n0 + X2.n0, faces, name=name or f"{X1.name}+{X2.name}")
    if X1.orientation is not None and X2.orientation is not None and X1.dim == X2.dim:
        X.orientation = list(X1.orientation) + list(X2.orientation)
    return X.validate()


def prism_projection(X):
    """The collapse prism(Y) -> Y; prism cells of full dimension degenerate."""
    Y = X.prism_base
    maps = []
    for d in range(X.dim + 1):
        level = [None] * X.count(d)
        for key, idx in X.prism_index[d].items():
            if key[0] != "P":
                level[idx] = key[2]
        maps.append(level if d <= Y.dim else level)
    return SimplicialMap(X, Y, maps)
