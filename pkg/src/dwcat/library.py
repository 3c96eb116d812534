"""Built-in triangulations used by the tests, the CLI and the acceptance run."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .simplicial import DeltaComplex, automorphism_from_vertices, glue, mapping_cylinder, prism


def from_vertex_simplices(n0, tops, orientation=None, name=""):
    """Delta-complex from ordered vertex tuples of top simplices.

    Every subsequence of a top tuple becomes a simplex, so this only builds
    complexes in which a simplex is determined by its ordered vertices.
    """
    dim = len(tops[0]) - 1
    levels = [set() for _ in range(dim + 1)]
    for t in tops:
        for k in range(1, dim + 1):
            for sub in itertools.combinations(t, k + 1):
                levels[k].add(sub)
    order = [None] + [sorted(levels[k]) for k in range(1, dim + 1)]
    order[dim] = list(tops)
    index = [None] + [{s: i for i, s in enumerate(order[k])} for k in range(1, dim + 1)]
    faces = []
    for k in range(1, dim + 1):
        fl = []
        for s in order[k]:
            fs = []
            for i in range(k + 1):
                f = s[:i] + s[i + 1:]
                fs.append(f[0] if k == 1 else index[k - 1][f])
            fl.append(tuple(fs))
        faces.append(fl)
    X = DeltaComplex(n0, faces, orientation=orientation, name=name)
    X.vertex_tuples = order
    return X.validate()


def point():
    return DeltaComplex(1, [], orientation=[1], name="pt")


def interval():
    return from_vertex_simplices(2, [(0, 1)], name="interval")


def circle():
    # cyclic branching 0 -> 1 -> 2 -> 0 so rotation is an automorphism
    return from_vertex_simplices(3, [(0, 1), (1, 2), (2, 0)], orientation=[1, 1, 1], name="s1")


def sphere_boundary(n):
    """The boundary of the (n+1)-simplex, an n-sphere."""
    tops = [tuple(v for v in range(n + 2) if v != i) for i in range(n + 2)]
    orient = [(-1) ** i for i in range(n + 2)]
    return from_vertex_simplices(n + 2, tops, orientation=orient, name=f"s{n}")


def s2():
    return sphere_boundary(2)


def s3():
    return sphere_boundary(3)


def _tv(i, j):
    return 3 * (i % 3) + (j % 3)


def torus():
    """9-vertex torus; translations are Delta-automorphisms."""
    tops, orient = [], []
    for i in range(3):
        for j in range(3):
            tops.append((_tv(i, j), _tv(i + 1, j), _tv(i + 1, j + 1)))
            orient.append(1)
            tops.append((_tv(i, j), _tv(i, j + 1), _tv(i + 1, j + 1)))
            orient.append(-1)
    return from_vertex_simplices(9, tops, orientation=orient, name="t2")


def torus_min():
    """One vertex, edges a, b, c and two triangles with c = ab = ba."""
    a, b, c = 0, 1, 2
    X = DeltaComplex(1, [[(0, 0)] * 3, [(b, c, a), (a, c, b)]], orientation=[1, -1], name="t2min")
    return X.validate()


def torus_shift(di, dj):
    Y = torus()
    vmap = [0] * 9
    for i in range(3):
        for j in range(3):
            vmap[_tv(i, j)] = _tv(i + di, j + dj)
    return automorphism_from_vertices(Y, vmap, name=f"shift{di}{dj}")


def circle_rotation():
    return automorphism_from_vertices(circle(), [1, 2, 0], name="rot")


def t3():
    return prism(torus_min(), closed=True, name="t3")


def t3_fine():
    return prism(torus(), closed=True, name="t3fine")


def s2xs1():
    return prism(s2(), closed=True, name="s2xs1")


def t2xs1():
    return t3_fine()


def cylinder(Y):
    return prism(Y)


CLOSED = {
    "s1": circle,
    "s2": s2,
    "s3": s3,
    "t2": torus,
    "t2min": torus_min,
    "t3": t3,
    "t3fine": t3_fine,
    "s2xs1": s2xs1,
    "pt": point,
}

# the six complexes used in the cohomology acceptance sweep
SWEEP = ["s1", "s2", "t2", "s3", "s2xs1", "t3"]


@lru_cache(maxsize=None)
def get(name):
    if name in CLOSED:
        return CLOSED[name]()
    if name.startswith("cyl_"):
        return prism(get(name[4:]), name=name)
    if name.startswith("loop_"):
        return prism(get(name[5:]), closed=True, name=name)
    if name == "interval":
        return interval()
    if name == "cyl2_s1":
        return glue(prism(circle()), prism(circle()), name=name)
    if name == "mcyl_s1":
        return mapping_cylinder(circle(), circle_rotation(), name=name)
    if name == "mcyl_t2":
        return mapping_cylinder(torus(), torus_shift(1, 0), name=name)
    raise KeyError(f"unknown complex {name!r}")


def names():
    return sorted(CLOSED) + ["cyl_s1", "cyl_s2", "cyl_t2", "cyl2_s1", "mcyl_s1", "mcyl_t2", "interval"]
