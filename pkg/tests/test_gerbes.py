import random

import pytest

from dwcat import cohomology as H
from dwcat import dw
from dwcat import gerbes as Gb
from dwcat import groups as grp
from dwcat import library as L
from dwcat import simplicial as S
from dwcat.picard import lines

from helpers import random_cocycle

COVERS = {
    "circle3": Gb.circle3,
    "sphere4": Gb.sphere4,
    "torus": lambda: Gb.star_cover(L.get("t2")),
    "simplex4": lambda: Gb.CechCover.generated(5, [tuple(range(5))], "simplex4"),
}


def test_nerve_counts():
    assert Gb.cech_nerve(Gb.interval2()).counts() == [2, 1]
    assert Gb.cech_nerve(Gb.circle3()).counts() == [3, 3]
    assert Gb.cech_nerve(Gb.sphere4()).counts() == [4, 6, 4]
    T = L.get("t2")
    assert Gb.cech_nerve(Gb.star_cover(T)).counts() == T.counts()


def test_sphere_cover_nerve_is_a_sphere():
    X = Gb.cech_nerve(Gb.sphere4())
    C = H.cochain_complex(X, lines(3))
    assert H.cohomology(C, 1).pi0.factors == (3,)
    assert H.cohomology(C, 0).pi0.factors == ()


def test_cover_validation_and_category():
    with pytest.raises(Gb.GerbeError):
        Gb.CechCover(3, [frozenset([0, 1, 2])])
    with pytest.raises(Gb.GerbeError):
        Gb.CechCover(2, [frozenset([0, 5])])
    cat = Gb.cover_category(Gb.circle3())
    assert cat.compose((0, 1), (1,)) == (0, 1)
    assert cat.hom((0, 1), (1,)) and not cat.hom((1,), (0, 1))
    with pytest.raises(Gb.GerbeError):
        cat.compose((0, 1), (1, 2))


@pytest.mark.parametrize("cover", sorted(COVERS))
@pytest.mark.parametrize("degree", [1, 2])
def test_round_trip(cover, degree):
    U = COVERS[cover]()
    X, C = Gb.nerve_complex(U, 4)
    if degree > X.dim:
        pytest.skip("nerve too small")
    rng = random.Random(degree * 100 + len(cover))
    h = H.cohomology(C, degree)
    for _ in range(50):
        x = random_cocycle(rng, C, degree, h)
        g = Gb.gerbe_from_cocycle(x)
        assert Gb.cocycle_from_gerbe(g, C) == x
        assert Gb.gerbe_from_cocycle(Gb.cocycle_from_gerbe(g, C)) == g


@pytest.mark.parametrize("cover", sorted(COVERS))
def test_find_object_iff_class_vanishes(cover):
    U = COVERS[cover]()
    rng = random.Random(5)
    for m in (2, 3):
        X, C = Gb.nerve_complex(U, m)
        h = H.cohomology(C, 1)
        seen = set()
        for _ in range(30):
            x = random_cocycle(rng, C, 1, h)
            g = Gb.gerbe_from_cocycle(x)
            obj = Gb.find_object(g, C)
            seen.add(obj is None)
            assert (obj is not None) == h.is_zero(x)
            if obj is not None:
                assert Gb.check_object(g, obj)
        if h.pi0.factors:
            assert seen == {True, False}


def test_zero_gerbe_has_zero_object():
    U = Gb.circle3()
    obj = Gb.find_object(Gb.zero_gerbe(U, 5))
    assert all(v == 0 for v in obj.labels.values())
    assert all(v % 5 == 0 for v in obj.isos.values())


def test_torus_generator_has_no_object():
    U = Gb.star_cover(L.get("t2"))
    for m in (2, 3, 4):
        X, C = Gb.nerve_complex(U, m)
        (x,) = H.cohomology(C, 1).pi0_generators()
        g = Gb.gerbe_from_cocycle(x)
        assert Gb.find_object(g) is None
        gg = Gb.tensor_gerbes(g, g)
        assert (Gb.find_object(gg) is not None) == (m == 2)


def test_tensor_and_inverse():
    U = Gb.star_cover(L.get("t2"))
    X, C = Gb.nerve_complex(U, 3)
    rng = random.Random(8)
    for _ in range(10):
        g = Gb.gerbe_from_cocycle(random_cocycle(rng, C, 1))
        z = Gb.tensor_gerbes(g, Gb.zero_gerbe(U, 3))
        assert Gb.cocycle_from_gerbe(z, C) == Gb.cocycle_from_gerbe(g, C)
        inv = Gb.tensor_gerbes(g, Gb.inverse_gerbe(g))
        assert Gb.global_trivialization_check(inv)
        assert Gb.find_object(inv) is not None
        assert Gb.gerbes_equivalent(g, g)
    with pytest.raises(Gb.GerbeError):
        Gb.tensor_gerbes(Gb.zero_gerbe(U, 3), Gb.zero_gerbe(U, 4))
    with pytest.raises(Gb.GerbeError):
        Gb.tensor_gerbes(Gb.zero_gerbe(U, 3), Gb.zero_gerbe(Gb.circle3(), 3))


def test_gerbe_equivalence_matches_cohomology():
    U = Gb.star_cover(L.get("t2"))
    X, C = Gb.nerve_complex(U, 4)
    h = H.cohomology(C, 1)
    rng = random.Random(12)
    for _ in range(20):
        x, y = random_cocycle(rng, C, 1, h), random_cocycle(rng, C, 1, h)
        same = Gb.gerbes_equivalent(Gb.gerbe_from_cocycle(x), Gb.gerbe_from_cocycle(y))
        assert same == (h.classify(x) == h.classify(y))


def test_alternating_reordering():
    U = Gb.sphere4()
    g = Gb.Gerbe1Data(U, 5, {(0, 1): 2}, {(0, 1, 2): 1, (0, 1, 3): 1, (0, 2, 3): 0, (1, 2, 3): 0})
    g.check()
    assert g.label(1, 0) == -2
    assert g.section(1, 0, 2) == 4 and g.section(2, 0, 1) == 1
    assert g.section(0, 0, 1) == 0


def test_gerbe_cocycle_failure_has_witness():
    U = COVERS["simplex4"]()
    g = Gb.Gerbe1Data(U, 5, {}, {(0, 1, 2): 1})
    with pytest.raises(Gb.GerbeError) as exc:
        g.check()
    assert exc.value.witness == (0, 1, 2, 3)


def test_two_gerbes_from_cocycles_satisfy_quintuple_condition():
    U = COVERS["simplex4"]()
    X, C = Gb.nerve_complex(U, 3)
    rng = random.Random(2)
    for _ in range(20):
        g = Gb.gerbe_from_cocycle(random_cocycle(rng, C, 2))
        assert isinstance(g, Gb.Gerbe2Data)
        g.check()
    bad = Gb.Gerbe2Data(U, 3, {}, {}, {(0, 1, 2, 3): 1})
    with pytest.raises(Gb.GerbeError) as exc:
        bad.check()
    assert exc.value.witness == (0, 1, 2, 3, 4)


def test_group_cocycle_is_nonzero_class_on_nerve():
    G = grp.cyclic(2)
    B = S.nerve(G, 4)
    om = dw.GroupCocycle(G, 3, 2, {(1, 1, 1): 1}, "abc").validate()
    x = om.as_cocycle2(B)
    h = H.cohomology(x.complex, 2)
    assert not h.is_zero(x)
    y = dw.cyclic_cocycle(2, 1).as_cocycle2(B)
    assert not H.cohomology(y.complex, 2).is_zero(y)


def _random_loop(rng, X, start, length):
    path, pos = [], start
    for _ in range(length):
        steps = [(e, 1) for e in range(X.count(1)) if X.edge_ends(e)[0] == pos]
        steps += [(e, -1) for e in range(X.count(1)) if X.edge_ends(e)[1] == pos]
        e, s = rng.choice(steps)
        path.append((e, s))
        a, b = X.edge_ends(e)
        pos = b if s == 1 else a
    return path if pos == start else None


def _closed_loops(rng, X, count):
    out = []
    while len(out) < count:
        start = rng.randrange(X.n0)
        p = _random_loop(rng, X, start, rng.randint(2, 8))
        if p:
            out.append(p)
    return out


def test_zero_gerbe_functor_zero_is_constant():
    X = L.get("s1")
    C = H.cochain_complex(X, lines(4))
    F = Gb.zero_gerbe_functor(H.zero_cocycle(C, 0))
    assert F.labels == [0, 0, 0] and not any(F.phases)
    with pytest.raises(Gb.GerbeError):
        Gb.zero_gerbe_functor(H.zero_cocycle(C, 1))


def test_circle_holonomy_realizes_class():
    X = L.get("s1")
    m = 5
    C = H.cochain_complex(X, lines(m))
    h = H.cohomology(C, 0)
    (g,) = h.pi0_generators()
    # go around once, orienting each step from the current vertex
    pos, loop = 0, []
    used = set()
    while len(loop) < X.count(1):
        e = next(e for e in range(X.count(1)) if e not in used and pos in X.edge_ends(e))
        a, b = X.edge_ends(e)
        loop.append((e, 1 if a == pos else -1))
        pos = b if a == pos else a
        used.add(e)
    F = Gb.zero_gerbe_functor(g)
    assert F.is_closed(loop)
    k = F.holonomy(loop)
    assert k != 0
    for j in range(m):
        x = H.scale_cocycle(g, j)
        assert Gb.zero_gerbe_functor(x).holonomy(loop) == (j * k) % m
        assert h.is_zero(x) == (j == 0)


def test_sphere_local_systems_have_no_holonomy():
    X = L.get("s2")
    rng = random.Random(4)
    C = H.cochain_complex(X, lines(6))
    for _ in range(10):
        x = random_cocycle(rng, C, 0)
        F = Gb.zero_gerbe_functor(x)
        for loop in _closed_loops(rng, X, 20):
            assert F.is_closed(loop)
            assert F.holonomy(loop) == 0


def test_torus_local_system_holonomy_depends_only_on_homotopy():
    X = L.get("t2")
    rng = random.Random(6)
    C = H.cochain_complex(X, lines(4))
    P = S.edge_path_groupoid(X)
    for _ in range(5):
        x = random_cocycle(rng, C, 0)
        F = Gb.zero_gerbe_functor(x)
        # the boundary loop of each triangle is null-homotopic
        for t in range(X.count(2)):
            d0, d1, d2 = X.faces[2][t]
            loop = [(d2, 1), (d0, 1), (d1, -1)]
            assert F.is_closed(loop) and F.holonomy(loop) == 0
    assert len(P.generators) == 2
