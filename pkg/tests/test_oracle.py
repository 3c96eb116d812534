from fractions import Fraction

import pytest

from dwcat import catalog as cat
from dwcat import dw
from dwcat import groups as grp
from dwcat import library as L
from dwcat import oracle
from dwcat.cyclotomic import Cyclotomic

TWISTED = [("z2", "p1"), ("z4", "trivial"), ("z4", "p1"), ("z4", "p2"), ("z4", "p3"), ("z2cube", "typeIII")]


def load(g, c):
    G = cat.load_group(g)
    return G, cat.load_cocycle(c, G, g)


def rat(x):
    return Cyclotomic.rational(Fraction(x))


def test_commuting_orbits_known_values():
    assert oracle.commuting_orbits(grp.symmetric(3)) == 8
    assert oracle.commuting_orbits(grp.dihedral(4)) == 22
    assert oracle.commuting_orbits(grp.quaternion()) == 22
    assert oracle.commuting_orbits(grp.cyclic(5)) == 25
    assert oracle.commuting_orbits(grp.symmetric(3), 1) == 3


def test_hom_count():
    S3 = grp.symmetric(3)
    comm = [[(0, 1), (1, 1), (0, -1), (1, -1)]]
    assert oracle.hom_count(S3, 2, comm) == 18
    assert oracle.hom_count(S3, 1, []) == 6
    assert oracle.hom_count(S3, 0, []) == 1


COMM = [[(0, 1), (1, 1), (0, -1), (1, -1)]]


@pytest.mark.parametrize("name,gens,rels,groups", [
    ("s1", 1, [], ("z3", "s3")),
    ("s2", 0, [], ("z3", "s3")),
    ("t2min", 2, COMM, ("z3", "s3")),
    ("t2", 2, COMM, ("z2",)),
])
def test_coloring_count(name, gens, rels, groups):
    X = L.get(name)
    for g in groups:
        G = cat.load_group(g)
        n = sum(1 for _ in oracle.colorings(X, G))
        assert n == oracle.hom_count(G, gens, rels) * G.order ** (X.n0 - 1)


def test_oracle_known_values():
    G, om = load("z2", "trivial")
    assert oracle.closed_oracle(L.get("t3"), G, om) == rat(4)
    G, om = load("z3", "trivial")
    assert oracle.closed_oracle(L.get("s3"), G, om) == rat(Fraction(1, 3))
    for g in ("z2", "z3", "s3"):
        G, om = load(g, "trivial")
        assert oracle.closed_oracle(L.get("s2xs1"), G, om) == rat(1)


@pytest.mark.parametrize("g,c", TWISTED)
@pytest.mark.parametrize("name", ["t3", "s2xs1", "s3"])
def test_closed_agree(g, c, name):
    G, om = load(g, c)
    X = L.get(name)
    assert dw.partition_function(X, G, om) == oracle.closed_oracle(X, G, om)


@pytest.mark.parametrize("g,c", TWISTED + [("s3", "trivial")])
@pytest.mark.parametrize("name", ["cyl_s2", "cyl_t2min"])
def test_cylinders_agree(g, c, name):
    G, om = load(g, c)
    X = L.get(name)
    M = dw.cobordism_map(X, G, om)
    assert M.entries == oracle.state_sum_oracle(X, G, om, M.cols, M.rows)


@pytest.mark.parametrize("g,c", TWISTED)
def test_dimension_oracle(g, c):
    G, om = load(g, c)
    for name in ("s2", "t2min"):
        Y = L.get(name)
        assert oracle.dimension_oracle(Y, G, om) == rat(dw.state_space(Y, G, om).dim)


def test_oracle_rejects_holonomy_anchor():
    G, om = load("z2cube", "typeIII")
    Y = L.get("t2min")
    S_ = dw.state_space(Y, G, om)
    bad = [o.rep for o in S_.orbits if not o.holonomy_free][:1]
    with pytest.raises(AssertionError):
        oracle._psi_tables(Y, G, om, bad)
