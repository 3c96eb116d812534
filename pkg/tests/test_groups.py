import itertools

import pytest

from dwcat import groups as Gr


def brute_commuting(G, k):
    return sum(1 for t in itertools.product(G.elements(), repeat=k)
               if all(G.mul(a, b) == G.mul(b, a) for a in t for b in t))


@pytest.mark.parametrize("G,order,abelian,pairs", [
    (Gr.cyclic(4), 4, True, 16),
    (Gr.symmetric(3), 6, False, 18),
    (Gr.dihedral(4), 8, False, 40),
    (Gr.quaternion(), 8, False, 40),
    (Gr.product(Gr.cyclic(2), Gr.cyclic(2)), 4, True, 16),
])
def test_group_tables(G, order, abelian, pairs):
    # [DERIVED] |{commuting pairs}| = |G| * number of conjugacy classes
    assert G.order == order
    assert G.is_abelian() == abelian
    assert brute_commuting(G, 2) == pairs
    assert len(Gr.commuting_tuples(G, 2)) == pairs
    for g in G.elements():
        assert G.mul(g, G.inv[g]) == G.e


def test_quaternion_is_not_dihedral():
    # elements of order 2: Q8 has one, D4 has five
    def involutions(G):
        return sum(1 for g in G.elements() if g != G.e and G.mul(g, g) == G.e)
    assert involutions(Gr.quaternion()) == 1
    assert involutions(Gr.dihedral(4)) == 5


def test_invalid_table_rejected():
    with pytest.raises(Gr.GroupError):
        Gr.FiniteGroup([[0, 1], [0, 1]])
    with pytest.raises(Gr.GroupError):
        # a Latin square that is not associative
        Gr.FiniteGroup([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
