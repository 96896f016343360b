import pytest

from heckekoszul.rootdata import RootDataError, RootDatum, all_elements, braid_order, known_types, reflect, weyl_mul

ORDERS = {"A1": 2, "A1xA1": 4, "A2": 6, "B2": 8, "C2": 8, "G2": 12, "A3": 24, "B3": 48, "C3": 48}


def test_reflect_examples():
    a1 = RootDatum.from_label("A1")
    assert reflect(a1, 1, (1,)) == (-1,)
    a2 = RootDatum.from_label("A2")
    assert reflect(a2, 1, (0, 0)) == (0, 0)
    assert reflect(a2, 1, (1, 0)) == (-1, 1)


def test_simple_roots_are_cartan_columns():
    b2 = RootDatum.from_label("B2")
    for j in (1, 2):
        assert b2.simple_root(j) == tuple(b2.cartan[i][j - 1] for i in range(2))
        assert reflect(b2, j, b2.simple_root(j)) == tuple(-c for c in b2.simple_root(j))


@pytest.mark.parametrize("label", known_types())
def test_reflections_are_involutions(label):
    d = RootDatum.from_label(label)
    x = tuple(range(1, d.rank + 1))
    for i in range(1, d.rank + 1):
        assert reflect(d, i, reflect(d, i, x)) == x


def test_weyl_mul_examples():
    a1 = RootDatum.from_label("A1")
    s = a1.element((1,))
    e = a1.identity()
    assert weyl_mul(a1, e, s) == s
    assert weyl_mul(a1, s, s) == e


@pytest.mark.parametrize("label,i,j,m", [("A1xA1", 1, 2, 2), ("A2", 1, 2, 3), ("B2", 1, 2, 4), ("G2", 1, 2, 6)])
def test_braid_order(label, i, j, m):
    assert braid_order(RootDatum.from_label(label), i, j) == m


@pytest.mark.parametrize("label", known_types())
def test_group_order(label):
    assert len(all_elements(RootDatum.from_label(label))) == ORDERS[label]


def test_a1_elements():
    a1 = RootDatum.from_label("A1")
    assert [tuple(w) for w in all_elements(a1)] == [(), (1,)]


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_action_is_a_group_action(label):
    d = RootDatum.from_label(label)
    W = all_elements(d)
    x = (2, -1)
    for u in W[::3]:
        for w in W[::2]:
            assert d.act(weyl_mul(d, u, w), x) == d.act(u, d.act(w, x))
        assert weyl_mul(d, u, d.inverse(u)) == d.identity()


def test_longest_element_length():
    g2 = RootDatum.from_label("G2")
    assert max(len(w) for w in all_elements(g2)) == 6
    assert g2.element((1, 2, 1, 2, 1, 2)) == g2.element((2, 1, 2, 1, 2, 1))


def test_errors():
    with pytest.raises(RootDataError):
        RootDatum.from_label("E9")
    with pytest.raises(RootDataError):
        RootDatum.from_label("A2").simple_root(3)
