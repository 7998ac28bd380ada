import pytest

from cascade_lab.errors import InvalidRank, InvalidRoot
from cascade_lab.rootsys import (SimpleType, build_root_system, components, diagram_path,
                                 format_epsilon, from_epsilon, is_connected, is_root,
                                 root_order_leq, support, to_epsilon)

COUNTS = {"A1": 1, "A5": 15, "B3": 9, "C4": 16, "D4": 12, "D6": 30,
          "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


@pytest.mark.parametrize("name,count", sorted(COUNTS.items()))
def test_positive_root_count(name, count):
    assert len(build_root_system(SimpleType.parse(name)).positive_roots) == count


@pytest.mark.parametrize("name,theta", [
    ("G2", (3, 2)),
    ("F4", (2, 4, 3, 2)),
    ("E6", (1, 2, 3, 2, 1, 2)),
    ("E7", (1, 2, 3, 4, 3, 2, 2)),
    ("E8", (2, 3, 4, 5, 6, 4, 2, 3)),
    ("B3", (1, 2, 2)),
    ("C3", (2, 2, 1)),
    ("D5", (1, 2, 2, 1, 1)),
])
def test_highest_root(name, theta):
    rs = build_root_system(SimpleType.parse(name))
    assert rs.theta == theta
    assert rs.positive_roots[-1] == theta
    assert all(root_order_leq(rs, g, theta) for g in rs.positive_roots)


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("E", 9),
                                 ("F", 3), ("G", 3), ("X", 2)])
def test_rank_bounds(bad):
    with pytest.raises(InvalidRank):
        SimpleType(*bad)


def test_order_is_height_then_lex():
    rs = build_root_system(SimpleType.parse("B4"))
    keys = [(sum(g), g) for g in rs.positive_roots]
    assert keys == sorted(keys)


def test_root_order_cases():
    rs = build_root_system(SimpleType.parse("A2"))
    assert not root_order_leq(rs, rs.theta, (1, 0))
    rs6 = build_root_system(SimpleType.parse("A6"))
    assert root_order_leq(rs6, (0, 1, 1, 1, 1, 0), (1, 1, 1, 1, 1, 1))


def test_supports_are_connected():
    for name in ("E8", "F4", "D6", "B5"):
        rs = build_root_system(SimpleType.parse(name))
        for g in rs.positive_roots:
            assert is_connected(rs, support(rs, g))


def test_support_rejects_non_roots():
    rs = build_root_system(SimpleType.parse("A3"))
    assert not is_root(rs, (1, 0, 1))
    with pytest.raises(InvalidRoot):
        support(rs, (1, 0, 1))


def test_components_and_paths():
    rs = build_root_system(SimpleType.parse("E6"))
    assert components(rs, [1, 2, 4, 5, 6]) == [frozenset({1, 2}), frozenset({4, 5}), frozenset({6})]
    assert diagram_path(rs, 1, 6, range(1, 7)) == [1, 2, 3, 6]


def test_inner_products_g2():
    rs = build_root_system(SimpleType.parse("G2"))
    assert rs.norm((1, 0)) == 2 and rs.norm((0, 1)) == 6
    assert rs.cartan == ((2, -3), (-1, 2))


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D5"])
def test_epsilon_round_trip(name):
    st = SimpleType.parse(name)
    rs = build_root_system(st)
    for g in rs.positive_roots:
        assert from_epsilon(st, to_epsilon(st, g)) == g


def test_epsilon_format():
    st = SimpleType.parse("C3")
    assert format_epsilon(st, build_root_system(st).theta) == "2e1"
    st = SimpleType.parse("B2")
    assert format_epsilon(st, (1, 2)) == "e1+e2"
