import pytest

from cascade_lab.reference import GOLDEN_TYPES, golden_cascade, golden_hasse, golden_mismatches
from cascade_lab.cascade import compute_cascade, hasse_edges, phi_inverse
from cascade_lab.errors import InvalidSimpleRoot
from cascade_lab.rootsys import build_root_system, is_root

from conftest import setup


@pytest.mark.parametrize("st", GOLDEN_TYPES, ids=str)
def test_matches_reference_tables(st):
    assert golden_mismatches(st, compute_cascade(build_root_system(st))) == []


def test_e7_order_and_phi():
    rs, c = setup("E7")
    assert list(c.roots) == golden_cascade(rs.stype)
    assert [sorted(e.phi) for e in c] == [[6], [2], [1], [4], [3], [5], [7]]
    assert [(p + 1, ch + 1) for p, ch in hasse_edges(c)] == \
        [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (4, 7)]


def test_d8_last_leaves_swap_numbering():
    # the lex sibling rule lists alpha_7 before alpha_8
    rs, c = setup("D8")
    assert c[6].root == rs.simple(7) and c[7].root == rs.simple(8)
    phi, _ = golden_hasse(rs.stype)
    assert phi[6] == frozenset({8}) and phi[7] == frozenset({7})


def test_a1_single_node():
    rs, c = setup("A1")
    assert len(c) == 1 and hasse_edges(c) == []


def test_phi_sizes():
    for name in ("A7", "E6", "D7", "B5"):
        rs, c = setup(name)
        for e in c:
            assert 1 <= len(e.phi) <= 2


def test_phi_partitions_simple_roots():
    for name in ("E8", "A6", "D5", "C4", "F4"):
        rs, c = setup(name)
        labels = [a for e in c for a in e.phi]
        assert sorted(labels) == list(range(1, rs.rank + 1))


def test_phi_inverse():
    rs, c = setup("E6")
    assert phi_inverse(c, 6) == 0
    assert phi_inverse(c, 5) == 1
    with pytest.raises(InvalidSimpleRoot):
        phi_inverse(c, 9)


def _signed_root(rs, v):
    return is_root(rs, v) or is_root(rs, tuple(-x for x in v))


def test_strongly_orthogonal():
    for name in ("E8", "F4", "B6", "C5", "D7", "A8", "G2"):
        rs, c = setup(name)
        for a in c.roots:
            for b in c.roots:
                if a != b:
                    assert rs.inner(a, b) == 0
                    assert not _signed_root(rs, tuple(x + y for x, y in zip(a, b)))
                    assert not _signed_root(rs, tuple(x - y for x, y in zip(a, b)))


def test_heisenberg_subsets_partition_positive_roots():
    for name in ("E7", "D6", "B5", "A7", "C4", "F4"):
        rs, c = setup(name)
        seen = []
        for e in c:
            seen.extend(e.heisenberg)
        assert sorted(seen) == sorted(rs.positive_roots)


def test_leq_is_ancestor_relation():
    rs, c = setup("E8")
    assert c.leq(7, 0) and c.leq(4, 2) and not c.leq(3, 4)
