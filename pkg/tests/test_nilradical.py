import pytest

from cascade_lab.errors import EmptyT, InvalidSimpleRoot
from cascade_lab.nilradical import build_nilradical, is_optimal, optimisation

from conftest import nil, setup


def test_sl7_two_six():
    rs, c, n = nil("A6", {2, 6})
    assert n.dim == 14
    assert n.cascade_indices == (0, 1)
    assert n.tilde_t == frozenset({1, 2, 5, 6})
    assert len(n.tilde_roots) - n.dim == 4
    assert (n.index, n.b) == (6, 10)
    assert not is_optimal(n)
    opt = optimisation(rs, c, n)
    assert is_optimal(opt) and opt.index == 2 and opt.b == 10


def test_sl5_three_four():
    rs, c, n = nil("A4", {3, 4})
    assert (n.dim, n.index) == (7, 5)
    assert len(n.tilde_roots) == len(rs.positive_roots)


def test_e6_alpha2():
    rs, c, n = nil("E6", {2})
    assert (n.dim, len(n.cascade_indices), n.index) == (25, 3, 13)


@pytest.mark.parametrize("N,k", [(4, 1), (5, 2), (6, 2), (6, 3), (7, 3), (8, 4)])
def test_sl_corner_family(N, k):
    rs, c, n = nil(f"A{N - 1}", range(N - k, N))
    assert 2 * n.dim == k * (2 * N - 1 - k)
    assert n.cascade_indices == tuple(range(k))
    assert 2 * n.index == k * (2 * N + 1 - 3 * k)


def test_borel_nilradical_is_optimal():
    for name in ("E6", "B4", "C3", "A5"):
        rs, c = setup(name)
        n = build_nilradical(rs, c, range(1, rs.rank + 1))
        assert n.dim == len(rs.positive_roots)
        assert is_optimal(n)
        assert n.index == len(c)


def test_grading_and_centre():
    rs, c, n = nil("E8", {1})
    assert n.depth == 2
    assert n.centre_roots == frozenset({rs.theta})
    assert sum(len(v) for v in n.grading.values()) == n.dim


def test_abelian():
    rs, c, n = nil("C5", {5})
    assert n.is_abelian and n.index == n.dim


def test_bad_t():
    rs, c = setup("A3")
    with pytest.raises(EmptyT):
        build_nilradical(rs, c, [])
    with pytest.raises(InvalidSimpleRoot):
        build_nilradical(rs, c, [0, 2])
    with pytest.raises(InvalidSimpleRoot):
        build_nilradical(rs, c, [4])
