import pytest

from cascade_lab.classify import all_t_sets
from cascade_lab.nilradical import build_nilradical, sorted_roots
from cascade_lab.stabiliser import (cascade_stabiliser, full_report, has_generic_stabiliser,
                                    is_quasi_quadratic, quasi_quadratic_criterion, upper_closure)

from conftest import nil, setup


def interval(n, i, j):
    """``alpha_i + ... + alpha_j`` in type A_n."""
    return tuple(1 if i <= k <= j else 0 for k in range(1, n + 1))


def test_sl7_stabiliser_roots():
    rs, c, n = nil("A6", {2, 6})
    rep = full_report(rs, c, n)
    want = {interval(6, 2, 2), interval(6, 2, 3), interval(6, 2, 4), interval(6, 2, 5),
            interval(6, 2, 6), interval(6, 1, 6)}
    assert rep.stab_roots == want
    assert rep.complements[0] == {interval(6, 1, 1)}
    assert rep.complements[1] == {interval(6, 5, 5), interval(6, 4, 5), interval(6, 3, 5)}
    assert rep.generic is False
    d, d2 = rep.witness
    assert (d, d2) == (interval(6, 2, 6), interval(6, 2, 2))
    assert tuple(x - y for x, y in zip(d, d2)) == interval(6, 3, 6)


def test_sl7_generic_variant():
    rs, c, n = nil("A6", {1, 2, 6})
    rep = full_report(rs, c, n)
    assert rep.stab_roots == {interval(6, 2, 2), interval(6, 2, 3), interval(6, 2, 4),
                              interval(6, 2, 5), interval(6, 1, 6)}
    assert rep.generic is True and rep.witness is None


def test_optimal_stabiliser_is_cascade():
    for name in ("E7", "D5", "F4"):
        rs, c = setup(name)
        for t in all_t_sets(rs.rank):
            n = build_nilradical(rs, c, t)
            if n.t_set == n.tilde_t:
                assert cascade_stabiliser(rs, c, n).stab_roots == set(n.cascade_roots)


def test_heisenberg_stabiliser():
    rs, c = setup("E6")
    n = build_nilradical(rs, c, {6})
    assert n.roots == c[0].heisenberg
    assert cascade_stabiliser(rs, c, n).stab_roots == {rs.theta}


def test_upper_closure():
    rs, c = setup("A3")
    assert upper_closure(rs, [(0, 1, 0)]) == {(0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)}


def test_frobenius_cases():
    rs, c, n = nil("A6", {2, 6})
    rep = full_report(rs, c, n)
    # case (b) of the type A description: only alpha_2 of the pair {alpha_2, alpha_5}
    assert len(rep.frobenius_roots) == 2 * (7 - 2)
    assert not rep.quasi_quadratic


@pytest.mark.parametrize("name", ["A5", "B4", "C4", "D5", "D6", "E6", "F4", "G2"])
def test_quasi_quadratic_two_ways(name):
    rs, c = setup(name)
    for t in all_t_sets(rs.rank):
        n = build_nilradical(rs, c, t)
        rep = cascade_stabiliser(rs, c, n)
        assert is_quasi_quadratic(rs, c, n, rep) == quasi_quadratic_criterion(rs, c, n)


def test_witness_is_first_in_canonical_order():
    rs, c, n = nil("A6", {2, 6})
    rep = cascade_stabiliser(rs, c, n)
    ordered = sorted_roots(rs, rep.stab_roots)
    generic, (d, d2) = has_generic_stabiliser(rs, rep, n)
    pairs = [(a, b) for a in ordered for b in ordered
             if a != b and tuple(x - y for x, y in zip(a, b)) in n.roots]
    assert pairs[0] == (d, d2)
