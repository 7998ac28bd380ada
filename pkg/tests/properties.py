"""Invariant checks shared by the property tests and the acceptance suite.

Every ``check_*`` function returns a list of human-readable violations; an
empty list means the property holds on the whole sweep.
"""
from itertools import combinations

from cascade_lab.classify import (all_t_sets, cp_ideal_size, has_cp, is_square_integrable)
from cascade_lab.nilradical import build_nilradical, is_optimal, t_degree
from cascade_lab.oracle import build_structure_constants, jacobi_violations
from cascade_lab.rootsys import add, is_root, neg, sub
from cascade_lab.stabiliser import full_report

from conftest import setup


def nilradicals(name):
    rs, c = setup(name)
    for t in all_t_sets(rs.rank):
        yield rs, c, build_nilradical(rs, c, t)


def _signed_root(rs, v):
    return is_root(rs, v) or is_root(rs, neg(v))


def check_strong_orthogonality(names):
    bad = []
    for name in names:
        rs, c = setup(name)
        for a, b in combinations(c.roots, 2):
            if rs.inner(a, b) or _signed_root(rs, add(a, b)) or _signed_root(rs, sub(a, b)):
                bad.append(f"{name}: {a}, {b} not strongly orthogonal")
    return bad


def check_heisenberg_partition(names):
    bad = []
    for name in names:
        rs, c = setup(name)
        seen = [g for e in c for g in e.heisenberg]
        if sorted(seen) != sorted(rs.positive_roots):
            bad.append(f"{name}: Heisenberg subsets do not partition the positive roots")
    return bad


def check_upper_ideals(names):
    """``K_T`` is an upper set of the cascade poset and ``n_T`` of the root order."""
    bad = []
    for name in names:
        for rs, c, n in nilradicals(name):
            inside = set(n.cascade_indices)
            for j in inside:
                for i in range(len(c)):
                    if c.leq(j, i) and i not in inside:
                        bad.append(f"{name} T={sorted(n.t_set)}: K_T not upper at {c[i].label}")
            for g in n.roots:
                for k in range(1, rs.rank + 1):
                    up = add(g, rs.simple(k))
                    if is_root(rs, up) and up not in n.roots:
                        bad.append(f"{name} T={sorted(n.t_set)}: {up} missing above {g}")
    return bad


def check_minimal_degree(names):
    """Minimal elements of ``K_T`` have ``T``-degree 1 or 2."""
    bad = []
    for name in names:
        for rs, c, n in nilradicals(name):
            inside = set(n.cascade_indices)
            for j in inside:
                if any(i != j and c.leq(i, j) for i in inside):
                    continue
                if t_degree(c[j].root, n.t_set) not in (1, 2):
                    bad.append(f"{name} T={sorted(n.t_set)}: minimal {c[j].label} "
                               f"has degree {t_degree(c[j].root, n.t_set)}")
    return bad


def check_semiradical_monotone(names):
    """``T`` inside ``T'`` with the same optimisation: ``F(n_T') <= F(n_T) <= n_T``."""
    bad = []
    for name in names:
        rs, c = setup(name)
        data = {}
        for t in all_t_sets(rs.rank):
            n = build_nilradical(rs, c, t)
            data[t] = (n, full_report(rs, c, n).frobenius_roots)
        for t, (n, f) in data.items():
            if not f <= n.roots:
                bad.append(f"{name} T={sorted(t)}: F(n) not inside n")
            for t2, (n2, f2) in data.items():
                if t < t2 and n.tilde_t == n2.tilde_t and not f2 <= f:
                    bad.append(f"{name} T={sorted(t)} < {sorted(t2)}: F not reversed")
    return bad


def check_optimal_generic(names):
    bad = []
    for name in names:
        for rs, c, n in nilradicals(name):
            if is_optimal(n) and not full_report(rs, c, n).generic:
                bad.append(f"{name} T={sorted(n.t_set)}: optimal but not generic")
    return bad


def descent_obstruction(rs, c, n, relaxed=False):
    """A child ``beta_j`` of ``beta_i``, both in ``K_T``, and ``alpha`` in ``phi(beta_i)`` outside ``T``
    that force a non-generic stabiliser, or ``None``.

    The strict form asks for ``nu`` in ``T`` with ``[beta_i:nu] > [beta_j:nu] > 0``.
    The relaxed form only asks that ``beta_i - alpha - beta_j`` be a root of ``n_T``.
    """
    for i in n.cascade_indices:
        bi = c[i].root
        for a in sorted(c[i].phi - n.t_set):
            for j in n.cascade_indices:
                if c[j].parent != i:
                    continue
                bj = c[j].root
                if relaxed:
                    if sub(sub(bi, rs.simple(a)), bj) in n.roots:
                        return c[i].label, c[j].label, a
                elif any(bi[nu - 1] > bj[nu - 1] > 0 for nu in n.t_set):
                    return c[i].label, c[j].label, a
    return None


def check_obstruction_non_generic(names):
    bad = []
    for name in names:
        for rs, c, n in nilradicals(name):
            strict = descent_obstruction(rs, c, n)
            relaxed = descent_obstruction(rs, c, n, relaxed=True)
            if strict and not relaxed:
                bad.append(f"{name} T={sorted(n.t_set)}: strict obstruction without relaxed one")
            if relaxed and full_report(rs, c, n).generic:
                bad.append(f"{name} T={sorted(n.t_set)}: obstructed yet generic")
    return bad


def non_generic_families():
    """Explicit families whose nilradicals are known to be non-generic."""
    out = []
    for t in all_t_sets(6):
        if 6 not in t and t & {2, 3, 4}:
            out.append(("E6", t))
    for name in ("B3", "B4", "D5", "B5", "D6", "D7"):
        rank = int(name[1:])
        out.append((name, frozenset({3})))
        for t in all_t_sets(rank):
            if 2 not in t and 1 in t and any(j >= 3 for j in t):
                out.append((name, t))
    for i, j in combinations((1, 3, 4), 2):
        out.append(("D4", frozenset({i, j})))
    return out


def check_families(families=None):
    bad = []
    for name, t in families or non_generic_families():
        rs, c = setup(name)
        n = build_nilradical(rs, c, t)
        if full_report(rs, c, n).generic:
            bad.append(f"{name} T={sorted(t)}: expected non-generic")
        elif descent_obstruction(rs, c, n, relaxed=True) is None:
            bad.append(f"{name} T={sorted(t)}: no descent obstruction found")
    return bad


def check_cp_ideal_size(names):
    bad = []
    for name in names:
        for rs, c, n in nilradicals(name):
            ok, w = has_cp(rs, c, n)
            if ok and isinstance(w, int) and cp_ideal_size(rs, n, w) != n.b:
                bad.append(f"{name} T={sorted(n.t_set)}: CP-ideal size "
                           f"{cp_ideal_size(rs, n, w)} != b = {n.b}")
    return bad


def check_square_integrable_depth(names):
    bad = []
    for name in names:
        for rs, c, n in nilradicals(name):
            si = n.index == len(n.centre_roots)
            if si != is_square_integrable(n):
                bad.append(f"{name} T={sorted(n.t_set)}: predicate disagrees with ind = dim z")
            if si and n.depth > 2:
                bad.append(f"{name} T={sorted(n.t_set)}: square integrable of depth {n.depth}")
    return bad


def check_jacobi(exhaustive, sampled, sample=3000):
    bad = []
    for name in exhaustive:
        rs, _ = setup(name)
        bad += [f"{name}: {v}" for v in jacobi_violations(build_structure_constants(rs))[:3]]
    for name in sampled:
        rs, _ = setup(name)
        sc = build_structure_constants(rs)
        bad += [f"{name}: {v}" for v in jacobi_violations(sc, sample=sample, seed=42)[:3]]
    return bad
