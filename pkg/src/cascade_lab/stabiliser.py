"""Stabiliser of the cascade point, generic-stabiliser test, Frobenius semiradical.

Everything here is combinatorial on root sets.  The stabiliser of the cascade
point is a sum of root spaces, so it is described by its set of roots; the
oracle module checks these sets against honest linear algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from .cascade import Cascade, phi_inverse
from .errors import CriterionMismatch, InternalInconsistency
from .nilradical import Nilradical, sorted_roots
from .rootsys import Root, RootSystem, diagram_path, sub


@dataclass(frozen=True)
class StabiliserReport:
    complements: Dict[int, FrozenSet[Root]]
    stab_roots: FrozenSet[Root]
    generic: Optional[bool] = None
    witness: Optional[Tuple[Root, Root]] = None
    frobenius_roots: FrozenSet[Root] = field(default_factory=frozenset)
    quasi_quadratic: Optional[bool] = None


def cascade_stabiliser(rs: RootSystem, c: Cascade, n: Nilradical) -> StabiliserReport:
    """Roots of the stabiliser of the cascade point in ``n``.

    For each cascade root ``beta_j`` in ``n``, every root ``gamma`` of the
    Heisenberg subset of ``beta_j`` that is missing from ``n`` contributes
    ``beta_j - gamma``; the cascade roots of ``n`` are added on top.
    """
    complements = {}
    extra = set()
    for j in n.cascade_indices:
        el = c[j]
        missing = frozenset(el.heisenberg - n.roots)
        complements[j] = missing
        for gamma in missing:
            d = sub(el.root, gamma)
            if d not in n.roots:
                raise InternalInconsistency(
                    f"{el.label} - {gamma} = {d} is not a root of n_T for T={sorted(n.t_set)}")
            if d in extra:
                raise InternalInconsistency(f"root {d} produced twice")
            extra.add(d)
    k_roots = set(n.cascade_roots)
    if extra & k_roots:
        raise InternalInconsistency("stabiliser contributions meet the cascade")
    stab = frozenset(extra | k_roots)
    if len(stab) != n.index:
        raise InternalInconsistency(
            f"|stabiliser roots| = {len(stab)} but index = {n.index} for T={sorted(n.t_set)}")
    return StabiliserReport(complements=complements, stab_roots=stab)


def has_generic_stabiliser(rs: RootSystem, report: StabiliserReport,
                           n: Nilradical) -> Tuple[bool, Optional[Tuple[Root, Root]]]:
    """Difference test on the stabiliser roots.

    Returns ``(True, None)`` if no difference of two stabiliser roots lies in
    ``n``; otherwise ``(False, (delta, delta_prime))`` for the first offending
    ordered pair in canonical root order.
    """
    ordered = sorted_roots(rs, report.stab_roots)
    for d in ordered:
        for d2 in ordered:
            if d != d2 and sub(d, d2) in n.roots:
                return False, (d, d2)
    return True, None


def upper_closure(rs: RootSystem, roots) -> FrozenSet[Root]:
    """Close a set of positive roots under adding simple roots."""
    out = set(roots)
    stack = list(out)
    while stack:
        g = stack.pop()
        for i in range(rs.rank):
            up = g[:i] + (g[i] + 1,) + g[i + 1:]
            if up in rs.index_of and up not in out:
                out.add(up)
                stack.append(up)
    return frozenset(out)


def frobenius_semiradical(rs: RootSystem, report: StabiliserReport,
                          n: Nilradical) -> FrozenSet[Root]:
    """Roots of the b-stable ideal generated by the cascade-point stabiliser."""
    closure = upper_closure(rs, report.stab_roots)
    if not closure <= n.roots:
        raise InternalInconsistency("semiradical closure left the nilradical")
    return closure


def quasi_quadratic_criterion(rs: RootSystem, c: Cascade, n: Nilradical) -> bool:
    """The simple-root criterion for ``F(n) = n``, evaluated without any closure."""
    k_roots = set(c.roots)
    for a in n.t_set:
        if rs.simple(a) in k_roots:
            continue
        el = c[phi_inverse(c, a)]
        if len(el.phi) != 2:
            return False
        (other,) = el.phi - {a}
        chain = diagram_path(rs, a, other, el.subsystem_simples)
        if set(chain) & n.t_set != {a}:
            return False
    return True


def is_quasi_quadratic(rs: RootSystem, c: Cascade, n: Nilradical,
                       report: Optional[StabiliserReport] = None) -> bool:
    """Whether ``F(n) = n``; the criterion and the closure must agree."""
    if report is None:
        report = cascade_stabiliser(rs, c, n)
    by_closure = frobenius_semiradical(rs, report, n) == n.roots
    by_criterion = quasi_quadratic_criterion(rs, c, n)
    if by_closure != by_criterion:
        raise CriterionMismatch(
            f"{rs.stype}, T={sorted(n.t_set)}: closure says {by_closure}, "
            f"criterion says {by_criterion}")
    return by_closure


def full_report(rs: RootSystem, c: Cascade, n: Nilradical) -> StabiliserReport:
    """Stabiliser roots together with the generic flag and the semiradical."""
    base = cascade_stabiliser(rs, c, n)
    generic, witness = has_generic_stabiliser(rs, base, n)
    frob = frobenius_semiradical(rs, base, n)
    return StabiliserReport(
        complements=base.complements,
        stab_roots=base.stab_roots,
        generic=generic,
        witness=witness,
        frobenius_roots=frob,
        quasi_quadratic=is_quasi_quadratic(rs, c, n, base),
    )
