"""Reference cascade tables, written out independently of the cascade algorithm.

Classical types come from closed formulas in epsilon coordinates, exceptional
types from explicit coefficient vectors.  Hasse data (covering edges and the
``phi`` labels) is tabulated for D and E; for the remaining types it follows
from supports, since there every cascade root's parent is the one with the
smallest support strictly containing its own.
"""
from __future__ import annotations

from typing import Dict, FrozenSet, List, Tuple

from .rootsys import Root, RootSystem, SimpleType, build_root_system, from_epsilon, sub

_EXCEPTIONAL: Dict[Tuple[str, int], List[Root]] = {
    ("G", 2): [(3, 2), (1, 0)],
    ("F", 4): [(2, 4, 3, 2), (2, 2, 1, 0), (0, 2, 1, 0), (0, 0, 1, 0)],
    ("E", 6): [(1, 2, 3, 2, 1, 2), (1, 1, 1, 1, 1, 0), (0, 1, 1, 1, 0, 0),
               (0, 0, 1, 0, 0, 0)],
    ("E", 7): [(1, 2, 3, 4, 3, 2, 2), (1, 2, 2, 2, 1, 0, 1), (1, 0, 0, 0, 0, 0, 0),
               (0, 0, 1, 2, 1, 0, 1), (0, 0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0),
               (0, 0, 0, 0, 0, 0, 1)],
    ("E", 8): [(2, 3, 4, 5, 6, 4, 2, 3), (0, 1, 2, 3, 4, 3, 2, 2),
               (0, 1, 2, 2, 2, 1, 0, 1), (0, 1, 0, 0, 0, 0, 0, 0),
               (0, 0, 0, 1, 2, 1, 0, 1), (0, 0, 0, 1, 0, 0, 0, 0),
               (0, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 0, 0, 1)],
}

# 1-based node -> phi labels, and 1-based covering edges
_E_HASSE: Dict[int, Tuple[List[FrozenSet[int]], List[Tuple[int, int]]]] = {
    6: ([frozenset({6}), frozenset({1, 5}), frozenset({2, 4}), frozenset({3})],
        [(1, 2), (2, 3), (3, 4)]),
    7: ([frozenset({6}), frozenset({2}), frozenset({1}), frozenset({4}),
         frozenset({3}), frozenset({5}), frozenset({7})],
        [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (4, 7)]),
    8: ([frozenset({1}), frozenset({7}), frozenset({3}), frozenset({2}),
         frozenset({5}), frozenset({4}), frozenset({6}), frozenset({8})],
        [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7), (5, 8)]),
}


def _eps(n: int, *pairs: Tuple[int, int]) -> List[int]:
    v = [0] * n
    for i, s in pairs:
        v[i - 1] += s
    return v


def _classical_eps(stype: SimpleType) -> List[List[int]]:
    f, r = stype.family, stype.rank
    if f == "A":
        return [_eps(r + 1, (i, 1), (r + 2 - i, -1)) for i in range(1, (r + 1) // 2 + 1)]
    if f == "C":
        return [_eps(r, (i, 2)) for i in range(1, r + 1)]
    out = []
    for i in range(1, r // 2 + 1):
        out.append(_eps(r, (2 * i - 1, 1), (2 * i, 1)))
        out.append(_eps(r, (2 * i - 1, 1), (2 * i, -1)))
    if f == "B" and r % 2:
        out.append(_eps(r, (r, 1)))
    return out


def golden_cascade(stype: SimpleType) -> List[Root]:
    """Reference cascade roots in table order."""
    key = (stype.family, stype.rank)
    if key in _EXCEPTIONAL:
        return list(_EXCEPTIONAL[key])
    if stype.family == "A" and stype.rank == 1:
        return [(1,)]
    return [from_epsilon(stype, v) for v in _classical_eps(stype)]


def golden_phi(rs: RootSystem, beta: Root) -> FrozenSet[int]:
    """Simple roots ``alpha`` with ``beta - alpha`` a positive root or zero."""
    out = set()
    for i in range(1, rs.rank + 1):
        d = sub(beta, rs.simple(i))
        if not any(d) or d in rs.index_of:
            out.add(i)
    return frozenset(out)


def _d_hasse(r: int) -> Tuple[List[FrozenSet[int]], List[Tuple[int, int]]]:
    n, odd = divmod(r, 2)
    phi: List[FrozenSet[int]] = []
    edges: List[Tuple[int, int]] = []
    if not odd:
        for i in range(1, n):
            phi += [frozenset({2 * i}), frozenset({2 * i - 1})]
        phi += [frozenset({2 * n}), frozenset({2 * n - 1})]
        for i in range(1, n):
            edges += [(2 * i - 1, 2 * i), (2 * i - 1, 2 * i + 1)]
        edges.append((2 * n - 3, 2 * n))
    else:
        for i in range(1, n):
            phi += [frozenset({2 * i}), frozenset({2 * i - 1})]
        phi += [frozenset({2 * n, 2 * n + 1}), frozenset({2 * n - 1})]
        for i in range(1, n + 1):
            edges.append((2 * i - 1, 2 * i))
            if i < n:
                edges.append((2 * i - 1, 2 * i + 1))
    return phi, sorted(edges, key=lambda e: (e[1], e[0]))


def _support_edges(roots: List[Root]) -> List[Tuple[int, int]]:
    supp = [frozenset(i for i, x in enumerate(r) if x) for r in roots]
    edges = []
    for j, s in enumerate(supp):
        bigger = [i for i, t in enumerate(supp) if s < t]
        if bigger:
            parent = min(bigger, key=lambda i: len(supp[i]))
            edges.append((parent + 1, j + 1))
    return edges


def golden_hasse(stype: SimpleType) -> Tuple[List[FrozenSet[int]], List[Tuple[int, int]]]:
    """``phi`` labels per node and 1-based covering edges ``(parent, child)``."""
    if stype.family == "E":
        phi, edges = _E_HASSE[stype.rank]
        return list(phi), list(edges)
    if stype.family == "D":
        return _d_hasse(stype.rank)
    rs = build_root_system(stype)
    roots = golden_cascade(stype)
    return [golden_phi(rs, b) for b in roots], _support_edges(roots)


def has_figure(stype: SimpleType) -> bool:
    """Whether the Hasse data for ``stype`` is tabulated rather than derived."""
    return stype.family in "DE"


def golden_mismatches(stype: SimpleType, cascade) -> List[str]:
    """Differences between a computed cascade and the reference tables.

    Nodes are matched by their root, so any linear extension of the poset
    is accepted; only the root set, the covering relation and ``phi``
    are compared.
    """
    from .cascade import hasse_edges

    rs = build_root_system(stype)
    want = golden_cascade(stype)
    got = list(cascade.roots)
    if len(set(want)) != len(want) or set(got) != set(want) or len(got) != len(want):
        return [f"{stype}: cascade roots {got} != {want}"]
    msgs: List[str] = []
    phi, edges = golden_hasse(stype)
    want_phi = dict(zip(want, phi))
    for e in cascade:
        if e.phi != want_phi[e.root]:
            msgs.append(f"{stype}: phi({e.label}) = {sorted(e.phi)}, "
                        f"expected {sorted(want_phi[e.root])}")
        if e.phi != golden_phi(rs, e.root):
            msgs.append(f"{stype}: phi({e.label}) disagrees with the root-difference rule")
    want_edges = {(want[p - 1], want[ch - 1]) for p, ch in edges}
    got_edges = {(got[p], got[ch]) for p, ch in hasse_edges(cascade)}
    if got_edges != want_edges:
        msgs.append(f"{stype}: Hasse edges differ: extra {sorted(got_edges - want_edges)}, "
                    f"missing {sorted(want_edges - got_edges)}")
    return msgs


GOLDEN_TYPES: Tuple[SimpleType, ...] = tuple(
    [SimpleType("A", r) for r in range(1, 9)]
    + [SimpleType("B", r) for r in range(2, 9)]
    + [SimpleType("C", r) for r in range(1, 9)]
    + [SimpleType("D", r) for r in range(4, 9)]
    + [SimpleType("E", 6), SimpleType("E", 7), SimpleType("E", 8),
       SimpleType("F", 4), SimpleType("G", 2)]
)
