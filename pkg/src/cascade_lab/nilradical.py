"""Nilradicals of standard parabolic subalgebras, keyed by a set T of simple roots."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Tuple

from .cascade import Cascade
from .errors import EmptyT, InvalidSimpleRoot
from .rootsys import Root, RootSystem, SimpleType


@dataclass(frozen=True)
class Nilradical:
    """Root data and numerical invariants of ``n_T``.

    ``cascade_indices`` are 0-based positions in the cascade; simple-root
    labels in ``t_set`` and ``tilde_t`` are 1-based.
    """

    stype: SimpleType
    t_set: FrozenSet[int]
    roots: FrozenSet[Root]
    grading: Dict[int, FrozenSet[Root]]
    depth: int
    centre_roots: FrozenSet[Root]
    cascade_indices: Tuple[int, ...]
    cascade_roots: Tuple[Root, ...]
    tilde_t: FrozenSet[int]
    tilde_roots: FrozenSet[Root]
    index: int
    b: int

    @property
    def dim(self) -> int:
        return len(self.roots)

    @property
    def is_abelian(self) -> bool:
        return self.depth == 1

    def __hash__(self):
        return hash((self.stype, self.t_set))

    def __eq__(self, other):
        if not isinstance(other, Nilradical):
            return NotImplemented
        return self.stype == other.stype and self.t_set == other.t_set


def t_degree(g: Root, t_set: Iterable[int]) -> int:
    """Sum of the coefficients of ``g`` on the simple roots in ``t_set``."""
    return sum(g[i - 1] for i in t_set)


@lru_cache(maxsize=4096)
def nilradical_roots(rs: RootSystem, t_set: FrozenSet[int]) -> FrozenSet[Root]:
    return frozenset(g for g in rs.positive_roots if t_degree(g, t_set) >= 1)


def _normalise_t(rs: RootSystem, t_set: Iterable[int]) -> FrozenSet[int]:
    t = frozenset(t_set)
    if not t:
        raise EmptyT("T must be a nonempty set of simple roots")
    bad = sorted(i for i in t if not isinstance(i, int) or not 1 <= i <= rs.rank)
    if bad:
        raise InvalidSimpleRoot(f"simple-root labels {bad} out of range 1..{rs.rank}")
    return t


def build_nilradical(rs: RootSystem, c: Cascade, t_set: Iterable[int]) -> Nilradical:
    """Assemble ``n_T``: roots, grading, centre, cascade restriction and index."""
    t = _normalise_t(rs, t_set)
    roots = nilradical_roots(rs, t)
    depth = t_degree(rs.theta, t)
    grading = {i: frozenset(g for g in roots if t_degree(g, t) == i)
               for i in range(1, depth + 1)}
    k_idx = tuple(e.index for e in c if e.root in roots)
    tilde_t = frozenset().union(*(c[j].phi for j in k_idx))
    tilde_roots = nilradical_roots(rs, tilde_t)
    index = len(tilde_roots) - len(roots) + len(k_idx)
    return Nilradical(
        stype=rs.stype,
        t_set=t,
        roots=roots,
        grading=grading,
        depth=depth,
        centre_roots=grading[depth],
        cascade_indices=k_idx,
        cascade_roots=tuple(c[j].root for j in k_idx),
        tilde_t=tilde_t,
        tilde_roots=tilde_roots,
        index=index,
        b=(len(roots) + index) // 2,
    )


def is_optimal(n: Nilradical) -> bool:
    return n.t_set == n.tilde_t


def optimisation(rs: RootSystem, c: Cascade, n: Nilradical) -> Nilradical:
    """The largest nilradical with the same cascade restriction as ``n``."""
    if is_optimal(n):
        return n
    return build_nilradical(rs, c, n.tilde_t)


def depth_and_centre(n: Nilradical) -> Tuple[int, FrozenSet[Root]]:
    return n.depth, n.centre_roots


def sorted_roots(rs: RootSystem, roots: Iterable[Root]) -> list:
    """Roots in canonical (height, lex) order."""
    return sorted(roots, key=rs.index_of.__getitem__)
