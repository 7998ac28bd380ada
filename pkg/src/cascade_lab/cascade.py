"""The Kostant cascade of strongly orthogonal roots as a poset."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

from .errors import InvalidSimpleRoot
from .rootsys import Root, RootSystem, components


@dataclass(frozen=True)
class CascadeElement:
    """One cascade root ``beta_i`` with its Heisenberg data.

    ``index`` is 0-based (``beta_1`` has index 0); ``parent`` likewise.
    Simple-root labels in ``subsystem_simples`` and ``phi`` are 1-based.
    """

    index: int
    root: Root
    parent: Optional[int]
    subsystem_simples: FrozenSet[int]
    phi: FrozenSet[int]
    heisenberg: FrozenSet[Root]

    @property
    def label(self) -> str:
        return f"beta_{self.index + 1}"


@dataclass(frozen=True)
class Cascade:
    """Cascade elements in depth-first order (parents precede children)."""

    elements: Tuple[CascadeElement, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i) -> CascadeElement:
        return self.elements[i]

    @property
    def roots(self) -> Tuple[Root, ...]:
        return tuple(e.root for e in self.elements)

    def position(self, root: Root) -> Optional[int]:
        for e in self.elements:
            if e.root == root:
                return e.index
        return None

    def children(self, i: int) -> List[int]:
        return [e.index for e in self.elements if e.parent == i]

    def leq(self, j: int, i: int) -> bool:
        """``beta_j <= beta_i`` in the cascade poset (ancestor relation)."""
        while j is not None:
            if j == i:
                return True
            j = self.elements[j].parent
        return False


@lru_cache(maxsize=None)
def compute_cascade(rs: RootSystem) -> Cascade:
    """Build the cascade recursively from the highest root.

    At each step the highest root ``beta`` of the current irreducible
    subsystem is recorded together with its Heisenberg subset (roots of the
    subsystem not orthogonal to ``beta``); the simple roots orthogonal to
    ``beta`` are split into connected components and processed in
    lexicographic order of their labels.
    """
    elements: List[CascadeElement] = []

    def visit(simples: FrozenSet[int], parent: Optional[int]) -> None:
        inside = [g for g in rs.positive_roots
                  if all(c == 0 or (i + 1) in simples for i, c in enumerate(g))]
        beta = max(inside, key=sum)
        heis = frozenset(g for g in inside if rs.inner(g, beta) != 0)
        phi = frozenset(i for i in simples if rs.simple(i) in heis)
        idx = len(elements)
        elements.append(CascadeElement(idx, beta, parent, simples, phi, heis))
        orth = [i for i in simples if rs.inner(rs.simple(i), beta) == 0]
        for comp in components(rs, orth):
            visit(comp, idx)

    visit(frozenset(range(1, rs.rank + 1)), None)
    return Cascade(tuple(elements))


def phi_inverse(c: Cascade, alpha: int) -> int:
    """0-based index of the unique cascade element whose ``phi`` contains ``alpha``."""
    for e in c.elements:
        if alpha in e.phi:
            return e.index
    raise InvalidSimpleRoot(f"alpha_{alpha} is not a simple root of this cascade")


def hasse_edges(c: Cascade) -> List[Tuple[int, int]]:
    """Covering relations as 0-based ``(parent, child)`` pairs, in child order."""
    return [(e.parent, e.index) for e in c.elements if e.parent is not None]
