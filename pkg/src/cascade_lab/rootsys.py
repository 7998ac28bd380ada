"""Positive root systems of the simple Lie algebras.

Roots are plain tuples of non-negative integers: the coefficients of the root
in the basis of simple roots.  Simple roots are labelled ``1..rank`` following
the Vinberg-Onishchik numbering:

* ``A_n``, ``B_n``, ``C_n``, ``D_n`` as in Bourbaki (``B_n``: ``alpha_n`` short,
  ``C_n``: ``alpha_n`` long, ``D_n``: ``alpha_{n-1}, alpha_n`` are the fork).
* ``E_6``: chain ``1-2-3-4-5`` with ``6`` attached to ``3``.
* ``E_7``: chain ``1-...-6`` with ``7`` attached to ``4``.
* ``E_8``: chain ``1-...-7`` with ``8`` attached to ``5``.
* ``F_4``: chain ``1-2=>3-4`` with ``alpha_1, alpha_2`` short.
* ``G_2``: ``alpha_1`` short, ``alpha_2`` long.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .errors import InvalidRank, InvalidRoot

Root = Tuple[int, ...]

FAMILIES = "ABCDEFG"

# number of positive roots, used as a self-check after generation
_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 1,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(fam)
        if ok is None:
            raise InvalidRank(f"unknown family {self.family!r}")
        if not isinstance(n, int) or not ok:
            raise InvalidRank(f"{fam}_{n} is not a constructible simple type")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse ``"E6"``, ``"e_6"`` or ``"A 3"``."""
        s = text.replace("_", "").replace(" ", "")
        if len(s) < 2 or not s[1:].isdigit():
            raise InvalidRank(f"cannot parse simple type {text!r}")
        return cls(s[0].upper(), int(s[1:]))


def _dynkin(stype: SimpleType) -> Tuple[List[Tuple[int, int]], List[int]]:
    """Edges (0-based) and squared lengths (short roots have length 2)."""
    fam, n = stype.family, stype.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if fam == "A":
        return chain, [2] * n
    if fam == "B":
        return chain, [4] * (n - 1) + [2]
    if fam == "C":
        return chain, [2] * (n - 1) + [4] if n > 1 else [2]
    if fam == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)], [2] * n
    if fam == "E":
        branch = {6: 2, 7: 3, 8: 4}[n]
        return [(i, i + 1) for i in range(n - 2)] + [(branch, n - 1)], [2] * n
    if fam == "F":
        return chain, [2, 2, 4, 4]
    if fam == "G":
        return chain, [2, 6]
    raise InvalidRank(fam)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Positive roots of a simple Lie algebra, with the invariant form.

    ``positive_roots`` is sorted by (height, coefficients); the highest root
    is therefore the last entry.
    """

    stype: SimpleType
    cartan: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[int, ...]
    form: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Root, ...]
    index_of: Dict[Root, int] = field(repr=False)
    edges: Tuple[Tuple[int, int], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.stype.rank

    @property
    def highest_root(self) -> int:
        return len(self.positive_roots) - 1

    @property
    def theta(self) -> Root:
        return self.positive_roots[-1]

    def simple(self, i: int) -> Root:
        """The simple root ``alpha_i`` (1-based label)."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def inner(self, g: Iterable[int], h: Iterable[int]) -> int:
        g, h = tuple(g), tuple(h)
        return sum(g[i] * self.form[i][j] * h[j]
                   for i in range(self.rank) if g[i]
                   for j in range(self.rank) if h[j])

    def norm(self, g: Iterable[int]) -> int:
        return self.inner(g, g)

    def is_positive_root(self, coeffs: Iterable[int]) -> bool:
        return tuple(coeffs) in self.index_of

    def neighbours(self, i: int) -> FrozenSet[int]:
        """Labels adjacent to ``alpha_i`` in the Dynkin diagram."""
        out = set()
        for a, b in self.edges:
            if a + 1 == i:
                out.add(b + 1)
            elif b + 1 == i:
                out.add(a + 1)
        return frozenset(out)

    def __repr__(self):
        return f"RootSystem({self.stype}, {len(self.positive_roots)} positive roots)"


def height(g: Root) -> int:
    return sum(g)


def add(g: Root, h: Root) -> Root:
    return tuple(a + b for a, b in zip(g, h))


def sub(g: Root, h: Root) -> Root:
    return tuple(a - b for a, b in zip(g, h))


def neg(g: Root) -> Root:
    return tuple(-a for a in g)


@lru_cache(maxsize=None)
def build_root_system(stype: SimpleType) -> RootSystem:
    """Generate the positive roots of ``stype`` by root strings."""
    edges, lengths = _dynkin(stype)
    n = stype.rank
    form = [[0] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = lengths[i]
    for a, b in edges:
        form[a][b] = form[b][a] = -max(lengths[a], lengths[b]) // 2
    cartan = [[2 * form[i][j] // form[i][i] for j in range(n)] for i in range(n)]
    symmetrizer = [l // 2 for l in lengths]

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for g in layer:
            for i in range(n):
                # p: how far the alpha_i-string extends downward from g
                p = 0
                down = list(g)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pairing = sum(g[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(g)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt

    roots = tuple(sorted(found, key=lambda r: (sum(r), r)))
    expected = _ROOT_COUNTS[stype.family](n)
    if len(roots) != expected:  # pragma: no cover - generation bug
        raise AssertionError(f"{stype}: generated {len(roots)} roots, expected {expected}")
    return RootSystem(
        stype=stype,
        cartan=tuple(map(tuple, cartan)),
        symmetrizer=tuple(symmetrizer),
        form=tuple(map(tuple, form)),
        positive_roots=roots,
        index_of={r: k for k, r in enumerate(roots)},
        edges=tuple(edges),
    )


def root_order_leq(rs: RootSystem, g: Root, h: Root) -> bool:
    """``g <= h`` in the root order: componentwise comparison."""
    _check(rs, g)
    _check(rs, h)
    return all(a <= b for a, b in zip(g, h))


def support(rs: RootSystem, g: Root) -> FrozenSet[int]:
    """1-based labels of the simple roots occurring in ``g``."""
    _check(rs, g)
    return frozenset(i + 1 for i, c in enumerate(g) if c)


def is_root(rs: RootSystem, coeffs: Iterable[int]) -> bool:
    """True for positive roots and their negatives; zero is not a root."""
    v = tuple(coeffs)
    if len(v) != rs.rank:
        raise InvalidRoot(f"expected {rs.rank} coefficients, got {len(v)}")
    return v in rs.index_of or neg(v) in rs.index_of


def is_connected(rs: RootSystem, labels: Iterable[int]) -> bool:
    """Whether ``labels`` spans a connected subdiagram (empty counts as connected)."""
    labels = set(labels)
    if not labels:
        return True
    start = next(iter(labels))
    seen = {start}
    stack = [start]
    while stack:
        for j in rs.neighbours(stack.pop()):
            if j in labels and j not in seen:
                seen.add(j)
                stack.append(j)
    return seen == labels


def components(rs: RootSystem, labels: Iterable[int]) -> List[FrozenSet[int]]:
    """Connected components of a set of simple-root labels, sorted lexicographically."""
    rest = set(labels)
    out = []
    while rest:
        start = min(rest)
        comp = {start}
        stack = [start]
        while stack:
            for j in rs.neighbours(stack.pop()):
                if j in rest and j not in comp:
                    comp.add(j)
                    stack.append(j)
        rest -= comp
        out.append(frozenset(comp))
    return sorted(out, key=sorted)


def diagram_path(rs: RootSystem, a: int, b: int, within: Iterable[int]) -> List[int]:
    """The unique simple path from ``a`` to ``b`` inside the subdiagram ``within``."""
    allowed = set(within)
    prev = {a: None}
    queue = [a]
    while queue:
        cur = queue.pop(0)
        if cur == b:
            break
        for j in sorted(rs.neighbours(cur)):
            if j in allowed and j not in prev:
                prev[j] = cur
                queue.append(j)
    if b not in prev:
        raise ValueError(f"alpha_{a} and alpha_{b} are not connected")
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def _check(rs: RootSystem, g: Root) -> None:
    if tuple(g) not in rs.index_of:
        raise InvalidRoot(f"{g} is not a positive root of {rs.stype}")


# epsilon coordinates, display only ------------------------------------------

def to_epsilon(stype: SimpleType, g: Root) -> Tuple:
    """Coordinates of ``g`` in the standard orthonormal basis (classical types).

    Type ``A_n`` uses ``n + 1`` coordinates.  Entries are integers.
    """
    fam, n = stype.family, stype.rank
    if fam == "A":
        v = [0] * (n + 1)
        for i, c in enumerate(g):
            v[i] += c
            v[i + 1] -= c
        return tuple(v)
    if fam not in "BCD":
        raise InvalidRank(f"epsilon coordinates are defined for classical types, not {stype}")
    v = [0] * n
    for i, c in enumerate(g):
        if i < n - 1 and not (fam == "D" and i == n - 2):
            v[i] += c
            v[i + 1] -= c
        elif fam == "B":  # alpha_n = e_n
            v[n - 1] += c
        elif fam == "C":  # alpha_n = 2e_n
            v[n - 1] += 2 * c
        elif i == n - 2:  # D: alpha_{n-1} = e_{n-1} - e_n
            v[n - 2] += c
            v[n - 1] -= c
        else:  # D: alpha_n = e_{n-1} + e_n
            v[n - 2] += c
            v[n - 1] += c
    return tuple(v)


def from_epsilon(stype: SimpleType, v: Iterable[int]) -> Root:
    """Inverse of :func:`to_epsilon`."""
    fam, n = stype.family, stype.rank
    v = list(v)
    partial = [sum(v[: k + 1]) for k in range(len(v))]
    if fam == "A":
        if len(v) != n + 1 or sum(v) != 0:
            raise InvalidRoot(f"{v} is not in the A_{n} root lattice")
        return tuple(partial[:n])
    if fam == "B":
        return tuple(partial)
    if fam == "C":
        if partial[-1] % 2:
            raise InvalidRoot(f"{v} is not in the C_{n} root lattice")
        return tuple(partial[:-1]) + (partial[-1] // 2,)
    if fam == "D":
        s, t = partial[n - 2], v[n - 1]
        if (s - t) % 2:
            raise InvalidRoot(f"{v} is not in the D_{n} root lattice")
        return tuple(partial[: n - 2]) + ((s - t) // 2, (s + t) // 2)
    raise InvalidRank(f"epsilon coordinates are defined for classical types, not {stype}")


def format_epsilon(stype: SimpleType, g: Root) -> str:
    """Human-readable form such as ``e1+e2`` or ``2e3``."""
    terms = []
    for i, c in enumerate(to_epsilon(stype, g)):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if terms else "")
        terms.append(f"{sign}{mag}e{i + 1}")
    return "".join(terms) or "0"
