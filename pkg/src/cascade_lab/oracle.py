"""Independent checks by exact linear algebra over a Chevalley basis.

Nothing in here reads the combinatorial stabiliser formula.  The bracket
table is built from extraspecial pairs, the coadjoint action of ``n`` at the
cascade point is written down as an integer matrix, and kernels and ranks are
taken with fraction-free elimination.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .cascade import Cascade
from .errors import InternalInconsistency
from .linalg import nullspace, rank
from .nilradical import Nilradical, sorted_roots
from .rootsys import Root, RootSystem, add, neg, sub
from .stabiliser import cascade_stabiliser

DEFAULT_SEED = 42
COORD_RANGE = 10 ** 6


def seed_from_env() -> int:
    raw = os.environ.get("CASCADE_LAB_SEED", "").strip()
    return int(raw) if raw else DEFAULT_SEED


def _is_positive(r: Root) -> bool:
    return any(x > 0 for x in r)


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """Chevalley structure constants ``N_{a,b}`` for positive ``a, b``.

    ``brackets`` holds every ordered pair of positive roots whose sum is a
    root.  Pairs involving negative roots are derived on demand from the
    usual identities, and ``cartan_pairings`` gives each coroot in terms of
    the simple coroots (used only by the Jacobi check).
    """

    rs: RootSystem
    brackets: Dict[Tuple[Root, Root], int] = field(repr=False)
    cartan_pairings: Dict[Root, Tuple[Fraction, ...]] = field(repr=False)
    extraspecial: Dict[Root, Tuple[Root, Root]] = field(repr=False)

    def is_root(self, r: Root) -> bool:
        if _is_positive(r):
            return r in self.rs.index_of
        return neg(r) in self.rs.index_of

    def N(self, r: Root, s: Root) -> int:
        """Coefficient of ``e_{r+s}`` in ``[e_r, e_s]`` (zero if not a root)."""
        t = add(r, s)
        if not any(t) or not self.is_root(t):
            return 0
        pr, ps = _is_positive(r), _is_positive(s)
        if pr and ps:
            return self.brackets[(r, s)]
        if not pr and not ps:
            return -self.brackets[(neg(r), neg(s))]
        # r + s + u = 0 with u = -(r+s); rotate to a same-sign pair
        u = neg(t)
        norm = self.rs.norm
        if _is_positive(s) == _is_positive(u):
            val = Fraction(norm(u), norm(r)) * self.N(s, u)
        else:
            val = Fraction(norm(u), norm(s)) * self.N(u, r)
        if val.denominator != 1:
            raise InternalInconsistency(f"non-integral N({r},{s}) = {val}")
        return int(val)


def _root_string_p(rs: RootSystem, a: Root, b: Root) -> int:
    """Largest ``p`` with ``b - p*a`` a root (``a, b`` positive)."""
    p = 0
    cur = sub(b, a)
    while True:
        if _is_positive(cur):
            ok = cur in rs.index_of
        else:
            ok = any(cur) and neg(cur) in rs.index_of
        if not ok:
            return p
        p += 1
        cur = sub(cur, a)


@lru_cache(maxsize=None)
def build_structure_constants(rs: RootSystem, weights: Optional[Tuple[int, ...]] = None,
                              flip: FrozenSet[Root] = frozenset()) -> StructureConstants:
    """Chevalley basis from extraspecial pairs.

    Positive roots are ordered by ``(sum w_i c_i, coeffs)``; with the default
    unit weights this is the canonical order.  Any strictly positive weights
    give an order compatible with addition, hence a valid (and in general
    different) choice of extraspecial pairs.  Roots listed in ``flip`` get the
    negative sign on their extraspecial constant.
    """
    w = weights or (1,) * rs.rank
    if len(w) != rs.rank or min(w) <= 0:
        raise ValueError("weights must be positive, one per simple root")
    key = lambda r: (sum(a * b for a, b in zip(w, r)), r)
    order = sorted(rs.positive_roots, key=key)
    pos = {r: i for i, r in enumerate(order)}
    norm = rs.norm
    table: Dict[Tuple[Root, Root], int] = {}
    extra: Dict[Root, Tuple[Root, Root]] = {}
    sc = StructureConstants(rs, table, {}, extra)

    for xi in order:
        pairs = [(a, sub(xi, a)) for a in order
                 if pos[a] < pos[xi] and sub(xi, a) in rs.index_of]
        if not pairs:
            continue
        g, d = min(pairs, key=lambda p: pos[p[0]])
        extra[xi] = (g, d)
        sign = -1 if xi in flip else 1
        ngd = sign * (_root_string_p(rs, g, d) + 1)
        table[(g, d)] = ngd
        table[(d, g)] = -ngd
        for a, b in pairs:
            if (a, b) in table or pos[a] > pos[b]:
                continue
            val = Fraction(0)
            da, ga = sub(d, a), sub(g, a)
            if any(da) and sc.is_root(da):
                val += Fraction(sc.N(d, neg(a)) * sc.N(g, neg(b)), norm(da))
            if any(ga) and sc.is_root(ga):
                val += Fraction(sc.N(neg(a), g) * sc.N(d, neg(b)), norm(ga))
            val *= Fraction(norm(xi), ngd)
            if val.denominator != 1 or val == 0:
                raise InternalInconsistency(f"bad structure constant for {a}+{b}: {val}")
            table[(a, b)] = int(val)
            table[(b, a)] = -int(val)

    for r in rs.positive_roots:
        nr = norm(r)
        sc.cartan_pairings[r] = tuple(Fraction(c * rs.norm(rs.simple(i + 1)), nr)
                                      for i, c in enumerate(r))
    return sc


# --- Jacobi check -----------------------------------------------------------

def _bracket(sc: StructureConstants, x, y) -> Dict:
    """Bracket of basis elements ``('e', root)`` / ``('h', i)``."""
    rs = sc.rs
    if x[0] == "h" and y[0] == "h":
        return {}
    if x[0] == "h":
        return {k: -v for k, v in _bracket(sc, y, x).items()}
    r = x[1]
    if y[0] == "h":
        i = y[1]
        pairing = sum(r[j] * rs.cartan[i][j] for j in range(rs.rank))
        return {x: -pairing} if pairing else {}
    s = y[1]
    t = add(r, s)
    if not any(t):
        co = sc.cartan_pairings[r] if _is_positive(r) else \
            tuple(-c for c in sc.cartan_pairings[s])
        return {("h", i): c for i, c in enumerate(co) if c}
    n = sc.N(r, s)
    return {("e", t): n} if n else {}


def _bracket_vec(sc, x, vec: Dict) -> Dict:
    out: Dict = {}
    for k, v in vec.items():
        for k2, v2 in _bracket(sc, x, k).items():
            out[k2] = out.get(k2, 0) + v * v2
    return {k: v for k, v in out.items() if v}


def jacobi_violations(sc: StructureConstants, sample: Optional[int] = None,
                      seed: int = 0) -> List[Tuple]:
    """Triples of basis vectors on which the Jacobi identity fails.

    Exhaustive over all triples of root vectors plus one Cartan element,
    unless ``sample`` is given, in which case that many random triples are
    tested.
    """
    rs = sc.rs
    roots = list(rs.positive_roots) + [neg(r) for r in rs.positive_roots]
    basis = [("e", r) for r in roots] + [("h", i) for i in range(rs.rank)]
    if sample is None:
        triples = ((x, y, z) for x, y, z in product(basis, repeat=3)
                   if x < y < z and sum(b[0] == "h" for b in (x, y, z)) <= 1)
    else:
        rng = random.Random(f"jacobi:{rs.stype}:{seed}")
        triples = (tuple(rng.choice(basis) for _ in range(3)) for _ in range(sample))
    bad = []
    for x, y, z in triples:
        total: Dict = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            for k, v in _bracket_vec(sc, a, _bracket(sc, b, c)).items():
                total[k] = total.get(k, 0) + v
        if any(total.values()):
            bad.append((x, y, z))
    return bad


# --- coadjoint matrices at the cascade point -------------------------------

def _action_matrix(sc: StructureConstants, n: Nilradical, columns: Sequence[Root],
                   coeffs: Optional[Sequence[int]] = None) -> Tuple[List[List[int]], List[Root]]:
    """Matrix of ``x -> pr_{n^-}[x, xi]`` for ``xi = sum c_b e_{-b}`` over ``K(n)``.

    Rows are ``delta`` in ``Delta(n)`` (standing for ``e_{-delta}``), columns
    are the given positive roots.
    """
    rs = sc.rs
    rows = sorted_roots(rs, n.roots)
    row_of = {d: i for i, d in enumerate(rows)}
    if coeffs is None:
        coeffs = [1] * len(n.cascade_roots)
    m = [[0] * len(columns) for _ in rows]
    for j, g in enumerate(columns):
        for cb, b in zip(coeffs, n.cascade_roots):
            d = sub(b, g)  # [e_g, e_{-b}] lands in g_{-d}
            if d in row_of:
                m[row_of[d]][j] += cb * sc.N(g, neg(b))
    return m, rows


def _kernel_support(m: List[List[int]], columns: Sequence[Root]) -> Tuple[int, FrozenSet[Root]]:
    basis = nullspace(m, len(columns))
    supp = frozenset(columns[i] for v in basis for i, x in enumerate(v) if x)
    return len(basis), supp


def stabiliser_oracle(sc: StructureConstants, n: Nilradical,
                      coeffs: Optional[Sequence[int]] = None) -> Tuple[int, FrozenSet[Root]]:
    cols = sorted_roots(sc.rs, n.roots)
    m, _ = _action_matrix(sc, n, cols, coeffs)
    return _kernel_support(m, cols)


def saturation_oracle(sc: StructureConstants, n: Nilradical) -> int:
    cols = sorted_roots(sc.rs, n.roots)
    m, rows = _action_matrix(sc, n, cols)
    k = set(n.cascade_roots)
    units = [i for i, d in enumerate(rows) if d in k]
    aug = [row + [1 if i == u else 0 for u in units] for i, row in enumerate(m)]
    return rank(aug)


def tilde_stabiliser_oracle(sc: StructureConstants, n: Nilradical) -> bool:
    """Whether the ``n~``-stabiliser of the cascade point equals the ``n``-stabiliser."""
    cols = sorted_roots(sc.rs, n.tilde_roots)
    m, _ = _action_matrix(sc, n, cols)
    _, big = _kernel_support(m, cols)
    _, small = stabiliser_oracle(sc, n)
    return big == small


def index_oracle(sc: StructureConstants, n: Nilradical, samples: int = 5,
                 seed: Optional[int] = None) -> int:
    """``dim n`` minus the largest rank of ``B_xi`` over random integer ``xi``."""
    if samples < 1:
        raise ValueError("samples must be positive")
    if seed is None:
        seed = seed_from_env()
    roots = sorted_roots(sc.rs, n.roots)
    pos = {r: i for i, r in enumerate(roots)}
    pairs = []
    for i, g in enumerate(roots):
        for j, d in enumerate(roots):
            s = add(g, d)
            if s in pos:
                pairs.append((i, j, pos[s], sc.N(g, d)))
    tkey = ",".join(map(str, sorted(n.t_set)))
    best = 0
    for k in range(samples):
        rng = random.Random(f"{seed}:{n.stype}:{tkey}:{k}")
        xi = [rng.randint(-COORD_RANGE, COORD_RANGE) for _ in roots]
        b = [[0] * len(roots) for _ in roots]
        for i, j, s, c in pairs:
            b[i][j] = xi[s] * c
        best = max(best, rank(b))
    return len(roots) - best


@dataclass(frozen=True)
class OracleReport:
    stab_dim: int
    stab_root_support: FrozenSet[Root]
    index_estimate: int
    saturation_dim: int
    tilde_agrees: bool
    agrees: bool


def run_oracle(rs: RootSystem, c: Cascade, n: Nilradical, samples: int = 5,
               seed: Optional[int] = None,
               sc: Optional[StructureConstants] = None) -> OracleReport:
    """All oracle quantities for ``n`` and whether they match the formulas."""
    sc = sc or build_structure_constants(rs)
    stab_dim, supp = stabiliser_oracle(sc, n)
    idx = index_oracle(sc, n, samples, seed)
    sat = saturation_oracle(sc, n)
    tilde = tilde_stabiliser_oracle(sc, n)
    expected = cascade_stabiliser(rs, c, n).stab_roots
    agrees = (supp == expected and stab_dim == n.index and idx == n.index
              and sat == 2 * n.dim - len(n.tilde_roots) and tilde)
    return OracleReport(stab_dim, supp, idx, sat, tilde, agrees)
