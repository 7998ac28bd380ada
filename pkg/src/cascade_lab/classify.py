"""Classification predicates and census counts for nilradicals."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

from .cascade import Cascade, compute_cascade
from .errors import InternalInconsistency, WrongType
from .nilradical import Nilradical, build_nilradical, nilradical_roots
from .rootsys import RootSystem, SimpleType, build_root_system
from .stabiliser import cascade_stabiliser, has_generic_stabiliser

FREENESS_TAGS = (
    "proven_type_AC",
    "proven_cp",
    "proven_small_cascade",
    "proven_abelian_sandwich",
    "conjectured",
)

CpWitness = Union[str, int, None]


@dataclass(frozen=True)
class ClassificationReport:
    square_integrable: bool
    has_cp: bool
    cp_witness: CpWitness
    freeness: str
    trdeg_SU: int
    trdeg_SN: int
    finitely_generated: bool = True
    rational_singularities: bool = True


def all_t_sets(rank: int) -> Iterator[FrozenSet[int]]:
    """Nonempty subsets of ``1..rank`` by size, then lexicographically."""
    labels = range(1, rank + 1)
    for m in range(1, rank + 1):
        for t in combinations(labels, m):
            yield frozenset(t)


def is_square_integrable(n: Nilradical) -> bool:
    top = n.grading[n.depth]
    return n.depth <= 2 and all(b in top for b in n.cascade_roots)


def square_integrable_census(stype: SimpleType) -> Dict[int, List[FrozenSet[int]]]:
    """Square integrable nilradicals of ``stype``, split by depth (1 or 2)."""
    rs = build_root_system(stype)
    c = compute_cascade(rs)
    out: Dict[int, List[FrozenSet[int]]] = {1: [], 2: []}
    for t in all_t_sets(stype.rank):
        n = build_nilradical(rs, c, t)
        if is_square_integrable(n):
            out[n.depth].append(t)
    return out


def abelian_labels(rs: RootSystem) -> List[int]:
    """Simple roots ``alpha`` with ``[theta:alpha] = 1``."""
    return [i + 1 for i, x in enumerate(rs.theta) if x == 1]


@lru_cache(maxsize=None)
def _optimised_abelian_roots(rs: RootSystem, a: int) -> FrozenSet:
    c = compute_cascade(rs)
    return nilradical_roots(rs, build_nilradical(rs, c, {a}).tilde_t)


def has_cp(rs: RootSystem, c: Cascade, n: Nilradical) -> Tuple[bool, CpWitness]:
    """Existence of a commutative polarisation.

    Either ``n`` is the Heisenberg nilradical, or ``n`` sits inside the
    optimisation of some abelian nilradical ``n_alpha``.  Among the valid
    ``alpha`` the witness prefers one for which ``n`` and ``n_alpha``
    meet in exactly ``b(n)`` roots (so the intersection is a CP-ideal);
    failing that, the first valid label.
    """
    if n.roots == c[0].heisenberg:
        return True, "heisenberg"
    candidates = [a for a in abelian_labels(rs)
                  if n.roots <= _optimised_abelian_roots(rs, a)]
    if not candidates:
        return False, None
    for a in candidates:
        if len(n.roots & nilradical_roots(rs, frozenset({a}))) == n.b:
            return True, a
    return True, candidates[0]


def cp_ideal_size(rs: RootSystem, n: Nilradical, alpha: int) -> int:
    return len(n.roots & nilradical_roots(rs, frozenset({alpha})))


def freeness_status(rs: RootSystem, c: Cascade, n: Nilradical,
                    cp: Optional[bool] = None) -> str:
    """Which known result makes ``S(n)`` free over its ``U``-invariants."""
    if rs.stype.family in "AC":
        return "proven_type_AC"
    if cp is None:
        cp = has_cp(rs, c, n)[0]
    if cp:
        return "proven_cp"
    if len(n.cascade_indices) <= 3:
        return "proven_small_cascade"
    for a in abelian_labels(rs):
        if nilradical_roots(rs, frozenset({a})) <= n.roots <= _optimised_abelian_roots(rs, a):
            return "proven_abelian_sandwich"
    return "conjectured"


def classify(rs: RootSystem, c: Cascade, n: Nilradical) -> ClassificationReport:
    cp, witness = has_cp(rs, c, n)
    return ClassificationReport(
        square_integrable=is_square_integrable(n),
        has_cp=cp,
        cp_witness=witness,
        freeness=freeness_status(rs, c, n, cp),
        trdeg_SU=len(n.cascade_indices),
        trdeg_SN=n.index,
    )


def generic_closed_form(rank: int) -> int:
    """Number of ``A_rank`` nilradicals with a generic stabiliser."""
    m, odd = divmod(rank + 1, 2)
    if odd:  # A_{2m}
        return 3 * (2 ** m - 1)
    return 2 ** (m + 1) - 3


def generic_census(stype: SimpleType) -> int:
    """Count nonempty ``T`` whose nilradical has a generic stabiliser."""
    rs = build_root_system(stype)
    c = compute_cascade(rs)
    count = 0
    for t in all_t_sets(stype.rank):
        n = build_nilradical(rs, c, t)
        count += has_generic_stabiliser(rs, cascade_stabiliser(rs, c, n), n)[0]
    if stype.family == "A" and count != generic_closed_form(stype.rank):
        raise InternalInconsistency(
            f"{stype}: {count} generic nilradicals, closed form gives "
            f"{generic_closed_form(stype.rank)}")
    return count


def sl_symmetry_predicate(rs: RootSystem, c: Cascade, n: Nilradical) -> bool:
    """Diagram-symmetry test for type A: ``sigma(T') == T''``."""
    if rs.stype.family != "A":
        raise WrongType(f"the symmetry criterion is for type A, not {rs.stype}")
    r = rs.rank
    k = len(n.cascade_indices)
    t1 = {a for a in n.t_set if a <= k - 1}
    t2 = {a for a in n.t_set if a >= r + 2 - k}
    return {r + 1 - a for a in t1} == t2


def sl_generator_count(N: int, k: int) -> int:
    """Minimal number of generators of the Poisson centre of ``n_T`` in ``sl_N``
    for ``T = {alpha_{N-k}, ..., alpha_{N-1}}``."""
    if not (1 <= k and 2 * k <= N):
        raise ValueError(f"need 1 <= k <= N/2, got N={N}, k={k}")
    return sum(comb(N - k, j) for j in range(1, k + 1))
