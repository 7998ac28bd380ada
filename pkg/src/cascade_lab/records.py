"""Flat analysis records and their JSON / CSV encodings.

A record is keyed by ``(type, rank, T)``; every root set in it is recomputed
from that key, so decoding is only ever used for comparison and export.
"""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import asdict, dataclass, fields
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .cascade import compute_cascade
from .classify import classify
from .nilradical import build_nilradical, is_optimal, sorted_roots
from .rootsys import Root, SimpleType, build_root_system
from .stabiliser import full_report


@dataclass(frozen=True)
class OracleBlock:
    stab_dim: int
    index_estimate: int
    saturation_dim: int
    agrees: bool


@dataclass(frozen=True)
class AnalysisRecord:
    type: str
    rank: int
    T: Tuple[int, ...]
    dim: int
    depth: int
    dim_centre: int
    cascade: Tuple[Root, ...]
    tilde_T: Tuple[int, ...]
    optimal: bool
    index: int
    b: int
    stab_roots: Tuple[Root, ...]
    generic: bool
    generic_witness: Optional[Tuple[Root, Root]]
    frobenius_roots: Tuple[Root, ...]
    frobenius_dim: int
    quasi_quadratic: bool
    square_integrable: bool
    has_cp: bool
    cp_witness: Union[str, int, None]
    freeness: str
    trdeg_SU: int
    trdeg_SN: int
    oracle: Optional[OracleBlock] = None

    # --- JSON ---------------------------------------------------------------

    def to_dict(self) -> Dict:
        d = asdict(self)
        for k in ("T", "tilde_T"):
            d[k] = list(d[k])
        for k in ("cascade", "stab_roots", "frobenius_roots"):
            d[k] = [list(r) for r in d[k]]
        if d["generic_witness"] is not None:
            d["generic_witness"] = [list(r) for r in d["generic_witness"]]
        return d

    @classmethod
    def from_dict(cls, d: Dict) -> "AnalysisRecord":
        d = dict(d)
        for k in ("T", "tilde_T"):
            d[k] = tuple(d[k])
        for k in ("cascade", "stab_roots", "frobenius_roots"):
            d[k] = tuple(tuple(r) for r in d[k])
        if d.get("generic_witness") is not None:
            d["generic_witness"] = tuple(tuple(r) for r in d["generic_witness"])
        if d.get("oracle") is not None:
            d["oracle"] = OracleBlock(**d["oracle"])
        return cls(**d)

    # --- CSV ----------------------------------------------------------------

    def to_row(self) -> Dict[str, str]:
        row: Dict[str, str] = {}
        for f in fields(self):
            if f.name == "oracle":
                continue
            row[f.name] = _encode(f.name, getattr(self, f.name))
        for f in fields(OracleBlock):
            val = getattr(self.oracle, f.name) if self.oracle else None
            row[f"oracle_{f.name}"] = "" if val is None else _encode(f.name, val)
        return row

    @classmethod
    def from_row(cls, row: Dict[str, str]) -> "AnalysisRecord":
        kw = {}
        for f in fields(cls):
            if f.name != "oracle":
                kw[f.name] = _decode(f.name, row[f.name])
        if row.get("oracle_stab_dim", ""):
            kw["oracle"] = OracleBlock(
                stab_dim=int(row["oracle_stab_dim"]),
                index_estimate=int(row["oracle_index_estimate"]),
                saturation_dim=int(row["oracle_saturation_dim"]),
                agrees=row["oracle_agrees"] == "true",
            )
        return cls(**kw)


CSV_COLUMNS: List[str] = [f.name for f in fields(AnalysisRecord) if f.name != "oracle"] + \
    [f"oracle_{f.name}" for f in fields(OracleBlock)]

_ROOT_SETS = {"cascade", "stab_roots", "frobenius_roots", "generic_witness"}
_INT_LISTS = {"T", "tilde_T"}
_BOOLS = {"optimal", "generic", "quasi_quadratic", "square_integrable", "has_cp", "agrees"}
_INTS = {"rank", "dim", "depth", "dim_centre", "index", "b", "frobenius_dim",
         "trdeg_SU", "trdeg_SN"}


def encode_root(r: Sequence[int]) -> str:
    """Coefficients written digit by digit, e.g. ``(0,1,1)`` -> ``"011"``."""
    if any(not 0 <= x <= 9 for x in r):
        raise ValueError(f"cannot encode {r} as a digit string")
    return "".join(map(str, r))


def decode_root(s: str) -> Root:
    return tuple(int(ch) for ch in s)


def _encode(name: str, val) -> str:
    if name in _ROOT_SETS:
        return "" if val is None else ";".join(encode_root(r) for r in val)
    if name in _INT_LISTS:
        return ";".join(map(str, val))
    if name in _BOOLS:
        return "true" if val else "false"
    if val is None:
        return ""
    return str(val)


def _decode(name: str, s: str):
    if name in _ROOT_SETS:
        if name == "generic_witness" and not s:
            return None
        return tuple(decode_root(x) for x in s.split(";")) if s else ()
    if name in _INT_LISTS:
        return tuple(int(x) for x in s.split(";")) if s else ()
    if name in _BOOLS:
        return s == "true"
    if name in _INTS:
        return int(s)
    if name == "cp_witness":
        if not s:
            return None
        return s if s == "heisenberg" else int(s)
    return s


_INT_ARRAY = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps(obj) -> str:
    """Indented JSON with integer arrays kept on one line."""
    text = json.dumps(obj, indent=2)
    return _INT_ARRAY.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)


def records_to_csv(records: Iterable[AnalysisRecord]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(r.to_row())
    return buf.getvalue()


def records_from_csv(text: str) -> List[AnalysisRecord]:
    return [AnalysisRecord.from_row(row) for row in csv.DictReader(io.StringIO(text))]


def build_record(stype: SimpleType, t_set: Iterable[int], oracle: bool = False,
                 samples: int = 5, seed: Optional[int] = None) -> AnalysisRecord:
    """Analyse ``n_T`` for one ``T`` and pack the results."""
    rs = build_root_system(stype)
    c = compute_cascade(rs)
    n = build_nilradical(rs, c, t_set)
    rep = full_report(rs, c, n)
    cls_ = classify(rs, c, n)
    block = None
    if oracle:
        from .oracle import run_oracle
        o = run_oracle(rs, c, n, samples=samples, seed=seed)
        block = OracleBlock(o.stab_dim, o.index_estimate, o.saturation_dim, o.agrees)
    return AnalysisRecord(
        type=stype.family,
        rank=stype.rank,
        T=tuple(sorted(n.t_set)),
        dim=n.dim,
        depth=n.depth,
        dim_centre=len(n.centre_roots),
        cascade=n.cascade_roots,
        tilde_T=tuple(sorted(n.tilde_t)),
        optimal=is_optimal(n),
        index=n.index,
        b=n.b,
        stab_roots=tuple(sorted_roots(rs, rep.stab_roots)),
        generic=bool(rep.generic),
        generic_witness=rep.witness,
        frobenius_roots=tuple(sorted_roots(rs, rep.frobenius_roots)),
        frobenius_dim=len(rep.frobenius_roots),
        quasi_quadratic=bool(rep.quasi_quadratic),
        square_integrable=cls_.square_integrable,
        has_cp=cls_.has_cp,
        cp_witness=cls_.cp_witness,
        freeness=cls_.freeness,
        trdeg_SU=cls_.trdeg_SU,
        trdeg_SN=cls_.trdeg_SN,
        oracle=block,
    )
