"""cascade-lab command line.

    cascade-lab analyze --type A --rank 6 --t 2,6 --oracle
    cascade-lab enumerate --type C --rank 4 --filter generic --format csv
    cascade-lab hasse --type E --rank 7 --format dot
    cascade-lab verify --type F --rank 4 --scope all
    cascade-lab tables --type B --rank 3

Exit codes: 0 success, 2 usage error, 3 verification or oracle failure.
"""
from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

import click

from .reference import golden_mismatches
from .cascade import compute_cascade, hasse_edges
from .classify import all_t_sets
from .errors import CascadeLabError, EmptyT, InvalidRank, InvalidSimpleRoot
from .nilradical import build_nilradical
from .oracle import (build_structure_constants, index_oracle, jacobi_violations,
                     saturation_oracle, seed_from_env, stabiliser_oracle,
                     tilde_stabiliser_oracle)
from .records import AnalysisRecord, build_record, dumps, records_to_csv
from .rootsys import SimpleType, build_root_system, format_epsilon
from .stabiliser import cascade_stabiliser

EXIT_USAGE = 2
EXIT_FAILED = 3

FILTERS: Dict[str, Callable[[AnalysisRecord], bool]] = {
    "all": lambda r: True,
    "generic": lambda r: r.generic,
    "square-integrable": lambda r: r.square_integrable,
    "quasi-quadratic": lambda r: r.quasi_quadratic,
    "has-cp": lambda r: r.has_cp,
    "optimal": lambda r: r.optimal,
}

type_option = click.option("--type", "family", required=True,
                           type=click.Choice(list("ABCDEFG"), case_sensitive=False),
                           help="Cartan type letter.")
rank_option = click.option("--rank", required=True, type=int, help="Rank of the simple algebra.")


def _stype(family: str, rank: int) -> SimpleType:
    try:
        return SimpleType(family.upper(), rank)
    except InvalidRank as e:
        raise click.BadParameter(str(e), param_hint="'--rank'")


def _parse_t(text: str, st: SimpleType) -> Tuple[int, ...]:
    try:
        t = tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}",
                                 param_hint="'--t'")
    if not t:
        raise click.BadParameter(str(EmptyT("T must be nonempty")), param_hint="'--t'")
    bad = [i for i in t if not 1 <= i <= st.rank]
    if bad:
        raise click.BadParameter(
            str(InvalidSimpleRoot(f"simple-root labels {bad} out of range 1..{st.rank}")),
            param_hint="'--t'")
    return t


def _epsilon_view(st: SimpleType, rec: AnalysisRecord) -> Dict:
    fmt = lambda rs: [format_epsilon(st, r) for r in rs]
    view = {"cascade": fmt(rec.cascade), "stab_roots": fmt(rec.stab_roots)}
    if rec.generic_witness:
        view["generic_witness"] = fmt(rec.generic_witness)
    return view


def _record_task(args) -> Dict:
    family, rank, t, oracle, seed = args
    return build_record(SimpleType(family, rank), t, oracle=oracle, seed=seed).to_dict()


def _run_pool(fn, tasks: List, jobs: int) -> List:
    """Map ``fn`` over ``tasks``; results come back in task order."""
    if jobs <= 1 or len(tasks) < 2:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Kostant cascade and coadjoint invariants of parabolic nilradicals."""


@main.command()
@type_option
@rank_option
@click.option("--t", "t_text", required=True, help="Comma-separated simple-root labels, 1-based.")
@click.option("--oracle", is_flag=True, help="Also run the structure-constant oracle.")
@click.option("--epsilon", is_flag=True, help="Add epsilon-coordinate strings (classical types).")
def analyze(family, rank, t_text, oracle, epsilon):
    """Analyse one nilradical n_T and print a JSON record."""
    st = _stype(family, rank)
    t = _parse_t(t_text, st)
    rec = build_record(st, t, oracle=oracle, seed=seed_from_env())
    out = rec.to_dict()
    if epsilon and st.family in "ABCD":
        out["epsilon"] = _epsilon_view(st, rec)
    click.echo(dumps(out))
    if rec.oracle is not None and not rec.oracle.agrees:
        click.echo(f"oracle disagrees for T={list(t)}", err=True)
        sys.exit(EXIT_FAILED)


def _enumerate(family, rank, filt, fmt, output, max_subsets, jobs, oracle):
    st = _stype(family, rank)
    total = 2 ** st.rank - 1
    if total > max_subsets:
        raise click.BadParameter(
            f"{st} has {total} subsets, above the cap of {max_subsets} (raise --max-subsets)",
            param_hint="'--rank'")
    seed = seed_from_env()
    tasks = [(st.family, st.rank, tuple(sorted(t)), oracle, seed) for t in all_t_sets(st.rank)]
    records = [AnalysisRecord.from_dict(d) for d in _run_pool(_record_task, tasks, jobs)]
    keep = [r for r in records if FILTERS[filt](r)]
    if fmt == "json":
        text = dumps([r.to_dict() for r in keep]) + "\n"
    else:
        text = records_to_csv(keep)
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    if oracle and not all(r.oracle.agrees for r in records):
        bad = next(r for r in records if not r.oracle.agrees)
        click.echo(f"oracle disagrees for T={list(bad.T)}", err=True)
        sys.exit(EXIT_FAILED)


_enum_options = [
    click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
                 help="Write to a file instead of stdout."),
    click.option("--max-subsets", type=int, default=2 ** 12 - 1, show_default=True,
                 help="Refuse types with more nonempty subsets than this."),
    click.option("--jobs", "-j", type=int, default=1, show_default=True,
                 help="Worker processes."),
    click.option("--oracle", is_flag=True, help="Attach oracle blocks."),
]


def _with(options):
    def deco(f):
        for o in reversed(options):
            f = o(f)
        return f
    return deco


@main.command(name="enumerate")
@type_option
@rank_option
@click.option("--filter", "filt", type=click.Choice(list(FILTERS)), default="all",
              show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
@_with(_enum_options)
def enumerate_cmd(family, rank, filt, fmt, output, max_subsets, jobs, oracle):
    """One record per nonempty T, optionally filtered."""
    _enumerate(family, rank, filt, fmt, output, max_subsets, jobs, oracle)


@main.command()
@type_option
@rank_option
@_with(_enum_options)
def tables(family, rank, output, max_subsets, jobs, oracle):
    """Same as ``enumerate --filter all --format csv``."""
    _enumerate(family, rank, "all", "csv", output, max_subsets, jobs, oracle)


def _phi_text(phi) -> str:
    return "{" + ",".join(f"α_{a}" for a in sorted(phi)) + "}"


def hasse_dot(st: SimpleType) -> str:
    c = compute_cascade(build_root_system(st))
    lines = [f'digraph "{st}" {{', "  rankdir=TB;"]
    for e in c:
        coeffs = "".join(map(str, e.root))
        lines.append(f'  b{e.index + 1} [label="β_{e.index + 1}", '
                     f'phi="{_phi_text(e.phi)}", root="{coeffs}"];')
    for p, ch in hasse_edges(c):
        lines.append(f"  b{p + 1} -> b{ch + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_ascii(st: SimpleType) -> str:
    c = compute_cascade(build_root_system(st))
    out: List[str] = []

    def walk(i: int, depth: int) -> None:
        e = c[i]
        out.append("  " * depth + f"β_{i + 1} {''.join(map(str, e.root))} {_phi_text(e.phi)}")
        for ch in c.children(i):
            walk(ch, depth + 1)

    walk(0, 0)
    return "\n".join(out) + "\n"


@main.command()
@type_option
@rank_option
@click.option("--format", "fmt", type=click.Choice(["dot", "ascii"]), default="dot",
              show_default=True)
def hasse(family, rank, fmt):
    """Hasse diagram of the cascade poset."""
    st = _stype(family, rank)
    click.echo(hasse_dot(st) if fmt == "dot" else hasse_ascii(st), nl=False)


def _verify_t(args) -> Optional[str]:
    """Oracle checks for one ``T``; returns a failure message or ``None``."""
    family, rank, t, scope, seed = args
    st = SimpleType(family, rank)
    rs = build_root_system(st)
    c = compute_cascade(rs)
    sc = build_structure_constants(rs)
    n = build_nilradical(rs, c, t)
    if scope in ("stabiliser", "all"):
        dim, supp = stabiliser_oracle(sc, n)
        if supp != cascade_stabiliser(rs, c, n).stab_roots or dim != n.index:
            return "stabiliser support differs from the combinatorial set"
        if not tilde_stabiliser_oracle(sc, n):
            return "optimisation stabiliser differs"
    if scope in ("index", "all"):
        if index_oracle(sc, n, 5, seed) != n.index:
            return "random-point index differs"
        if saturation_oracle(sc, n) != 2 * n.dim - len(n.tilde_roots):
            return "saturation dimension differs"
    return None


@main.command()
@type_option
@rank_option
@click.option("--scope", type=click.Choice(["cascade", "stabiliser", "index", "all"]),
              default="all", show_default=True)
@click.option("--jobs", "-j", type=int, default=1, show_default=True)
@click.option("--max-subsets", type=int, default=2 ** 12 - 1, show_default=True)
def verify(family, rank, scope, jobs, max_subsets):
    """Golden-table and oracle agreement checks."""
    st = _stype(family, rank)
    passed = failed = 0
    first: Optional[str] = None
    if scope in ("cascade", "all"):
        msgs = golden_mismatches(st, compute_cascade(build_root_system(st)))
        if msgs:
            failed += 1
            first = first or msgs[0]
        else:
            passed += 1
        click.echo(f"cascade: {'FAIL' if msgs else 'pass'}")
        roots = compute_cascade(build_root_system(st)).roots
        shown = [format_epsilon(st, r) if st.family in "ABCD" else "".join(map(str, r))
                 for r in roots]
        click.echo(f"  roots: {', '.join(shown)}")
        for m in msgs:
            click.echo(f"  {m}")
    if scope == "all":
        rs = build_root_system(st)
        sc = build_structure_constants(rs)
        bad = jacobi_violations(sc, sample=None if rs.rank <= 4 else 20000, seed=seed_from_env())
        if bad:
            failed += 1
            first = first or f"Jacobi fails on {bad[0]}"
        else:
            passed += 1
        click.echo(f"jacobi: {'FAIL' if bad else 'pass'}")
    if scope in ("stabiliser", "index", "all"):
        total = 2 ** st.rank - 1
        if total > max_subsets:
            raise click.BadParameter(
                f"{st} has {total} subsets, above the cap of {max_subsets}",
                param_hint="'--rank'")
        seed = seed_from_env()
        ts = [tuple(sorted(t)) for t in all_t_sets(st.rank)]
        results = _run_pool(_verify_t, [(st.family, st.rank, t, scope, seed) for t in ts], jobs)
        ok = sum(r is None for r in results)
        passed += ok
        failed += len(ts) - ok
        click.echo(f"nilradicals: {ok}/{len(ts)} pass")
        for t, r in zip(ts, results):
            if r is not None:
                first = first or f"T={list(t)}: {r}"
                break
    click.echo(f"passed {passed}, failed {failed}")
    if failed:
        click.echo(f"first failure: {first}", err=True)
        sys.exit(EXIT_FAILED)


def run() -> None:
    try:
        main(standalone_mode=True)
    except CascadeLabError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":
    run()
