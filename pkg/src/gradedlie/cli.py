"""Command-line surface for the graded-algebra toolkit.

Subcommands mirror the library layers: `grade` builds a diagram grading
and reports its invariants, `verify-tables` replays the bundled table of
exceptional automorphisms, `analyze` decomposes a single degree-one
element, `sl2-triple` and `slice-induction` drive the slice machinery,
the `e8` group replays the worked 248-dimensional examples, and
`modes solve` solves one cyclotomic mode system.

Input elements arrive as JSON files; see _load_algebra and _element for
the accepted shapes.  Every command honors --json for machine-readable
output (canonical form: sorted keys, two-space indent), and exits 0
exactly when all requested checks pass.  Malformed input exits 2.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources

import click
from gmpy2 import mpq

from .centralizers import Subalgebra, centralizer, orbit_dim_g0
from .grading import GradedAlgebra, cartan_center_dim, el_add, from_kac
from .jordan import (
    UnluckySampling,
    is_nilpotent,
    is_semisimple,
    jordan_class_data,
    rank_of_grading,
    verify_cartan_subspace,
)
from .modes import adapted_cartan_from_c, check_obstruction, solve_modes
from .slices import (
    NotNilpotentOrDegenerate,
    graded_sl2_triple,
    verify_slice_induction,
)
from .trivector import (
    build_e8_model,
    cartan_subspace_basis,
    class_representative,
    e8_slice_example,
    example_class_dims,
    family_III_centralizer,
    glueing_invariants,
    trivector_from_json,
)


@dataclass
class CliOptions:
    as_json: bool
    seed: int
    trials: int
    bound: int
    budget: str


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Emit JSON reports.")
@click.option("--seed", default=0, show_default=True,
              help="Seed for every randomized search.")
@click.option("--trials", default=5, show_default=True,
              help="Samples per randomized search.")
@click.option("--coeff-bound", "bound", default=40, show_default=True,
              help="Coefficient bound for random elements.")
@click.option("--budget", type=click.Choice(["small", "full"]),
              default="small", show_default=True,
              help="small: G2/F4 table rows only; full: all rows.")
@click.pass_context
def main(ctx, as_json, seed, trials, bound, budget):
    """Exact invariants of periodically graded semisimple Lie algebras."""
    ctx.obj = CliOptions(as_json, seed, trials, bound, budget)


def _emit(opts: CliOptions, data: dict, text_lines):
    if opts.as_json:
        click.echo(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


def _usage_error(msg: str):
    raise click.UsageError(msg)


# ---------------------------------------------------------------------------
# element and algebra input
# ---------------------------------------------------------------------------

def _load_algebra(spec: dict) -> GradedAlgebra:
    """Algebra from {"algebra": "F4", "s": [...]} or {"model": "e8-trivector"}."""
    if "model" in spec:
        if spec["model"] != "e8-trivector":
            _usage_error(f"unknown model {spec['model']!r}")
        return build_e8_model()
    try:
        return from_kac(spec["algebra"], tuple(spec["s"]))
    except (KeyError, TypeError, ValueError) as exc:
        _usage_error(f"bad algebra spec: {exc}")


def _element(ga: GradedAlgebra, spec: dict, key: str = "element") -> dict:
    """One element: coordinates by basis name, wedge terms, or a class tag.

    {"coords": {"E[1,2]": "1", "e[1,5,9]": "-2/3"}} works everywhere;
    {"trivector": [[i,j,k,"c"], ...]} and {"class": "VI.7",
    "part": "sum"|"semisimple"|"nilpotent"} need the trivector model.
    """
    spec = spec.get(key, spec)
    if "class" in spec:
        try:
            family, cls = spec["class"].split(".")
            xs, xn = class_representative(family, cls)
        except ValueError as exc:
            _usage_error(str(exc))
        part = spec.get("part", "sum")
        if part not in ("sum", "semisimple", "nilpotent"):
            _usage_error(f"unknown part {part!r}")
        return {"sum": el_add(xs, xn), "semisimple": xs,
                "nilpotent": xn}[part]
    if "trivector" in spec:
        return trivector_from_json(spec["trivector"])
    if "coords" not in spec:
        _usage_error("element spec needs coords, trivector, or class")
    pos = {n: i for i, n in enumerate(ga.basis_names)}
    out = {}
    for name, c in spec["coords"].items():
        if name in pos:
            idx = pos[name]
        elif name.lstrip("-").isdigit() and 0 <= int(name) < ga.dim:
            idx = int(name)
        else:
            _usage_error(f"no basis element {name!r}")
        if mpq(c):
            out[idx] = mpq(c)
    return out


def _coords(ga: GradedAlgebra, x: dict) -> dict:
    return {ga.basis_names[i]: str(x[i]) for i in sorted(x)}


# ---------------------------------------------------------------------------
# grade
# ---------------------------------------------------------------------------

def _parse_labels(text: str):
    body = text.strip()
    if body.startswith("s="):
        body = body[2:]
    body = body.strip("[]() ")
    try:
        return tuple(int(v) for v in body.replace(",", " ").split())
    except ValueError:
        _usage_error(f"labels must be integers, got {text!r}")


@main.command()
@click.argument("algebra")
@click.argument("labels")
@click.pass_obj
def grade(opts: CliOptions, algebra, labels):
    """Report the invariants of the grading s on ALGEBRA (e.g. G2 s=[1,1,0])."""
    s = _parse_labels(labels)
    try:
        ga = from_kac(algebra, s)
    except (ValueError, NotImplementedError) as exc:
        _usage_error(str(exc))
    rng = random.Random(opts.seed)
    try:
        rank = rank_of_grading(ga, rng, opts.trials, opts.bound)
    except UnluckySampling as exc:
        raise click.ClickException(str(exc))
    dim1 = len(ga.blocks[1 % ga.m])
    data = {
        "algebra": algebra,
        "labels": list(s),
        "m": ga.m,
        "graded_dims": list(ga.dims()),
        "center_dim": cartan_center_dim(ga),
        "rank": rank,
        "nilcone_dim": dim1 - rank,
    }
    _emit(opts, data, [
        f"{algebra} {list(s)}: m = {ga.m}",
        f"graded dims   {ga.dims()}",
        f"center of g_0 {data['center_dim']}",
        f"rank          {rank}",
        f"nilcone dim   {data['nilcone_dim']}",
    ])


# ---------------------------------------------------------------------------
# verify-tables
# ---------------------------------------------------------------------------

def _table_rows(path: str | None):
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)["rows"]
    text = resources.files("gradedlie").joinpath("data/kac_tables.json").read_text()
    return json.loads(text)["rows"]


def _verify_row(row: dict, seed: int, trials: int, bound: int) -> dict:
    """One table row, recomputed; runs in a worker process."""
    out = {
        "label": f"{row['algebra']} m={row['m']}",
        "expected": {"rank": row["rank"], "nilcone_dim": row["nilcone_dim"]},
        "not_checked": {"orbit_count": row["orbit_count"],
                        "component_count": row["component_count"]},
    }
    try:
        ga = from_kac(row["algebra"], tuple(row["s"]))
        if ga.m != row["m"]:
            raise ValueError(
                f"fixture corrupt: labels give m = {ga.m}, row says {row['m']}")
        rank = rank_of_grading(ga, random.Random(seed), trials, bound)
        got = {"rank": rank,
               "nilcone_dim": len(ga.blocks[1 % ga.m]) - rank}
        out["got"] = got
        out["pass"] = got == out["expected"]
    except (UnluckySampling, ValueError) as exc:
        out["got"] = None
        out["pass"] = False
        out["error"] = str(exc)
    return out


@main.command("verify-tables")
@click.argument("fixtures", required=False, type=click.Path(exists=True))
@click.option("--only", default=None,
              help="Run only rows whose label contains this text.")
@click.option("--workers", default=1, show_default=True,
              help="Worker processes for independent rows.")
@click.pass_obj
def verify_tables(opts: CliOptions, fixtures, only, workers):
    """Recompute rank and nilcone dim for the bundled table rows."""
    rows = _table_rows(fixtures)
    if opts.budget == "small":
        rows = [r for r in rows if r["algebra"] in ("G2", "F4")]
    if only:
        rows = [r for r in rows if only in f"{r['algebra']} m={r['m']}"]
    if not rows:
        _usage_error("no table rows match the requested filter")
    args = [(row, opts.seed, opts.trials, opts.bound) for row in rows]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_row_star, args))
    else:
        results = [_verify_row(*a) for a in args]

    lines = []
    for r in results:
        if r["pass"]:
            got = r["got"]
            lines.append(
                f"PASS {r['label']:9s} rank {got['rank']}, "
                f"nilcone dim {got['nilcone_dim']} "
                f"(orbits {r['not_checked']['orbit_count']}, components "
                f"{r['not_checked']['component_count']}: NOT CHECKED)")
        else:
            want = r["expected"]
            lines.append(
                f"FAIL {r['label']:9s} expected rank {want['rank']}, "
                f"nilcone dim {want['nilcone_dim']}, got "
                f"{r.get('error') or r['got']}")
    ok = sum(r["pass"] for r in results)
    lines.append(f"{ok}/{len(results)} rows verified")
    _emit(opts, {"rows": results, "passed": ok, "total": len(results)}, lines)
    if ok != len(results):
        raise SystemExit(1)


def _verify_row_star(args):
    return _verify_row(*args)


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

@main.command()
@click.argument("element_file", type=click.Path(exists=True))
@click.pass_obj
def analyze(opts: CliOptions, element_file):
    """Jordan data of the degree-one element described in ELEMENT_FILE."""
    with open(element_file, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    ga = _load_algebra(spec)
    x = _element(ga, spec)
    try:
        data = jordan_class_data(ga, x)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    report = {
        "algebra": ga.label,
        "element": _coords(ga, x),
        "semisimple_part": _coords(ga, data.pair.semisimple),
        "nilpotent_part": _coords(ga, data.pair.nilpotent),
        "is_semisimple": is_semisimple(ga, x),
        "is_nilpotent": is_nilpotent(ga, x),
        "orbit_dim": orbit_dim_g0(ga, x),
        **data.to_json(),
    }
    _emit(opts, report, [
        f"element in {ga.label}",
        f"semisimple part     {report['semisimple_part']}",
        f"nilpotent part      {report['nilpotent_part']}",
        f"centralizer dims    {data.centralizer_dims}",
        f"over semisimple prt {data.semisimple_centralizer_dims}",
        f"orbit dim           {report['orbit_dim']}",
        f"class dim           {data.class_dim}",
    ])


# ---------------------------------------------------------------------------
# sl2-triple and slice-induction
# ---------------------------------------------------------------------------

@main.command("sl2-triple")
@click.argument("element_file", type=click.Path(exists=True))
@click.pass_obj
def sl2_triple(opts: CliOptions, element_file):
    """Graded sl(2)-triple through the nilpotent element in ELEMENT_FILE.

    The file names the algebra and the element e; an optional "within"
    element y restricts the construction to the centralizer of y.
    """
    with open(element_file, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    ga = _load_algebra(spec)
    e = _element(ga, spec, key="e")
    if "within" in spec:
        sub = centralizer(ga, _element(ga, spec, key="within"))
    else:
        sub = Subalgebra(ga, [ga.basis_element(i) for i in range(ga.dim)])
    try:
        data = graded_sl2_triple(sub, e)
    except (NotNilpotentOrDegenerate, ValueError) as exc:
        raise click.ClickException(str(exc))
    relations = (
        ga.bracket(data.h, data.e) == {k: 2 * v for k, v in data.e.items()}
        and ga.bracket(data.h, data.f) == {k: -2 * v for k, v in data.f.items()}
        and ga.bracket(data.e, data.f) == data.h)
    report = {
        "e": _coords(ga, data.e),
        "h": _coords(ga, data.h),
        "f": _coords(ga, data.f),
        "relations_hold": relations,
        "slice_dim": data.slice_dim,
    }
    _emit(opts, report, [
        f"e {report['e']}",
        f"h {report['h']}",
        f"f {report['f']}",
        f"sl(2) relations {'hold' if relations else 'FAIL'}",
        f"slice dim {data.slice_dim}",
    ])
    if not relations:
        raise SystemExit(1)


@main.command("slice-induction")
@click.argument("pair_file", type=click.Path(exists=True))
@click.pass_obj
def slice_induction(opts: CliOptions, pair_file):
    """Witness check: does x degenerate onto y through the slice at y?"""
    with open(pair_file, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    ga = _load_algebra(spec)
    x = _element(ga, spec, key="x")
    y = _element(ga, spec, key="y")
    try:
        report = verify_slice_induction(ga, x, y)
    except (NotNilpotentOrDegenerate, ValueError) as exc:
        raise click.ClickException(str(exc))
    data = report.to_json()
    lines = [f"{k} = {v}" for k, v in data.items()]
    _emit(opts, data, lines)
    if not report.witnessed:
        raise SystemExit(1)


# ---------------------------------------------------------------------------
# the e8 worked examples
# ---------------------------------------------------------------------------

def _check(lines, results, label, got, expected):
    ok = got == expected
    results.append(ok)
    mark = "PASS" if ok else f"FAIL (expected {expected}, got {got})"
    lines.append(f"{mark} {label}: {got}")
    return ok


@main.group()
def e8():
    """Replay the worked examples in the 248-dimensional trivector model."""


@e8.command("dims")
@click.pass_obj
def e8_dims(opts: CliOptions):
    """Centralizer dimensions of the three nilpotent classes over one
    semisimple trivector, and of the complex semisimple class."""
    report = example_class_dims()
    lines, results = [], []
    _check(lines, results, "semisimple centralizer dims",
           report["semisimple_centralizer_dims"], (24, 28, 28))
    for cls, dims in (("7", (4, 6, 8)), ("8", (4, 8, 8)), ("9", (4, 10, 8))):
        entry = report["classes"][cls]
        _check(lines, results, f"class {cls} centralizer dims",
               entry["dims"], dims)
        _check(lines, results, f"class {cls} wedge-route degree-1 dim",
               entry["wedge_criterion_dim"], dims[1])
        _check(lines, results, f"class {cls} orbit dim",
               entry["orbit_dim"], 76)
    third = family_III_centralizer()
    _check(lines, results, "complex class centralizer dim", third["dim"], 20)
    _check(lines, results, "complex class graded dims",
           third["graded_dims"], (4, 8, 8))
    _check(lines, results, "complex class center dims",
           third["center_dims"], (0, 2, 2))
    _emit(opts, {"report": _plain(report), "complex_class": _plain(third),
                 "pass": all(results)}, lines)
    if not all(results):
        raise SystemExit(1)


@e8.command("slice")
@click.pass_obj
def e8_slice(opts: CliOptions):
    """Slice-induction witnesses from the three mixed classes."""
    lines, results = [], []
    reports = {}
    for variant in ("II.1", "II.2", "II.3"):
        report = e8_slice_example(variant)
        reports[variant] = _plain(report)
        _check(lines, results, f"{variant} witnessed",
               report["witnessed"], True)
        _check(lines, results, f"{variant} explicit triple",
               report["explicit_triple_is_sl2"], True)
        _check(lines, results, f"{variant} slice dim",
               report["slice_model_dim"], 7)
    _emit(opts, {"report": reports, "pass": all(results)}, lines)
    if not all(results):
        raise SystemExit(1)


@e8.command("glue")
@click.pass_obj
def e8_glue(opts: CliOptions):
    """Support ranks of the encoded classes and the block-swap symmetry."""
    report = glueing_invariants()
    lines, results = [], []
    _check(lines, results, "support ranks", report["support_ranks"],
           {"VI.7": 9, "VI.8": 9, "VI.9": 8,
            "II.1": 6, "II.2": 3, "II.3": 0, "III.7": 3})
    _check(lines, results, "VI.8 / VI.9 separated",
           report["pairs"][0]["separated_by_rank"], True)
    swap = report["block_swap_matrix"]
    for key in ("special_linear", "automorphism_on_sample",
                "normalizes_cartan_subspace",
                "normalizes_semisimple_centralizer",
                "exchanges_summand_directions"):
        _check(lines, results, f"block swap {key}", swap[key], True)
    for item in report["not_checked"]:
        lines.append(f"NOT CHECKED pair {item['pair']}: {item['reason']}")
    _emit(opts, {"report": _plain(report), "pass": all(results)}, lines)
    if not all(results):
        raise SystemExit(1)


@e8.command("modes")
@click.pass_obj
def e8_modes(opts: CliOptions):
    """Adapted Cartan of the trivector model and the parabolic obstruction."""
    ga = build_e8_model()
    data = verify_cartan_subspace(ga, cartan_subspace_basis(),
                                  random.Random(0))
    lines, results = [], []
    _check(lines, results, "Cartan subspace checks",
           all(data.checks.values()), True)
    h = adapted_cartan_from_c(ga, data)
    _check(lines, results, "centralizer of the subspace is abelian",
           h is not None, True)
    dims = h.graded_dims if h is not None else None
    _check(lines, results, "adapted Cartan graded dims", dims, (0, 4, 4))
    verdict = check_obstruction(dims) if dims else None
    _check(lines, results, "theta-stable parabolic verdict",
           verdict.value if verdict else None, "obstructed")
    _emit(opts, {"graded_dims": list(dims) if dims else None,
                 "verdict": verdict.value if verdict else None,
                 "pass": all(results)}, lines)
    if not all(results):
        raise SystemExit(1)


def _plain(obj):
    """Tuples to lists, scalars to JSON-safe values, recursively."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return str(obj)


# ---------------------------------------------------------------------------
# modes
# ---------------------------------------------------------------------------

@main.group()
def modes():
    """Cyclotomic mode systems of grading elements."""


@modes.command("solve")
@click.argument("n", required=False)
@click.option("--file", "path", type=click.Path(exists=True), default=None,
              help='JSON input {"m": 3, "n": [3, 0, 0]}.')
@click.pass_obj
def modes_solve(opts: CliOptions, n, path):
    """Solve the Vandermonde mode system for the integer vector N."""
    if (n is None) == (path is None):
        _usage_error("give the eigenvalues inline or with --file, not both")
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
        vec, m = spec.get("n"), spec.get("m")
    else:
        vec, m = _parse_labels(n), None
    try:
        inst = solve_modes(vec, m)
    except (TypeError, ValueError) as exc:
        _usage_error(str(exc))
    data = inst.to_json()
    _emit(opts, data, [
        f"m        {inst.m}",
        f"n        {list(inst.n)}",
        f"modes    {data['lambda']}",
        f"m*mode_0 = sum(n) {'holds' if data['identity_holds'] else 'FAILS'}",
    ])
    if not data["identity_holds"]:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
