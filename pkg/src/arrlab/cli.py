"""Command-line front end.

    arrlab analyze <file> [--format json|text] [--max-degree N] [--skip-syzygy]
    arrlab analyze --batch DIR [--output-dir OUT] [...]
    arrlab compare <a> <b> [--max-degree N]
    arrlab matroid (from-arrangement|validate|charpoly|iso|filters) ...
    arrlab realize <family> [name=value ...] [--sample COMPONENT N] [--seed S]
                   [--output-dir DIR]

JSON output is canonical (fixed key order, reduced rationals, sorted
multisets) and carries a "schema": 1 marker; timing appears only in the text
format so that JSON reports are byte-stable across runs.  Exit codes:
0 success, 2 input error, 3 mathematical inconsistency, 4 degree cap
exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import fixtures
from .arrangement import (Arrangement, WeakCombinatorics, parse_arrangement,
                          serialize_arrangement, weak_combinatorics)
from .errors import (ArrlabError, CapExceeded, InconsistentResolution,
                     MalformedInput)
from .matroid import (Matroid3, characteristic_polynomial,
                      divisionally_free_rank3, matroid_from_arrangement,
                      matroids_isomorphic, nonfree_by_multiplicity,
                      validate_matroid, weak_combinatorics_of_matroid)
from .realization import (SINGULAR, classify_point, instantiate, load_family,
                          parse_parameter_point, sample_component,
                          verify_realizes)
from .syzygy import ResolutionSummary, resolution_summary

SCHEMA = 1


def _field_json(field):
    if field.is_rational:
        return "QQ"
    return {"alpha_sq_c1": f"{field.c1.numerator}/{field.c1.denominator}",
            "alpha_sq_c0": f"{field.c0.numerator}/{field.c0.denominator}"}


def _charpoly_json(w: WeakCombinatorics) -> dict:
    cp = characteristic_polynomial(w)
    return {"chi": list(cp.chi), "chi0": list(cp.chi0),
            "integer_roots": list(cp.integer_roots),
            "factors_over_integers": cp.factors_over_Z,
            "display": str(cp)}


def _syzygy_json(s: ResolutionSummary) -> dict:
    return {
        "mdr": s.mdr,
        "classification": s.classification,
        "syzygy_count": s.m,
        "exponents": list(s.exponents),
        "relation_degrees_milnor": list(s.relation_degrees),
        "relation_degrees_ar": list(s.relation_degrees_ar),
        "tjurina": s.tjurina,
        "resolution_shifts": s.resolution_shifts(),
        "ar_dims": {str(r): v for r, v in sorted(s.ar_dims.items())},
    }


def analyze_arrangement(arr: Arrangement, max_degree: int | None = None,
                        skip_syzygy: bool = False) -> dict:
    """The full analysis report for one arrangement, as a JSON-ready dict."""
    t0 = time.perf_counter()
    w = weak_combinatorics(arr)
    matroid = matroid_from_arrangement(arr)
    report = {
        "schema": SCHEMA,
        "label": arr.label,
        "field": _field_json(arr.field),
        "d": len(arr.lines),
        "weak_combinatorics": w.as_vector(),
        "matroid": {
            "nonbases": len(matroid.nonbases),
            "valid": validate_matroid(matroid),
        },
        "charpoly": _charpoly_json(w),
        "filters": {
            "multiplicity_lemma": nonfree_by_multiplicity(w),
            "divisionally_free": divisionally_free_rank3(matroid),
        },
        "syzygy": None,
    }
    if not skip_syzygy:
        report["syzygy"] = _syzygy_json(resolution_summary(arr, max_degree))
    report["_timing_seconds"] = time.perf_counter() - t0
    return report


def _dump(report: dict) -> str:
    clean = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(clean, indent=1)


def _print_text(report: dict, out) -> None:
    w = report["weak_combinatorics"]
    print(f"arrangement {report['label'] or '(unlabeled)'}", file=out)
    print(f"  field: {report['field']}", file=out)
    print(f"  d = {report['d']}, W = ({w[0]}; {', '.join(map(str, w[1:]))})",
          file=out)
    print(f"  matroid: {report['matroid']['nonbases']} non-bases, "
          f"valid = {report['matroid']['valid']}", file=out)
    cp = report["charpoly"]
    print(f"  chi0 = {cp['display']}, integer roots {cp['integer_roots']}",
          file=out)
    f = report["filters"]
    print(f"  filters: multiplicity lemma -> {f['multiplicity_lemma']}, "
          f"divisionally free = {f['divisionally_free']}", file=out)
    s = report["syzygy"]
    if s is not None:
        print(f"  mdr = {s['mdr']}, {s['classification']}, "
              f"exponents {tuple(s['exponents'])}", file=out)
        if s["relation_degrees_milnor"]:
            print(f"  relations: e = {tuple(s['relation_degrees_milnor'])} "
                  f"(AR degrees {tuple(s['relation_degrees_ar'])})", file=out)
        print(f"  tjurina = {s['tjurina']}", file=out)
        sh = s["resolution_shifts"]
        print(f"  resolution shifts: {sh['relations']} <- {sh['generators']} "
              f"<- {sh['partials']}", file=out)
    print(f"  elapsed: {report['_timing_seconds']:.2f}s", file=out)


def _analyze_one(args_tuple):
    path, max_degree, skip = args_tuple
    arr = parse_arrangement(path)
    return path, analyze_arrangement(arr, max_degree, skip)


def cmd_analyze(args) -> int:
    if args.batch:
        indir = Path(args.batch)
        files = sorted(p for p in indir.glob("*.json"))
        if not files:
            raise MalformedInput(f"no .json files in {indir}")
        outdir = Path(args.output_dir or ".")
        outdir.mkdir(parents=True, exist_ok=True)
        jobs = [(str(p), args.max_degree, args.skip_syzygy) for p in files]
        with ProcessPoolExecutor() as pool:
            for path, report in pool.map(_analyze_one, jobs):
                name = report["label"] or Path(path).stem
                target = outdir / f"{name}.json"
                target.write_text(_dump(report) + "\n")
                print(f"{path}: {report['weak_combinatorics']} -> {target}")
        return 0
    arr = parse_arrangement(args.file)
    report = analyze_arrangement(arr, args.max_degree, args.skip_syzygy)
    if args.format == "json":
        print(_dump(report))
    else:
        _print_text(report, sys.stdout)
    return 0


def compare_arrangements(a: Arrangement, b: Arrangement,
                         max_degree: int | None = None,
                         summaries: tuple[ResolutionSummary, ResolutionSummary] | None = None) -> dict:
    """Pairwise flags and the derived pair verdicts."""
    wa, wb = weak_combinatorics(a), weak_combinatorics(b)
    ma, mb = matroid_from_arrangement(a), matroid_from_arrangement(b)
    witness = matroids_isomorphic(ma, mb)
    if summaries is not None:
        sa, sb = summaries
    else:
        sa = resolution_summary(a, max_degree)
        sb = resolution_summary(b, max_degree)
    same_w = wa == wb
    iso = witness is not None
    same_mdr = sa.mdr == sb.mdr
    same_shape = sa.shape() == sb.shape()
    free_a = sa.classification == "Free"
    free_b = sb.classification == "Free"

    def side(arr, s: ResolutionSummary) -> dict:
        return {"label": arr.label, "mdr": s.mdr,
                "classification": s.classification,
                "exponents": list(s.exponents),
                "relation_degrees_milnor": list(s.relation_degrees),
                "weak_combinatorics": s.weak.as_vector()}

    return {
        "schema": SCHEMA,
        "left": side(a, sa),
        "right": side(b, sb),
        "flags": {
            "same_weak_combinatorics": same_w,
            "isomorphic_matroids": iso,
            "same_mdr": same_mdr,
            "same_resolution_shape": same_shape,
        },
        "verdicts": {
            "weak_ziegler_pair": same_w and not same_mdr,
            "ziegler_pair": iso and not same_mdr,
            "strong_ziegler_pair": iso and not same_shape,
            "ntc_witness": same_w and (free_a != free_b),
        },
        "isomorphism_witness": [x + 1 for x in witness] if witness else None,
    }


def cmd_compare(args) -> int:
    a = parse_arrangement(args.left)
    b = parse_arrangement(args.right)
    print(_dump(compare_arrangements(a, b, args.max_degree)))
    return 0


def _matroid_from_source(source: str) -> Matroid3:
    obj = json.loads(Path(source).read_text()) if Path(source).exists() else None
    if obj is None:
        raise MalformedInput(f"no such file: {source}")
    if "nonbases" in obj:
        return Matroid3.from_json(obj)
    return matroid_from_arrangement(parse_arrangement(obj))


def _weak_from_source(source: str):
    """WeakCombinatorics plus optional Matroid3 from a literal or file."""
    if source.strip().startswith("("):
        return WeakCombinatorics.parse(source), None
    m = _matroid_from_source(source)
    return weak_combinatorics_of_matroid(m), m


def cmd_matroid(args) -> int:
    sub = args.matroid_command
    if sub == "from-arrangement":
        arr = parse_arrangement(args.file)
        m = matroid_from_arrangement(arr)
        w = weak_combinatorics_of_matroid(m)
        out = {
            "schema": SCHEMA,
            "n": m.n,
            "nonbases": [list(t) for t in
                         sorted(tuple(x + 1 for x in t) for t in m.nonbases)],
            "valid": validate_matroid(m),
            "weak_combinatorics": w.as_vector(),
            "charpoly": _charpoly_json(w),
            "divisionally_free": divisionally_free_rank3(m),
        }
        print(json.dumps(out, indent=1))
        return 0
    if sub == "validate":
        m = _matroid_from_source(args.file)
        print(json.dumps({"schema": SCHEMA, "n": m.n,
                          "valid": validate_matroid(m)}, indent=1))
        return 0
    if sub == "charpoly" or sub == "filters":
        w, m = _weak_from_source(args.source)
        out = {
            "schema": SCHEMA,
            "weak_combinatorics": w.as_vector(),
            "charpoly": _charpoly_json(w),
            "multiplicity_lemma": nonfree_by_multiplicity(w),
            "divisionally_free": divisionally_free_rank3(m) if m else None,
        }
        print(json.dumps(out, indent=1))
        return 0
    if sub == "iso":
        m1 = _matroid_from_source(args.left)
        m2 = _matroid_from_source(args.right)
        witness = matroids_isomorphic(m1, m2)
        print(json.dumps({
            "schema": SCHEMA,
            "isomorphic": witness is not None,
            "witness": [x + 1 for x in witness] if witness else None,
        }, indent=1))
        return 0
    raise MalformedInput(f"unknown matroid subcommand {sub!r}")


def cmd_realize(args) -> int:
    path = fixtures.family_path(args.family)
    if not path.exists():
        raise MalformedInput(
            f"unknown family {args.family!r}; known: {', '.join(fixtures.FAMILIES)}")
    family = load_family(path)
    outdir = Path(args.output_dir or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    if args.sample:
        component, count = args.sample[0], int(args.sample[1])
        if component.lower() in ("singular", "singular-locus", "singularlocus"):
            component = SINGULAR
        points = sample_component(family, component, count, args.seed)
    elif args.params:
        points = [parse_parameter_point(family, args.params)]
    else:
        raise MalformedInput("give name=value parameters or --sample COMPONENT N")
    results = []
    for i, point in enumerate(points):
        arr = instantiate(family, point)
        cls = classify_point(family, point)
        verified = verify_realizes(arr, family.target)
        name = f"{family.name}_{i}.json" if len(points) > 1 else f"{family.name}.json"
        target = outdir / name
        target.write_text(serialize_arrangement(arr) + "\n")
        results.append({
            "file": str(target),
            "point": {k: [f"{v.a.numerator}/{v.a.denominator}",
                          f"{v.b.numerator}/{v.b.denominator}"]
                      for k, v in sorted(point.items())},
            "components": sorted(cls),
            "verification": "matroid-verified" if verified else "FAILED",
        })
        if not verified:
            raise InconsistentResolution(
                f"instantiation at {point} does not realize the target matroid")
    print(json.dumps({"schema": SCHEMA, "family": family.name,
                      "points": results}, indent=1))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="arrlab",
        description="exact analyzer for line arrangements: weak combinatorics, "
                    "matroids, Jacobian syzygies, Milnor algebra resolutions, "
                    "and Ziegler/Numerical-Terao pair verdicts")
    sub = ap.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full report for one arrangement file")
    pa.add_argument("file", nargs="?", help="arrangement JSON file")
    pa.add_argument("--batch", metavar="DIR", help="analyze every .json in DIR")
    pa.add_argument("--output-dir", metavar="DIR")
    pa.add_argument("--format", choices=("json", "text"), default="json")
    pa.add_argument("--max-degree", type=int, default=None,
                    help="override the syzygy degree cap (default 2d-4)")
    pa.add_argument("--skip-syzygy", action="store_true",
                    help="combinatorics-only report")
    pa.set_defaults(func=cmd_analyze)

    pc = sub.add_parser("compare", help="pair flags and Ziegler/NTC verdicts")
    pc.add_argument("left")
    pc.add_argument("right")
    pc.add_argument("--max-degree", type=int, default=None)
    pc.set_defaults(func=cmd_compare)

    pm = sub.add_parser("matroid", help="matroid utilities")
    msub = pm.add_subparsers(dest="matroid_command", required=True)
    m1 = msub.add_parser("from-arrangement")
    m1.add_argument("file")
    m2 = msub.add_parser("validate")
    m2.add_argument("file")
    m3 = msub.add_parser("charpoly")
    m3.add_argument("source", help="matroid/arrangement file or \"(d;t2,...)\"")
    m4 = msub.add_parser("iso")
    m4.add_argument("left")
    m4.add_argument("right")
    m5 = msub.add_parser("filters")
    m5.add_argument("source", help="matroid/arrangement file or \"(d;t2,...)\"")
    pm.set_defaults(func=cmd_matroid)

    pr = sub.add_parser("realize", help="instantiate or sample a realization family")
    pr.add_argument("family", help=f"one of: {', '.join(fixtures.FAMILIES)}")
    pr.add_argument("params", nargs="*", help="name=value parameter literals")
    pr.add_argument("--sample", nargs=2, metavar=("COMPONENT", "COUNT"))
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--output-dir", metavar="DIR")
    pr.set_defaults(func=cmd_realize)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconsistentResolution as e:
        _error(e)
        return 3
    except CapExceeded as e:
        _error(e)
        return 4
    except (ArrlabError, OSError, json.JSONDecodeError, ValueError) as e:
        _error(e)
        return 2


def _error(e: Exception) -> None:
    print(json.dumps({"schema": SCHEMA,
                      "error": {"type": type(e).__name__, "message": str(e)}}),
          file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
