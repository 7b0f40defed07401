"""Command-line front end.

    ratcrit critical-points f.json
    ratcrit exclusion f.json --at 0,0
    ratcrit corollary1 --k 2 --R 3
    ratcrit thm2-k g.json --R 3 --eps 0.3
    ratcrit thm3-l --n 2 --R 2 --eps 1
    ratcrit thm4-n g.json h.json --eps 0.5
    ratcrit verify thm1 --seed 42 --trials 1000 --out report.csv
    ratcrit plot-data f.json --grid 200 --out grid.csv

Exit status: 0 on success, 1 when a verification trial fails, 2 on usage,
parse or precondition errors. Reals are printed with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import bounds
from .core import RationalFunction, min_distance, rho
from .document import parse_function_document, serialize_function_document
from .errors import RatcritError
from .polyops import partial_fraction_sum
from .roots import critical_points
from .verify import THEOREMS, SuiteParams, default_config, run_suite

CSV_COLUMNS = ("trial_index", "inputs_digest", "computed_constant",
               "oracle_count", "min_margin", "status")

__all__ = ["main", "cmd_dispatch", "parse_function_document",
           "serialize_function_document", "report_to_csv", "report_to_json"]


def fmt(x) -> str:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return format(float(x), ".17g")


def _json_real(x):
    x = float(x)
    return x if math.isfinite(x) else fmt(x)


def report_to_csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.records:
        w.writerow([r.index, r.inputs_digest, fmt(r.computed_constant),
                    r.oracle_count, fmt(r.margin), r.status])
    return buf.getvalue()


def report_to_json(report) -> str:
    trials = [
        {
            "trial_index": r.index,
            "inputs_digest": r.inputs_digest,
            "computed_constant": _json_real(r.computed_constant),
            "oracle_count": r.oracle_count,
            "min_margin": _json_real(r.margin),
            "status": r.status,
            "note": r.note,
        }
        for r in report.records
    ]
    summary = dict(report.summary())
    summary["min_margin"] = _json_real(summary["min_margin"])
    return json.dumps({"theorem_id": report.theorem_id, "trials": trials,
                       "summary": summary}, indent=1) + "\n"


def _point(text: str) -> complex:
    try:
        re, im = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None
    return complex(re, im)


def _extent(text: str):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        vals = []
    if len(vals) != 4 or not (vals[0] < vals[1] and vals[2] < vals[3]):
        raise argparse.ArgumentTypeError("expected 'xmin,xmax,ymin,ymax'")
    return vals


def _load(path: str) -> RationalFunction:
    return parse_function_document(Path(path).read_text(encoding="utf-8"))


def _emit(lines, out=None):
    text = "".join(line + "\n" for line in lines)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _kv(name, value) -> str:
    return f"{name}={fmt(value)}"


def _cmd_critical_points(args) -> int:
    f = _load(args.file)
    res = critical_points(f, args.tol)
    lines = ["re,im,multiplicity,residual"]
    for (z, m), r in zip(res.roots, res.residuals):
        lines.append(f"{fmt(z.real)},{fmt(z.imag)},{m},{fmt(r)}")
    lines.append(_kv("deficiency_at_infinity", res.deficiency_at_infinity))
    _emit(lines)
    return 0


def _cmd_exclusion(args) -> int:
    f = _load(args.file)
    z0 = args.at
    r = bounds.exclusion_radius(f, z0)
    aw = bounds.alexander_walsh_radius(f, z0)
    ratio = r / aw if math.isfinite(aw) else math.nan
    _emit([
        _kv("d_f", min_distance(f, z0)),
        _kv("rho_f", rho(f, z0)),
        _kv("radius", r),
        _kv("alexander_walsh", aw),
        _kv("improvement_ratio", ratio),
    ])
    return 0


def _cmd_corollary1(args) -> int:
    _emit([_kv("max_rho", bounds.corollary1_max_rho(args.k, args.R))])
    return 0


def _cmd_thm2_k(args) -> int:
    g = _load(args.file)
    c = bounds.theorem2_constant(g, args.R, args.eps, args.samples, tol=args.tol)
    _emit([
        _kv("K", c.K),
        _kv("cap", c.cap),
        _kv("eps_circle_min", c.eps_circles.value),
        _kv("eps_circle_min_sampled", c.eps_circles.sampled),
        _kv("outer_circle_min", c.outer_circle.value),
        _kv("outer_circle_min_sampled", c.outer_circle.sampled),
        _kv("samples_per_circle", max(c.eps_circles.sample_count, c.outer_circle.sample_count)),
    ])
    return 0


def _cmd_thm3_l(args) -> int:
    _emit([_kv("L", bounds.theorem3_L(args.n, args.R, args.eps))])
    return 0


def _cmd_thm4_n(args) -> int:
    g = _load(args.g_file)
    h = _load(args.h_file)
    c = bounds.theorem4_constants(g, h, args.eps, args.samples, tol=args.tol)
    _emit([_kv("M", c.M.value), _kv("m", c.m.value), _kv("n", c.n)])
    return 0


def _cmd_verify(args) -> int:
    base = default_config(args.theorem, args.seed, args.trials)
    overrides = {
        "points_min": args.points_min, "points_max": args.points_max,
        "annulus_inner": args.annulus_inner, "annulus_outer": args.annulus_outer,
        "mult_max": args.mult_max, "min_separation": args.min_separation,
    }
    fields = {k: v for k, v in overrides.items() if v is not None}
    if args.no_poles:
        fields["allow_poles"] = False
    cfg = dataclasses.replace(base, **fields)
    params = SuiteParams(R=args.R, eps=args.eps, eps_factor=args.eps_factor,
                         tol=args.tol, samples=args.samples)
    report = run_suite(args.theorem, cfg, params)
    text = report_to_csv(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        Path(args.json).write_text(report_to_json(report), encoding="utf-8")
    s = report.summary()
    _emit([f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in s.items()])
    return 1 if report.failures else 0


def _cmd_plot_data(args) -> int:
    f = _load(args.file)
    if args.extent is not None:
        x0, x1, y0, y1 = args.extent
    else:
        locs = f.locations or [0j]
        x0 = min(z.real for z in locs) - 1.0
        x1 = max(z.real for z in locs) + 1.0
        y0 = min(z.imag for z in locs) - 1.0
        y1 = max(z.imag for z in locs) + 1.0
    xs = np.linspace(x0, x1, args.grid)
    ys = np.linspace(y0, y1, args.grid)
    lines = ["re,im,abs_log_derivative"]
    locset = set(f.locations)
    for y in ys:
        for x in xs:
            z = complex(x, y)
            val = math.inf if z in locset else abs(partial_fraction_sum(f, z))
            lines.append(f"{fmt(x)},{fmt(y)},{fmt(val)}")
    _emit(lines, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ratcrit",
        description="Zeros, poles and critical points of rational functions.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, samples=False):
        sp.add_argument("--tol", type=float, default=1e-9, help="oracle tolerance")
        if samples:
            sp.add_argument("--samples", type=int, default=bounds.DEFAULT_SAMPLES,
                            help="samples per circle for certified extrema")

    sp = sub.add_parser("critical-points", help="oracle critical points of f")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=_cmd_critical_points)

    sp = sub.add_parser("exclusion", help="exclusion radius about a zero or pole")
    sp.add_argument("file")
    sp.add_argument("--at", type=_point, required=True, metavar="RE,IM")
    sp.set_defaults(func=_cmd_exclusion)

    sp = sub.add_parser("corollary1", help="rho threshold for (z-z0)^k h")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--R", type=float, required=True)
    sp.set_defaults(func=_cmd_corollary1)

    sp = sub.add_parser("thm2-k", help="constant K for a distant perturbation of g")
    sp.add_argument("file")
    sp.add_argument("--R", type=float, required=True)
    sp.add_argument("--eps", type=float, required=True)
    common(sp, samples=True)
    sp.set_defaults(func=_cmd_thm2_k)

    sp = sub.add_parser("thm3-l", help="constant L for monic polynomials in the unit disk")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--R", type=float, required=True)
    sp.add_argument("--eps", type=float, required=True)
    sp.set_defaults(func=_cmd_thm3_l)

    sp = sub.add_parser("thm4-n", help="power threshold n for g*h^n")
    sp.add_argument("g_file")
    sp.add_argument("h_file")
    sp.add_argument("--eps", type=float, required=True)
    common(sp, samples=True)
    sp.set_defaults(func=_cmd_thm4_n)

    sp = sub.add_parser("verify", help="run a seeded verification suite")
    sp.add_argument("theorem", choices=THEOREMS)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--R", type=float, default=None)
    sp.add_argument("--eps", type=float, default=None)
    sp.add_argument("--eps-factor", type=float, default=None)
    sp.add_argument("--points-min", type=int, default=None)
    sp.add_argument("--points-max", type=int, default=None)
    sp.add_argument("--mult-max", type=int, default=None)
    sp.add_argument("--annulus-inner", type=float, default=None)
    sp.add_argument("--annulus-outer", type=float, default=None)
    sp.add_argument("--min-separation", type=float, default=None)
    sp.add_argument("--no-poles", action="store_true")
    sp.add_argument("--out", default=None, help="CSV report path")
    sp.add_argument("--json", default=None, help="JSON report path")
    common(sp, samples=True)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("plot-data", help="|f'/f| on a grid, for external plotting")
    sp.add_argument("file")
    sp.add_argument("--grid", type=int, default=100)
    sp.add_argument("--extent", type=_extent, default=None, metavar="XMIN,XMAX,YMIN,YMAX")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_plot_data)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (RatcritError, OSError) as exc:
        print(f"ratcrit: error: {exc}", file=sys.stderr)
        return 2


cmd_dispatch = main


if __name__ == "__main__":
    sys.exit(main())
