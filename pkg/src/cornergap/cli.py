"""Command-line front end: count, verify, correlate, converge, asymptote."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import enumeration, formulas, region
from .correlation import finite, images, moments, omega
from .correlation.expansion import expand_coefficients, pair_polynomial_value
from .correlation.report import build_report, fmt_float
from .exactmath import InternalDisagreement, to_exact_str

WORKERS_ENV = "CORNERGAP_WORKERS"
METHODS = ("oracle", "lgv", "laplace", "formula")


# -- output ----------------------------------------------------------------------


def _cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (int, Fraction)):
        return to_exact_str(value)
    if isinstance(value, float):
        return fmt_float(value)
    return "" if value is None else str(value)


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{k: _cell(v) for k, v in r.items()} for r in rows], indent=2) + "\n"
    if not rows:
        return ""
    headers = list(rows[0])
    table = [[_cell(r.get(h)) for h in headers] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(table)
        return buf.getvalue()
    widths = [max(len(h), *(len(row[i]) for row in table)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table]
    return "\n".join(lines) + "\n"


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run_cases(fn, cases: list) -> list:
    """Evaluate ``fn`` on every case; results come back in input order."""
    workers = worker_count()
    if workers == 1 or len(cases) < 2:
        return [fn(c) for c in cases]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cases, chunksize=max(1, len(cases) // (4 * workers))))


# -- count -------------------------------------------------------------------------


def spec_from_args(args) -> region.RegionSpec:
    names = {
        "G": ("n", "x"),
        "F": ("n", "x", "i"),
        "D": ("n", "x"),
        "DZero": ("n", "x"),
        "E": ("n", "x", "i", "j"),
        "DGap": ("n", "x", "R", "v"),
    }[args.region]
    params = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"--{name} is required for region {args.region}")
        params[name] = value
    return region.make_spec(args.region, **params)


def _formula_count(spec):
    if isinstance(spec, region.G):
        return formulas.m_G(spec.n, spec.x)
    if isinstance(spec, region.F):
        return formulas.m_F(spec.n, spec.x, spec.i)
    if isinstance(spec, region.E):
        return formulas.m_E(spec.n, spec.x, spec.i, spec.j)
    if isinstance(spec, region.DZero):
        return formulas.m_E(spec.n, spec.x, 1, 3)
    return None


def _lgv_count(spec):
    if isinstance(spec, region.E):
        return enumeration.e_count_lgv(spec.n, spec.x, spec.i, spec.j)
    if isinstance(spec, region.DZero):
        return enumeration.e_count_lgv(spec.n, spec.x, 1, 3)
    if isinstance(spec, region.DGap):
        return enumeration.gapped_count_lgv(spec.n, spec.R, spec.v, spec.x)
    return None


def _laplace_count(spec):
    if isinstance(spec, region.DGap):
        def e_counts(i, j):
            return formulas.m_E(spec.n, spec.x, i, j)
        return enumeration.count_gapped(spec.n, spec.R, spec.v, e_counts=e_counts, x=spec.x)
    return None


def cmd_count(args) -> int:
    if args.region_file:
        with open(args.region_file) as fh:
            reg = region.Region.from_text(fh.read())
        value = enumeration.count_matchings(reg, max_cells=args.max_cells)
        emit(render([{"region": args.region_file, "method": "oracle", "count": value}], args.format), args.out)
        return 0
    if not args.region:
        raise ValueError("give --region or --region-file")
    spec = spec_from_args(args)
    reg = region.build(spec)
    if args.emit_region:
        emit(reg.to_text(), args.out)
        return 0
    wanted = METHODS if args.method == "all" else (args.method,)
    results = {}
    for method in wanted:
        if method == "oracle":
            if len(reg) > args.max_cells and args.method == "all":
                continue
            results[method] = enumeration.count_matchings(reg, max_cells=args.max_cells)
        else:
            fn = {"lgv": _lgv_count, "laplace": _laplace_count, "formula": _formula_count}[method]
            value = fn(spec)
            if value is None:
                if args.method != "all":
                    raise ValueError(f"method {method} is not available for {spec.family}")
                continue
            results[method] = value
    agree = len(set(results.values())) == 1
    rows = [{"region": spec.label(), "method": m, "count": v} for m, v in results.items()]
    if args.method == "all":
        rows.append({"region": spec.label(), "method": "agree", "count": "yes" if agree else "no"})
    emit(render(rows, args.format), args.out)
    return 0 if agree else 1


# -- verify ------------------------------------------------------------------------


def _case_products(case):
    family, params = case
    spec = region.make_spec(family, **dict(zip(("n", "x", "i", "j"), params)))
    oracle = enumeration.count_matchings(region.build(spec))
    return oracle == _formula_count(spec)


def _case_kuo(case):
    kind, params = case
    if kind == "F":
        return formulas.kuo_check_F(*params)
    return formulas.kuo_check_E(*params)


def _case_moments(case):
    k, R = case
    return moments.moment_direct(k, R) == moments.moment_closed(k, R) == moments.moment_from_descending(k, R)


def _case_doublesum(case):
    R, v = case
    try:
        return omega.omega_double_sum(R, v) == omega.omega_exact(R, v)
    except InternalDisagreement:
        return False


def _case_images(case):
    R, v = case
    check = images.distance_product_check(R, v)
    return check.exact_identity and check.rel_error < 1e-9


def _case_gap(case):
    n, R, v = case
    oracle = enumeration.count_matchings(region.build(region.DGap(n, 1, R, v)))
    return oracle == enumeration.count_gapped(n, R, v) == enumeration.gapped_count_lgv(n, R, v)


def _case_master(case):
    R, v = case
    return omega.master_S(R, v) == omega.branch_S(R, v)


def _case_expansion(case):
    a, b, R, v = case
    return expand_coefficients().evaluate(a, b, R, v) == pair_polynomial_value(a, b, R, v)


def _suite_cases(args):
    if args.suite in ("products", "prop31"):
        cases = []
        for n in range(0, args.n_max + 1):
            for x in range(0, args.x_max + 1):
                cases.append(("G", (n, x)))
                cases += [("F", (n, x, i)) for i in range(1, n + 1)]
                if 2 <= n <= min(args.n_max, 5):
                    cases += [("E", (n, x, i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        return cases, _case_products
    if args.suite == "kuo":
        cases = [("F", (n, x, i)) for n in range(3, args.n_max + 1) for x in range(args.x_max + 1) for i in range(3, n + 1)]
        cases += [("E", (n, x, i, j)) for n in range(2, args.n_max + 1) for x in range(args.x_max + 1)
                  for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        return cases, _case_kuo
    if args.suite == "moments":
        return [(k, R) for k in range(args.k_max + 1) for R in range(args.r_max + 1)], _case_moments
    if args.suite == "doublesum":
        return [(R, v) for R in range(1, args.r_max + 1) for v in range(1, args.v_max + 1)], _case_doublesum
    if args.suite == "images":
        return [(R, v) for R in range(1, args.r_max + 1) for v in range(1, args.v_max + 1) if 3 * v > 2 * R], _case_images
    if args.suite == "gap":
        cases = [(n, R, v) for n in range(2, args.n_max + 1) for R in range(1, 2 * n) for v in range(1, n + 1)
                 if region.gap_fits(n, 1, R, v)]
        return cases, _case_gap
    if args.suite == "master":
        return [(R, v) for R in range(0, args.r_max + 1) for v in range(0, args.v_max + 1)], _case_master
    if args.suite == "expansion":
        import random

        rng = random.Random(args.seed)
        return [tuple(rng.randint(-50, 50) for _ in range(4)) for _ in range(args.samples)], _case_expansion
    raise ValueError(f"unknown suite {args.suite}")


def cmd_verify(args) -> int:
    cases, fn = _suite_cases(args)
    results = run_cases(fn, cases)
    rows = [{"suite": args.suite, "case": " ".join(map(str, _flat(c))), "result": "pass" if ok else "FAIL"}
            for c, ok in zip(cases, results)]
    failed = [r for r in rows if r["result"] != "pass"]
    if args.failures_only:
        rows = list(failed)
    rows.append({"suite": args.suite, "case": f"total {len(cases)}", "result": "pass" if not failed else f"FAIL {len(failed)}"})
    emit(render(rows, args.format), args.out)
    return 0 if not failed else 1


def _flat(case):
    for item in case:
        if isinstance(item, tuple):
            yield from item
        else:
            yield item


# -- correlate / converge / asymptote -------------------------------------------


def cmd_correlate(args) -> int:
    report = build_report(args.R, args.v, finite_ns=args.n or ())
    if args.format == "json":
        emit(report.to_json() + "\n", args.out)
    else:
        d = report.to_dict()
        rows = [{"field": k, "value": json.dumps(d[k], sort_keys=True) if isinstance(d[k], (list, dict)) else d[k]}
                for k in sorted(d)]
        emit(render(rows, args.format), args.out)
    if 3 * args.v - 2 * args.R <= 0:
        print("warning: 3v <= 2R, asymptotic fields omitted", file=sys.stderr)
    return 0 if report.consistent else 1


def cmd_converge(args) -> int:
    ns = args.n or [10, 50, 200, 1000]
    rows = []
    if args.pair:
        i, j = args.pair
        limit = finite.e_ratio_limit(i, j)
        for n in ns:
            value = finite.e_ratio_finite(n, i, j)
            rows.append({"n": n, "i": i, "j": j, "ratio": float(value), "limit": limit,
                         "rel_error": float(abs(value - limit) / limit) if limit else float(abs(value))})
    else:
        target = omega.omega_exact(args.R, args.v)
        for n in ns:
            value = finite.finite_n_correlation(n, args.R, args.v)
            err = abs(value - target) / target if target else abs(value)
            rows.append({"n": n, "R": args.R, "v": args.v, "ratio": float(value), "limit": target, "rel_error": float(err)})
    emit(render(rows, args.format), args.out)
    return 0


def cmd_asymptote(args) -> int:
    points = []
    if args.points:
        for text in args.points:
            R, v = (int(t) for t in text.split(","))
            points.append((R, v))
    else:
        for rho in args.rho:
            ratio = Fraction(rho)
            for R in args.r_values:
                v = ratio * R
                if v.denominator == 1:
                    points.append((R, int(v)))
    rows = []
    ok = True
    for R, v in points:
        exact = omega.omega_exact(R, v)
        asym = omega.omega_asymptotic(R, v)
        rel = abs(float(exact) / asym - 1)
        ok &= rel < args.tol
        rows.append({"R": R, "v": v, "exact": exact, "asymptotic": asym, "rel_gap": rel, "within_tol": rel < args.tol})
    emit(render(rows, args.format), args.out)
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cornergap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("count", help="count tilings of a region")
    p.add_argument("--region", choices=sorted(region.FAMILIES))
    p.add_argument("--region-file", help="serialized region (one 'row col up|down' per line)")
    for name in ("n", "x", "i", "j", "R", "v"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--method", choices=(*METHODS, "all"), default="all")
    p.add_argument("--max-cells", type=int, default=enumeration.DEFAULT_MAX_CELLS)
    p.add_argument("--emit-region", action="store_true", help="print the region's cells instead of counting")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run an identity sweep")
    p.add_argument("--suite", required=True,
                   choices=("products", "prop31", "kuo", "moments", "doublesum", "images", "gap", "master", "expansion"))
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--x-max", type=int, default=4)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--r-max", type=int, default=12)
    p.add_argument("--v-max", type=int, default=12)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--failures-only", action="store_true")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("correlate", help="full correlation report at (R, v)")
    p.add_argument("--R", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--n", type=int, nargs="*", help="also sample finite-n ratios at these n")
    common(p)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("converge", help="finite-n ratios approaching their limits")
    p.add_argument("--R", type=int, default=2)
    p.add_argument("--v", type=int, default=3)
    p.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"), help="dent-pair ratio instead of the gap")
    p.add_argument("--n", type=int, nargs="*")
    common(p)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("asymptote", help="exact correlation against the leading-order polynomial")
    p.add_argument("--points", nargs="*", help="R,v pairs")
    p.add_argument("--rho", nargs="*", default=["1", "4/3", "2"], help="rays v = rho R")
    p.add_argument("--r-values", type=int, nargs="*", default=[30, 60, 120, 300])
    p.add_argument("--tol", type=float, default=0.02)
    common(p)
    p.set_defaults(func=cmd_asymptote)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", 1) <= 0:
        parser.error("--tol must be positive")
    try:
        return args.func(args)
    except (ValueError, enumeration.SizeCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
