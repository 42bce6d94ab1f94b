"""Command-line front end.

Exit codes: 0 success, 2 invalid input or arguments, 3 degenerate sample or
other statistical failure, 4 I/O failure. Defaults for ``--seed`` and
``--out-dir`` can be overridden with TAILINDEX_SEED and TAILINDEX_OUT_DIR.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings

from . import estimators as est
from . import harness
from .core import DegenerateSample, InvalidInput, TailIndexError, Unsupported, as_sample
from .diagnostics import pareto_gof_test, pareto_qq_data
from .gpd import GpdParams
from .sampling import (
    generate_gpd,
    generate_pareto,
    generate_stable_symmetric,
    generate_student_t,
)

EXIT_OK, EXIT_INPUT, EXIT_STAT, EXIT_IO = 0, 2, 3, 4

ESTIMATE_METHODS = ("mle", "ls", "wls", "pm", "mpm", "gmpm", "mom", "hill", "all")


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _env_seed():
    raw = os.environ.get("TAILINDEX_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"TAILINDEX_SEED is not an integer: {raw!r}")


def _env_out_dir():
    return os.environ.get("TAILINDEX_OUT_DIR", "reports")


def _csv_list(conv):
    def parse(text):
        try:
            return [conv(v) for v in text.split(",") if v.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad list: {text!r}")
    return parse


def _int_like(text):
    v = float(text)
    if v != int(v):
        raise ValueError(text)
    return int(v)


# -- input -------------------------------------------------------------------

def _open_input(path):
    if path in (None, "-"):
        return sys.stdin
    try:
        return open(path, newline="")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO)


def read_values(path=None, column=None, use_csv=False):
    """Parse one float per line (or a CSV column) into a list of floats."""
    fh = _open_input(path)
    try:
        if use_csv or column is not None:
            return _read_csv(fh, column)
        values = []
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                values.append(float(text))
            except ValueError:
                raise CliError(f"line {lineno}: cannot parse {text!r} as a number")
        return values
    finally:
        if fh is not sys.stdin:
            fh.close()


def _read_csv(fh, column):
    reader = csv.reader(fh)
    header = next(reader, None)
    if header is None:
        return []
    names = [h.strip() for h in header]
    if column is None:
        idx = 0
    elif column in names:
        idx = names.index(column)
    else:
        raise CliError(f"column {column!r} not found; available: {', '.join(names)}")
    values = []
    for lineno, row in enumerate(reader, 2):
        if not row or not "".join(row).strip():
            continue
        try:
            values.append(float(row[idx]))
        except (ValueError, IndexError):
            raise CliError(f"line {lineno}: cannot parse column {names[idx]!r}")
    return values


def _load_sample(args, min_size=1):
    values = read_values(args.input, args.column, args.csv)
    if not values:
        raise CliError("input contains no data")
    try:
        return as_sample(values, min_size=min_size)
    except InvalidInput as exc:
        raise CliError(str(exc))


# -- output ------------------------------------------------------------------

def _open_output(path):
    if path in (None, "-"):
        return sys.stdout
    try:
        return open(path, "w", newline="")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO)


def _emit(text, path=None):
    fh = _open_output(path)
    try:
        fh.write(text)
    finally:
        if fh is not sys.stdout:
            fh.close()


def _num(v):
    return None if v is None or (isinstance(v, float) and math.isnan(v)) else v


def _plain(v):
    return "NA" if v is None or (isinstance(v, float) and math.isnan(v)) else f"{v:.7g}"


# -- subcommands -------------------------------------------------------------

def cmd_generate(args):
    seed = args.seed if args.seed is not None else _env_seed()
    try:
        if args.dist == "pareto":
            if args.alpha is None or args.xmin is None:
                raise CliError("pareto needs --alpha and --xmin")
            x = generate_pareto(args.n, args.alpha, args.xmin, seed)
        elif args.dist == "gpd":
            if None in (args.xi, args.sigma, args.mu):
                raise CliError("gpd needs --xi, --sigma and --mu")
            x = generate_gpd(args.n, GpdParams(args.xi, args.sigma, args.mu), seed)
        elif args.dist == "stable":
            if args.alpha is None:
                raise CliError("stable needs --alpha (stability parameter)")
            x = generate_stable_symmetric(args.n, args.alpha, seed)
        else:
            if args.dof is None:
                raise CliError("t needs --dof")
            x = generate_student_t(args.n, args.dof, seed)
    except (InvalidInput, Unsupported) as exc:
        raise CliError(str(exc))
    _emit("".join(f"{v!r}\n" for v in x.tolist()), args.output)
    return EXIT_OK


def _run_estimator(args, x):
    m = args.method
    if m == "mle":
        if args.significance is not None and args.unbiased:
            raise CliError("--significance applies to the biased MLE only")
        return est.alpha_mle(x, biased=not args.unbiased, significance=args.significance)
    if m == "hill":
        if args.k is None:
            raise CliError("hill needs --k")
        k = args.k if args.value else _hill_rank_arg(args.k)
        return est.alpha_hills(x, k, value=args.value)
    return est.PUBLIC[m](x)


def _hill_rank_arg(k):
    try:
        return _int_like(k)
    except ValueError:
        raise CliError(f"--k must be an integer rank unless --value is given, got {k}")


def cmd_estimate(args):
    x = _load_sample(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", est.EstimatorWarning)
        try:
            if args.method == "all":
                return _estimate_all(args, x)
            res = _run_estimator(args, x)
        except DegenerateSample as exc:
            raise CliError(str(exc), EXIT_STAT)
        except (InvalidInput, Unsupported) as exc:
            raise CliError(str(exc))
    for w in res.warnings:
        print(f"warning: {w}", file=sys.stderr)
    doc = {"method": args.method, **res.as_dict()}
    if args.format == "json":
        out = json.dumps(doc) + "\n"
    elif args.format == "csv":
        keys = [k for k in ("method", "shape", "scale", "lower_bound", "upper_bound") if k in doc]
        out = ",".join(keys) + "\n" + ",".join(str(doc[k]) for k in keys) + "\n"
    else:
        out = "".join(f"{k}: {_plain(doc[k])}\n" for k in ("shape", "lower_bound", "upper_bound", "scale") if k in doc)
        out += "".join(f"warning: {w}\n" for w in res.warnings)
    _emit(out, args.output)
    return EXIT_OK


def _estimate_all(args, x):
    rows = est.generate_all_estimates(x)
    for r in rows:
        if r.result is not None:
            for w in r.result.warnings:
                print(f"warning ({r.method}): {w}", file=sys.stderr)
    if args.format == "json":
        doc = {"method": "all", "rows": [
            {"method": r.method, "label": r.label, "shape": _num(r.shape), "scale": _num(r.scale),
             "error": None if r.error is None else str(r.error)}
            for r in rows
        ]}
        out = json.dumps(doc) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["method", "label", "shape", "scale", "error"])
        for r in rows:
            w.writerow([r.method, r.label, "" if r.result is None else r.shape,
                        "" if r.result is None else r.scale, "" if r.error is None else str(r.error)])
        out = buf.getvalue()
    else:
        width = max(len(r.label) for r in rows)
        out = f"{'Method':<{width}}  {'Shape':>12}  {'Scale':>12}\n"
        for r in rows:
            out += f"{r.label:<{width}}  {_plain(r.shape):>12}  {_plain(r.scale):>12}\n"
    _emit(out, args.output)
    return EXIT_STAT if all(r.result is None for r in rows) else EXIT_OK


def cmd_qq(args):
    x = _load_sample(args)
    try:
        qq = pareto_qq_data(x)
    except TailIndexError as exc:
        raise CliError(str(exc), EXIT_STAT)
    _emit(qq.to_csv(), args.output)
    return EXIT_OK


def cmd_gof(args):
    x = _load_sample(args)
    try:
        res = pareto_gof_test(x)
    except TailIndexError as exc:
        raise CliError(str(exc), EXIT_STAT)
    _emit(json.dumps(res.as_dict()) + "\n", args.output)
    return EXIT_OK


def _write(rows, args, stem, metadata):
    try:
        paths = harness.write_reports(rows, args.out_dir or _env_out_dir(), stem, metadata)
    except OSError as exc:
        raise CliError(f"cannot write reports: {exc}", EXIT_IO)
    for p in paths:
        print(p)


def cmd_bench(args):
    seed = args.seed if args.seed is not None else _env_seed()
    try:
        rows = harness.bench_estimators(args.sizes, args.runs, args.methods, seed, args.warmup)
    except ValueError as exc:
        raise CliError(str(exc))
    meta = {"runs": args.runs, "warmup": args.warmup, "seed": seed, "unit": "microseconds",
            "clock": "time.perf_counter_ns", "timing_excludes": "data generation and I/O"}
    _write(rows, args, "bench", meta)
    return EXIT_OK


def cmd_accuracy(args):
    seed = args.seed if args.seed is not None else _env_seed()
    try:
        rows = harness.run_accuracy_grid(args.alphas, args.sizes, args.seeds, args.methods,
                                         args.hill_fractions, seed, args.xmin, args.workers)
    except ValueError as exc:
        raise CliError(str(exc))
    meta = {"seed": seed, "xmin": args.xmin, "seeds_per_cell": args.seeds,
            "alphas": args.alphas, "sizes": args.sizes, "hill_fractions": args.hill_fractions}
    _write(rows, args, "accuracy", meta)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def _add_input(p):
    p.add_argument("input", nargs="?", default="-", help="input file, one value per line ('-' for stdin)")
    p.add_argument("--csv", action="store_true", help="read the input as CSV with a header row")
    p.add_argument("--column", help="CSV column name (implies --csv; default first column)")
    p.add_argument("-o", "--output", help="write the result here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tailindex", description="Pareto tail-index toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="draw random samples, one per line")
    g.add_argument("--n", type=_int_like, required=True)
    g.add_argument("--dist", choices=("pareto", "gpd", "stable", "t"), default="pareto")
    g.add_argument("--alpha", type=float, help="Pareto shape, or stability for --dist stable")
    g.add_argument("--xmin", type=float)
    g.add_argument("--xi", type=float)
    g.add_argument("--sigma", type=float)
    g.add_argument("--mu", type=float)
    g.add_argument("--dof", type=float, help="degrees of freedom for --dist t")
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("estimate", help="estimate the tail index")
    _add_input(e)
    e.add_argument("--method", choices=ESTIMATE_METHODS, default="mle")
    e.add_argument("--unbiased", action="store_true", help="MLE: bias-corrected shape and scale")
    e.add_argument("--significance", type=float, help="MLE: attach a confidence interval at this level")
    e.add_argument("--k", type=float, help="Hill: tail size (rank), or threshold with --value")
    e.add_argument("--value", action="store_true", help="Hill: treat --k as a threshold value")
    e.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    e.set_defaults(func=cmd_estimate)

    q = sub.add_parser("qq", help="exponential QQ plot data as CSV")
    _add_input(q)
    q.set_defaults(func=cmd_qq)

    f = sub.add_parser("gof", help="Pareto goodness-of-fit p-value")
    _add_input(f)
    f.set_defaults(func=cmd_gof)

    b = sub.add_parser("bench", help="time estimators over sample sizes")
    b.add_argument("--sizes", type=_csv_list(_int_like), default=[10**3, 10**4, 10**5, 10**6, 10**7])
    b.add_argument("--runs", type=int, default=100)
    b.add_argument("--warmup", type=int, default=harness.WARMUP_RUNS)
    b.add_argument("--methods", type=_csv_list(str), default=list(harness.DEFAULT_BENCH_METHODS))
    b.add_argument("--seed", type=int)
    b.add_argument("--out-dir")
    b.set_defaults(func=cmd_bench)

    a = sub.add_parser("accuracy", help="run the alpha x size x seed accuracy grid")
    a.add_argument("--alphas", type=_csv_list(float), default=list(harness.DEFAULT_ALPHAS))
    a.add_argument("--sizes", type=_csv_list(_int_like), default=list(harness.DEFAULT_SIZES))
    a.add_argument("--seeds", type=int, default=4, help="samples per (alpha, size) cell")
    a.add_argument("--methods", type=_csv_list(str), default=list(harness.DEFAULT_ACCURACY_METHODS))
    a.add_argument("--hill-fractions", type=_csv_list(float), default=list(harness.DEFAULT_HILL_FRACTIONS))
    a.add_argument("--xmin", type=float, default=harness.ACCURACY_XMIN)
    a.add_argument("--workers", type=int, default=1)
    a.add_argument("--seed", type=int)
    a.add_argument("--out-dir")
    a.set_defaults(func=cmd_accuracy)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "column", None) is not None:
        args.csv = True
    try:
        return args.func(args)
    except CliError as exc:
        print(f"tailindex {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
