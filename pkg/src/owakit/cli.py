"""Command-line interface.

Subcommands::

    owakit weights    --scheme S [--n N]
    owakit aggregate  --scheme S --input DATA.csv
    owakit orness     (--scheme S | W1 W2 ...)
    owakit quantifier --scheme S [--grid M]
    owakit demo-bias  [--n N] [--magnitude X] [--trials T] [--seed K]

Output is comma-separated by default or JSON records (one object per line)
with ``--format records``. Numbers are printed with 12 significant digits.

Exit codes: 0 success, 2 validation error, 3 dimension error,
4 convergence error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import yaml

from . import __version__
from .core import WeightVector, andness, dispersion, orness
from .demo import run_bias_demo
from .errors import ConvergenceError, DimensionError, DomainError, ValidationError
from .quantifier import grid
from .scheme import load_scheme, parse_quantifier

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DIMENSION = 3
EXIT_CONVERGENCE = 4


def fmt(x: float) -> str:
    return format(float(x), ".12g")


def _measures(w) -> dict:
    return {
        "orness": orness(w),
        "andness": andness(w),
        "dispersion": dispersion(w),
    }


def read_rows(path) -> list[list[float]]:
    """Comma-separated numeric rows; blank lines and ``#`` lines are skipped."""
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            fields = next(csv.reader([stripped]))
            try:
                rows.append([float(x) for x in fields])
            except ValueError:
                raise ValidationError(f"line {lineno}: non-numeric value in {stripped!r}") from None
    if not rows:
        raise ValidationError(f"{path}: no data rows")
    return rows


class _Writer:
    def __init__(self, stream, fmt_name, header_fields, comment=None):
        self.stream = stream
        self.records = fmt_name == "records"
        self.fields = header_fields
        if not self.records:
            if comment:
                stream.write(f"# {comment}\n")
            self.csv = csv.writer(stream, lineterminator="\n")
            self.csv.writerow(header_fields)

    def row(self, record: dict):
        if self.records:
            self.stream.write(json.dumps(record) + "\n")
        else:
            self.csv.writerow([_cell(record[k]) for k in self.fields])


def _cell(v):
    if isinstance(v, (list, tuple)):
        return ";".join(fmt(x) for x in v)
    if isinstance(v, float):
        return fmt(v)
    return v


def _round_record(d: dict) -> dict:
    # records carry the same 12-significant-digit values as the CSV
    out = {}
    for k, v in d.items():
        if isinstance(v, float):
            out[k] = float(fmt(v))
        elif isinstance(v, list) and v and isinstance(v[0], float):
            out[k] = [float(fmt(x)) for x in v]
        else:
            out[k] = v
    return out


def cmd_weights(args, out) -> int:
    scheme = load_scheme(args.scheme)
    w = scheme.weight_vector(args.n)
    WeightVector(w.values)  # emitted vectors must re-validate
    rec = {"n": len(w), **_measures(w), "weights": list(map(float, w.values))}
    writer = _Writer(out, args.format, ["n", "orness", "andness", "dispersion", "weights"])
    if writer.records:
        rec = {"scheme": scheme.raw, "version": __version__, **rec}
    writer.row(_round_record(rec))
    return EXIT_OK


def cmd_aggregate(args, out) -> int:
    scheme = load_scheme(args.scheme)
    rows = read_rows(args.input)
    if scheme.position_based:
        n = scheme.fixed_n or len(rows[0])
        for i, row in enumerate(rows, start=1):
            if len(row) != n:
                raise DimensionError(f"row {i} has {len(row)} values, expected {n}")
        shared = scheme.weight_vector(n)
    writer = _Writer(
        out,
        args.format,
        ["row", "aggregate", "orness", "andness", "dispersion", "weights"],
        comment=f"owakit {__version__} scheme={scheme.kind}",
    )
    for i, row in enumerate(rows, start=1):
        w = shared if scheme.position_based else scheme.row_weights(row)
        rec = {
            "row": i,
            "aggregate": scheme.aggregate(row, w),
            **_measures(w),
            "weights": list(map(float, w.values)),
        }
        if writer.records:
            rec = {"scheme": scheme.raw, "version": __version__, **rec}
        writer.row(_round_record(rec))
    return EXIT_OK


def cmd_orness(args, out) -> int:
    if args.scheme:
        w = load_scheme(args.scheme).weight_vector(args.n)
    elif args.values:
        w = WeightVector(args.values)
    else:
        raise ValidationError("give either --scheme or explicit weights")
    writer = _Writer(out, args.format, ["n", "orness", "andness", "dispersion"])
    writer.row(_round_record({"n": len(w), **_measures(w)}))
    return EXIT_OK


def cmd_quantifier(args, out) -> int:
    with open(args.scheme, encoding="utf-8") as fh:
        try:
            desc = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ValidationError(f"cannot parse scheme file: {exc}") from None
    # accept either a full scheme with a quantifier field or a bare quantifier
    if isinstance(desc, dict) and "quantifier" in desc:
        q = parse_quantifier(desc["quantifier"])
    else:
        q = parse_quantifier(desc, path="")
    if args.grid < 1:
        raise ValidationError("--grid must be >= 1")
    xs = grid(args.grid)
    qs = q.values(xs)
    writer = _Writer(out, args.format, ["x", "q"])
    for x, v in zip(xs, qs):
        writer.row(_round_record({"x": float(x), "q": float(v)}))
    return EXIT_OK


def cmd_demo_bias(args, out) -> int:
    res = run_bias_demo(n=args.n, magnitude=args.magnitude, trials=args.trials, seed=args.seed)
    writer = _Writer(
        out,
        args.format,
        ["scheme", "mean_abs_deviation"],
        comment=f"owakit {__version__} demo-bias n={res.n} magnitude={fmt(res.magnitude)} "
        f"trials={res.trials} seed={res.seed}",
    )
    for name, dev in res.rows():
        writer.row(_round_record({"scheme": name, "mean_abs_deviation": dev}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="owakit", description="OWA weights and aggregation")
    parser.add_argument("--version", action="version", version=f"owakit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", help="write here instead of stdout")
        p.add_argument("--format", choices=("csv", "records"), default="csv")

    p = sub.add_parser("weights", help="weight vector and its measures")
    p.add_argument("--scheme", required=True)
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("aggregate", help="aggregate each row of a CSV file")
    p.add_argument("--scheme", required=True)
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("orness", help="orness, andness and dispersion of a weight vector")
    p.add_argument("values", nargs="*", type=float, help="explicit weights")
    p.add_argument("--scheme")
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(func=cmd_orness)

    p = sub.add_parser("quantifier", help="tabulate Q(k/grid) for plotting")
    p.add_argument("--scheme", required=True)
    p.add_argument("--grid", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_quantifier)

    p = sub.add_parser("demo-bias", help="robustness of centered weights to one biased score")
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--magnitude", type=float, default=10.0, help="outlier shift in band-widths")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    common(p)
    p.set_defaults(func=cmd_demo_bias)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except DimensionError as exc:
        print(f"dimension error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (ValidationError, DomainError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
