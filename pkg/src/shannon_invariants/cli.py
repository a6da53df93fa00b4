"""Command-line entry point: ``shannon-invariants <command> ...``.

Exit codes: 0 success, 1 input error, 2 ill-defined ``r_bar``/``v_bar``
(the report is still written, with those fields null).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import __version__
from .dist import from_samples, read_csv
from .errors import ShannonInvariantsError, UnsupportedSize
from .invariants import ILL_DEFINED_THRESHOLD, analyze
from .lattice import render_lattice
from .pid_oracle import run_certificates
from .quantize import QuantizerConfig, quantize_table, read_labels, read_matrix

EXIT_OK, EXIT_INPUT, EXIT_ILL_DEFINED = 0, 1, 2
_UNIT_SCALE = {"bits": 1.0, "nats": math.log(2.0)}


def _num(x):
    """Round to 12 significant digits for stable serialisation."""
    if x is None:
        return None
    if isinstance(x, bool):
        return x
    if isinstance(x, (list, tuple)):
        return [_num(v) for v in x]
    if isinstance(x, dict):
        return {k: _num(v) for k, v in x.items()}
    if isinstance(x, float):
        return float(f"{x:.12g}") + 0.0
    return x


def cmd_invariants(csv_path, target=None, unit="bits", threshold=ILL_DEFINED_THRESHOLD, fmt="json"):
    """Build the report document for a CSV sample table.

    Information quantities are scaled to ``unit``; the JSON field names keep
    their ``_bits`` suffix and the unit actually used is recorded under
    ``unit``.
    """
    table = read_csv(csv_path, target)
    d = from_samples(table)
    rep = analyze(d, threshold=threshold)
    s = _UNIT_SCALE[unit]
    doc = {
        "n_sources": rep.n_sources,
        "total_mi_bits": rep.total_mi * s,
        "marginal_mi_bits": [v * s for v in rep.marginal_mi],
        "conditional_mi_bits": [v * s for v in rep.conditional_mi],
        "r_bar": rep.r_bar,
        "v_bar": rep.v_bar,
        "rsi_bits": rep.rsi * s,
        "drsi_bits": rep.drsi * s,
        "bounds": rep.bounds.to_dict() if rep.bounds is not None else None,
        "well_defined": rep.well_defined,
        "unit": unit,
        "metadata": {
            "input": str(csv_path),
            "rows": len(table),
            "source_names": list(table.source_names),
            "target": table.column_names[table.target_index],
            "alphabet_sizes": [len(a) for a in d.alphabets],
            "tool_version": __version__,
            "config": {"unit": unit, "threshold_bits": threshold, "format": fmt},
        },
    }
    return _num(doc)


def _flatten(doc, prefix=""):
    for k in sorted(doc):
        v = doc[k]
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            yield from _flatten(v, key + ".")
        elif isinstance(v, list):
            yield key, ",".join(_fmt_scalar(x) for x in v)
        else:
            yield key, _fmt_scalar(v)


def _fmt_scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def render_document(doc: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    return "".join(f"{k}\t{v}\n" for k, v in _flatten(doc))


def _write(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="") as fh:
            fh.write(text)


def _error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def _run_invariants(args) -> int:
    try:
        doc = cmd_invariants(args.csv, args.target, args.unit, args.threshold, args.format)
    except (OSError, ShannonInvariantsError, ValueError) as exc:
        return _error(str(exc))
    _write(render_document(doc, args.format), args.output)
    if not doc["well_defined"]:
        print("warning: I(X;Y) is not above the threshold; r_bar and v_bar are undefined",
              file=sys.stderr)
        return EXIT_ILL_DEFINED
    return EXIT_OK


def _run_lattice(args) -> int:
    try:
        text = render_lattice(args.n)
    except UnsupportedSize as exc:
        return _error(str(exc))
    _write(text, args.output)
    return EXIT_OK


def _run_oracle_check(args) -> int:
    try:
        run = run_certificates(args.n, args.trials, args.seed)
    except UnsupportedSize as exc:
        return _error(str(exc))
    _write(run.summary(args.tolerance), args.output)
    return EXIT_OK if run.passed(args.tolerance) else EXIT_INPUT


def _run_quantize(args) -> int:
    try:
        matrix = read_matrix(args.matrix)
        labels = read_labels(args.targets)
        cfg = QuantizerConfig(args.sigma_min, args.sigma_max, args.levels, args.seed)
        table = quantize_table(matrix, cfg, labels, symbols=args.symbols)
    except (OSError, ShannonInvariantsError, ValueError) as exc:
        return _error(str(exc))
    _write(table.to_csv(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="shannon-invariants",
        description="Shannon-invariant summaries of information decomposition.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("invariants", help="r_bar, v_bar, RSI and DRSI of a CSV sample table")
    q.add_argument("csv")
    q.add_argument("--target", default=None, help="target column name (default: last column)")
    q.add_argument("--unit", choices=("bits", "nats"), default="bits")
    q.add_argument("--threshold", type=float, default=ILL_DEFINED_THRESHOLD,
                   help="I(X;Y) in bits at or below which r_bar/v_bar are undefined")
    q.add_argument("--format", choices=("json", "tsv"), default="json")
    q.add_argument("--output", default=None)
    q.set_defaults(func=_run_invariants)

    q = sub.add_parser("lattice", help="list antichains with their degrees")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--output", default=None)
    q.set_defaults(func=_run_lattice)

    q = sub.add_parser("oracle-check", help="certify the invariants against an explicit decomposition")
    q.add_argument("--n", type=int, default=2)
    q.add_argument("--trials", type=int, default=1000)
    q.add_argument("--seed", type=int, default=7)
    q.add_argument("--tolerance", type=float, default=1e-9)
    q.add_argument("--output", default=None)
    q.set_defaults(func=_run_oracle_check)

    q = sub.add_parser("quantize", help="stochastically quantise an activation matrix to CSV")
    q.add_argument("matrix", help="matrix file: 'rows cols' header then row-major values")
    q.add_argument("targets", help="label file: one target symbol per line")
    q.add_argument("--levels", type=int, default=8)
    q.add_argument("--sigma-min", type=float, default=-1.0)
    q.add_argument("--sigma-max", type=float, default=1.0)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--symbols", choices=("value", "index"), default="value")
    q.add_argument("--output", default=None)
    q.set_defaults(func=_run_quantize)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
