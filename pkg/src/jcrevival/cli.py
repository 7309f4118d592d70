"""Command-line front end: scans, peak reports, and figure presets.

Data goes to the output files; diagnostics to stderr.  Exit codes:
0 success, 2 configuration error, 3 numerical failure.
"""

import argparse
import json
import sys
import time
from importlib.metadata import version as _pkg_version

import numpy as np

from .entanglement import InvalidStateError, NumericalFailureError
from .fock import DEFAULT_TAIL_TOLERANCE
from .scan import COLUMNS, METHODS, ConcurrenceSeries, ScanConfig, detect_peaks, run_scan

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

CSV_HEADER = "tau," + ",".join(COLUMNS)

# Canonical figure reproductions.  The wide and detail windows use
# alpha=10 (the detail figure states it; the wide figure's revival at
# tau=20*pi implies the same); the two smaller-field panels use the
# stated mean photon numbers 25 and 36.
PRESETS = {
    "fig1": ScanConfig(alpha=10.0, tau_start=0.0, tau_end=200.0, steps=4001,
                       methods=("exact", "xproj", "series", "analytic")),
    "fig2": ScanConfig(alpha=10.0, tau_start=57.0, tau_end=69.0, steps=2401,
                       methods=("exact", "xproj", "analytic")),
    "fig3a": ScanConfig(alpha=5.0, tau_start=0.0, tau_end=60.0, steps=1201,
                        methods=("exact", "analytic")),
    "fig3b": ScanConfig(alpha=6.0, tau_start=0.0, tau_end=72.0, steps=1441,
                        methods=("exact", "analytic")),
}


def _fmt(value: float) -> str:
    """Full-precision decimal float; empty field for absent values."""
    if np.isnan(value):
        return ""
    return format(value, ".17g")


def write_csv(series: ConcurrenceSeries, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(CSV_HEADER + "\n")
        for i, tau in enumerate(series.tau):
            row = [_fmt(float(tau))] + [_fmt(float(series.data[c][i])) for c in COLUMNS]
            fh.write(",".join(row) + "\n")


def write_json(series: ConcurrenceSeries, path: str) -> None:
    rows = []
    for i, tau in enumerate(series.tau):
        row = {"tau": float(tau)}
        for c in COLUMNS:
            v = float(series.data[c][i])
            row[c] = None if np.isnan(v) else v
        rows.append(row)
    with open(path, "w") as fh:
        json.dump({"metadata": series.metadata, "rows": rows}, fh, indent=1)


def write_manifest(path: str, argv, series: ConcurrenceSeries, wall_time: float) -> None:
    try:
        lib_version = _pkg_version("jcrevival")
    except Exception:
        lib_version = "unknown"
    manifest = {
        "argv": list(argv),
        "config": series.metadata.get("config", {}),
        "library_version": lib_version,
        "wall_time_s": wall_time,
        "n_max": series.metadata.get("n_max"),
        "tail_mass": series.metadata.get("tail_mass"),
    }
    with open(path + ".manifest.json", "w") as fh:
        json.dump(manifest, fh, indent=1)


def read_csv(path: str) -> ConcurrenceSeries:
    with open(path) as fh:
        header = fh.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(f"unrecognized CSV header in {path}")
        table = []
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != len(COLUMNS) + 1:
                raise ValueError(f"malformed CSV row in {path}: {line!r}")
            table.append([float(f) if f else np.nan for f in fields])
    if not table:
        arr = np.zeros((0, len(COLUMNS) + 1))
    else:
        arr = np.array(table)
    metadata = {}
    sidecar = path + ".manifest.json"
    try:
        with open(sidecar) as fh:
            manifest = json.load(fh)
        metadata = {
            "alpha": manifest.get("config", {}).get("alpha", 0.0),
            "config": manifest.get("config", {}),
        }
    except (OSError, json.JSONDecodeError):
        pass
    data = {c: arr[:, i + 1].copy() for i, c in enumerate(COLUMNS)}
    return ConcurrenceSeries(tau=arr[:, 0].copy(), data=data, metadata=metadata)


def _parse_methods(text: str):
    methods = tuple(m.strip() for m in text.split(",") if m.strip())
    unknown = set(methods) - set(METHODS)
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown methods {sorted(unknown)}; choose from {','.join(METHODS)}"
        )
    return methods


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jcrevival",
        description="Entanglement collapse/revival scans for two atoms in "
        "separate coherently driven cavities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="run a concurrence time sweep")
    p_scan.add_argument("--alpha", type=float, required=True)
    p_scan.add_argument("--tau-start", type=float, default=0.0)
    p_scan.add_argument("--tau-end", type=float, required=True)
    p_scan.add_argument("--steps", type=int, required=True)
    p_scan.add_argument("--methods", type=_parse_methods, default=("exact",),
                        help="comma-separated subset of exact,xproj,series,analytic")
    p_scan.add_argument("--tail-tol", type=float, default=DEFAULT_TAIL_TOLERANCE)
    p_scan.add_argument("--k-window", type=int, default=2)
    p_scan.add_argument("--out", required=True)
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan.add_argument("--workers", type=int, default=1)

    p_report = sub.add_parser("report", help="peak/collapse report from a scan CSV")
    p_report.add_argument("--in", dest="input", required=True)
    p_report.add_argument("--out", required=True)
    p_report.add_argument("--column", default="C_exact")
    p_report.add_argument("--threshold", type=float, default=0.05)
    p_report.add_argument("--alpha", type=float, default=None,
                          help="override alpha when no manifest sidecar exists")

    p_preset = sub.add_parser(
        "preset",
        help="reproduce a canonical figure scan (fig1, fig2, fig3a, fig3b)",
        description="fig1: wide alpha=10 sweep; fig2: detail window around "
        "tau=20*pi at alpha=10; fig3a/fig3b: alpha=5 and alpha=6 sweeps "
        "(mean photon numbers 25 and 36).",
    )
    p_preset.add_argument("name", choices=sorted(PRESETS))
    p_preset.add_argument("--out-dir", default=".")
    p_preset.add_argument("--workers", type=int, default=1)
    return parser


def cmd_scan(args, argv) -> int:
    try:
        config = ScanConfig(
            alpha=args.alpha,
            tau_start=args.tau_start,
            tau_end=args.tau_end,
            steps=args.steps,
            methods=tuple(args.methods),
            tail_tolerance=args.tail_tol,
            k_window=args.k_window,
            workers=args.workers,
        )
    except ValueError as exc:
        print(f"jcrevival: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    start = time.perf_counter()
    try:
        series = run_scan(config)
    except (NumericalFailureError, InvalidStateError) as exc:
        print(f"jcrevival: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    wall = time.perf_counter() - start
    if args.format == "json":
        write_json(series, args.out)
    else:
        write_csv(series, args.out)
    write_manifest(args.out, argv, series, wall)
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        series = read_csv(args.input)
    except (OSError, ValueError) as exc:
        print(f"jcrevival: cannot read scan input: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.alpha is not None:
        series.metadata["alpha"] = args.alpha
    if len(series) == 0:
        report = {"column": args.column, "peaks": [], "collapse_windows": []}
    else:
        try:
            report = detect_peaks(series, args.column, threshold=args.threshold).to_dict()
        except (ValueError, KeyError) as exc:
            print(f"jcrevival: report error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
    with open(args.out, "w") as fh:
        json.dump(report, fh, indent=1)
    return EXIT_OK


def cmd_preset(args, argv) -> int:
    import os

    config = PRESETS[args.name]
    if args.workers != 1:
        config = ScanConfig(**{**config.__dict__, "workers": args.workers})
    os.makedirs(args.out_dir, exist_ok=True)
    csv_path = os.path.join(args.out_dir, f"{args.name}.csv")
    start = time.perf_counter()
    try:
        series = run_scan(config)
    except (NumericalFailureError, InvalidStateError) as exc:
        print(f"jcrevival: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    wall = time.perf_counter() - start
    write_csv(series, csv_path)
    write_manifest(csv_path, argv, series, wall)
    report = detect_peaks(series, "C_exact").to_dict()
    with open(os.path.join(args.out_dir, f"{args.name}.report.json"), "w") as fh:
        json.dump(report, fh, indent=1)
    return EXIT_OK


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, 0 on --help; keep its code
        return int(exc.code) if exc.code else EXIT_OK
    if args.command == "scan":
        return cmd_scan(args, argv)
    if args.command == "report":
        return cmd_report(args)
    if args.command == "preset":
        return cmd_preset(args, argv)
    parser.error(f"unknown command {args.command}")
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
