"""Command-line front end.

Commands: ``measure`` (one CSV row to stdout), ``sweep`` (surface CSV file),
``robust-map`` (robust-time CSV file), ``oracle-check`` (analytic series vs
brute-force evolution). All numbers print with 12 significant digits and a
``.`` decimal point; files are UTF-8 with plain ``\\n`` line endings.

Exit codes: 0 success, 1 computation error, 2 invalid flags or grids,
3 oracle deviation above tolerance.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from .errors import ThermalJcError
from .fock import FockBasis, compare_with_analytic, default_basis
from .model import ModelParams, TruncationSpec, measures_at
from .sweep import (
    DEFAULT_PRESENCE_THRESHOLD,
    DEFAULT_WINDOW,
    DEFAULT_WINDOW_STEP,
    Grid1D,
    MEASURES,
    robust_time_map,
    sweep_time_mpn,
)

FOUR_PI = 4.0 * math.pi
SWEEP_HEADER = "nbar1,nbar2,gt,d1,concurrence"
ROBUST_HEADER = "nbar1,nbar2,measure,gtau_over_pi,peak,present"
THREADS_ENV = "THERMAL_JC_THREADS"


class UsageError(Exception):
    """Invalid flag combination or grid; maps to exit code 2."""


def fmt(x: float) -> str:
    return format(float(x), ".12g")


def _grid(start: float, stop: float, step: float, what: str) -> Grid1D:
    try:
        return Grid1D(start, stop, step)
    except ValueError as exc:
        raise UsageError(f"invalid {what} grid: {exc}") from exc


def _threads(flag_value: int) -> int:
    env = os.environ.get(THREADS_ENV)
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {env!r}") from exc
    return max(1, flag_value)


def _params(nbar1: float, nbar2: float, g_ratio: float) -> ModelParams:
    try:
        return ModelParams(nbar1, nbar2, 1.0, g_ratio)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _truncation(epsilon: float) -> TruncationSpec:
    if not 0.0 < epsilon < 1.0:
        raise UsageError("--epsilon must lie in (0, 1)")
    return TruncationSpec(epsilon=epsilon)


def _write_csv(path: str, lines: list[str]) -> None:
    """Write atomically; never leave a partial file behind."""
    tmp = path + ".tmp"
    try:
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines))
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def cmd_measure(args: argparse.Namespace) -> int:
    p = _params(args.nbar1, args.nbar2, args.g_ratio)
    tr = _truncation(args.epsilon)
    d1, conc = measures_at(p, args.gt / p.g1, tr)
    print(SWEEP_HEADER)
    print(",".join(fmt(v) for v in (p.nbar1, p.nbar2, args.gt, d1, conc)))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    time_grid = _grid(args.gt_start, args.gt_stop, args.gt_step, "gt")
    nbar_grid = _grid(args.nbar_start, args.nbar_stop, args.nbar_step, "nbar")
    records = sweep_time_mpn(
        time_grid,
        nbar_grid,
        diagonal=args.diagonal,
        g2=args.g_ratio,
        tr=_truncation(args.epsilon),
        workers=_threads(args.threads),
    )
    lines = [SWEEP_HEADER]
    lines += [
        ",".join(fmt(v) for v in (r.nbar1, r.nbar2, r.gt, r.d1, r.concurrence))
        for r in records
    ]
    _write_csv(args.out, lines)
    return 0


def cmd_robust_map(args: argparse.Namespace) -> int:
    n1_grid = _grid(args.nbar1_start, args.nbar1_stop, args.nbar1_step, "nbar1")
    n2_grid = _grid(args.nbar2_start, args.nbar2_stop, args.nbar2_step, "nbar2")
    if args.window_stop <= args.window_start:
        raise UsageError("--window-stop must exceed --window-start")
    if args.window_step <= 0:
        raise UsageError("--window-step must be > 0")
    measures = MEASURES if args.measure == "both" else (args.measure,)
    lines = [ROBUST_HEADER]
    for measure in measures:
        records = robust_time_map(
            n1_grid,
            n2_grid,
            measure,
            window=(args.window_start, args.window_stop),
            step=args.window_step,
            presence_threshold=args.presence_threshold,
            g2=args.g_ratio,
            tr=_truncation(args.epsilon),
            workers=_threads(args.threads),
        )
        lines += [
            ",".join(
                (
                    fmt(r.nbar1),
                    fmt(r.nbar2),
                    r.measure,
                    fmt(r.gtau_over_pi),
                    fmt(r.peak_value),
                    "true" if r.present else "false",
                )
            )
            for r in records
        ]
    _write_csv(args.out, lines)
    return 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    p = _params(args.nbar1, args.nbar2, args.g_ratio)
    tr = _truncation(args.epsilon)
    time_grid = _grid(args.gt_start, args.gt_stop, args.gt_step, "gt")
    basis = FockBasis(args.ncut, args.ncut) if args.ncut else default_basis(p, tr.epsilon)
    report = compare_with_analytic(p, time_grid.points(), tr, basis)
    for line in report.lines():
        print(line)
    worst = max(report.max_deviation, report.xform[0])
    if worst > args.tolerance:
        print(f"FAIL: worst deviation {worst:.3e} exceeds tolerance {fmt(args.tolerance)}")
        return 3
    print(f"OK: all deviations within {fmt(args.tolerance)}")
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--epsilon", type=float, default=1e-12,
                     help="max neglected thermal weight per mode (default 1e-12)")
    sub.add_argument("--g-ratio", type=float, default=1.0,
                     help="g2/g1 coupling ratio; gt always means g1*t (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermal-jc",
        description="Correlation dynamics of two atoms in separate thermal cavities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="one (nbar1, nbar2, gt) point to stdout")
    m.add_argument("--nbar1", type=float, required=True)
    m.add_argument("--nbar2", type=float, required=True)
    m.add_argument("--gt", type=float, required=True, help="dimensionless time g1*t")
    _add_common(m)
    m.set_defaults(func=cmd_measure)

    s = sub.add_parser("sweep", help="measure surface over (gt, nbar) to CSV")
    s.add_argument("--gt-start", type=float, default=0.0)
    s.add_argument("--gt-stop", type=float, default=FOUR_PI)
    s.add_argument("--gt-step", type=float, default=0.01)
    s.add_argument("--nbar-start", type=float, default=0.0)
    s.add_argument("--nbar-stop", type=float, default=2.0)
    s.add_argument("--nbar-step", type=float, default=0.02)
    s.add_argument("--diagonal", action="store_true",
                   help="restrict to nbar1 = nbar2 (one row per nbar value)")
    s.add_argument("--threads", type=int, default=1,
                   help=f"worker threads; {THREADS_ENV} overrides")
    s.add_argument("--out", required=True, help="output CSV path")
    _add_common(s)
    s.set_defaults(func=cmd_sweep)

    r = sub.add_parser("robust-map", help="robust revival time map to CSV")
    r.add_argument("--nbar1-start", type=float, default=0.0)
    r.add_argument("--nbar1-stop", type=float, default=0.5)
    r.add_argument("--nbar1-step", type=float, default=0.05)
    r.add_argument("--nbar2-start", type=float, default=0.0)
    r.add_argument("--nbar2-stop", type=float, default=0.5)
    r.add_argument("--nbar2-step", type=float, default=0.05)
    r.add_argument("--measure", choices=MEASURES + ("both",), default="both")
    r.add_argument("--window-start", type=float, default=DEFAULT_WINDOW[0],
                   help="window start, units of pi (default 2.5)")
    r.add_argument("--window-stop", type=float, default=DEFAULT_WINDOW[1],
                   help="window stop, units of pi (default 3.5)")
    r.add_argument("--window-step", type=float, default=DEFAULT_WINDOW_STEP,
                   help="snap step, units of pi (default 0.025)")
    r.add_argument("--presence-threshold", type=float, default=DEFAULT_PRESENCE_THRESHOLD)
    r.add_argument("--threads", type=int, default=1,
                   help=f"worker threads; {THREADS_ENV} overrides")
    r.add_argument("--out", required=True, help="output CSV path")
    _add_common(r)
    r.set_defaults(func=cmd_robust_map)

    o = sub.add_parser("oracle-check", help="analytic series vs brute-force evolution")
    o.add_argument("--nbar1", type=float, required=True)
    o.add_argument("--nbar2", type=float, required=True)
    o.add_argument("--gt-start", type=float, default=0.0)
    o.add_argument("--gt-stop", type=float, default=FOUR_PI)
    o.add_argument("--gt-step", type=float, default=0.1)
    o.add_argument("--tolerance", type=float, default=1e-8)
    o.add_argument("--ncut", type=int, default=None,
                   help="override the Fock cutoff of both modes")
    _add_common(o)
    o.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ThermalJcError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
