"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside the pytest verdicts.
"""

import time

import numpy as np
import pytest

from thermal_jc import (
    Grid1D,
    ModelParams,
    atomic_xstate,
    compare_with_analytic,
    concurrence_general,
    concurrence_xstate,
    discord_1norm_variational,
    discord_1norm_xstate,
    esd_intervals,
    measures_at,
    measures_on_grid,
    robust_time_map,
)
from thermal_jc.cli import main as cli_main

from helpers import random_xstate

FOUR_VALUES = (3.0, 2.975, 2.95, 2.925)


def report(name: str, ok: bool, detail: str = "") -> None:
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] {name}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_criterion_vacuum_closed_forms():
    start = time.perf_counter()
    gts = Grid1D(0.0, 4 * np.pi, 0.001).points()
    d1, c = measures_on_grid(ModelParams(0.0, 0.0), gts)
    dev_d1 = float(np.max(np.abs(d1 - np.cos(gts) ** 2)))
    dev_c = float(np.max(np.abs(c - np.cos(gts) ** 4)))
    elapsed = time.perf_counter() - start
    report(
        "vacuum closed forms (d1=cos^2, c=cos^4, step 0.001)",
        dev_d1 < 1e-12 and dev_c < 1e-12 and elapsed < 1.0,
        f"max dev d1={dev_d1:.2e}, c={dev_c:.2e}, {elapsed:.2f}s",
    )


def test_criterion_initial_state_identity(rng):
    worst = 0.0
    for _ in range(20):
        p = ModelParams(rng.uniform(0, 2), rng.uniform(0, 2))
        d1, c = measures_at(p, 0.0)
        worst = max(worst, abs(d1 - 1.0), abs(c - 1.0))
    report("initial-state identity (measures at t=0 equal 1)", worst < 1e-12,
           f"max dev {worst:.2e}")


def test_criterion_oracle_equivalence():
    gts = Grid1D(0.0, 4 * np.pi, 0.1).points()
    worst_coeff = 0.0
    worst_x = 0.0
    for n1 in (0.0, 0.5, 1.0):
        for n2 in (0.0, 0.5, 1.0):
            rep = compare_with_analytic(ModelParams(n1, n2), gts)
            worst_coeff = max(worst_coeff, rep.max_deviation)
            worst_x = max(worst_x, rep.xform[0])
    report(
        "oracle equivalence (series vs brute force on {0,0.5,1}^2 x [0,4pi])",
        worst_coeff < 1e-8 and worst_x < 1e-10,
        f"max coefficient dev {worst_coeff:.2e}, x-form dev {worst_x:.2e}",
    )


def test_criterion_measure_cross_validation(rng):
    worst_conc = 0.0
    for _ in range(10_000):
        s = random_xstate(rng)
        worst_conc = max(
            worst_conc, abs(concurrence_xstate(s) - concurrence_general(s.to_matrix()))
        )

    cases = [
        (0.2, 0.4, 1.0), (0.5, 0.5, 0.8), (1.0, 0.3, 2.2), (0.7, 0.7, 3.0),
        (0.1, 0.9, 5.5), (0.25, 0.25, 9.3), (1.5, 0.2, 1.7), (0.4, 1.1, 4.4),
        (0.6, 0.05, 7.9), (2.0, 2.0, 0.5),
    ]
    worst_disc = 0.0
    for n1, n2, gt in cases:
        s = atomic_xstate(ModelParams(n1, n2), gt)
        worst_disc = max(
            worst_disc,
            abs(discord_1norm_variational(s.to_matrix()) - discord_1norm_xstate(s)),
        )
    report(
        "measure cross-validation (concurrence 1e4 states; discord variational)",
        worst_conc < 1e-10 and worst_disc < 2e-3,
        f"concurrence dev {worst_conc:.2e}, discord dev {worst_disc:.2e}",
    )


def test_criterion_esd_esb():
    p = ModelParams(0.5, 0.5)
    intervals = esd_intervals(p)
    ok_zones = len(intervals) >= 1 and all(hi - lo > 0.05 for lo, hi in intervals)
    rebirth = False
    if intervals:
        _, hi = intervals[0]
        after = np.arange(hi + 0.1, 4 * np.pi, 0.1)
        rebirth = max(measures_at(p, gt)[1] for gt in after) > 1e-3
    vacuum_clean = esd_intervals(ModelParams(0.0, 0.0)) == []
    report(
        "ESD/ESB (dead zones at nbar=0.5, none at vacuum)",
        ok_zones and rebirth and vacuum_clean,
        f"{len(intervals)} zones, first width "
        f"{(intervals[0][1] - intervals[0][0]) if intervals else 0:.3f}, "
        f"rebirth={rebirth}, vacuum clean={vacuum_clean}",
    )


def test_criterion_no_sudden_death_for_discord():
    gts = Grid1D(0.0, 4 * np.pi, 0.1).points()
    d1, _ = measures_on_grid(ModelParams(0.5, 0.5), gts)
    below = d1 < 1e-4
    longest = run = 0
    for flag in below:
        run = run + 1 if flag else 0
        longest = max(longest, run)
    report(
        "no sudden death for discord (runs of d1 < 1e-4 never exceed 3 points)",
        longest <= 3,
        f"longest run {longest} points",
    )


def test_criterion_robust_time_quantization():
    grid = Grid1D(0.0, 0.5, 0.05)
    quantized = True
    for measure in ("discord", "concurrence"):
        for rec in robust_time_map(grid, grid, measure):
            if rec.present and not any(abs(rec.gtau_over_pi - v) < 1e-9 for v in FOUR_VALUES):
                quantized = False

    by_pair = {
        (round(r.nbar1, 3), round(r.nbar2, 3)): r.gtau_over_pi
        for r in robust_time_map(grid, grid, "discord")
    }
    low = by_pair[(0.05, 0.05)]
    mid = by_pair[(0.3, 0.3)]
    interior_ok = abs(low - 3.0) < 1e-9 and abs(mid - 2.975) < 1e-9
    report(
        "robust-time quantization (four values; interior anchors 0.05->3.000, 0.3->2.975)",
        quantized and interior_ok,
        f"quantized={quantized}, gtau/pi(0.05)={low:.3f} (stated 3.000), "
        f"gtau/pi(0.3)={mid:.3f} (stated 2.975); the windowed argmax of the "
        "evolution series lands one snap step lower at both anchors, and the "
        "brute-force evolution confirms the series values, so the stated "
        "anchors are unattainable; see the decisions ledger",
    )


def test_criterion_sweep_determinism(tmp_path):
    args = [
        "sweep", "--gt-stop", "6.3", "--gt-step", "0.01",
        "--nbar-stop", "1.0", "--nbar-step", "0.05", "--diagonal",
    ]
    one = tmp_path / "one.csv"
    many = tmp_path / "many.csv"
    assert cli_main(args + ["--threads", "1", "--out", str(one)]) == 0
    assert cli_main(args + ["--threads", "8", "--out", str(many)]) == 0
    identical = one.read_bytes() == many.read_bytes()
    report("sweep determinism (1 vs 8 workers byte-identical)", identical)
