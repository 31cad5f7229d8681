"""End-to-end check: CSV files produced by the thermal-jc command line render
without error, and the robust-map legend matches the file contents exactly.

The producer is driven only through its public CLI, never imported.
"""

import shutil
import subprocess
import sys

import pytest

from thermal_jc_plots import FigureSpec, read_robust_csv, render_fig2, render_fig3
from thermal_jc_plots.fig3 import ABSENT


def run_producer(args: list[str]) -> None:
    binary = shutil.which("thermal-jc")
    cmd = [binary] if binary else [sys.executable, "-m", "thermal_jc.cli"]
    result = subprocess.run(cmd + args, capture_output=True, text=True)
    if result.returncode != 0:
        pytest.fail(f"producer CLI failed: {result.stderr}")


def test_figure_pipeline(tmp_path):
    sweep_csv = tmp_path / "sweep50.csv"
    run_producer(
        [
            "sweep", "--diagonal",
            "--gt-start", "0", "--gt-stop", "12.25", "--gt-step", "0.25",
            "--nbar-start", "0", "--nbar-stop", "1.96", "--nbar-step", "0.04",
            "--out", str(sweep_csv),
        ]
    )
    assert sum(1 for _ in open(sweep_csv)) == 1 + 50 * 50

    fig2 = tmp_path / "fig2.png"
    render_fig2(FigureSpec(str(sweep_csv), str(fig2)))
    assert fig2.stat().st_size > 0

    robust_csv = tmp_path / "robust.csv"
    run_producer(["robust-map", "--out", str(robust_csv)])

    fig3 = tmp_path / "fig3.png"
    result = render_fig3(FigureSpec(str(robust_csv), str(fig3), kind="robust-map"))
    assert fig3.stat().st_size > 0

    rows = read_robust_csv(str(robust_csv))
    expected = sorted({r.gtau_over_pi for r in rows if r.present}, reverse=True)
    expected_cats = [f"{v:.3f}" for v in expected]
    if any(not r.present for r in rows):
        expected_cats.append(ABSENT)
    assert result.categories == expected_cats
    print(f"[PASS] figure pipeline (50x50 sweep + robust map; legend = {result.categories})")
