"""Surface pair: discord (top) and concurrence (bottom) over (gt, nbar).

Input is a diagonal sweep CSV (nbar1 == nbar2 on every row). A file holding a
single nbar value falls back to a pair of 1-D line panels.
"""

from __future__ import annotations

import argparse
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import FigureSpec, RenderResult, SchemaError, read_sweep_csv

PANELS = (("d1", "discord (doubled)"), ("concurrence", "concurrence"))


def _pivot(data: dict[str, np.ndarray]):
    if np.any(data["nbar1"] != data["nbar2"]):
        raise SchemaError("surface pair needs diagonal data (nbar1 == nbar2 everywhere)")
    nbars = np.unique(data["nbar1"])
    gts = np.unique(data["gt"])
    if len(data["gt"]) != len(nbars) * len(gts):
        raise SchemaError("rows do not form a complete (nbar, gt) grid")
    order = np.lexsort((data["gt"], data["nbar1"]))
    grids = {
        name: data[name][order].reshape(len(nbars), len(gts))
        for name, _ in PANELS
    }
    return nbars, gts, grids


def render_fig2(spec: FigureSpec) -> RenderResult:
    data = read_sweep_csv(spec.input_csv)
    nbars, gts, grids = _pivot(data)
    lo, hi = spec.value_bounds

    fig, axes = plt.subplots(2, 1, figsize=(8, 7), sharex=True)
    if len(nbars) == 1:
        for ax, (name, title) in zip(axes, PANELS):
            ax.plot(gts / np.pi, grids[name][0], lw=1.6)
            ax.set_ylim(lo - 0.05, hi + 0.05)
            ax.set_ylabel(title)
            ax.grid(alpha=0.3)
        axes[0].set_title(f"single slice at nbar = {nbars[0]:g}")
    else:
        for ax, (name, title) in zip(axes, PANELS):
            mesh = ax.pcolormesh(
                gts / np.pi, nbars, grids[name], vmin=lo, vmax=hi, shading="nearest"
            )
            ax.set_ylabel(spec.nbar_label)
            ax.set_title(title)
            fig.colorbar(mesh, ax=ax)
    axes[-1].set_xlabel(spec.time_label)
    fig.tight_layout()
    fig.savefig(spec.output_image, dpi=150)
    plt.close(fig)
    return RenderResult(output_image=spec.output_image)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render-fig2", description="Render the measure surface pair from a sweep CSV."
    )
    parser.add_argument("input_csv")
    parser.add_argument("output_image")
    args = parser.parse_args(argv)
    try:
        render_fig2(FigureSpec(args.input_csv, args.output_image, kind="surface-pair"))
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
