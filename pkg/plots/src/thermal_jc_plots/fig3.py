"""Discrete robust-time maps: gtau/pi over (nbar1, nbar2), one panel per
measure present in the file.

Cells are colored by category - one per distinct gtau value, plus "absent"
where the revival has died out - and the legend lists exactly the categories
found in the data. Colors are assigned by descending gtau so identical inputs
always render identically.
"""

from __future__ import annotations

import argparse
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import ListedColormap
from matplotlib.patches import Patch

from .io import FigureSpec, RenderResult, RobustRow, SchemaError, read_robust_csv

ABSENT = "absent"
PALETTE = ("#2d708e", "#35b779", "#fde725", "#ed7953", "#9067c6", "#a0a0a0",
           "#54504c", "#c23b22", "#4878d0", "#987654")


def _categories(rows: list[RobustRow]) -> list[str]:
    values = sorted({r.gtau_over_pi for r in rows if r.present}, reverse=True)
    cats = [f"{v:.3f}" for v in values]
    if any(not r.present for r in rows):
        cats.append(ABSENT)
    return cats


def _category_of(row: RobustRow) -> str:
    return f"{row.gtau_over_pi:.3f}" if row.present else ABSENT


def _panel_grid(rows: list[RobustRow], cats: list[str]):
    nbars1 = np.unique([r.nbar1 for r in rows])
    nbars2 = np.unique([r.nbar2 for r in rows])
    if len(rows) != len(nbars1) * len(nbars2):
        raise SchemaError("rows do not form a complete (nbar1, nbar2) grid")
    coded = np.empty((len(nbars2), len(nbars1)))
    index = {c: i for i, c in enumerate(cats)}
    pos1 = {v: i for i, v in enumerate(nbars1)}
    pos2 = {v: i for i, v in enumerate(nbars2)}
    for row in rows:
        coded[pos2[row.nbar2], pos1[row.nbar1]] = index[_category_of(row)]
    return nbars1, nbars2, coded


def render_fig3(spec: FigureSpec) -> RenderResult:
    rows = read_robust_csv(spec.input_csv)
    cats = _categories(rows)
    if len(cats) > len(PALETTE):
        raise SchemaError(f"too many categories ({len(cats)}) for the fixed palette")
    colors = {c: PALETTE[i] for i, c in enumerate(cats)}

    measures = [m for m in ("discord", "concurrence") if any(r.measure == m for r in rows)]
    fig, axes = plt.subplots(len(measures), 1, figsize=(6.5, 5.2 * len(measures)), squeeze=False)
    for ax, measure in zip(axes[:, 0], measures):
        panel_rows = [r for r in rows if r.measure == measure]
        nbars1, nbars2, coded = _panel_grid(panel_rows, cats)
        cmap = ListedColormap([colors[c] for c in cats])
        ax.pcolormesh(nbars1, nbars2, coded, cmap=cmap, vmin=-0.5,
                      vmax=len(cats) - 0.5, shading="nearest")
        ax.set_xlabel(r"$\bar{n}_1$")
        ax.set_ylabel(r"$\bar{n}_2$")
        ax.set_title(f"robust revival time $g\\tau/\\pi$: {measure}")
    handles = [Patch(facecolor=colors[c], label=c) for c in cats]
    fig.legend(handles=handles, loc="center right", title=r"$g\tau/\pi$")
    fig.tight_layout(rect=(0, 0, 0.84, 1))
    fig.savefig(spec.output_image, dpi=150)
    plt.close(fig)
    return RenderResult(output_image=spec.output_image, categories=cats)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render-fig3", description="Render the robust-time category maps from a CSV."
    )
    parser.add_argument("input_csv")
    parser.add_argument("output_image")
    args = parser.parse_args(argv)
    try:
        result = render_fig3(FigureSpec(args.input_csv, args.output_image, kind="robust-map"))
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print("categories:", ", ".join(result.categories))
    return 0


if __name__ == "__main__":
    sys.exit(main())
