"""Offline figure scripts for thermal-jc CSV output."""

from .fig2 import render_fig2
from .fig3 import render_fig3
from .io import FigureSpec, RenderResult, RobustRow, SchemaError, read_robust_csv, read_sweep_csv

__all__ = [
    "FigureSpec",
    "RenderResult",
    "RobustRow",
    "SchemaError",
    "read_robust_csv",
    "read_sweep_csv",
    "render_fig2",
    "render_fig3",
]
