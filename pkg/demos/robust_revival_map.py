"""The revival near gt = 3*pi snaps to four discrete times.

Scanning the strongest revival inside the window gt/pi in [2.5, 3.5] on a
0.025*pi grid, the winning time takes only the values 3.000, 2.975, 2.950,
2.925 across mean photon numbers up to 0.5 - a staircase rather than a smooth
drift. The map below shows the discord staircase; the concurrence one has the
same values with boundaries at slightly larger nbar.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import ListedColormap

from thermal_jc import Grid1D, robust_time_map

OUT = "robust_revival_map.png"

grid = Grid1D(0.0, 0.5, 0.025)
records = robust_time_map(grid, grid, "discord")

values = sorted({round(r.gtau_over_pi, 3) for r in records if r.present}, reverse=True)
print("distinct gtau/pi values over the map:", values)

nbars = grid.points()
coded = np.empty((len(nbars), len(nbars)))
lookup = {v: i for i, v in enumerate(values)}
for k, rec in enumerate(records):
    i, j = divmod(k, len(nbars))
    coded[j, i] = lookup[round(rec.gtau_over_pi, 3)] if rec.present else len(values)

palette = ListedColormap(plt.cm.viridis(np.linspace(0.15, 0.9, len(values))))
fig, ax = plt.subplots(figsize=(6, 5))
mesh = ax.pcolormesh(nbars, nbars, coded, cmap=palette, shading="nearest")
bar = fig.colorbar(mesh, ticks=range(len(values)))
bar.ax.set_yticklabels([f"{v:.3f}" for v in values])
bar.set_label(r"$g\tau/\pi$")
ax.set_xlabel(r"$\bar{n}_1$")
ax.set_ylabel(r"$\bar{n}_2$")
ax.set_title("Robust revival time of the discord")
fig.tight_layout()
fig.savefig(OUT, dpi=150)
print("saved", OUT)
