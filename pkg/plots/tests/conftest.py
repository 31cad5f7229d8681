import numpy as np
import pytest


@pytest.fixture
def sweep_csv(tmp_path):
    """Complete 3-nbar x 5-gt diagonal sweep file."""
    lines = ["nbar1,nbar2,gt,d1,concurrence"]
    for nb in (0.0, 0.5, 1.0):
        for gt in np.linspace(0.0, 2.0, 5):
            d1 = abs(np.cos(gt)) * (1 - 0.3 * nb)
            lines.append(f"{nb},{nb},{gt},{d1},{d1 ** 2}")
    path = tmp_path / "sweep.csv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def robust_csv(tmp_path):
    """2x2 robust map for both measures, four gtau values plus one absence."""
    rows = [
        ("0", "0", "discord", "3", "0.99", "true"),
        ("0", "0.2", "discord", "2.975", "0.9", "true"),
        ("0.2", "0", "discord", "2.95", "0.9", "true"),
        ("0.2", "0.2", "discord", "2.925", "0.8", "true"),
        ("0", "0", "concurrence", "3", "0.98", "true"),
        ("0", "0.2", "concurrence", "2.975", "0.7", "true"),
        ("0.2", "0", "concurrence", "2.95", "0.7", "true"),
        ("0.2", "0.2", "concurrence", "2.925", "0.0001", "false"),
    ]
    path = tmp_path / "robust.csv"
    lines = ["nbar1,nbar2,measure,gtau_over_pi,peak,present"]
    lines += [",".join(r) for r in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
