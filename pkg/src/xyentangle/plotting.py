"""Static figure emission from sweep CSV files."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .errors import SchemaError  # noqa: E402
from .sweep import read_csv  # noqa: E402

__all__ = ["plot_csv"]

_LABELS = {
    "entropy_ground": "S (ground state)",
    "entropy_thermal": "S (thermal ground state)",
    "concurrence": "C",
    "eof": "EoF",
}


def _label(quantity: str, r: int, t: float | None) -> str:
    s = _LABELS.get(quantity, quantity)
    if r:
        s += f", r={r}"
    if t is not None:
        s += f", T={t:g}"
    return s


def plot_csv(csv_path, out_path) -> str:
    """Render a sweep CSV; returns ``"lines"`` or ``"heatmap"``.

    A single (quantity, r) group spanning several temperatures and several
    lambdas becomes a heat map over the (lambda, T) plane; anything else is
    drawn as one curve per (quantity, r, T) against lambda.
    """
    rows = read_csv(csv_path)
    if not rows:
        raise SchemaError(f"{csv_path}: no data rows")
    groups = defaultdict(list)
    for row in rows:
        groups[(row.gamma, row.quantity, row.r)].append(row)

    temps = {row.temperature for row in rows}
    lams = {row.lam for row in rows}
    fig, ax = plt.subplots(figsize=(6, 4.2))
    if len(groups) == 1 and len(temps) > 1 and len(lams) > 1:
        (gamma, quantity, r), grp = next(iter(groups.items()))
        lam_ax = np.array(sorted(lams))
        t_ax = np.array(sorted(temps))
        grid = np.full((len(t_ax), len(lam_ax)), np.nan)
        li = {v: i for i, v in enumerate(lam_ax)}
        ti = {v: i for i, v in enumerate(t_ax)}
        for row in grp:
            grid[ti[row.temperature], li[row.lam]] = row.value
        mesh = ax.pcolormesh(lam_ax, t_ax, grid, shading="nearest", cmap="viridis",
                             rasterized=True)
        fig.colorbar(mesh, ax=ax, label=_label(quantity, r, None))
        ax.set_ylabel(r"$k_B T$")
        kind = "heatmap"
    else:
        multi_t = len(temps) > 1
        for (gamma, quantity, r), grp in sorted(groups.items()):
            by_t = defaultdict(list)
            for row in grp:
                by_t[row.temperature].append(row)
            for t, pts in sorted(by_t.items()):
                pts.sort(key=lambda x: x.lam)
                label = _label(quantity, r, t if multi_t else None)
                if len({g for g, _, _ in groups}) > 1:
                    label += rf", $\gamma$={gamma:g}"
                ax.plot([p.lam for p in pts], [p.value for p in pts], label=label)
        ax.legend(frameon=False)
        kind = "lines"
    ax.set_xlabel(r"$\lambda$")
    fig.tight_layout()
    out_path = Path(out_path)
    fig.savefig(out_path, format=out_path.suffix.lstrip(".") or "svg")
    plt.close(fig)
    return kind
