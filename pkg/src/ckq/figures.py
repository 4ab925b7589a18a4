"""Status-grid rendering for saved verification runs."""

from __future__ import annotations

from typing import Dict, List, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.colors import ListedColormap
from matplotlib.patches import Patch

# cell levels: 0 pass, 1 pass-with-note, 2 fail, 3 not run
_STATUS_LEVEL = {"pass": 0, "pass-with-note": 1, "fail": 2}
_COLORS = ("#2e7d32", "#f9a825", "#c62828", "#eceff1")
_LABELS = ("pass", "pass w/ note", "fail", "not run")
_MARKS = ("ok", "note", "FAIL", "")

_J_COLUMNS = ("1,1", "i1,1", "1,i2", "i1,i2")


def _row_key(run: dict) -> Tuple[str, str, str]:
    return (run["check"], run["family"], run["variant"])


def render_grid(runs: List[dict], path: str) -> str:
    """Draw one cell per (check/family/variant, j) pair and save a PNG.

    Cells hit by several runs keep the worst status."""
    rows = sorted({_row_key(r) for r in runs})
    extra = [r["j"] for r in runs if r["j"] not in _J_COLUMNS]
    cols = list(_J_COLUMNS) + sorted(set(extra))
    row_ix = {k: i for i, k in enumerate(rows)}
    col_ix = {t: i for i, t in enumerate(cols)}

    grid = [[3] * len(cols) for _ in rows]
    for r in runs:
        i = row_ix[_row_key(r)]
        k = col_ix[r["j"]]
        grid[i][k] = max(grid[i][k] if grid[i][k] != 3 else -1,
                         _STATUS_LEVEL[r["status"]])

    fig_h = 0.9 + 0.32 * len(rows)
    fig_w = 2.8 + 1.1 * len(cols)
    fig, ax = plt.subplots(figsize=(fig_w, fig_h))
    cmap = ListedColormap(_COLORS)
    ax.imshow(grid, cmap=cmap, vmin=0, vmax=3, aspect="auto")
    ax.set_xticks(range(len(cols)), cols)
    ax.set_yticks(range(len(rows)), [f"{c} {f}/{v}" for c, f, v in rows])
    ax.set_xlabel("scale assignment")
    for i in range(len(rows)):
        for k in range(len(cols)):
            mark = _MARKS[grid[i][k]]
            if mark:
                ax.text(k, i, mark, ha="center", va="center", fontsize=7,
                        color="white" if grid[i][k] != 1 else "black")
    ax.set_title("verification runs")
    handles = [Patch(facecolor=c, label=l) for c, l in zip(_COLORS, _LABELS)]
    ax.legend(handles=handles, loc="upper left", bbox_to_anchor=(1.01, 1.0),
              fontsize=7, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
