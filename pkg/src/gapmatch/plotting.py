"""Figures for benchmark output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_bench(rows, path, title=None):
    """Runtime and multiplication count against text length, one line per algorithm."""
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.6))
    for algo in sorted({r["algorithm"] for r in rows}):
        mine = sorted((r for r in rows if r["algorithm"] == algo), key=lambda r: r["n"])
        left.plot([r["n"] for r in mine], [r["millis"] for r in mine], marker="o", label=algo)
        counted = [r for r in mine if r["multiplications"] != ""]
        if counted:
            right.plot([r["n"] for r in counted], [r["multiplications"] for r in counted],
                       marker="s", label=algo)
    left.set_xlabel("text length n")
    left.set_ylabel("time [ms]")
    left.set_xscale("log", base=2)
    left.set_yscale("log")
    right.set_xlabel("text length n")
    right.set_ylabel("matrix multiplications")
    right.set_xscale("log", base=2)
    for ax in (left, right):
        ax.grid(True, alpha=0.3)
        if ax.lines:
            ax.legend(fontsize=8)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
