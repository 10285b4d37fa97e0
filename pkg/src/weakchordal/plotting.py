"""Figures for batch reports."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

from matplotlib.figure import Figure

from .pipeline import PipelineReport


def batch_figure(reports: Sequence[PipelineReport], title: str = "") -> Figure:
    """Two panels: fill-edge histograms, and retained against added fill per run."""
    added = [r.fill_added for r in reports]
    retained = [r.fill_retained for r in reports]
    fig = Figure(figsize=(9, 3.6), layout="constrained")
    hist_ax, scatter_ax = fig.subplots(1, 2)

    top = max(added, default=0)
    bins = range(0, top + 2)
    hist_ax.hist(added, bins=bins, alpha=0.6, label="added", color="tab:purple")
    hist_ax.hist(retained, bins=bins, alpha=0.6, label="retained", color="tab:green")
    hist_ax.set_xlabel("fill edges")
    hist_ax.set_ylabel("runs")
    hist_ax.legend(frameon=False)

    scatter_ax.scatter(added, retained, s=12, alpha=0.6, color="tab:purple")
    scatter_ax.plot([0, top], [0, top], lw=0.8, ls="--", color="grey")
    scatter_ax.set_xlabel("fill added")
    scatter_ax.set_ylabel("fill retained")

    if title:
        fig.suptitle(title)
    return fig


def save_batch_figure(reports: Sequence[PipelineReport], path: str | Path, title: str = "") -> Path:
    path = Path(path)
    batch_figure(reports, title).savefig(path, dpi=120)
    return path
