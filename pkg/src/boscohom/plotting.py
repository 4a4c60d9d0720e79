"""Figures for homology reports (rendered straight to files)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .homology import HomologyReport, degree_label  # noqa: E402


def plot_report(report: HomologyReport, path: str | Path, title: str = "") -> Path:
    """Grouped bars: states and cohomology rank per degree."""
    degrees = sorted(set(report.state_counts) | set(report.ranks))
    xs = range(len(degrees))
    states = [report.state_counts.get(D, 0) for D in degrees]
    ranks = [report.ranks.get(D, 0) for D in degrees]

    fig, ax = plt.subplots(figsize=(max(4.0, 0.9 * len(degrees) + 2), 3.2))
    w = 0.38
    ax.bar([x - w / 2 for x in xs], states, w, label="states", color="0.75")
    ax.bar([x + w / 2 for x in xs], ranks, w, label=f"rank ({report.certification})", color="tab:blue")
    for x, r in zip(xs, ranks):
        if r:
            ax.annotate(str(r), (x + w / 2, r), ha="center", va="bottom", fontsize=8)
    ax.set_xticks(list(xs))
    ax.set_xticklabels([degree_label(D) for D in degrees])
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    ax.legend(frameon=False, fontsize=8)
    heading = f"{title}  " if title else ""
    ax.set_title(f"{heading}chi = {report.euler_characteristic}, total rank = {report.total_rank}", fontsize=9)
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
