"""Report figures: the b-function root diagram and per-stage timings.

Rendered to files next to the written report; matplotlib only ever runs
with the Agg backend so the CLI works headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .rational import rat


def render_root_plot(bdata, path, title: str = "") -> None:
    """Roots of b on the real line, split by the beta partition."""
    fig, ax = plt.subplots(figsize=(7.0, 2.2))
    ax.axhline(0.0, color="0.6", lw=0.8, zorder=1)
    ax.axvspan(-2.0, 0.0, color="0.92", zorder=0)
    ax.axvline(-1.0, color="0.75", lw=0.8, ls="--", zorder=1)
    xs, ys, colors = [], [], []
    for root, mult in bdata.roots:
        x = float(rat(root))
        xs.append(x)
        ys.append(0.0)
        colors.append("#c44e52" if rat(-1) < root < 0 else "#4c72b0")
        ax.annotate(
            f"{root}" + (f" (x{mult})" if mult > 1 else ""),
            (x, 0.0),
            textcoords="offset points",
            xytext=(0, 8),
            ha="center",
            fontsize=7,
            rotation=45,
        )
    ax.scatter(xs, ys, c=colors, s=28, zorder=3)
    lo = min([-2.1] + [x - 0.1 for x in xs])
    ax.set_xlim(lo, 0.25)
    ax.set_ylim(-0.6, 1.0)
    ax.set_yticks([])
    ax.set_xlabel("roots of b(s); shaded: (-2, 0); red: the beta half")
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_timing_plot(stages, path, title: str = "") -> None:
    """Horizontal bars of per-stage wall time."""
    names = [s.name for s in stages]
    secs = [s.seconds for s in stages]
    fig, ax = plt.subplots(figsize=(7.0, 0.35 * len(names) + 1.2))
    ax.barh(range(len(names)), secs, color="#55a868")
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report_figures(report, out_base: str) -> list[str]:
    """Write the figures for a finished report; returns the paths."""
    written = []
    if report.bdata is not None:
        p = f"{out_base}.roots.png"
        render_root_plot(report.bdata, p, title=f"f = {report.job.poly_text}")
        written.append(p)
    if report.stages:
        p = f"{out_base}.timings.png"
        render_timing_plot(report.stages, p, title=f"f = {report.job.poly_text}")
        written.append(p)
    return written
