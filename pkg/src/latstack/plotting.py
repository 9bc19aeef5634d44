"""Matplotlib figures written next to the text output of the CLI."""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .counting import OVER_BUDGET  # noqa: E402


def plot_grid(g, path, title=None):
    """One line per (group, k) row: log10 of the count against the index."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for (grp, k), row in zip(g.rows, g.cells):
        pts = [(i, math.log10(v)) for i, v in zip(g.columns, row) if v != OVER_BUDGET and v > 0]
        if not pts:
            continue
        xs, ys = zip(*pts)
        ax.plot(xs, ys, marker="o", label=f"{g.group_name}={grp}, k={k}")
    ax.set_xlabel(g.index_name)
    ax.set_ylabel("log10 #maximal chains")
    ax.set_title(title or f"maximal chain numbers ({g.axis} axis)")
    ax.grid(alpha=0.3)
    if g.rows:
        ax.legend(fontsize="small", ncol=2)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def _ranks(p):
    rank = [0] * p.size
    lower = p.lower_covers()
    for x in p.topological_order():
        if lower[x]:
            rank[x] = 1 + max(rank[y] for y in lower[x])
    return rank


def plot_hasse(p, path, title=None):
    """Hasse diagram with elements stacked by rank."""
    rank = _ranks(p)
    levels = {}
    for x in range(p.size):
        levels.setdefault(rank[x], []).append(x)
    pos = {}
    for r, xs in levels.items():
        for i, x in enumerate(xs):
            pos[x] = (i - (len(xs) - 1) / 2, r)
    width = max((len(xs) for xs in levels.values()), default=1)
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * width), max(3, 0.6 * (len(levels) + 1))))
    for x, ups in enumerate(p.upper_covers()):
        for y in ups:
            ax.plot(*zip(pos[x], pos[y]), color="0.4", lw=0.8, zorder=1)
    if pos:
        xs, ys = zip(*(pos[x] for x in range(p.size)))
        ax.scatter(xs, ys, s=14, color="black", zorder=2)
    if p.size <= 60:
        for x in range(p.size):
            ax.annotate(p.label(x), pos[x], fontsize=6, xytext=(3, 3), textcoords="offset points")
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
