"""Matplotlib figure for a count table: rows on a log scale plus diagonal ratios."""
from __future__ import annotations

from matplotlib.figure import Figure

from .counting import CountTable
from .diagram import theorem_region


def table_figure(table: CountTable) -> Figure:
    fig = Figure(figsize=(11, 4.5))
    ax_rows, ax_diag = fig.subplots(1, 2)

    for k in range(1, table.max_n + 1):
        ns = [n for n in range(k, table.max_n + 1)]
        if len(ns) < 2:
            continue
        ax_rows.semilogy(ns, [table.get(n, k) for n in ns], marker="o", ms=3, lw=1, label=f"k={k}")
    ax_rows.set_xlabel("n")
    ax_rows.set_ylabel("diagrams with all chords of length >= k")
    ax_rows.legend(fontsize=7, ncol=2)

    # ratio along each diagonal, n - k fixed; filled markers where the identity is claimed
    for gap in range(0, table.max_n - 1):
        pts = [(n, table.get(n + 1, n - gap + 1) / table.get(n, n - gap))
               for n in range(gap + 1, table.max_n) if table.get(n, n - gap)]
        if not pts:
            continue
        line, = ax_diag.plot([p[0] for p in pts], [p[1] for p in pts], lw=1, label=f"n-k={gap}")
        inside = [p for p in pts if theorem_region(p[0], p[0] - gap)]
        ax_diag.plot([p[0] for p in inside], [p[1] for p in inside], "o", color=line.get_color(), ms=4)
        ax_diag.axhline(gap + 1, color=line.get_color(), lw=0.5, ls=":")
    ax_diag.set_yscale("log")
    ax_diag.set_xlabel("n")
    ax_diag.set_ylabel("count(n+1, k+1) / count(n, k)")
    ax_diag.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    return fig


def save_table_figure(table: CountTable, path: str) -> None:
    table_figure(table).savefig(path, dpi=150)
