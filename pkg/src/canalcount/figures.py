"""Figure data (CSV) and rendered charts for the depth and bias results.

The CSV files are the canonical artifacts; the matplotlib renderings are
a convenience built from exactly the same rows.

    fig1_depth_all.csv           proportion of all n-input functions with
                                 each canalizing depth k
    fig2_depth_nondegenerate.csv the same among non-degenerate functions,
                                 with a log-ready column
    fig3_delta.csv               prevalence fractions and log2 fold changes
"""

from __future__ import annotations

import os
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .enumeration import CountTable
from .prevalence import log2_fraction, prevalence_series, write_csv

FIG1_CSV = "fig1_depth_all.csv"
FIG2_CSV = "fig2_depth_nondegenerate.csv"
FIG3_CSV = "fig3_delta.csv"


def depth_proportions_all(max_n: int, table: CountTable) -> list:
    """Rows (n, k, count, total, proportion) over all functions."""
    rows = []
    for n in range(max_n + 1):
        total = table.total(n)
        for k in range(n + 1):
            count = table.by_depth(n, k)
            rows.append((n, k, count, total, Fraction(count, total)))
    return rows


def depth_proportions_nondegenerate(max_n: int, table: CountTable) -> list:
    """Rows (n, k, count, nondegenerate total, proportion)."""
    rows = []
    for n in range(max_n + 1):
        nondeg = table.by_essential(n, n)
        for k in range(n + 1):
            count = table.by_essential_depth(n, n, k)
            rows.append((n, k, count, nondeg, Fraction(count, nondeg)))
    return rows


def _log10_or_blank(q):
    if q == 0:
        return ""
    # proportions here are far from float under/overflow for n <= 16
    return f"{log2_fraction(q) * 0.3010299956639812:.12g}"


def write_figure_csvs(max_n: int, table: CountTable, outdir: str) -> list:
    """Write the three figure CSVs into outdir; returns the file paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []

    path = os.path.join(outdir, FIG1_CSV)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("n,k,count,total,proportion\n")
        for n, k, count, total, prop in depth_proportions_all(max_n, table):
            fh.write(f"{n},{k},{count},{total},{float(prop):.12g}\n")
    paths.append(path)

    path = os.path.join(outdir, FIG2_CSV)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("n,k,count,nondegenerate_total,proportion,log10_proportion\n")
        for n, k, count, nondeg, prop in depth_proportions_nondegenerate(
            max_n, table
        ):
            fh.write(
                f"{n},{k},{count},{nondeg},{float(prop):.12g},"
                f"{_log10_or_blank(prop)}\n"
            )
    paths.append(path)

    path = os.path.join(outdir, FIG3_CSV)
    records = prevalence_series(max_n, table)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        write_csv(records, fh)
    paths.append(path)

    return paths


def _depth_series(rows):
    """Per-depth series {k: (ns, proportions)} for plotting."""
    series = {}
    for n, k, _count, _total, prop in rows:
        series.setdefault(k, ([], []))
        series[k][0].append(n)
        series[k][1].append(float(prop))
    return series


def render_figures(max_n: int, table: CountTable, outdir: str, fmt: str = "png"):
    """Render the three charts next to the CSVs; returns the file paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []

    rows_all = depth_proportions_all(max_n, table)
    fig, ax = plt.subplots(figsize=(6, 4))
    for k, (ns, props) in sorted(_depth_series(rows_all).items()):
        ax.plot(ns, props, marker="o", label=f"k={k}")
    ax.set_xlabel("number of inputs n")
    ax.set_ylabel("proportion of all functions")
    ax.set_title("Canalizing depth among all Boolean functions")
    ax.legend(fontsize="small", ncol=2)
    fig.tight_layout()
    path = os.path.join(outdir, f"fig1_depth_all.{fmt}")
    fig.savefig(path)
    plt.close(fig)
    paths.append(path)

    rows_nd = depth_proportions_nondegenerate(max_n, table)
    fig, (ax_lin, ax_log) = plt.subplots(1, 2, figsize=(10, 4))
    for k, (ns, props) in sorted(_depth_series(rows_nd).items()):
        ax_lin.plot(ns, props, marker="o", label=f"k={k}")
        pos = [(n, p) for n, p in zip(ns, props) if p > 0]
        if pos:
            ax_log.semilogy([n for n, _ in pos], [p for _, p in pos],
                            marker="o", label=f"k={k}")
    for ax, tag in ((ax_lin, "linear"), (ax_log, "log")):
        ax.set_xlabel("number of inputs n")
        ax.set_ylabel("proportion of non-degenerate functions")
        ax.set_title(f"Depth among non-degenerate functions ({tag})")
    ax_lin.legend(fontsize="small", ncol=2)
    fig.tight_layout()
    path = os.path.join(outdir, f"fig2_depth_nondegenerate.{fmt}")
    fig.savefig(path)
    plt.close(fig)
    paths.append(path)

    records = prevalence_series(max_n, table)
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = [rec.n for rec in records]
    ax.plot(ns, [rec.delta_can for rec in records], marker="o",
            label="canalizing")
    ax.plot(ns, [rec.delta_ncf for rec in records], marker="s",
            label="nested canalizing")
    ax.axhline(0.0, color="gray", linewidth=0.8)
    ax.set_xlabel("number of inputs n")
    ax.set_ylabel("log2 fold change of naive vs true prevalence")
    ax.set_title("Bias from ignoring degeneracy")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(outdir, f"fig3_delta.{fmt}")
    fig.savefig(path)
    plt.close(fig)
    paths.append(path)

    return paths
