"""
Matplotlib figures for Dyck paths and degree triangles.

Output format follows the file suffix (.svg, .png, .pdf). SVG output carries
no timestamp and a fixed hash salt, so repeated runs write identical files.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .dyck import DyckPath, heights, peaks, runs_to_dyck  # noqa: E402
from .runs import monomial_to_runs  # noqa: E402
from .words import format_word  # noqa: E402

__all__ = ["draw_path", "save_path_figure", "save_basis_figure", "save_triangle_figure"]

PATH_COLOR = "#1f4e79"
HILL_COLOR = "#c0504d"


def _save(fig, filename):
    plt.rcParams["svg.hashsalt"] = "niltl"
    metadata = {"Date": None} if str(filename).endswith((".svg", ".pdf")) else None
    fig.savefig(filename, bbox_inches="tight", metadata=metadata)
    plt.close(fig)


def draw_path(ax, path: DyckPath, label=None, mark_peaks=True):
    h = heights(path)
    xs = range(len(h))
    ax.plot(xs, h, color=PATH_COLOR, lw=1.5)
    ax.plot([0, len(h) - 1], [0, 0], color="0.6", lw=0.6)
    if mark_peaks:
        nontrivial = [hl for hl in peaks(path) if hl.height > 1]
        ax.plot([hl.x for hl in nontrivial], [hl.height for hl in nontrivial],
                "o", ms=3, color=HILL_COLOR)
    ax.set_aspect("equal")
    ax.set_xlim(-0.5, len(h) - 0.5)
    ax.set_ylim(-0.5, max(h) + 0.5 if max(h) else 1)
    ax.set_xticks([])
    ax.set_yticks([])
    for side in ax.spines.values():
        side.set_visible(False)
    if label is not None:
        ax.set_title(label, fontsize=9, y=-0.35)
    return ax


def save_path_figure(path: DyckPath, filename, label=None):
    fig, ax = plt.subplots(figsize=(max(2.0, len(path) * 0.35), 2.2))
    draw_path(ax, path, label=label)
    _save(fig, filename)


def save_basis_figure(basis, filename, ncols=5):
    """Grid of every basis monomial next to its Dyck path."""
    basis = list(basis)
    nrows = max(1, math.ceil(len(basis) / ncols))
    fig, axes = plt.subplots(nrows, ncols, figsize=(2.2 * ncols, 1.8 * nrows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for ax, m in zip(axes.flat, basis):
        ax.axis("on")
        label = format_word(m.letters, compact=True)
        draw_path(ax, runs_to_dyck(monomial_to_runs(m)), label=label)
    fig.tight_layout()
    _save(fig, filename)


def save_triangle_figure(rows, filename):
    """One line per rank: number of basis monomials by degree."""
    fig, ax = plt.subplots(figsize=(6, 4))
    cmap = plt.get_cmap("viridis")
    for k, row in enumerate(rows):
        color = cmap(k / max(1, len(rows) - 1))
        ax.plot(range(len(row.counts)), row.counts, marker="o", ms=3, color=color,
                label=f"P_{row.rank}")
    ax.set_xlabel("degree")
    ax.set_ylabel("number of monomials")
    if any(max(r.counts) > 50 for r in rows):
        ax.set_yscale("log")
    ax.legend(fontsize=7, ncol=2, frameon=False)
    fig.tight_layout()
    _save(fig, filename)
