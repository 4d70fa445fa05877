"""Figures written next to the text report (``--figure PATH``)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_convergence(rows, path: str, title: str = "", exact=None) -> str:
    """Estimates per step (left) and successive deltas on a log scale (right)."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    steps = [r.step for r in rows]
    ax1.plot(steps, [complex(r.estimate).real for r in rows], "o-", color="C0", label="estimate")
    if exact is not None:
        ax1.axhline(float(exact), color="0.5", lw=0.8, ls="--", label="reference")
    ax1.set_xlabel("step")
    ax1.set_ylabel("Re(estimate)")
    ax1.legend(frameon=False, fontsize=8)
    deltas = [(r.step, r.delta_prev) for r in rows if 0 < r.delta_prev < float("inf")]
    if deltas:
        ax2.semilogy([s for s, _ in deltas], [d for _, d in deltas], "s-", color="C3")
    ax2.set_xlabel("step")
    ax2.set_ylabel("|delta from previous|")
    for ax in (ax1, ax2):
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
    if title:
        fig.suptitle(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_comb(spec, grid, values, path: str, title: str = "") -> str:
    """Regularized comb with the recovered lines marked."""
    fig, ax = plt.subplots(figsize=(7, 3.4))
    ax.plot(grid, values, color="C0", lw=1.2)
    top = max(values) if len(values) else 1.0
    for rate, weight in spec.lines:
        ax.axvline(float(rate), color="C3", lw=0.8, ls=":")
        ax.annotate(f"w={float(weight):g}", (float(rate), top), fontsize=7,
                    ha="center", va="bottom", color="C3")
    ax.set_xlabel("rate")
    ax.set_ylabel("regularized comb")
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
