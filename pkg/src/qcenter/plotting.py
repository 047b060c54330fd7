"""Matplotlib figures for the CLI report commands (written to files only)."""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .rootdata import RootDatum, format_weight  # noqa: E402


def _planar(rd: RootDatum, mu):
    """Coordinates in a plane where the W-invariant form is Euclidean (rank 2)."""
    g = rd.weight_form
    a = float(g[0][0])
    b = float(g[0][1])
    c = float(g[1][1])
    s1 = math.sqrt(a)
    x2 = b / s1
    y2 = math.sqrt(max(c - x2 * x2, 0.0))
    w1 = (s1, 0.0)
    w2 = (x2, y2)
    return (float(mu[0]) * w1[0] + float(mu[1]) * w2[0], float(mu[0]) * w1[1] + float(mu[1]) * w2[1])


def weight_diagram(rd: RootDatum, table, path: str) -> str:
    """Weight multiplicities of a Weyl module: bars for rank 1, labelled dots for rank 2."""
    fig, ax = plt.subplots(figsize=(5, 4))
    items = sorted(table.mults.items())
    if rd.rank == 1:
        ax.bar([mu[0] for mu, _ in items], [m for _, m in items], color="tab:blue")
        ax.set_xlabel("weight")
        ax.set_ylabel("multiplicity")
    elif rd.rank == 2:
        for mu, m in items:
            x, y = _planar(rd, mu)
            ax.scatter([x], [y], s=40 * m, color="tab:blue")
            if m > 1:
                ax.annotate(str(m), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=8)
        ax.set_aspect("equal")
        ax.axis("off")
    else:
        ax.bar(range(len(items)), [m for _, m in items])
        ax.set_xticks(range(len(items)))
        ax.set_xticklabels([format_weight(mu) for mu, _ in items], rotation=90, fontsize=6)
    ax.set_title(f"{rd.label}, highest weight {format_weight(table.lam)}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def main_identity_figure(report, path: str) -> str:
    """Left and right coefficients per complete generating weight."""
    labels = [format_weight(lam) for lam in report.complete]
    lhs = [report.lhs.get(lam, 0) for lam in report.complete]
    rhs = [report.rhs.get(lam, 0) for lam in report.complete]
    xs = range(len(labels))
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(labels) + 2), 3.5))
    ax.bar([x - 0.2 for x in xs], lhs, width=0.4, label="fiber multiplicity")
    ax.bar([x + 0.2 for x in xs], rhs, width=0.4, label="Euler characteristic")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=45, fontsize=8)
    ax.set_ylabel("coefficient of ch")
    ax.set_title(f"{report.type}, cutoff {report.cutoff}")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
