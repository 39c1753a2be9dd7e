"""Matplotlib renderings of the Hasse diagram, the counts table and suite reports.

Everything draws onto the non-interactive Agg canvas and writes a file.
"""
from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .poset import HasseDiagram, pair_label  # noqa: E402

_STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def _layout(h: HasseDiagram) -> dict[int, tuple[float, float]]:
    layers: dict[int, list[int]] = defaultdict(list)
    for i, r in enumerate(h.rank()):
        layers[r].append(i)
    pos = {}
    for r, members in layers.items():
        width = len(members)
        for k, i in enumerate(members):
            pos[i] = (k - (width - 1) / 2, float(r))
    return pos


def plot_hasse(h: HasseDiagram, path, title: str | None = None) -> Path:
    path = Path(path)
    pos = _layout(h)
    widest = max((sum(1 for p in pos.values() if p[1] == y) for y in {p[1] for p in pos.values()}),
                 default=1)
    height = max(p[1] for p in pos.values()) + 1 if pos else 1
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(max(4.0, 2.2 * widest), max(2.5, 1.4 * height)))
        for lo, hi in h.covers:
            (x0, y0), (x1, y1) = pos[lo], pos[hi]
            ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                        arrowprops=dict(arrowstyle="->", color="0.45", lw=0.8,
                                        shrinkA=12, shrinkB=12))
        for i, P in enumerate(h.nodes):
            x, y = pos[i]
            tags = [t for t, s in (("min", h.minimal), ("max", h.maximal)) if i in s]
            face = {("min",): "#dbe9f6", ("max",): "#fde2c8", ("min", "max"): "#e3e3e3"}.get(
                tuple(tags), "white")
            text = pair_label(P) + ("\n" + ",".join(tags) if tags else "")
            ax.text(x, y, text, ha="center", va="center", fontsize=6, family="monospace",
                    bbox=dict(boxstyle="round,pad=0.3", fc=face, ec="0.3", lw=0.6))
        xs = [p[0] for p in pos.values()] or [0.0]
        ax.set_xlim(min(xs) - 0.8, max(xs) + 0.8)
        ax.set_ylim(-0.7, height - 0.3)
        ax.axis("off")
        if title:
            ax.set_title(title)
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_counts(table: Sequence[tuple[int, dict[str, int]]], path) -> Path:
    """Grouped bars of the counts record for each carrier size."""
    path = Path(path)
    keys = ["pers", "coreflexives", "minimal", "maximal", "equivalences"]
    sizes = [n for n, _ in table]
    step = 1.0 / (len(keys) + 1)
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6.0, 3.5))
        for k, key in enumerate(keys):
            xs = [i + (k - (len(keys) - 1) / 2) * step for i in range(len(sizes))]
            ax.bar(xs, [row[key] for _, row in table], width=step, label=key)
        ax.set_xticks(range(len(sizes)), [str(n) for n in sizes])
        ax.set_xlabel("carrier size")
        ax.set_ylabel("count")
        if max((row["pers"] for _, row in table), default=0) > 20:
            ax.set_yscale("log")
        ax.legend(frameon=False, ncols=2)
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_suite(reports, path) -> Path:
    """Instances checked per lemma, coloured by outcome."""
    path = Path(path)
    reports = sorted(reports, key=lambda r: r.id)
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6.5, max(3.0, 0.16 * len(reports))))
        ys = range(len(reports))
        ax.barh(list(ys), [max(r.instances, 1) for r in reports],
                color=["#4c8c4a" if r.passed else "#c0392b" for r in reports])
        ax.set_yticks(list(ys), [r.id for r in reports], fontsize=6)
        ax.invert_yaxis()
        ax.set_xscale("log")
        ax.set_xlabel("instances checked")
        fig.savefig(path)
        plt.close(fig)
    return path
