"""Matplotlib rendering of scan results to image files.

Figures accompany the delimited report: per-check status counts, volume
against the applicable bound, and a gallery of the two-dimensional bodies.
Everything is drawn from the exact rationals (converted to float only for
plotting) and written to files; no interactive backend is touched.
"""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .corpus import PolytopeRecord, Reportish, ScanSummary
from .report import CheckReport

_STATUS_COLORS = {
    "strict": "#4878cf",
    "equality": "#6acc65",
    "violation": "#d65f5f",
    "not-applicable": "#b8b8b8",
}


def _status_counts_figure(summary: ScanSummary, path: str) -> None:
    checks = sorted(summary.counts)
    statuses = ("strict", "equality", "violation", "not-applicable")
    fig, ax = plt.subplots(figsize=(max(4, 1.6 * len(checks)), 3.2))
    bottoms = [0] * len(checks)
    for status in statuses:
        heights = [summary.counts[c].get(status, 0) for c in checks]
        if not any(heights):
            continue
        ax.bar(checks, heights, bottom=bottoms, label=status,
               color=_STATUS_COLORS[status])
        bottoms = [b + h for b, h in zip(bottoms, heights)]
    ax.set_ylabel("records")
    ax.set_title("check outcomes")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _volume_bound_figure(results, path: str) -> bool:
    xs, ys, colors = [], [], []
    for rec_id, rep in results:
        if not isinstance(rep, CheckReport) or rep.check != "ehrhart":
            continue
        if rep.bound is None:
            continue
        try:
            vol = rep.value("volume")
        except KeyError:
            continue
        xs.append(float(rep.bound))
        ys.append(float(vol))
        colors.append(_STATUS_COLORS.get(rep.status, "#333333"))
    if not xs:
        return False
    fig, ax = plt.subplots(figsize=(4.2, 4.0))
    lim = max(xs + ys) * 1.08
    ax.plot([0, lim], [0, lim], color="#999999", lw=0.8, ls="--",
            label="volume = bound")
    ax.scatter(xs, ys, c=colors, s=28, edgecolors="black", linewidths=0.4)
    ax.set_xlabel("bound")
    ax.set_ylabel("volume")
    ax.set_xlim(0, lim)
    ax.set_ylim(0, lim)
    ax.set_title("volume against the applicable bound")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return True


def _gallery_figure(records, path: str, limit: int = 16) -> bool:
    polys = [(r.id, r.vertices) for r in records if r.dim == 2][:limit]
    if not polys:
        return False
    cols = min(4, len(polys))
    rows = (len(polys) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(2.4 * cols, 2.4 * rows),
                             squeeze=False)
    for ax in (a for row in axes for a in row):
        ax.set_axis_off()
    for (rec_id, verts), ax in zip(polys, (a for row in axes for a in row)):
        pts = [(float(x), float(y)) for x, y in verts]
        cx = sum(p[0] for p in pts) / len(pts)
        cy = sum(p[1] for p in pts) / len(pts)
        ordered = sorted(pts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
        xs = [p[0] for p in ordered] + [ordered[0][0]]
        ys = [p[1] for p in ordered] + [ordered[0][1]]
        ax.fill(xs, ys, color="#cfe2f3", edgecolor="#4878cf", lw=1.2)
        ax.plot([0], [0], marker="o", color="#d65f5f", ms=3)
        ax.set_title(rec_id, fontsize=7)
        ax.set_aspect("equal")
        ax.set_axis_on()
        ax.tick_params(labelsize=6)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return True


def render_scan_figures(summary: ScanSummary,
                        results: list[tuple[str, Reportish]],
                        records: list[PolytopeRecord],
                        outdir: str) -> list[str]:
    """Write the scan figures into outdir, returning the created paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []
    path = os.path.join(outdir, "status_counts.png")
    _status_counts_figure(summary, path)
    written.append(path)
    path = os.path.join(outdir, "volume_vs_bound.png")
    if _volume_bound_figure(results, path):
        written.append(path)
    path = os.path.join(outdir, "polygon_gallery.png")
    if _gallery_figure(records, path):
        written.append(path)
    return written
