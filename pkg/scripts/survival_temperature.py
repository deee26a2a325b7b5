#!/usr/bin/env python3
"""Trace the temperature at which magnon-pair entanglement dies vs drive
squeezing, and write the curve as CSV plus an SVG line plot.

Zero squeezing never entangles the magnon pair, so the scan starts at
r > 0. Points whose threshold exceeds --tmax are recorded as empty CSV
fields and skipped in the plot.
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

import numpy as np

from cavmag.model import BASELINE
from cavmag.sweep import find_temperature_threshold


def render_curve(rows, destination: pathlib.Path) -> None:
    left, top, plot_w, plot_h = 70, 40, 500, 420
    width, height = left + plot_w + 30, top + plot_h + 60
    points = [(r, t) for r, t in rows if t is not None]
    r_lo, r_hi = points[0][0], points[-1][0]
    t_hi = max(t for _, t in points)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
        f'<text x="{width / 2:.1f}" y="24" font-family="monospace" font-size="15" '
        f'text-anchor="middle">entanglement survival temperature</text>',
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" fill="none" '
        f'stroke="#000000" stroke-width="1"/>',
    ]
    coords = []
    for r, t in points:
        x = left + (r - r_lo) / (r_hi - r_lo) * plot_w
        y = top + plot_h - t / t_hi * plot_h
        coords.append(f"{x:.2f},{y:.2f}")
    parts.append(
        f'<polyline points="{" ".join(coords)}" fill="none" stroke="#1f77b4" '
        f'stroke-width="2"/>'
    )
    for frac, value in ((0.0, r_lo), (0.5, (r_lo + r_hi) / 2), (1.0, r_hi)):
        x = left + frac * plot_w
        parts.append(
            f'<text x="{x:.1f}" y="{top + plot_h + 18}" font-family="monospace" '
            f'font-size="11" text-anchor="middle">{value:.6g}</text>'
        )
    for frac, value in ((0.0, 0.0), (0.5, t_hi / 2), (1.0, t_hi)):
        y = top + plot_h - frac * plot_h
        parts.append(
            f'<text x="{left - 6}" y="{y + 4:.1f}" font-family="monospace" '
            f'font-size="11" text-anchor="end">{value:.6g}</text>'
        )
    parts.append(
        f'<text x="{left + plot_w / 2:.1f}" y="{height - 14}" font-family="monospace" '
        f'font-size="13" text-anchor="middle">r</text>'
    )
    parts.append(
        f'<text x="16" y="{top + plot_h / 2:.1f}" font-family="monospace" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 16 {top + plot_h / 2:.1f})">'
        f"threshold temperature (K)</text>"
    )
    parts.append("</svg>")
    destination.write_text("\n".join(parts) + "\n", encoding="utf-8")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out", help="output directory (default ./out)")
    parser.add_argument("--r-min", type=float, default=0.05)
    parser.add_argument("--r-max", type=float, default=2.0)
    parser.add_argument("--points", type=int, default=40)
    parser.add_argument("--tmax", type=float, default=3.0, help="search ceiling in kelvin")
    parser.add_argument("--tol", type=float, default=1e-3)
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    rows = []
    started = time.perf_counter()
    for r in np.linspace(args.r_min, args.r_max, args.points):
        threshold = find_temperature_threshold(
            BASELINE.replace(r=float(r)), t_max=args.tmax, tol=args.tol
        )
        rows.append((float(r), threshold))
        shown = "none" if threshold is None else f"{threshold:.4f} K"
        print(f"r = {r:.3f}: threshold {shown}", flush=True)

    csv_path = out_dir / "survival_temperature.csv"
    with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("r,threshold_K\n")
        for r, threshold in rows:
            value = "" if threshold is None else f"{threshold:.9g}"
            fh.write(f"{r:.9g},{value}\n")

    svg_path = out_dir / "survival_temperature.svg"
    render_curve(rows, svg_path)
    elapsed = time.perf_counter() - started
    print(f"wrote {csv_path} and {svg_path} in {elapsed:.1f} s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
