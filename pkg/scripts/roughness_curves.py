#!/usr/bin/env python3
"""Specular Rayleigh-roughness curves vs incidence angle.

Sweeps the roughness parameter for one or more surface height deviations at
a fixed carrier frequency and writes a CSV (optionally a quick-look PNG).

    python scripts/roughness_curves.py --freq 293.089e9 --sigma-h 9e-5 2.25e-4 \
        --out roughness_curves.csv --plot roughness_curves.png
"""

import argparse
import math
import sys

from thzprop import (
    Medium,
    OperatingPoint,
    ScatterGeometry,
    SurfaceRoughness,
    propagation_state,
    rayleigh_g,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--freq", type=float, default=293.089e9, help="carrier frequency, Hz")
    ap.add_argument("--sigma-h", type=float, nargs="+", default=[9e-5, 2.25e-4],
                    help="surface height standard deviations, m")
    ap.add_argument("--points", type=int, default=181)
    ap.add_argument("--out", default="roughness_curves.csv")
    ap.add_argument("--plot", default=None, help="optional PNG path")
    args = ap.parse_args()

    state = propagation_state(
        Medium.from_relative(1.0), OperatingPoint.from_frequency(args.freq)
    )
    thetas = [k * 90.0 / args.points for k in range(args.points)]
    curves = {s: [] for s in args.sigma_h}
    for theta_deg in thetas:
        theta = math.radians(theta_deg)
        geo = ScatterGeometry(theta_i=theta, theta_r=theta, theta_s=0.0)
        for s in args.sigma_h:
            stats = SurfaceRoughness(sigma_h=s, corr_dist=1e-3, dim_x=1.0, dim_y=1.0)
            curves[s].append(rayleigh_g(stats, geo, state.wavelength))

    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("theta_i_deg," + ",".join(f"g_sigmah_{s:g}m" for s in args.sigma_h) + "\n")
        for i, theta_deg in enumerate(thetas):
            fh.write(
                f"{theta_deg:.17g},"
                + ",".join(f"{curves[s][i]:.17g}" for s in args.sigma_h)
                + "\n"
            )
    print(f"wrote {args.out} ({args.points} angles x {len(args.sigma_h)} curves)")

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(6, 4))
        for s in args.sigma_h:
            ax.plot(thetas, curves[s], label=f"sigma_h = {s * 1e3:g} mm")
        ax.set_xlabel("incidence angle (deg)")
        ax.set_ylabel("Rayleigh roughness parameter g")
        ax.set_title(f"specular roughness parameter at {args.freq / 1e9:g} GHz")
        ax.legend()
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        print(f"wrote {args.plot}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
