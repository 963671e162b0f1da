#!/usr/bin/env python3
"""In-plane scattered power profile for a rough wall at low-THz frequencies.

For a fixed incidence angle, sweeps the scattered zenith angle in the plane
of incidence and reports the mean scattering coefficient and power density,
comparing a rough surface against the ideally smooth patch.

    python scripts/scatter_profile.py --freq 300e9 --theta-i 40 --sigma-h 1.2e-4
"""

import argparse
import math
import sys

from thzprop import (
    Medium,
    OperatingPoint,
    ScatterGeometry,
    ScatterObservation,
    SurfaceRoughness,
    mean_scattered_power,
    propagation_state,
    scatter_kernel,
    specular_reflected_field,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--freq", type=float, default=300e9, help="carrier frequency, Hz")
    ap.add_argument("--theta-i", type=float, default=40.0, help="incidence angle, deg")
    ap.add_argument("--sigma-h", type=float, default=1.2e-4, help="height std deviation, m")
    ap.add_argument("--corr-dist", type=float, default=1e-3, help="correlation distance, m")
    ap.add_argument("--dim", type=float, default=0.05, help="square patch edge, m")
    ap.add_argument("--r0", type=float, default=3.0, help="observation distance, m")
    ap.add_argument("--points", type=int, default=90)
    ap.add_argument("--out", default="scatter_profile.csv")
    args = ap.parse_args()

    air = Medium.from_relative(1.0006)
    state = propagation_state(air, OperatingPoint.from_frequency(args.freq))
    stats = SurfaceRoughness(
        sigma_h=args.sigma_h, corr_dist=args.corr_dist, dim_x=args.dim, dim_y=args.dim
    )
    smooth = SurfaceRoughness(
        sigma_h=0.0, corr_dist=args.corr_dist, dim_x=args.dim, dim_y=args.dim
    )
    theta_i = math.radians(args.theta_i)
    obs = ScatterObservation(r0=args.r0, e_i=1.0)
    specular_geo = ScatterGeometry(theta_i=theta_i, theta_r=theta_i, theta_s=0.0)
    e_r = abs(
        specular_reflected_field(obs, stats, specular_geo, state.beta, -1.0 + 0j).helmholtz_form
    )
    y1 = abs(state.admittance)

    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("theta_r_deg,mean_rho_sq_rough,mean_rho_sq_smooth,power_rough_w_per_m2\n")
        for k in range(args.points):
            theta_r_deg = k * 89.5 / (args.points - 1)
            geo = ScatterGeometry(
                theta_i=theta_i, theta_r=math.radians(theta_r_deg), theta_s=0.0
            )
            rough_kernel = scatter_kernel(stats, geo, state.wavelength)
            smooth_kernel = scatter_kernel(smooth, geo, state.wavelength)
            power = mean_scattered_power(y1, e_r, rough_kernel.mean_rho_sq)
            fh.write(
                f"{theta_r_deg:.17g},{rough_kernel.mean_rho_sq:.17g},"
                f"{smooth_kernel.mean_rho_sq:.17g},{power:.17g}\n"
            )
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
