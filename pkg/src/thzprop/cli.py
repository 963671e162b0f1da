"""Command-line front end: single-point evaluations and parameter sweeps.

Subcommands
    propagate   per-medium propagation quantities for one material/frequency
    fresnel     reflection/transmission coefficients vs incidence angle
    refract     true refracted angle and travel direction only
    rayleigh    roughness parameter vs incidence angle at specular geometry
    scatter     rough-surface scattering grid over scattered directions
    materials   list or validate the material database

Angles are degrees at this boundary and radians everywhere inside.  Output
is CSV (default) or JSON with identical field names; floats are printed
with 17 significant digits so identical invocations are byte-identical.
Exit codes: 0 success, 1 internal error, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Iterable

from .errors import ConvergenceError, DomainError, MaterialLoadError
from .interface import InterfaceProblem, fresnel_par, fresnel_perp, true_refraction
from .materials import MaterialDB, load_materials
from .media import OperatingPoint, propagation_state
from .roughness import (
    ScatterGeometry,
    ScatterObservation,
    SurfaceRoughness,
    kirchhoff_factor,
    mean_rho_squared_components,
    mean_scattered_power,
    rayleigh_g,
    smooth_patch_coefficient,
    specular_reflected_field,
    v_components,
)

_FIG_DEFAULT_FREQ = 293.089e9
_FIG_DEFAULT_SIGMA_H = (0.09e-3, 0.225e-3)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _csv_field(v: object) -> str:
    if isinstance(v, float):
        s = _fmt(v)
    else:
        s = str(v)
    if any(ch in s for ch in ',"\n'):
        s = '"' + s.replace('"', '""') + '"'
    return s


def _json_value(v: object) -> object:
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _write_output(headers: list[str], rows: list[dict], args: argparse.Namespace) -> None:
    if args.format == "csv":
        lines = [",".join(headers)]
        for row in rows:
            lines.append(",".join(_csv_field(row[h]) for h in headers))
        text = "\n".join(lines) + "\n"
    else:
        payload = [{h: _json_value(row[h]) for h in headers} for row in rows]
        text = json.dumps(payload, indent=2) + "\n"
    if args.out == "stdout":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _linspace(start: float, stop: float, points: int, endpoint: bool = True) -> list[float]:
    if points < 2:
        raise DomainError(f"sweep needs at least 2 points, got {points}")
    if not start < stop:
        raise DomainError(f"sweep needs start < stop, got [{start}, {stop}]")
    step = (stop - start) / ((points - 1) if endpoint else points)
    return [start + k * step for k in range(points)]


def _load_db(args: argparse.Namespace) -> MaterialDB:
    return load_materials(args.materials)


def _interface_problem(
    db: MaterialDB, mat1: str, mat2: str, freq_hz: float, theta_i_rad: float
) -> InterfaceProblem:
    return InterfaceProblem(
        medium1=db.params_at(mat1, freq_hz),
        medium2=db.params_at(mat2, freq_hz),
        op=OperatingPoint.from_frequency(freq_hz),
        theta_i=theta_i_rad,
    )


def _theta_values(args: argparse.Namespace) -> list[float]:
    """Incidence angles in degrees, from --theta-i or --sweep."""
    if args.sweep is not None:
        start, stop, points = args.sweep
        return _linspace(start, stop, int(points))
    return [args.theta_i]


def cmd_propagate(args: argparse.Namespace) -> tuple[list[str], list[dict]]:
    db = _load_db(args)
    medium = db.params_at(args.material, args.freq)
    state = propagation_state(medium, OperatingPoint.from_frequency(args.freq))
    headers = [
        "material",
        "freq_hz",
        "alpha_np_per_m",
        "beta_rad_per_m",
        "gamma_re_1_per_m",
        "gamma_im_1_per_m",
        "eta_re_ohm",
        "eta_im_ohm",
        "wavelength_m",
        "admittance_re_s",
        "admittance_im_s",
    ]
    row = {
        "material": args.material,
        "freq_hz": args.freq,
        "alpha_np_per_m": state.alpha,
        "beta_rad_per_m": state.beta,
        "gamma_re_1_per_m": state.gamma.real,
        "gamma_im_1_per_m": state.gamma.imag,
        "eta_re_ohm": state.eta.real,
        "eta_im_ohm": state.eta.imag,
        "wavelength_m": state.wavelength,
        "admittance_re_s": state.admittance.real,
        "admittance_im_s": state.admittance.imag,
    }
    return headers, [row]


def cmd_fresnel(args: argparse.Namespace) -> tuple[list[str], list[dict]]:
    db = _load_db(args)
    headers = [
        "theta_i_deg",
        "gamma_perp_re",
        "gamma_perp_im",
        "t_perp_re",
        "t_perp_im",
        "gamma_par_re",
        "gamma_par_im",
        "t_par_re",
        "t_par_im",
        "psi_t_deg",
    ]
    rows = []
    for theta_deg in _theta_values(args):
        p = _interface_problem(db, args.material1, args.material2, args.freq, math.radians(theta_deg))
        t_perp, g_perp = fresnel_perp(p)
        t_par, g_par = fresnel_par(p)
        sol = true_refraction(p)
        rows.append(
            {
                "theta_i_deg": theta_deg,
                "gamma_perp_re": g_perp.real,
                "gamma_perp_im": g_perp.imag,
                "t_perp_re": t_perp.real,
                "t_perp_im": t_perp.imag,
                "gamma_par_re": g_par.real,
                "gamma_par_im": g_par.imag,
                "t_par_re": t_par.real,
                "t_par_im": t_par.imag,
                "psi_t_deg": math.degrees(sol.psi_t),
            }
        )
    return headers, rows


def cmd_refract(args: argparse.Namespace) -> tuple[list[str], list[dict]]:
    db = _load_db(args)
    headers = ["theta_i_deg", "psi_t_deg", "n_t_x", "n_t_y", "n_t_z"]
    rows = []
    for theta_deg in _theta_values(args):
        p = _interface_problem(db, args.material1, args.material2, args.freq, math.radians(theta_deg))
        sol = true_refraction(p)
        rows.append(
            {
                "theta_i_deg": theta_deg,
                "psi_t_deg": math.degrees(sol.psi_t),
                "n_t_x": float(sol.n_t[0]),
                "n_t_y": float(sol.n_t[1]),
                "n_t_z": float(sol.n_t[2]),
            }
        )
    return headers, rows


def cmd_rayleigh(args: argparse.Namespace) -> tuple[list[str], list[dict]]:
    db = _load_db(args)
    medium = db.params_at(args.material, args.freq)
    state = propagation_state(medium, OperatingPoint.from_frequency(args.freq))
    sigma_list = args.sigma_h if args.sigma_h else list(_FIG_DEFAULT_SIGMA_H)
    start, stop, points = args.sweep
    # endpoint excluded: the grid covers [start, stop) so theta_i stays below 90 deg
    thetas = _linspace(start, stop, int(points), endpoint=False)
    headers = ["theta_i_deg"] + [f"g_sigmah_{format(s, 'g')}m" for s in sigma_list]
    # corr_dist and patch dimensions never enter the roughness parameter
    stats_list = [
        SurfaceRoughness(sigma_h=s, corr_dist=1.0, dim_x=1.0, dim_y=1.0) for s in sigma_list
    ]
    rows = []
    for theta_deg in thetas:
        theta = math.radians(theta_deg)
        geo = ScatterGeometry(theta_i=theta, theta_r=theta, theta_s=0.0)
        row: dict = {"theta_i_deg": theta_deg}
        for stats, name in zip(stats_list, headers[1:]):
            row[name] = rayleigh_g(stats, geo, state.wavelength)
        rows.append(row)
    return headers, rows


def cmd_scatter(args: argparse.Namespace) -> tuple[list[str], list[dict]]:
    db = _load_db(args)
    medium1 = db.params_at(args.material1, args.freq)
    state1 = propagation_state(medium1, OperatingPoint.from_frequency(args.freq))
    stats = SurfaceRoughness(
        sigma_h=args.sigma_h, corr_dist=args.corr_dist, dim_x=args.dim_x, dim_y=args.dim_y
    )
    theta_i = math.radians(args.theta_i)
    obs = ScatterObservation(r0=args.r0, e_i=args.e_i)
    # reference field: smooth perfectly conducting patch seen at R0 (Helmholtz
    # form), the normalizer in the scattering-coefficient definition
    specular_geo = ScatterGeometry(theta_i=theta_i, theta_r=theta_i, theta_s=0.0)
    e_r = abs(
        specular_reflected_field(obs, stats, specular_geo, state1.beta, -1.0 + 0j).helmholtz_form
    )
    y1 = abs(state1.admittance)

    if args.theta_r_sweep is not None:
        tr_values = _linspace(*args.theta_r_sweep[:2], int(args.theta_r_sweep[2]))
    else:
        tr_values = [args.theta_r if args.theta_r is not None else args.theta_i]
    if args.theta_s_sweep is not None:
        ts_values = _linspace(*args.theta_s_sweep[:2], int(args.theta_s_sweep[2]))
    else:
        ts_values = [args.theta_s]

    headers = [
        "theta_r_deg",
        "theta_s_deg",
        "g",
        "rho0",
        "f_factor",
        "mean_rho_sq",
        "terms_used",
        "power_w_per_m2",
    ]
    rows = []
    for tr_deg in tr_values:
        for ts_deg in ts_values:
            geo = ScatterGeometry(
                theta_i=theta_i, theta_r=math.radians(tr_deg), theta_s=math.radians(ts_deg)
            )
            g = rayleigh_g(stats, geo, state1.wavelength)
            v_x, v_y = v_components(geo, state1.wavelength)
            rho0 = smooth_patch_coefficient(stats, v_x, v_y)
            row = {
                "theta_r_deg": tr_deg,
                "theta_s_deg": ts_deg,
                "g": g,
                "rho0": rho0,
            }
            try:
                f_factor = kirchhoff_factor(geo)
                rho_sq, terms = mean_rho_squared_components(
                    g, rho0, f_factor, v_x, v_y, stats.corr_dist, stats.area, tol=args.tol
                )
                row.update(
                    f_factor=f_factor,
                    mean_rho_sq=rho_sq,
                    terms_used=terms,
                    power_w_per_m2=mean_scattered_power(y1, e_r, rho_sq),
                )
            except DomainError as exc:
                print(f"warning: theta_r={tr_deg} theta_s={ts_deg}: {exc}", file=sys.stderr)
                row.update(
                    f_factor=math.nan,
                    mean_rho_sq=math.nan,
                    terms_used=0,
                    power_w_per_m2=math.nan,
                )
            rows.append(row)
    return headers, rows


def cmd_materials(args: argparse.Namespace) -> tuple[list[str], list[dict]]:
    db = _load_db(args)
    if args.action == "validate":
        return ["status", "materials"], [{"status": "ok", "materials": len(db.records)}]
    headers = ["name", "mu_r", "samples", "freq_min_hz", "freq_max_hz"]
    rows = []
    for name in db.names():
        rec = db.get(name)
        rows.append(
            {
                "name": rec.name,
                "mu_r": rec.mu_r,
                "samples": len(rec.samples),
                "freq_min_hz": rec.freq_min,
                "freq_max_hz": rec.freq_max,
            }
        )
    return headers, rows


def _add_sweep_args(sub: argparse.ArgumentParser, default_theta: float = 0.0) -> None:
    sub.add_argument("--theta-i", type=float, default=default_theta,
                     help="incidence angle, degrees (default %(default)s)")
    sub.add_argument("--sweep", nargs=3, type=float, metavar=("START", "STOP", "POINTS"),
                     default=None, help="sweep theta_i: start/stop degrees, point count")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--materials", default=None, metavar="PATH",
                        help="JSON material file merged over the built-ins")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default %(default)s)")
    common.add_argument("--out", default="stdout", metavar="PATH",
                        help="output path, or 'stdout' (default)")
    common.add_argument("--tol", type=float, default=1e-12,
                        help="relative series tolerance (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="thzprop",
        description="Low-terahertz propagation, refraction, and rough-surface scattering",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("propagate", parents=[common],
                       help="per-medium propagation quantities")
    p.add_argument("--material", required=True)
    p.add_argument("--freq", type=float, required=True, help="frequency, Hz")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("fresnel", parents=[common],
                       help="reflection/transmission coefficients vs angle")
    p.add_argument("--material1", required=True, help="incidence-side material")
    p.add_argument("--material2", required=True, help="transmission-side material")
    p.add_argument("--freq", type=float, required=True, help="frequency, Hz")
    _add_sweep_args(p)
    p.set_defaults(func=cmd_fresnel)

    p = sub.add_parser("refract", parents=[common],
                       help="true refracted angle and travel direction")
    p.add_argument("--material1", required=True)
    p.add_argument("--material2", required=True)
    p.add_argument("--freq", type=float, required=True, help="frequency, Hz")
    _add_sweep_args(p)
    p.set_defaults(func=cmd_refract)

    p = sub.add_parser("rayleigh", parents=[common],
                       help="roughness parameter vs incidence angle (specular)")
    p.add_argument("--material", default="vacuum",
                   help="medium providing the wavelength (default %(default)s)")
    p.add_argument("--freq", type=float, default=_FIG_DEFAULT_FREQ,
                   help="frequency, Hz (default %(default)s)")
    p.add_argument("--sigma-h", type=float, action="append", default=None, metavar="M",
                   help="surface height standard deviation, m; repeatable "
                        "(default 9e-05 and 0.000225)")
    p.add_argument("--sweep", nargs=3, type=float, metavar=("START", "STOP", "POINTS"),
                   default=[0.0, 90.0, 181],
                   help="theta_i grid in degrees, endpoint excluded "
                        "(default %(default)s)")
    p.set_defaults(func=cmd_rayleigh)

    p = sub.add_parser("scatter", parents=[common],
                       help="rough-surface scattering over scattered directions")
    p.add_argument("--material1", default="air", help="incidence-side material")
    p.add_argument("--freq", type=float, required=True, help="frequency, Hz")
    p.add_argument("--theta-i", type=float, required=True, help="incidence angle, degrees")
    p.add_argument("--sigma-h", type=float, required=True, help="height std deviation, m")
    p.add_argument("--corr-dist", type=float, required=True, help="correlation distance, m")
    p.add_argument("--dim-x", type=float, required=True, help="patch x dimension, m")
    p.add_argument("--dim-y", type=float, required=True, help="patch y dimension, m")
    p.add_argument("--r0", type=float, default=1.0, help="observation distance, m")
    p.add_argument("--e-i", type=float, default=1.0, help="incident field amplitude, V/m")
    p.add_argument("--theta-r", type=float, default=None,
                   help="scattered zenith angle, degrees (default: theta_i)")
    p.add_argument("--theta-r-sweep", nargs=3, type=float,
                   metavar=("START", "STOP", "POINTS"), default=None)
    p.add_argument("--theta-s", type=float, default=0.0,
                   help="scattered azimuth angle, degrees (default %(default)s)")
    p.add_argument("--theta-s-sweep", nargs=3, type=float,
                   metavar=("START", "STOP", "POINTS"), default=None)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("materials", parents=[common], help="list or validate the database")
    p.add_argument("action", choices=("list", "validate"))
    p.set_defaults(func=cmd_materials)

    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv if argv is None else list(argv))
    try:
        headers, rows = args.func(args)
        _write_output(headers, rows, args)
    except (DomainError, MaterialLoadError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
