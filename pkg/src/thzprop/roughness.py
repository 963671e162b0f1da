"""Beckmann-Kirchhoff scattering from a randomly rough interface.

The surface is a stationary, normally distributed random height process
with zero mean; only its standard deviation (sigma_h) and correlation
distance enter the formulary, never a sampled realization.  The central
quantity is the mean squared scattering coefficient

    <rho*conj(rho)> = exp(-g) * ( rho0**2
        + (pi*D**2*F**2/A) * sum_{m>=1} g**m/(m!*m) * exp(-(vx**2+vy**2)*D**2/(4*m)) )

whose series is summed in log space so that neither g**m nor m! ever
overflows (g up to ~1e3 is routine for very rough surfaces in the low-THz
band).  All angle triples follow the (theta_i, theta_r, theta_s) incident /
scattered-zenith / scattered-azimuth convention, with the specular direction
at theta_r == theta_i, theta_s == 0.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConvergenceError, DomainError, KirchhoffValidityWarning

__all__ = [
    "SurfaceRoughness",
    "ScatterGeometry",
    "ScatterKernel",
    "ScatterObservation",
    "SpecularField",
    "rayleigh_g",
    "smooth_patch_coefficient",
    "kirchhoff_factor",
    "v_components",
    "mean_rho_squared",
    "mean_rho_squared_components",
    "scatter_kernel",
    "specular_reflected_field",
    "mean_scattered_power",
    "rms_scattered_field",
]

_SINC_EPS = 1e-12
_GRAZING_EPS = 1e-9
# tangent-plane model sanity limits; exceeding them warns, never fails
_STEEP_SLOPE_RATIO = 0.5
_LARGE_G = 100.0


@dataclass(frozen=True)
class SurfaceRoughness:
    """Gaussian rough-surface statistics and patch dimensions.

    sigma_h: surface height standard deviation, m (>= 0)
    corr_dist: height autocorrelation distance, m (> 0)
    dim_x, dim_y: illuminated patch dimensions, m (> 0)
    """

    sigma_h: float
    corr_dist: float
    dim_x: float
    dim_y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.sigma_h) and self.sigma_h >= 0.0):
            raise DomainError(f"sigma_h must be finite and >= 0, got {self.sigma_h}")
        for name in ("corr_dist", "dim_x", "dim_y"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"{name} must be finite and > 0, got {v}")

    @property
    def area(self) -> float:
        """Patch area A = X*Y in m^2."""
        return self.dim_x * self.dim_y


@dataclass(frozen=True)
class ScatterGeometry:
    """Incident and scattered directions (radians).

    theta_i: incidence zenith angle in [0, pi/2)
    theta_r: scattered zenith angle in [0, pi/2]
    theta_s: scattered azimuth angle in [0, 2*pi)
    """

    theta_i: float
    theta_r: float
    theta_s: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta_i) and 0.0 <= self.theta_i < math.pi / 2):
            raise DomainError(f"theta_i must lie in [0, pi/2), got {self.theta_i}")
        if not (math.isfinite(self.theta_r) and 0.0 <= self.theta_r <= math.pi / 2):
            raise DomainError(f"theta_r must lie in [0, pi/2], got {self.theta_r}")
        if not (math.isfinite(self.theta_s) and 0.0 <= self.theta_s < 2.0 * math.pi):
            raise DomainError(f"theta_s must lie in [0, 2*pi), got {self.theta_s}")

    @property
    def is_specular(self) -> bool:
        return self.theta_r == self.theta_i and self.theta_s == 0.0


@dataclass(frozen=True)
class ScatterKernel:
    """All intermediate and final scattering quantities for one geometry."""

    g: float
    rho0: float
    f_factor: float
    v_x: float
    v_y: float
    mean_rho_sq: float
    terms_used: int


@dataclass(frozen=True)
class ScatterObservation:
    """Observation distance (m) and incident perpendicular field amplitude (V/m)."""

    r0: float
    e_i: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r0) and self.r0 > 0.0):
            raise DomainError(f"observation distance must be finite and > 0, got {self.r0}")
        if not math.isfinite(self.e_i):
            raise DomainError(f"incident field amplitude must be finite, got {self.e_i}")


class SpecularField(NamedTuple):
    """The two equivalent expressions for the smooth-reference specular field.

    fresnel_form: Gamma_perp * E_i (plane-wave reflection coefficient form)
    helmholtz_form: j*2*beta1*E_i*exp(j*beta1*R0)*X*Y*cos(theta_i)/(pi*R0)
                    (Helmholtz-integral form for a finite patch)
    """

    fresnel_form: complex
    helmholtz_form: complex


def rayleigh_g(stats: SurfaceRoughness, geo: ScatterGeometry, wavelength: float) -> float:
    """Rayleigh roughness parameter g = [(2*pi*sigma_h/lambda)*(cos(theta_i)+cos(theta_r))]**2."""
    if not (math.isfinite(wavelength) and wavelength > 0.0):
        raise DomainError(f"wavelength must be finite and > 0, got {wavelength}")
    amp = (2.0 * math.pi * stats.sigma_h / wavelength) * (
        math.cos(geo.theta_i) + math.cos(geo.theta_r)
    )
    return amp * amp


def _sinc(a: float) -> float:
    # removable singularity: below the double-precision noise floor sin(a)/a is 1
    if abs(a) < _SINC_EPS:
        return 1.0
    return math.sin(a) / a


def smooth_patch_coefficient(stats: SurfaceRoughness, v_x: float, v_y: float) -> float:
    """Scattering coefficient of a smooth patch: sin(vx*X)/(vx*X) * sin(vy*Y)/(vy*Y)."""
    return _sinc(v_x * stats.dim_x) * _sinc(v_y * stats.dim_y)


def kirchhoff_factor(geo: ScatterGeometry) -> float:
    """Geometry factor of the tangent-plane solution.

    F = (1 + cos(theta_i)*cos(theta_r) - sin(theta_i)*sin(theta_r)*cos(theta_s))
        / (cos(theta_i)*(cos(theta_i) + cos(theta_r)))
    """
    if geo.is_specular:
        # numerator 1 + cos^2 - sin^2 = 2*cos^2 equals the denominator
        return 1.0
    ci, cr = math.cos(geo.theta_i), math.cos(geo.theta_r)
    den = ci * (ci + cr)
    if den <= _GRAZING_EPS:
        raise DomainError("Kirchhoff factor undefined at grazing incidence")
    num = 1.0 + ci * cr - math.sin(geo.theta_i) * math.sin(geo.theta_r) * math.cos(geo.theta_s)
    return num / den


def v_components(geo: ScatterGeometry, wavelength: float) -> tuple[float, float]:
    """x/y components of the incident-minus-scattered wave-vector difference.

    v_x = (2*pi/lambda)*(sin(theta_i) - sin(theta_r)*cos(theta_s))
    v_y = -(2*pi/lambda)*sin(theta_r)*sin(theta_s)
    """
    if not (math.isfinite(wavelength) and wavelength > 0.0):
        raise DomainError(f"wavelength must be finite and > 0, got {wavelength}")
    k = 2.0 * math.pi / wavelength
    v_x = k * (math.sin(geo.theta_i) - math.sin(geo.theta_r) * math.cos(geo.theta_s))
    v_y = -k * (math.sin(geo.theta_r) * math.sin(geo.theta_s))
    return v_x, v_y


def mean_rho_squared_components(
    g: float,
    rho0: float,
    f_factor: float,
    v_x: float,
    v_y: float,
    corr_dist: float,
    area: float,
    tol: float = 1e-12,
    max_terms: int = 10000,
) -> tuple[float, int]:
    """<rho*conj(rho)> from precomputed kernel components.

    The series term for index m is g**m/(m!*m) * exp(-(vx^2+vy^2)*D^2/(4*m)).
    Terms are generated through a log-space recurrence (adding
    log(g) + log(m) - 2*log(m+1) per step) with the exp(-g) prefactor folded
    in, so nothing overflows even when g is in the hundreds and the summands
    near m ~ g rival exp(g).

    Truncation stops at the first index whose contribution is below tol
    relative to the running total AND whose geometric tail bound
    term * r/(1-r), with r = (g/(m+1))*exp(q/(m*(m+1))), is below the same
    threshold.  Exhausting max_terms raises ConvergenceError carrying the
    partial sum and the last bound.
    """
    if not (0.0 < tol <= 1e-3):
        raise DomainError(f"tolerance must lie in (0, 1e-3], got {tol}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms}")
    if not (math.isfinite(g) and g >= 0.0):
        raise DomainError(f"roughness parameter must be finite and >= 0, got g={g}")
    for name, v in (("rho0", rho0), ("f_factor", f_factor), ("v_x", v_x), ("v_y", v_y)):
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v}")
    if not (math.isfinite(corr_dist) and corr_dist > 0.0):
        raise DomainError(f"corr_dist must be finite and > 0, got {corr_dist}")
    if not (math.isfinite(area) and area > 0.0):
        raise DomainError(f"area must be finite and > 0, got {area}")

    smooth_part = math.exp(-g) * rho0 * rho0
    if g == 0.0:
        return rho0 * rho0, 0

    coupling = math.pi * corr_dist * corr_dist * f_factor * f_factor / area
    q = (v_x * v_x + v_y * v_y) * corr_dist * corr_dist / 4.0

    log_g = math.log(g)
    log_coeff = -g + log_g  # log of exp(-g)*g^1/(1!*1)
    series = 0.0
    tail_bound = math.inf
    for m in range(1, max_terms + 1):
        term = math.exp(log_coeff - q / m)
        series += term
        total = smooth_part + coupling * series
        contribution = coupling * term
        if contribution <= tol * total:
            # r bounds term_{m+1}/term_m from above and shrinks with m, so the
            # remaining tail is below term * r/(1-r); compare in log form first
            # so a huge q cannot overflow the exp
            log_ratio = log_g - math.log(m + 1.0) + q / (m * (m + 1.0))
            if log_ratio < 0.0:
                ratio = math.exp(log_ratio)
                tail_bound = coupling * term * ratio / (1.0 - ratio)
                if tail_bound <= tol * total:
                    return total, m
        log_coeff += log_g + math.log(m) - 2.0 * math.log(m + 1.0)

    raise ConvergenceError(
        f"series did not converge within {max_terms} terms "
        f"(partial sum {smooth_part + coupling * series}, tail bound {tail_bound})",
        partial_sum=smooth_part + coupling * series,
        tail_bound=tail_bound,
        terms_used=max_terms,
    )


def mean_rho_squared(
    stats: SurfaceRoughness,
    geo: ScatterGeometry,
    wavelength: float,
    tol: float = 1e-12,
    max_terms: int = 10000,
) -> tuple[float, int]:
    """<rho*conj(rho)> for a surface/geometry/wavelength triple.

    Returns (value, series terms used).  Outside the tangent-plane comfort
    zone (steep slopes sigma_h/D > 0.5 or phase variance g > 100) the value
    is still computed as written but a KirchhoffValidityWarning is emitted.
    """
    if stats.sigma_h / stats.corr_dist > _STEEP_SLOPE_RATIO:
        warnings.warn(
            f"steep-slope regime: sigma_h/corr_dist = "
            f"{stats.sigma_h / stats.corr_dist:.3g} > {_STEEP_SLOPE_RATIO}",
            KirchhoffValidityWarning,
            stacklevel=2,
        )
    g = rayleigh_g(stats, geo, wavelength)
    if g > _LARGE_G:
        warnings.warn(
            f"very rough regime: g = {g:.3g} > {_LARGE_G:g}",
            KirchhoffValidityWarning,
            stacklevel=2,
        )
    v_x, v_y = v_components(geo, wavelength)
    rho0 = smooth_patch_coefficient(stats, v_x, v_y)
    f_factor = kirchhoff_factor(geo)
    return mean_rho_squared_components(
        g, rho0, f_factor, v_x, v_y, stats.corr_dist, stats.area, tol=tol, max_terms=max_terms
    )


def scatter_kernel(
    stats: SurfaceRoughness,
    geo: ScatterGeometry,
    wavelength: float,
    tol: float = 1e-12,
    max_terms: int = 10000,
) -> ScatterKernel:
    """Evaluate every scattering quantity for one geometry in one pass."""
    g = rayleigh_g(stats, geo, wavelength)
    v_x, v_y = v_components(geo, wavelength)
    rho0 = smooth_patch_coefficient(stats, v_x, v_y)
    f_factor = kirchhoff_factor(geo)
    value, terms = mean_rho_squared(stats, geo, wavelength, tol=tol, max_terms=max_terms)
    return ScatterKernel(
        g=g,
        rho0=rho0,
        f_factor=f_factor,
        v_x=v_x,
        v_y=v_y,
        mean_rho_sq=value,
        terms_used=terms,
    )


def specular_reflected_field(
    obs: ScatterObservation,
    stats: SurfaceRoughness,
    geo: ScatterGeometry,
    beta1: float,
    gamma_perp: complex,
) -> SpecularField:
    """Smooth-reference specular reflected field, both equivalent forms.

    The Helmholtz form is the reflection a smooth, perfectly conducting
    patch of the same dimensions would produce at distance R0; it is the
    normalizer in the scattering-coefficient definition.  Callers pick the
    form their power budget needs.
    """
    if not geo.is_specular:
        raise DomainError("specular reflected field requires theta_r == theta_i, theta_s == 0")
    if not (math.isfinite(beta1) and beta1 > 0.0):
        raise DomainError(f"beta1 must be finite and > 0, got {beta1}")
    fresnel_form = gamma_perp * obs.e_i
    helmholtz_form = (
        1j
        * 2.0
        * beta1
        * obs.e_i
        * cmath.exp(1j * beta1 * obs.r0)
        * stats.dim_x
        * stats.dim_y
        * math.cos(geo.theta_i)
        / (math.pi * obs.r0)
    )
    return SpecularField(fresnel_form=fresnel_form, helmholtz_form=helmholtz_form)


def mean_scattered_power(
    admittance_y1: float, e_r_magnitude: float, mean_rho_sq: float
) -> float:
    """Mean scattered power density 0.5*Y1*|E_r|**2*<rho*conj(rho)> in W/m^2.

    Y1 is the (real, near-lossless) magnitude of the medium-1 admittance.
    """
    for name, v in (
        ("admittance_y1", admittance_y1),
        ("e_r_magnitude", e_r_magnitude),
        ("mean_rho_sq", mean_rho_sq),
    ):
        if not (math.isfinite(v) and v >= 0.0):
            raise DomainError(f"{name} must be finite and >= 0, got {v}")
    return 0.5 * admittance_y1 * e_r_magnitude * e_r_magnitude * mean_rho_sq


def rms_scattered_field(e_r_magnitude: float, mean_rho_sq: float) -> float:
    """Root-mean-square scattered field |E_r|*sqrt(<rho*conj(rho)>) in V/m."""
    for name, v in (("e_r_magnitude", e_r_magnitude), ("mean_rho_sq", mean_rho_sq)):
        if not (math.isfinite(v) and v >= 0.0):
            raise DomainError(f"{name} must be finite and >= 0, got {v}")
    return e_r_magnitude * math.sqrt(mean_rho_sq)
