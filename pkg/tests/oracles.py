"""Independent oracles used to pin expected values.

Everything here is deliberately written from scratch against the textbook
closed forms (or arbitrary-precision direct summation) and stays off the
library code paths it is used to check.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from mpmath import mp, mpf

C_VAC = 299792458.0
MU_VAC = 4.0 * math.pi * 1e-7
EPS_VAC = 1.0 / (MU_VAC * C_VAC * C_VAC)


def good_conductor_alpha(w: float, mu: float, sigma: float) -> float:
    """Skin-effect closed form sqrt(w*mu*sigma/2), valid for sigma/(w*eps) >> 1."""
    return math.sqrt(w * mu * sigma / 2.0)


def vacuum_wavelength(freq_hz: float) -> float:
    return C_VAC / freq_hz


def real_snell_sin(eps_r1: float, eps_r2: float, theta_i: float) -> float:
    """n1*sin(theta_i) = n2*sin(theta_t) with n = sqrt(eps_r), lossless."""
    return math.sin(theta_i) * math.sqrt(eps_r1 / eps_r2)


def normal_incidence_reflection(eta1: complex, eta2: complex) -> complex:
    return (eta2 - eta1) / (eta2 + eta1)


def brewster_angle(eps_r1: float, eps_r2: float) -> float:
    return math.atan(math.sqrt(eps_r2 / eps_r1))


def rayleigh_g_direct(sigma_h: float, wavelength: float, theta_i: float, theta_r: float) -> float:
    return (2.0 * math.pi * sigma_h / wavelength * (math.cos(theta_i) + math.cos(theta_r))) ** 2


def kirchhoff_factor_direct(theta_i: float, theta_r: float, theta_s: float) -> float:
    return (
        1.0
        + math.cos(theta_i) * math.cos(theta_r)
        - math.sin(theta_i) * math.sin(theta_r) * math.cos(theta_s)
    ) / (math.cos(theta_i) * (math.cos(theta_i) + math.cos(theta_r)))


def v_components_direct(
    wavelength: float, theta_i: float, theta_r: float, theta_s: float
) -> tuple[float, float]:
    k = 2.0 * math.pi / wavelength
    return (
        k * (math.sin(theta_i) - math.sin(theta_r) * math.cos(theta_s)),
        -k * math.sin(theta_r) * math.sin(theta_s),
    )


def mp_mean_rho_sq(
    g: float,
    rho0: float,
    f_factor: float,
    v_x: float,
    v_y: float,
    corr_dist: float,
    area: float,
    dps: int = 50,
    max_terms: int = 100000,
) -> float:
    """Arbitrary-precision direct summation of the scattering series.

    Sums term by term at `dps` decimal digits until the remaining terms are
    provably negligible at that precision (or max_terms is hit), then
    returns the float value.
    """
    with mp.workdps(dps):
        gg = mpf(repr(g))
        q = (mpf(repr(v_x)) ** 2 + mpf(repr(v_y)) ** 2) * mpf(repr(corr_dist)) ** 2 / 4
        coupling = mp.pi * mpf(repr(corr_dist)) ** 2 * mpf(repr(f_factor)) ** 2 / mpf(repr(area))
        total = mpf(0)
        if gg > 0:
            fact = mpf(1)
            cutoff = mpf(10) ** (-(dps + 5))
            for m in range(1, max_terms + 1):
                fact *= m
                term = gg**m / (fact * m) * mp.exp(-q / m)
                total += term
                # r bounds the term ratio from above and decreases with m, so
                # once r < 1 the remaining tail is below term * r/(1-r)
                r = gg / (m + 1) * mp.exp(q / (m * (m + 1)))
                if r < 1 and total > 0 and term * r / (1 - r) < cutoff * total:
                    break
        value = mp.exp(-gg) * (mpf(repr(rho0)) ** 2 + coupling * total)
        return float(value)


def phase_front_angle(problem, transmitted_field_fn, depth: float = None) -> float:
    """Numerically extract the constant-phase-front travel direction.

    Samples the transmitted field around an interior point of medium 2 and
    reads the phase gradient off small finite differences (the ratio trick
    keeps each difference far below pi, so no unwrapping is needed).
    Returns the angle of the phase-gradient direction from the +z axis.
    """
    from thzprop.media import phase_constant  # wavelength scale only

    beta2 = phase_constant(problem.medium2, problem.op)
    h = 0.01 / beta2
    if depth is None:
        depth = 5.0 / beta2
    base = np.array([0.3 * depth, 0.0, depth])

    def sample(pos):
        return transmitted_field_fn(problem, 1.0, 0.0, pos).value[1]

    e0 = sample(base)
    dphi_x = cmath.phase(sample(base + np.array([h, 0.0, 0.0])) / e0)
    dphi_z = cmath.phase(sample(base + np.array([0.0, 0.0, h])) / e0)
    # phase decreases along the travel direction for the exp(+jwt) convention
    return math.atan2(-dphi_x, -dphi_z)
