"""Oblique plane-wave incidence on the planar interface between two media.

Geometry: the interface is the z = 0 plane, medium 1 fills z < 0 and medium
2 fills z > 0.  The plane of incidence is xz, so the perpendicular
(horizontal) polarization basis points along +y and the parallel (vertical)
basis is propagation x perp.  The incident wave travels along
(sin(theta_i), 0, cos(theta_i)).

Refraction into a lossy medium produces a complex transmission angle; its
cosine branch is fixed by the physical decay condition
Re(gamma2 * cos(theta_t)) >= 0, so the transmitted wave can only decay into
medium 2.  The real direction of constant-phase-front travel is the true
refracted angle psi_t, which differs from the complex Snell angle.

Reflected-field evaluation uses only the phase constant of medium 1: the
incidence side is treated as a near-perfect dielectric and any small
medium-1 attenuation is deliberately ignored there.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .media import Medium, OperatingPoint, PropagationState, propagation_state

__all__ = [
    "InterfaceProblem",
    "ComplexAngle",
    "RefractionSolution",
    "FresnelCoefficients",
    "FieldSample",
    "PolarizationBasis",
    "snell_refraction",
    "fresnel_perp",
    "fresnel_par",
    "fresnel_coefficients",
    "true_refraction",
    "polarization_basis",
    "decompose_polarization",
    "recompose_fields",
    "incident_direction",
    "transmitted_field",
    "reflected_field",
]

PLANE_OF_INCIDENCE_NORMAL = np.array([0.0, 1.0, 0.0])

_TRANSVERSALITY_RTOL = 1e-9


@dataclass(frozen=True)
class InterfaceProblem:
    """One oblique-incidence problem: ordered media pair, frequency, angle.

    medium1 is the incidence side (near-perfect dielectric in the intended
    scenario), medium2 the transmission side, theta_i the incidence angle in
    rad within [0, pi/2).  Grazing incidence (theta_i == pi/2) is rejected
    outright rather than returning limit values.
    """

    medium1: Medium
    medium2: Medium
    op: OperatingPoint
    theta_i: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta_i) and 0.0 <= self.theta_i < math.pi / 2):
            raise DomainError(
                f"incidence angle must lie in [0, pi/2), got theta_i={self.theta_i}"
            )


@dataclass(frozen=True)
class ComplexAngle:
    """sin/cos pair of the (generally complex) transmission angle."""

    sin: complex
    cos: complex


@dataclass(frozen=True)
class RefractionSolution:
    """Complex transmission angle plus the real travel direction.

    psi_t is the true refracted angle in rad; n_t = (sin psi_t, 0, cos psi_t)
    is the unit direction of constant-phase-front travel in medium 2.
    """

    sin_theta_t: complex
    cos_theta_t: complex
    psi_t: float
    n_t: np.ndarray


@dataclass(frozen=True)
class FresnelCoefficients:
    """Field transmission/reflection coefficients for both polarizations."""

    t_perp: complex
    gamma_perp: complex
    t_par: complex
    gamma_par: complex


@dataclass(frozen=True)
class FieldSample:
    """A complex electric-field vector (V/m) evaluated at a position (m)."""

    value: np.ndarray
    position: np.ndarray

    def __post_init__(self) -> None:
        if not (np.all(np.isfinite(self.value.real)) and np.all(np.isfinite(self.value.imag))):
            raise DomainError("field sample has non-finite components")
        if not np.all(np.isfinite(self.position)):
            raise DomainError("field sample position has non-finite components")


def _states(p: InterfaceProblem) -> tuple[PropagationState, PropagationState]:
    return propagation_state(p.medium1, p.op), propagation_state(p.medium2, p.op)


def snell_refraction(p: InterfaceProblem) -> ComplexAngle:
    """Complex transmission angle from gamma1*sin(theta_i) = gamma2*sin(theta_t).

    cos(theta_t) = sqrt(1 - sin(theta_t)**2) with the branch chosen so that
    Re(gamma2*cos(theta_t)) >= 0; any other branch would make the
    transmitted wave grow exponentially into medium 2.
    """
    s1, s2 = _states(p)
    if s2.gamma == 0:
        raise DomainError("medium 2 has zero propagation constant")
    sin_t = (s1.gamma / s2.gamma) * math.sin(p.theta_i)
    cos_t = cmath.sqrt(1.0 - sin_t * sin_t)
    if (s2.gamma * cos_t).real < 0.0:
        cos_t = -cos_t
    return ComplexAngle(sin=sin_t, cos=cos_t)


def fresnel_perp(p: InterfaceProblem) -> tuple[complex, complex]:
    """Perpendicular (horizontal) polarization coefficients (T, Gamma).

    T = 2*eta2*cos(theta_i) / (eta2*cos(theta_i) + eta1*cos(theta_t))
    Gamma = (eta2*cos(theta_i) - eta1*cos(theta_t)) / (same denominator)

    so 1 + Gamma == T identically.
    """
    s1, s2 = _states(p)
    ang = snell_refraction(p)
    ci = math.cos(p.theta_i)
    den = s2.eta * ci + s1.eta * ang.cos
    if den == 0:
        raise DomainError("perpendicular Fresnel denominator vanished")
    return 2.0 * s2.eta * ci / den, (s2.eta * ci - s1.eta * ang.cos) / den


def fresnel_par(p: InterfaceProblem) -> tuple[complex, complex]:
    """Parallel (vertical) polarization coefficients (T, Gamma).

    T = 2*eta2*cos(theta_i) / (eta2*cos(theta_t) + eta1*cos(theta_i))
    Gamma = (eta2*cos(theta_t) - eta1*cos(theta_i)) / (same denominator)

    so 1 + Gamma == T*cos(theta_t)/cos(theta_i) identically.
    """
    s1, s2 = _states(p)
    ang = snell_refraction(p)
    ci = math.cos(p.theta_i)
    den = s2.eta * ang.cos + s1.eta * ci
    if den == 0:
        raise DomainError("parallel Fresnel denominator vanished")
    return 2.0 * s2.eta * ci / den, (s2.eta * ang.cos - s1.eta * ci) / den


def fresnel_coefficients(p: InterfaceProblem) -> FresnelCoefficients:
    """Both polarizations in one record."""
    t_perp, g_perp = fresnel_perp(p)
    t_par, g_par = fresnel_par(p)
    return FresnelCoefficients(t_perp=t_perp, gamma_perp=g_perp, t_par=t_par, gamma_par=g_par)


def true_refraction(p: InterfaceProblem) -> RefractionSolution:
    """Full refraction solution including the real travel direction.

    psi_t = atan( beta1*sin(theta_i) /
                  (alpha2*Im(cos(theta_t)) + beta2*Re(cos(theta_t))) )

    For lossless media this collapses to the real Snell angle.  The
    denominator is Im(gamma2*cos(theta_t)), which is positive for any
    physical solution; a non-positive value means the inputs are outside
    the passive-media domain.
    """
    s1, s2 = _states(p)
    ang = snell_refraction(p)
    denom = s2.alpha * ang.cos.imag + s2.beta * ang.cos.real
    if denom <= 0.0:
        raise DomainError(
            "true refracted angle undefined: phase-front denominator "
            f"{denom} is not positive"
        )
    psi_t = math.atan2(s1.beta * math.sin(p.theta_i), denom)
    n_t = np.array([math.sin(psi_t), 0.0, math.cos(psi_t)])
    return RefractionSolution(sin_theta_t=ang.sin, cos_theta_t=ang.cos, psi_t=psi_t, n_t=n_t)


@dataclass(frozen=True)
class PolarizationBasis:
    """Right-handed (perp, par, propagation) triad for one travel direction.

    perp is the out-of-plane (horizontal) unit vector, par = propagation x
    perp lies in the plane of incidence.
    """

    perp: np.ndarray
    par: np.ndarray
    propagation: np.ndarray


def polarization_basis(
    propagation: np.ndarray,
    plane_normal: np.ndarray = PLANE_OF_INCIDENCE_NORMAL,
) -> PolarizationBasis:
    """Build the polarization triad for a unit propagation direction."""
    propagation = np.asarray(propagation, dtype=float)
    plane_normal = np.asarray(plane_normal, dtype=float)
    if abs(np.linalg.norm(propagation) - 1.0) > 1e-9:
        raise DomainError("propagation direction must be a unit vector")
    if abs(np.linalg.norm(plane_normal) - 1.0) > 1e-9:
        raise DomainError("plane-of-incidence normal must be a unit vector")
    if abs(float(np.dot(propagation, plane_normal))) > 1e-9:
        raise DomainError("propagation direction must lie in the plane of incidence")
    par = np.cross(propagation, plane_normal)
    return PolarizationBasis(perp=plane_normal, par=par, propagation=propagation)


def decompose_polarization(
    e_field: np.ndarray, basis: PolarizationBasis
) -> tuple[complex, complex]:
    """Split a transverse complex field vector into (perp, par) amplitudes.

    The field must be transverse to the propagation direction to within
    1e-9 relative, otherwise the decomposition would silently drop a
    longitudinal component.
    """
    e = np.asarray(e_field, dtype=complex)
    norm = np.linalg.norm(e)
    longitudinal = abs(complex(np.dot(e, basis.propagation)))
    if norm > 0 and longitudinal > _TRANSVERSALITY_RTOL * norm:
        raise DomainError(
            f"field is not transverse: longitudinal fraction {longitudinal / norm:.3e}"
        )
    return complex(np.dot(e, basis.perp)), complex(np.dot(e, basis.par))


def recompose_fields(e_perp: complex, e_par: complex, basis: PolarizationBasis) -> np.ndarray:
    """Rebuild the vector field from (perp, par) amplitudes."""
    return e_perp * basis.perp.astype(complex) + e_par * basis.par.astype(complex)


def incident_direction(p: InterfaceProblem) -> np.ndarray:
    """Unit travel direction of the incident wave."""
    return np.array([math.sin(p.theta_i), 0.0, math.cos(p.theta_i)])


def transmitted_field(
    p: InterfaceProblem,
    e_perp: complex,
    e_par: complex,
    position: np.ndarray,
) -> FieldSample:
    """Transmitted field at a point with z >= 0 (inside medium 2).

    Each polarization amplitude is scaled by its transmission coefficient
    and both share the propagation factor
    exp(-(alpha2 + j*beta2)*(x*sin(theta_t) + z*cos(theta_t))), with the
    complex transmission angle.  The vector direction of the parallel
    component follows the true travel direction in medium 2.
    """
    position = np.asarray(position, dtype=float)
    x, _, z = position
    if z < 0.0:
        raise DomainError(f"transmitted field requires z >= 0, got z={z}")
    _, s2 = _states(p)
    sol = true_refraction(p)
    t_perp, _ = fresnel_perp(p)
    t_par, _ = fresnel_par(p)
    phase = cmath.exp(-s2.gamma * (x * sol.sin_theta_t + z * sol.cos_theta_t))
    basis = polarization_basis(sol.n_t)
    value = (t_perp * e_perp * basis.perp + t_par * e_par * basis.par) * phase
    return FieldSample(value=value.astype(complex), position=position)


def reflected_field(
    p: InterfaceProblem,
    e_perp: complex,
    e_par: complex,
    position: np.ndarray,
    theta_r: Optional[float] = None,
) -> FieldSample:
    """Reflected field at a point with z <= 0 (medium 1 side).

    The reflected direction defaults to specular (theta_r = theta_i).  The
    propagation factor exp(-j*beta1*(x*sin(theta_r) - z*cos(theta_r))) is
    purely oscillatory, so the magnitude is position-independent.
    """
    position = np.asarray(position, dtype=float)
    x, _, z = position
    if z > 0.0:
        raise DomainError(f"reflected field requires z <= 0, got z={z}")
    if theta_r is None:
        theta_r = p.theta_i
    if not (math.isfinite(theta_r) and 0.0 <= theta_r < math.pi / 2):
        raise DomainError(f"reflected angle must lie in [0, pi/2), got theta_r={theta_r}")
    s1, _ = _states(p)
    _, g_perp = fresnel_perp(p)
    _, g_par = fresnel_par(p)
    phase = cmath.exp(-1j * s1.beta * (x * math.sin(theta_r) - z * math.cos(theta_r)))
    direction = np.array([math.sin(theta_r), 0.0, -math.cos(theta_r)])
    basis = polarization_basis(direction)
    value = (g_perp * e_perp * basis.perp + g_par * e_par * basis.par) * phase
    return FieldSample(value=value.astype(complex), position=position)
