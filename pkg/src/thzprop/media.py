"""Per-medium plane-wave quantities for conductive media.

Everything here is a pure function of the constitutive parameters
(permeability mu in H/m, permittivity eps in F/m, conductivity sigma in S/m)
and the angular frequency w in rad/s.  Loss enters exclusively through
sigma; the loss tangent sigma/(w*eps) drives every formula.

Conventions: time factor exp(+jwt), spatial factor exp(-gamma*r), so the
propagation constant is gamma = alpha + j*beta with alpha >= 0 for passive
media.  The intrinsic impedance uses the principal square root, which lands
in Re(eta) > 0 for any passive medium.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .constants import EPS_0, MU_0
from .errors import DomainError

__all__ = [
    "Medium",
    "OperatingPoint",
    "PropagationState",
    "attenuation_constant",
    "phase_constant",
    "propagation_constant",
    "intrinsic_impedance",
    "wavelength",
    "medium_admittance",
    "propagation_state",
]


@dataclass(frozen=True)
class Medium:
    """Constitutive parameters of a homogeneous, isotropic medium.

    mu: permeability, H/m (> 0)
    eps: permittivity, F/m (> 0)
    sigma: conductivity, S/m (>= 0); sigma == 0 means lossless
    """

    mu: float
    eps: float
    sigma: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mu) and self.mu > 0.0):
            raise DomainError(f"permeability must be finite and > 0, got mu={self.mu}")
        if not (math.isfinite(self.eps) and self.eps > 0.0):
            raise DomainError(f"permittivity must be finite and > 0, got eps={self.eps}")
        if not (math.isfinite(self.sigma) and self.sigma >= 0.0):
            raise DomainError(f"conductivity must be finite and >= 0, got sigma={self.sigma}")

    @classmethod
    def from_relative(cls, eps_r: float, sigma: float = 0.0, mu_r: float = 1.0) -> "Medium":
        """Build from relative permittivity/permeability and conductivity."""
        return cls(mu=mu_r * MU_0, eps=eps_r * EPS_0, sigma=sigma)

    @property
    def is_lossless(self) -> bool:
        return self.sigma == 0.0


@dataclass(frozen=True)
class OperatingPoint:
    """Angular frequency w in rad/s (> 0).  Frequencies in Hz live at the
    API boundary only and are converted once."""

    w: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.w) and self.w > 0.0):
            raise DomainError(f"angular frequency must be finite and > 0, got w={self.w}")

    @classmethod
    def from_frequency(cls, freq_hz: float) -> "OperatingPoint":
        return cls(w=2.0 * math.pi * freq_hz)

    @property
    def frequency(self) -> float:
        """Cyclic frequency in Hz."""
        return self.w / (2.0 * math.pi)


@dataclass(frozen=True)
class PropagationState:
    """Derived per-medium, per-frequency quantities.

    alpha: attenuation constant, Np/m
    beta: phase constant, rad/m
    gamma: propagation constant alpha + j*beta, 1/m (by construction)
    eta: intrinsic impedance, ohm
    wavelength: 2*pi/beta, m
    admittance: 1/eta, S
    """

    alpha: float
    beta: float
    gamma: complex
    eta: complex
    wavelength: float
    admittance: complex


def _loss_tangent(m: Medium, op: OperatingPoint) -> float:
    return m.sigma / (op.w * m.eps)


def _bracket_minus(x: float) -> float:
    """sqrt(1 + x**2) - 1, stable for both tiny and huge loss tangents.

    hypot never overflows for x in float range; the rewritten quotient
    avoids the catastrophic cancellation of the direct form when x << 1.
    """
    h = math.hypot(1.0, x)
    if x <= 1.0:
        return x * x / (h + 1.0)
    return h - 1.0


def attenuation_constant(m: Medium, op: OperatingPoint) -> float:
    """Attenuation constant alpha in Np/m.

    alpha = w*sqrt(mu*eps) * sqrt( (sqrt(1 + (sigma/(w*eps))**2) - 1) / 2 ).
    Zero exactly for lossless media.
    """
    x = _loss_tangent(m, op)
    alpha = op.w * math.sqrt(m.mu * m.eps) * math.sqrt(0.5 * _bracket_minus(x))
    if not math.isfinite(alpha):
        raise DomainError(
            f"attenuation constant overflowed for sigma={m.sigma}, w={op.w}"
        )
    return alpha


def phase_constant(m: Medium, op: OperatingPoint) -> float:
    """Phase constant beta (wave number) in rad/m.

    beta = w*sqrt(mu*eps) * sqrt( (sqrt(1 + (sigma/(w*eps))**2) + 1) / 2 ),
    which reduces to w*sqrt(mu*eps) exactly when sigma == 0.
    """
    x = _loss_tangent(m, op)
    beta = op.w * math.sqrt(m.mu * m.eps) * math.sqrt(0.5 * (math.hypot(1.0, x) + 1.0))
    if not math.isfinite(beta):
        raise DomainError(f"phase constant overflowed for sigma={m.sigma}, w={op.w}")
    return beta


def propagation_constant(m: Medium, op: OperatingPoint) -> complex:
    """Complex propagation constant gamma = alpha + j*beta in 1/m."""
    return complex(attenuation_constant(m, op), phase_constant(m, op))


def intrinsic_impedance(m: Medium, op: OperatingPoint) -> complex:
    """Intrinsic impedance eta = sqrt(j*w*mu / (sigma + j*w*eps)) in ohm.

    Principal branch; Re(eta) > 0 for any passive medium, and the lossless
    case comes out exactly real (sqrt(mu/eps)).
    """
    eta = cmath.sqrt(1j * op.w * m.mu / complex(m.sigma, op.w * m.eps))
    if not (math.isfinite(eta.real) and math.isfinite(eta.imag)):
        raise DomainError(f"intrinsic impedance overflowed for sigma={m.sigma}, w={op.w}")
    return eta


def wavelength(beta: float) -> float:
    """Wavelength 2*pi/beta in m for a phase constant in rad/m."""
    if not (math.isfinite(beta) and beta > 0.0):
        raise DomainError(f"phase constant must be finite and > 0, got beta={beta}")
    return 2.0 * math.pi / beta


def medium_admittance(eta: complex) -> complex:
    """Medium admittance Y = 1/eta in S."""
    if eta == 0:
        raise DomainError("admittance undefined for eta == 0 (perfect conductor)")
    return 1.0 / eta


def propagation_state(m: Medium, op: OperatingPoint) -> PropagationState:
    """Evaluate all derived quantities for one medium at one frequency."""
    alpha = attenuation_constant(m, op)
    beta = phase_constant(m, op)
    eta = intrinsic_impedance(m, op)
    return PropagationState(
        alpha=alpha,
        beta=beta,
        gamma=complex(alpha, beta),
        eta=eta,
        wavelength=wavelength(beta),
        admittance=medium_admittance(eta),
    )
