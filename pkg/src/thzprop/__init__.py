"""Low-terahertz plane-wave propagation toolkit.

Covers the full lossy-interface formulary needed for link-level channel
work around 300 GHz: per-medium propagation constants and impedances,
Fresnel coefficients and complex refraction at oblique incidence,
Beckmann-Kirchhoff rough-surface scattering, and a frequency-interpolated
material database, plus a sweep-oriented CLI (see `thzprop.cli`).
"""

from .constants import C_0, EPS_0, ETA_0, MU_0
from .errors import (
    ConvergenceError,
    DomainError,
    KirchhoffValidityWarning,
    MaterialLoadError,
)
from .interface import (
    ComplexAngle,
    FieldSample,
    FresnelCoefficients,
    InterfaceProblem,
    PolarizationBasis,
    RefractionSolution,
    decompose_polarization,
    fresnel_coefficients,
    fresnel_par,
    fresnel_perp,
    polarization_basis,
    recompose_fields,
    reflected_field,
    snell_refraction,
    transmitted_field,
    true_refraction,
)
from .materials import (
    MaterialDB,
    MaterialRecord,
    MaterialSample,
    builtin_records,
    load_materials,
    params_at,
)
from .media import (
    Medium,
    OperatingPoint,
    PropagationState,
    attenuation_constant,
    intrinsic_impedance,
    medium_admittance,
    phase_constant,
    propagation_constant,
    propagation_state,
    wavelength,
)
from .roughness import (
    ScatterGeometry,
    ScatterKernel,
    ScatterObservation,
    SpecularField,
    SurfaceRoughness,
    kirchhoff_factor,
    mean_rho_squared,
    mean_rho_squared_components,
    mean_scattered_power,
    rayleigh_g,
    rms_scattered_field,
    scatter_kernel,
    smooth_patch_coefficient,
    specular_reflected_field,
    v_components,
)

__version__ = "0.1.0"
