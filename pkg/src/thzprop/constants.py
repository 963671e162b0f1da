"""Physical constants, pinned to exact SI definitions for reproducibility."""

import math

C_0 = 299792458.0                  # speed of light in vacuum, m/s
MU_0 = 4.0 * math.pi * 1e-7        # vacuum permeability, H/m
EPS_0 = 1.0 / (MU_0 * C_0 * C_0)   # vacuum permittivity, F/m
ETA_0 = MU_0 * C_0                 # vacuum intrinsic impedance, ~376.73 ohm
