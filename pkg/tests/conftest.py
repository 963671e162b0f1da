import math

from hypothesis import strategies as st

from thzprop import Medium, OperatingPoint

# parameter windows around realistic low-THz problems; wide enough to stress
# the numerics, narrow enough to stay off float-overflow cliffs
eps_r = st.floats(min_value=1.0, max_value=100.0)
mu_r = st.floats(min_value=0.1, max_value=10.0)
sigma = st.floats(min_value=0.0, max_value=1.0e8)
positive_sigma = st.floats(min_value=1.0e-6, max_value=1.0e8)
freq_hz = st.floats(min_value=1.0e9, max_value=1.0e13)
theta_i = st.floats(min_value=0.0, max_value=math.radians(89.0))


@st.composite
def media(draw, sigma_strategy=sigma):
    return Medium.from_relative(
        eps_r=draw(eps_r), sigma=draw(sigma_strategy), mu_r=draw(mu_r)
    )


@st.composite
def lossless_media(draw):
    return Medium.from_relative(eps_r=draw(eps_r), sigma=0.0, mu_r=draw(mu_r))


@st.composite
def operating_points(draw):
    return OperatingPoint.from_frequency(draw(freq_hz))
