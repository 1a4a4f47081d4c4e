"""Numerical laboratory for the fractional Fourier transform."""

from ._frftlab import (  # noqa: F401
    frac_convolve,
    frac_hilbert,
    fresnel_c,
    frft,
    grid_points,
    inverse_frft,
    kernel_value,
    lp_norm,
    mean_via_convolution,
    partial_sum,
    phi_mean,
    poisson_kernel,
    recover,
    run_suite,
    sine_integral,
    square_function,
    staircase_signal,
    suite_names,
    chirp_u,
    weierstrass_kernel,
)

__all__ = [
    "frac_convolve",
    "frac_hilbert",
    "fresnel_c",
    "frft",
    "grid_points",
    "inverse_frft",
    "kernel_value",
    "lp_norm",
    "mean_via_convolution",
    "partial_sum",
    "phi_mean",
    "poisson_kernel",
    "recover",
    "run_suite",
    "sine_integral",
    "square_function",
    "staircase_signal",
    "suite_names",
    "chirp_u",
    "weierstrass_kernel",
]
