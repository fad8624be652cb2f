"""Casimir energy, free energy, entropy and pressure per unit plate area for a
massless scalar field between two parallel hyperplanes in N spatial dimensions.

Natural units throughout (hbar = c = k_B = 1): lengths set every scale, so the
quantities carry units length^{-N} (E, F), length^{-(N-1)} (S) and
length^{-(N+1)} (P). Negative pressure means the plates attract.
"""

from ._core import (
    ConvergenceError,
    ValidationError,
    __version__,
    compute,
    energy_finite_t,
    energy_zero_t,
    entropy,
    entropy_high_t,
    free_energy_finite_t,
    optical_even_energy,
    oracle_energy_zero_t,
    pressure_finite_t,
    pressure_zero_t,
)

__all__ = [
    "ConvergenceError",
    "ValidationError",
    "__version__",
    "compute",
    "energy_finite_t",
    "energy_zero_t",
    "entropy",
    "entropy_high_t",
    "free_energy_finite_t",
    "optical_even_energy",
    "oracle_energy_zero_t",
    "pressure_finite_t",
    "pressure_zero_t",
]
