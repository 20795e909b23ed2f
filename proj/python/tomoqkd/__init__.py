"""Csiszar-Korner yield of tomographic QKD with a quantum-dot photon source."""

from ._core import (
    analyze,
    coefficients,
    entropy,
    find_threshold,
    is_entangled,
    mutual_information,
    srm_success,
    sweep,
)

__all__ = [
    "analyze",
    "coefficients",
    "entropy",
    "find_threshold",
    "is_entangled",
    "mutual_information",
    "srm_success",
    "sweep",
]
