"""Teleportation fidelity and non-Gaussianity of photon-subtracted
two-mode squeezed vacuum resources."""

from _cvtele import (  # noqa: F401
    chi12,
    coefficient_table_json,
    covariance_matrix,
    covariance_matrix_oracle,
    fidelity,
    fidelity_closed_report,
    fidelity_oracle,
    h_entropy,
    jacobi_p,
    laguerre_assoc,
    non_gaussianity,
    normalization,
)

__all__ = [
    "chi12",
    "coefficient_table_json",
    "covariance_matrix",
    "covariance_matrix_oracle",
    "fidelity",
    "fidelity_closed_report",
    "fidelity_oracle",
    "h_entropy",
    "jacobi_p",
    "laguerre_assoc",
    "non_gaussianity",
    "normalization",
]
