"""Quantized Lienard oscillator: spectra, eigenfunctions and verification checks."""

from ._lienard import (
    AmbiguityParams,
    ConstraintError,
    DerivedParams,
    DomainError,
    PhysicalParams,
    __version__,
    derive_params,
    effective_potential,
    eigensolver_spectrum,
    gram_defect,
    limit_deviation,
    psi,
    riccati_residual,
    run_command,
    shape_invariance,
    spectrum,
    trajectory,
    verify,
)

__all__ = [
    "AmbiguityParams",
    "ConstraintError",
    "DerivedParams",
    "DomainError",
    "PhysicalParams",
    "__version__",
    "derive_params",
    "effective_potential",
    "eigensolver_spectrum",
    "gram_defect",
    "limit_deviation",
    "psi",
    "riccati_residual",
    "run_command",
    "shape_invariance",
    "spectrum",
    "trajectory",
    "verify",
]
