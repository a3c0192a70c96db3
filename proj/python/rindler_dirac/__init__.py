"""Dirac particle in a uniformly accelerated frame: closed-form levels, spinors and a numeric eigensolver."""

from ._core import (
    Grid,
    Sector,
    PotentialKind,
    proper_to_conformal,
    conformal_to_proper,
    energy,
    spectrum_table,
    hermite_coefficients,
    series_coefficients,
    effective_potential,
    spinor,
    lowest_eigenvalues,
    compare_spectra,
    truncation_report,
    run_cli,
    __version__,
)

__all__ = [
    "Grid",
    "Sector",
    "PotentialKind",
    "proper_to_conformal",
    "conformal_to_proper",
    "energy",
    "spectrum_table",
    "hermite_coefficients",
    "series_coefficients",
    "effective_potential",
    "spinor",
    "lowest_eigenvalues",
    "compare_spectra",
    "truncation_report",
    "run_cli",
    "__version__",
]
