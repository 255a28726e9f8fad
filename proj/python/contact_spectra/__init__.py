"""Reeb-orbit index spectra and contact invariants of Brieskorn manifolds."""

from ._core import (
    ParityError,
    ValidationError,
    WindowError,
    afg_bound,
    brieskorn_index,
    distinguish,
    euler_matching_counts,
    handle_spectrum,
    inf_ceil,
    inf_floor,
    iteration_residual,
    ladder_degree,
    mean_euler,
    mean_index,
    morse_bott_index,
    periodic_flow_index,
    separating_copy_counts,
    sh_plus_rank,
    sh_rank,
    spectrum,
    transport_afg_bound,
)

__all__ = [
    "ParityError",
    "ValidationError",
    "WindowError",
    "afg_bound",
    "brieskorn_index",
    "distinguish",
    "euler_matching_counts",
    "handle_spectrum",
    "inf_ceil",
    "inf_floor",
    "iteration_residual",
    "ladder_degree",
    "mean_euler",
    "mean_index",
    "morse_bott_index",
    "periodic_flow_index",
    "separating_copy_counts",
    "sh_plus_rank",
    "sh_rank",
    "spectrum",
    "transport_afg_bound",
]
