"""Steady-state entanglement of two cavity-magnon pairs driven by two-mode
squeezed microwave light.

The package builds the drift and diffusion matrices of the linearized
eight-quadrature model, solves the steady-state Lyapunov equation for the
covariance matrix, and quantifies bipartite entanglement between mode pairs
via logarithmic negativity.  Closed-form covariance blocks for the matched
resonant regime live in :mod:`cavmag.analytic`; parameter sweeps and figure
presets in :mod:`cavmag.sweep`.
"""

from __future__ import annotations

from ._version import __version__
from .cvgaussian import (
    CovarianceMatrix,
    is_physical,
    log_negativity,
    partial_transpose,
    reduce,
    symplectic_eigenvalues,
    symplectic_form,
    tmsv_cm,
    two_mode_symplectic_eigenvalues,
)
from .errors import (
    CavmagError,
    NearSingularError,
    NoEntanglementError,
    NumericalFailureError,
    UnphysicalStateError,
    UnstableSystemError,
)
from .linsys import StabilityReport, integrate_lyapunov_oracle, solve_lyapunov, stability
from .model import (
    BASELINE,
    EntanglementReport,
    NoiseMoments,
    SystemParams,
    build_diffusion,
    build_drift,
    entanglement_report,
    noise_moments,
    steady_state_cm,
    thermal_occupation,
)
from .sweep import (
    PRESET_NAMES,
    SweepAxis,
    SweepGrid,
    SweepSpec,
    emit_csv,
    emit_heatmap,
    emit_lineplot,
    figure_preset,
    find_temperature_threshold,
    run_sweep,
)

__all__ = [
    "__version__",
    "BASELINE",
    "CavmagError",
    "CovarianceMatrix",
    "EntanglementReport",
    "NearSingularError",
    "NoEntanglementError",
    "NoiseMoments",
    "NumericalFailureError",
    "PRESET_NAMES",
    "StabilityReport",
    "SweepAxis",
    "SweepGrid",
    "SweepSpec",
    "SystemParams",
    "UnphysicalStateError",
    "UnstableSystemError",
    "build_diffusion",
    "build_drift",
    "emit_csv",
    "emit_heatmap",
    "emit_lineplot",
    "entanglement_report",
    "figure_preset",
    "find_temperature_threshold",
    "integrate_lyapunov_oracle",
    "is_physical",
    "log_negativity",
    "noise_moments",
    "partial_transpose",
    "reduce",
    "run_sweep",
    "solve_lyapunov",
    "stability",
    "steady_state_cm",
    "symplectic_eigenvalues",
    "symplectic_form",
    "thermal_occupation",
    "tmsv_cm",
    "two_mode_symplectic_eigenvalues",
]
