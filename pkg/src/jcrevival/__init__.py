"""Entanglement collapse and revival for two atoms in separate driven cavities.

Exact truncated-Fock evolution, X-form reduction, Wootters concurrence,
and the closed-form saddle-point revival formula, with scan tooling to
compare all of them over time.
"""

from .analytic import (
    AnalyticParams,
    PeakHeight,
    analytic_concurrence,
    peak_height,
    q_of_t,
    revival_center,
    saddle_integral,
)
from .density import (
    TwoQubitDensity,
    XState,
    partial_trace,
    x_elements_series,
    x_project,
)
from .dynamics import (
    BELL_EG_GE,
    JcCoefficients,
    JointState,
    evolve_joint,
    jc_coefficients,
    single_site_propagate,
)
from .entanglement import (
    ConcurrenceValue,
    InvalidStateError,
    NumericalFailureError,
    concurrence_wootters,
    concurrence_x,
    eigenvalues_4x4,
)
from .fock import (
    CoherentCoefficients,
    ModelParams,
    choose_truncation,
    coherent_coefficients,
)
from .scan import (
    ConcurrenceSeries,
    PeakReport,
    ScanConfig,
    detect_peaks,
    run_scan,
)

__all__ = [
    "AnalyticParams",
    "BELL_EG_GE",
    "CoherentCoefficients",
    "ConcurrenceSeries",
    "ConcurrenceValue",
    "InvalidStateError",
    "JcCoefficients",
    "JointState",
    "ModelParams",
    "NumericalFailureError",
    "PeakHeight",
    "PeakReport",
    "ScanConfig",
    "TwoQubitDensity",
    "XState",
    "analytic_concurrence",
    "choose_truncation",
    "coherent_coefficients",
    "concurrence_wootters",
    "concurrence_x",
    "detect_peaks",
    "eigenvalues_4x4",
    "evolve_joint",
    "jc_coefficients",
    "partial_trace",
    "peak_height",
    "q_of_t",
    "revival_center",
    "run_scan",
    "saddle_integral",
    "single_site_propagate",
    "x_elements_series",
    "x_project",
]
