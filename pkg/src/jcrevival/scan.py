"""Time-sweep driver: all concurrence paths per tau plus peak analysis.

A scan evaluates the requested methods on an equally spaced tau grid:

    exact    Wootters concurrence of the traced density matrix
    xproj    full X-formula concurrence of the X-projected matrix
    series   published-branch concurrence from the z, a, d series
    analytic saddle-point formula

Grid points are independent, so the sweep may fan out over worker
processes; results are placed by index, making output identical for any
worker count.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict

import numpy as np

from .analytic import AnalyticParams, analytic_concurrence, peak_height, revival_center
from .density import partial_trace, x_elements_series, x_project
from .dynamics import BELL_EG_GE, evolve_joint
from .entanglement import NumericalFailureError, concurrence_wootters, concurrence_x
from .fock import choose_truncation, coherent_coefficients, DEFAULT_TAIL_TOLERANCE

METHODS = ("exact", "xproj", "series", "analytic")

# fixed column order of every series / CSV row
COLUMNS = (
    "C_exact",
    "C_xproj",
    "C_series",
    "C_analytic",
    "abs_z",
    "a",
    "d",
    "max_offx",
    "trace_err",
    "branch_w_minus",
)

ZERO_LEVEL = 1e-6
ZERO_CROSS_HALF_WIDTH = 2.0


@dataclass(frozen=True)
class ScanConfig:
    alpha: float
    tau_start: float
    tau_end: float
    steps: int
    methods: tuple = ("exact",)
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE
    k_window: int = 2
    workers: int = 1

    def __post_init__(self):
        if self.alpha < 0:
            raise ValueError("alpha must be non-negative")
        if not (self.tau_end > self.tau_start >= 0):
            raise ValueError("need tau_end > tau_start >= 0")
        if self.steps < 2:
            raise ValueError("steps must be at least 2")
        unknown = set(self.methods) - set(METHODS)
        if unknown or not self.methods:
            raise ValueError(f"methods must be a non-empty subset of {METHODS}")
        if "analytic" in self.methods and self.alpha == 0:
            raise ValueError("the analytic formula requires alpha > 0")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class ConcurrenceSeries:
    """Per-tau results of one scan.  Absent methods are NaN columns."""

    tau: np.ndarray = field(repr=False)
    data: dict = field(repr=False)
    metadata: dict = field(default_factory=dict)

    def column(self, name: str) -> np.ndarray:
        return self.data[name]

    def __len__(self) -> int:
        return len(self.tau)


@dataclass(frozen=True)
class PeakInfo:
    k: int
    center: float
    height: float
    predicted_center: float | None
    predicted_height: float | None
    center_error: float | None
    height_rel_error: float | None
    zero_crossings: dict


@dataclass(frozen=True)
class CollapseWindow:
    tau_lo: float
    tau_hi: float
    max_value: float


@dataclass(frozen=True)
class PeakReport:
    column: str
    threshold: float
    alpha: float
    peaks: list
    collapse_windows: list

    def to_dict(self) -> dict:
        return asdict(self)


def _compute_rows(config: ScanConfig, taus: np.ndarray) -> np.ndarray:
    """Rows of the series table for a chunk of tau values."""
    n_max = choose_truncation(config.alpha, config.tail_tolerance)
    fld = coherent_coefficients(config.alpha, n_max)
    methods = set(config.methods)
    need_rho = bool(methods & {"exact", "xproj"})
    params = (
        AnalyticParams(alpha=config.alpha, k_window=config.k_window)
        if "analytic" in methods
        else None
    )
    rows = np.full((len(taus), len(COLUMNS)), np.nan)
    col = {name: i for i, name in enumerate(COLUMNS)}
    for i, tau in enumerate(taus):
        tau = float(tau)
        try:
            if need_rho:
                rho = partial_trace(evolve_joint(BELL_EG_GE, fld, fld, tau))
                x = x_project(rho)
                rows[i, col["abs_z"]] = abs(x.z)
                rows[i, col["a"]] = x.a
                rows[i, col["d"]] = x.d
                rows[i, col["max_offx"]] = x.max_offx
                rows[i, col["trace_err"]] = rho.trace_error
                cx = concurrence_x(x)
                rows[i, col["branch_w_minus"]] = cx.branch_w
                if "exact" in methods:
                    rows[i, col["C_exact"]] = concurrence_wootters(rho).value
                if "xproj" in methods:
                    rows[i, col["C_xproj"]] = cx.value
            if "series" in methods:
                z, a, d = x_elements_series(config.alpha, tau, n_max)
                rows[i, col["C_series"]] = 2.0 * max(
                    0.0, abs(z) - np.sqrt(max(a, 0.0) * max(d, 0.0))
                )
                if not need_rho:
                    rows[i, col["abs_z"]] = abs(z)
                    rows[i, col["a"]] = a
                    rows[i, col["d"]] = d
            if params is not None:
                rows[i, col["C_analytic"]] = analytic_concurrence(tau, params)
        except NumericalFailureError as exc:
            raise NumericalFailureError(f"scan failed at tau={tau}: {exc}") from exc
    return rows


def run_scan(config: ScanConfig) -> ConcurrenceSeries:
    """Evaluate every requested method on the configured tau grid."""
    taus = np.linspace(config.tau_start, config.tau_end, config.steps)
    if config.workers == 1:
        table = _compute_rows(config, taus)
    else:
        chunks = np.array_split(np.arange(config.steps), config.workers * 4)
        chunks = [c for c in chunks if len(c)]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_compute_rows, [config] * len(chunks), [taus[c] for c in chunks]))
        table = np.vstack(results)
    n_max = choose_truncation(config.alpha, config.tail_tolerance)
    fld = coherent_coefficients(config.alpha, n_max)
    metadata = {
        "alpha": config.alpha,
        "n_max": n_max,
        "tail_mass": fld.tail_mass,
        "config": asdict(config),
    }
    data = {name: table[:, i].copy() for i, name in enumerate(COLUMNS)}
    return ConcurrenceSeries(tau=taus, data=data, metadata=metadata)


def _cluster_maxima(taus, values, candidates, merge_window):
    """Group candidate maxima closer than merge_window; keep the highest."""
    peaks = []
    cluster: list[int] = []
    for idx in candidates:
        if cluster and taus[idx] - taus[cluster[-1]] > merge_window:
            peaks.append(max(cluster, key=lambda j: values[j]))
            cluster = []
        cluster.append(idx)
    if cluster:
        peaks.append(max(cluster, key=lambda j: values[j]))
    return peaks


def _zero_crossings(taus, values, center, half_width=ZERO_CROSS_HALF_WIDTH):
    """Transitions across the zero level (value < ZERO_LEVEL) near a peak."""
    sel = np.abs(taus - center) <= half_width
    v = values[sel]
    v = v[~np.isnan(v)]
    if len(v) < 2:
        return 0
    at_zero = v < ZERO_LEVEL
    return int(np.sum(at_zero[1:] != at_zero[:-1]))


def detect_peaks(
    series: ConcurrenceSeries, column: str, threshold: float = 0.05
) -> PeakReport:
    """Locate revival peaks in one concurrence column and grade them.

    Local maxima above `threshold` are merged within a window pi*alpha/2
    (one revival cluster registers as one peak), paired with the nearest
    predicted centre 2 pi k alpha, and annotated with zero-level crossing
    counts of every available method near the peak.  Collapse windows
    are the middle halves of the intervals between consecutive detected
    centres.
    """
    values = series.column(column)
    taus = series.tau
    if np.all(np.isnan(values)):
        raise ValueError(f"column {column!r} was not computed in this scan")
    alpha = float(series.metadata.get("alpha", 0.0))
    merge_window = max(np.pi * alpha / 2.0, 1.0)

    n = len(values)
    candidates = [
        i
        for i in range(n)
        if not np.isnan(values[i])
        and values[i] > threshold
        and (i == 0 or np.isnan(values[i - 1]) or values[i] >= values[i - 1])
        and (i == n - 1 or np.isnan(values[i + 1]) or values[i] >= values[i + 1])
    ]
    peak_idx = _cluster_maxima(taus, values, candidates, merge_window)

    method_cols = [c for c in ("C_exact", "C_xproj", "C_series", "C_analytic") if not np.all(np.isnan(series.column(c)))]
    peaks = []
    for idx in peak_idx:
        center = float(taus[idx])
        height = float(values[idx])
        if alpha > 0:
            k = int(round(center / (2.0 * np.pi * alpha)))
        else:
            k = 0
        if k >= 1:
            pred_center = revival_center(k, alpha)
            pred = peak_height(k, alpha)
            pred_height = pred.value
            center_error = center - pred_center
            height_rel_error = (
                (height - pred_height) / pred_height if pred_height > 0 else None
            )
        else:
            pred_center = pred_height = center_error = height_rel_error = None
        crossings = {
            c: _zero_crossings(taus, series.column(c), center) for c in method_cols
        }
        peaks.append(
            PeakInfo(
                k=k,
                center=center,
                height=height,
                predicted_center=pred_center,
                predicted_height=pred_height,
                center_error=center_error,
                height_rel_error=height_rel_error,
                zero_crossings=crossings,
            )
        )

    windows = []
    centers = [p.center for p in peaks]
    for lo_c, hi_c in zip(centers, centers[1:]):
        span = hi_c - lo_c
        lo, hi = lo_c + 0.25 * span, lo_c + 0.75 * span
        sel = (taus >= lo) & (taus <= hi) & ~np.isnan(values)
        max_val = float(np.max(values[sel])) if np.any(sel) else 0.0
        windows.append(CollapseWindow(tau_lo=lo, tau_hi=hi, max_value=max_val))

    return PeakReport(
        column=column,
        threshold=threshold,
        alpha=alpha,
        peaks=peaks,
        collapse_windows=windows,
    )
