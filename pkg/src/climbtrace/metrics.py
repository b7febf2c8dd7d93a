"""Numerical kernel: statistics and smoothness scores over magnitude series.

All functions are pure and operate on an immutable :class:`MagnitudeSeries`.
Values are acceleration magnitudes in multiples of g; a phone at rest reads
about 1.0. Lower variance means a smoother climb.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSeries, EmptySeries

DEFAULT_SAMPLE_RATE_HZ = 20

_STYLES = ("static", "hybrid", "dynamic")


@dataclass(frozen=True)
class MagnitudeSeries:
    """Uniform-rate acceleration-magnitude values (multiples of g)."""

    values: tuple[float, ...]
    sample_rate: int = DEFAULT_SAMPLE_RATE_HZ

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")
        for v in self.values:
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"magnitudes must be finite and >= 0, got {v!r}")

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


@dataclass(frozen=True)
class SmoothnessReport:
    """Everything the review surfaces show for one climb.

    ``lag1_autocorr`` is None when undefined (constant trace). The display
    score is the variance scaled by 100 and rounded to an integer, which
    testers found far easier to compare than raw values like 0.21234.
    """

    mean: float
    variance: float
    mean_sq_diff: float
    lag1_autocorr: float | None
    display_score: int
    min: float
    max: float
    duration: float
    per_second_scores: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def as_dict(self) -> dict:
        """JSON-ready dict; the CLI and the HTTP service both emit this."""
        return {
            "mean": self.mean,
            "variance": self.variance,
            "mean_sq_diff": self.mean_sq_diff,
            "lag1_autocorr": self.lag1_autocorr,
            "display_score": self.display_score,
            "min": self.min,
            "max": self.max,
            "duration": self.duration,
            "per_second_scores": [[i, s] for i, s in self.per_second_scores],
        }


def mean(series: MagnitudeSeries) -> float:
    """Arithmetic mean of the series."""
    n = len(series)
    if n == 0:
        raise EmptySeries("mean needs at least one sample")
    return float(np.sum(series.as_array()) / n)


def variance(series: MagnitudeSeries) -> float:
    """Sample variance with the N-1 divisor.

    This is the smoothness score's backbone: the only candidate metric that
    reliably ordered static < hybrid < dynamic on every test route.
    """
    n = len(series)
    if n < 2:
        raise DegenerateSeries("variance needs at least two samples")
    a = series.as_array()
    d = a - (np.sum(a) / n)
    return float(np.sum(d * d) / (n - 1))


def mean_sq_diff(series: MagnitudeSeries) -> float:
    """Sum of squared consecutive differences, divided by N.

    Approximates mean squared jerk. The divisor is N (not N-1) even though
    the sum has N-1 terms; the ordering comparisons are insensitive to the
    constant factor.
    """
    n = len(series)
    if n < 2:
        raise DegenerateSeries("mean_sq_diff needs at least two samples")
    a = series.as_array()
    d = a[1:] - a[:-1]
    return float(np.sum(d * d) / n)


def lag_autocorr(series: MagnitudeSeries, k: int = 1) -> float:
    """Lag-k autocorrelation coefficient.

    Numerator pairs each sample with the one k steps later; the denominator
    is the full sum of squared deviations. Raises for constant series (zero
    denominator) and for series no longer than k.
    """
    if k < 1:
        raise ValueError("lag k must be a positive integer")
    n = len(series)
    if n <= k:
        raise DegenerateSeries(f"lag-{k} autocorrelation needs more than {k} samples")
    a = series.as_array()
    d = a - (np.sum(a) / n)
    den = float(np.sum(d * d))
    if den == 0.0 or np.all(a == a[0]):
        raise DegenerateSeries("autocorrelation is undefined for a constant series")
    num = float(np.sum(d[:-k] * d[k:]))
    return num / den


def display_score(variance_value: float) -> int:
    """Variance scaled by 100 and rounded half away from zero."""
    scaled = variance_value * 100.0
    return int(math.floor(scaled + 0.5)) if scaled >= 0 else -int(math.floor(-scaled + 0.5))


def basic_stats(series: MagnitudeSeries) -> tuple[float, float, float]:
    """(min, max, duration in seconds) of the series."""
    n = len(series)
    if n == 0:
        raise EmptySeries("basic_stats needs at least one sample")
    a = series.as_array()
    duration = (n - 1) / series.sample_rate
    return float(np.min(a)), float(np.max(a)), duration


def per_second_scores(series: MagnitudeSeries) -> list[tuple[int, int]]:
    """Smoothness score per consecutive one-second window.

    Windows hold ``sample_rate`` samples each. A trailing partial window is
    kept iff it covers at least half a second; shorter tails are dropped.
    """
    n = len(series)
    if n < 2:
        raise DegenerateSeries("per-second scores need at least two samples")
    rate = series.sample_rate
    scores: list[tuple[int, int]] = []
    for index, start in enumerate(range(0, n, rate)):
        window = series.values[start:start + rate]
        if len(window) < rate and 2 * len(window) < rate:
            break
        scores.append((index, display_score(variance(MagnitudeSeries(window, rate)))))
    return scores


def metric_style_ordering(rows: list[tuple[str, str, float]]) -> bool:
    """True iff the metric separates styles on every route.

    Within each route, every static value must fall below every hybrid value,
    and every hybrid below every dynamic; comparisons only happen between
    styles actually present on the route.
    """
    return not style_ordering_violations(rows)


def style_ordering_violations(
    rows: list[tuple[str, str, float]],
) -> list[tuple[str, str, str, float, float]]:
    """Violating pairs as (route, lower_style, higher_style, low_value, high_value).

    A violation means some value of the supposedly-calmer style is >= some
    value of the more dynamic style on the same route.
    """
    by_route: dict[str, dict[str, list[float]]] = {}
    for route, style, value in rows:
        if style not in _STYLES:
            raise ValueError(f"unknown climbing style: {style!r}")
        by_route.setdefault(route, {}).setdefault(style, []).append(float(value))

    violations = []
    for route, styles in by_route.items():
        for i, lo_style in enumerate(_STYLES):
            for hi_style in _STYLES[i + 1:]:
                if lo_style not in styles or hi_style not in styles:
                    continue
                worst_lo = max(styles[lo_style])
                best_hi = min(styles[hi_style])
                if not worst_lo < best_hi:
                    violations.append((route, lo_style, hi_style, worst_lo, best_hi))
    return violations


def report(series: MagnitudeSeries) -> SmoothnessReport:
    """Assemble the full smoothness report for a trace (needs >= 2 samples)."""
    if len(series) < 2:
        raise DegenerateSeries("a smoothness report needs at least two samples")
    lo, hi, duration = basic_stats(series)
    var = variance(series)
    try:
        autocorr = lag_autocorr(series, 1)
    except DegenerateSeries:
        autocorr = None
    return SmoothnessReport(
        mean=mean(series),
        variance=var,
        mean_sq_diff=mean_sq_diff(series),
        lag1_autocorr=autocorr,
        display_score=display_score(var),
        min=lo,
        max=hi,
        duration=duration,
        per_second_scores=tuple(per_second_scores(series)),
    )
