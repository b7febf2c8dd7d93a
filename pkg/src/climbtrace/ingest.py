"""Raw accelerometer log parsing, magnitude collapse, and 20 Hz resampling.

Raw logs arrive at whatever rate the phone managed (typically 4-6 ms apart,
with stalls up to half a second during violent moves). Everything downstream
works on a uniform 20 samples-per-second magnitude trace, so the resampler
is the one place irregular timing is dealt with.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    MalformedRow,
    NonFiniteInput,
    NonMonotonicTimestamps,
    TooFewSamples,
    UnknownHeader,
)
from .metrics import DEFAULT_SAMPLE_RATE_HZ, MagnitudeSeries

# Raw inter-sample gaps above this are flagged on the resampled trace.
GAP_FLAG_THRESHOLD_S = 0.25

_AXES_HEADER = ("t", "ax", "ay", "az")
_MAG_HEADER = ("t", "mag")


@dataclass(frozen=True)
class RawSampleLog:
    """Irregularly-timed magnitude samples, as captured."""

    times_s: tuple[float, ...]
    magnitudes: tuple[float, ...]
    source_epoch_ms: int = 0

    def __post_init__(self):
        object.__setattr__(self, "times_s", tuple(float(t) for t in self.times_s))
        object.__setattr__(self, "magnitudes", tuple(float(m) for m in self.magnitudes))
        if len(self.times_s) != len(self.magnitudes):
            raise ValueError("times and magnitudes must have equal length")

    def __len__(self) -> int:
        return len(self.times_s)


@dataclass(frozen=True)
class ClimbTrace:
    """Uniform 20 Hz magnitude trace.

    Sample spacing is exactly 1/sample_rate by construction: samples are
    indexed, never individually timestamped, so the grid cannot drift.
    ``gap_flags`` marks stretches where the raw recording had stalled.
    """

    magnitudes: MagnitudeSeries
    start_epoch_ms: int = 0
    gap_flags: tuple[tuple[float, float], ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.magnitudes)

    @property
    def sample_rate(self) -> int:
        return self.magnitudes.sample_rate

    @property
    def duration_s(self) -> float:
        return (len(self) - 1) / self.sample_rate if len(self) else 0.0

    def sample_times_ms(self) -> list[int]:
        """Grid times in integer milliseconds (exact, e.g. 0, 50, 100 ...)."""
        step = 1000 // self.sample_rate
        return [i * step for i in range(len(self))]

    def sample_times_s(self) -> list[float]:
        return [i / self.sample_rate for i in range(len(self))]


def magnitude(ax: float, ay: float, az: float) -> float:
    """Euclidean norm of the three axes; orientation-independent."""
    for c in (ax, ay, az):
        if not math.isfinite(c):
            raise NonFiniteInput(f"non-finite accelerometer component: {c!r}")
    return math.sqrt(ax * ax + ay * ay + az * az)


def resample(log: RawSampleLog, sample_rate: int = DEFAULT_SAMPLE_RATE_HZ) -> ClimbTrace:
    """Linearly interpolate a raw log onto the fixed grid t = 0, 1/rate, 2/rate ...

    The grid stops at the last raw timestamp (no extrapolated points). Raw
    gaps wider than GAP_FLAG_THRESHOLD_S end up in ``gap_flags`` rather than
    rejecting the log: real session recordings contained such stalls and were
    still worth keeping.
    """
    if len(log) < 2:
        raise TooFewSamples("resampling needs at least two raw samples")
    times = np.asarray(log.times_s, dtype=np.float64)
    if not np.all(times[1:] > times[:-1]):
        raise NonMonotonicTimestamps("raw timestamps must be strictly increasing")

    last_t = float(times[-1])
    count = int(math.floor(last_t * sample_rate + 1e-9)) + 1
    grid = np.arange(count, dtype=np.float64) / sample_rate
    values = np.interp(grid, times, np.asarray(log.magnitudes, dtype=np.float64))
    # Interpolation can't dip below zero between non-negative samples, but
    # clamp float dust anyway so the series invariant holds.
    values = np.maximum(values, 0.0)

    duration = (count - 1) / sample_rate
    flags = []
    gaps = times[1:] - times[:-1]
    for i in np.nonzero(gaps > GAP_FLAG_THRESHOLD_S)[0]:
        start = max(0.0, float(times[i]))
        end = min(duration, float(times[i + 1]))
        if start < end:
            flags.append((start, end))

    return ClimbTrace(
        magnitudes=MagnitudeSeries(tuple(values.tolist()), sample_rate),
        start_epoch_ms=log.source_epoch_ms,
        gap_flags=tuple(flags),
    )


def parse_csv(data: bytes, source_epoch_ms: int = 0) -> RawSampleLog:
    """Parse a raw accelerometer CSV into a log.

    Two layouts are accepted, distinguished by the header row:
    ``t,ax,ay,az`` (per-axis, collapsed to magnitude here) or ``t,mag``
    (pre-collapsed). Times are seconds since log start.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise UnknownHeader("CSV is not UTF-8 text") from exc

    lines = text.splitlines()
    header_idx = next((i for i, line in enumerate(lines) if line.strip()), None)
    if header_idx is None:
        raise UnknownHeader("empty CSV")
    header = tuple(c.strip().lower() for c in lines[header_idx].split(","))
    if header == _AXES_HEADER:
        per_axis = True
    elif header == _MAG_HEADER:
        per_axis = False
    else:
        raise UnknownHeader(f"unrecognised CSV header: {lines[header_idx]!r}")

    times: list[float] = []
    mags: list[float] = []
    for offset, line in enumerate(lines[header_idx + 1:], start=header_idx + 2):
        if not line.strip():
            continue
        fields = [c.strip() for c in line.split(",")]
        if len(fields) != len(header):
            raise MalformedRow(offset, f"expected {len(header)} fields, got {len(fields)}")
        try:
            numbers = [float(c) for c in fields]
        except ValueError:
            raise MalformedRow(offset, f"non-numeric field in {line!r}") from None
        if not all(math.isfinite(x) for x in numbers):
            raise MalformedRow(offset, "non-finite value")
        times.append(numbers[0])
        if per_axis:
            mags.append(magnitude(numbers[1], numbers[2], numbers[3]))
        else:
            if numbers[1] < 0:
                raise MalformedRow(offset, "negative magnitude")
            mags.append(numbers[1])

    return RawSampleLog(tuple(times), tuple(mags), source_epoch_ms)


def trim_lead(log: RawSampleLog, seconds: float) -> RawSampleLog:
    """Drop raw samples before ``seconds`` and rebase times to the cut.

    Desk-scale stand-in for the recording countdown: pocket-stuffing noise
    at the start of a log gets removed before resampling.
    """
    if seconds <= 0:
        return log
    kept = [(t - seconds, m) for t, m in zip(log.times_s, log.magnitudes) if t >= seconds]
    return RawSampleLog(
        tuple(t for t, _ in kept),
        tuple(m for _, m in kept),
        log.source_epoch_ms,
    )


def truncate_trace(trace: ClimbTrace, cut_time_s: float) -> ClimbTrace:
    """Keep only samples at t <= cut_time_s; gap flags are clipped to match.

    Idempotent: truncating at or beyond the current duration returns an
    equivalent trace.
    """
    rate = trace.sample_rate
    keep = min(len(trace), int(math.floor(cut_time_s * rate + 1e-9)) + 1)
    keep = max(keep, 0)
    values = trace.magnitudes.values[:keep]
    duration = (keep - 1) / rate if keep else 0.0
    flags = tuple(
        (start, min(end, duration))
        for start, end in trace.gap_flags
        if start < duration
    )
    return ClimbTrace(
        magnitudes=MagnitudeSeries(values, rate),
        start_epoch_ms=trace.start_epoch_ms,
        gap_flags=flags,
    )


# Synthetic climbs: spike decay constant and raw sampling cadence.
_SPIKE_TAU_S = 0.08
_SPIKE_HORIZON_S = 1.0
_RAW_STEP_RANGE_S = (0.004, 0.006)


def synth_climb(
    duration_s: float,
    jerk_rate: float,
    jerk_amplitude: float,
    seed: int,
    source_epoch_ms: int = 0,
) -> RawSampleLog:
    """Deterministic synthetic climb log for tests and demos.

    Baseline 1 g with low-amplitude Gaussian noise, plus Poisson-timed
    decaying spikes of the given amplitude. Higher ``jerk_rate`` (events per
    second) models more dynamic climbing. The noise stream depends only on
    the seed, so seed-matched comparisons across jerk rates isolate the
    effect of the spikes.
    """
    if duration_s <= 0:
        raise ValueError("duration must be positive")
    if jerk_rate < 0:
        raise ValueError("jerk_rate must be >= 0")

    noise_rng = random.Random(seed)
    event_rng = random.Random((seed << 16) ^ 0x5EED_CA1B)

    events: list[float] = []
    if jerk_rate > 0:
        t = event_rng.expovariate(jerk_rate)
        while t < duration_s:
            events.append(t)
            t += event_rng.expovariate(jerk_rate)

    times: list[float] = []
    mags: list[float] = []
    t = 0.0
    next_event = 0  # index of the first event that can still influence t
    while t <= duration_s:
        value = 1.0 + noise_rng.gauss(0.0, 0.02)
        while next_event < len(events) and events[next_event] <= t - _SPIKE_HORIZON_S:
            next_event += 1
        for tau in events[next_event:]:
            if tau > t:
                break
            value += jerk_amplitude * math.exp(-(t - tau) / _SPIKE_TAU_S)
        times.append(t)
        mags.append(max(0.0, value))
        t += noise_rng.uniform(*_RAW_STEP_RANGE_S)

    return RawSampleLog(tuple(times), tuple(mags), source_epoch_ms)
