"""Typed errors raised across the climbtrace package.

Degenerate inputs raise rather than returning sentinel values, so a caller
can never mistake 0.0 for "perfectly smooth".
"""


class ClimbtraceError(Exception):
    """Base class for all climbtrace errors."""


# --- metric kernel ---

class EmptySeries(ClimbtraceError):
    """A statistic was requested over a series with no samples."""


class DegenerateSeries(ClimbtraceError):
    """Too few samples, or zero variance where a nonzero denominator is needed."""


# --- ingestion ---

class NonFiniteInput(ClimbtraceError):
    """An accelerometer component was NaN or infinite."""


class TooFewSamples(ClimbtraceError):
    """Resampling needs at least two raw samples."""


class NonMonotonicTimestamps(ClimbtraceError):
    """Raw timestamps must be strictly increasing."""


class MalformedRow(ClimbtraceError):
    """A CSV data row could not be parsed."""

    def __init__(self, line_number: int, reason: str = ""):
        self.line_number = line_number
        self.reason = reason
        detail = f": {reason}" if reason else ""
        super().__init__(f"malformed row at line {line_number}{detail}")


class UnknownHeader(ClimbtraceError):
    """The CSV header matched neither supported column layout."""


# --- store ---

class StorageWriteFailure(ClimbtraceError):
    """A climb file could not be written or removed."""


class StorageReadFailure(ClimbtraceError):
    """The storage directory could not be read."""


class MalformedClimbFile(ClimbtraceError):
    """Climb JSON was truncated, ill-typed, or missing required fields."""


class UnsupportedSchemaVersion(ClimbtraceError):
    """Climb JSON declared a schema_version this build does not read."""

    def __init__(self, version):
        self.version = version
        super().__init__(f"unsupported climb schema_version: {version!r}")


class UnknownClimb(ClimbtraceError):
    """No stored climb has the given id."""

    def __init__(self, climb_id: str):
        self.climb_id = climb_id
        super().__init__(f"unknown climb: {climb_id}")


class CutOutOfRange(ClimbtraceError):
    """Crop time must lie strictly inside (0, duration)."""


class EmptyTitle(ClimbtraceError):
    """Climb titles must be non-empty after trimming whitespace."""


# --- graph output ---

class EmptyTrace(ClimbtraceError):
    """Graph layout needs at least one sample."""
