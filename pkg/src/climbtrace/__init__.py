"""climbtrace: climbing-session analytics over phone accelerometer logs."""

from .errors import ClimbtraceError
from .graphout import GraphSpec, layout, render_svg, shade
from .ingest import (
    ClimbTrace,
    RawSampleLog,
    magnitude,
    parse_csv,
    resample,
    synth_climb,
    trim_lead,
    truncate_trace,
)
from .metrics import (
    MagnitudeSeries,
    SmoothnessReport,
    basic_stats,
    display_score,
    lag_autocorr,
    mean,
    mean_sq_diff,
    metric_style_ordering,
    per_second_scores,
    report,
    variance,
)
from .store import ClimbRecord, ClimbStore, climb_id, new_record
from .videosync import VideoLink, attach_video, auto_offset, frame_for_time, parse_filename_epoch

__version__ = "0.1.0"

__all__ = [
    "ClimbtraceError",
    "ClimbRecord",
    "ClimbStore",
    "ClimbTrace",
    "GraphSpec",
    "MagnitudeSeries",
    "RawSampleLog",
    "SmoothnessReport",
    "VideoLink",
    "attach_video",
    "auto_offset",
    "basic_stats",
    "climb_id",
    "display_score",
    "frame_for_time",
    "lag_autocorr",
    "layout",
    "magnitude",
    "mean",
    "mean_sq_diff",
    "metric_style_ordering",
    "new_record",
    "parse_csv",
    "parse_filename_epoch",
    "per_second_scores",
    "render_svg",
    "report",
    "resample",
    "shade",
    "synth_climb",
    "trim_lead",
    "truncate_trace",
    "variance",
    "__version__",
]
