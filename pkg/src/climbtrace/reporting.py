"""Record-to-JSON views shared by the CLI and the HTTP service.

Both surfaces must report identical numbers for the same climb, so they both
go through these builders and never recompute anything themselves.
"""

from __future__ import annotations

from .errors import DegenerateSeries
from .metrics import report
from .store import ClimbRecord


def climb_summary(record: ClimbRecord) -> dict:
    """List-row view: identity plus duration and score."""
    try:
        score = report(record.trace.magnitudes).display_score
    except DegenerateSeries:
        score = None
    return {
        "id": record.id,
        "title": record.title,
        "recorded_at_ms": record.recorded_at_ms,
        "duration": record.trace.duration_s,
        "display_score": score,
    }


def climb_detail(record: ClimbRecord) -> dict:
    """Full single-climb view: record fields plus the smoothness report."""
    video = None
    if record.video is not None:
        video = {
            "filename": record.video.filename,
            "offset_ms": record.video.offset_ms,
            "fps": record.video.fps,
        }
    return {
        "id": record.id,
        "title": record.title,
        "recorded_at_ms": record.recorded_at_ms,
        "crop_history": record.crop_history,
        "gap_flags": [[s, e] for s, e in record.trace.gap_flags],
        "video": video,
        "report": report(record.trace.magnitudes).as_dict(),
    }
