"""Trace-to-video alignment: filename timestamps, offsets, frame mapping.

The offset convention is climb minus video: a positive offset means the
video started first, so trace t=0 sits that many milliseconds into the
video. Video bytes are never parsed here; only names and timing math.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .store import ClimbRecord, ClimbStore

_EPOCH_RUN = re.compile(r"\d+")
_EPOCH_DIGITS = 13  # millisecond epochs are 13 digits wide for 2001-2286

DEFAULT_FPS = 30.0


@dataclass(frozen=True)
class VideoLink:
    """A video file name plus the timing needed to scrub it from the trace."""

    filename: str
    offset_ms: int = 0
    fps: float = DEFAULT_FPS

    def __post_init__(self):
        if self.fps <= 0:
            raise ValueError("fps must be positive")


def parse_filename_epoch(filename: str) -> int | None:
    """Millisecond epoch embedded in a filename, or None.

    Recordings write the start time as a 13-digit run into the name, which
    messaging-app transcodes usually leave alone even though they strip all
    container metadata. The first run of exactly 13 digits wins.
    """
    for run in _EPOCH_RUN.finditer(filename):
        if len(run.group()) == _EPOCH_DIGITS:
            return int(run.group())
    return None


def auto_offset(video_epoch_ms: int, climb_recorded_at_ms: int) -> int:
    """Offset (climb minus video) so trace t=0 maps into the video."""
    return climb_recorded_at_ms - video_epoch_ms


def frame_for_time(t: float, link: VideoLink, last_frame: int | None = None) -> int:
    """Video frame index for trace time t, clamped to the valid range."""
    frame = math.floor((t + link.offset_ms / 1000.0) * link.fps)
    frame = max(0, frame)
    if last_frame is not None:
        frame = min(frame, last_frame)
    return frame


def attach_video(
    store: "ClimbStore",
    climb_id: str,
    filename: str,
    fps: float = DEFAULT_FPS,
    explicit_offset_ms: int | None = None,
) -> "ClimbRecord":
    """Link a video file to a stored climb and persist the updated record.

    Offset precedence: an explicit value wins; otherwise the filename's
    embedded epoch drives auto_offset; otherwise 0.
    """
    record = store.get(climb_id)
    if explicit_offset_ms is not None:
        offset = explicit_offset_ms
    else:
        epoch = parse_filename_epoch(filename)
        offset = auto_offset(epoch, record.recorded_at_ms) if epoch is not None else 0
    link = VideoLink(filename=filename, offset_ms=offset, fps=fps)
    updated = replace(record, video=link)
    store.save(updated)
    return updated
