"""Persistent climb store: one JSON file per climb plus an in-memory cache.

Cache discipline, learned the hard way in the field: updating the cache is
tightly coupled to every disk write and decoupled from loading; duplicates
are checked by id before anything is added; an empty cache populates itself
from storage on first query. After every operation the cache mirrors the
directory exactly.

Climb identity is content-derived (recorded_at_ms + magnitudes), so imports
dedupe deterministically and cropping legitimately produces a new identity.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import struct
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path

from .errors import (
    CutOutOfRange,
    EmptyTitle,
    MalformedClimbFile,
    StorageReadFailure,
    StorageWriteFailure,
    UnknownClimb,
    UnsupportedSchemaVersion,
)
from .ingest import ClimbTrace, truncate_trace
from .metrics import MagnitudeSeries
from .videosync import DEFAULT_FPS, VideoLink

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ClimbRecord:
    """One stored climb: the unit of persistence and sharing."""

    id: str
    title: str
    recorded_at_ms: int
    trace: ClimbTrace
    video: VideoLink | None = None
    crop_history: int = 0


def climb_id(recorded_at_ms: int, magnitudes: tuple[float, ...]) -> str:
    """Content-derived identity; stable under title edits and video links."""
    h = hashlib.sha256()
    h.update(str(int(recorded_at_ms)).encode("ascii"))
    h.update(b"|")
    h.update(struct.pack(f"<{len(magnitudes)}d", *magnitudes))
    return h.hexdigest()


def default_title(recorded_at_ms: int) -> str:
    """Fallback title: the recording timestamp, formatted (UTC)."""
    stamp = datetime.fromtimestamp(recorded_at_ms / 1000.0, tz=timezone.utc)
    return stamp.strftime("Climb %Y-%m-%d %H:%M:%S")


def new_record(trace: ClimbTrace, title: str | None = None) -> ClimbRecord:
    """Build a record for a freshly resampled trace."""
    clean = (title or "").strip()
    return ClimbRecord(
        id=climb_id(trace.start_epoch_ms, trace.magnitudes.values),
        title=clean or default_title(trace.start_epoch_ms),
        recorded_at_ms=trace.start_epoch_ms,
        trace=trace,
    )


def serialize_record(record: ClimbRecord) -> bytes:
    """Canonical climb-file JSON: sorted keys, compact, UTF-8."""
    video = None
    if record.video is not None:
        video = {
            "filename": record.video.filename,
            "offset_ms": record.video.offset_ms,
            "fps": record.video.fps,
        }
    doc = {
        "schema_version": SCHEMA_VERSION,
        "title": record.title,
        "recorded_at_ms": record.recorded_at_ms,
        "sample_rate_hz": record.trace.sample_rate,
        "magnitudes": list(record.trace.magnitudes.values),
        "gap_flags": [[s, e] for s, e in record.trace.gap_flags],
        "video": video,
        "crop_history": record.crop_history,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def deserialize_record(data: bytes) -> ClimbRecord:
    """Parse climb-file JSON; the id is recomputed from content, never trusted."""
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedClimbFile(f"unparseable climb file: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedClimbFile("climb file must hold a JSON object")

    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise UnsupportedSchemaVersion(version)

    try:
        title = doc["title"]
        recorded_at_ms = doc["recorded_at_ms"]
        sample_rate = doc["sample_rate_hz"]
        magnitudes = doc["magnitudes"]
        gap_flags = doc.get("gap_flags", [])
        video_doc = doc.get("video")
        crop_history = doc.get("crop_history", 0)
    except KeyError as exc:
        raise MalformedClimbFile(f"missing field {exc.args[0]!r}") from exc

    if not isinstance(title, str) or not title.strip():
        raise MalformedClimbFile("title must be a non-empty string")
    if not isinstance(recorded_at_ms, int) or isinstance(recorded_at_ms, bool):
        raise MalformedClimbFile("recorded_at_ms must be an integer")
    if not isinstance(sample_rate, int) or sample_rate <= 0:
        raise MalformedClimbFile("sample_rate_hz must be a positive integer")
    if not isinstance(magnitudes, list) or not all(
        isinstance(m, (int, float)) and not isinstance(m, bool) and math.isfinite(m) and m >= 0
        for m in magnitudes
    ):
        raise MalformedClimbFile("magnitudes must be finite non-negative numbers")
    if not isinstance(crop_history, int) or crop_history < 0:
        raise MalformedClimbFile("crop_history must be a non-negative integer")

    flags = []
    for pair in gap_flags:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and math.isfinite(x) for x in pair)
            or not pair[0] < pair[1]
        ):
            raise MalformedClimbFile(f"bad gap flag: {pair!r}")
        flags.append((float(pair[0]), float(pair[1])))

    video = None
    if video_doc is not None:
        if not isinstance(video_doc, dict) or not isinstance(video_doc.get("filename"), str):
            raise MalformedClimbFile("video must be null or an object with a filename")
        offset = video_doc.get("offset_ms", 0)
        fps = video_doc.get("fps", DEFAULT_FPS)
        if not isinstance(offset, int) or isinstance(offset, bool):
            raise MalformedClimbFile("video offset_ms must be an integer")
        if not isinstance(fps, (int, float)) or isinstance(fps, bool) or not fps > 0:
            raise MalformedClimbFile("video fps must be positive")
        video = VideoLink(filename=video_doc["filename"], offset_ms=offset, fps=float(fps))

    values = tuple(float(m) for m in magnitudes)
    trace = ClimbTrace(
        magnitudes=MagnitudeSeries(values, sample_rate),
        start_epoch_ms=recorded_at_ms,
        gap_flags=tuple(flags),
    )
    return ClimbRecord(
        id=climb_id(recorded_at_ms, values),
        title=title,
        recorded_at_ms=recorded_at_ms,
        trace=trace,
        video=video,
        crop_history=crop_history,
    )


def record_filename(record: ClimbRecord) -> str:
    return f"climb_{record.recorded_at_ms}_{record.id[:8]}.json"


class ClimbStore:
    """Single-writer, multi-reader store over one directory of climb files."""

    def __init__(self, storage_dir: str | Path):
        self.storage_dir = Path(storage_dir)
        self.storage_dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()
        self._cache: dict[str, ClimbRecord] | None = None
        self.skipped: list[tuple[str, str]] = []

    # -- queries ---------------------------------------------------------

    def list(self) -> list[ClimbRecord]:
        """All climbs, newest first."""
        with self._lock:
            self._ensure_cache()
            return self._ordered()

    def get(self, climb_id_: str) -> ClimbRecord:
        with self._lock:
            self._ensure_cache()
            record = self._cache.get(climb_id_)
        if record is None:
            raise UnknownClimb(climb_id_)
        return record

    def load_all(self) -> list[ClimbRecord]:
        """Re-read every climb file from disk, repopulating the cache.

        Malformed files are skipped, logged, and reported via ``skipped``;
        one corrupt share must not brick the store.
        """
        with self._lock:
            cache: dict[str, ClimbRecord] = {}
            skipped: list[tuple[str, str]] = []
            try:
                paths = sorted(self.storage_dir.glob("*.json"))
            except OSError as exc:
                raise StorageReadFailure(f"cannot read {self.storage_dir}: {exc}") from exc
            for path in paths:
                try:
                    record = deserialize_record(path.read_bytes())
                except (MalformedClimbFile, UnsupportedSchemaVersion, ValueError, OSError) as exc:
                    skipped.append((path.name, str(exc)))
                    logger.warning("skipping climb file %s: %s", path.name, exc)
                    continue
                if record.id in cache:
                    skipped.append((path.name, f"duplicate of climb {record.id[:8]}"))
                    continue
                cache[record.id] = record
            self._cache = cache
            self.skipped = skipped
            return self._ordered()

    # -- mutations -------------------------------------------------------

    def save(self, record: ClimbRecord) -> Path:
        """Write the climb file and insert-or-replace the cache entry."""
        with self._lock:
            self._ensure_cache()
            path = self._write(record)
            self._cache[record.id] = record
            return path

    def import_climb(self, data: bytes) -> ClimbRecord:
        """Load an external climb file, persist it, and cache it.

        Importing a climb that is already present is a no-op returning the
        existing record.
        """
        record = deserialize_record(data)
        with self._lock:
            self._ensure_cache()
            existing = self._cache.get(record.id)
            if existing is not None:
                return existing
            self._write(record)
            self._cache[record.id] = record
            return record

    def delete(self, climb_id_: str) -> None:
        with self._lock:
            record = self.get(climb_id_)
            try:
                (self.storage_dir / record_filename(record)).unlink(missing_ok=True)
            except OSError as exc:
                raise StorageWriteFailure(f"cannot delete climb file: {exc}") from exc
            del self._cache[climb_id_]

    def crop(self, climb_id_: str, cut_time_s: float) -> ClimbRecord:
        """Drop everything after cut_time_s; the climb gets a new identity."""
        with self._lock:
            record = self.get(climb_id_)
            duration = record.trace.duration_s
            if not 0.0 < cut_time_s < duration:
                raise CutOutOfRange(
                    f"cut at {cut_time_s}s outside (0, {duration}s)"
                )
            trace = truncate_trace(record.trace, cut_time_s)
            if len(trace) >= len(record.trace):
                raise CutOutOfRange(f"cut at {cut_time_s}s removes no samples")
            cropped = replace(
                record,
                id=climb_id(record.recorded_at_ms, trace.magnitudes.values),
                trace=trace,
                crop_history=record.crop_history + 1,
            )
            self._write(cropped)
            self._cache[cropped.id] = cropped
            try:
                (self.storage_dir / record_filename(record)).unlink(missing_ok=True)
            except OSError as exc:
                raise StorageWriteFailure(f"cannot remove pre-crop file: {exc}") from exc
            del self._cache[record.id]
            return cropped

    def rename(self, climb_id_: str, title: str) -> ClimbRecord:
        clean = title.strip()
        if not clean:
            raise EmptyTitle("climb title must be non-empty")
        with self._lock:
            record = self.get(climb_id_)
            renamed = replace(record, title=clean)
            self._write(renamed)
            self._cache[renamed.id] = renamed
            return renamed

    def export_climb(self, climb_id_: str) -> bytes:
        return serialize_record(self.get(climb_id_))

    # -- internals -------------------------------------------------------

    def _ensure_cache(self) -> None:
        if self._cache is None:
            self.load_all()

    def _ordered(self) -> list[ClimbRecord]:
        return sorted(
            self._cache.values(), key=lambda r: (-r.recorded_at_ms, r.id)
        )

    def _write(self, record: ClimbRecord) -> Path:
        path = self.storage_dir / record_filename(record)
        tmp = path.with_suffix(".json.tmp")
        try:
            tmp.write_bytes(serialize_record(record))
            tmp.replace(path)
        except OSError as exc:
            raise StorageWriteFailure(f"cannot write {path.name}: {exc}") from exc
        return path
