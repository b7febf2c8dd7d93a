"""Command-line front door: ingest, inspect, edit, export, and serve climbs.

Storage directory resolution: --dir flag, then the CLIMBTRACE_DIR environment
variable, then ./climbs. Diagnostics go to stderr, data to stdout; exit code
0 means the operation succeeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from . import videosync
from .errors import ClimbtraceError, UnknownClimb
from .graphout import DETAIL, THUMBNAIL, layout, render_svg
from .ingest import parse_csv, resample, trim_lead
from .reporting import climb_detail, climb_summary
from .store import ClimbStore, new_record

DEFAULT_DIR = "./climbs"
ENV_DIR = "CLIMBTRACE_DIR"


def _storage_dir(args) -> Path:
    if args.dir:
        return Path(args.dir)
    return Path(os.environ.get(ENV_DIR) or DEFAULT_DIR)


def _resolve_id(store: ClimbStore, prefix: str) -> str:
    """Accept a full id or any unambiguous prefix of one."""
    matches = [r.id for r in store.list() if r.id.startswith(prefix)]
    if not matches:
        raise UnknownClimb(prefix)
    if len(matches) > 1:
        raise UnknownClimb(f"{prefix} (ambiguous: {len(matches)} climbs match)")
    return matches[0]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _date(recorded_at_ms: int) -> str:
    stamp = datetime.fromtimestamp(recorded_at_ms / 1000.0, tz=timezone.utc)
    return stamp.strftime("%Y-%m-%d %H:%M:%S")


def cmd_ingest(args, store: ClimbStore) -> int:
    data = Path(args.csv).read_bytes()
    recorded_at = args.recorded_at_ms if args.recorded_at_ms is not None else int(time.time() * 1000)
    log = parse_csv(data, source_epoch_ms=recorded_at)
    if args.trim_lead > 0:
        log = trim_lead(log, args.trim_lead)
    record = new_record(resample(log), title=args.title)
    store.save(record)
    summary = climb_summary(record)
    if args.json:
        _emit(summary)
    else:
        print(f"id: {record.id}")
        print(f"time elapsed: {summary['duration']:.2f} s")
        print(f"smoothness score: {summary['display_score']}")
    return 0


def cmd_list(args, store: ClimbStore) -> int:
    records = store.list()
    if args.json:
        _emit([climb_summary(r) for r in records])
        return 0
    print(f"{'id':<8}  {'date':<19}  {'duration':>8}  {'score':>5}  title")
    for r in records:
        s = climb_summary(r)
        score = "-" if s["display_score"] is None else s["display_score"]
        print(
            f"{r.id[:8]}  {_date(r.recorded_at_ms):<19}  "
            f"{s['duration']:>7.2f}s  {score:>5}  {r.title}"
        )
    return 0


def cmd_analyze(args, store: ClimbStore) -> int:
    record = store.get(_resolve_id(store, args.id))
    detail = climb_detail(record)
    if args.json:
        _emit(detail)
        return 0
    rep = detail["report"]
    print(f"id:        {record.id}")
    print(f"title:     {record.title}")
    print(f"recorded:  {_date(record.recorded_at_ms)}")
    print(f"duration:  {rep['duration']:.2f} s")
    print(f"min/max:   {rep['min']:.4f} / {rep['max']:.4f} g")
    print(f"mean:      {rep['mean']:.4f} g")
    print(f"variance:  {rep['variance']:.6f} g^2")
    print(f"mean sq diff: {rep['mean_sq_diff']:.6f} g^2")
    autocorr = rep["lag1_autocorr"]
    print(f"lag-1 autocorr: {'-' if autocorr is None else f'{autocorr:.4f}'}")
    print(f"smoothness score: {rep['display_score']}")
    windows = " ".join(f"{i}:{s}" for i, s in rep["per_second_scores"])
    print(f"per-second scores: {windows}")
    return 0


def cmd_crop(args, store: ClimbStore) -> int:
    record = store.crop(_resolve_id(store, args.id), args.at)
    summary = climb_summary(record)
    if args.json:
        _emit(summary)
    else:
        print(f"cropped; new id: {record.id}")
        print(f"duration: {summary['duration']:.2f} s, score: {summary['display_score']}")
    return 0


def cmd_rename(args, store: ClimbStore) -> int:
    record = store.rename(_resolve_id(store, args.id), args.title)
    if args.json:
        _emit(climb_summary(record))
    else:
        print(f"renamed {record.id[:8]} to {record.title!r}")
    return 0


def cmd_delete(args, store: ClimbStore) -> int:
    climb_id = _resolve_id(store, args.id)
    store.delete(climb_id)
    print(f"deleted {climb_id[:8]}")
    return 0


def cmd_attach_video(args, store: ClimbStore) -> int:
    record = videosync.attach_video(
        store,
        _resolve_id(store, args.id),
        args.file,
        fps=args.fps,
        explicit_offset_ms=args.offset_ms,
    )
    if args.json:
        _emit(
            {
                "id": record.id,
                "filename": record.video.filename,
                "offset_ms": record.video.offset_ms,
                "fps": record.video.fps,
            }
        )
    else:
        print(f"attached {record.video.filename} (offset {record.video.offset_ms} ms)")
    return 0


def cmd_export(args, store: ClimbStore) -> int:
    data = store.export_climb(_resolve_id(store, args.id))
    if args.out:
        Path(args.out).write_bytes(data)
        print(f"exported to {args.out}", file=sys.stderr)
    else:
        sys.stdout.buffer.write(data + b"\n")
    return 0


def cmd_import(args, store: ClimbStore) -> int:
    record = store.import_climb(Path(args.file).read_bytes())
    summary = climb_summary(record)
    if args.json:
        _emit(summary)
    else:
        print(f"imported {record.id[:8]}: {record.title}")
        print(f"time elapsed: {summary['duration']:.2f} s")
        print(f"smoothness score: {summary['display_score']}")
    return 0


def cmd_graph(args, store: ClimbStore) -> int:
    record = store.get(_resolve_id(store, args.id))
    spec = layout(
        record.trace, mode=args.mode, box_width=args.box_width, box_height=args.box_height
    )
    Path(args.out).write_bytes(render_svg(spec, score_labels=args.score_labels))
    print(f"wrote {args.out} ({spec.width}x{spec.height})", file=sys.stderr)
    return 0


def cmd_serve(args, store: ClimbStore) -> int:
    import socket

    import uvicorn

    from .service import create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, args.port))
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    finally:
        probe.close()

    app = create_app(store, ui_dir=Path(args.ui) if args.ui else None)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="climbtrace", description="Climbing-session accelerometer analytics."
    )
    parser.add_argument("--dir", help=f"storage directory (default ${ENV_DIR} or {DEFAULT_DIR})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("ingest", cmd_ingest, help="parse a raw CSV, resample, and store the climb")
    p.add_argument("csv", help="path to a t,ax,ay,az or t,mag CSV")
    p.add_argument("--title")
    p.add_argument("--recorded-at-ms", type=int, help="wall-clock start (default: now)")
    p.add_argument("--trim-lead", type=float, default=0.0, help="seconds to drop from the start")
    p.add_argument("--json", action="store_true")

    p = add("list", cmd_list, help="list stored climbs, newest first")
    p.add_argument("--json", action="store_true")

    p = add("analyze", cmd_analyze, help="full smoothness report for one climb")
    p.add_argument("id")
    p.add_argument("--json", action="store_true")

    p = add("crop", cmd_crop, help="drop everything after a cut time")
    p.add_argument("id")
    p.add_argument("--at", type=float, required=True, help="cut time in seconds")
    p.add_argument("--json", action="store_true")

    p = add("rename", cmd_rename, help="edit a climb's title")
    p.add_argument("id")
    p.add_argument("--title", required=True)
    p.add_argument("--json", action="store_true")

    p = add("delete", cmd_delete, help="remove a climb")
    p.add_argument("id")

    p = add("attach-video", cmd_attach_video, help="link a video file to a climb")
    p.add_argument("id")
    p.add_argument("--file", required=True, help="video filename within the storage directory")
    p.add_argument("--fps", type=float, default=videosync.DEFAULT_FPS)
    p.add_argument("--offset-ms", type=int, help="explicit offset; otherwise auto from filename")
    p.add_argument("--json", action="store_true")

    p = add("export", cmd_export, help="write a climb's shareable JSON")
    p.add_argument("id")
    p.add_argument("--out", help="output path (default: stdout)")

    p = add("import", cmd_import, help="import a shared climb file")
    p.add_argument("--file", required=True)
    p.add_argument("--json", action="store_true")

    p = add("graph", cmd_graph, help="render a climb graph to SVG")
    p.add_argument("id")
    p.add_argument("--mode", choices=[DETAIL, THUMBNAIL], default=DETAIL)
    p.add_argument("--box-width", type=int, default=300)
    p.add_argument("--box-height", type=int, default=150)
    p.add_argument("--score-labels", action="store_true")
    p.add_argument("--out", required=True)

    p = add("serve", cmd_serve, help="run the local review service")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", help="directory of built UI assets to serve at /")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    store = ClimbStore(_storage_dir(args))
    try:
        return args.fn(args, store)
    except ClimbtraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
