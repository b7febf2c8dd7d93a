"""Local HTTP API for the review UI.

Thin plumbing over the store, metrics, graph, and video-sync modules: every
number it returns comes from the same functions the CLI uses. Meant to run
on loopback for a single person; there is no auth and no TLS.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import FileResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import videosync
from .errors import (
    CutOutOfRange,
    DegenerateSeries,
    EmptyTitle,
    MalformedClimbFile,
    UnknownClimb,
    UnsupportedSchemaVersion,
)
from .graphout import DETAIL, layout
from .reporting import climb_detail, climb_summary
from .store import ClimbStore


class CropBody(BaseModel):
    at_s: float


class TitleBody(BaseModel):
    title: str


class VideoBody(BaseModel):
    filename: str
    fps: float = videosync.DEFAULT_FPS
    offset_ms: int | None = None


def create_app(store: ClimbStore, ui_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="climbtrace review service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/climbs")
    def list_climbs():
        return [climb_summary(r) for r in store.list()]

    @app.get("/climbs/{climb_id}")
    def get_climb(climb_id: str):
        record = _get(climb_id)
        try:
            detail = climb_detail(record)
            detail["graph"] = layout(record.trace, mode=DETAIL).as_dict()
        except DegenerateSeries as exc:
            raise HTTPException(400, str(exc)) from exc
        return detail

    @app.post("/climbs", status_code=201)
    async def import_climb(request: Request):
        data = await request.body()
        try:
            record = store.import_climb(data)
        except (MalformedClimbFile, UnsupportedSchemaVersion) as exc:
            raise HTTPException(409, str(exc)) from exc
        return climb_summary(record)

    @app.post("/climbs/{climb_id}/crop")
    def crop_climb(climb_id: str, body: CropBody):
        _get(climb_id)
        try:
            record = store.crop(climb_id, body.at_s)
        except CutOutOfRange as exc:
            raise HTTPException(400, str(exc)) from exc
        return climb_summary(record)

    @app.patch("/climbs/{climb_id}")
    def rename_climb(climb_id: str, body: TitleBody):
        _get(climb_id)
        try:
            record = store.rename(climb_id, body.title)
        except EmptyTitle as exc:
            raise HTTPException(400, str(exc)) from exc
        return climb_summary(record)

    @app.delete("/climbs/{climb_id}", status_code=204)
    def delete_climb(climb_id: str):
        _get(climb_id)
        store.delete(climb_id)
        return Response(status_code=204)

    @app.post("/climbs/{climb_id}/video")
    def attach_video(climb_id: str, body: VideoBody):
        _get(climb_id)
        record = videosync.attach_video(
            store, climb_id, body.filename, fps=body.fps, explicit_offset_ms=body.offset_ms
        )
        link = record.video
        return {"filename": link.filename, "offset_ms": link.offset_ms, "fps": link.fps}

    @app.get("/videos/{filename}")
    def get_video(filename: str):
        # Videos live flat in the storage directory; no path components.
        if "/" in filename or "\\" in filename or filename in ("", ".", ".."):
            raise HTTPException(404, "no such video")
        path = store.storage_dir / filename
        if not path.is_file():
            raise HTTPException(404, "no such video")
        return FileResponse(path)

    def _get(climb_id: str):
        try:
            return store.get(climb_id)
        except UnknownClimb as exc:
            raise HTTPException(404, str(exc)) from exc

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
