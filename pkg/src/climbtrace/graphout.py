"""Deterministic graph geometry and SVG rendering for climb traces.

Two scaling modes, matching how the views are used: thumbnails squeeze the
whole trace into a fixed box for the scrolling list, the detail view pins
the x-axis at 100 px per second so spikes stay legible while long climbs
stay scrollable. Per-second smoothness shows up as background darkness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyTrace
from .ingest import ClimbTrace
from .metrics import per_second_scores as _per_second_scores

DETAIL_PX_PER_SECOND = 100
SCORE_DARKNESS_CEILING = 100  # score mapped linearly onto [0, 1], clamped

THUMBNAIL = "thumbnail"
DETAIL = "detail"


@dataclass(frozen=True)
class GraphSpec:
    """Resolved geometry for one graph, ready to draw anywhere."""

    mode: str
    points: tuple[tuple[float, float], ...]
    width: int
    height: int
    shading: tuple[tuple[int, float], ...] = field(default_factory=tuple)
    ticks: tuple[tuple[float, int], ...] = field(default_factory=tuple)
    scores: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "width": self.width,
            "height": self.height,
            "points": [[x, y] for x, y in self.points],
            "shading": [[i, d] for i, d in self.shading],
            "ticks": [[x, s] for x, s in self.ticks],
            "scores": [[i, s] for i, s in self.scores],
        }


def shade(scores: Iterable[int]) -> list[float]:
    """Background darkness per window: score/100, clamped to [0, 1]."""
    darkness = []
    for score in scores:
        if score < 0:
            raise ValueError("scores must be >= 0")
        darkness.append(min(score / SCORE_DARKNESS_CEILING, 1.0))
    return darkness


def layout(
    trace: ClimbTrace,
    mode: str = DETAIL,
    box_width: int = 300,
    box_height: int = 150,
) -> GraphSpec:
    """Compute pixel geometry for a trace.

    x positions come from true sample times. y maps [0, max] linearly onto
    [height, 0] (screen-down), so a flat trace draws a flat line and each
    graph uses its own full height.
    """
    if len(trace) == 0:
        raise EmptyTrace("cannot lay out an empty trace")
    if mode not in (THUMBNAIL, DETAIL):
        raise ValueError(f"unknown graph mode: {mode!r}")
    if box_width <= 0 or box_height <= 0:
        raise ValueError("box dimensions must be positive")

    values = trace.magnitudes.values
    n = len(values)
    vmax = max(values)
    ys = [box_height * (1.0 - v / vmax) if vmax > 0 else float(box_height) for v in values]

    if mode == DETAIL:
        # 100 px/s over 50 ms steps: sample i sits at exactly 5*i px.
        xs = [(ms * DETAIL_PX_PER_SECOND) / 1000.0 for ms in trace.sample_times_ms()]
        width = max(1, math.ceil(DETAIL_PX_PER_SECOND * trace.duration_s))
        ticks = tuple(
            (float(DETAIL_PX_PER_SECOND * s), s)
            for s in range(int(math.floor(trace.duration_s)) + 1)
        )
        scores: tuple[tuple[int, int], ...] = ()
        if n >= 2:
            scores = tuple(_per_second_scores(trace.magnitudes))
        shading = tuple(
            (i, d) for (i, _), d in zip(scores, shade(s for _, s in scores))
        )
    else:
        xs = [box_width * i / (n - 1) if n > 1 else 0.0 for i in range(n)]
        width = box_width
        ticks = ()
        scores = ()
        shading = ()

    return GraphSpec(
        mode=mode,
        points=tuple(zip(xs, ys)),
        width=width,
        height=box_height,
        shading=shading,
        ticks=ticks,
        scores=scores,
    )


def render_svg(spec: GraphSpec, score_labels: bool = False) -> bytes:
    """Render a GraphSpec to SVG bytes; identical specs give identical bytes.

    Shaded windows become one background <rect> each, grayscale by darkness.
    ``score_labels`` additionally prints the per-second score in each window
    (off by default; the numbers cluttered the view for most people).
    """
    w, h = spec.width, spec.height
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
    ]
    window_px = DETAIL_PX_PER_SECOND
    for index, darkness in spec.shading:
        x = index * window_px
        rect_w = min(window_px, max(0, w - x))
        gray = 255 - round(darkness * 255)
        parts.append(
            f'<rect x="{x}" y="0" width="{rect_w}" height="{h}" '
            f'fill="rgb({gray},{gray},{gray})"/>'
        )
    points = " ".join(f"{x:.2f},{y:.2f}" for x, y in spec.points)
    parts.append(
        f'<polyline fill="none" stroke="#1f6ef2" stroke-width="1.5" points="{points}"/>'
    )
    for x, second in spec.ticks:
        parts.append(
            f'<line x1="{x:.2f}" y1="{h - 6}" x2="{x:.2f}" y2="{h}" '
            f'stroke="#444444" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x + 2:.2f}" y="{h - 2}" font-size="8" fill="#444444">{second}</text>'
        )
    if score_labels:
        for index, score in spec.scores:
            parts.append(
                f'<text x="{index * window_px + 3}" y="10" font-size="7" '
                f'fill="#666666">{score}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts).encode("utf-8")
