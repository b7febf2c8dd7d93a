// HTML renderers: pure string functions so view contents are testable
// without a DOM. Scores and durations are printed verbatim from API data.

import { svgForGraph, thumbnailSvg } from "./chart.js";
import type { ClimbDetail, ClimbSummary } from "./types.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatDate(recordedAtMs: number): string {
  return new Date(recordedAtMs).toISOString().replace("T", " ").slice(0, 19);
}

export function formatDuration(seconds: number): string {
  return `${seconds.toFixed(1)} s`;
}

export function renderListView(
  rows: ClimbSummary[],
  thumbnails: Map<string, string>,
): string {
  if (rows.length === 0) {
    return `<p class="empty">No climbs yet. Import a climb file to get started.</p>`;
  }
  const items = rows.map((row) => {
    const score = row.display_score === null ? "–" : String(row.display_score);
    return (
      `<li class="climb-row" data-action="open" data-id="${row.id}">` +
      `<div class="thumb">${thumbnails.get(row.id) ?? ""}</div>` +
      `<div class="meta"><span class="title">${esc(row.title)}</span>` +
      `<span class="date">${formatDate(row.recorded_at_ms)}</span>` +
      `<span class="duration">${formatDuration(row.duration)}</span></div>` +
      `<div class="score" data-score="${score}">${score}</div></li>`
    );
  });
  return `<ul class="climb-list">${items.join("")}</ul>`;
}

export function renderDetailView(detail: ClimbDetail): string {
  const report = detail.report;
  const video = detail.video;
  const videoPane = video
    ? `<div class="video-pane">` +
      `<video data-role="player" src="/videos/${encodeURIComponent(video.filename)}" muted></video>` +
      `<label>Video offset (ms) ` +
      `<input type="number" data-role="offset" step="50" value="${video.offset_ms}"></label></div>`
    : `<div class="video-pane video-attach">` +
      `<label>Attach video file name <input type="text" data-role="video-name"></label>` +
      `<label>fps <input type="number" data-role="video-fps" value="30" min="1"></label>` +
      `<button data-action="attach-video">Attach</button></div>`;
  return (
    `<section class="detail" data-id="${detail.id}">` +
    `<header><button data-action="back">&larr; All climbs</button>` +
    `<h2 data-role="title">${esc(detail.title)}</h2>` +
    `<button data-action="rename">Rename</button>` +
    `<button data-action="delete">Delete</button></header>` +
    videoPane +
    `<div class="graph-scroll" data-role="graph-scroll">` +
    `<div class="cut-marker" data-role="cut-marker"></div>` +
    svgForGraph(detail.graph) +
    `</div>` +
    `<div class="stats">` +
    `<span>score <strong data-role="score">${report.display_score}</strong></span>` +
    `<span>duration <strong>${formatDuration(report.duration)}</strong></span>` +
    `<span>min <strong>${report.min.toFixed(2)} g</strong></span>` +
    `<span>max <strong>${report.max.toFixed(2)} g</strong></span>` +
    `<span>samples <strong data-role="sample-count">${detail.graph.points.length}</strong></span>` +
    `</div>` +
    `<button data-action="crop">Crop at marker</button>` +
    `</section>`
  );
}

/** Minimal post-import banner: time elapsed and score, plus a detail link. */
export function renderBanner(summary: ClimbSummary): string {
  const score = summary.display_score === null ? "–" : String(summary.display_score);
  return (
    `<div class="banner" data-id="${summary.id}">` +
    `<span>${formatDuration(summary.duration)}</span>` +
    `<span class="score" data-score="${score}">${score}</span>` +
    `<a href="#" data-action="open" data-id="${summary.id}">view climb</a></div>`
  );
}

export function thumbnailFor(detail: ClimbDetail, boxWidth = 220, boxHeight = 60): string {
  return thumbnailSvg(detail.graph.points, detail.graph.height, boxWidth, boxHeight);
}
