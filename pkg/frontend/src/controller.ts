// App state machine. All mutations flow through the API; the DOM layer in
// main.ts re-renders from state after every action. Dependencies (API,
// confirm dialog, video element) are injected so the whole loop runs in
// plain node for tests.

import { traceTimeForScroll, videoTimeForTrace } from "./scrub.js";
import type { ClimbDetail, ClimbSummary, VideoLinkInfo } from "./types.js";

export interface ApiLike {
  listClimbs(): Promise<ClimbSummary[]>;
  getClimb(id: string): Promise<ClimbDetail>;
  importClimb(data: Blob | string): Promise<ClimbSummary>;
  crop(id: string, atSeconds: number): Promise<ClimbSummary>;
  rename(id: string, title: string): Promise<ClimbSummary>;
  deleteClimb(id: string): Promise<void>;
  attachVideo(id: string, filename: string, fps: number, offsetMs?: number): Promise<VideoLinkInfo>;
}

export interface VideoHandle {
  currentTime: number;
  duration?: number;
}

export interface Deps {
  api: ApiLike;
  confirm: (message: string) => boolean | Promise<boolean>;
}

export interface AppState {
  view: "list" | "detail";
  rows: ClimbSummary[];
  detail: ClimbDetail | null;
  banner: ClimbSummary | null;
  markerSeconds: number;
}

export class AppController {
  state: AppState = {
    view: "list",
    rows: [],
    detail: null,
    banner: null,
    markerSeconds: 0,
  };

  constructor(private deps: Deps) {}

  async showList(): Promise<AppState> {
    this.state.rows = await this.deps.api.listClimbs();
    this.state.view = "list";
    this.state.detail = null;
    return this.state;
  }

  async openClimb(id: string): Promise<AppState> {
    this.state.detail = await this.deps.api.getClimb(id);
    this.state.view = "detail";
    this.state.markerSeconds = 0;
    this.state.banner = null;
    return this.state;
  }

  /** Graph scroll drives both the cut marker and the linked video. */
  onGraphScroll(scrollLeftPx: number, video?: VideoHandle): number | null {
    const t = traceTimeForScroll(scrollLeftPx);
    this.state.markerSeconds = t;
    const link = this.state.detail?.video;
    if (!link || !video) return null;
    const target = videoTimeForTrace(t, link, video.duration);
    video.currentTime = target;
    return target;
  }

  /** Crop at the marker after user confirmation; reopens the new identity. */
  async cropAtMarker(): Promise<ClimbSummary | null> {
    const detail = this.state.detail;
    if (!detail) return null;
    const at = this.state.markerSeconds;
    const ok = await this.deps.confirm(
      `Remove everything after ${at.toFixed(2)} s? This cannot be undone.`,
    );
    if (!ok) return null;
    const summary = await this.deps.api.crop(detail.id, at);
    await this.openClimb(summary.id);
    return summary;
  }

  async renameTo(title: string): Promise<AppState> {
    const detail = this.state.detail;
    if (detail) {
      await this.deps.api.rename(detail.id, title);
      await this.openClimb(detail.id);
    }
    return this.state;
  }

  async deleteCurrent(): Promise<AppState> {
    const detail = this.state.detail;
    if (detail && (await this.deps.confirm(`Delete "${detail.title}"?`))) {
      await this.deps.api.deleteClimb(detail.id);
      await this.showList();
    }
    return this.state;
  }

  /** Import a shared climb file; shows the minimal banner (time + score). */
  async importClimb(data: Blob | string): Promise<ClimbSummary> {
    const summary = await this.deps.api.importClimb(data);
    await this.showList();
    this.state.banner = summary;
    return summary;
  }

  /** Offset spinner: persist a new offset and update the live link. */
  async setOffset(offsetMs: number): Promise<VideoLinkInfo | null> {
    const detail = this.state.detail;
    if (!detail?.video) return null;
    const link = await this.deps.api.attachVideo(
      detail.id,
      detail.video.filename,
      detail.video.fps,
      offsetMs,
    );
    detail.video = link;
    return link;
  }

  async attachNewVideo(filename: string, fps: number): Promise<VideoLinkInfo | null> {
    const detail = this.state.detail;
    if (!detail) return null;
    const link = await this.deps.api.attachVideo(detail.id, filename, fps);
    await this.openClimb(detail.id);
    return link;
  }
}
