// Scroll <-> trace-time <-> video-time coupling. The detail graph is drawn
// at a fixed 100 px per second, so scroll offset converts to trace seconds
// by simple division, and the stored offset shifts that into video time.

import type { VideoLinkInfo } from "./types.js";

export const PX_PER_SECOND = 100;

export function traceTimeForScroll(scrollLeftPx: number): number {
  return Math.max(0, scrollLeftPx) / PX_PER_SECOND;
}

/** Frame index for a trace time, clamped; mirrors the service's mapping. */
export function frameForTime(
  tSeconds: number,
  link: Pick<VideoLinkInfo, "offset_ms" | "fps">,
  lastFrame?: number,
): number {
  let frame = Math.floor((tSeconds + link.offset_ms / 1000) * link.fps);
  frame = Math.max(0, frame);
  if (lastFrame !== undefined) frame = Math.min(frame, lastFrame);
  return frame;
}

/**
 * Seek target in video seconds for a trace time. Native players seek by
 * time, not frame; this stays within one frame duration of
 * frameForTime(t) / fps.
 */
export function videoTimeForTrace(
  tSeconds: number,
  link: Pick<VideoLinkInfo, "offset_ms" | "fps">,
  videoDuration?: number,
): number {
  let target = tSeconds + link.offset_ms / 1000;
  target = Math.max(0, target);
  if (videoDuration !== undefined) target = Math.min(target, videoDuration);
  return target;
}
