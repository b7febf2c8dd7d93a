// Wire shapes of the review service. The UI never recomputes any of these
// numbers; it displays what the API returns.

export interface ClimbSummary {
  id: string;
  title: string;
  recorded_at_ms: number;
  duration: number;
  display_score: number | null;
}

export interface VideoLinkInfo {
  filename: string;
  offset_ms: number;
  fps: number;
}

export interface Report {
  mean: number;
  variance: number;
  mean_sq_diff: number;
  lag1_autocorr: number | null;
  display_score: number;
  min: number;
  max: number;
  duration: number;
  per_second_scores: [number, number][];
}

export interface GraphSpecJson {
  mode: string;
  width: number;
  height: number;
  points: [number, number][];
  shading: [number, number][];
  ticks: [number, number][];
  scores: [number, number][];
}

export interface ClimbDetail {
  id: string;
  title: string;
  recorded_at_ms: number;
  crop_history: number;
  gap_flags: [number, number][];
  video: VideoLinkInfo | null;
  report: Report;
  graph: GraphSpecJson;
}
