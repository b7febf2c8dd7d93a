import type { ClimbDetail, ClimbSummary, VideoLinkInfo } from "./types.js";

type Fetch = typeof fetch;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(`${status}: ${message}`);
  }
}

/** Thin typed client for the local review service. */
export class ApiClient {
  constructor(
    private base = "",
    private fetchFn: Fetch = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await response.text());
    }
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }

  listClimbs(): Promise<ClimbSummary[]> {
    return this.request("/climbs");
  }

  getClimb(id: string): Promise<ClimbDetail> {
    return this.request(`/climbs/${id}`);
  }

  importClimb(data: Blob | string): Promise<ClimbSummary> {
    return this.request("/climbs", { method: "POST", body: data });
  }

  crop(id: string, atSeconds: number): Promise<ClimbSummary> {
    return this.request(`/climbs/${id}/crop`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ at_s: atSeconds }),
    });
  }

  rename(id: string, title: string): Promise<ClimbSummary> {
    return this.request(`/climbs/${id}`, {
      method: "PATCH",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ title }),
    });
  }

  deleteClimb(id: string): Promise<void> {
    return this.request(`/climbs/${id}`, { method: "DELETE" });
  }

  attachVideo(
    id: string,
    filename: string,
    fps: number,
    offsetMs?: number,
  ): Promise<VideoLinkInfo> {
    const body: Record<string, unknown> = { filename, fps };
    if (offsetMs !== undefined) body.offset_ms = offsetMs;
    return this.request(`/climbs/${id}/video`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  videoUrl(filename: string): string {
    return `${this.base}/videos/${encodeURIComponent(filename)}`;
  }
}
