/**
 * API client with sequence-numbered responses.
 *
 * Requests are tagged with a monotonically increasing sequence number; a
 * response is surfaced only when no newer request has been issued, so a slow
 * early answer can never overwrite a fresher grid.
 */

import type { BatterListEntry, BatterReportResponse, WhatIfResponse } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
    public status: number,
  ) {
    super(message);
  }
}

async function parseOrThrow<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    const err = body?.error ?? { code: "unknown", message: "request failed" };
    throw new ApiError(err.code, err.message, response.status);
  }
  return body as T;
}

export class ApiClient {
  private sequence = 0;
  private delivered = 0;

  constructor(
    private baseUrl: string = "",
    private fetchImpl: FetchLike = fetch,
  ) {}

  /** null means a newer request superseded this one before it landed. */
  async whatif(request: object): Promise<{ seq: number; body: WhatIfResponse } | null> {
    const seq = ++this.sequence;
    const response = await this.fetchImpl(`${this.baseUrl}/whatif`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    });
    if (seq < this.sequence || seq <= this.delivered) {
      return null; // stale: a newer query is in flight or already rendered
    }
    const body = await parseOrThrow<WhatIfResponse>(response);
    if (seq < this.sequence || seq <= this.delivered) {
      return null;
    }
    this.delivered = seq;
    return { seq, body };
  }

  async batters(minPitches: number, season?: number): Promise<BatterListEntry[]> {
    const params = new URLSearchParams({ min_pitches: String(minPitches) });
    if (season !== undefined) params.set("season", String(season));
    const response = await this.fetchImpl(`${this.baseUrl}/batters?${params}`);
    const body = await parseOrThrow<{ batters: BatterListEntry[] }>(response);
    return body.batters;
  }

  async batterReport(batterId: string, season?: number, minPitches = 1000):
      Promise<BatterReportResponse> {
    const params = new URLSearchParams({ min_pitches: String(minPitches) });
    if (season !== undefined) params.set("season", String(season));
    const response = await this.fetchImpl(
      `${this.baseUrl}/batters/${encodeURIComponent(batterId)}/report?${params}`,
    );
    return parseOrThrow<BatterReportResponse>(response);
  }

  async health(): Promise<{ status: string; seasons: number[] }> {
    const response = await this.fetchImpl(`${this.baseUrl}/health`);
    return parseOrThrow(response);
  }
}
