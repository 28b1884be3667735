/** Typed client for the torus API.
 *
 * Responses keep their raw JSON text alongside the parsed value so the
 * diagnostics panel can display numbers byte-for-byte as served.
 */

import type { DomainData, Mode, Plane, SliceResponse, TorusReport } from "./types.js";

export interface RawResponse<T> {
  value: T;
  raw: string;
}

export class ApiError extends Error {
  status: number;
  region: string | null;
  constructor(status: number, message: string, region: string | null) {
    super(message);
    this.status = status;
    this.region = region;
  }
}

export function torusUrl(base: string, x: number, y: number, t: number, mode?: Mode): string {
  const q = new URLSearchParams({ x: String(x), y: String(y), t: String(t) });
  if (mode !== undefined) q.set("mode", mode);
  return `${base}/api/torus?${q.toString()}`;
}

export function sliceUrl(
  base: string,
  x: number,
  y: number,
  t: number,
  plane: Plane,
  offset: number,
  mode?: Mode,
): string {
  const q = new URLSearchParams({
    x: String(x),
    y: String(y),
    t: String(t),
    plane,
    offset: String(offset),
  });
  if (mode !== undefined) q.set("mode", mode);
  return `${base}/api/slice?${q.toString()}`;
}

async function getRaw<T>(url: string, signal?: AbortSignal): Promise<RawResponse<T>> {
  const resp = await fetch(url, { signal });
  const raw = await resp.text();
  if (!resp.ok) {
    let message = `HTTP ${resp.status}`;
    let region: string | null = null;
    try {
      const err = JSON.parse(raw);
      if (typeof err.error === "string") message = err.error;
      if (typeof err.region === "string") region = err.region;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(resp.status, message, region);
  }
  return { value: JSON.parse(raw) as T, raw };
}

export function fetchDomain(base: string, signal?: AbortSignal): Promise<RawResponse<DomainData>> {
  return getRaw<DomainData>(`${base}/api/domain`, signal);
}

export function fetchTorus(
  base: string,
  x: number,
  y: number,
  t: number,
  mode: Mode | undefined,
  signal?: AbortSignal,
): Promise<RawResponse<TorusReport>> {
  return getRaw<TorusReport>(torusUrl(base, x, y, t, mode), signal);
}

export function fetchSlice(
  base: string,
  x: number,
  y: number,
  t: number,
  plane: Plane,
  offset: number,
  mode: Mode | undefined,
  signal?: AbortSignal,
): Promise<RawResponse<SliceResponse>> {
  return getRaw<SliceResponse>(sliceUrl(base, x, y, t, plane, offset, mode), signal);
}
