/** Explorer state and the pure update logic around it.
 *
 * All mathematical results displayed by the UI come verbatim from
 * server reports; the only geometry done here is interaction support:
 * clamping clicks into the parameter domain and mapping the slider to
 * the deformation parameter (log scale with an explicit zero detent).
 */

import type { DomainData, Mode, Plane, TorusReport } from "./types.js";

export const T_MAX = 0.25;
export const T_MIN = 1e-4; // smallest nonzero slider value
export const SLIDER_STEPS = 400;

export interface ExplorerState {
  x: number;
  y: number;
  t: number;
  mode: Mode;
  plane: Plane;
  offset: number;
  report: TorusReport | null;
  rawReport: string | null;
  banner: string | null;
}

export function initialState(): ExplorerState {
  return {
    x: 0.25,
    y: 1.0,
    t: 0,
    mode: "golden",
    plane: "XZ",
    offset: 0,
    report: null,
    rawReport: null,
    banner: null,
  };
}

/** slider position 0..SLIDER_STEPS -> t; 0 is an exact zero detent. */
export function sliderToT(pos: number): number {
  if (pos <= 0) return 0;
  const f = pos / SLIDER_STEPS;
  return T_MIN * Math.pow(T_MAX / T_MIN, f);
}

/** Inverse of sliderToT (nearest slider notch). */
export function tToSlider(t: number): number {
  if (t <= 0) return 0;
  const f = Math.log(t / T_MIN) / Math.log(T_MAX / T_MIN);
  return Math.round(Math.min(Math.max(f, 0), 1) * SLIDER_STEPS);
}

/** Modes that allow t = 0 (the solver needs t > 0). */
export function modeAllowsZeroT(mode: Mode): boolean {
  return mode !== "solved";
}

export function effectiveMode(t: number, mode: Mode): Mode {
  if (t === 0 && mode === "solved") return "deformed";
  if (t > 0 && mode === "golden") return "deformed"; // dragging t leaves the golden family
  return mode;
}

const EDGE_TOL = 1e-12;

export function insideDomain(x: number, y: number): boolean {
  return (
    y > 0 &&
    x >= -EDGE_TOL &&
    1 - 2 * x >= -EDGE_TOL &&
    -2 * x + x * x + y * y >= -EDGE_TOL
  );
}

function nearestOnSegment(
  px: number,
  py: number,
  ax: number,
  ay: number,
  bx: number,
  by: number,
): [number, number] {
  const dx = bx - ax;
  const dy = by - ay;
  const dd = dx * dx + dy * dy;
  const u = dd === 0 ? 0 : Math.min(1, Math.max(0, ((px - ax) * dx + (py - ay) * dy) / dd));
  return [ax + u * dx, ay + u * dy];
}

/** Clamp a click to the closed domain: inside points pass through,
 * outside points go to the nearest point of the boundary polylines. */
export function clampToDomain(x: number, y: number, domain: DomainData): [number, number] {
  if (insideDomain(x, y)) return [x, y];
  let best: [number, number] = [0.25, 1.0];
  let bestD = Infinity;
  const polylines = [domain.left_edge, domain.right_edge, domain.arc];
  for (const line of polylines) {
    for (let i = 0; i + 1 < line.length; i++) {
      const [cx, cy] = nearestOnSegment(x, y, line[i][0], line[i][1], line[i + 1][0], line[i + 1][1]);
      const d = (cx - x) ** 2 + (cy - y) ** 2;
      if (d < bestD) {
        bestD = d;
        best = [cx, cy];
      }
    }
  }
  return best;
}

export function selectPoint(state: ExplorerState, x: number, y: number, domain: DomainData): ExplorerState {
  const [cx, cy] = clampToDomain(x, y, domain);
  return { ...state, x: cx, y: cy };
}

export function setT(state: ExplorerState, t: number): ExplorerState {
  const mode = effectiveMode(t, state.mode);
  return { ...state, t, mode };
}

export function setMode(state: ExplorerState, mode: Mode): ExplorerState {
  if (state.t === 0 && mode === "solved") {
    // solved mode needs t > 0: bump to the smallest nonzero notch
    return { ...state, mode, t: sliderToT(1) };
  }
  return { ...state, mode };
}

export function applyReport(state: ExplorerState, report: TorusReport, raw: string): ExplorerState {
  return { ...state, report, rawReport: raw, banner: null };
}

export function applyError(state: ExplorerState, message: string, region: string | null): ExplorerState {
  const suffix = region ? ` (region: ${region})` : "";
  return { ...state, banner: message + suffix };
}
