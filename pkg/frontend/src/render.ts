/** Canvas rendering: the domain picker, the shaded 3D mesh view with
 * hull triangles tinted, and the slice view with zoom. */

import { fitViewport, projectMesh, rotationXY, toCanvas, Viewport } from "./projection.js";
import type { Polyline } from "./slices.js";
import type { DomainData, TorusReport } from "./types.js";

export function drawDomain(
  ctx: CanvasRenderingContext2D,
  domain: DomainData,
  selected: [number, number],
  yCap = 2.2,
): Viewport {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const pts: [number, number][] = [
    [0, 0],
    [0.5, 0],
    [0, yCap],
    [0.5, yCap],
  ];
  const vp = fitViewport(pts, width, height, 0.12);
  ctx.fillStyle = "#f4f1ea";
  ctx.fillRect(0, 0, width, height);

  // shaded interior: vertical strips between the arc and the top
  ctx.fillStyle = "#ffe9a8";
  ctx.beginPath();
  const arc = domain.arc.filter(([, y]) => y <= yCap);
  const top: [number, number][] = [
    [0.5, yCap],
    [0, yCap],
  ];
  const boundary = [...arc, ...top];
  boundary.forEach(([x, y], i) => {
    const [px, py] = toCanvas(vp, x, y);
    if (i === 0) ctx.moveTo(px, py);
    else ctx.lineTo(px, py);
  });
  ctx.closePath();
  ctx.fill();

  ctx.strokeStyle = "#8a6d1d";
  ctx.lineWidth = 2;
  for (const line of [domain.left_edge, domain.right_edge, domain.arc]) {
    ctx.beginPath();
    let started = false;
    for (const [x, y] of line) {
      if (y > yCap) continue;
      const [px, py] = toCanvas(vp, x, y);
      if (!started) {
        ctx.moveTo(px, py);
        started = true;
      } else ctx.lineTo(px, py);
    }
    ctx.stroke();
  }

  for (const [label, p] of [
    ["hex", domain.hex_vertex],
    ["square", domain.square_point],
  ] as const) {
    const [px, py] = toCanvas(vp, p[0], p[1]);
    ctx.fillStyle = "#444";
    ctx.beginPath();
    ctx.arc(px, py, 3, 0, 2 * Math.PI);
    ctx.fill();
    ctx.font = "11px sans-serif";
    ctx.fillText(label, px + 6, py + 3);
  }

  const [sx, sy] = toCanvas(vp, selected[0], selected[1]);
  ctx.strokeStyle = "#c0392b";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.arc(sx, sy, 6, 0, 2 * Math.PI);
  ctx.stroke();
  return vp;
}

const HULL_TINT = "#79b4e2";
const FACE_TINT = "#e8d59a";

export function drawMesh(
  ctx: CanvasRenderingContext2D,
  report: TorusReport,
  yaw: number,
  pitch: number,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const m = rotationXY(yaw, pitch);
  const tris = projectMesh(report.vertices, report.triangles, m);
  const all2: [number, number][] = tris.flatMap((t) => t.pts2);
  const vp = fitViewport(all2, width, height, 0.08);
  const hull = new Set(report.hull_triangles);
  for (const t of tris) {
    const base = hull.has(t.index) ? HULL_TINT : FACE_TINT;
    const shade = 0.55 + 0.45 * Math.min(1, Math.abs(t.normalZ) * 2.5);
    ctx.beginPath();
    t.pts2.forEach(([x, y], i) => {
      const [px, py] = toCanvas(vp, x, y);
      if (i === 0) ctx.moveTo(px, py);
      else ctx.lineTo(px, py);
    });
    ctx.closePath();
    ctx.fillStyle = shadeColor(base, shade);
    ctx.fill();
    ctx.strokeStyle = "rgba(40,40,40,0.55)";
    ctx.lineWidth = 1;
    ctx.stroke();
  }
}

function shadeColor(hex: string, f: number): string {
  const r = Math.round(parseInt(hex.slice(1, 3), 16) * f);
  const g = Math.round(parseInt(hex.slice(3, 5), 16) * f);
  const b = Math.round(parseInt(hex.slice(5, 7), 16) * f);
  return `rgb(${r},${g},${b})`;
}

/** Axes of the slice plane within 3-space, for plotting. */
export function sliceAxes(plane: "XY" | "XZ" | "YZ"): [number, number] {
  if (plane === "XY") return [0, 1];
  if (plane === "XZ") return [0, 2];
  return [1, 2];
}

export function drawSlice(
  ctx: CanvasRenderingContext2D,
  polylines: Polyline[],
  plane: "XY" | "XZ" | "YZ",
  view: Viewport | null,
): Viewport {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const [i, j] = sliceAxes(plane);
  const pts: [number, number][] = polylines.flatMap((pl) =>
    pl.points.map((p) => [p[i], p[j]] as [number, number]),
  );
  const vp = view ?? fitViewport(pts, width, height, 0.1);
  ctx.strokeStyle = "#b3401e";
  ctx.lineWidth = 1.6;
  for (const pl of polylines) {
    ctx.beginPath();
    pl.points.forEach((p, k) => {
      const [px, py] = toCanvas(vp, p[i], p[j]);
      if (k === 0) ctx.moveTo(px, py);
      else ctx.lineTo(px, py);
    });
    if (pl.closed) ctx.closePath();
    ctx.stroke();
  }
  return vp;
}
