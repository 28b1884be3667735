/** View transforms: orthographic projection of the mesh with a
 * trackball-style rotation, plus painter's-algorithm depth ordering.
 * Pure view math; no mathematical results are recomputed here.
 */

export type Vec3 = [number, number, number];
export type Mat3 = number[][];

export function rotationXY(yaw: number, pitch: number): Mat3 {
  const cy = Math.cos(yaw), sy = Math.sin(yaw);
  const cp = Math.cos(pitch), sp = Math.sin(pitch);
  // yaw about the w-axis, then pitch about the screen-horizontal axis
  return [
    [cy, -sy, 0],
    [cp * sy, cp * cy, -sp],
    [sp * sy, sp * cy, cp],
  ];
}

export function apply(m: Mat3, v: Vec3): Vec3 {
  return [
    m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
    m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
    m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
  ];
}

export interface ProjectedTriangle {
  index: number;
  pts2: [number, number][];
  depth: number;
  normalZ: number;
}

/** Project triangles (indices into vertices) and sort back-to-front. */
export function projectMesh(
  vertices: number[][],
  triangles: number[][],
  m: Mat3,
): ProjectedTriangle[] {
  const rotated = vertices.map((v) => apply(m, v as Vec3));
  const out: ProjectedTriangle[] = [];
  triangles.forEach((tri, index) => {
    const p = tri.map((i) => rotated[i]);
    const ax = p[1][0] - p[0][0], ay = p[1][1] - p[0][1];
    const bx = p[2][0] - p[0][0], by = p[2][1] - p[0][1];
    out.push({
      index,
      pts2: p.map((q) => [q[0], q[1]] as [number, number]),
      depth: (p[0][2] + p[1][2] + p[2][2]) / 3,
      normalZ: ax * by - ay * bx,
    });
  });
  out.sort((a, b) => a.depth - b.depth);
  return out;
}

export interface Viewport {
  scale: number;
  cx: number;
  cy: number;
  width: number;
  height: number;
}

/** Fit a point cloud into a canvas with a margin fraction. */
export function fitViewport(
  points: [number, number][],
  width: number,
  height: number,
  margin = 0.1,
): Viewport {
  let xmin = Infinity, xmax = -Infinity, ymin = Infinity, ymax = -Infinity;
  for (const [x, y] of points) {
    xmin = Math.min(xmin, x); xmax = Math.max(xmax, x);
    ymin = Math.min(ymin, y); ymax = Math.max(ymax, y);
  }
  if (!isFinite(xmin)) { xmin = -1; xmax = 1; ymin = -1; ymax = 1; }
  const spanX = Math.max(xmax - xmin, 1e-9);
  const spanY = Math.max(ymax - ymin, 1e-9);
  const scale = Math.min(
    (width * (1 - 2 * margin)) / spanX,
    (height * (1 - 2 * margin)) / spanY,
  );
  return {
    scale,
    cx: (xmin + xmax) / 2,
    cy: (ymin + ymax) / 2,
    width,
    height,
  };
}

export function toCanvas(v: Viewport, x: number, y: number): [number, number] {
  return [v.width / 2 + (x - v.cx) * v.scale, v.height / 2 - (y - v.cy) * v.scale];
}

export function fromCanvas(v: Viewport, px: number, py: number): [number, number] {
  return [(px - v.width / 2) / v.scale + v.cx, -(py - v.height / 2) / v.scale + v.cy];
}

/** Zoom the viewport about a canvas point. */
export function zoomAt(v: Viewport, px: number, py: number, factor: number): Viewport {
  const [wx, wy] = fromCanvas(v, px, py);
  const scale = v.scale * factor;
  return {
    ...v,
    scale,
    cx: wx - (px - v.width / 2) / scale,
    cy: wy + (py - v.height / 2) / scale,
  };
}
