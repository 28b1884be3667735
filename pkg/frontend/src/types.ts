/** Payload shapes of the torus API (mirrors the server responses). */

export interface DomainData {
  left_edge: [number, number][];
  right_edge: [number, number][];
  arc: [number, number][];
  hex_vertex: [number, number];
  square_point: [number, number];
  y_max: number;
}

export interface EmbeddingInfo {
  verdict: "yes" | "no" | "degenerate";
  degenerate_quadruples: number[][];
  failing_block: { pair: number[]; edge: number[]; triangle: number[] } | null;
}

export interface ModulusInfo {
  tau_re: number;
  tau_im: number;
  residual: number;
  distance_to_parameter: number;
}

export interface TorusReport {
  z: { x: number; y: number; region: string };
  t: number;
  mode: "golden" | "deformed" | "solved";
  vertices: number[][];
  triangles: number[][];
  cone_angles: number[] | null;
  theta_defect: number | null;
  per_vertex_defects: number[] | null;
  embedding: EmbeddingInfo;
  signs_match_reference: boolean;
  hull_triangles: number[];
  hull_dimension: number;
  coincident_vertices: number[][];
  modulus: ModulusInfo | null;
  solver?: { iterations: number; delta_w: number[]; converged: boolean };
}

export interface SliceResponse {
  z: { x: number; y: number; region: string };
  t: number;
  plane: "XY" | "XZ" | "YZ";
  offset: number;
  segments: [number[], number[]][];
}

export type Mode = "golden" | "deformed" | "solved";
export type Plane = "XY" | "XZ" | "YZ";
