/** Diagnostics view model.
 *
 * Every displayed number is the verbatim byte span from the server's
 * JSON body, so what the panel shows equals the payload exactly.
 */

import { rawDisplay } from "./rawjson.js";
import type { TorusReport } from "./types.js";

export interface DiagnosticsView {
  region: string;
  mode: string;
  verdict: string;
  signsMatch: string;
  thetaDefect: string;
  coneAngles: string[];
  hullTriangles: string;
  modulus: string | null;
  modulusDistance: string | null;
  solverIterations: string | null;
}

export function buildDiagnostics(report: TorusReport, raw: string): DiagnosticsView {
  const coneAngles: string[] = [];
  if (report.cone_angles !== null) {
    for (let i = 0; i < report.cone_angles.length; i++) {
      const tok = rawDisplay(raw, ["cone_angles", i]);
      if (tok !== null) coneAngles.push(tok);
    }
  }
  let modulus: string | null = null;
  let modulusDistance: string | null = null;
  if (report.modulus !== null) {
    const re = rawDisplay(raw, ["modulus", "tau_re"]);
    const im = rawDisplay(raw, ["modulus", "tau_im"]);
    if (re !== null && im !== null) modulus = `${re} + ${im}i`;
    modulusDistance = rawDisplay(raw, ["modulus", "distance_to_parameter"]);
  }
  return {
    region: rawDisplay(raw, ["z", "region"]) ?? report.z.region,
    mode: rawDisplay(raw, ["mode"]) ?? report.mode,
    verdict: rawDisplay(raw, ["embedding", "verdict"]) ?? report.embedding.verdict,
    signsMatch: rawDisplay(raw, ["signs_match_reference"]) ?? String(report.signs_match_reference),
    thetaDefect: rawDisplay(raw, ["theta_defect"]) ?? "null",
    coneAngles,
    hullTriangles: rawDisplay(raw, ["hull_triangles"]) ?? "[]",
    modulus,
    modulusDistance,
    solverIterations: rawDisplay(raw, ["solver", "iterations"]),
  };
}
