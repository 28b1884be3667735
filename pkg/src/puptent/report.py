"""Torus reports, mesh serialization (JSON and OBJ), and plane slices.

JSON is the authoritative format; floats are emitted in Python's
shortest round-trip representation, so parse(serialize(report))
reproduces every float bit-exactly.  OBJ (8 vertices, 16 faces) is for
external viewers.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import DomainError, NonFlatError
from . import mesh
from .angles import cone_angles, flatness_defect
from .errors import DegenerateEdgeError
from .deformation import deform
from .embedding import embedding_clause, matches_reference_signs
from .flatten import solve_flat
from .golden import ModularParameter, golden_torus
from .shape import convex_hull, modulus_of, modular_distance

GOLDEN = "golden"
DEFORMED = "deformed"
SOLVED = "solved"

COINCIDENT_TOL = 1e-9


def _coincident_vertices(P):
    out = []
    for i in range(8):
        for j in range(i + 1, 8):
            if np.linalg.norm(P[i] - P[j]) <= COINCIDENT_TOL * max(
                mesh.bbox_diameter(P), 1e-300
            ):
                out.append((i, j))
    return out


def torus_report(z: ModularParameter, t: float, mode: str = None) -> dict:
    """Assemble the full diagnostic report for one torus.

    Default mode: golden tent at t = 0, otherwise the deformed tent;
    "solved" additionally applies the Newton height correction.  The
    modulus estimate is included whenever the torus is flat enough for
    the developing map (golden tents and solved tori).
    """
    if mode is None:
        mode = GOLDEN if t == 0 else DEFORMED
    if mode not in (GOLDEN, DEFORMED, SOLVED):
        raise DomainError(f"unknown mode {mode!r}")

    solver = None
    if mode == GOLDEN:
        P = golden_torus(z)
    elif mode == DEFORMED:
        P = deform(z, t)
    else:
        res = solve_flat(z, t)
        P = res.torus
        solver = {
            "iterations": res.iterations,
            "delta_w": list(res.delta_w),
            "converged": res.converged,
        }

    try:
        theta = cone_angles(P)
        defect = flatness_defect(P)
    except DegenerateEdgeError:
        theta, defect = None, None  # collapsed boundary tent
    verdict = embedding_clause(P)
    hull = convex_hull(P)

    modulus = None
    if defect is not None and defect.defect <= 1e-8:
        try:
            est = modulus_of(P, tol=1e-8)
            modulus = {
                "tau_re": est.tau.real,
                "tau_im": est.tau.imag,
                "residual": est.residual,
                "distance_to_parameter": modular_distance(est.tau, z.z),
            }
        except (NonFlatError, DomainError):
            modulus = None

    report = {
        "z": {"x": z.x, "y": z.y, "region": z.region},
        "t": t,
        "mode": mode,
        "vertices": [[float(v) for v in row] for row in P],
        "triangles": [list(tr) for tr in mesh.TRIANGLES],
        "cone_angles": None if theta is None else [float(v) for v in theta],
        "theta_defect": None if defect is None else defect.defect,
        "per_vertex_defects": None if defect is None else list(defect.per_vertex),
        "embedding": {
            "verdict": verdict.embedded,
            "degenerate_quadruples": [list(q) for q in verdict.degenerate_quadruples],
            "failing_block": (
                None
                if verdict.failing_block is None
                else {
                    "pair": list(verdict.failing_block[0]),
                    "edge": list(verdict.failing_block[1]),
                    "triangle": list(verdict.failing_block[2]),
                }
            ),
        },
        "signs_match_reference": matches_reference_signs(P),
        "hull_triangles": [int(i) for i in hull.on_hull_triangles],
        "hull_dimension": hull.dimension,
        "coincident_vertices": [list(p) for p in _coincident_vertices(P)],
        "modulus": modulus,
    }
    if solver is not None:
        report["solver"] = solver
    return report


def dumps(obj):
    """Canonical JSON: sorted keys, shortest round-trip floats."""
    return json.dumps(obj, sort_keys=True)


def torus_from_report(report):
    return np.array(report["vertices"], dtype=float)


def to_obj(P, comment=None):
    """Wavefront OBJ text for the 8 vertices and 16 faces."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    for u, v, w in np.asarray(P, dtype=float):
        lines.append(f"v {u:.17g} {v:.17g} {w:.17g}")
    for a, b, c in mesh.TRIANGLES:
        lines.append(f"f {a + 1} {b + 1} {c + 1}")
    return "\n".join(lines) + "\n"


_PLANE_AXIS = {"XY": 2, "XZ": 1, "YZ": 0}


def plane_slice(P, plane: str, offset: float = 0.0):
    """Intersection segments of the 16-triangle mesh with an axis plane.

    Each triangle is clipped independently; segments come back unordered
    (chaining into curves is a viewer concern).  Triangles lying in the
    plane contribute their three edges.
    """
    if plane not in _PLANE_AXIS:
        raise DomainError(f"plane must be one of XY, XZ, YZ, got {plane!r}")
    axis = _PLANE_AXIS[plane]
    p = np.asarray(P, dtype=float)
    segments = []
    for tri in mesh.TRIANGLES:
        pts = p[list(tri)]
        side = pts[:, axis] - offset
        zero = np.abs(side) < 1e-14
        if np.all(zero):
            for i in range(3):
                segments.append((pts[i].tolist(), pts[(i + 1) % 3].tolist()))
            continue
        cuts = []
        for i in range(3):
            if zero[i]:
                cuts.append(pts[i])
        for i, j in ((0, 1), (1, 2), (2, 0)):
            si, sj = side[i], side[j]
            if zero[i] or zero[j]:
                continue
            if si * sj < 0:
                lam = si / (si - sj)
                cuts.append(pts[i] + lam * (pts[j] - pts[i]))
        if len(cuts) >= 2:
            uniq = []
            for c in cuts:
                if not any(np.linalg.norm(c - u) < 1e-14 for u in uniq):
                    uniq.append(c)
            if len(uniq) >= 2:
                segments.append((uniq[0].tolist(), uniq[1].tolist()))
    return segments
