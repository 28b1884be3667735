"""Newton correction of deformed tents to exactly flat embedded tori.

The three free heights (w0, w1, w2) (with half-turn partners moving
jointly and w3 = w4 pinned at 0) are adjusted so that the cone angles
theta_0, theta_1, theta_2 hit 2 pi; the angle sum identity then forces
all eight cone angles to 2 pi.  The height-variation Jacobian is
invertible throughout the interior, so for small t the deformed tent
sits in an excellent Newton basin and the correction is cubically small
in t.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateEdgeError, DomainError, SolverError
from . import mesh
from .angles import apply_heights, cone_angles, flatness_defect
from .deformation import deform, deformation_coefficients
from .embedding import EmbeddingVerdict, embedding_clause, matches_reference_signs
from .golden import ModularParameter, boundary_distance

THETA_TOL = 1e-12
MAX_ITER = 50
MAX_HALVINGS = 8
JACOBIAN_STEP = 1e-7

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FlatSolveResult:
    """Outcome of flattening one deformed tent."""

    x: float
    y: float
    t: float
    torus: np.ndarray
    delta_w: tuple
    theta_defect: float
    iterations: int
    converged: bool
    embedding: EmbeddingVerdict
    matches_reference: bool

    @property
    def success(self):
        return self.converged

    @property
    def fully_valid(self):
        return (
            self.converged
            and self.embedding.is_embedded
            and self.matches_reference
        )

    def summary_row(self):
        return {
            "x": self.x,
            "y": self.y,
            "t": self.t,
            "theta_defect": self.theta_defect,
            "iterations": self.iterations,
            "converged": self.converged,
            "embedded": self.embedding.embedded,
            "matches_reference": self.matches_reference,
            "delta_w": list(self.delta_w),
        }


def _newton_heights(P0, theta_tol=THETA_TOL, max_iter=MAX_ITER):
    """Damped Newton on the free heights; returns (P, w - w_start, iters).

    Takes the full step when the residual drops, otherwise halves up to
    MAX_HALVINGS times.  After first reaching the tolerance, one polishing
    step is attempted (kept only if it improves), so successful solves
    typically land well below theta_tol.
    """
    P = np.array(P0, dtype=float)
    scale = mesh.bbox_diameter(P)
    h = JACOBIAN_STEP * scale
    w = np.array([P[0, 2], P[1, 2], P[2, 2]])
    w_start = w.copy()

    def residual(wv):
        return cone_angles(apply_heights(P, wv))[:3] - TWO_PI

    g = residual(w)
    gn = float(np.max(np.abs(g)))
    polished = False
    for it in range(1, max_iter + 1):
        J = np.zeros((3, 3))
        for j in range(3):
            wp, wm = w.copy(), w.copy()
            wp[j] += h
            wm[j] -= h
            J[:, j] = (residual(wp) - residual(wm)) / (2.0 * h)
        try:
            step = np.linalg.solve(J, -g)
        except np.linalg.LinAlgError as exc:
            raise SolverError(f"singular Jacobian at iteration {it}") from exc
        accepted = False
        for _ in range(MAX_HALVINGS + 1):
            w_new = w + step
            g_new = residual(w_new)
            gn_new = float(np.max(np.abs(g_new)))
            if gn_new < gn or gn <= theta_tol:
                w, g, gn = w_new, g_new, gn_new
                accepted = True
                break
            step = 0.5 * step
        if gn <= theta_tol:
            if polished or not accepted:
                return apply_heights(P, w), w - w_start, it
            polished = True  # take one refinement step past the tolerance
            continue
        if not accepted:
            raise SolverError(
                f"no progress at iteration {it} (residual {gn:.3e})",
                trace=[float(gn)],
            )
    if gn <= theta_tol:
        return apply_heights(P, w), w - w_start, max_iter
    raise SolverError(
        f"no convergence in {max_iter} iterations (residual {gn:.3e})",
        trace=[float(gn)],
    )


def solve_flat(z: ModularParameter, t: float, theta_tol=THETA_TOL) -> FlatSolveResult:
    """Flatten the deformed tent at (z, t) by correcting its free heights.

    Requires interior z and t > 0 (at t = 0 the golden tent is already
    flat but only immersed, so there is nothing to correct).
    """
    if t <= 0:
        raise DomainError(f"solve_flat needs t > 0, got t={t}")
    if not z.interior:
        raise DomainError(f"solve_flat needs an interior parameter, got {z.region!r}")
    P0 = deform(z, t)
    P, dw, iters = _newton_heights(P0, theta_tol=theta_tol)
    defect = flatness_defect(P).defect
    verdict = embedding_clause(P)
    return FlatSolveResult(
        x=z.x,
        y=z.y,
        t=t,
        torus=P,
        delta_w=tuple(float(v) for v in dw),
        theta_defect=defect,
        iterations=iters,
        converged=defect <= theta_tol,
        embedding=verdict,
        matches_reference=matches_reference_signs(P),
    )


@dataclass(frozen=True)
class ProbeRow:
    t: float
    theta_before: float
    correction_norm: float
    iterations: int
    embedded: str
    error: str = None


@dataclass(frozen=True)
class ProbeTable:
    """Per-t diagnostics plus log-log slope estimates."""

    rows: tuple
    slope_theta: float
    slope_correction: float

    def as_dict(self):
        return {
            "rows": [vars(r) for r in self.rows],
            "slope_theta": self.slope_theta,
            "slope_correction": self.slope_correction,
        }


def _loglog_slope(ts, vals):
    pts = [(math.log(t), math.log(v)) for t, v in zip(ts, vals) if v > 0]
    if len(pts) < 2:
        return float("nan")
    xs = np.array([p[0] for p in pts])
    ys = np.array([p[1] for p in pts])
    return float(np.polyfit(xs, ys, 1)[0])


def convergence_probe(z: ModularParameter, t_list) -> ProbeTable:
    """Run solve_flat over a list of t values and estimate the scaling
    orders of the pre-correction defect and of the correction size."""
    rows = []
    for t in t_list:
        theta_before = float("nan")
        try:
            theta_before = flatness_defect(deform(z, t)).defect
            res = solve_flat(z, t)
            rows.append(
                ProbeRow(
                    t=float(t),
                    theta_before=theta_before,
                    correction_norm=float(np.max(np.abs(res.delta_w))),
                    iterations=res.iterations,
                    embedded=res.embedding.embedded,
                )
            )
        except (SolverError, DomainError, DegenerateEdgeError) as exc:
            rows.append(
                ProbeRow(
                    t=float(t),
                    theta_before=theta_before,
                    correction_norm=float("nan"),
                    iterations=0,
                    embedded="n/a",
                    error=str(exc),
                )
            )
    ok = [r for r in rows if r.error is None and math.isfinite(r.theta_before)]
    return ProbeTable(
        rows=tuple(rows),
        slope_theta=_loglog_slope([r.t for r in ok], [r.theta_before for r in ok]),
        slope_correction=_loglog_slope(
            [r.t for r in ok], [r.correction_norm for r in ok]
        ),
    )


def default_schedule(z: ModularParameter, cap=1e-2):
    """t(z) = min(cap, d(z, boundary)^2), a decaying schedule that keeps
    every parameter of a compact interior set inside the Newton basin."""
    d = boundary_distance(z.x, z.y)
    return min(cap, d * d)


def sweep(parameters, schedule=default_schedule):
    """Flatten a list of interior parameters with a t-schedule.

    ``schedule`` may be a callable z -> t or a constant.  Per-point
    failures are recorded, not raised.
    """
    results = []
    for z in parameters:
        t = schedule(z) if callable(schedule) else float(schedule)
        try:
            results.append(solve_flat(z, t))
        except (SolverError, DomainError, DegenerateEdgeError):
            results.append(
                FlatSolveResult(
                    x=z.x,
                    y=z.y,
                    t=t,
                    torus=None,
                    delta_w=(),
                    theta_defect=float("inf"),
                    iterations=0,
                    converged=False,
                    embedding=EmbeddingVerdict(embedded="n/a"),
                    matches_reference=False,
                )
            )
    return results


def sweep_summary(results):
    n = len(results)
    conv = sum(1 for r in results if r.converged)
    emb = sum(1 for r in results if r.embedding.embedded == "yes")
    ref = sum(1 for r in results if r.matches_reference)
    worst = max((r.theta_defect for r in results if r.converged), default=float("nan"))
    return {
        "points": n,
        "converged": conv,
        "embedded": emb,
        "matches_reference": ref,
        "worst_theta_defect": worst,
    }


def write_jsonl(results, stream):
    """One JSON object per solve, line-delimited."""
    for r in results:
        stream.write(json.dumps(r.summary_row()) + "\n")
