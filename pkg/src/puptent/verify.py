"""Self-contained invariant suite behind the ``verify`` CLI subcommand.

Runs the core correctness checks (a compact version of the acceptance
suite) and reports one pass/fail line per check.  Returns the number of
failures, which the CLI turns into the exit code.
"""

from __future__ import annotations

import math

import numpy as np

from . import exact, mesh
from .angles import angle_jacobian, cone_angles, flatness_defect, jacobian_det_closed_form
from .deformation import deform, order2_line_arrangement
from .embedding import (
    classify_quadruples,
    embedding_clause,
    matches_reference_signs,
    reference_tent,
)
from .flatten import solve_flat
from .golden import classify, golden_torus, verify_isometry
from .shape import convex_hull, good_polygon, hausdorff, modular_distance, modulus_of


def _random_rho_torus(rng, lo=0.4):
    while True:
        P = np.zeros((8, 3))
        P[:4] = rng.uniform(-1.0, 1.0, size=(4, 3))
        P[3, 2] = 0.0
        for j in range(4, 8):
            P[j] = mesh.rho(P[7 - j])
        if min(
            np.linalg.norm(P[i] - P[j]) for i, j in mesh.EDGES
        ) > lo * 0.1 and all(
            np.linalg.norm(np.cross(P[t[1]] - P[t[0]], P[t[2]] - P[t[0]])) > 1e-3
            for t in mesh.TRIANGLES
        ):
            return P


def run(fast=False, log=print):
    checks = []

    def check(name, ok, detail=""):
        checks.append((name, bool(ok)))
        log(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))

    # golden flatness + isometry on a grid
    n = 5 if fast else 9
    worst_theta, worst_iso = 0.0, 0.0
    for x in np.linspace(0.05, 0.45, n):
        ylo = math.sqrt(2 * x - x * x) + 0.05
        for y in np.linspace(ylo, 2.0, n):
            z = classify(float(x), float(y))
            worst_theta = max(worst_theta, flatness_defect(golden_torus(z)).defect)
            rep = verify_isometry(z, tol=1e-12)
            worst_iso = max(worst_iso, rep.max_metric_error, rep.max_gluing_error)
    check("golden tents flat on grid", worst_theta < 1e-12, f"max {worst_theta:.2e}")
    check("chart isometric on grid", worst_iso < 1e-12, f"max {worst_iso:.2e}")

    # Gauss-Bonnet on random tori
    rng = np.random.default_rng(7)
    m = 50 if fast else 200
    worst = max(
        abs(float(cone_angles(_random_rho_torus(rng))[:4].sum()) - 8 * math.pi)
        for _ in range(m)
    )
    check("angle sum identity on random tori", worst < 1e-10, f"max {worst:.2e}")

    # Jacobian determinant closed form
    worst = 0.0
    for x, y in [(0.25, 1.0), (0.1, 1.3), (0.4, 1.1), (0.3, 0.9), (0.15, 1.8)]:
        det = np.linalg.det(angle_jacobian(golden_torus(classify(x, y))))
        ref = jacobian_det_closed_form(x, y)
        worst = max(worst, abs(det - ref) / abs(ref))
    check("height Jacobian determinant", worst < 1e-6, f"rel {worst:.2e}")

    # cubic flatness of the deformation
    z = classify(0.25, 1.0)
    r = flatness_defect(deform(z, 1e-2)).defect / flatness_defect(deform(z, 5e-3)).defect
    check("deformation flat to third order", 7.0 <= r <= 9.0, f"ratio {r:.3f}")

    # 45/6/19 classification
    cls = classify_quadruples(z)
    check("determinant order counts", cls.counts == (45, 6, 19), str(cls.counts))

    # line arrangement
    arr = order2_line_arrangement(z)
    check(
        "deformation direction wins its cell",
        len(arr.lines) == 7 and arr.strictly_interior and arr.signs_match_reference,
        f"{len(arr.lines)} lines",
    )

    # reference tent certificates
    P = reference_tent()
    check("reference tent flat", flatness_defect(P).defect < 1e-10)
    check("reference tent clause", embedding_clause(P).embedded == "yes")
    check("reference tent exact oracle", exact.exact_intersection_oracle(P) == "embedded")
    check("reference hull pattern", len(convex_hull(P).on_hull_triangles) == 6)

    # clause vs oracle on random tori
    m = 30 if fast else 150
    agree = True
    for _ in range(m):
        Q = _random_rho_torus(rng)
        v = embedding_clause(Q)
        if v.embedded == "degenerate":
            continue
        o = exact.exact_intersection_oracle(Q)
        if (v.embedded == "yes") != (o == "embedded"):
            agree = False
            break
    check("clause agrees with exact oracle", agree)

    # Newton correction
    res = solve_flat(z, 1e-2)
    check(
        "height correction flattens and embeds",
        res.theta_defect < 1e-12
        and res.embedding.embedded == "yes"
        and res.matches_reference,
        f"defect {res.theta_defect:.2e}",
    )

    # modulus round trip
    est = modulus_of(golden_torus(z), tol=1e-8)
    d = modular_distance(est.tau, z.z)
    check("modulus map inverts the construction", d < 1e-10, f"dist {d:.2e}")

    # boundary geometry
    zy = classify(0.0, 1.2)
    hull = convex_hull(golden_torus(zy))
    pts = hull.polygon_points(golden_torus(zy))
    sides = sorted(
        {round(float(np.linalg.norm(pts[i] - pts[(i + 1) % len(pts)])), 9) for i in range(len(pts))}
    )
    check(
        "rectangle limit at x=0",
        len(pts) == 4 and abs(sides[0] - 2.4) < 1e-12 and abs(sides[1] - 2.88) < 1e-12,
        f"sides {sides}",
    )
    zh = classify(0.5, math.sqrt(3) / 2)
    gp = good_polygon(zh)
    Ph = golden_torus(zh)
    tri = convex_hull(Ph).polygon_points(Ph)
    d = hausdorff(np.array([tri]), gp.triangles(), n_samples=32)
    check("triangle limit at hex corner", d < 1e-9, f"hausdorff {d:.2e}")

    failures = sum(1 for _, ok in checks if not ok)
    log(f"{len(checks) - failures}/{len(checks)} checks passed")
    return failures
