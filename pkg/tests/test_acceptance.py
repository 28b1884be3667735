"""Acceptance suite: one test per criterion, at the stated tolerances.

Each test prints one PASS line when its criterion holds (run with -s or
-v to see them); any failure is a hard assert.
"""

import math

import numpy as np
import pytest

from puptent import exact, golden, mesh, shape
from puptent.angles import angle_jacobian, cone_angles, flatness_defect, jacobian_det_closed_form
from puptent.deformation import deform
from puptent.embedding import (
    classify_quadruples,
    embedding_clause,
    reference_hull_triangles,
    reference_signs,
    reference_tent,
    sign_list,
)
from puptent.flatten import solve_flat, sweep, sweep_summary
from puptent.golden import boundary_distance, classify, golden_torus, verify_isometry

Z = classify(0.25, 1.0)
FIVE_INTERIOR = [(0.25, 1.0), (0.1, 1.3), (0.4, 0.95), (0.125, 1.375), (0.375, 1.375)]


def _announce(n, text):
    print(f"ACCEPTANCE {n:2d} PASS: {text}")


def interior_grid(n):
    pts = []
    for x in np.linspace(0.05, 0.45, n):
        ylo = math.sqrt(2 * x - x * x) + 0.05
        for y in np.linspace(ylo, 2.0, n):
            pts.append(classify(float(x), float(y)))
    return pts


def random_rho_torus(rng):
    while True:
        P = np.zeros((8, 3))
        P[:4] = rng.uniform(-1.0, 1.0, size=(4, 3))
        P[3, 2] = 0.0
        for j in range(4, 8):
            P[j] = mesh.rho(P[7 - j])
        if mesh.edge_lengths(P).min() > 0.05:
            return P


def test_01_golden_flatness_and_isometry():
    worst_theta, worst_iso = 0.0, 0.0
    grid = interior_grid(15)
    assert len(grid) == 225
    for z in grid:
        assert z.interior
        worst_theta = max(worst_theta, flatness_defect(golden_torus(z)).defect)
        rep = verify_isometry(z, tol=1e-12)
        worst_iso = max(worst_iso, rep.max_metric_error, rep.max_gluing_error)
    assert worst_theta < 1e-12
    assert worst_iso <= 1e-12
    _announce(1, f"225 golden tents: max defect {worst_theta:.2e}, max isometry error {worst_iso:.2e}")


def test_02_angle_sum_identity():
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(1000):
        th = cone_angles(random_rho_torus(rng))
        worst = max(worst, abs(float(th[:4].sum()) - 8.0 * math.pi))
    assert worst < 1e-10
    _announce(2, f"1000 random tori: max angle-sum deviation {worst:.2e}")


def test_03_jacobian_determinant():
    center = np.linalg.det(angle_jacobian(golden_torus(Z)))
    assert center == pytest.approx(-1.7734, abs=1e-4)
    rng = np.random.default_rng(102)
    worst = 0.0
    for _ in range(20):
        x = float(rng.uniform(0.05, 0.45))
        y = float(rng.uniform(math.sqrt(2 * x - x * x) + 0.08, 2.0))
        det = np.linalg.det(angle_jacobian(golden_torus(classify(x, y))))
        ref = jacobian_det_closed_form(x, y)
        worst = max(worst, abs(det - ref) / abs(ref))
    assert worst < 1e-6
    _announce(3, f"20 interior points: worst relative determinant error {worst:.2e}; center {center:.5f}")


def test_04_cubic_flatness_slope():
    ts = [1 / 64, 1 / 128, 1 / 256]
    slopes = []
    for x, y in FIVE_INTERIOR:
        z = classify(x, y)
        vals = [flatness_defect(deform(z, t)).defect for t in ts]
        slope = np.polyfit(np.log(ts), np.log(vals), 1)[0]
        assert slope == pytest.approx(3.0, abs=0.2), (x, y, slope)
        slopes.append(slope)
    _announce(4, f"defect slopes at 5 parameters: {[round(s, 3) for s in slopes]}")


def test_05_determinant_order_structure():
    ref = classify_quadruples(Z)
    assert ref.counts == (45, 6, 19)
    for x, y in FIVE_INTERIOR[1:]:
        cls = classify_quadruples(classify(x, y))
        assert cls.counts == (45, 6, 19)
        assert cls.order0 == ref.order0
        assert cls.order1 == ref.order1
        assert cls.order2 == ref.order2
        assert cls.leading_signs == ref.leading_signs
    assert np.array_equal(np.array(ref.leading_signs), reference_signs())
    _announce(5, "45/6/19 split, identical partition and leading signs at 5 parameters")


def test_06_embedding_certification():
    P = reference_tent()
    assert flatness_defect(P).defect < 1e-10
    assert embedding_clause(P).embedded == "yes"
    assert exact.exact_intersection_oracle(P) == "embedded"
    hull = shape.convex_hull(P)
    assert len(hull.on_hull_triangles) == 6
    assert {mesh.TRIANGLES[i] for i in hull.on_hull_triangles} == set(
        reference_hull_triangles()
    )
    assert embedding_clause(deform(Z, 0.125)).embedded == "yes"
    for x, y in FIVE_INTERIOR:
        assert embedding_clause(golden_torus(classify(x, y))).embedded == "degenerate"
    _announce(6, "reference tent certified; figure deformation embedded; golden tents degenerate")


def test_07_clause_oracle_equivalence():
    rng = np.random.default_rng(103)
    disagreements = 0
    checked = 0
    n_random, n_family = 0, 0
    while n_random + n_family < 1000:
        if n_random < 600:
            P = random_rho_torus(rng)
            n_random += 1
        else:
            x = float(rng.uniform(0.1, 0.4))
            y = float(rng.uniform(1.0, 1.6))
            t = float(10 ** rng.uniform(-2.5, -0.8))
            P = deform(classify(x, y), t)
            P[:, 2] += rng.uniform(-1, 1, size=8) * (1e-4 * t * t)
            n_family += 1
        v = embedding_clause(P)
        if v.embedded == "degenerate":
            continue
        o = exact.exact_intersection_oracle(P)
        checked += 1
        if (v.embedded == "yes") != (o == "embedded"):
            disagreements += 1
    assert disagreements == 0
    assert checked >= 950
    _announce(7, f"{checked} non-degenerate tori, zero clause/oracle disagreements")


def test_08_newton_correction_sweep():
    grid = [
        classify(float(x), float(y))
        for x in np.linspace(0.05, 0.45, 10)
        for y in np.linspace(math.sqrt(3) / 2 + 0.05, 2.0, 10)
    ]
    results = sweep(grid, 1e-2)
    s = sweep_summary(results)
    assert s["points"] == 100
    assert s["converged"] == 100
    assert s["worst_theta_defect"] < 1e-12
    assert s["embedded"] == 100
    assert s["matches_reference"] == 100
    r1 = solve_flat(Z, 1e-2)
    r2 = solve_flat(Z, 5e-3)
    ratio = max(map(abs, r1.delta_w)) / max(map(abs, r2.delta_w))
    assert 7.0 <= ratio <= 9.0
    _announce(
        8,
        f"100/100 solves converged (worst defect {s['worst_theta_defect']:.2e}), "
        f"all embedded with the reference sign list; correction ratio {ratio:.2f}",
    )


def test_09_robust_embedding():
    rng = np.random.default_rng(104)
    t = 1e-2
    P0 = deform(Z, t)
    bound = 1e-3 * t * t
    for _ in range(100):
        P = P0.copy()
        dw = rng.uniform(-bound, bound, size=3)
        for j in range(3):
            P[j, 2] += dw[j]
            P[7 - j, 2] += dw[j]
        assert embedding_clause(P).embedded == "yes"
    _announce(9, f"100 height perturbations of size {bound:.1e} keep the tent embedded")


def test_10_modulus_drift():
    d1 = shape.modular_distance(shape.modulus_of(solve_flat(Z, 1e-2).torus).tau, Z.z)
    d2 = shape.modular_distance(shape.modulus_of(solve_flat(Z, 5e-3).torus).tau, Z.z)
    assert d1 / d2 >= 1.8
    _announce(10, f"modulus drift {d1:.3e} -> {d2:.3e} (factor {d1 / d2:.2f}) as t halves")


def test_11_collapsibility():
    # toward the circular arc: the good trapezoid
    zeta = complex(0.25, math.sqrt(7) / 4)
    gp = shape.good_polygon(classify(zeta.real, zeta.imag))
    dists = []
    for eps in (0.1, 0.05, 0.02):
        zk = zeta + eps * (zeta - 1) / abs(zeta - 1)
        z = classify(zk.real, zk.imag)
        res = solve_flat(z, 1e-3 * boundary_distance(z.x, z.y))
        S = shape.normalize_similarity(res.torus, gp)
        dists.append(shape.hausdorff(S, gp.triangles(), n_samples=60))
    assert dists == sorted(dists, reverse=True)
    assert dists[-1] < 0.05

    # toward the hexagonal corner: the equilateral triangle
    corner = complex(0.5, math.sqrt(3) / 2)
    gpt = shape.good_polygon(classify(corner.real, corner.imag))
    inward = complex(0.25, 1.25) - corner
    inward /= abs(inward)
    dists_h = []
    for eps in (0.1, 0.05, 0.02):
        zk = corner + eps * inward
        z = classify(zk.real, zk.imag)
        res = solve_flat(z, 1e-3 * boundary_distance(z.x, z.y))
        S = shape.normalize_similarity(res.torus, gpt)
        dists_h.append(shape.hausdorff(S, gpt.triangles(), n_samples=60))
    assert dists_h == sorted(dists_h, reverse=True)
    assert dists_h[-1] < 0.05
    _announce(
        11,
        f"Hausdorff to trapezoid {[round(d, 4) for d in dists]}, "
        f"to triangle {[round(d, 4) for d in dists_h]}",
    )


def test_12_boundary_geometry():
    # left edge: 2y^2 x 2y rectangle
    y = 1.2
    P = golden_torus(classify(0.0, y))
    hull = shape.convex_hull(P)
    pts = hull.polygon_points(P)
    sides = sorted({round(float(np.linalg.norm(pts[i] - pts[(i + 1) % 4])), 9) for i in range(4)})
    assert abs(sides[0] - 2 * y) < 1e-12
    assert abs(sides[1] - 2 * y * y) < 1e-12

    # circular arc: three lengths sqrt(8x)
    for x in (0.1, 0.25, 0.4):
        P = golden_torus(classify(x, math.sqrt(2 * x - x * x)))
        target = math.sqrt(8 * x)
        for pair in ((0, 1), (7, 6), (1, 6)):
            assert abs(np.linalg.norm(P[pair[0]] - P[pair[1]]) - target) < 1e-12

    # hexagonal corner: equilateral triangle of side 2
    P = golden_torus(classify(0.5, math.sqrt(3) / 2))
    hull = shape.convex_hull(P)
    tri = hull.polygon_points(P)
    assert len(tri) == 3
    for i in range(3):
        assert abs(np.linalg.norm(tri[i] - tri[(i + 1) % 3]) - 2.0) < 1e-12
    _announce(12, "rectangle, trapezoid lengths, and triangle limits all exact to 1e-12")
