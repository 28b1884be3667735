import math

import numpy as np
import pytest

from puptent import angles, golden, mesh
from puptent.embedding import reference_tent
from puptent.errors import DegenerateEdgeError

TWO_PI = 2.0 * math.pi


def random_rho_torus(rng):
    while True:
        P = np.zeros((8, 3))
        P[:4] = rng.uniform(-1.0, 1.0, size=(4, 3))
        P[3, 2] = 0.0
        for j in range(4, 8):
            P[j] = mesh.rho(P[7 - j])
        lengths = mesh.edge_lengths(P)
        areas = [
            np.linalg.norm(np.cross(P[t[1]] - P[t[0]], P[t[2]] - P[t[0]]))
            for t in mesh.TRIANGLES
        ]
        if lengths.min() > 0.05 and min(areas) > 1e-3:
            return P


def test_golden_tent_cone_angles_are_two_pi():
    th = angles.cone_angles(golden.golden_torus(golden.classify(0.25, 1.0)))
    assert th == pytest.approx(np.full(8, TWO_PI), abs=1e-12)


def test_reference_tent_nearly_flat():
    d = angles.flatness_defect(reference_tent())
    assert d.defect < 1e-10


def test_angle_sum_identity_random_tori():
    rng = np.random.default_rng(11)
    for _ in range(200):
        P = random_rho_torus(rng)
        th = angles.cone_angles(P)
        assert th.sum() == pytest.approx(16.0 * math.pi, abs=1e-10)
        assert th[:4].sum() == pytest.approx(8.0 * math.pi, abs=1e-10)
        # half-turn symmetry pairs angles exactly
        assert th[:4] == pytest.approx(th[4:][::-1], abs=1e-12)


def test_angle_sum_identity_without_symmetry():
    rng = np.random.default_rng(12)
    P = rng.uniform(-1, 1, size=(8, 3))
    th = angles.cone_angles(P)
    assert th.sum() == pytest.approx(16.0 * math.pi, abs=1e-10)


def test_cone_angles_rigid_motion_and_scale_invariance():
    rng = np.random.default_rng(13)
    P = random_rho_torus(rng)
    th = angles.cone_angles(P)
    ang = 0.7
    R = np.array(
        [
            [math.cos(ang), -math.sin(ang), 0],
            [math.sin(ang), math.cos(ang), 0],
            [0, 0, 1],
        ]
    )
    moved = (P @ R.T) * 2.5 + np.array([0.3, -1.0, 4.0])
    assert angles.cone_angles(moved) == pytest.approx(th, abs=1e-11)


def test_planar_vertices_have_defects_but_obey_sum():
    rng = np.random.default_rng(14)
    P = np.zeros((8, 3))
    P[:, :2] = rng.uniform(-1, 1, size=(8, 2))
    th = angles.cone_angles(P)
    assert th.sum() == pytest.approx(16.0 * math.pi, abs=1e-10)
    d = angles.flatness_defect(P)
    assert d.defect > 0.1


def test_degenerate_edge_raises():
    P = golden.golden_torus(golden.classify(0.5, math.sqrt(3) / 2))
    with pytest.raises(DegenerateEdgeError):
        angles.cone_angles(P)


def test_flatness_defect_fields():
    P = golden.golden_torus(golden.classify(0.3, 1.1))
    d = angles.flatness_defect(P)
    assert d.defect == max(d.per_vertex)
    assert len(d.per_vertex) == 3


class TestJacobian:
    def test_determinant_closed_form_at_center(self):
        P = golden.golden_torus(golden.classify(0.25, 1.0))
        M = angles.angle_jacobian(P)
        ref = angles.jacobian_det_closed_form(0.25, 1.0)
        assert ref == pytest.approx(-1.7734603, abs=1e-6)
        assert np.linalg.det(M) == pytest.approx(ref, rel=1e-6)

    def test_determinant_closed_form_random_interior(self):
        rng = np.random.default_rng(15)
        for _ in range(20):
            x = rng.uniform(0.05, 0.45)
            y = rng.uniform(math.sqrt(2 * x - x * x) + 0.08, 2.0)
            P = golden.golden_torus(golden.classify(float(x), float(y)))
            det = np.linalg.det(angles.angle_jacobian(P))
            ref = angles.jacobian_det_closed_form(float(x), float(y))
            assert det == pytest.approx(ref, rel=1e-6)
            assert det < 0  # every closed-form factor is positive but the prefactor

    def test_symmetric_at_golden_points(self):
        rng = np.random.default_rng(16)
        for _ in range(20):
            x = rng.uniform(0.05, 0.45)
            y = rng.uniform(math.sqrt(2 * x - x * x) + 0.08, 2.0)
            M = angles.angle_jacobian(golden.golden_torus(golden.classify(x, y)))
            scale = np.max(np.abs(M))
            assert np.max(np.abs(M - M.T)) < 1e-6 * scale

    def test_finite_difference_second_order_convergence(self):
        P = golden.golden_torus(golden.classify(0.25, 1.0))
        ref = angles.jacobian_det_closed_form(0.25, 1.0)
        errs = []
        for h in (1e-3, 5e-4, 2.5e-4):
            errs.append(abs(np.linalg.det(angles.angle_jacobian(P, h=h)) - ref))
        order = math.log(errs[0] / errs[2]) / math.log(4.0)
        assert order > 1.7


def test_apply_heights_moves_pairs_jointly():
    P = golden.golden_torus(golden.classify(0.25, 1.0))
    Q = angles.apply_heights(P, [0.9, 0.1, -0.2])
    assert Q[0, 2] == Q[7, 2] == 0.9
    assert Q[1, 2] == Q[6, 2] == 0.1
    assert Q[2, 2] == Q[5, 2] == -0.2
    assert Q[3, 2] == Q[4, 2] == 0.0
    assert np.array_equal(Q[:, :2], P[:, :2])
