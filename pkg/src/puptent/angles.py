"""Cone angles, the flatness defect, and the height-variation Jacobian.

The cone angle at vertex j is the sum of the interior angles at j of the
six triangles incident to j.  Summing the angle identity over all 16
triangles gives theta_0 + ... + theta_7 = 16 pi for any vertex placement;
with the half-turn symmetry theta_j = theta_{7-j} this is the constraint
theta_0 + theta_1 + theta_2 + theta_3 = 8 pi, so the triple
(theta_0, theta_1, theta_2) determines all eight angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateEdgeError
from . import mesh

TAU_LEN = 1e-13

# Per vertex j: list of (neighbor_a, neighbor_b) for each incident triangle.
_CORNERS = [[] for _ in range(8)]
for _tri in mesh.TRIANGLES:
    for _k in range(3):
        _j = _tri[_k]
        _CORNERS[_j].append((_tri[(_k + 1) % 3], _tri[(_k + 2) % 3]))
for _j in range(8):
    assert len(_CORNERS[_j]) == 6

_CORNER_V = np.array([[j for j in range(8) for _ in range(6)]]).ravel()
_CORNER_A = np.array([a for j in range(8) for a, _ in _CORNERS[j]])
_CORNER_B = np.array([b for j in range(8) for _, b in _CORNERS[j]])


def cone_angles(P):
    """All eight cone angles of the torus, as an array of radians.

    Angles use atan2(|cross|, dot), which stays accurate for the nearly
    straight corners that occur deep in the golden valley.  Raises
    DegenerateEdgeError when an incident edge is shorter than
    TAU_LEN * bounding-box diameter.
    """
    p = np.asarray(P, dtype=float)
    u = p[_CORNER_A] - p[_CORNER_V]
    v = p[_CORNER_B] - p[_CORNER_V]
    nu = np.linalg.norm(u, axis=1)
    nv = np.linalg.norm(v, axis=1)
    floor = TAU_LEN * max(mesh.bbox_diameter(p), 1e-300)
    if np.any(nu < floor) or np.any(nv < floor):
        k = int(np.argmin(np.minimum(nu, nv)))
        raise DegenerateEdgeError(
            f"edge at vertex {int(_CORNER_V[k])} shorter than {floor:.3e}"
        )
    dots = np.einsum("ij,ij->i", u, v)
    crosses = np.linalg.norm(np.cross(u, v), axis=1)
    ang = np.arctan2(crosses, dots)
    return np.bincount(_CORNER_V, weights=ang, minlength=8)


@dataclass(frozen=True)
class FlatnessDefect:
    """Max deviation of theta_0..theta_2 from 2 pi, with the per-vertex
    breakdown."""

    defect: float
    per_vertex: tuple

    @property
    def is_flat(self):
        return self.defect == 0.0


def flatness_defect(P) -> FlatnessDefect:
    theta = cone_angles(P)
    dev = tuple(float(abs(t - 2.0 * math.pi)) for t in theta[:3])
    return FlatnessDefect(defect=max(dev), per_vertex=dev)


def apply_heights(P, w):
    """Copy of P with the free heights (w0, w1, w2) set, moving each
    rho-pair (j and 7-j) together.  Heights w3 = w4 stay put."""
    q = np.array(P, dtype=float, copy=True)
    for j in range(3):
        q[j, 2] = w[j]
        q[7 - j, 2] = w[j]
    return q


def angle_jacobian(P, h=None):
    """3x3 matrix of d(theta_i)/d(w_j) by central differences.

    Each height perturbation moves w_j and w_{7-j} jointly, matching the
    rho-symmetric height variation.  Default step is 1e-6 times the
    bounding-box diameter.
    """
    p = np.asarray(P, dtype=float)
    if h is None:
        h = 1e-6 * mesh.bbox_diameter(p)
    w0 = np.array([p[0, 2], p[1, 2], p[2, 2]])
    M = np.zeros((3, 3))
    for j in range(3):
        wp, wm = w0.copy(), w0.copy()
        wp[j] += h
        wm[j] -= h
        tp = cone_angles(apply_heights(p, wp))[:3]
        tm = cone_angles(apply_heights(p, wm))[:3]
        M[:, j] = (tp - tm) / (2.0 * h)
    return M


def jacobian_det_closed_form(x, y):
    """Closed form of det of the height-variation Jacobian at the golden
    tent with parameter x + iy: -64 sqrt(2) x^(3/2) g5 / (g3^4 g4)."""
    from .golden import gamma_values

    g = gamma_values(x, y)
    return -64.0 * math.sqrt(2.0) * x ** 1.5 * g.g5 / (g.g3 ** 4 * g.g4)
