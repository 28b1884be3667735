"""Combinatorics of the uniform 8-vertex torus triangulation and the
orientation-determinant kernel.

The triangulation is fixed once and for all: vertices are labeled 0..7,
the 16 triangles are (a, a+1, a+3) and (a, a+2, a+3) mod 8, and the only
absent edges are the four diagonals (a, a+4).  Every vertex has degree 6.
Tori over this triangulation are stored as plain (8, 3) float arrays of
vertex coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

N_VERTICES = 8
N_TRIANGLES = 16
N_EDGES = 24
N_QUADRUPLES = 70


def _canonical_triangles():
    tris = []
    for a in range(8):
        tris.append(tuple(sorted((a, (a + 1) % 8, (a + 3) % 8))))
    for a in range(8):
        tris.append(tuple(sorted((a, (a + 2) % 8, (a + 3) % 8))))
    return tuple(tris)


@dataclass(frozen=True)
class Triangulation8:
    """The uniform triangulation: 16 triangles, 24 edges, 4 missing edges."""

    triangles: tuple
    edges: tuple
    missing_edges: tuple

    def vertex_degree(self, j):
        return sum(1 for e in self.edges if j in e)

    def incident_triangles(self, j):
        return [i for i, t in enumerate(self.triangles) if j in t]


def build_triangulation() -> Triangulation8:
    """Return the canonical uniform 8-vertex triangulation."""
    tris = _canonical_triangles()
    edges = set()
    for t in tris:
        for i, j in combinations(t, 2):
            edges.add((i, j))
    edges = tuple(sorted(edges))
    all_pairs = set(combinations(range(8), 2))
    missing = tuple(sorted(all_pairs - set(edges)))
    return Triangulation8(triangles=tris, edges=edges, missing_edges=missing)


TRIANGULATION = build_triangulation()
TRIANGLES = TRIANGULATION.triangles
EDGES = TRIANGULATION.edges
QUADRUPLES = tuple(combinations(range(8), 4))

EDGE_SHARING = "edge-sharing"
VERTEX_SHARING = "vertex-sharing"
DISJOINT = "disjoint"


@dataclass(frozen=True)
class TrianglePairClass:
    """One of the 120 unordered triangle pairs, tagged by shared labels."""

    pair: tuple
    kind: str
    shared: tuple


def classify_pairs(tri: Triangulation8 = TRIANGULATION):
    """Classify all C(16,2) triangle pairs by shared-vertex count.

    Counts come out as 24 edge-sharing, 72 vertex-sharing, 24 disjoint.
    """
    out = []
    for i, j in combinations(range(len(tri.triangles)), 2):
        shared = tuple(sorted(set(tri.triangles[i]) & set(tri.triangles[j])))
        kind = {2: EDGE_SHARING, 1: VERTEX_SHARING, 0: DISJOINT}[len(shared)]
        out.append(TrianglePairClass(pair=(i, j), kind=kind, shared=shared))
    return out


def tetra_det(P, a, b, c, d):
    """Six times the signed volume of the tetrahedron (P_a, P_b, P_c, P_d).

    Equals det(P_b - P_a, P_c - P_a, P_d - P_a).  Zero is a legal value;
    interpreting near-zero values is the caller's concern.
    """
    p = np.asarray(P, dtype=float)
    e1 = p[b] - p[a]
    e2 = p[c] - p[a]
    e3 = p[d] - p[a]
    return float(
        e1[0] * (e2[1] * e3[2] - e2[2] * e3[1])
        - e1[1] * (e2[0] * e3[2] - e2[2] * e3[0])
        + e1[2] * (e2[0] * e3[1] - e2[1] * e3[0])
    )


def tetra_det_exact(P, a, b, c, d):
    """tetra_det over exact rationals (inputs converted per coordinate).

    Floats are dyadic rationals, so the conversion is lossless.  Used as
    the reference path for sign decisions near zero.
    """
    rows = []
    base = [Fraction(float(P[a][k])) for k in range(3)]
    for v in (b, c, d):
        rows.append([Fraction(float(P[v][k])) - base[k] for k in range(3)])
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = rows
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0)


_QA = np.array([q[0] for q in QUADRUPLES])
_QB = np.array([q[1] for q in QUADRUPLES])
_QC = np.array([q[2] for q in QUADRUPLES])
_QD = np.array([q[3] for q in QUADRUPLES])


def all_tetra_dets(P):
    """All 70 quadruple determinants as one vector (quadruples in
    lexicographic order over ascending (a, b, c, d))."""
    p = np.asarray(P, dtype=float)
    e1 = p[_QB] - p[_QA]
    e2 = p[_QC] - p[_QA]
    e3 = p[_QD] - p[_QA]
    return np.einsum("ij,ij->i", e1, np.cross(e2, e3))


def rho(points):
    """The half-turn (u, v, w) -> (-u, -v, w) applied row-wise."""
    p = np.asarray(points, dtype=float)
    out = p.copy()
    out[..., 0] *= -1.0
    out[..., 1] *= -1.0
    return out


def rho_defect(P):
    """Max deviation from the symmetry P_j = rho(P_{7-j})."""
    p = np.asarray(P, dtype=float)
    return float(np.max(np.abs(p - rho(p[::-1]))))


def is_rho_symmetric(P, tol=1e-12):
    return rho_defect(P) <= tol * max(1.0, bbox_diameter(P))

def is_normalized(P, tol=1e-12):
    """Height normalization: w_3 = w_4 = 0."""
    p = np.asarray(P, dtype=float)
    return abs(p[3, 2]) <= tol and abs(p[4, 2]) <= tol


def bbox_diameter(P):
    p = np.asarray(P, dtype=float)
    return float(np.linalg.norm(p.max(axis=0) - p.min(axis=0)))


def edge_lengths(P):
    """Lengths of the 24 edges, keyed in EDGES order."""
    p = np.asarray(P, dtype=float)
    return np.array([np.linalg.norm(p[i] - p[j]) for i, j in EDGES])


def triangle_coordinates(P):
    """(16, 3, 3) array: per triangle, its three vertex positions."""
    p = np.asarray(P, dtype=float)
    return p[np.array(TRIANGLES)]
