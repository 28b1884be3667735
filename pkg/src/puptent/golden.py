"""The golden tent family over the bi-cusped modular domain.

The domain is the set of z = x + iy with y > 0 satisfying

    x >= 0,      1 - 2x >= 0,      -2x + x^2 + y^2 >= 0,

a hyperbolic triangle with cusps at 0 and infinity and interior vertex
h = 1/2 + (sqrt(3)/2) i.  Each interior z yields a flat, rho-symmetric,
immersed 8-vertex torus (the golden tent) with explicit algebraic vertex
coordinates, together with a planar chart of 16 triangles realizing the
same flat metric with lattice generators L1 = 4iy and L2 = z L1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from . import mesh

TAU_EDGE = 1e-12

INTERIOR = "interior"
LEFT_EDGE = "left-edge"
RIGHT_EDGE = "right-edge"
CIRCULAR_ARC = "circular-arc"
HEX_VERTEX = "hex-vertex"
SQUARE_POINT = "square-point"
OUTSIDE = "outside"

HEX_CORNER = (0.5, math.sqrt(3.0) / 2.0)


@dataclass(frozen=True)
class ModularParameter:
    """A point of the closed modular domain with its region tag."""

    x: float
    y: float
    region: str

    @property
    def z(self):
        return complex(self.x, self.y)

    @property
    def interior(self):
        return self.region == INTERIOR

    @property
    def on_boundary(self):
        return self.region not in (INTERIOR, OUTSIDE)


def domain_margins(x, y):
    """The three defining quantities (x, 1-2x, -2x+x^2+y^2)."""
    return x, 1.0 - 2.0 * x, -2.0 * x + x * x + y * y


def classify(x, y, tol=TAU_EDGE):
    """Region of (x, y) in the modular domain.

    Exact hits on the defining equalities (within ``tol``) classify as
    boundary.  The two distinguished boundary points get their own tags:
    the hexagonal corner (1/2, sqrt(3)/2) and the square point (0, 1).
    """
    if y <= 0:
        raise DomainError(f"require y > 0, got y={y}")
    q0, q1, q2 = domain_margins(x, y)
    if q0 < -tol or q1 < -tol or q2 < -tol:
        return ModularParameter(x, y, OUTSIDE)
    if abs(x - HEX_CORNER[0]) <= tol and abs(y - HEX_CORNER[1]) <= tol:
        return ModularParameter(x, y, HEX_VERTEX)
    if abs(x) <= tol and abs(y - 1.0) <= tol:
        return ModularParameter(x, y, SQUARE_POINT)
    if q0 <= tol:
        return ModularParameter(x, y, LEFT_EDGE)
    if q1 <= tol:
        return ModularParameter(x, y, RIGHT_EDGE)
    if q2 <= tol:
        return ModularParameter(x, y, CIRCULAR_ARC)
    return ModularParameter(x, y, INTERIOR)


def boundary_distance(x, y):
    """Euclidean distance from (x, y) to the domain boundary."""
    arc = math.hypot(x - 1.0, y) - 1.0
    return min(x, 0.5 - x, arc)


@dataclass(frozen=True)
class GammaValues:
    """The six polynomial factors, all strictly positive on the interior."""

    g0: float
    g1: float
    g2: float
    g3: float
    g4: float
    g5: float

    def as_tuple(self):
        return (self.g0, self.g1, self.g2, self.g3, self.g4, self.g5)

    @property
    def all_positive(self):
        return all(g > 0 for g in self.as_tuple())


def gamma_values(x, y) -> GammaValues:
    x2, y2 = x * x, y * y
    g0 = 1.0 - 2.0 * x
    g1 = -2.0 * x + x2 + y2
    g2 = 2.0 * x - x2 + y2
    g3 = 2.0 * x + x2 + y2
    g4 = 2.0 * x * g0 + (2.0 * x + 1.0) * (x2 + y2)
    g5 = 2.0 * x2 * g0 + x2 * g3 + y2 * g3
    return GammaValues(g0, g1, g2, g3, g4, g5)


def gammas(z: ModularParameter) -> GammaValues:
    return gamma_values(z.x, z.y)


def golden_torus(z: ModularParameter) -> np.ndarray:
    """Vertex coordinates of the golden tent at z, as an (8, 3) array.

    Uses the nonnegative branch of sqrt(8x); x < 0 (and points outside
    the closed domain) are rejected.  The result is rho-symmetric with
    w_3 = w_4 = 0.
    """
    if z.region == OUTSIDE:
        raise DomainError(f"({z.x}, {z.y}) lies outside the closed domain")
    x, y = z.x, z.y
    if x < 0:
        raise DomainError(f"sqrt(8x) undefined for x={x} < 0")
    P = np.zeros((8, 3))
    P[0] = (x * (1.0 - 2.0 * x), y * (1.0 - 2.0 * x), y * math.sqrt(8.0 * x))
    P[2] = (2.0 * x - x * x - y * y, 0.0, 0.0)
    P[1] = P[2] - (x, y, 0.0)
    P[3] = P[2] + (x, y, 0.0)
    for j in range(4, 8):
        P[j] = mesh.rho(P[7 - j])
    return P


def _chart_triangles(Q0, Q1, Q2, Q3, L1, L2):
    """The 8 listed chart triangles as (labels, coordinates) pairs."""
    return [
        ((0, 1, 6), (Q0, Q1 + L1, -Q1 + L2)),
        ((1, 0, 3), (Q1 + L1, Q0, Q3)),
        ((3, 4, 1), (Q3, -Q3 + L1, Q1 + L1)),
        ((0, 7, 2), (Q0, -Q0 + L2, Q2)),
        ((2, 3, 0), (Q2, Q3, Q0)),
        ((3, 2, 5), (Q3, Q2, -Q2)),
        ((5, 6, 3), (-Q2, -Q1, Q3)),
        ((6, 5, 0), (-Q1, -Q2, Q0 - L2)),
    ]


@dataclass(frozen=True)
class IntrinsicChart:
    """Planar realization of the flat metric: 16 labeled triangles in C
    plus the lattice generators they tile under."""

    Q: tuple
    L1: complex
    L2: complex
    triangles: tuple  # ((i, j, k), (z_i, z_j, z_k)) per triangle
    degenerate_triangles: tuple = field(default=())

    @property
    def degenerate(self):
        return len(self.degenerate_triangles) > 0

    def lattice_area(self):
        return abs((self.L1.conjugate() * self.L2).imag)

    def triangle_area(self, idx):
        _, (za, zb, zc) = self.triangles[idx]
        return abs(((zb - za).conjugate() * (zc - za)).imag) / 2.0


def intrinsic_chart(z: ModularParameter, tau_area=1e-10) -> IntrinsicChart:
    """Planar chart of the golden tent's flat metric at z.

    Eight triangles are listed explicitly; the other eight are their
    images under the relabeling j -> 7-j combined with the point map
    zeta -> -zeta.  Triangles whose area falls below tau_area * scale^2
    are flagged as degenerate (expected on the domain boundary).
    """
    x, y = z.x, z.y
    zc = complex(x, y)
    Q2 = complex(2.0 * x - x * x - y * y, 0.0)
    Q1 = Q2 - zc
    Q3 = Q2 + zc
    Q0 = complex(-2.0 * x * x - 2.0 * y * y, 0.0) + zc
    L1 = 4.0j * y
    L2 = zc * L1
    tris = list(_chart_triangles(Q0, Q1, Q2, Q3, L1, L2))
    for labels, coords in list(tris[:8]):
        mirror_labels = tuple(7 - j for j in labels)
        mirror_coords = tuple(-w for w in coords)
        tris.append((mirror_labels, mirror_coords))
    chart = IntrinsicChart(
        Q=(Q0, Q1, Q2, Q3), L1=L1, L2=L2, triangles=tuple(tris)
    )
    scale2 = max(abs(L1), abs(L2)) ** 2
    degenerate = tuple(
        i for i in range(16) if chart.triangle_area(i) < tau_area * scale2
    )
    if degenerate:
        chart = IntrinsicChart(
            Q=chart.Q, L1=L1, L2=L2, triangles=chart.triangles,
            degenerate_triangles=degenerate,
        )
    return chart


def _lattice_offset(delta, L1, L2):
    """Best integer pair (n, m) with delta ~ n L1 + m L2, plus residual."""
    det = (L1.conjugate() * L2).imag
    n_f = (delta.conjugate() * L2).imag / det
    m_f = (L1.conjugate() * delta).imag / det
    n, m = round(n_f), round(m_f)
    res = abs(delta - n * L1 - m * L2)
    return n, m, res


@dataclass(frozen=True)
class IsometryReport:
    """Outcome of checking the chart against the 3-space tent."""

    max_metric_error: float
    worst_edge: tuple
    max_gluing_error: float
    worst_glued_edge: tuple
    tol: float

    @property
    def passed(self):
        return self.max_metric_error <= self.tol and self.max_gluing_error <= self.tol


def verify_isometry(z: ModularParameter, tol=1e-12) -> IsometryReport:
    """Check that planar chart edge lengths match 3-space edge lengths,
    and that each combinatorial edge glues consistently across its two
    chart triangles up to a lattice translation."""
    P = golden_torus(z)
    chart = intrinsic_chart(z)
    max_err, worst = 0.0, None
    placements = {}  # edge (i, j) -> list of (z_i, z_j)
    for labels, coords in chart.triangles:
        for s, t in ((0, 1), (1, 2), (2, 0)):
            i, j = labels[s], labels[t]
            planar = abs(coords[s] - coords[t])
            space = float(np.linalg.norm(P[i] - P[j]))
            err = abs(planar - space)
            if err > max_err:
                max_err, worst = err, (tuple(sorted((i, j))), planar, space)
            key = tuple(sorted((i, j)))
            zi, zj = (coords[s], coords[t]) if i < j else (coords[t], coords[s])
            placements.setdefault(key, []).append((zi, zj))
    max_glue, worst_glue = 0.0, None
    for key, copies in placements.items():
        if len(copies) != 2:
            raise AssertionError(f"edge {key} appears {len(copies)} times")
        (a1, b1), (a2, b2) = copies
        n, m, res_a = _lattice_offset(a2 - a1, chart.L1, chart.L2)
        res_b = abs((b2 - b1) - (n * chart.L1 + m * chart.L2))
        err = max(res_a, res_b)
        if err > max_glue:
            max_glue, worst_glue = err, (key, (n, m))
    return IsometryReport(
        max_metric_error=max_err,
        worst_edge=worst,
        max_gluing_error=max_glue,
        worst_glued_edge=worst_glue,
        tol=tol,
    )
