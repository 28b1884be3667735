"""The special deformation of a golden tent.

For interior z the map t -> P(z, t) moves vertices 0, 1, 2 (and their
half-turn partners 7, 6, 5) while fixing vertices 3 and 4:

    u0 += t            v0 += m t           w0 += a0 t^2
    u1 += X1 t^2       v1 += X2 t^2        w1 += a1 t^2
    u2 unchanged       v2 += X1 t^2        w2 += a2 t^2

The coefficients m, a0, a1, a2 kill the first and second t-derivatives of
every cone angle at t = 0, so the deformed torus is flat to third order.
The pair (X1, X2) is free as far as flatness goes; the default closed
forms below place it at the barycenter of the winning triangle of the
second-order line arrangement (see order2_line_arrangement), which is
what makes the deformation robustly embedded.

The coefficient polynomials are transcribed term by term in their printed
factored forms; the vanishing of the first and second angle derivatives
is the acceptance oracle for the transcription.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, ClusterError
from . import mesh
from .golden import ModularParameter, GammaValues, gammas, golden_torus


def _alpha_table(x, y, g: GammaValues):
    """The nine numerator polynomials for (a0, a1, a2) as rows
    (alpha_j, alpha_j1, alpha_j2)."""
    g0, g1, g2, g3 = g.g0, g.g1, g.g2, g.g3
    x2, x3, x4, x5, x6, x7 = x**2, x**3, x**4, x**5, x**6, x**7
    y2, y3, y4, y5, y6 = y**2, y**3, y**4, y**5, y**6

    a_0 = 8 * x * y * (-4 * x2 + 9 * x3 - 7 * x4 - 3 * x * y2 - y4) * g1
    a_01 = -4 * y * g0 * g1 * g2**2 * g3**2
    a_02 = 2 * (x - 2 * y2) * g0 * g2**2 * g3**2

    a_1 = 8 * x * y * (x2 + y2) * (2 * x - 3 * x2 + y2) * g1
    a_11 = -4 * y * (x4 + 6 * x2 + 4 * x * y2 + 2 * x2 * y2 + y4) * g0 * g1 * g2**2
    a_12 = 2 * (
        2 * x7 - 9 * x6 + 12 * x5 - 4 * x4
        + 6 * x5 * y2 - 11 * x4 * y2 - 12 * x3 * y2 - 12 * x2 * y2
        + 6 * x3 * y4 - 3 * x2 * y4 - 8 * x * y4
        + 2 * x * y6 - y6
    ) * g0 * g2**2

    a_2 = 4 * x * y * (-4 * x2 + 6 * x3 - 5 * x4 - 2 * x * y2 - 6 * x2 * y2 - y4) * g1
    a_21 = 4 * x * (
        2 * x2 - 2 * x3 + x4 - 2 * x * y - x2 * y
        + 2 * x * y2 + 2 * x2 * y2 - y3 + y4
    ) * g0 * g1 * g2**2
    a_22 = (2 * x3 - x4 - 6 * x * y2 - 2 * x2 * y2 - y4) * g0 * g2**2 * g3

    return ((a_0, a_01, a_02), (a_1, a_11, a_12), (a_2, a_21, a_22))


def _big_gamma(x, y, g: GammaValues):
    g0, g1 = g.g0, g.g1
    x2, x3, x4, x5, x6, x7 = x**2, x**3, x**4, x**5, x**6, x**7
    y2, y3, y4, y5, y6, y7 = y**2, y**3, y**4, y**5, y**6, y**7
    return (
        y7
        + 2 * g0 * x * y6
        + 8 * x * y5 + 7 * x2 * y5
        + 16 * x2 * y4 + 6 * g0 * x3 * y4
        + 11 * x2 * y3 + g0 * x2 * y3 + 6 * x4 * y3
        + 24 * x3 * y2
        + 24 * x4 * y2 + 16 * x5 * y2 + 6 * g0 * x5 * y2
        + 10 * g1 * x3 * y + 5 * g1 * x4 * y
        + 1.5 * g0 * x5 + 6 * g0**2 * x5 + 0.5 * g0**3 * x5
        + 6 * g0**2 * x6 + 12 * g0 * x7
    )


def _default_X(x, y, g: GammaValues):
    g0, g1, g2, g3 = g.g0, g.g1, g.g2, g.g3
    x2, x3, x4, x5, x6, x7, x8, x9 = (x**k for k in range(2, 10))
    y2, y3, y4, y5, y6, y7, y8 = (y**k for k in range(2, 9))
    Gamma = _big_gamma(x, y, g)
    denom = 3 * g0 * g2**2 * g3 * Gamma
    n1 = (
        40 * x5 - 60 * x6 + 30 * x7 + 25 * x8 - 15 * x9
        - 24 * x3 * y2 + 24 * x4 * y2 + 50 * x5 * y2 + 54 * x6 * y2 - 48 * x7 * y2
        + 20 * x2 * y4 + 42 * x3 * y4 + 36 * x4 * y4 - 54 * x5 * y4
        + 22 * x * y6 + 10 * x2 * y6 - 24 * x3 * y6
        + 3 * y8 - 3 * x * y8
    )
    n2 = (
        -48 * x4 + 72 * x5 - 48 * x6 - 18 * x7
        - 20 * x5 * y - 15 * x6 * y
        - 24 * x3 * y2 - 48 * x4 * y2 - 30 * x5 * y2
        - 32 * x2 * y3 - 40 * x3 * y3 - 33 * x4 * y3
        - 6 * x3 * y4
        - 20 * x * y5 - 21 * x2 * y5
        + 6 * x * y6 - 3 * y7
    )
    X1 = 4 * x * y * n1 / denom
    X2 = 4 * x * y * g1 * n2 / denom
    return X1, X2, Gamma


@dataclass(frozen=True)
class DeformationCoefficients:
    """All closed-form coefficients of the special deformation at one z."""

    x: float
    y: float
    gammas: GammaValues
    m: float
    X1: float
    X2: float
    Gamma: float
    alpha: tuple  # rows (alpha_j, alpha_j1, alpha_j2) for j = 0, 1, 2
    a: tuple  # (a0, a1, a2)

    def with_X(self, X1, X2):
        """Same z, but with the free pair (X1, X2) overridden; the height
        coefficients a_j are recomputed (they are affine in X1, X2)."""
        a = _solve_heights(self.x, self.y, self.gammas, self.alpha, X1, X2)
        return replace(self, X1=X1, X2=X2, a=a)


def _solve_heights(x, y, g, alpha, X1, X2):
    denom = 4.0 * math.sqrt(2.0 * x) * g.g0 * g.g1 * g.g2**2 * g.g5
    return tuple(
        (al + al1 * X1 + al2 * X2) / denom for al, al1, al2 in alpha
    )


def deformation_coefficients(z: ModularParameter, X=None) -> DeformationCoefficients:
    """Evaluate every deformation coefficient at interior z.

    ``X`` overrides the default (X1, X2); the height coefficients a_j are
    affine in that pair and adjust accordingly.  Boundary parameters are
    rejected since gamma_0, gamma_1 and x appear in denominators.
    """
    if not z.interior:
        raise DomainError(
            f"deformation needs an interior parameter, got region={z.region!r}"
        )
    x, y = z.x, z.y
    g = gammas(z)
    m = -2.0 * x * y / g.g2
    alpha = _alpha_table(x, y, g)
    X1, X2, Gamma = _default_X(x, y, g)
    if X is not None:
        X1, X2 = float(X[0]), float(X[1])
    a = _solve_heights(x, y, g, alpha, X1, X2)
    return DeformationCoefficients(
        x=x, y=y, gammas=g, m=m, X1=X1, X2=X2, Gamma=Gamma, alpha=alpha, a=a
    )


def deform(z: ModularParameter, t: float, coeffs: DeformationCoefficients = None):
    """The deformed torus P(z, t); t = 0 returns the golden tent exactly."""
    if t < 0:
        raise DomainError(f"deformation parameter t must be >= 0, got {t}")
    P = golden_torus(z)
    if t == 0.0:
        return P
    c = coeffs if coeffs is not None else deformation_coefficients(z)
    t2 = t * t
    P[0, 0] += t
    P[0, 1] += c.m * t
    P[0, 2] += c.a[0] * t2
    P[1, 0] += c.X1 * t2
    P[1, 1] += c.X2 * t2
    P[1, 2] += c.a[1] * t2
    P[2, 1] += c.X1 * t2
    P[2, 2] += c.a[2] * t2
    for j in range(4, 8):
        P[j] = mesh.rho(P[7 - j])
    return P


# ---------------------------------------------------------------------------
# Second-order line arrangement in the (X1, X2)-plane


def _order2_quadruples(z, coeffs):
    """Indices of quadruples whose second-order determinant coefficient
    depends on (X1, X2), found numerically (they are the order-2 cases)."""
    from .embedding import classify_quadruples

    return classify_quadruples(z, coeffs=coeffs).order2


def _affine_c2(z, quad_idx, probes):
    """Fit c2(X1, X2) = c + b1 X1 + b2 X2 per quadruple from 3 probe
    evaluations of the determinant polynomial."""
    from .embedding import det_polynomial

    rows = []
    for X in probes:
        c = deformation_coefficients(z, X=X)
        rows.append([det_polynomial(z, q, coeffs=c).coefficients[2] for q in quad_idx])
    V = np.array([[1.0, X[0], X[1]] for X in probes])
    return np.linalg.solve(V, np.array(rows))  # rows: (const, b1, b2) per column


@dataclass(frozen=True)
class LineArrangement:
    """Zero lines of the 19 second-order coefficients, clustered into the
    distinct lines, with the cell containing the default (X1, X2)."""

    lines: tuple  # (n1, n2, c) normalized, one per distinct line
    line_of_quadruple: dict  # quadruple -> index into lines
    X: tuple  # the default (X1, X2)
    min_line_distance: float
    cell_vertices: tuple  # polygon of the containing cell (possibly clipped)
    cell_bounded: bool
    signs_match_reference: bool

    @property
    def is_triangle(self):
        return self.cell_bounded and len(self.cell_vertices) == 3

    @property
    def strictly_interior(self):
        return self.min_line_distance > 0.0


def _clip_halfplane(poly, n1, n2, c):
    """Clip convex polygon by n1 u + n2 v + c >= 0 (Sutherland-Hodgman)."""
    out = []
    k = len(poly)
    for i in range(k):
        p, q = poly[i], poly[(i + 1) % k]
        fp = n1 * p[0] + n2 * p[1] + c
        fq = n1 * q[0] + n2 * q[1] + c
        if fp >= 0:
            out.append(p)
        if (fp > 0 > fq) or (fp < 0 < fq):
            s = fp / (fp - fq)
            out.append((p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])))
    return out


def _dedupe_polygon(poly, tol):
    out = []
    for p in poly:
        if not out or math.hypot(p[0] - out[-1][0], p[1] - out[-1][1]) > tol:
            out.append(p)
    if len(out) > 1 and math.hypot(out[0][0] - out[-1][0], out[0][1] - out[-1][1]) <= tol:
        out.pop()
    return out


def order2_line_arrangement(z: ModularParameter, tau_line=1e-9) -> LineArrangement:
    """Verify the placement of the default (X1, X2).

    Recovers each of the 19 (X1, X2)-dependent second-order coefficients
    as an affine function by probing three (X1, X2) values, clusters
    their zero lines into the distinct ones (expected: 7), and checks
    that the default point sits strictly inside a cell whose sign
    pattern equals the reference sign list on those quadruples.
    """
    from .embedding import reference_signs
    from . import mesh as _mesh

    coeffs = deformation_coefficients(z)
    quad_idx = _order2_quadruples(z, coeffs)
    probes = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]
    aff = _affine_c2(z, quad_idx, probes)  # shape (3, n_quads): c, b1, b2

    # Normalize each zero line (b1, b2, c) to unit normal, first nonzero
    # component positive, then cluster.
    lines = []
    line_of = {}
    norms = []
    for k, q in enumerate(quad_idx):
        c, b1, b2 = aff[0, k], aff[1, k], aff[2, k]
        nrm = math.hypot(b1, b2)
        if nrm == 0.0:
            raise ClusterError(f"coefficient of quadruple {q} does not depend on X")
        v = (b1 / nrm, b2 / nrm, c / nrm)
        if v[0] < 0 or (v[0] == 0 and v[1] < 0):
            v = (-v[0], -v[1], -v[2])
        norms.append((q, v))
    for q, v in norms:
        hit = None
        for i, u in enumerate(lines):
            d = max(abs(v[0] - u[0]), abs(v[1] - u[1]), abs(v[2] - u[2]))
            if d <= 1e-6:
                if d > tau_line * max(1.0, abs(u[2])):
                    raise ClusterError(
                        f"lines for quadruple {q} nearly but not exactly coincide (gap {d:.2e})"
                    )
                hit = i
                break
        if hit is None:
            lines.append(v)
            hit = len(lines) - 1
        line_of[q] = hit

    X = (coeffs.X1, coeffs.X2)
    dmin = min(abs(u[0] * X[0] + u[1] * X[1] + u[2]) for u in lines)

    # Signed reference check: c2 sign at the default X per quadruple.
    ref = reference_signs()
    ok = True
    for k, q in enumerate(quad_idx):
        val = aff[0, k] + aff[1, k] * X[0] + aff[2, k] * X[1]
        qi = _mesh.QUADRUPLES.index(q)
        if ref[qi] != (1 if val > 0 else -1):
            ok = False
            break

    # The containing cell: intersect the half-planes that contain X.
    span = 10.0 * max(1.0, abs(X[0]), abs(X[1]))
    poly = [(-span, -span), (span, -span), (span, span), (-span, span)]
    for u in lines:
        s = u[0] * X[0] + u[1] * X[1] + u[2]
        n1, n2, c = (u if s >= 0 else (-u[0], -u[1], -u[2]))
        poly = _clip_halfplane(poly, n1, n2, c)
        if not poly:
            break
    poly = _dedupe_polygon(poly, 1e-9 * span)
    bounded = all(max(abs(p[0]), abs(p[1])) < span * 0.999 for p in poly)

    return LineArrangement(
        lines=tuple(lines),
        line_of_quadruple=line_of,
        X=X,
        min_line_distance=dmin,
        cell_vertices=tuple(poly),
        cell_bounded=bounded,
        signs_match_reference=ok,
    )
