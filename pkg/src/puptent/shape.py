"""Extrinsic and intrinsic shape diagnostics.

Extrinsic: convex hulls of the 8 vertices (with the on-hull mesh
triangles), the good polygons that collapsing tents limit to, sampled
Hausdorff distance between triangle sets, and similarity normalization.

Intrinsic: the modulus map.  A flat torus's metric is developed into the
plane triangle by triangle using only 3-space edge lengths; the holonomy
translations of the dual non-tree cycles generate the period lattice,
whose reduced basis ratio is the modulus.  Moduli are compared by
hyperbolic distance minimized over unimodular integer transformations
and the mirror tau -> -conj(tau).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, DomainError, NonFlatError
from . import mesh
from .angles import flatness_defect
from .golden import (
    CIRCULAR_ARC,
    HEX_VERTEX,
    LEFT_EDGE,
    SQUARE_POINT,
    ModularParameter,
    golden_torus,
)

TAU_HULL = 1e-9


# ---------------------------------------------------------------------------
# Convex hull of the 8 vertices


@dataclass(frozen=True)
class Hull:
    """Convex hull of the vertex set.

    For full-dimensional input, ``faces`` lists the supporting planes as
    (normal, offset, vertex index tuple).  For planar input the hull is
    the 2D polygon ``polygon`` (vertex indices in cyclic order).
    """

    dimension: int
    vertices: tuple  # indices of hull vertices
    faces: tuple
    polygon: tuple
    on_hull_triangles: tuple  # indices into mesh.TRIANGLES

    def polygon_points(self, P):
        return np.asarray(P, dtype=float)[list(self.polygon)]


def _planar_basis(p, tol):
    """Orthonormal (origin, e1, e2, normal) if the points are coplanar."""
    c = p.mean(axis=0)
    q = p - c
    _, s, vt = np.linalg.svd(q, full_matrices=False)
    if s[2] > tol:
        return None
    return c, vt[0], vt[1], vt[2]


def _hull_2d(pts2):
    """Andrew monotone chain on (n, 2) points; returns index cycle."""
    order = sorted(range(len(pts2)), key=lambda i: (pts2[i][0], pts2[i][1]))

    def cross(o, a, b):
        return (pts2[a][0] - pts2[o][0]) * (pts2[b][1] - pts2[o][1]) - (
            pts2[a][1] - pts2[o][1]
        ) * (pts2[b][0] - pts2[o][0])

    lower, upper = [], []
    for i in order:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    for i in reversed(order):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return tuple(lower[:-1] + upper[:-1])


def convex_hull(P, tau_hull=TAU_HULL) -> Hull:
    """Hull of the 8 points by exhaustive supporting-plane search.

    A mesh triangle is on-hull when its three vertices all lie on one
    supporting plane (within tau_hull * scale).  Planar inputs fall back
    to the 2D hull polygon in their common plane.
    """
    p = np.asarray(P, dtype=float)
    n = len(p)
    scale = max(mesh.bbox_diameter(p), 1e-300)
    tol = tau_hull * scale

    planar = _planar_basis(p, tol)
    if planar is not None:
        c, e1, e2, _ = planar
        pts2 = [( float(np.dot(q - c, e1)), float(np.dot(q - c, e2)) ) for q in p]
        # collapse duplicate points for hull construction, keep all indices
        poly = _hull_2d(pts2)
        dedup = []
        for i in poly:
            if not dedup or np.linalg.norm(p[i] - p[dedup[-1]]) > tol:
                dedup.append(i)
        if len(dedup) > 1 and np.linalg.norm(p[dedup[0]] - p[dedup[-1]]) <= tol:
            dedup.pop()
        return Hull(
            dimension=2,
            vertices=tuple(sorted(set(dedup))),
            faces=(),
            polygon=tuple(dedup),
            on_hull_triangles=tuple(range(len(mesh.TRIANGLES))),
        )

    faces = []
    seen_members = set()
    from itertools import combinations

    for i, j, k in combinations(range(n), 3):
        nrm = np.cross(p[j] - p[i], p[k] - p[i])
        ln = np.linalg.norm(nrm)
        if ln < tol * scale:
            continue
        nrm = nrm / ln
        d = np.dot(nrm, p[i])
        side = p @ nrm - d
        if np.all(side <= tol):
            nrm, d, side = -nrm, -d, -side
        if not np.all(side >= -tol):
            continue
        members = tuple(int(m) for m in np.nonzero(np.abs(side) <= tol)[0])
        if members in seen_members:
            continue
        seen_members.add(members)
        faces.append((tuple(float(v) for v in nrm), float(d), members))

    hull_vertices = sorted({v for _, _, members in faces for v in members})
    on_hull = []
    for idx, tri in enumerate(mesh.TRIANGLES):
        for _, _, members in faces:
            if set(tri) <= set(members):
                on_hull.append(idx)
                break
    return Hull(
        dimension=3,
        vertices=tuple(hull_vertices),
        faces=tuple(faces),
        polygon=(),
        on_hull_triangles=tuple(on_hull),
    )


# ---------------------------------------------------------------------------
# Good polygons


@dataclass(frozen=True)
class GoodPolygon:
    """A rectangle, a trapezoid whose diagonals equal its long side, or an
    equilateral triangle, placed in 3-space."""

    kind: str
    points: np.ndarray  # (k, 3), cyclic order

    def triangles(self):
        """Fan triangulation as an (k-2, 3, 3) array."""
        pts = self.points
        return np.array([(pts[0], pts[i], pts[i + 1]) for i in range(1, len(pts) - 1)])


def good_polygon(zeta: ModularParameter) -> GoodPolygon:
    """The limiting hull polygon at a boundary parameter.

    Left edge (x = 0): the 2y^2 x 2y rectangle.  Circular arc: the
    trapezoid on vertices 1, 6, 0, 7, whose diagonals and long side all
    have length sqrt(8x).  Hex corner: the equilateral triangle of side
    2.  Other parameters (interior; right edge above the corner, where
    the hull is a pyramid) are rejected.
    """
    x, y = zeta.x, zeta.y
    if zeta.region in (LEFT_EDGE, SQUARE_POINT):
        u, v = y * y, y
        pts = np.array(
            [(-u, -v, 0.0), (u, -v, 0.0), (u, v, 0.0), (-u, v, 0.0)]
        )
        return GoodPolygon(kind="rectangle", points=pts)
    if zeta.region == CIRCULAR_ARC:
        P = golden_torus(zeta)
        pts = np.array([P[1], P[7], P[0], P[6]])  # trapezoid cycle 1 -> 7 -> 0 -> 6
        return GoodPolygon(kind="trapezoid", points=pts)
    if zeta.region == HEX_VERTEX:
        pts = np.array(
            [
                (0.5, math.sqrt(3.0) / 2.0, 0.0),
                (0.0, 0.0, math.sqrt(3.0)),
                (-0.5, -math.sqrt(3.0) / 2.0, 0.0),
            ]
        )
        return GoodPolygon(kind="equilateral-triangle", points=pts)
    raise DomainError(
        f"no good polygon at region {zeta.region!r} (needs left edge, arc, or hex corner)"
    )


# ---------------------------------------------------------------------------
# Hausdorff distance between triangle sets


def _as_triangle_array(obj):
    if isinstance(obj, GoodPolygon):
        return obj.triangles()
    a = np.asarray(obj, dtype=float)
    if a.shape == (8, 3):
        return mesh.triangle_coordinates(a)
    if a.ndim == 2 and a.shape[1] == 3 and a.shape[0] >= 2:
        # a polyline/segment: make degenerate triangles
        return np.array([(a[i], a[i + 1], (a[i] + a[i + 1]) / 2) for i in range(len(a) - 1)])
    if a.ndim == 3 and a.shape[1:] == (3, 3):
        return a
    raise ValueError(f"cannot interpret shape {a.shape} as a triangle set")


def sample_triangles(tris, n):
    """Barycentric grid samples, n subdivisions per edge."""
    tris = np.asarray(tris, dtype=float)
    ii, jj = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
    keep = ii + jj <= n
    s = (ii[keep] / n)[None, :, None]
    t = (jj[keep] / n)[None, :, None]
    a = tris[:, 0][:, None, :]
    b = tris[:, 1][:, None, :]
    c = tris[:, 2][:, None, :]
    pts = a + s * (b - a) + t * (c - a)
    return pts.reshape(-1, 3)


def _dist_points_to_triangle(pts, tri):
    """Exact distances from points to one (possibly degenerate) triangle."""
    a, b, c = tri
    ab, ac = b - a, c - a
    n = np.cross(ab, ac)
    nn = float(np.dot(n, n))
    d = pts - a
    if nn > 1e-30 * max(np.dot(ab, ab), np.dot(ac, ac), 1e-300) ** 2:
        # interior projection where barycentric coordinates allow it
        dot_aa = float(np.dot(ab, ab))
        dot_bb = float(np.dot(ac, ac))
        dot_ab = float(np.dot(ab, ac))
        pa = d @ ab
        pb = d @ ac
        det = dot_aa * dot_bb - dot_ab * dot_ab
        s = (dot_bb * pa - dot_ab * pb) / det
        t = (dot_aa * pb - dot_ab * pa) / det
        inside = (s >= 0) & (t >= 0) & (s + t <= 1)
        h = (d @ n) / math.sqrt(nn)
        best = np.where(inside, np.abs(h), np.inf)
    else:
        best = np.full(len(pts), np.inf)

    for p, q in ((a, b), (b, c), (c, a)):
        e = q - p
        ee = float(np.dot(e, e))
        if ee < 1e-300:
            cand = np.linalg.norm(pts - p, axis=1)
        else:
            u = np.clip((pts - p) @ e / ee, 0.0, 1.0)
            cand = np.linalg.norm(pts - (p + u[:, None] * e), axis=1)
        best = np.minimum(best, cand)
    return best


def _directed_hausdorff(tris_a, tris_b, n):
    pts = sample_triangles(tris_a, n)
    best = np.full(len(pts), np.inf)
    for tri in tris_b:
        best = np.minimum(best, _dist_points_to_triangle(pts, tri))
    return float(best.max())


def hausdorff(A, B, n_samples=200):
    """Symmetric sampled Hausdorff distance between two triangle sets.

    Each set is sampled on a barycentric grid with n_samples subdivisions
    per triangle edge; distances from samples to the other set are exact
    point-to-triangle distances.  The result underestimates the true
    distance by at most about diameter/n_samples.
    """
    ta = _as_triangle_array(A)
    tb = _as_triangle_array(B)
    return max(_directed_hausdorff(ta, tb, n_samples), _directed_hausdorff(tb, ta, n_samples))


# ---------------------------------------------------------------------------
# Similarity normalization


def _area_moments(tris):
    """Total area, area-weighted centroid, and second moment matrix."""
    tris = np.asarray(tris, dtype=float)
    a, b, c = tris[:, 0], tris[:, 1], tris[:, 2]
    areas = 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1)
    if areas.sum() < 1e-300:
        # degenerate set (segments): fall back to length weighting
        areas = np.linalg.norm(b - a, axis=1) + np.linalg.norm(c - b, axis=1)
    cent = (a + b + c) / 3.0
    total = areas.sum()
    centroid = (areas[:, None] * cent).sum(axis=0) / total
    second = np.zeros((3, 3))
    for w, (va, vb, vc) in zip(areas, tris):
        vs = (va, vb, vc)
        m = np.zeros((3, 3))
        for i in range(3):
            for j in range(3):
                m += (2.0 if i == j else 1.0) * np.outer(vs[i], vs[j])
        second += w * m / 12.0
    cov = second / total - np.outer(centroid, centroid)
    return total, centroid, cov


def _diameter(tris):
    pts = np.asarray(tris, dtype=float).reshape(-1, 3)
    d2 = np.sum((pts[:, None, :] - pts[None, :, :]) ** 2, axis=2)
    return math.sqrt(float(d2.max()))


_SIGN_CHOICES = (
    (1, 1, 1),
    (1, -1, -1),
    (-1, 1, -1),
    (-1, -1, 1),
)


def _rotation_about(axis, angle):
    axis = axis / np.linalg.norm(axis)
    K = np.array(
        [[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]]
    )
    return np.eye(3) + math.sin(angle) * K + (1 - math.cos(angle)) * (K @ K)


def normalize_similarity(S, Q, n_coarse=24, refine=True):
    """Rigidly align and rescale triangle set S onto the good polygon Q.

    Diameters are matched, centroids and principal axes aligned; the four
    proper axis-sign choices are compared by a coarse Hausdorff score.
    When the target spectrum is nearly degenerate (an equilateral
    triangle's two in-plane moments coincide), candidate in-plane
    rotations are scanned as well.

    Moment-based alignment is biased when S covers its limit shape with
    non-uniform multiplicity (the area-weighted centroid then differs
    from the uniform one), so by default the winning candidate is
    polished by a compass search over the similarity group minimizing
    the coarse Hausdorff score directly.
    """
    ts = _as_triangle_array(S).copy()
    tq = _as_triangle_array(Q)
    ds, dq = _diameter(ts), _diameter(tq)
    if ds < 1e-300:
        raise DegenerateInputError("input set has zero diameter")
    scale = dq / ds
    _, cs, covs = _area_moments(ts)
    _, cq, covq = _area_moments(tq)
    ws, us = np.linalg.eigh(covs)
    wq, uq = np.linalg.eigh(covq)
    if np.linalg.det(us) < 0:
        us[:, 0] *= -1
    if np.linalg.det(uq) < 0:
        uq[:, 0] *= -1

    base = (ts - cs) * scale
    candidates = []
    for sgn in _SIGN_CHOICES:
        R = uq @ np.diag(sgn) @ us.T
        candidates.append(R)
    # near-degenerate target spectrum: add in-plane rotations about the
    # eigenvector separating the degenerate pair
    spread = wq.max() - wq.min()
    if spread > 0:
        gaps = np.diff(wq)
        k = int(np.argmin(gaps))
        if gaps[k] < 0.05 * spread:
            axis_idx = 3 - (k + (k + 1))  # the eigenvector not in the pair
            axis_idx = [i for i in range(3) if i not in (k, k + 1)][0]
            for Rbase in list(candidates):
                for ang in np.linspace(0, 2 * math.pi, 48, endpoint=False):
                    candidates.append(_rotation_about(uq[:, axis_idx], ang) @ Rbase)

    best, best_d = None, math.inf
    for R in candidates:
        moved = base @ R.T + cq
        d = hausdorff(moved, tq, n_samples=n_coarse)
        if d < best_d:
            best, best_d = moved, d
    if refine:
        best = _refine_similarity(best, tq, cq, dq, n_coarse)
    return best


def _refine_similarity(moved, tq, center, diam, n, max_rounds=60):
    """Compass search over translation, log-scale, and small rotations."""
    cur = moved
    cur_d = hausdorff(cur, tq, n_samples=n)
    step_t = 0.04 * diam
    step_a = 0.08

    def transformed(tri_set, dv, ds, axis, ang):
        out = tri_set - center
        if ang != 0.0:
            out = out @ _rotation_about(axis, ang).T
        out = out * math.exp(ds) + center + dv
        return out

    axes = (np.array([1.0, 0, 0]), np.array([0, 1.0, 0]), np.array([0, 0, 1.0]))
    for _ in range(max_rounds):
        improved = False
        moves = []
        for k in range(3):
            for s in (+1.0, -1.0):
                dv = np.zeros(3)
                dv[k] = s * step_t
                moves.append((dv, 0.0, axes[0], 0.0))
        for s in (+1.0, -1.0):
            moves.append((np.zeros(3), s * step_t / diam, axes[0], 0.0))
        for ax in axes:
            for s in (+1.0, -1.0):
                moves.append((np.zeros(3), 0.0, ax, s * step_a))
        for dv, ds, ax, ang in moves:
            cand = transformed(cur, dv, ds, ax, ang)
            d = hausdorff(cand, tq, n_samples=n)
            if d < cur_d - 1e-12:
                cur, cur_d = cand, d
                improved = True
        if not improved:
            step_t *= 0.5
            step_a *= 0.5
            if step_t < 1e-4 * diam:
                break
    return cur


# ---------------------------------------------------------------------------
# The modulus map


def _dual_layout_plan():
    """Spanning-tree development plan over the 16 triangles.

    Returns (root, steps, closures): each step places a new triangle
    across a shared edge of an already placed one; each closure is a
    non-tree adjacency whose placement mismatch is a period vector.
    """
    edge_tris = {}
    for idx, tri in enumerate(mesh.TRIANGLES):
        for i, j in ((0, 1), (1, 2), (2, 0)):
            key = tuple(sorted((tri[i], tri[j])))
            edge_tris.setdefault(key, []).append(idx)
    placed = {0}
    steps = []
    closures = []
    frontier = [0]
    seen_edges = set()
    while frontier:
        cur = frontier.pop(0)
        for i, j in ((0, 1), (1, 2), (2, 0)):
            tri = mesh.TRIANGLES[cur]
            key = tuple(sorted((tri[i], tri[j])))
            if key in seen_edges:
                continue
            seen_edges.add(key)
            other = next(t for t in edge_tris[key] if t != cur)
            if other in placed:
                closures.append((cur, other, key))
            else:
                placed.add(other)
                steps.append((cur, other, key))
                frontier.append(other)
    return 0, tuple(steps), tuple(closures)


_LAYOUT_ROOT, _LAYOUT_STEPS, _LAYOUT_CLOSURES = _dual_layout_plan()


def _place_third(za, zb, la, lb):
    """Apex position given base points and the two apex distances,
    on the positive side of the base."""
    d = zb - za
    dd = abs(d)
    along = (la * la - lb * lb + dd * dd) / (2.0 * dd)
    h2 = la * la - along * along
    h = math.sqrt(max(h2, 0.0))
    u = d / dd
    return za + u * complex(along, h)


def develop(P):
    """Lay the 16 triangles out in the plane using 3-space edge lengths.

    Returns (positions, mismatches): per-triangle vertex positions as
    complex numbers, and for each non-tree adjacency the two period
    vectors measured at the endpoints of the shared edge (equal for an
    exactly flat metric).
    """
    p = np.asarray(P, dtype=float)

    def L(i, j):
        return float(np.linalg.norm(p[i] - p[j]))

    pos = {}
    root_tri = mesh.TRIANGLES[_LAYOUT_ROOT]
    a, b, c = root_tri
    za = 0.0 + 0.0j
    zb = complex(L(a, b), 0.0)
    zc = _place_third(za, zb, L(a, c), L(b, c))
    pos[_LAYOUT_ROOT] = {a: za, b: zb, c: zc}
    for cur, new, key in _LAYOUT_STEPS:
        i, j = key
        zi, zj = pos[cur][i], pos[cur][j]
        k = next(v for v in mesh.TRIANGLES[new] if v not in key)
        prev_third = next(v for v in mesh.TRIANGLES[cur] if v not in key)
        zk = _place_third(zi, zj, L(i, k), L(j, k))
        # flip to the opposite side from the previous triangle's apex
        side_prev = ((zj - zi).conjugate() * (pos[cur][prev_third] - zi)).imag
        side_new = ((zj - zi).conjugate() * (zk - zi)).imag
        if side_prev * side_new > 0:
            d = zj - zi
            zk = zi + d * ((zk - zi) / d).conjugate()
        pos[new] = {i: zi, j: zj, k: zk}
    mismatches = []
    for t1, t2, key in _LAYOUT_CLOSURES:
        i, j = key
        v1 = pos[t1][i] - pos[t2][i]
        v2 = pos[t1][j] - pos[t2][j]
        mismatches.append((v1, v2))
    return pos, mismatches


@dataclass(frozen=True)
class ModulusEstimate:
    """Reduced modulus of a flat torus with layout diagnostics."""

    tau: complex
    L1: complex
    L2: complex
    residual: float

    @property
    def reduced(self):
        return abs(self.tau.real) <= 0.5 + 1e-9 and abs(self.tau) >= 1.0 - 1e-9


def _lattice_from_vectors(vectors, scale):
    """Greedy integer-lattice basis from noisy period vectors."""
    basis = []
    residual = 0.0
    for v in sorted(vectors, key=abs):
        if abs(v) < 1e-7 * scale:
            residual = max(residual, abs(v))
            continue
        if not basis:
            basis.append(v)
            continue
        if len(basis) == 1:
            r = (v.conjugate() * basis[0]).real / abs(basis[0]) ** 2
            rem = v - round(r) * basis[0]
            cross = abs((basis[0].conjugate() * v).imag) / abs(basis[0])
            if cross > 1e-7 * scale:
                basis.append(v)
            else:
                residual = max(residual, abs(rem))
            continue
        det = (basis[0].conjugate() * basis[1]).imag
        nv = (v.conjugate() * basis[1]).imag / det
        mv = (basis[0].conjugate() * v).imag / det
        rem = v - round(nv) * basis[0] - round(mv) * basis[1]
        residual = max(residual, abs(rem))
    if len(basis) < 2:
        raise NonFlatError("period vectors do not span a lattice")
    return basis[0], basis[1], residual


def _lagrange_reduce(w1, w2):
    """Gauss-reduce the lattice basis (shortest two vectors)."""
    for _ in range(64):
        if abs(w2) < abs(w1):
            w1, w2 = w2, w1
        mu = round((w2.conjugate() * w1).real / abs(w1) ** 2)
        w2n = w2 - mu * w1
        if abs(w2n) >= abs(w1) or mu == 0:
            w2 = w2n
            break
        w2 = w2n
    return w1, w2


def reduce_modulus(tau):
    """Standard fundamental-domain representative of tau."""
    if tau.imag <= 0:
        raise DomainError("modulus must lie in the upper half plane")
    for _ in range(256):
        tau = complex(tau.real - round(tau.real), tau.imag)
        if abs(tau) < 1.0 - 1e-15:
            tau = -1.0 / tau
        else:
            break
    return tau


def modulus_of(P, tol=1e-8) -> ModulusEstimate:
    """Recover the modulus of a flat torus from its embedding.

    Develops the metric into the plane, extracts the period lattice from
    the non-tree closure mismatches, Lagrange-reduces the basis, and
    returns tau in the standard fundamental domain.  Rejects non-flat
    input (defect above tol).
    """
    defect = flatness_defect(P).defect
    if defect > tol:
        raise NonFlatError(f"flatness defect {defect:.3e} exceeds {tol:.1e}")
    _, mismatches = develop(P)
    scale = max(abs(v) for pair in mismatches for v in pair)
    vectors = []
    residual = 0.0
    for v1, v2 in mismatches:
        residual = max(residual, abs(v1 - v2))
        vectors.append(0.5 * (v1 + v2))
    b1, b2, res2 = _lattice_from_vectors(vectors, scale)
    residual = max(residual, res2)
    w1, w2 = _lagrange_reduce(b1, b2)
    tau = w2 / w1
    if tau.imag < 0:
        tau = -tau
    tau = reduce_modulus(tau)
    return ModulusEstimate(tau=tau, L1=w1, L2=w2, residual=residual)


# ---------------------------------------------------------------------------
# Hyperbolic distance on the modular surface


def _hyperbolic_distance(u, v):
    num = abs(u - v) ** 2
    den = 2.0 * u.imag * v.imag
    return math.acosh(1.0 + num / den)


def _group_elements(max_len=8):
    """Unimodular matrices reachable by short words in the generators."""
    T = (1, 1, 0, 1)
    Ti = (1, -1, 0, 1)
    S = (0, -1, 1, 0)

    def mul(g, h):
        a, b, c, d = g
        e, f, gg, hh = h
        return (a * e + b * gg, a * f + b * hh, c * e + d * gg, c * f + d * hh)

    seen = {(1, 0, 0, 1)}
    frontier = [(1, 0, 0, 1)]
    for _ in range(max_len):
        nxt = []
        for g in frontier:
            for gen in (T, Ti, S):
                h = mul(g, gen)
                if h not in seen and all(abs(v) <= 64 for v in h):
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return tuple(seen)


_GROUP = _group_elements()


def _apply(g, tau):
    a, b, c, d = g
    return (a * tau + b) / (c * tau + d)


def modular_distance(tau1, tau2):
    """Hyperbolic distance between moduli, modulo the unimodular group
    and the mirror tau -> -conj(tau).

    Both inputs are first reduced to the standard fundamental domain;
    the minimum then runs over a bounded word-length set of group
    elements applied to the second argument.
    """
    t1 = reduce_modulus(complex(tau1))
    t2 = reduce_modulus(complex(tau2))
    best = math.inf
    for cand in (t2, complex(-t2.real, t2.imag)):
        for g in _GROUP:
            img = _apply(g, cand)
            if img.imag <= 0:
                continue
            best = min(best, _hyperbolic_distance(t1, img))
    return best
