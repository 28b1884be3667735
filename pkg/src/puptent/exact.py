"""Exact geometric embeddedness oracle.

Every pair of the 16 mesh triangles is intersected exactly: coordinates
are scaled by a power of two until they are integers (floats are dyadic
rationals, so this is lossless), and all predicates reduce to integer
determinants and exact rational interval comparisons.  A torus is
embedded when each triangle pair meets exactly in its shared simplex:
nothing for disjoint label sets, the common vertex, or the common edge.

Verdicts: "embedded", "not-embedded" (a crossing or an overlap with
interior points), or "touching" (a degenerate, measure-zero contact
beyond the shared simplex).
"""

from __future__ import annotations

import numpy as np

from . import mesh

EMBEDDED = "embedded"
NOT_EMBEDDED = "not-embedded"
TOUCHING = "touching"

_PAIRS = mesh.classify_pairs()


def _to_int_rows(P):
    """Scale all coordinates by a common power of two into exact ints."""
    p = np.asarray(P, dtype=float)
    b = 53
    while b < 1100:
        s = p * (2.0 ** b)
        if np.all(s == np.round(s)):
            return [[int(v) for v in row] for row in s]
        b += 10
    raise ValueError("coordinates cannot be scaled to integers")


def _orient(p, q, r, s):
    ax, ay, az = q[0] - p[0], q[1] - p[1], q[2] - p[2]
    bx, by, bz = r[0] - p[0], r[1] - p[1], r[2] - p[2]
    cx, cy, cz = s[0] - p[0], s[1] - p[1], s[2] - p[2]
    return ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx)


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _sign(v):
    return (v > 0) - (v < 0)


def _plane_sides(tri, pts):
    a, b, c = tri
    return [_orient(a, b, c, p) for p in pts]


def _interval_on_line(tri, sides, axis):
    """Projection interval (exact rational endpoints) of tri's slice by
    the other plane, projected onto the given coordinate axis.

    ``sides`` are the plane values of tri's vertices (not all the same
    strict sign, not all zero).  Endpoints are (num, den) with den > 0.
    """
    pts = []
    for i in range(3):
        if sides[i] == 0:
            pts.append((tri[i][axis], 1))
    for i, j in ((0, 1), (1, 2), (2, 0)):
        di, dj = sides[i], sides[j]
        if di * dj < 0:
            den = di - dj
            num = tri[j][axis] * di - tri[i][axis] * dj
            if den < 0:
                num, den = -num, -den
            pts.append((num, den))
    lo = min(pts, key=lambda f: (f[0] / f[1]))
    hi = max(pts, key=lambda f: (f[0] / f[1]))
    # exact re-check of extremes (float keying is only a heuristic)
    for f in pts:
        if f[0] * lo[1] < lo[0] * f[1]:
            lo = f
        if f[0] * hi[1] > hi[0] * f[1]:
            hi = f
    return lo, hi


def _frac_cmp(a, b):
    return _sign(a[0] * b[1] - b[0] * a[1])


def _coplanar_overlap(t1, t2, normal, shared_pts):
    """Exact 2D analysis of two coplanar triangles.

    Returns "ok" if they meet in at most the shared points, "cross" for
    an intersection with interior points, "touch" for degenerate extra
    contact that this reduction does not resolve as a crossing.
    """
    axis = max(range(3), key=lambda k: abs(normal[k]))
    u, v = (axis + 1) % 3, (axis + 2) % 3
    sgn = _sign(normal[axis])
    a1 = [(p[u], p[v]) for p in t1]
    a2 = [(p[u], p[v]) for p in t2]
    shared2 = [(p[u], p[v]) for p in shared_pts]

    def orient2(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    def fix(tri):
        o = orient2(*tri)
        if o == 0:
            return None
        return tri if o > 0 else [tri[0], tri[2], tri[1]]

    b1, b2 = fix(a1), fix(a2)
    if b1 is None or b2 is None:
        return "touch"  # a degenerate (collinear) triangle in the plane

    def strictly_inside(p, tri):
        return all(orient2(tri[i], tri[(i + 1) % 3], p) > 0 for i in range(3))

    def on_closed(p, tri):
        return all(orient2(tri[i], tri[(i + 1) % 3], p) >= 0 for i in range(3))

    for p in a1:
        if strictly_inside(p, b2) and p not in shared2:
            return "cross"
    for p in a2:
        if strictly_inside(p, b1) and p not in shared2:
            return "cross"

    def seg_proper_cross(p, q, r, s):
        o1, o2 = orient2(p, q, r), orient2(p, q, s)
        o3, o4 = orient2(r, s, p), orient2(r, s, q)
        return o1 * o2 < 0 and o3 * o4 < 0

    for i in range(3):
        p, q = a1[i], a1[(i + 1) % 3]
        for j in range(3):
            r, s = a2[j], a2[(j + 1) % 3]
            if seg_proper_cross(p, q, r, s):
                return "cross"

    # No proper crossing, no strict containment of an unshared vertex.
    # Any remaining contact beyond the shared points is boundary-only.
    touching = False
    for p in a1:
        if p not in shared2 and on_closed(p, b2):
            touching = True
    for p in a2:
        if p not in shared2 and on_closed(p, b1):
            touching = True
    return "touch" if touching else "ok"


def _point_in_closed_triangle(p, tri):
    """Whether a point known to lie in the triangle's plane is inside the
    closed triangle (winding-independent, exact)."""
    n = _cross(_sub(tri[1], tri[0]), _sub(tri[2], tri[0]))
    for j in range(3):
        a, b = tri[j], tri[(j + 1) % 3]
        tip = (a[0] + n[0], a[1] + n[1], a[2] + n[2])
        se = _orient(a, b, tip, tri[(j + 2) % 3])
        sp = _orient(a, b, tip, p)
        if se * sp < 0:
            return False
    return True


def _pair_verdict(t1, t2, shared_labels, pts1, pts2):
    """Verdict for one triangle pair: "ok", "cross", or "touch"."""
    s2 = _plane_sides(pts2, pts1)  # sides of t1's vertices vs plane of t2
    s1 = _plane_sides(pts1, pts2)
    strict2 = [v for v in s2 if v != 0]
    strict1 = [v for v in s1 if v != 0]
    if all(v == 0 for v in s2):
        n = _cross(_sub(pts2[1], pts2[0]), _sub(pts2[2], pts2[0]))
        shared_pts = [pts1[t1.index(l)] for l in shared_labels]
        r = _coplanar_overlap(pts1, pts2, n, shared_pts)
        return {"ok": "ok", "cross": "cross", "touch": "touch"}[r]
    if strict2 and (all(v > 0 for v in strict2) or all(v < 0 for v in strict2)):
        zero_idx = [i for i in range(3) if s2[i] == 0]
        zero_labels = {t1[i] for i in zero_idx}
        if zero_labels <= set(shared_labels):
            return "ok"
        # an unshared vertex of t1 lies on t2's plane: contact only if it
        # lies inside the closed triangle t2
        for i in zero_idx:
            if t1[i] in shared_labels:
                continue
            if _point_in_closed_triangle(pts1[i], pts2):
                return "touch"
        return "ok"
    if strict1 and (all(v > 0 for v in strict1) or all(v < 0 for v in strict1)):
        zero_idx = [i for i in range(3) if s1[i] == 0]
        zero_labels = {t2[i] for i in zero_idx}
        if zero_labels <= set(shared_labels):
            return "ok"
        for i in zero_idx:
            if t2[i] in shared_labels:
                continue
            if _point_in_closed_triangle(pts2[i], pts1):
                return "touch"
        return "ok"

    # Proper 3D case: both triangles cross the common line of the planes.
    n1 = _cross(_sub(pts1[1], pts1[0]), _sub(pts1[2], pts1[0]))
    n2 = _cross(_sub(pts2[1], pts2[0]), _sub(pts2[2], pts2[0]))
    d = _cross(n1, n2)
    axis = max(range(3), key=lambda k: abs(d[k]))
    lo1, hi1 = _interval_on_line(pts1, s2, axis)
    lo2, hi2 = _interval_on_line(pts2, s1, axis)
    lo = lo1 if _frac_cmp(lo1, lo2) >= 0 else lo2
    hi = hi1 if _frac_cmp(hi1, hi2) <= 0 else hi2
    c = _frac_cmp(lo, hi)
    if c > 0:
        return "ok"
    if c == 0:
        if len(shared_labels) == 1:
            v = shared_labels[0]
            pv = pts1[t1.index(v)]
            if _frac_cmp(lo, (pv[axis], 1)) == 0:
                return "ok"
        return "touch"
    # overlapping segment of positive length
    if len(shared_labels) == 2:
        # both triangles contain the full shared edge on the line; with
        # distinct planes the intersection is exactly that edge
        return "ok"
    return "cross"


def exact_intersection_oracle(P):
    """Exhaustive exact embeddedness check over all 120 triangle pairs."""
    pts = _to_int_rows(P)
    tri_pts = [tuple(tuple(pts[v]) for v in tri) for tri in mesh.TRIANGLES]
    worst = "ok"
    for pc in _PAIRS:
        i, j = pc.pair
        t1, t2 = mesh.TRIANGLES[i], mesh.TRIANGLES[j]
        r = _pair_verdict(t1, t2, pc.shared, tri_pts[i], tri_pts[j])
        if r == "cross":
            return NOT_EMBEDDED
        if r == "touch":
            worst = "touch"
    return TOUCHING if worst == "touch" else EMBEDDED
