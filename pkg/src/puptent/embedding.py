"""Sign lists, determinant polynomials in t, and the block embedding clause.

For vertices in general position (all 70 quadruple determinants nonzero),
whether the torus is embedded depends only on the 70 signs.  Segment vs
triangle disjointness for five distinct labels is decided from the five
quadruple determinants those labels span; triangle pairs need 6 such
blocks when disjoint, 2 when they share a vertex, and none when they
share an edge, for 24*6 + 72*2 = 288 blocks in total.

Along the special deformation each determinant is a polynomial of degree
at most 6 in t whose leading coefficient has order at most 2; the
classification of the 70 quadruples by that order (45 / 6 / 19) and the
leading signs are independent of the interior parameter z.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import FitError
from . import mesh
from .deformation import deform, deformation_coefficients

TAU_SIGN = 1e-12
TAU_FIT = 1e-8

DEGENERATE = 0

# Sampling grid for the degree-6 polynomial fits, plus hold-out points.
FIT_NODES = tuple(k / 64.0 for k in range(1, 8))
HOLDOUT_NODES = (9.0 / 64.0, 5.0 / 128.0)


def _scale_cubed(P):
    return max(mesh.bbox_diameter(P), 1e-300) ** 3


def sign_list(P, tau_sign=TAU_SIGN):
    """Signs of the 70 quadruple determinants; 0 marks a determinant
    whose magnitude falls below tau_sign * (bounding-box diameter)^3."""
    dets = mesh.all_tetra_dets(P)
    cut = tau_sign * _scale_cubed(P)
    out = np.where(dets > cut, 1, np.where(dets < -cut, -1, 0))
    return out.astype(int)


def signs_degenerate(signs):
    return bool(np.any(signs == 0))


# ---------------------------------------------------------------------------
# Determinant polynomials along the deformation


@dataclass(frozen=True)
class DetPolynomial:
    """Degree-6 fit of one quadruple determinant as a function of t."""

    quadruple: tuple
    coefficients: tuple  # c0..c6
    leading_index: int  # first k with |c_k| above threshold
    holdout_residual: float

    @property
    def case(self):
        return f"order-{self.leading_index}"

    @property
    def leading_sign(self):
        c = self.coefficients[self.leading_index]
        return 1 if c > 0 else -1


_FIT_V = np.vander(64.0 * np.asarray(FIT_NODES), 7, increasing=True)


def det_polynomial(z, quadruple, coeffs=None, tau_fit=TAU_FIT) -> DetPolynomial:
    """Fit [abcd](t) by interpolation at seven nodes and validate at two
    held-out nodes.

    The fit is done in the rescaled variable s = 64 t for conditioning.
    A hold-out residual above tau_fit * scale is a fit failure, since the
    determinant truly is a polynomial of degree <= 6 in t.
    """
    if coeffs is None:
        coeffs = deformation_coefficients(z)
    a, b, c, d = quadruple
    samples = np.array(
        [mesh.tetra_det(deform(z, t, coeffs), a, b, c, d) for t in FIT_NODES]
    )
    beta = np.linalg.solve(_FIT_V, samples)  # coefficients in s = 64 t
    cs = beta * np.power(64.0, np.arange(7))
    scale = _scale_cubed(deform(z, 0.0, coeffs))
    worst = 0.0
    for t in HOLDOUT_NODES:
        pred = float(np.polyval(cs[::-1], t))
        actual = mesh.tetra_det(deform(z, t, coeffs), a, b, c, d)
        worst = max(worst, abs(pred - actual))
    if worst > tau_fit * scale:
        raise FitError(
            f"hold-out residual {worst:.3e} for quadruple {quadruple} at z={z.z}"
        )
    cut = 1e-6 * max(1.0, float(np.max(np.abs(cs))))
    lead = next((k for k in range(7) if abs(cs[k]) > cut), 6)
    return DetPolynomial(
        quadruple=tuple(quadruple),
        coefficients=tuple(float(v) for v in cs),
        leading_index=lead,
        holdout_residual=worst,
    )


@dataclass(frozen=True)
class QuadrupleClassification:
    """Partition of the 70 quadruples by leading order, with leading signs."""

    order0: tuple
    order1: tuple
    order2: tuple
    leading_signs: tuple  # one per quadruple, in mesh.QUADRUPLES order
    polynomials: tuple

    @property
    def counts(self):
        return (len(self.order0), len(self.order1), len(self.order2))


def classify_quadruples(z, coeffs=None) -> QuadrupleClassification:
    if coeffs is None:
        coeffs = deformation_coefficients(z)
    polys = [det_polynomial(z, q, coeffs=coeffs) for q in mesh.QUADRUPLES]
    buckets = {0: [], 1: [], 2: []}
    for p in polys:
        if p.leading_index > 2:
            raise FitError(
                f"quadruple {p.quadruple} has leading order {p.leading_index} > 2"
            )
        buckets[p.leading_index].append(p.quadruple)
    return QuadrupleClassification(
        order0=tuple(buckets[0]),
        order1=tuple(buckets[1]),
        order2=tuple(buckets[2]),
        leading_signs=tuple(p.leading_sign for p in polys),
        polynomials=tuple(polys),
    )


# ---------------------------------------------------------------------------
# The block clause

_QUAD_INDEX = {q: i for i, q in enumerate(mesh.QUADRUPLES)}


def _perm_parity(seq):
    """+1 / -1 parity of the permutation sorting seq ascending."""
    s = list(seq)
    parity = 1
    for i in range(len(s)):
        k = min(range(i, len(s)), key=lambda j: s[j])
        if k != i:
            s[i], s[k] = s[k], s[i]
            parity = -parity
    return parity


def _oriented(labels):
    """(index into the 70 signs, parity) for an ordered 4-tuple of labels."""
    key = tuple(sorted(labels))
    return _QUAD_INDEX[key], _perm_parity(labels)


@dataclass(frozen=True)
class Block:
    """One segment-vs-triangle disjointness test, precompiled to sign
    lookups: the segment (a, b) misses the closed triangle (c, d, e) unless
    a and b sit on opposite sides of the triangle plane while the three
    side tests around the segment's line agree."""

    edge: tuple
    triangle: tuple
    plane_tests: tuple  # ((idx, parity), (idx, parity)) for a and b vs (c,d,e)
    side_tests: tuple  # three (idx, parity) for the line of (a,b)

    def evaluate(self, signs):
        """+1 satisfied (disjoint), -1 violated, 0 degenerate."""
        (ia, pa), (ib, pb) = self.plane_tests
        s1 = pa * signs[ia]
        s2 = pb * signs[ib]
        q = [p * signs[i] for i, p in self.side_tests]
        if s1 == 0 or s2 == 0 or 0 in q:
            return 0
        crossing = (s1 != s2) and (q[0] == q[1] == q[2])
        return -1 if crossing else 1


def _make_block(edge, triangle):
    a, b = edge
    c, d, e = triangle
    plane = (_oriented((a, c, d, e)), _oriented((b, c, d, e)))
    sides = (
        _oriented((a, b, c, d)),
        _oriented((a, b, d, e)),
        _oriented((a, b, e, c)),
    )
    return Block(edge=tuple(edge), triangle=tuple(triangle), plane_tests=plane, side_tests=sides)


def _build_blocks():
    blocks = []
    for pc in mesh.classify_pairs():
        t1 = mesh.TRIANGLES[pc.pair[0]]
        t2 = mesh.TRIANGLES[pc.pair[1]]
        if pc.kind == mesh.DISJOINT:
            for tri, other in ((t1, t2), (t2, t1)):
                for i in range(3):
                    edge = (other[i], other[(i + 1) % 3])
                    blocks.append((pc.pair, _make_block(edge, tri)))
        elif pc.kind == mesh.VERTEX_SHARING:
            v = pc.shared[0]
            for tri, other in ((t1, t2), (t2, t1)):
                edge = tuple(lbl for lbl in other if lbl != v)
                blocks.append((pc.pair, _make_block(edge, tri)))
    return tuple(blocks)


BLOCKS = _build_blocks()
assert len(BLOCKS) == 288


@dataclass(frozen=True)
class EmbeddingVerdict:
    embedded: str  # "yes" | "no" | "degenerate"
    failing_block: tuple = None
    degenerate_quadruples: tuple = ()
    signs: tuple = ()

    @property
    def is_embedded(self):
        return self.embedded == "yes"


def edge_triangle_disjoint(P, edge, triangle, tau_sign=TAU_SIGN):
    """Tri-state disjointness of the open segment over ``edge`` from the
    closed triangle; the five labels must be distinct."""
    labels = set(edge) | set(triangle)
    if len(labels) != 5:
        raise ValueError(f"edge {edge} and triangle {triangle} must use 5 labels")
    signs = sign_list(P, tau_sign)
    verdict = _make_block(edge, triangle).evaluate(signs)
    return {1: "satisfied", -1: "violated", 0: "degenerate"}[verdict]


def embedding_clause(P, tau_sign=TAU_SIGN) -> EmbeddingVerdict:
    """Evaluate all 288 blocks on the sign list of P.

    "yes" needs every block satisfied and no degenerate sign anywhere;
    any degenerate sign yields "degenerate", a violated block "no".
    """
    signs = sign_list(P, tau_sign)
    if signs_degenerate(signs):
        degen = tuple(
            mesh.QUADRUPLES[i] for i in range(len(signs)) if signs[i] == 0
        )
        return EmbeddingVerdict(
            embedded="degenerate", degenerate_quadruples=degen, signs=tuple(signs)
        )
    for pair, block in BLOCKS:
        if block.evaluate(signs) == -1:
            return EmbeddingVerdict(
                embedded="no",
                failing_block=(pair, block.edge, block.triangle),
                signs=tuple(signs),
            )
    return EmbeddingVerdict(embedded="yes", signs=tuple(signs))


# ---------------------------------------------------------------------------
# Reference data: the barely embedded reference tent, its sign list, and
# its hull pattern, shipped as a versioned data file.

_REFERENCE_CACHE = {}


def _load_reference_data():
    if "raw" not in _REFERENCE_CACHE:
        path = resources.files("puptent").joinpath("data/reference_tent.json")
        with path.open() as f:
            _REFERENCE_CACHE["raw"] = json.load(f)
    return _REFERENCE_CACHE["raw"]


def reference_tent():
    """The barely embedded, exactly flat reference torus.

    Vertices are stored in the data file as shortest round-trip decimal
    strings, so the reconstruction is bit-exact."""
    data = _load_reference_data()
    return np.array([[float(v) for v in row] for row in data["vertices"]])


def reference_signs():
    """The winning sign list, as an array aligned with mesh.QUADRUPLES."""
    if "signs" not in _REFERENCE_CACHE:
        data = _load_reference_data()
        signs = np.zeros(len(mesh.QUADRUPLES), dtype=int)
        for a, b, c, d, s in data["signs"]:
            signs[_QUAD_INDEX[(a, b, c, d)]] = s
        _REFERENCE_CACHE["signs"] = signs
    return _REFERENCE_CACHE["signs"]


def reference_hull_triangles():
    """Indices (into mesh.TRIANGLES) of the six triangles on the hull of
    the reference tent."""
    if "hull" not in _REFERENCE_CACHE:
        data = _load_reference_data()
        _REFERENCE_CACHE["hull"] = tuple(tuple(t) for t in data["hull_triangles"])
    return _REFERENCE_CACHE["hull"]


def matches_reference_signs(P, tau_sign=TAU_SIGN):
    signs = sign_list(P, tau_sign)
    return not signs_degenerate(signs) and bool(
        np.array_equal(signs, reference_signs())
    )
