import math

import numpy as np
import pytest

from puptent import embedding, golden, mesh
from puptent.deformation import deform, deformation_coefficients
from puptent.embedding import (
    BLOCKS,
    classify_quadruples,
    det_polynomial,
    edge_triangle_disjoint,
    embedding_clause,
    matches_reference_signs,
    reference_signs,
    reference_tent,
    sign_list,
)

Z = golden.classify(0.25, 1.0)


class TestSignList:
    def test_reference_tent_fully_nondegenerate_and_matches(self):
        signs = sign_list(reference_tent())
        assert len(signs) == 70
        assert np.all(signs != 0)
        assert np.array_equal(signs, reference_signs())

    def test_reference_quadruple_0123_sign(self):
        # frozen from the exact rational determinant: +0.0051956020474595
        d = mesh.tetra_det(reference_tent(), 0, 1, 2, 3)
        assert d == pytest.approx(0.005195602047459169, rel=1e-12)
        assert d > 0

    def test_golden_tent_has_25_degenerate_entries(self):
        signs = sign_list(golden.golden_torus(Z))
        assert int(np.sum(signs == 0)) == 25

    def test_golden_degenerate_set_is_the_low_order_cases(self):
        cls = classify_quadruples(Z)
        signs = sign_list(golden.golden_torus(Z))
        degen = {mesh.QUADRUPLES[i] for i in range(70) if signs[i] == 0}
        assert degen == set(cls.order1) | set(cls.order2)

    def test_small_deformation_matches_reference(self):
        for t in (1e-2, 0.125):
            assert matches_reference_signs(deform(Z, t))

    def test_coplanar_points_all_degenerate(self):
        P = np.zeros((8, 3))
        P[:, 0] = np.arange(8)
        P[:, 1] = np.arange(8) ** 2
        signs = sign_list(P)
        assert np.all(signs == 0)


class TestDetPolynomial:
    def test_classification_counts(self):
        cls = classify_quadruples(Z)
        assert cls.counts == (45, 6, 19)

    @pytest.mark.parametrize(
        "x,y", [(0.1, 1.3), (0.3, 1.1), (0.15, 1.5), (0.375, 1.375)]
    )
    def test_partition_and_signs_independent_of_parameter(self, x, y):
        ref = classify_quadruples(Z)
        cls = classify_quadruples(golden.classify(x, y))
        assert cls.counts == (45, 6, 19)
        assert cls.order0 == ref.order0
        assert cls.order1 == ref.order1
        assert cls.order2 == ref.order2
        assert cls.leading_signs == ref.leading_signs

    def test_leading_signs_equal_reference_list(self):
        cls = classify_quadruples(Z)
        assert np.array_equal(np.array(cls.leading_signs), reference_signs())

    def test_holdout_residual_small(self):
        p = det_polynomial(Z, (0, 1, 2, 3))
        assert p.holdout_residual < 1e-9

    def test_order1_closed_form_constant_across_parameters(self):
        # c1 = C sqrt(x) y^2 g3 / g2 with C / sqrt(2) a nonzero integer
        fits = {}
        for x, y in [(0.25, 1.0), (0.2, 1.2)]:
            z = golden.classify(x, y)
            g = golden.gamma_values(x, y)
            for q in classify_quadruples(z).order1:
                p = det_polynomial(z, q)
                C = p.coefficients[1] * g.g2 / (math.sqrt(x) * y * y * g.g3)
                fits.setdefault(q, []).append(C / math.sqrt(2.0))
        for q, (c1, c2) in fits.items():
            assert c1 == pytest.approx(c2, rel=1e-6)
            assert round(c1) != 0
            assert c1 == pytest.approx(round(c1), abs=1e-6)

    def test_order0_closed_form_constant_across_parameters(self):
        # c0 = C sqrt(x) y^2 g0^mu g1, joint (mu, C) fit over two parameters
        data = {}
        for x, y in [(0.2, 1.2), (0.3, 1.4)]:
            z = golden.classify(x, y)
            g = golden.gamma_values(x, y)
            for q in classify_quadruples(z).order0:
                p = det_polynomial(z, q)
                base = math.sqrt(x) * y * y * g.g1
                data.setdefault(q, []).append(
                    (p.coefficients[0] / base, p.coefficients[0] / (base * g.g0))
                )
        for q, ((a0, a1), (b0, b1)) in data.items():
            ok = False
            for va, vb in ((a0, b0), (a1, b1)):
                c = va / math.sqrt(2.0)
                if (
                    abs(c - round(c)) < 1e-6
                    and round(c) != 0
                    and abs(va - vb) < 1e-6 * abs(va)
                ):
                    ok = True
            assert ok, (q, a0, a1, b0, b1)

    def test_order2_leading_signs_constant_and_quadratic_scaling(self):
        cls = classify_quadruples(Z)
        c = deformation_coefficients(Z)
        for q in cls.order2[:5]:
            p = det_polynomial(Z, q, coeffs=c)
            assert abs(p.coefficients[0]) < 1e-10
            assert abs(p.coefficients[1]) < 1e-8
            i = mesh.QUADRUPLES.index(q)
            d1 = mesh.tetra_det(deform(Z, 1e-3, c), *q)
            d2 = mesh.tetra_det(deform(Z, 5e-4, c), *q)
            assert d1 / d2 == pytest.approx(4.0, abs=0.1)
            assert np.sign(d1) == reference_signs()[i]


class TestBlocks:
    def test_block_count_and_breakdown(self):
        assert len(BLOCKS) == 288
        from collections import Counter

        per_pair = Counter(pair for pair, _ in BLOCKS)
        sizes = Counter(per_pair.values())
        assert sizes[6] == 24
        assert sizes[2] == 72

    def test_blocks_use_five_distinct_labels(self):
        for _, b in BLOCKS:
            assert len(set(b.edge) | set(b.triangle)) == 5

    def test_vertex_sharing_blocks_use_opposite_edges(self):
        for pair, b in BLOCKS:
            t1 = set(mesh.TRIANGLES[pair[0]])
            t2 = set(mesh.TRIANGLES[pair[1]])
            shared = t1 & t2
            if len(shared) == 1:
                assert not (set(b.edge) & shared)


class TestEdgeTriangleDisjoint:
    def test_piercing_segment_violated(self):
        P = np.zeros((8, 3))
        # triangle (0,1,2) in the w=0 plane, segment (3,4) through its interior
        P[0] = (0, 0, 0)
        P[1] = (4, 0, 0)
        P[2] = (0, 4, 0)
        P[3] = (1, 1, -1)
        P[4] = (1, 1, 1)
        P[5] = (9.3, 9.1, 5.2)
        P[6] = (8.6, 7.9, 4.7)
        P[7] = (7.8, 9.4, 5.6)
        assert edge_triangle_disjoint(P, (3, 4), (0, 1, 2)) == "violated"
        assert edge_triangle_disjoint(P, (5, 6), (0, 1, 2)) == "satisfied"

    def test_coplanar_configuration_degenerate(self):
        P = np.zeros((8, 3))
        P[:, 0] = np.arange(8.0)
        P[:, 1] = np.arange(8.0) ** 1.5
        assert edge_triangle_disjoint(P, (3, 4), (0, 1, 2)) == "degenerate"

    def test_label_overlap_rejected(self):
        P = np.zeros((8, 3))
        with pytest.raises(ValueError):
            edge_triangle_disjoint(P, (0, 1), (1, 2, 3))


class TestEmbeddingClause:
    def test_reference_tent_embedded(self):
        assert embedding_clause(reference_tent()).embedded == "yes"

    def test_golden_tent_degenerate(self):
        v = embedding_clause(golden.golden_torus(Z))
        assert v.embedded == "degenerate"
        assert len(v.degenerate_quadruples) == 25

    def test_figure_deformation_embedded(self):
        assert embedding_clause(deform(Z, 0.125)).embedded == "yes"

    def test_violated_configuration_reports_block(self):
        # flatten the reference tent: coplanar -> degenerate, then shear to
        # force a genuine crossing
        rng = np.random.default_rng(5)
        P = reference_tent().copy()
        P[:, 2] = rng.uniform(-0.5, 0.5, size=8)
        v = embedding_clause(P)
        if v.embedded == "no":
            assert v.failing_block is not None
