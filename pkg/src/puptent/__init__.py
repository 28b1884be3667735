"""Eight-vertex polyhedral flat tori.

Construction of the golden tent family over the bi-cusped modular
domain, its special deformation, sign-based embedding certification with
an exact geometric oracle, Newton correction to exactly flat embedded
tori, and shape diagnostics (hulls, good polygons, Hausdorff distance,
the modulus map).
"""

from .golden import ModularParameter, classify, gammas, golden_torus, intrinsic_chart, verify_isometry
from .angles import angle_jacobian, cone_angles, flatness_defect
from .deformation import deform, deformation_coefficients, order2_line_arrangement
from .embedding import (
    embedding_clause,
    reference_tent,
    sign_list,
    matches_reference_signs,
)
from .exact import exact_intersection_oracle
from .flatten import convergence_probe, default_schedule, solve_flat, sweep
from .shape import (
    convex_hull,
    good_polygon,
    hausdorff,
    modular_distance,
    modulus_of,
    normalize_similarity,
)
from .report import plane_slice, to_obj, torus_report

__version__ = "0.1.0"

__all__ = [
    "ModularParameter",
    "classify",
    "gammas",
    "golden_torus",
    "intrinsic_chart",
    "verify_isometry",
    "cone_angles",
    "flatness_defect",
    "angle_jacobian",
    "deformation_coefficients",
    "deform",
    "order2_line_arrangement",
    "sign_list",
    "embedding_clause",
    "matches_reference_signs",
    "reference_tent",
    "exact_intersection_oracle",
    "solve_flat",
    "convergence_probe",
    "sweep",
    "default_schedule",
    "convex_hull",
    "good_polygon",
    "hausdorff",
    "normalize_similarity",
    "modulus_of",
    "modular_distance",
    "torus_report",
    "plane_slice",
    "to_obj",
]
