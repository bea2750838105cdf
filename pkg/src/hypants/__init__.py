"""Parabolic pants representations, the Whitehead link family, and horoball
packing estimates in hyperbolic 3-space."""

from .horoball import (
    CuspLattice,
    GroupGenerators,
    Horoball,
    Horocycle,
    apply_to_horoball,
    horocycle_length,
    maximal_cusp_height,
    orbit_enumerate,
    rigid_group,
)
from .moebius import INF, ComplexValue, MoebiusTransform, apply_boundary, classify, compose, fixed_points, mat
from .packing import (
    intersection_area_bound,
    intersection_number,
    parity_check,
    seen_area_inequality,
    straddle_min_height,
    tangent_product,
)
from .pantsrep import PantsRepresentation, classify_pants_rep, extract_q_param
from .report import ClaimReport
from .whitehead import build_rho, index_volume_check, lobachevsky, nr_parameter, tet_volume, whitehead_volume

__version__ = "0.1.0"
