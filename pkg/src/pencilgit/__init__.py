"""Exact computations for pencils of binary cubics under PGL2: invariants,
stability, Wall normal forms, orbit atlas, finite subgroups, graded rings
over Z and character decompositions."""

from .fields import FieldError, ParseError, field_from_spec
from .forms import BinaryForm, Pencil, ProjectivePoint, pencil_from_coeffs, pencil_from_plucker
from .invariants import StabilityClass, classify_stability, newstead_point, pencil_invariants
from .groups import ProjMatrix, act, stabilizer, subgroup
from .atlas import classify_orbit, parse_pencil, phi_fiber, s4_on_rho, wall_normal_form, wall_pencil
from .chow import builtin, graded_piece, in_ideal, quotient
from .characters import decompose, group_data
from .verify import Report, VerifyConfig, verify_all

__version__ = "0.1.0"

__all__ = [
    "BinaryForm", "FieldError", "ParseError", "Pencil", "ProjMatrix", "ProjectivePoint", "Report",
    "StabilityClass", "VerifyConfig", "act", "builtin", "classify_orbit", "classify_stability",
    "decompose", "field_from_spec", "graded_piece", "group_data", "in_ideal", "newstead_point",
    "parse_pencil", "pencil_from_coeffs", "pencil_from_plucker", "pencil_invariants", "phi_fiber",
    "quotient", "s4_on_rho", "stabilizer", "subgroup", "verify_all", "wall_normal_form", "wall_pencil",
]
