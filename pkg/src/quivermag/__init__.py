"""Exact invariants of bound quiver algebras.

Parses a quiver with monomial relations, enumerates the path basis of the
resulting finite-dimensional algebra, and computes — all in exact rational
arithmetic — its Cartan matrix, minimal projective resolutions, Ext tables,
Euler form, and the magnitude of its category of indecomposable projective
modules, together with machine-checked identities tying these together.
"""

from .linalg import (Matrix, column_space_basis, determinant, hstack, invert,
                     kernel_basis, rank, rref, solve)
from .magnitude import (Check, GrothClass, MagnitudeResult, VerificationReport,
                        class_of_projective, euler_form, euler_matrix, magnitude,
                        simple_in_projective_basis, verify, weighted_euler_sum)
from .modules import (ModuleMap, Representation, direct_sum, kernel, radical,
                      radical_contains, simple_module, top, zero_module)
from .path_algebra import (InfiniteDimensionalError, PathBasis, cartan_matrix,
                           enumerate_paths, projective_module)
from .quiver import (Arrow, BoundQuiver, ParseError, Path, Quiver, QuiverError,
                     ValidationError, find_reachable_cycle, is_finite_dimensional,
                     parse_quiver, parse_quiver_with_warnings, quiver_json_dict,
                     serialize_quiver)
from .resolutions import (ExtTable, IncompleteExtTableError, MinimalResolution,
                          ext_table, minimal_projective_resolution, projective_cover)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "BoundQuiver", "Check", "ExtTable", "GrothClass",
    "IncompleteExtTableError", "InfiniteDimensionalError", "MagnitudeResult",
    "Matrix", "MinimalResolution", "ModuleMap", "ParseError", "Path", "PathBasis",
    "Quiver", "QuiverError", "Representation", "ValidationError",
    "VerificationReport", "cartan_matrix", "class_of_projective",
    "column_space_basis", "determinant", "direct_sum", "enumerate_paths",
    "euler_form", "euler_matrix", "ext_table", "find_reachable_cycle", "hstack",
    "invert", "is_finite_dimensional", "kernel", "kernel_basis", "magnitude",
    "minimal_projective_resolution", "parse_quiver", "parse_quiver_with_warnings",
    "projective_cover", "projective_module", "quiver_json_dict", "radical",
    "radical_contains", "rank", "rref", "serialize_quiver", "simple_in_projective_basis",
    "simple_module", "solve", "top", "verify", "weighted_euler_sum", "zero_module",
]
