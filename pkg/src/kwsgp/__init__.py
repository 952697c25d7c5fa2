"""Kunz-Waldi numerical semigroups: invariants, principal matrices,
presentations, resolutions and the three-dimensional class."""

from .kw2d import KWCorners, KWParams, build_kw, enumerate_kw, kw_corners
from .kw3d import KW3Params, build_kw3, gap_rep, scan_tables, type3_theorem
from .presentation import appendix_generators, betti_elements, verify_kw_presentation
from .principal import closed_form, principal_matrix_bruteforce, verify_theorem31
from .resolution import resolution_ed3, resolution_ed4, verify_complex
from .semigroup import NumericalSemigroup, build, minimalize, semigroup

__all__ = [
    "KWCorners", "KWParams", "build_kw", "enumerate_kw", "kw_corners",
    "KW3Params", "build_kw3", "gap_rep", "scan_tables", "type3_theorem",
    "appendix_generators", "betti_elements", "verify_kw_presentation",
    "closed_form", "principal_matrix_bruteforce", "verify_theorem31",
    "resolution_ed3", "resolution_ed4", "verify_complex",
    "NumericalSemigroup", "build", "minimalize", "semigroup",
]
