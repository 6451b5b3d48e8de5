"""Exact Jones-Wenzl projections in Temperley-Lieb algebras of types A and B,
their coefficients, and the Dyck-tiling generating functions that produce them."""

from .diagram import Diagram, DiagramError, all_diagrams, compose, from_path, g_diagram, generator, identity, parse_diagram, to_path
from .paths import DottedPath, DyckPath, PathError
from .projector import Element, coeff_recursive, jw, jw_morrison, jw_wenzl, verify_projector
from .scalar import LaurentPoly, Scalar, ScalarError, qint, qint_b
from .tiling import enumerate_tilings, gf_A, gf_B, tiling_weight

__version__ = "0.1.0"

__all__ = [
    "Diagram", "DiagramError", "DottedPath", "DyckPath", "Element", "LaurentPoly", "PathError",
    "Scalar", "ScalarError", "all_diagrams", "coeff_recursive", "compose", "enumerate_tilings",
    "from_path", "g_diagram", "generator", "gf_A", "gf_B", "identity", "jw", "jw_morrison",
    "jw_wenzl", "parse_diagram", "qint", "qint_b", "tiling_weight", "to_path", "verify_projector",
]
