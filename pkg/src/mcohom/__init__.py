"""Exact GF(2) cohomology of the maximal-class Lie algebras m0, m2 and their truncations."""

__version__ = "0.1.0"

from .exterior import Form, e, parse_form, render, wedge  # noqa: E402
from .lie import LieAlgebra, make_m0, make_m2, validate  # noqa: E402
from .cohomology import betti, betti_graded, cohomology_basis, d_apply  # noqa: E402

__all__ = [
    "Form", "e", "parse_form", "render", "wedge",
    "LieAlgebra", "make_m0", "make_m2", "validate",
    "betti", "betti_graded", "cohomology_basis", "d_apply",
]
