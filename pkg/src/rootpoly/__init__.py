"""Exact computation of Jacobi and Macdonald polynomials for small root systems,
Dunkl-type operators, and the one-variable Bessel / Gegenbauer /
q-ultraspherical tower."""

from .exactnum import ComplexRational, QRat, VPoly
from .laurent import LaurentPoly
from .orthopoly import JACOBI, MACDONALD, OrthoPoly, ortho_poly
from .rootdata import MultiplicityFn, RootSystem, build_root_system

__version__ = "0.1.0"

__all__ = [
    "ComplexRational", "QRat", "VPoly", "LaurentPoly", "JACOBI", "MACDONALD",
    "OrthoPoly", "ortho_poly", "MultiplicityFn", "RootSystem", "build_root_system",
]
