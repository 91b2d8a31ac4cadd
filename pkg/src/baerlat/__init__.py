"""Baer elements, Baer closures and annihilators in finite multiplicative lattices."""

from .errors import ParseError, PreconditionViolated, StructureError, ValidationError
from .lattice import FiniteLattice, build_lattice
from .quantale import MultLattice, is_reduced, validate_quantale

__all__ = [
    "FiniteLattice", "build_lattice", "MultLattice", "validate_quantale", "is_reduced",
    "StructureError", "ParseError", "ValidationError", "PreconditionViolated",
]
__version__ = "0.1.0"
