"""Developable rollers assembled from cone modules on Platonic solid faces."""

__version__ = "0.1.0"

from .solids import SOLID_NAMES, PlatonicSolid, SymmetryOp, build_solid, dual_dihedral, symmetry_group

__all__ = [
    "SOLID_NAMES",
    "PlatonicSolid",
    "SymmetryOp",
    "build_solid",
    "dual_dihedral",
    "symmetry_group",
    "__version__",
]
