"""Exact combinatorial models of perverse sheaves on complexified real arrangements."""

from .arrangement import (Arrangement, FacePoset, S1Cell, boolean, collinear, compose, concurrent_lines,
                          coordinate_cross, enumerate_faces, flats, line_point, parallel_points)
from .cousin import global_complex, perversity_support_check, smoothness_check, stalk_complex
from .exactla import QQ, ChainComplex, ChainMap, Field, Matrix, cohomology, lp_feasible
from .quiver import DoubleRep, constant_quiver, dual, multiplicities, restrict_flat, slice, transition, validate

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "FacePoset", "S1Cell", "boolean", "collinear", "compose", "concurrent_lines",
    "coordinate_cross", "enumerate_faces", "flats", "line_point", "parallel_points",
    "global_complex", "perversity_support_check", "smoothness_check", "stalk_complex",
    "QQ", "ChainComplex", "ChainMap", "Field", "Matrix", "cohomology", "lp_feasible",
    "DoubleRep", "constant_quiver", "dual", "multiplicities", "restrict_flat", "slice", "transition", "validate",
]
