"""Exact chromatic invariants of binary delta-matroids, framed graphs and ribbon graphs."""

__version__ = "0.1.0"

from .binary import (
    F2SymMatrix,
    delta_matroid_of_matrix,
    enumerate_binary_delta_matroids,
    is_binary,
    is_even,
    is_graphical,
    reconstruct_matrix,
)
from .graphs import FramedGraph, delta_matroid_of_framed_graph
from .hopf import HopfElement, character_xi, coproduct, primitive_projection
from .ribbon import ChordDiagram, RibbonEdge, RibbonGraph, delta_matroid_of_ribbon_graph
from .setsystem import (
    DeltaMatroid,
    SetSystem,
    SetSystemError,
    SEAViolation,
    canonicalize,
    product,
    restrict,
    twist,
    validate_delta_matroid,
)
from .symfunc import SymFunc, chromatic, specialize_all
from .xpoly import XPoly

__all__ = [
    "ChordDiagram",
    "DeltaMatroid",
    "F2SymMatrix",
    "FramedGraph",
    "HopfElement",
    "RibbonEdge",
    "RibbonGraph",
    "SEAViolation",
    "SetSystem",
    "SetSystemError",
    "SymFunc",
    "XPoly",
    "canonicalize",
    "character_xi",
    "chromatic",
    "coproduct",
    "delta_matroid_of_framed_graph",
    "delta_matroid_of_matrix",
    "delta_matroid_of_ribbon_graph",
    "enumerate_binary_delta_matroids",
    "is_binary",
    "is_even",
    "is_graphical",
    "primitive_projection",
    "product",
    "reconstruct_matrix",
    "restrict",
    "specialize_all",
    "twist",
    "validate_delta_matroid",
]
