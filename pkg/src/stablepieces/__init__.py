"""Stable-piece combinatorics of wonderful group compactifications."""

from .pieces import PieceContext, TwistedPiece, piece_id
from .rootsys import (
    DiagramAutomorphism,
    RootSystem,
    Weight,
    build_root_system,
    make_automorphism,
    parse_automorphism_spec,
    weight_predicates,
)
from .weyl import WeylElement, WeylGroup, element_string

__all__ = [
    "DiagramAutomorphism",
    "PieceContext",
    "RootSystem",
    "TwistedPiece",
    "Weight",
    "WeylElement",
    "WeylGroup",
    "build_root_system",
    "element_string",
    "make_automorphism",
    "parse_automorphism_spec",
    "piece_id",
    "weight_predicates",
]

__version__ = "0.1.0"
