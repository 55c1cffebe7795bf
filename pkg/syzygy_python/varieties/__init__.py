"""Homogeneous ideals of classical projective varieties and the construction grammar."""

from .constructions import ConstructionError, UnsupportedConstructionError
from .grammar import ConstructionResult, parse_construction

__all__ = [
    "ConstructionError",
    "UnsupportedConstructionError",
    "ConstructionResult",
    "parse_construction",
]
