"""
Syzygy engine: exact graded free resolutions and quadratic strand bounds.

Computes minimal graded free resolutions of homogeneous ideals over QQ and
prime fields, reads off Betti tables and numeric invariants, and checks the
quadratic strand β_{p,1} of a projective variety against the hierarchy of
upper bounds indexed by (e, k, m).

Key Components:
- Algebra: exact fields, polynomials, Gröbner bases, Schreyer resolutions
- Varieties: scrolls, Veronese curves, projections, points, monomial curves
- Hierarchy: bound formulas, closed-form tables and table diagnostics
- Reproduction: golden Betti tables rebuilt from their constructions
"""

from .core.engine import SyzygyEngine, ResolutionResult, resolve
from .core.models import (
    BettiTable,
    NumericInvariants,
    HierarchyBound,
    ConditionReport,
    ConditionStatus,
    BoundVerdict,
    ReproReport,
    ReproStatus,
    Command,
)
from .algebra import FieldSpec, Ring, Polynomial, Ideal
from .config import SyzygySettings, CommandBuilder

__version__ = "0.1.0"
__author__ = "Syzygy Engine Developers"

__all__ = [
    "SyzygyEngine",
    "ResolutionResult",
    "resolve",
    "BettiTable",
    "NumericInvariants",
    "HierarchyBound",
    "ConditionReport",
    "ConditionStatus",
    "BoundVerdict",
    "ReproReport",
    "ReproStatus",
    "Command",
    "FieldSpec",
    "Ring",
    "Polynomial",
    "Ideal",
    "SyzygySettings",
    "CommandBuilder",
]
