"""Core data models of the syzygy engine."""

from .models import (
    BettiTable,
    NumericInvariants,
    HierarchyBound,
    BoundCheck,
    ConditionReport,
    ConditionStatus,
    BoundVerdict,
    ReproTarget,
    ReproReport,
    ReproStatus,
    Command,
)

__all__ = [
    "BettiTable",
    "NumericInvariants",
    "HierarchyBound",
    "BoundCheck",
    "ConditionReport",
    "ConditionStatus",
    "BoundVerdict",
    "ReproTarget",
    "ReproReport",
    "ReproStatus",
    "Command",
]
