"""
Validation utilities for the syzygy engine.

This module provides the self-checks run on every resolution as well as
checks on tables, commands and point configurations.
"""

from typing import Any, Dict, Optional

import numpy as np

from ..algebra.fields import FieldSpec
from ..algebra.groebner import Ideal
from ..algebra.resolution import (
    FreeResolution,
    betti_table,
    composition_is_zero,
    exactness_certificate,
    hilbert_series,
    unit_entries,
)
from ..core.models import BettiTable, Command, PointConfiguration, VERBS
from ..varieties.constructions import general_position_check


class ValidationError(Exception):
    """Custom exception for failed engine self-checks."""
    pass


class ValidationUtils:
    """Validation utilities for resolutions, Betti tables and commands."""

    @staticmethod
    def validate_resolution(
        ideal: Ideal,
        resolution: FreeResolution,
        samples: int = 2,
        rng: Optional[np.random.Generator] = None
    ) -> Dict[str, Any]:
        """
        Check a minimal resolution of S/I.

        Args:
            ideal: The resolved ideal
            resolution: Its minimal resolution
            samples: Random evaluations for the exactness certificate (0 skips it)
            rng: Generator for the evaluation points

        Returns:
            Dictionary with validation results and the individual checks
        """
        issues = []
        warnings = []
        checks: Dict[str, bool] = {}

        nvars = resolution.ring.nvars
        checks["length"] = resolution.length <= nvars
        if not checks["length"]:
            issues.append(f"Projective dimension {resolution.length} exceeds {nvars}")

        checks["composition"] = composition_is_zero(resolution)
        if not checks["composition"]:
            issues.append("Consecutive differentials do not compose to zero")

        units = unit_entries(resolution)
        checks["minimal"] = resolution.minimal and not units
        if not checks["minimal"]:
            issues.append(f"Resolution is not minimal: {len(units)} unit entries")

        if checks["minimal"]:
            numerator, _ = hilbert_series(ideal)
            euler = betti_table(resolution).euler_numerator()
            checks["euler"] = euler == numerator
            if not checks["euler"]:
                issues.append(f"Euler characteristic {euler} differs from Hilbert numerator {numerator}")

        if samples > 0:
            exact = exactness_certificate(resolution, rng, samples)
            checks["exactness"] = all(exact.values())
            if not checks["exactness"]:
                failing = [i for i, ok in exact.items() if not ok]
                warnings.append(f"Rank certificate inconclusive at homological degrees {failing}")

        return {
            "valid": len(issues) == 0,
            "issues": issues,
            "warnings": warnings,
            "checks": checks
        }

    @staticmethod
    def validate_betti_table(table: BettiTable) -> Dict[str, Any]:
        """
        Validate the shape of a Betti table of a cyclic module S/I.

        Args:
            table: Table to validate

        Returns:
            Dictionary with validation results
        """
        issues = []
        warnings = []

        if table.is_empty:
            issues.append("Betti table is empty")
        elif table.get(0, 0) != 1:
            issues.append(f"β_0,0 must be 1, got {table.get(0, 0)}")

        stray = [(i, j) for i, j in table.entries if i == 0 and j != 0]
        if stray:
            issues.append(f"Column 0 has entries outside row 0: {stray}")

        if table.get(1, 0):
            warnings.append(f"Ideal contains {table.get(1, 0)} linear forms (degenerate embedding)")

        if table.e is not None and table.max_i < table.e:
            issues.append(f"Length {table.max_i} is below the codimension {table.e}")

        return {
            "valid": len(issues) == 0,
            "issues": issues,
            "warnings": warnings
        }

    @staticmethod
    def validate_command(command: Command) -> Dict[str, Any]:
        """
        Validate a CLI command beyond what the model itself enforces.

        Args:
            command: Command to validate

        Returns:
            Dictionary with validation results
        """
        issues = []
        warnings = []

        if command.verb not in VERBS:
            issues.append(f"Unknown verb: {command.verb}")

        if command.verb in ("construct", "resolve", "betti", "reproduce") and not command.target:
            issues.append(f"'{command.verb}' needs a target")

        field = FieldSpec.parse(command.field)
        if not field.is_rational and field.characteristic < 1000:
            warnings.append(f"Small characteristic {field.characteristic} may change Betti numbers")

        if command.timeout > 3600:
            warnings.append(f"Timeout of {command.timeout:.0f} s is unusually long")

        return {
            "valid": len(issues) == 0,
            "issues": issues,
            "warnings": warnings
        }

    @staticmethod
    def validate_points(config: PointConfiguration, field: FieldSpec) -> Dict[str, Any]:
        """
        Validate a point configuration.

        Args:
            config: Points to validate
            field: Field the coordinates live in

        Returns:
            Dictionary with validation results
        """
        issues = []
        warnings = []

        if len(set(config.points)) != len(config.points):
            issues.append("Point configuration contains repeated points")

        if not general_position_check(config.points, field):
            if config.general:
                issues.append("Points flagged general are not in linearly general position")
            else:
                warnings.append("Points are not in linearly general position")

        return {
            "valid": len(issues) == 0,
            "issues": issues,
            "warnings": warnings
        }

    @staticmethod
    def validate_and_raise(validation_result: Dict[str, Any], context: str = "") -> None:
        """
        Validate a result and raise ValidationError if invalid.

        Args:
            validation_result: Result from validation function
            context: Additional context for error message

        Raises:
            ValidationError: If validation failed
        """
        if not validation_result["valid"]:
            context_str = f" ({context})" if context else ""
            issues_str = "; ".join(validation_result["issues"])
            raise ValidationError(f"Validation failed{context_str}: {issues_str}")


def validate_resolution(
    ideal: Ideal,
    resolution: FreeResolution,
    samples: int = 2,
    rng: Optional[np.random.Generator] = None
) -> Dict[str, bool]:
    """Run the resolution self-checks, raising ValidationError on failure."""
    result = ValidationUtils.validate_resolution(ideal, resolution, samples, rng)
    ValidationUtils.validate_and_raise(result, "resolution")
    return result["checks"]
