"""
Syzygy engine orchestration.

This module contains the SyzygyEngine class that ties constructions,
resolutions and the bound diagnostics together, and the ``resolve``
convenience used by the CLI.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from ..algebra.fields import FieldSpec
from ..algebra.groebner import Ideal
from ..algebra.polynomial import MonomialOrder
from ..algebra.resolution import (
    FreeResolution,
    betti_from_constant_ranks,
    betti_table,
    minimal_generator_counts,
    minimalize,
    numeric_invariants,
    reduce_hilbert_numerator,
    hilbert_series,
    schreyer_frame,
)
from ..config.settings import SyzygySettings
from ..hierarchy.bounds import bound_row
from ..hierarchy.diagnostics import assess_conditions, kp1_diagnostic, verify_bounds
from ..utils.golden import get_target
from ..utils.validation import ValidationUtils
from ..varieties.grammar import ConstructionResult, parse_construction
from .models import (
    BettiTable,
    ConditionReport,
    ConditionStatus,
    HierarchyBound,
    NumericInvariants,
    ReproReport,
    ReproStatus,
    ReproTarget,
)

logger = logging.getLogger(__name__)

TRUNCATION_DEGREE = 3


@dataclass
class ResolutionResult:
    """A minimal resolution with its table, invariants and self-check outcomes."""
    ideal: Ideal
    resolution: FreeResolution
    table: BettiTable
    invariants: Optional[NumericInvariants]
    checks: Dict[str, bool] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def resolve(
    ideal: Ideal,
    verify: bool = True,
    samples: int = 2,
    seed: int = 0,
    order: Optional[MonomialOrder] = None
) -> ResolutionResult:
    """
    Minimal resolution of S/I with Betti table, numeric invariants and the
    self-checks: length, d∘d = 0, minimality, Euler identity, a rank
    certificate of exactness and agreement with the Betti numbers read off
    the non-minimal frame.

    Raises:
        ValidationError: a self-check fails while ``verify`` is set
    """
    start = time.time()
    frame = schreyer_frame(ideal, order=order)
    minimal = minimalize(frame)
    table = betti_table(minimal)
    invariants = numeric_invariants(ideal, minimal) if not ideal.is_zero else None
    if invariants is not None:
        table.e = invariants.codimension

    validation = ValidationUtils.validate_resolution(
        ideal, minimal, samples, np.random.default_rng(seed)
    )
    checks = dict(validation["checks"])
    checks["frame"] = betti_from_constant_ranks(frame) == table
    if not checks["frame"]:
        validation["issues"].append("Betti numbers of the frame disagree with the minimal resolution")
        validation["valid"] = False
    if verify:
        ValidationUtils.validate_and_raise(validation, "resolution")
    for warning in validation["warnings"]:
        logger.warning(warning)

    elapsed = time.time() - start
    logger.info(f"Resolved in {elapsed:.2f}s: ranks {minimal.ranks()}")
    return ResolutionResult(ideal, minimal, table, invariants, checks, validation["warnings"], elapsed)


class SyzygyEngine:
    """
    Main entry point for library use.

    Holds the settings that fix field, seed and check behaviour, so that a
    run is determined by the engine settings and the call arguments.
    """

    def __init__(self, settings: Optional[SyzygySettings] = None):
        """
        Initialize the engine.

        Args:
            settings: Engine settings. If None, defaults are used.
        """
        self.settings = settings or SyzygySettings()
        self.field = self.settings.field_spec()
        logger.info(f"Syzygy engine initialized over {self.field}")

    def _field(self, field_spec: Optional[FieldSpec]) -> FieldSpec:
        return field_spec or self.field

    def construct(
        self,
        spec: str,
        field_spec: Optional[FieldSpec] = None,
        seed: Optional[int] = None
    ) -> ConstructionResult:
        """Evaluate a construction spec."""
        return parse_construction(
            spec,
            self._field(field_spec),
            self.settings.default_seed if seed is None else seed,
            self.settings.random_height,
            self.settings.degree_bound,
        )

    def resolve(
        self,
        ideal: Ideal,
        order: Optional[MonomialOrder] = None,
        seed: Optional[int] = None
    ) -> ResolutionResult:
        return resolve(
            ideal,
            verify=self.settings.verify_resolutions,
            samples=self.settings.exactness_samples,
            seed=self.settings.default_seed if seed is None else seed,
            order=order,
        )

    def betti(self, spec: str, field_spec: Optional[FieldSpec] = None, seed: Optional[int] = None) -> BettiTable:
        """Betti table of the ideal a construction spec describes."""
        return self.resolve(self.construct(spec, field_spec, seed).ideal).table

    def verify(
        self,
        table: BettiTable,
        e: int,
        d: int,
        k: int = 0,
        m: Optional[int] = None,
        declared: Optional[Mapping[str, ConditionStatus]] = None,
        witnessed: Iterable[str] = (),
        declared_levels: Iterable[int] = ()
    ) -> ConditionReport:
        """
        Full verdict on one table: hypotheses, per-p bound comparison and the
        K_{p,1} diagnostic. ``m`` defaults to d-e-1 clamped to [0, e-k].
        """
        if m is None:
            m = min(max(d - e - 1, 0), e - k)
        hb = HierarchyBound(e, k, m)
        report = assess_conditions(e, d, k, m, declared, witnessed)
        report.merge(verify_bounds(table, hb))
        report.merge(kp1_diagnostic(table, e, d, declared_levels))
        logger.info(
            f"Verified table against {hb}: exit code {report.exit_code()}, "
            f"{len(report.violations)} violation(s)"
        )
        return report

    def bounds(self, e: int, k: int = 0, m: Optional[int] = None) -> Dict[str, Dict[int, int]]:
        """Bound rows for one (e, k, m), or for every admissible m when m is None."""
        offsets = [m] if m is not None else list(range(0, e - k + 1))
        return {
            str(HierarchyBound(e, k, x)): bound_row(HierarchyBound(e, k, x), e - k + 1)
            for x in offsets
        }

    def reproduce(
        self,
        target_id: str,
        field_spec: Optional[FieldSpec] = None,
        truncated: bool = False
    ) -> ReproReport:
        """
        Construct a golden target, compute its table and diff it cell by cell.

        With ``truncated`` only generators up to degree 3 are compared, from a
        degree-truncated Gröbner basis; this is the fallback for heavy targets.
        """
        fld = self._field(field_spec)
        target = get_target(target_id, self.settings.golden_dir)
        start = time.time()
        try:
            if truncated:
                report = self._reproduce_truncated(target, fld)
            else:
                report = self._reproduce_full(target, fld)
        except Exception as e:
            logger.error(f"Reproducing {target_id} failed: {e}")
            report = ReproReport(target_id, ReproStatus.ERROR, str(fld), details={"error": str(e)})
        report.elapsed_seconds = time.time() - start
        logger.info(f"Target {target_id} over {fld}: {report.status.value} in {report.elapsed_seconds:.1f}s")
        return report

    def _reproduce_full(self, target: ReproTarget, fld: FieldSpec) -> ReproReport:
        construction = self.construct(target.construction, fld)
        result = self.resolve(construction.ideal)
        mismatches = target.expected_table.diff(result.table)
        details = {
            "construction": target.construction,
            "degree": str(result.invariants.degree if result.invariants else 0),
            "codimension": str(result.invariants.codimension if result.invariants else 0),
        }
        verdict = self.verify(result.table, target.e, target.d, m=target.m)
        details["verify_exit_code"] = str(verdict.exit_code())
        if verdict.exit_code() != 0:
            mismatches.append(f"verify: expected exit code 0, got {verdict.exit_code()}")
        if target.quadric_surface is not None:
            surface, wrong = self._check_quadric_surface(construction.ideal, target.quadric_surface)
            details.update(surface)
            mismatches.extend(wrong)
        status = ReproStatus.PASS if not mismatches else ReproStatus.MISMATCH
        return ReproReport(target.id, status, str(fld), mismatches=mismatches, details=details)

    def _reproduce_truncated(self, target: ReproTarget, fld: FieldSpec) -> ReproReport:
        construction = parse_construction(
            target.construction, fld, self.settings.default_seed, self.settings.random_height,
            degree_bound=TRUNCATION_DEGREE,
        )
        counts = minimal_generator_counts(construction.ideal, TRUNCATION_DEGREE)
        mismatches = []
        for j in (1, 2):
            expected = target.expected_table.get(1, j)
            if counts.get(j, 0) != expected:
                mismatches.append(f"β_1,{j}: expected {expected}, got {counts.get(j, 0)}")
        status = ReproStatus.PASS if not mismatches else ReproStatus.MISMATCH
        details = {"construction": target.construction, "mode": "truncated"}
        return ReproReport(target.id, status, str(fld), mismatches=mismatches, details=details)

    @staticmethod
    def _quadric_surface(ideal: Ideal) -> Dict[str, str]:
        """Degree and codimension of the scheme cut out by the quadrics of ``ideal``."""
        numerator, h_vector = hilbert_series(ideal.quadric_part())
        _, codim = reduce_hilbert_numerator(numerator)
        return {"quadrics.degree": str(sum(h_vector)), "quadrics.codimension": str(codim)}

    @classmethod
    def _check_quadric_surface(
        cls,
        ideal: Ideal,
        expected: Tuple[int, int]
    ) -> Tuple[Dict[str, str], List[str]]:
        """Quadric scheme details and one mismatch per differing (degree, codimension)."""
        details = cls._quadric_surface(ideal)
        mismatches = []
        for key, want in zip(("quadrics.degree", "quadrics.codimension"), expected):
            if details[key] != str(want):
                mismatches.append(f"{key}: expected {want}, got {details[key]}")
        return details, mismatches
