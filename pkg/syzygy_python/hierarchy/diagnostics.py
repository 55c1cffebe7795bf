"""
Verdicts over computed Betti tables.

Each diagnostic returns a structured report instead of raising: a table that
breaks a hard implication is recorded as a falsifier, never accepted silently.
"""

import logging
from typing import Dict, Iterable, Mapping, Optional, Tuple

from ..core.models import (
    BettiTable,
    BoundCheck,
    BoundVerdict,
    ConditionReport,
    ConditionStatus,
    HierarchyBound,
    IdentityCheck,
    PointsDiagnostic,
    PointsEquivalence,
    binomial,
)
from .bounds import betti_bound, check_A0, degree_threshold

logger = logging.getLogger(__name__)


def condition_name(k: int, m: int) -> str:
    return f"A({k},{m})"


def points_identity_check(table: BettiTable, e: int, m: int) -> IdentityCheck:
    """
    Check β_{p,1} - β_{p-1,2} = p·C(e+1,p+1) - m·C(e,p-1) for d = e+1+m points.

    Residuals are recorded for every p ≥ 1 where either side is nonzero.
    """
    check = IdentityCheck(f"points identity (e={e}, m={m})")
    for p in range(1, max(e + 1, table.max_i) + 2):
        lhs = table.get(p, 1) - table.get(p - 1, 2)
        rhs = p * binomial(e + 1, p + 1) - m * binomial(e, p - 1)
        if lhs or rhs:
            check.residuals[p] = lhs - rhs
    if not check.holds:
        logger.warning(f"{check.name} fails at p={check.failing}")
    return check


def generalized_kp1_values(e: int, k: int) -> Tuple[int, int]:
    """The two values β_{e-k-2,1} may take under P(k, ·) when it is nonzero."""
    n = e - k
    return (n - 2) * binomial(n, n - 1) - binomial(n - 1, n - 3), n - 2


def kp1_diagnostic(
    table: BettiTable,
    e: int,
    d: int,
    declared_levels: Iterable[int] = ()
) -> ConditionReport:
    """
    Structured K_{p,1} implications for a table of codimension e and degree d.

    ``declared_levels`` lists the k for which the caller asserts P(k, ·);
    each adds the dichotomy on β_{e-k-2,1}.
    """
    report = ConditionReport(e=e, d=d)

    for p in sorted(i for i, j in table.entries if j == 1 and i >= e + 1):
        report.falsifiers.append(f"β_{p},1 = {table.get(p, 1)} must vanish for p ≥ e+1 = {e + 1}")

    top = table.get(e, 1)
    if top:
        if top == e:
            report.labels.append("VMD")
        else:
            report.falsifiers.append(f"β_{e},1 = {top} is nonzero but not e = {e}")

    below = table.get(e - 1, 1)
    if d >= e + 3 and below:
        if below == e - 1:
            report.labels.append("divisor in a VMD")
        else:
            report.falsifiers.append(f"β_{e - 1},1 = {below} is nonzero but not e-1 = {e - 1}")
    if not top and not below:
        report.messages.append("not contained in a VMD(n+1)")

    for k in sorted(set(declared_levels)):
        p = e - k - 2
        if p < 1:
            report.messages.append(f"P({k},·) gives no condition on β_p,1 for e={e}")
            continue
        observed = table.get(p, 1)
        report.hypotheses[f"P({k},·)"] = ConditionStatus.ASSERTED
        if not observed:
            report.messages.append(f"β_{p},1 = 0: not contained in a VMD(n+{k + 2})")
            continue
        allowed = generalized_kp1_values(e, k)
        if observed in allowed:
            report.labels.append(f"subvariety of a VMD(n+{k + 2})")
        else:
            report.falsifiers.append(
                f"β_{p},1 = {observed} under P({k},·) must be one of {sorted(set(allowed))}"
            )

    if report.falsifiers:
        logger.warning(f"K_p,1 diagnostic found {len(report.falsifiers)} falsifier(s)")
    return report


def verify_bounds(table: BettiTable, hb: HierarchyBound) -> ConditionReport:
    """
    Compare the quadratic strand of ``table`` with ``betti_bound(hb, ·)``.

    The table is extremal when every p ≥ 1 is an equality.
    """
    report = ConditionReport(e=hb.e, k=hb.k, m=hb.m)
    stop = max(hb.e - hb.k + 1, table.max_i)
    for p in range(1, stop + 1):
        observed = table.get(p, 1)
        bound = betti_bound(hb, p)
        if observed < bound:
            verdict = BoundVerdict.STRICT
        elif observed == bound:
            verdict = BoundVerdict.EQUAL
        else:
            verdict = BoundVerdict.VIOLATION
        report.bound_checks.append(BoundCheck(p, observed, bound, verdict))
    report.extremal = all(c.verdict is BoundVerdict.EQUAL for c in report.bound_checks)
    for v in report.violations:
        logger.warning(f"Bound {hb} violated at p={v.p}: β_{v.p},1 = {v.observed} > {v.bound}")
    return report


def initial_degree(table: BettiTable) -> Optional[int]:
    """Smallest degree of a minimal generator, read from column 1."""
    rows = [j for i, j in table.entries if i == 1]
    return min(rows) + 1 if rows else None


def satisfies_N2p(table: BettiTable, p: int) -> bool:
    return all(not v for (i, j), v in table.entries.items() if 1 <= i <= p and j >= 2)


def crv_points_diagnostic(table: BettiTable, r: int, d: int) -> PointsDiagnostic:
    """
    For d points in general position in P^r with initial degree t, compare at
    each 1 ≤ p ≤ r: N_{2,p}; β_{p,t} = 0; and
    β_{p+1,t-1} ≤ C(p+t-1, p)·C(r+t, p+t) - d·C(r, p).
    """
    t = initial_degree(table)
    if t is None:
        raise ValueError("Table has no minimal generators")
    diagnostic = PointsDiagnostic(r, d, t)
    for p in range(1, r + 1):
        limit = binomial(p + t - 1, p) * binomial(r + t, p + t) - d * binomial(r, p)
        diagnostic.checks.append(PointsEquivalence(
            p=p,
            n2p=satisfies_N2p(table, p),
            vanishing=table.get(p, t) == 0,
            bound=table.get(p + 1, t - 1) <= limit,
        ))
    if not diagnostic.consistent:
        bad = [c.p for c in diagnostic.checks if not c.consistent]
        logger.warning(f"Points equivalence inconsistent for r={r}, d={d} at p={bad}")
    return diagnostic


def max_quadrics_check(table: BettiTable, e: int, d: int, is_acm: bool) -> ConditionReport:
    """β_{1,1} = C(e+1,2) - m exactly when the variety is ACM, for d = e+1+m, 0 ≤ m ≤ e-1."""
    report = ConditionReport(e=e, d=d, m=d - e - 1)
    m = d - e - 1
    if not 0 <= m <= e - 1:
        report.messages.append(f"maximal quadrics check needs e+1 ≤ d ≤ 2e, got d={d}")
        return report
    maximal = table.get(1, 1) == binomial(e + 1, 2) - m
    if maximal != is_acm:
        report.falsifiers.append(
            f"β_1,1 = {table.get(1, 1)} {'equals' if maximal else 'differs from'} "
            f"C(e+1,2)-m = {binomial(e + 1, 2) - m} but acm={str(is_acm).lower()}"
        )
    else:
        report.messages.append(
            f"maximal number of quadrics: {str(maximal).lower()}, acm: {str(is_acm).lower()}"
        )
    return report


def _status(
    name: str,
    declared: Mapping[str, ConditionStatus],
    witnessed: Iterable[str]
) -> Optional[ConditionStatus]:
    if name in witnessed:
        return ConditionStatus.WITNESSED
    return declared.get(name)


def assess_conditions(
    e: int,
    d: int,
    k: int = 0,
    m: int = 0,
    declared: Optional[Mapping[str, ConditionStatus]] = None,
    witnessed: Iterable[str] = ()
) -> ConditionReport:
    """
    Hypothesis part of a report for P(k, m).

    P(k, m) expands to A(k, m) and A(i, d_i) for i < k. A(0, m) is decided by
    degree (it holds iff d ≥ e+m+1, X itself being the only candidate); higher
    levels are never computed, only taken from ``declared`` (caller
    assertions) or ``witnessed`` (known by construction).
    """
    declared = dict(declared or {})
    witnessed = set(witnessed)
    report = ConditionReport(e=e, d=d, k=k, m=m)
    needed: Dict[str, Tuple[int, int]] = {condition_name(k, m): (k, m)}
    for i in range(k):
        needed[condition_name(i, degree_threshold(e, i))] = (i, degree_threshold(e, i))
    for name, (level, offset) in needed.items():
        status = _status(name, declared, witnessed)
        if status is None and level == 0:
            status = ConditionStatus.HOLDS if check_A0(e, d, offset) else ConditionStatus.FAILS
        report.hypotheses[name] = status or ConditionStatus.UNKNOWN
    report.containments.extend(sorted(witnessed))
    unknown = [n for n, s in report.hypotheses.items() if s is ConditionStatus.UNKNOWN]
    if unknown:
        report.messages.append(f"hypotheses not settled: {', '.join(unknown)}")
    failing = [n for n, s in report.hypotheses.items() if s is ConditionStatus.FAILS]
    if failing:
        report.messages.append(f"hypotheses failing, the bound does not apply: {', '.join(failing)}")
    return report
