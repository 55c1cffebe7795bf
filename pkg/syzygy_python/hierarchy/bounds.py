"""
Upper bounds on the quadratic strand β_{p,1} and their thresholds.

All functions are pure and use the extended binomial convention
C(n, j) = 0 outside 0 ≤ j ≤ n.
"""

import logging
from typing import Dict, List

import sympy

from ..core.models import (
    BettiTable,
    BoundParameterError,
    EligibleTablePair,
    HierarchyBound,
    binomial,
)

logger = logging.getLogger(__name__)


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 ≤ k ≤ n."""
    return binomial(n, k)


def betti_bound(hb: HierarchyBound, p: int) -> int:
    """
    Upper bound on β_{p,1} for a variety satisfying P(k, m) in codimension e.

    Below the turning point t = e+1-m-k the bound is
    p·C(e+1-k, p+1) - m·C(e-k, p-1); from t on it is p·C(e-k, p+1).
    Both branches agree at p = t.

    Raises:
        BoundParameterError: p < 1
    """
    if p < 1:
        raise BoundParameterError(f"Bound index p={p} must be at least 1")
    e, k, m = hb.e, hb.k, hb.m
    turning = hb.turning_point
    lower = p * binom(e + 1 - k, p + 1) - m * binom(e - k, p - 1)
    upper = p * binom(e - k, p + 1)
    if p == turning:
        assert lower == upper, f"bound branches disagree at p={p} for {hb}: {lower} != {upper}"
        return lower
    return lower if p < turning else upper


def bound_row(hb: HierarchyBound, stop: int) -> Dict[int, int]:
    """``{p: betti_bound(hb, p)}`` for 1 ≤ p ≤ stop."""
    return {p: betti_bound(hb, p) for p in range(1, stop + 1)}


def degree_threshold(e: int, i: int) -> int:
    """d_i = 2^(e-i) - (e-i), the degree entering A(i, d_i) in P(k, m)."""
    if not 0 <= i <= e - 2:
        raise BoundParameterError(f"Threshold index i={i} must lie in [0, {e - 2}]")
    return 2 ** (e - i) - (e - i)


def check_A0(e: int, d: int, m: int) -> bool:
    """Degree criterion for A(0, m): a variety of degree d ≥ e+m+1 satisfies it."""
    return d >= e + m + 1


def curve_bound(g: int, alpha: int) -> HierarchyBound:
    """Bound parameters for a linearly normal curve of genus g and degree 2g+1+alpha."""
    if g < 0 or alpha < 0:
        raise BoundParameterError(f"Genus g={g} and excess alpha={alpha} must be nonnegative")
    return HierarchyBound(g + alpha, 0, g)


def canonical_curve_bound(g: int) -> HierarchyBound:
    """Bound parameters giving β_{p,1} ≤ p·C(g-2, p+1) for a canonical curve of genus g."""
    if g < 4:
        raise BoundParameterError(f"Canonical curves need genus at least 4, got {g}")
    e = g - 2
    return HierarchyBound(e, 0, e)


def second_hierarchy_threshold(e: int) -> int:
    """Explicit degree threshold 2^(C(e,2)-2) standing in for "d large"."""
    if e < 3:
        raise BoundParameterError(f"Codimension e={e} must be at least 3")
    return 2 ** (binom(e, 2) - 2)


def _shared_quadric_row(e: int) -> Dict[int, int]:
    return {p: p * binom(e + 1, p + 1) - 3 * binom(e, p - 1) for p in range(1, e - 1)}


def eligible_tables_e_plus_4(e: int) -> EligibleTablePair:
    """
    The two Betti tables possible for h-vector (1, e, 3), i.e. d = e+4.

    Both share β_{p,1} = p·C(e+1, p+1) - 3·C(e, p-1) for p ≤ e-2. The generic
    table has row 2 equal to (C(e-1,2), 2e, 3) at p = e-2, e-1, e; the
    special one has β_{e-1,1} = e-1 and C(e,2) in place of C(e-1,2).
    """
    if e < 3:
        raise BoundParameterError(f"Eligible tables need e ≥ 3, got {e}")
    shared = _shared_quadric_row(e)
    generic = BettiTable.from_rows(
        {1: dict(shared), 2: {e - 2: binom(e - 1, 2), e - 1: 2 * e, e: 3}}, e=e
    )
    special = BettiTable.from_rows(
        {1: {**shared, e - 1: e - 1}, 2: {e - 2: binom(e, 2), e - 1: 2 * e, e: 3}}, e=e
    )
    return EligibleTablePair(e, generic, special)


def h_vector_numerator(h_vector: List[int], e: int) -> List[int]:
    """Coefficients of h(t)·(1-t)^e in increasing degree."""
    t = sympy.Symbol("t")
    h = sum(c * t ** i for i, c in enumerate(h_vector))
    poly = sympy.Poly(sympy.expand(h * (1 - t) ** e), t)
    return [int(c) for c in reversed(poly.all_coeffs())]


def extremal_table(e: int, m: int) -> BettiTable:
    """
    Betti table of a curve attaining the (e, 0, m) bound with h-vector (1, e, m).

    Row 1 is the bound itself. Row 2 follows from the Euler identity: the
    coefficient of t^(p+1) in (1 + e·t + m·t²)(1-t)^e equals
    (-1)^p (β_{p,1} - β_{p-1,2}).
    """
    if not 3 <= m <= e - 1:
        raise BoundParameterError(f"Offset m={m} must lie in [3, {e - 1}]")
    hb = HierarchyBound(e, 0, m)
    numerator = h_vector_numerator([1, e, m], e)
    numerator += [0] * (e + 4 - len(numerator))
    quadric_row = {p: betti_bound(hb, p) for p in range(1, e + 1)}
    cubic_row = {}
    for p in range(1, e + 2):
        value = quadric_row.get(p, 0) - (-1) ** p * numerator[p + 1]
        if value < 0:
            raise ArithmeticError(f"Negative β_{p - 1},2 = {value} for (e={e}, m={m})")
        cubic_row[p - 1] = value
    table = BettiTable.from_rows({1: quadric_row, 2: cubic_row}, e=e)
    logger.debug(f"Extremal table for (e={e}, m={m}):\n{table}")
    return table
