"""
Golden Betti tables and the constructions that should reproduce them.

Expected tables live as CSV files under ``syzygy_python/data/golden``; the
directory can be overridden through ``SyzygySettings.golden_dir``.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional

from ..core.models import BettiTable, ReproTarget

logger = logging.getLogger(__name__)

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "data" / "golden"

_DEL_PEZZO_CENTER = ";".join([
    "1,0,1,0,0,1,0,0,0,1",
    "1,0,-1,0,0,1,0,0,0,-1",
    "0,0,0,0,0,0,1,1,1,1",
    "0,0,0,0,0,0,1,-1,1,-1",
])

# id: (description, construction, e, d, m, heavy, quadric surface)
_TARGETS: Dict[str, tuple] = {
    "ex-monomial-2e1": (
        "Monomial curve of degree 2e+1 in P^6 with the maximal number of quadrics",
        "M(11,10,9,8,7,5,0)", 5, 11, 5, False, None,
    ),
    "ex-quartic-extremal": (
        "Plane quartic under the 2-uple embedding: a nonhyperelliptic extremal curve",
        "nu(2):x0^4+x1^4-x2^4", 4, 8, 3, False, None,
    ),
    "ex-delpezzo-projection": (
        "Octic curve projected to P^5, lying on a quintic del Pezzo surface",
        f"nu(3):x0^8+x1^8-x2^8|proj({_DEL_PEZZO_CENTER})", 4, 20, None, False, (5, 3),
    ),
    "ex-canonical-2e2": (
        "Canonical curve of genus 10 from a plane sextic under the 3-uple embedding",
        "nu(3):x0^6+x1^6+x2^6", 8, 18, None, True, None,
    ),
}


class GoldenDataError(ValueError):
    """Raised when a golden table is missing or unreadable."""
    pass


def target_ids() -> List[str]:
    return list(_TARGETS)


def load_golden_table(target_id: str, golden_dir: Optional[Path] = None) -> BettiTable:
    """
    Read the expected table of one target.

    Raises:
        GoldenDataError: unknown target, missing file or malformed CSV
    """
    path = Path(golden_dir or GOLDEN_DIR) / f"{target_id}.csv"
    if not path.exists():
        raise GoldenDataError(f"No golden table for '{target_id}' at {path}")
    try:
        return BettiTable.from_csv(path.read_text(encoding="utf-8"))
    except ValueError as e:
        raise GoldenDataError(f"Malformed golden table {path}: {e}")


def get_target(target_id: str, golden_dir: Optional[Path] = None) -> ReproTarget:
    """
    Raises:
        GoldenDataError: for an unknown id
    """
    if target_id not in _TARGETS:
        raise GoldenDataError(
            f"Unknown target '{target_id}'. Available: {', '.join(target_ids())}"
        )
    description, construction, e, d, m, heavy, quadrics = _TARGETS[target_id]
    table = load_golden_table(target_id, golden_dir)
    table.e = e
    return ReproTarget(target_id, description, construction, table, e, d, m, heavy, quadrics)


def all_targets(golden_dir: Optional[Path] = None, include_heavy: bool = True) -> List[ReproTarget]:
    targets = [get_target(t, golden_dir) for t in target_ids()]
    if not include_heavy:
        targets = [t for t in targets if not t.heavy]
    logger.debug(f"Loaded {len(targets)} golden targets")
    return targets
