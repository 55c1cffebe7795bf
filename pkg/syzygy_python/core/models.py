"""
Data models for the syzygy engine.

This module defines the core data structures shared across the package:
Betti tables and their text formats, numeric invariants, bound parameters,
verification reports, construction specs and CLI commands.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from dataclasses_json import dataclass_json
from pydantic import BaseModel, Field, field_validator
from typing_extensions import Literal


class BoundParameterError(ValueError):
    """Raised for bound parameters outside their admissible range."""
    pass


class BoundVerdict(Enum):
    """Outcome of comparing one Betti number against its bound."""
    STRICT = "strict"
    EQUAL = "equal"
    VIOLATION = "violation"


class ConditionStatus(Enum):
    """How a hypothesis on a variety is known."""
    HOLDS = "holds"
    FAILS = "fails"
    ASSERTED = "asserted"
    WITNESSED = "witnessed"
    UNKNOWN = "unknown"


class ReproStatus(Enum):
    """Outcome of reproducing one golden table."""
    PASS = "pass"
    MISMATCH = "mismatch"
    TIMEOUT = "timeout"
    ERROR = "error"


VERBS = ("construct", "resolve", "betti", "verify", "bounds", "reproduce")


# -- Betti tables -----------------------------------------------------------

@dataclass
class BettiTable:
    """
    Graded Betti numbers β_{i,j}: i is the homological index, j the row.

    The free module F_i has β_{i,j} generators in degree i+j. ``e`` optionally
    records the codimension context and is ignored by equality.
    """
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    e: Optional[int] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), value in self.entries.items():
            if value < 0:
                raise ValueError(f"Betti number β_{i},{j} = {value} is negative")
            if value:
                clean[(int(i), int(j))] = int(value)
        self.entries = clean

    @classmethod
    def from_rows(
        cls,
        rows: Dict[int, Dict[int, int]],
        with_unit: bool = True,
        e: Optional[int] = None
    ) -> 'BettiTable':
        """Build from ``{j: {i: β}}``; ``with_unit`` adds β_{0,0} = 1."""
        entries = {(i, j): v for j, row in rows.items() for i, v in row.items()}
        if with_unit:
            entries.setdefault((0, 0), 1)
        return cls(entries, e)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        return self.entries.get(index, 0)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    @property
    def max_i(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    @property
    def max_j(self) -> int:
        return max((j for _, j in self.entries), default=-1)

    def row(self, j: int) -> Dict[int, int]:
        """Nonzero entries of row j as ``{i: β_{i,j}}``."""
        return {i: v for (i, jj), v in sorted(self.entries.items()) if jj == j}

    def row_values(self, j: int, start: int, stop: int) -> List[int]:
        return [self.get(i, j) for i in range(start, stop + 1)]

    def total_ranks(self) -> List[int]:
        ranks = [0] * (self.max_i + 1)
        for (i, _), v in self.entries.items():
            ranks[i] += v
        return ranks

    def nonzero(self) -> List[Tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def euler_numerator(self) -> List[int]:
        """Coefficients of Σ_i (-1)^i Σ_j β_{i,j} t^{i+j}, trailing zeros trimmed."""
        top = max((i + j for i, j in self.entries), default=0)
        coeffs = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            coeffs[i + j] += (-1) ** i * v
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    # -- text formats -------------------------------------------------------

    def to_grid(self) -> str:
        """
        Grid layout: header of homological indices, one ``j:`` row per degree
        row 0..max_j, right-aligned cells of a common width, blanks for zeros.
        """
        if self.is_empty:
            return ""
        cols = range(self.max_i + 1)
        rows = range(self.max_j + 1)
        width = max(
            [len(str(c)) for c in cols] + [len(str(v)) for v in self.entries.values()]
        )
        label = max(len(f"{j}:") for j in rows)
        lines = [(" " * label + "".join(" " + str(c).rjust(width) for c in cols)).rstrip()]
        for j in rows:
            cells = "".join(
                " " + (str(self.get(i, j)) if self.get(i, j) else "").rjust(width) for i in cols
            )
            lines.append((f"{j}:".rjust(label) + cells).rstrip())
        return "\n".join(lines)

    @classmethod
    def from_grid(cls, text: str) -> 'BettiTable':
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            return cls()
        header = lines[0]
        ncols = len(header.split())
        label = lines[1].index(":") + 1 if len(lines) > 1 else 0
        width = (len(header) - label) // ncols - 1
        entries = {}
        for line in lines[1:]:
            j = int(line[:label].strip().rstrip(":"))
            for c in range(ncols):
                start = label + c * (width + 1)
                cell = line[start:start + width + 1].strip()
                if cell:
                    entries[(c, j)] = int(cell)
        return cls(entries)

    def to_csv(self) -> str:
        lines = ["i,j,beta"]
        lines += [f"{i},{j},{v}" for i, j, v in self.nonzero()]
        return "\n".join(lines)

    @classmethod
    def from_csv(cls, text: str) -> 'BettiTable':
        entries = {}
        for line in text.strip().splitlines():
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("i,"):
                continue
            i, j, v = (int(part) for part in line.split(","))
            entries[(i, j)] = v
        return cls(entries)

    def to_kv(self) -> str:
        lines = [f"betti.{i}.{j}={v}" for i, j, v in self.nonzero()]
        lines.append(f"betti.length={self.max_i}")
        lines.append(f"betti.regularity={self.max_j}")
        return "\n".join(lines)

    def diff(self, other: 'BettiTable') -> List[str]:
        """Cell-by-cell differences, e.g. ``β_2,1: expected 8, got 7``."""
        keys = sorted(set(self.entries) | set(other.entries))
        return [
            f"β_{i},{j}: expected {self.get(i, j)}, got {other.get(i, j)}"
            for i, j in keys if self.get(i, j) != other.get(i, j)
        ]

    def __str__(self) -> str:
        return self.to_grid()


@dataclass_json
@dataclass
class NumericInvariants:
    """Invariants read off a minimal resolution and the Hilbert series."""
    hilbert_numerator: List[int]
    h_vector: List[int]
    dimension: int
    degree: int
    codimension: int
    regularity: int
    projective_dimension: int
    is_acm: bool
    max_p_with_N2p: Optional[int]  # None: N_{2,p} for every p

    def satisfies_N2p(self, p: int) -> bool:
        return self.max_p_with_N2p is None or p <= self.max_p_with_N2p

    def to_kv(self) -> str:
        n2p = "all" if self.max_p_with_N2p is None else str(self.max_p_with_N2p)
        return "\n".join([
            f"hilbert_numerator={','.join(str(c) for c in self.hilbert_numerator)}",
            f"h_vector={','.join(str(c) for c in self.h_vector)}",
            f"dimension={self.dimension}",
            f"degree={self.degree}",
            f"codimension={self.codimension}",
            f"regularity={self.regularity}",
            f"projective_dimension={self.projective_dimension}",
            f"acm={str(self.is_acm).lower()}",
            f"max_p_N2p={n2p}",
        ])


# -- hierarchy --------------------------------------------------------------

@dataclass(frozen=True)
class HierarchyBound:
    """
    Parameters (e, k, m) of an upper bound on the quadratic strand.

    e is the codimension (≥ 2), k the level (0 ≤ k ≤ e-1) and m the offset
    (0 ≤ m ≤ e-k).
    """
    e: int
    k: int = 0
    m: int = 0

    def __post_init__(self) -> None:
        if self.e < 2:
            raise BoundParameterError(f"Codimension e={self.e} must be at least 2")
        if not 0 <= self.k <= self.e - 1:
            raise BoundParameterError(f"Level k={self.k} must lie in [0, {self.e - 1}]")
        if not 0 <= self.m <= self.e - self.k:
            raise BoundParameterError(f"Offset m={self.m} must lie in [0, {self.e - self.k}]")

    @property
    def turning_point(self) -> int:
        """The p where both branches of the bound apply."""
        return self.e + 1 - self.m - self.k

    def __str__(self) -> str:
        return f"(e={self.e}, k={self.k}, m={self.m})"


@dataclass_json
@dataclass
class BoundCheck:
    """One comparison β_{p,1} against its bound."""
    p: int
    observed: int
    bound: int
    verdict: BoundVerdict


@dataclass_json
@dataclass
class ConditionReport:
    """
    Verdicts about one Betti table.

    Hypotheses map a condition name such as ``A(0,3)`` to how it is known.
    Falsifiers are failed hard checks; a bound violation only counts against
    the table when every recorded hypothesis is settled.
    """
    e: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    hypotheses: Dict[str, ConditionStatus] = field(default_factory=dict)
    containments: List[str] = field(default_factory=list)
    bound_checks: List[BoundCheck] = field(default_factory=list)
    extremal: Optional[bool] = None
    labels: List[str] = field(default_factory=list)
    messages: List[str] = field(default_factory=list)
    falsifiers: List[str] = field(default_factory=list)

    @property
    def violations(self) -> List[BoundCheck]:
        return [c for c in self.bound_checks if c.verdict is BoundVerdict.VIOLATION]

    @property
    def hypotheses_settled(self) -> bool:
        settled = {ConditionStatus.HOLDS, ConditionStatus.ASSERTED, ConditionStatus.WITNESSED}
        return all(status in settled for status in self.hypotheses.values())

    def exit_code(self) -> int:
        """0 when everything passes, 1 on a violation, 2 when a hypothesis is unknown or fails."""
        if self.falsifiers:
            return 1
        if not self.hypotheses_settled:
            return 2
        if self.violations:
            return 1
        return 0

    def merge(self, other: 'ConditionReport') -> 'ConditionReport':
        for name in ("e", "d", "k", "m", "extremal"):
            if getattr(other, name) is not None:
                setattr(self, name, getattr(other, name))
        self.hypotheses.update(other.hypotheses)
        self.containments.extend(c for c in other.containments if c not in self.containments)
        self.bound_checks.extend(other.bound_checks)
        self.labels.extend(label for label in other.labels if label not in self.labels)
        self.messages.extend(other.messages)
        self.falsifiers.extend(other.falsifiers)
        return self

    def to_kv(self) -> str:
        lines = []
        for name in ("e", "d", "k", "m"):
            if getattr(self, name) is not None:
                lines.append(f"{name}={getattr(self, name)}")
        for hyp, status in self.hypotheses.items():
            lines.append(f"hypothesis.{hyp}={status.value}")
        for containment in self.containments:
            lines.append(f"containment={containment}")
        for check in self.bound_checks:
            lines.append(
                f"bound.p{check.p}={check.verdict.value} observed={check.observed} bound={check.bound}"
            )
        if self.extremal is not None:
            lines.append(f"extremal={str(self.extremal).lower()}")
        for label in self.labels:
            lines.append(f"label={label}")
        for message in self.messages:
            lines.append(f"message={message}")
        for falsifier in self.falsifiers:
            lines.append(f"falsifier={falsifier}")
        lines.append(f"exit_code={self.exit_code()}")
        return "\n".join(lines)


@dataclass
class EligibleTablePair:
    """The two Betti tables allowed for d = e+4 points or curves with h-vector (1, e, 3)."""
    e: int
    table_generic: BettiTable
    table_special: BettiTable

    def matches(self, table: BettiTable) -> Optional[str]:
        """``generic`` or ``special`` when the table is one of the pair."""
        if table == self.table_generic:
            return "generic"
        if table == self.table_special:
            return "special"
        return None


@dataclass_json
@dataclass
class IdentityCheck:
    """Residuals lhs - rhs of a Betti number identity, indexed by p."""
    name: str
    residuals: Dict[int, int] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not any(self.residuals.values())

    @property
    def failing(self) -> List[int]:
        return sorted(p for p, r in self.residuals.items() if r)


@dataclass_json
@dataclass
class PointsEquivalence:
    """The three conditions at one p that must agree for points in general position."""
    p: int
    n2p: bool
    vanishing: bool
    bound: bool

    @property
    def consistent(self) -> bool:
        return self.n2p == self.vanishing == self.bound


@dataclass_json
@dataclass
class PointsDiagnostic:
    """Equivalence checks for p = 1..r at initial degree t."""
    r: int
    d: int
    t: int
    checks: List[PointsEquivalence] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(c.consistent for c in self.checks)

    def to_kv(self) -> str:
        lines = [f"r={self.r}", f"d={self.d}", f"initial_degree={self.t}"]
        for c in self.checks:
            lines.append(
                f"points.p{c.p}=N2p:{str(c.n2p).lower()} vanishing:{str(c.vanishing).lower()} "
                f"bound:{str(c.bound).lower()}"
            )
        lines.append(f"consistent={str(self.consistent).lower()}")
        return "\n".join(lines)


# -- constructions ----------------------------------------------------------

@dataclass(frozen=True)
class ScrollSpec:
    """Rational normal scroll S(a_1, ..., a_k) with nondecreasing a_i."""
    a: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        if not self.a:
            raise ValueError("A scroll needs at least one block")
        if any(x < 0 for x in self.a):
            raise ValueError(f"Scroll parameters must be nonnegative: {self.a}")
        if all(x == 0 for x in self.a):
            raise ValueError(f"Invalid scroll S{self.a}: all parameters are zero")
        if list(self.a) != sorted(self.a):
            raise ValueError(f"Scroll parameters must be nondecreasing: {self.a}")

    @property
    def ambient(self) -> int:
        """N with the scroll in P^N."""
        return sum(self.a) + len(self.a) - 1

    @property
    def degree(self) -> int:
        return sum(self.a)

    @property
    def dimension(self) -> int:
        return len(self.a)

    @property
    def codimension(self) -> int:
        return self.ambient - self.dimension

    def __str__(self) -> str:
        return f"S({','.join(str(x) for x in self.a)})"


@dataclass
class PointConfiguration:
    """Points of P^r given by coordinate tuples; ``seed`` records their origin."""
    r: int
    points: List[Tuple[Any, ...]]
    seed: Optional[int] = None
    general: bool = False

    def __post_init__(self) -> None:
        for pt in self.points:
            if len(pt) != self.r + 1:
                raise ValueError(f"Point {pt} does not have {self.r + 1} coordinates")
            if not any(pt):
                raise ValueError("The zero vector is not a projective point")

    def __len__(self) -> int:
        return len(self.points)


# -- reproduction -----------------------------------------------------------

@dataclass
class ReproTarget:
    """A golden Betti table together with the construction that should produce it."""
    id: str
    description: str
    construction: str
    expected_table: BettiTable
    e: int
    d: int
    m: Optional[int] = None
    heavy: bool = False
    quadric_surface: Optional[Tuple[int, int]] = None  # (degree, codimension) cut by the quadrics


@dataclass_json
@dataclass
class ReproReport:
    """Result of one reproduce run."""
    target: str
    status: ReproStatus
    field: str
    elapsed_seconds: float = 0.0
    mismatches: List[str] = field(default_factory=list)
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is ReproStatus.PASS

    def to_kv(self) -> str:
        lines = [
            f"target={self.target}",
            f"status={self.status.value}",
            f"field={self.field}",
        ]
        lines += [f"mismatch={m}" for m in self.mismatches]
        lines += [f"{k}={v}" for k, v in sorted(self.details.items())]
        return "\n".join(lines)


# -- CLI commands -----------------------------------------------------------

class Command(BaseModel):
    """A fully specified CLI invocation; every run is determined by verb, spec, field and seed."""

    verb: Literal["construct", "resolve", "betti", "verify", "bounds", "reproduce"]
    target: str = ""
    field: str = "fp:32003"
    seed: int = Field(default=0, ge=0)
    output_format: Literal["grid", "csv", "kv"] = "grid"
    timeout: float = Field(default=600.0, gt=0)
    degree_bound: Optional[int] = Field(default=None, ge=1)
    options: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("field")
    @classmethod
    def _field_parses(cls, value: str) -> str:
        from ..algebra.fields import FieldSpec

        return FieldSpec.parse(value).cli_text


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 outside 0 ≤ k ≤ n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)

