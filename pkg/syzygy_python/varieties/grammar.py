"""
Text specs for constructions.

A spec is a base construction optionally followed by ``|``-separated
operations applied in order:

    S(a1,...,ak)        rational normal scroll
    nu(d):<poly>        ν_d of the plane curve <poly> in x0, x1, x2 (0 for P^2)
    M(e0,...,er)        monomial curve
    pts(r,d,seed)       d random points in P^r
    rnc(r,d,seed)       d points on the rational normal curve of P^r
    D(a,b,beta)         curve of class 2H + beta*F on S(a,b), seeded by the run seed
    cut(k,seed)         section by k random hyperplanes
    proj(p1;p2;...)     projection from the span of points given as c0,c1,...
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from ..algebra.fields import FieldSpec
from ..algebra.groebner import Ideal
from ..algebra.polynomial import Ring, parse_polynomial
from ..core.models import PointConfiguration, ScrollSpec
from .constructions import (
    RANDOM_HEIGHT,
    ConstructionError,
    hyperplane_section,
    monomial_curve,
    points_on_rational_normal_curve,
    project_from_span,
    random_points,
    rational_normal_scroll,
    scroll_divisor,
    veronese_embed_plane_curve,
)

logger = logging.getLogger(__name__)

_CALL = re.compile(r"^\s*([A-Za-z]+)\((.*)\)\s*$", re.DOTALL)
_VERONESE = re.compile(r"^\s*nu\((\d+)\)\s*:\s*(.+)$", re.DOTALL)


@dataclass
class ConstructionResult:
    """A constructed ideal together with what produced it."""
    ideal: Ideal
    spec: str
    seed: int
    field: FieldSpec
    points: Optional[PointConfiguration] = None
    steps: List[str] = field(default_factory=list)

    @property
    def ambient(self) -> int:
        return self.ideal.ring.nvars - 1

    def provenance(self) -> Dict[str, str]:
        return {"spec": self.spec, "seed": str(self.seed), "field": str(self.field)}


def _ints(args: str, count: Optional[int], name: str) -> List[int]:
    try:
        values = [int(a) for a in args.split(",")] if args.strip() else []
    except ValueError:
        raise ConstructionError(f"{name}(...) takes integers, got '{args}'")
    if count is not None and len(values) != count:
        raise ConstructionError(f"{name}(...) takes {count} integers, got {len(values)}")
    return values


def _parse_points(args: str, fld: FieldSpec) -> List[Tuple[object, ...]]:
    points = []
    for chunk in args.split(";"):
        try:
            points.append(tuple(fld.element(Fraction(c.strip())) for c in chunk.split(",")))
        except (ValueError, ZeroDivisionError):
            raise ConstructionError(f"Bad projection point '{chunk}'")
    return points


class ConstructionParser:
    """Evaluates construction specs over one field with one run seed."""

    def __init__(
        self,
        field: Optional[FieldSpec] = None,
        seed: int = 0,
        height: int = RANDOM_HEIGHT,
        degree_bound: Optional[int] = None
    ):
        self.field = field or FieldSpec()
        self.seed = seed
        self.height = height
        self.degree_bound = degree_bound
        self._bases: Dict[str, Callable[[str], ConstructionResult]] = {
            "S": self._scroll,
            "M": self._monomial,
            "pts": self._points,
            "rnc": self._rnc,
            "D": self._divisor,
        }

    def parse(self, spec: str) -> ConstructionResult:
        """
        Build the ideal a spec describes.

        Raises:
            ConstructionError: unknown or malformed spec
            PolynomialParseError: bad polynomial text in a Veronese spec
        """
        parts = [p.strip() for p in spec.split("|")]
        if not parts[0]:
            raise ConstructionError("Empty construction spec")
        result = self._base(parts[0])
        for op in parts[1:]:
            result = self._apply(result, op)
        result.spec = spec.strip()
        logger.info(
            f"Constructed '{result.spec}' over {self.field}: P^{result.ambient}, "
            f"{len(result.ideal)} generators"
        )
        return result

    def _base(self, text: str) -> ConstructionResult:
        veronese = _VERONESE.match(text)
        if veronese:
            d = int(veronese.group(1))
            f = parse_polynomial(veronese.group(2), Ring(3, self.field))
            ideal = veronese_embed_plane_curve(f, d, degree_bound=self.degree_bound)
            return ConstructionResult(ideal, text, self.seed, self.field, steps=[text])
        call = _CALL.match(text)
        if not call or call.group(1) not in self._bases:
            raise ConstructionError(f"Unknown construction '{text}'")
        return self._bases[call.group(1)](call.group(2))

    def _apply(self, result: ConstructionResult, text: str) -> ConstructionResult:
        call = _CALL.match(text)
        if not call:
            raise ConstructionError(f"Unknown operation '{text}'")
        name, args = call.group(1), call.group(2)
        if name == "cut":
            k, seed = _ints(args, 2, "cut")
            ideal = hyperplane_section(result.ideal, k, seed, self.height)
        elif name == "proj":
            ideal = project_from_span(result.ideal, _parse_points(args, self.field))
        else:
            raise ConstructionError(f"Unknown operation '{name}'")
        result.ideal = ideal
        result.points = None
        result.steps.append(text)
        return result

    def _scroll(self, args: str) -> ConstructionResult:
        try:
            spec = ScrollSpec(tuple(_ints(args, None, "S")))
        except ValueError as e:
            raise ConstructionError(str(e))
        return ConstructionResult(
            rational_normal_scroll(spec, self.field), str(spec), self.seed, self.field, steps=[str(spec)]
        )

    def _monomial(self, args: str) -> ConstructionResult:
        exps = _ints(args, None, "M")
        return ConstructionResult(
            monomial_curve(exps, self.field), f"M({args})", self.seed, self.field, steps=[f"M({args})"]
        )

    def _points(self, args: str) -> ConstructionResult:
        r, d, seed = _ints(args, 3, "pts")
        config, ideal = random_points(r, d, seed, self.field, self.height)
        return ConstructionResult(ideal, f"pts({args})", seed, self.field, config, [f"pts({args})"])

    def _rnc(self, args: str) -> ConstructionResult:
        r, d, seed = _ints(args, 3, "rnc")
        config, ideal = points_on_rational_normal_curve(r, d, seed, self.field, self.height)
        return ConstructionResult(ideal, f"rnc({args})", seed, self.field, config, [f"rnc({args})"])

    def _divisor(self, args: str) -> ConstructionResult:
        a, b, beta = _ints(args, 3, "D")
        ideal = scroll_divisor(a, b, beta, self.seed, self.field, self.height)
        return ConstructionResult(ideal, f"D({args})", self.seed, self.field, steps=[f"D({args})"])


def parse_construction(
    spec: str,
    field: Optional[FieldSpec] = None,
    seed: int = 0,
    height: int = RANDOM_HEIGHT,
    degree_bound: Optional[int] = None
) -> ConstructionResult:
    """Build the ideal described by ``spec``; see the module docstring for the grammar."""
    return ConstructionParser(field, seed, height, degree_bound).parse(spec)
