"""
Multivariate polynomials with exact coefficients.

This module provides monomial orders, polynomial rings and a sparse polynomial
type. Polynomials map exponent tuples to nonzero field elements; monomials are
plain tuples of nonnegative ints whose length is the number of variables.
Variables are always named ``x0 .. x{n-1}``.
"""

import logging
import re
import dataclasses
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .fields import FieldElement, FieldSpec

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
OrderKey = Tuple[int, ...]
Scalar = Union[int, Fraction]


class PolynomialParseError(ValueError):
    """Raised when polynomial text does not follow the grammar."""
    pass


class RingMismatchError(ValueError):
    """Raised when an operation mixes polynomials of different rings."""
    pass


# -- monomial helpers -------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient a / b; the caller guarantees that b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


# -- monomial orders --------------------------------------------------------

class OrderKind(Enum):
    """Supported monomial orders."""
    GREVLEX = "grevlex"
    LEX = "lex"
    ELIMINATION = "elimination"
    SCHREYER = "schreyer"


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order, realised as a sort key on exponent tuples.

    ``ELIMINATION`` with ``block=k`` compares the degree in the first k
    variables first and breaks ties by (weighted) grevlex, so any monomial
    involving x0..x{k-1} ranks above every monomial free of them.
    ``SCHREYER`` is the induced order on free modules; it has no ring key and
    is realised by the resolution module.
    """
    kind: OrderKind = OrderKind.GREVLEX
    block: int = 0

    @classmethod
    def grevlex(cls) -> 'MonomialOrder':
        return cls(OrderKind.GREVLEX)

    @classmethod
    def lex(cls) -> 'MonomialOrder':
        return cls(OrderKind.LEX)

    @classmethod
    def elimination(cls, k: int) -> 'MonomialOrder':
        return cls(OrderKind.ELIMINATION, k)

    def key_function(self, weights: Tuple[int, ...]) -> Callable[[Monomial], OrderKey]:
        """Return a key whose natural tuple order is this monomial order."""
        unit = all(w == 1 for w in weights)

        def grevlex(e: Monomial) -> OrderKey:
            deg = sum(e) if unit else sum(w * x for w, x in zip(weights, e))
            return (deg,) + tuple(-x for x in reversed(e))

        if self.kind is OrderKind.GREVLEX:
            return grevlex
        if self.kind is OrderKind.LEX:
            return lambda e: e
        if self.kind is OrderKind.ELIMINATION:
            k = self.block
            return lambda e: (sum(e[:k]),) + grevlex(e)
        raise ValueError("The Schreyer order is a module order and has no ring key")

    def __str__(self) -> str:
        if self.kind is OrderKind.ELIMINATION:
            return f"elimination({self.block})"
        return self.kind.value


# -- rings ------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """
    Polynomial ring k[x0, ..., x{n-1}] with a monomial order and grading weights.

    Weights default to 1. A weight of 0 is only accepted on a variable inside
    the elimination block, where the order stays a well-order.
    """
    nvars: int
    field: FieldSpec = dataclasses.field(default_factory=FieldSpec)
    order: MonomialOrder = dataclasses.field(default_factory=MonomialOrder)
    weights: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError("A ring needs at least one variable")
        weights = tuple(self.weights) if self.weights is not None else (1,) * self.nvars
        if len(weights) != self.nvars:
            raise ValueError(f"Expected {self.nvars} weights, got {len(weights)}")
        for i, w in enumerate(weights):
            if w < 0:
                raise ValueError(f"Negative weight on x{i}")
            if w == 0 and not (self.order.kind is OrderKind.ELIMINATION and i < self.order.block):
                raise ValueError(f"Weight 0 on x{i} requires x{i} in the elimination block")
        if self.order.kind is OrderKind.ELIMINATION and not 0 <= self.order.block <= self.nvars:
            raise ValueError(f"Elimination block {self.order.block} exceeds {self.nvars} variables")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_key", self.order.key_function(weights))

    @property
    def key(self) -> Callable[[Monomial], OrderKey]:
        return self._key  # type: ignore[attr-defined, no-any-return]

    @property
    def variable_names(self) -> List[str]:
        return [f"x{i}" for i in range(self.nvars)]

    def weighted_degree(self, e: Monomial) -> int:
        return sum(w * x for w, x in zip(self.weights or (), e))

    def with_order(self, order: MonomialOrder) -> 'Ring':
        return Ring(self.nvars, self.field, order, self.weights)

    def with_field(self, field_spec: FieldSpec) -> 'Ring':
        return Ring(self.nvars, field_spec, self.order, self.weights)

    def standard(self) -> 'Ring':
        """The same variables under unit-weight grevlex."""
        return Ring(self.nvars, self.field)

    def zero(self) -> 'Polynomial':
        return Polynomial(self, {})

    def one(self) -> 'Polynomial':
        return self.constant(1)

    def constant(self, c: Scalar) -> 'Polynomial':
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, i: int) -> 'Polynomial':
        if not 0 <= i < self.nvars:
            raise IndexError(f"Variable x{i} not in ring with {self.nvars} variables")
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> List['Polynomial']:
        return [self.variable(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> 'Polynomial':
        return Polynomial(self, {tuple(exps): coeff})

    def linear_form(self, coeffs: Sequence[Scalar]) -> 'Polynomial':
        """Sum of coeffs[i] * x_i."""
        terms: Dict[Monomial, Scalar] = {}
        for i, c in enumerate(coeffs):
            exps = [0] * self.nvars
            exps[i] = 1
            terms[tuple(exps)] = c
        return Polynomial(self, terms)

    def parse(self, text: str) -> 'Polynomial':
        return parse_polynomial(text, self)


# -- polynomials ------------------------------------------------------------

class Polynomial:
    """
    Sparse polynomial: a map from monomials to nonzero field elements.

    Instances are treated as immutable; every operation returns a new object.
    """

    __slots__ = ("ring", "_coeffs", "_sorted", "_lead")

    def __init__(
        self,
        ring: Ring,
        coeffs: Optional[Dict[Monomial, Scalar]] = None,
        normalized: bool = False
    ):
        self.ring = ring
        if normalized:
            self._coeffs: Dict[Monomial, FieldElement] = coeffs or {}  # type: ignore[assignment]
        else:
            to_field = ring.field.element
            clean: Dict[Monomial, FieldElement] = {}
            for mono, c in (coeffs or {}).items():
                if len(mono) != ring.nvars:
                    raise ValueError(
                        f"Monomial {mono} has {len(mono)} exponents, ring has {ring.nvars} variables"
                    )
                value = to_field(c)
                if value:
                    clean[tuple(mono)] = value
            self._coeffs = clean
        self._sorted: Optional[Tuple[Tuple[FieldElement, Monomial], ...]] = None
        self._lead: Optional[Monomial] = None

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> Dict[Monomial, FieldElement]:
        """The underlying map; callers must not mutate it."""
        return self._coeffs

    @property
    def terms(self) -> Tuple[Tuple[FieldElement, Monomial], ...]:
        """(coefficient, monomial) pairs, strictly descending in the ring order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = tuple(
                (self._coeffs[m], m) for m in sorted(self._coeffs, key=key, reverse=True)
            )
        return self._sorted

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lm(self) -> Monomial:
        """Leading monomial."""
        if self._lead is None:
            if not self._coeffs:
                raise ValueError("The zero polynomial has no leading monomial")
            self._lead = max(self._coeffs, key=self.ring.key)
        return self._lead

    @property
    def lc(self) -> FieldElement:
        """Leading coefficient."""
        return self._coeffs[self.lm]

    @property
    def degree(self) -> int:
        """Largest weighted degree of a term, -1 for zero."""
        if not self._coeffs:
            return -1
        return max(self.ring.weighted_degree(m) for m in self._coeffs)

    @property
    def total_degree(self) -> int:
        """Largest plain degree of a term, -1 for zero."""
        if not self._coeffs:
            return -1
        return max(sum(m) for m in self._coeffs)

    @property
    def is_homogeneous(self) -> bool:
        """Homogeneity with respect to the ring weights."""
        degrees = {self.ring.weighted_degree(m) for m in self._coeffs}
        return len(degrees) <= 1

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self._coeffs)

    def variables(self) -> List[int]:
        """Indices of the variables occurring in the polynomial."""
        used = set()
        for m in self._coeffs:
            used.update(i for i, x in enumerate(m) if x)
        return sorted(used)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: 'Polynomial') -> None:
        if other.ring != self.ring:
            raise RingMismatchError(
                f"Ring mismatch: {self.ring.nvars} vars over {self.ring.field} "
                f"({self.ring.order}) vs {other.ring.nvars} vars over {other.ring.field} "
                f"({other.ring.order})"
            )

    def _lift(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        other = self._lift(other)
        fld = self.ring.field
        result = dict(self._coeffs)
        for m, c in other._coeffs.items():
            value = fld.add(result[m], c) if m in result else c
            if value:
                result[m] = value
            else:
                del result[m]
        return Polynomial(self.ring, result, normalized=True)

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        fld = self.ring.field
        return Polynomial(
            self.ring, {m: fld.neg(c) for m, c in self._coeffs.items()}, normalized=True
        )

    def __sub__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> 'Polynomial':
        return self.ring.constant(other) - self

    def __mul__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        fld = self.ring.field
        result: Dict[Monomial, FieldElement] = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = mono_mul(m1, m2)
                c = fld.mul(c1, c2)
                if m in result:
                    value = fld.add(result[m], c)
                    if value:
                        result[m] = value
                    else:
                        del result[m]
                else:
                    result[m] = c
        return Polynomial(self.ring, result, normalized=True)

    def __rmul__(self, other: Scalar) -> 'Polynomial':
        return self.scale(other)

    def __pow__(self, n: int) -> 'Polynomial':
        if n < 0:
            raise ValueError("Negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> 'Polynomial':
        fld = self.ring.field
        c = fld.element(c)
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring, {m: fld.mul(v, c) for m, v in self._coeffs.items()}, normalized=True
        )

    def mul_term(self, mono: Monomial, c: Scalar = 1) -> 'Polynomial':
        """Multiply by the term c * x^mono."""
        fld = self.ring.field
        c = fld.element(c)
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {mono_mul(m, mono): fld.mul(v, c) for m, v in self._coeffs.items()},
            normalized=True
        )

    def monic(self) -> 'Polynomial':
        if not self._coeffs:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return (
                self.ring.nvars == other.ring.nvars
                and self.ring.field == other.ring.field
                and self._coeffs == other._coeffs
            )
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> FieldElement:
        """Value at a point of k^n."""
        if len(point) != self.ring.nvars:
            raise ValueError(f"Point has {len(point)} coordinates, ring has {self.ring.nvars}")
        fld = self.ring.field
        values = [fld.element(v) for v in point]
        total = fld.zero()
        for m, c in self._coeffs.items():
            term = c
            for v, x in zip(values, m):
                if x:
                    term = fld.mul(term, v if x == 1 else v ** x)
            total = fld.add(total, term)
        return total

    def substitute(self, images: Sequence['Polynomial']) -> 'Polynomial':
        """Replace x_i by images[i]; the images share one target ring."""
        if len(images) != self.ring.nvars:
            raise ValueError(
                f"Expected {self.ring.nvars} images, got {len(images)}"
            )
        if not images:
            return self
        target = images[0].ring
        for img in images:
            if img.ring != target:
                raise RingMismatchError("Substitution images live in different rings")
        if target.field != self.ring.field:
            raise RingMismatchError(f"Cannot substitute {target.field} images into {self.ring.field}")
        powers: Dict[Tuple[int, int], Polynomial] = {}

        def power(i: int, k: int) -> Polynomial:
            if (i, k) not in powers:
                powers[(i, k)] = images[i] if k == 1 else power(i, k - 1) * images[i]
            return powers[(i, k)]

        result = target.zero()
        for m, c in self._coeffs.items():
            term = target.constant(c)
            for i, k in enumerate(m):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def change_ring(self, ring: Ring) -> 'Polynomial':
        """Reinterpret the same coefficients in a ring with another order or weights."""
        if ring.nvars != self.ring.nvars or ring.field != self.ring.field:
            raise RingMismatchError("change_ring keeps the variables and the field")
        return Polynomial(ring, dict(self._coeffs), normalized=True)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        fld = self.ring.field
        parts: List[str] = []
        for c, m in self.terms:
            c = fld.symmetric(c)
            negative = c < 0
            magnitude = -c if negative else c
            factors = []
            for i, x in enumerate(m):
                if x == 1:
                    factors.append(f"x{i}")
                elif x > 1:
                    factors.append(f"x{i}^{x}")
            body = "*".join(factors)
            if not body:
                body = str(magnitude)
            elif magnitude != 1:
                body = f"{magnitude}*{body}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"(\d+(?:\s*/\s*\d+)?)|x(\d+)|([\^*+\-])")
_SPACE = re.compile(r"\s+")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens: List[Tuple[str, str]] = []
    pos = 0
    while True:
        gap = _SPACE.match(text, pos)
        if gap:
            pos = gap.end()
        if pos >= len(text):
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise PolynomialParseError(f"Unexpected character '{text[pos]}' in '{text}'")
        if match.group(1) is not None:
            if tokens and tokens[-1][0] == "num":
                raise PolynomialParseError(f"Two numbers in a row at position {pos} in '{text}'")
            tokens.append(("num", _SPACE.sub("", match.group(1))))
        elif match.group(2) is not None:
            tokens.append(("var", match.group(2)))
        else:
            tokens.append(("op", match.group(3)))
        pos = match.end()
    return tokens


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """
    Parse polynomial text such as ``"x0*x2 - x1^2"`` or ``"3/2x0^2 + x1"``.

    Grammar: ``term ::= coeff? ('*'? var ('^' int)?)*``, ``var ::= 'x' int``,
    terms separated by '+' or '-'. Whitespace may separate tokens but never two
    numbers, so "2 3*x0" is an error. Prime-field coefficients are reduced
    modulo p.

    Raises:
        PolynomialParseError: on malformed text or an unknown variable
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialParseError("Empty polynomial text")
    fld = ring.field
    pos = 0
    result: Dict[Monomial, FieldElement] = {}

    def peek() -> Optional[Tuple[str, str]]:
        return tokens[pos] if pos < len(tokens) else None

    sign = 1
    first = True
    while True:
        tok = peek()
        if tok is None:
            raise PolynomialParseError(f"Unexpected end of input in '{text}'")
        if tok[0] == "op" and tok[1] in "+-":
            if tok[1] == "-":
                sign = -sign
            pos += 1
            tok = peek()
            if tok is None:
                raise PolynomialParseError(f"Dangling sign at end of '{text}'")
        elif not first:
            raise PolynomialParseError(f"Expected '+' or '-' before '{tok[1]}' in '{text}'")

        coeff: Fraction = Fraction(1)
        exps = [0] * ring.nvars
        seen = False
        if tok[0] == "num":
            coeff = Fraction(tok[1])
            seen = True
            pos += 1
        while True:
            tok = peek()
            star = tok is not None and tok == ("op", "*")
            if star:
                pos += 1
                tok = peek()
                if tok is None or tok[0] != "var":
                    raise PolynomialParseError(f"Expected a variable after '*' in '{text}'")
            if tok is None or tok[0] != "var":
                break
            index = int(tok[1])
            if index >= ring.nvars:
                raise PolynomialParseError(
                    f"Unknown variable x{index} (ring has x0..x{ring.nvars - 1})"
                )
            pos += 1
            power = 1
            if peek() == ("op", "^"):
                pos += 1
                exp_tok = peek()
                if exp_tok is None or exp_tok[0] != "num" or "/" in exp_tok[1]:
                    raise PolynomialParseError(f"Expected an integer exponent in '{text}'")
                power = int(exp_tok[1])
                pos += 1
            exps[index] += power
            seen = True
        if not seen:
            raise PolynomialParseError(f"Expected a term in '{text}'")
        mono = tuple(exps)
        value = fld.element(coeff * sign)
        total = fld.add(result[mono], value) if mono in result else value
        if total:
            result[mono] = total
        else:
            result.pop(mono, None)

        first = False
        sign = 1
        if peek() is None:
            break
    return Polynomial(ring, result, normalized=True)


# -- module-level operations ------------------------------------------------

def poly_arith(op: str, f: Polynomial, g: Union[Polynomial, Scalar]) -> Polynomial:
    """
    Apply ``add``, ``sub``, ``mul`` or ``scale`` to f and g.

    For ``scale`` g is a field scalar; otherwise it must share f's ring.
    """
    if op == "scale":
        if isinstance(g, Polynomial):
            raise TypeError("scale takes a scalar")
        return f.scale(g)
    if not isinstance(g, Polynomial):
        raise TypeError(f"{op} takes two polynomials")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"Unknown polynomial operation: {op}")


def substitute_linear(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """
    Substitute homogeneous linear forms for the variables of f.

    Raises:
        ValueError: wrong number of images or an image that is not a linear form
    """
    if len(images) != f.ring.nvars:
        raise ValueError(f"Expected {f.ring.nvars} linear forms, got {len(images)}")
    for i, img in enumerate(images):
        if img.is_zero or any(sum(m) != 1 for m in img.coeffs):
            raise ValueError(f"Image of x{i} is not a homogeneous linear form: {img}")
    return f.substitute(images)


def lift_to(f: Polynomial, ring: Ring, positions: Iterable[int]) -> Polynomial:
    """Embed f into a larger ring, sending x_i to x_{positions[i]}."""
    pos = list(positions)
    if len(pos) != f.ring.nvars:
        raise ValueError("One position per variable is required")
    terms: Dict[Monomial, FieldElement] = {}
    for m, c in f.coeffs.items():
        exps = [0] * ring.nvars
        for i, x in enumerate(m):
            exps[pos[i]] += x
        terms[tuple(exps)] = c
    return Polynomial(ring, terms, normalized=True)


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All degree-d monomials in n variables, lex-descending."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest
