"""
Exact coefficient fields.

Two kinds of field are supported: the rationals, whose elements are carried as
``fractions.Fraction``, and prime fields F_p, whose elements are Python ints
in ``range(p)``. Nothing in the engine ever touches floating point.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Union

import sympy

logger = logging.getLogger(__name__)

FieldElement = Union[int, Fraction]

DEFAULT_PRIME = 32003
MAX_PRIME = 2**31 - 1

_FIELD_PATTERN = re.compile(r"^\s*(qq|fp(?::(\d+))?)\s*$", re.IGNORECASE)


class FieldKind(Enum):
    """Kinds of coefficient field."""
    RATIONALS = "QQ"
    PRIME = "Fp"


@dataclass(frozen=True)
class FieldSpec:
    """
    A coefficient field: the rationals or F_p.

    For the rationals ``p`` is stored as 0 (the characteristic).
    """
    kind: FieldKind = FieldKind.PRIME
    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            object.__setattr__(self, "p", 0)
            return
        if self.p < 2 or self.p > MAX_PRIME:
            raise ValueError(f"Prime modulus {self.p} must lie in [2, {MAX_PRIME}]")
        if not sympy.isprime(self.p):
            raise ValueError(f"Modulus {self.p} is not prime")

    @classmethod
    def rationals(cls) -> 'FieldSpec':
        return cls(FieldKind.RATIONALS, 0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> 'FieldSpec':
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, text: str) -> 'FieldSpec':
        """
        Parse ``qq``, ``fp`` or ``fp:P`` (case-insensitive).

        Raises:
            ValueError: if the text names no supported field
        """
        match = _FIELD_PATTERN.match(text or "")
        if not match:
            raise ValueError(f"Unknown field '{text}', expected qq or fp:P")
        if match.group(1).lower() == "qq":
            return cls.rationals()
        return cls.prime(int(match.group(2)) if match.group(2) else DEFAULT_PRIME)

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        """Header form used by ideal files: ``QQ`` or ``Fp:p``."""
        return "QQ" if self.is_rational else f"Fp:{self.p}"

    @property
    def cli_text(self) -> str:
        return "qq" if self.is_rational else f"fp:{self.p}"

    # -- element arithmetic -------------------------------------------------

    def element(self, value: Any) -> FieldElement:
        """
        Convert an int, Fraction or numeric string into a field element.

        Over F_p a rational a/b maps to a * b^-1; b divisible by p is an error.
        Values outside ``range(p)`` are reduced, never rejected.
        """
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(
                    f"Denominator {value.denominator} vanishes in {self}"
                )
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return int(value) % self.p

    def zero(self) -> FieldElement:
        return Fraction(0) if self.is_rational else 0

    def one(self) -> FieldElement:
        return Fraction(1) if self.is_rational else 1

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a + b if self.is_rational else (a + b) % self.p

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a - b if self.is_rational else (a - b) % self.p

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a * b if self.is_rational else (a * b) % self.p

    def neg(self, a: FieldElement) -> FieldElement:
        return -a if self.is_rational else (-a) % self.p

    def inv(self, a: FieldElement) -> FieldElement:
        if not a:
            raise ZeroDivisionError(f"Inverse of zero in {self}")
        if self.is_rational:
            return 1 / Fraction(a)
        return pow(int(a), -1, self.p)

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def symmetric(self, a: FieldElement) -> FieldElement:
        """Representative of smallest absolute value, used for printing F_p elements."""
        if self.is_rational:
            return a
        a = int(a) % self.p
        return a - self.p if a > self.p // 2 else a

    def random_element(self, rng: Any, height: int = 100) -> FieldElement:
        """
        Draw a coordinate from a numpy ``Generator``.

        Rationals use integers in [-height, height]; prime fields the whole field.
        """
        if self.is_rational:
            return Fraction(int(rng.integers(-height, height + 1)))
        return int(rng.integers(0, self.p))
