"""Coefficient domains.

A coefficient domain is a commutative ring without zero divisors. Polynomials keep a
reference to their domain and route every coefficient operation through it, so new
domains only need to implement ``CoefficientDomain``.
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any

from symdecomp.errors import ArgumentError, FormatError

INTEGER_PATTERN = re.compile(r"^[+-]?[0-9]+$")
RATIONAL_PATTERN = re.compile(r"^[+-]?[0-9]+(?:/[0-9]+)?$")


class CoefficientDomain(ABC):
    """Abstract ring operations used by the polynomial engine."""

    name: str = "abstract"

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def contains(self, value: Any) -> bool:
        """Check whether a Python value is an element of this domain."""

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Convert a Python value into this domain, or raise ArgumentError."""

    def neg(self, a: Any) -> Any:
        return -a

    def add(self, a: Any, b: Any) -> Any:
        return a + b

    def mul(self, a: Any, b: Any) -> Any:
        return a * b

    def eq(self, a: Any, b: Any) -> bool:
        return a == b

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    @abstractmethod
    def is_unit(self, a: Any) -> bool: ...

    @abstractmethod
    def unit_inverse(self, a: Any) -> Any:
        """Inverse of a unit. Raises ArgumentError for non-units."""

    def is_negative(self, a: Any) -> bool:
        """Sign used by text rendering; unordered domains return False."""
        return False

    @abstractmethod
    def to_string(self, a: Any) -> str:
        """Exact decimal serialization."""

    @abstractmethod
    def from_string(self, text: str) -> Any:
        """Parse the output of ``to_string``; raises FormatError on malformed text."""

    def __repr__(self) -> str:
        return f"<{self.name}>"

    def __reduce__(self) -> tuple:
        # domains are singletons compared by identity, also across worker processes
        return (get_domain, (self.name,))


class IntegerDomain(CoefficientDomain):
    """Arbitrary-precision integers. Units are ±1."""

    name = "ZZ"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def contains(self, value: Any) -> bool:
        return isinstance(value, int) and not isinstance(value, bool)

    def coerce(self, value: Any) -> int:
        if self.contains(value):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        raise ArgumentError(f"{value!r} is not an integer")

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def unit_inverse(self, a: int) -> int:
        if not self.is_unit(a):
            raise ArgumentError(f"{a} is not a unit in {self.name}")
        return a

    def is_negative(self, a: int) -> bool:
        return a < 0

    def to_string(self, a: int) -> str:
        return str(a)

    def from_string(self, text: str) -> int:
        if not isinstance(text, str) or not INTEGER_PATTERN.match(text.strip()):
            raise FormatError(f"Not an integer literal: {text!r}")
        return int(text)


class RationalDomain(CoefficientDomain):
    """Exact rationals (``fractions.Fraction``). Every nonzero element is a unit."""

    name = "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def contains(self, value: Any) -> bool:
        return isinstance(value, Fraction)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        raise ArgumentError(f"{value!r} is not a rational number")

    def is_unit(self, a: Fraction) -> bool:
        return a != 0

    def unit_inverse(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ArgumentError("0 is not a unit in QQ")
        return 1 / a

    def is_negative(self, a: Fraction) -> bool:
        return a < 0

    def to_string(self, a: Fraction) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def from_string(self, text: str) -> Fraction:
        if not isinstance(text, str) or not RATIONAL_PATTERN.match(text.strip()):
            raise FormatError(f"Not a rational literal: {text!r}")
        try:
            return Fraction(text.strip())
        except ZeroDivisionError:
            raise FormatError(f"Zero denominator: {text!r}") from None


ZZ = IntegerDomain()
QQ = RationalDomain()

DOMAINS: dict[str, CoefficientDomain] = {ZZ.name: ZZ, QQ.name: QQ}


def get_domain(name: str) -> CoefficientDomain:
    """Look up a shipped domain by name ("ZZ" or "QQ")."""
    try:
        return DOMAINS[name]
    except KeyError:
        raise ArgumentError(f"Unknown coefficient domain: {name}") from None
