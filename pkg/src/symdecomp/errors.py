"""Exception types shared across symdecomp.

Every error caused by bad input derives from ``SymDecompError`` (a ``ValueError``),
so callers can catch a single type. ``InvariantViolation`` is separate: it means the
engine itself is wrong, not the input.
"""

from __future__ import annotations

from dataclasses import dataclass


class SymDecompError(ValueError):
    """Base class for all input and precondition errors."""


class DimensionError(SymDecompError):
    """Raised when two values live in polynomial rings with different variable counts."""

    def __init__(self, left: int, right: int, operation: str = "operation"):
        self.left = left
        self.right = right
        self.operation = operation
        super().__init__(f"{operation}: variable count mismatch ({left} vs {right})")


class DomainError(SymDecompError):
    """Raised when values over different coefficient domains are combined."""


class LeadingMonomialError(SymDecompError):
    """Raised when the leading monomial of the zero polynomial is requested."""

    def __init__(self, operation: str = "lmlex"):
        super().__init__(f"{operation}: the zero polynomial has no leading monomial")


class ArgumentError(SymDecompError):
    """Raised when an argument is outside its documented range."""


class IndexSetError(SymDecompError):
    """Raised when an index set does not satisfy {n} ⊆ I ⊆ [n]."""

    def __init__(self, n: int, members: tuple[int, ...], reason: str):
        self.n = n
        self.members = members
        self.reason = reason
        super().__init__(f"Invalid index set {set(members) or '{}'} for n={n}: {reason}")


class PreconditionError(SymDecompError):
    """Raised when a documented precondition of an operation does not hold."""


class GeneratorError(SymDecompError):
    """Base class for rejected module generators."""

    condition = "generator"

    def __init__(self, index_set: object, detail: str):
        self.index_set = index_set
        self.detail = detail
        super().__init__(f"Generator for I={index_set} rejected ({self.condition}): {detail}")


class LeadingSetError(GeneratorError):
    condition = "leading set"


class StabilizerError(GeneratorError):
    condition = "stabilizer"


class UnitError(GeneratorError):
    condition = "unit leading coefficient"


class HomogeneityError(GeneratorError):
    condition = "homogeneity"


class CapacityError(SymDecompError):
    """Raised when an oracle job would exceed its resource cap."""

    def __init__(self, n: int, degree: int, dimension: int, limit: int):
        self.n = n
        self.degree = degree
        self.dimension = dimension
        self.limit = limit
        super().__init__(
            f"Graded component n={n}, degree={degree} has dimension {dimension}, "
            f"above the limit of {limit}"
        )


class FormatError(SymDecompError):
    """Raised when a JSON document does not follow the expected schema."""


@dataclass(frozen=True)
class ParseDiagnostic:
    """Where and why parsing stopped."""

    offset: int  # byte offset into the UTF-8 encoded input
    expected: str
    found: str

    def __str__(self) -> str:
        found = repr(self.found) if self.found else "end of input"
        return f"at byte {self.offset}: expected {self.expected}, found {found}"


class ParseError(SymDecompError):
    """Base class for text-format errors; always carries a diagnostic."""

    kind = "parse error"

    def __init__(self, diagnostic: ParseDiagnostic, message: str | None = None):
        self.diagnostic = diagnostic
        super().__init__(message or f"{self.kind} {diagnostic}")


class PolynomialSyntaxError(ParseError):
    kind = "Polynomial syntax error"


class PermutationSyntaxError(ParseError):
    kind = "Permutation syntax error"


class VariableIndexError(ParseError):
    """Raised for a variable x_i with i outside [1, n]."""

    kind = "Variable index out of range"

    def __init__(self, diagnostic: ParseDiagnostic, index: int, n: int):
        self.index = index
        self.n = n
        super().__init__(diagnostic, f"Variable x{index} is out of range for n={n} ({diagnostic})")


class CycleError(ParseError):
    """Raised for overlapping or out-of-range cycles."""

    kind = "Invalid cycle notation"


class InvariantViolation(RuntimeError):
    """An internal invariant failed. Always a bug in symdecomp."""
