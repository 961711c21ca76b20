"""Text formats for polynomials, permutations and index sets.

Polynomial grammar (whitespace is ignored between tokens)::

    poly := ['+'|'-'] term (('+'|'-') term)*
    term := [INT ['/' INT]] ('*'? var)*        at least one of INT or var
    var  := 'x' INT ('^' INT)?

Fractions are accepted only for domains that contain them. Permutations use disjoint
cycle notation such as ``(1 3)(2 4)``; ``()``, ``id`` and the empty string mean the
identity. Every syntax error carries a ParseDiagnostic with a byte offset.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any

from symdecomp.domains import ZZ, CoefficientDomain
from symdecomp.errors import (
    CycleError,
    IndexSetError,
    ParseDiagnostic,
    PermutationSyntaxError,
    PolynomialSyntaxError,
    VariableIndexError,
)
from symdecomp.permutations import Permutation
from symdecomp.poly import Monomial, Polynomial
from symdecomp.structure import IndexSet

__all__ = [
    "ParseDiagnostic",
    "parse_index_set",
    "parse_permutation",
    "parse_polynomial",
    "render_monomial",
    "render_permutation",
    "render_polynomial",
]

TOKEN_PATTERN = re.compile(r"(?P<int>[0-9]+)|(?P<var>x)|(?P<op>[-+*^/])")
WHITESPACE_PATTERN = re.compile(r"\s*")
CYCLE_POINT_PATTERN = re.compile(r"[0-9]+")
INDEX_LIST_PATTERN = re.compile(r"^\{?\s*([0-9]+(?:\s*,\s*[0-9]+)*)?\s*\}?$")
IDENTITY_SPELLINGS = ("", "()", "id")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "var", an operator character, or "end"
    text: str
    offset: int


def _decode(text: str | bytes, error: type) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise error(
                ParseDiagnostic(e.start, "UTF-8 text", repr(text[e.start : e.start + 1]))
            ) from None
    return text


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        pos = WHITESPACE_PATTERN.match(text, pos).end()
        if pos >= len(text):
            tokens.append(Token("end", "", _byte_offset(text, pos)))
            return tokens
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise PolynomialSyntaxError(
                ParseDiagnostic(_byte_offset(text, pos), "a term, '+' or '-'", text[pos])
            )
        kind = match.lastgroup
        tokens.append(
            Token(match.group() if kind == "op" else kind, match.group(), _byte_offset(text, pos))
        )
        pos = match.end()


class _PolynomialParser:
    """Recursive descent over the token list."""

    def __init__(self, text: str, n: int, domain: CoefficientDomain):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = n
        self.domain = domain

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def fail(self, expected: str) -> PolynomialSyntaxError:
        token = self.current
        return PolynomialSyntaxError(ParseDiagnostic(token.offset, expected, token.text))

    def expect(self, kind: str, expected: str) -> Token:
        if self.current.kind != kind:
            raise self.fail(expected)
        return self.advance()

    def parse(self) -> Polynomial:
        terms: list[tuple[Monomial, Any]] = []
        negative = False
        if self.current.kind in ("+", "-"):
            negative = self.advance().kind == "-"
        while True:
            monomial, c = self.term()
            terms.append((monomial, self.domain.neg(c) if negative else c))
            if self.current.kind == "end":
                break
            if self.current.kind not in ("+", "-"):
                raise self.fail("'+', '-' or end of input")
            negative = self.advance().kind == "-"
        return Polynomial(self.n, terms, self.domain)

    def term(self) -> tuple[Monomial, Any]:
        coefficient = self.domain.one
        seen_part = False
        if self.current.kind == "int":
            coefficient = self.coefficient()
            seen_part = True
        exps = [0] * self.n
        while True:
            if self.current.kind == "*" and seen_part:
                self.advance()
                index, power = self.var()
            elif self.current.kind == "var":
                index, power = self.var()
            elif not seen_part:
                raise self.fail("an integer or a variable")
            else:
                break
            exps[index - 1] += power
            seen_part = True
        return Monomial(exps), coefficient

    def integer(self, expected: str) -> int:
        token = self.expect("int", expected)
        try:
            return int(token.text)
        except ValueError:
            # longer than the interpreter's integer string conversion limit
            raise PolynomialSyntaxError(
                ParseDiagnostic(token.offset, "a shorter integer literal", token.text[:16])
            ) from None

    def coefficient(self) -> Any:
        numerator = self.integer("an integer")
        if self.current.kind != "/":
            return self.domain.coerce(numerator)
        slash = self.advance()
        denominator = self.integer("a denominator")
        try:
            return self.domain.from_string(f"{numerator}/{denominator}")
        except ValueError:
            raise PolynomialSyntaxError(
                ParseDiagnostic(slash.offset, f"a {self.domain.name} coefficient", "/")
            ) from None

    def var(self) -> tuple[int, int]:
        self.expect("var", "a variable x<i>")
        index_token = self.current
        index = self.integer("a variable index")
        if not 1 <= index <= self.n:
            raise VariableIndexError(
                ParseDiagnostic(index_token.offset, f"an index in [1, {self.n}]", index_token.text),
                index,
                self.n,
            )
        power = 1
        if self.current.kind == "^":
            self.advance()
            power = self.integer("an exponent")
        return index, power


def parse_polynomial(
    text: str | bytes, n: int, domain: CoefficientDomain = ZZ
) -> Polynomial:
    """Parse the polynomial grammar; like terms are combined.

    Raises:
        PolynomialSyntaxError: On malformed input, with the byte offset of the problem
        VariableIndexError: For x_i with i outside [1, n]
    """
    return _PolynomialParser(_decode(text, PolynomialSyntaxError), n, domain).parse()


def render_monomial(m: Monomial) -> str:
    """``x1^2*x3``; the constant monomial is ``1``."""
    parts = [
        f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m.exps, start=1) if e
    ]
    return "*".join(parts) or "1"


def render_polynomial(u: Polynomial) -> str:
    """Terms in lex-descending order joined by `` + `` and `` - ``; ``0`` for zero."""
    domain = u.domain
    pieces = []
    for m, c in u.items():
        negative = domain.is_negative(c)
        magnitude = domain.neg(c) if negative else c
        if m.is_one():
            body = domain.to_string(magnitude)
        elif magnitude == domain.one:
            body = render_monomial(m)
        else:
            body = f"{domain.to_string(magnitude)}*{render_monomial(m)}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) or "0"


def parse_permutation(text: str | bytes, n: int) -> Permutation:
    """Parse disjoint cycle notation.

    Raises:
        PermutationSyntaxError: If the text is not a sequence of parenthesized cycles
        CycleError: For repeated or out-of-range points
    """
    text = _decode(text, PermutationSyntaxError)
    if text.strip() in IDENTITY_SPELLINGS:
        return Permutation.identity(n)

    cycles: list[list[int]] = []
    seen: set[int] = set()
    pos = 0
    while True:
        pos = WHITESPACE_PATTERN.match(text, pos).end()
        if pos >= len(text):
            break
        if text[pos] != "(":
            raise PermutationSyntaxError(
                ParseDiagnostic(_byte_offset(text, pos), "'('", text[pos])
            )
        pos += 1
        cycle: list[int] = []
        while True:
            pos = WHITESPACE_PATTERN.match(text, pos).end()
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos < len(text) and text[pos] == ")":
                pos += 1
                break
            match = CYCLE_POINT_PATTERN.match(text, pos)
            if match is None:
                found = text[pos] if pos < len(text) else ""
                raise PermutationSyntaxError(
                    ParseDiagnostic(_byte_offset(text, pos), "a point or ')'", found)
                )
            digits = match.group()
            significant = digits.lstrip("0") or "0"
            point = int(significant) if len(significant) <= len(str(n)) else n + 1
            diagnostic = ParseDiagnostic(
                _byte_offset(text, pos), f"a new point in [1, {n}]", match.group()
            )
            if not 1 <= point <= n:
                raise CycleError(
                    diagnostic, f"Point {point} is out of range for n={n} ({diagnostic})"
                )
            if point in seen:
                raise CycleError(diagnostic, f"Point {point} appears in two cycles ({diagnostic})")
            seen.add(point)
            cycle.append(point)
            pos = match.end()
        cycles.append(cycle)
    return Permutation.from_cycles(cycles, n)


def render_permutation(g: Permutation) -> str:
    """Disjoint cycles with fixed points omitted; ``()`` for the identity."""
    return str(g)


def parse_index_set(text: str, n: int) -> IndexSet:
    """``1,2,3`` or ``{1,2,3}``."""
    match = INDEX_LIST_PATTERN.match(text.strip())
    if match is None or match.group(1) is None:
        raise IndexSetError(n, (), f"not a comma-separated index list: {text!r}")
    return IndexSet.of(n, (int(part) for part in match.group(1).split(",")))
