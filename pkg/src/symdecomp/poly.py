"""Exact multivariate polynomials over a pluggable coefficient domain.

Monomials are exponent vectors in x1..xn. Polynomials are immutable term maps kept in
lexicographically descending order, so the lex-leading monomial is always the first key
and every serialization is deterministic.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Iterator, Mapping
from enum import Enum
from itertools import combinations
from types import MappingProxyType
from typing import Any

from symdecomp.domains import ZZ, CoefficientDomain
from symdecomp.errors import ArgumentError, DimensionError, DomainError, LeadingMonomialError


class Ordering(Enum):
    """Result of a three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class Monomial:
    """An exponent vector: ``exps[i]`` is the exponent of x_{i+1}."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Iterable[int]):
        exps = tuple(exps)
        if not exps:
            raise ArgumentError("A monomial needs at least one variable")
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ArgumentError(f"Exponents must be natural numbers, got {exps}")
        self.exps: tuple[int, ...] = exps
        self._hash = hash(exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        """The constant monomial 1 in n variables."""
        return cls._trusted((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> Monomial:
        """The monomial x_i (1-indexed) in n variables."""
        if not 1 <= i <= n:
            raise ArgumentError(f"Variable index {i} out of range for n={n}")
        return cls._trusted(tuple(1 if j == i - 1 else 0 for j in range(n)))

    @classmethod
    def _trusted(cls, exps: tuple[int, ...]) -> Monomial:
        m = object.__new__(cls)
        m.exps = exps
        m._hash = hash(exps)
        return m

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def _check(self, other: Monomial, operation: str) -> None:
        if len(self.exps) != len(other.exps):
            raise DimensionError(len(self.exps), len(other.exps), operation)

    def mul(self, other: Monomial) -> Monomial:
        self._check(other, "monomial product")
        return Monomial._trusted(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: Monomial) -> bool:
        self._check(other, "divisibility")
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def div(self, other: Monomial) -> Monomial:
        """Exact quotient ``self / other``."""
        if not other.divides(self):
            raise ArgumentError(f"{other} does not divide {self}")
        return Monomial._trusted(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: Monomial) -> Monomial:
        return self.mul(other)

    def __pow__(self, k: int) -> Monomial:
        return Monomial._trusted(tuple(e * k for e in self.exps))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        self._check(other, "lex comparison")
        return self.exps < other.exps

    def __le__(self, other: Monomial) -> bool:
        self._check(other, "lex comparison")
        return self.exps <= other.exps

    def __gt__(self, other: Monomial) -> bool:
        self._check(other, "lex comparison")
        return self.exps > other.exps

    def __ge__(self, other: Monomial) -> bool:
        self._check(other, "lex comparison")
        return self.exps >= other.exps

    def __repr__(self) -> str:
        return f"Monomial({self.exps})"

    def __str__(self) -> str:
        from symdecomp.parser import render_monomial

        return render_monomial(self)


def lex_compare(a: Monomial, b: Monomial) -> Ordering:
    """Compare exponent vectors position by position starting from x1."""
    a._check(b, "lex_compare")
    if a.exps == b.exps:
        return Ordering.EQUAL
    return Ordering.GREATER if a.exps > b.exps else Ordering.LESS


class Polynomial:
    """An element of k[x1..xn]: a finite map Monomial -> nonzero coefficient."""

    __slots__ = ("n", "domain", "_terms", "_hash")

    def __init__(
        self,
        n: int,
        terms: Mapping[Monomial, Any] | Iterable[tuple[Monomial, Any]] = (),
        domain: CoefficientDomain = ZZ,
    ):
        if not isinstance(n, int) or n < 1:
            raise ArgumentError(f"Variable count must be a positive integer, got {n!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[Monomial, Any] = {}
        for m, c in items:
            if m.n != n:
                raise DimensionError(m.n, n, "polynomial construction")
            c = domain.coerce(c)
            merged[m] = domain.add(merged[m], c) if m in merged else c
        self.n = n
        self.domain = domain
        self._terms = _canonical(merged, domain)
        self._hash: int | None = None

    @classmethod
    def _from_canonical(
        cls, n: int, terms: dict[Monomial, Any], domain: CoefficientDomain
    ) -> Polynomial:
        p = object.__new__(cls)
        p.n = n
        p.domain = domain
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int, domain: CoefficientDomain = ZZ) -> Polynomial:
        return cls._from_canonical(n, {}, domain)

    @classmethod
    def constant(cls, n: int, c: Any, domain: CoefficientDomain = ZZ) -> Polynomial:
        return cls(n, [(Monomial.one(n), c)], domain)

    @classmethod
    def monomial(cls, m: Monomial, c: Any = None, domain: CoefficientDomain = ZZ) -> Polynomial:
        return cls(m.n, [(m, domain.one if c is None else c)], domain)

    @classmethod
    def variable(cls, n: int, i: int, domain: CoefficientDomain = ZZ) -> Polynomial:
        return cls.monomial(Monomial.variable(n, i), domain=domain)

    @property
    def terms(self) -> Mapping[Monomial, Any]:
        """Read-only term map, iterated in lex-descending order."""
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Any]]:
        return iter(self._terms.items())

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coefficient(self, m: Monomial) -> Any:
        return self._terms.get(m, self.domain.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self._terms}) <= 1

    def _check(self, other: Polynomial, operation: str) -> None:
        if self.n != other.n:
            raise DimensionError(self.n, other.n, operation)
        if self.domain is not other.domain:
            raise DomainError(f"{operation}: cannot combine {self.domain} and {other.domain}")

    def add(self, other: Polynomial) -> Polynomial:
        self._check(other, "add")
        domain = self.domain
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = domain.add(merged[m], c) if m in merged else c
        return Polynomial._from_canonical(self.n, _canonical(merged, domain), domain)

    def neg(self) -> Polynomial:
        neg = self.domain.neg
        return Polynomial._from_canonical(
            self.n, {m: neg(c) for m, c in self._terms.items()}, self.domain
        )

    def sub(self, other: Polynomial) -> Polynomial:
        return self.add(other.neg())

    def scale(self, c: Any) -> Polynomial:
        domain = self.domain
        c = domain.coerce(c)
        if domain.is_zero(c):
            return Polynomial.zero(self.n, domain)
        # no zero divisors: nonzero * nonzero stays nonzero and order is unchanged
        return Polynomial._from_canonical(
            self.n, {m: domain.mul(c, a) for m, a in self._terms.items()}, domain
        )

    def mul(self, other: Polynomial) -> Polynomial:
        self._check(other, "mul")
        domain = self.domain
        add, mul = domain.add, domain.mul
        acc: dict[tuple[int, ...], Any] = {}
        for m1, c1 in self._terms.items():
            e1 = m1.exps
            for m2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, m2.exps))
                prod = mul(c1, c2)
                acc[key] = add(acc[key], prod) if key in acc else prod
        merged = {Monomial._trusted(k): c for k, c in acc.items()}
        return Polynomial._from_canonical(self.n, _canonical(merged, domain), domain)

    def mul_monomial(self, m: Monomial, c: Any = None) -> Polynomial:
        """Multiply by the single term ``c * m`` (c defaults to 1)."""
        if m.n != self.n:
            raise DimensionError(m.n, self.n, "mul_monomial")
        domain = self.domain
        shifted = {
            Monomial._trusted(tuple(a + b for a, b in zip(k.exps, m.exps))): a
            for k, a in self._terms.items()
        }
        result = Polynomial._from_canonical(self.n, shifted, domain)
        return result if c is None else result.scale(c)

    def lmlex(self) -> Monomial:
        """The lex-greatest monomial with nonzero coefficient."""
        if not self._terms:
            raise LeadingMonomialError()
        return next(iter(self._terms))

    def leading_coefficient(self) -> Any:
        return self._terms[self.lmlex()]

    def change_domain(self, domain: CoefficientDomain) -> Polynomial:
        return Polynomial(self.n, self._terms.items(), domain)

    def __add__(self, other: Polynomial) -> Polynomial:
        return self.add(other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self.sub(other)

    def __neg__(self) -> Polynomial:
        return self.neg()

    def __mul__(self, other: Any) -> Polynomial:
        if isinstance(other, Polynomial):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> Polynomial:
        return self.scale(other)

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ArgumentError("Negative powers are not polynomials")
        result = Polynomial.constant(self.n, self.domain.one, self.domain)
        for _ in range(k):
            result = result.mul(self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.n == other.n
            and self.domain is other.domain
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.domain.name, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {str(self)!r})"

    def __str__(self) -> str:
        from symdecomp.parser import render_polynomial

        return render_polynomial(self)


def _canonical(terms: dict[Monomial, Any], domain: CoefficientDomain) -> dict[Monomial, Any]:
    """Drop zero coefficients and order keys lex descending."""
    is_zero = domain.is_zero
    return {
        m: terms[m]
        for m in sorted(terms, key=lambda k: k.exps, reverse=True)
        if not is_zero(terms[m])
    }


def add(u: Polynomial, v: Polynomial) -> Polynomial:
    return u.add(v)


def mul(u: Polynomial, v: Polynomial) -> Polynomial:
    return u.mul(v)


def scale(c: Any, u: Polynomial) -> Polynomial:
    return u.scale(c)


def lmlex(u: Polynomial) -> Monomial:
    return u.lmlex()


@functools.lru_cache(maxsize=None)
def elementary_symmetric(n: int, i: int, domain: CoefficientDomain = ZZ) -> Polynomial:
    """The i-th elementary symmetric polynomial d_i in x1..xn."""
    if not isinstance(n, int) or n < 1:
        raise ArgumentError(f"n must be a positive integer, got {n!r}")
    if not isinstance(i, int) or not 1 <= i <= n:
        raise ArgumentError(f"Elementary symmetric index {i} out of range [1, {n}]")
    terms = []
    for subset in combinations(range(n), i):
        exps = [0] * n
        for j in subset:
            exps[j] = 1
        terms.append((Monomial._trusted(tuple(exps)), domain.one))
    return Polynomial(n, terms, domain)


def homogeneous_components(u: Polynomial) -> dict[int, Polynomial]:
    """Split u into graded pieces, keyed by ascending total degree."""
    pieces: dict[int, dict[Monomial, Any]] = {}
    for m, c in u.items():
        pieces.setdefault(m.degree, {})[m] = c
    return {
        d: Polynomial._from_canonical(u.n, pieces[d], u.domain) for d in sorted(pieces)
    }
