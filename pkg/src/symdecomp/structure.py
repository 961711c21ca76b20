"""The modules V_I, their generators e_I and d_I-monomial bookkeeping.

For {n} ⊆ I ⊆ [n] the default generator is the monomial e_I′ = lmlex(d̃_I)/d_n.
A generalized generator e_I is any homogeneous polynomial with Glm(e_I) = {e_I′},
the same stabilizer as e_I′ and a unit coefficient on e_I′. V_I is spanned by the
transversal images g·e_I, which are linearly independent, so module elements are
stored as coordinates against that basis.
"""

from __future__ import annotations

import functools
import logging
import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations
from typing import Any

from symdecomp.domains import ZZ, CoefficientDomain
from symdecomp.errors import (
    ArgumentError,
    DimensionError,
    DomainError,
    HomogeneityError,
    IndexSetError,
    LeadingSetError,
    PreconditionError,
    StabilizerError,
    UnitError,
)
from symdecomp.ordering import glm
from symdecomp.permutations import (
    Permutation,
    apply,
    apply_poly,
    stabilizer_generators,
    stabilizer_order,
    transversal,
)
from symdecomp.poly import Monomial, Polynomial, elementary_symmetric

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class IndexSet:
    """A subset I of [n] with n ∈ I, members ascending."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = self.members
        if list(members) != sorted(set(members)):
            raise IndexSetError(self.n, members, "members must be strictly ascending")
        if any(not 1 <= i <= self.n for i in members):
            raise IndexSetError(self.n, members, f"members must lie in [1, {self.n}]")
        if self.n not in members:
            raise IndexSetError(self.n, members, f"must contain n={self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> IndexSet:
        return cls(n, tuple(sorted(set(members))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)

    def blocks(self) -> list[int]:
        """Block sizes i1, i2 - i1, ..., n - i_{m-1}."""
        bounds = (0, *self.members)
        return [b - a for a, b in zip(bounds, bounds[1:])]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def index_sets(n: int) -> list[IndexSet]:
    """All I with {n} ⊆ I ⊆ [n], ordered by member tuple."""
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    found = []
    for size in range(n):
        for rest in combinations(range(1, n), size):
            found.append(IndexSet(n, (*rest, n)))
    return sorted(found)


@dataclass(frozen=True)
class DMonomial:
    """A d_I-monomial Π d_i^{t_i}; ``powers`` holds (i, t_i) with t_i > 0, i ascending."""

    index_set: IndexSet
    powers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for i, t in self.powers:
            if i not in self.index_set:
                raise IndexSetError(
                    self.index_set.n, self.index_set.members, f"d{i} is not a d_I variable"
                )
            if t <= 0:
                raise ArgumentError(f"Stored powers must be positive, got d{i}^{t}")

    @classmethod
    def of(cls, index_set: IndexSet, powers: Mapping[int, int] | None = None) -> DMonomial:
        """Build from a power map; zero powers are dropped."""
        powers = powers or {}
        for t in powers.values():
            if t < 0:
                raise ArgumentError(f"d-exponents must be natural numbers, got {t}")
        return cls(index_set, tuple(sorted((i, t) for i, t in powers.items() if t)))

    @classmethod
    def one(cls, index_set: IndexSet) -> DMonomial:
        return cls(index_set, ())

    @property
    def n(self) -> int:
        return self.index_set.n

    def exponent(self, i: int) -> int:
        return dict(self.powers).get(i, 0)

    def exponent_vector(self) -> tuple[int, ...]:
        """(t_1, ..., t_n)."""
        powers = dict(self.powers)
        return tuple(powers.get(i, 0) for i in range(1, self.n + 1))

    @property
    def degree(self) -> int:
        """Degree as an element of S: Σ i·t_i."""
        return sum(i * t for i, t in self.powers)

    def is_one(self) -> bool:
        return not self.powers

    def lmlex(self) -> Monomial:
        """Π lmlex(d_i)^{t_i}: x_j carries Σ_{i >= j} t_i."""
        exps = [0] * self.n
        for i, t in self.powers:
            for j in range(i):
                exps[j] += t
        return Monomial._trusted(tuple(exps))

    def mul(self, other: DMonomial) -> DMonomial:
        if other.index_set != self.index_set:
            raise PreconditionError(
                f"Cannot multiply d-monomials over {self.index_set} and {other.index_set}"
            )
        powers = dict(self.powers)
        for i, t in other.powers:
            powers[i] = powers.get(i, 0) + t
        return DMonomial.of(self.index_set, powers)

    def __mul__(self, other: DMonomial) -> DMonomial:
        return self.mul(other)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(f"d{i}" if t == 1 else f"d{i}^{t}" for i, t in self.powers)


_POWER_LADDERS: dict[tuple[int, int, CoefficientDomain], list[Polynomial]] = {}


def _elementary_power(n: int, i: int, t: int, domain: CoefficientDomain) -> Polynomial:
    """d_i^t, read from a cached ladder of successive powers extended one factor at a time."""
    ladder = _POWER_LADDERS.setdefault(
        (n, i, domain), [Polynomial.constant(n, domain.one, domain)]
    )
    factor = elementary_symmetric(n, i, domain)
    while len(ladder) <= t:
        ladder.append(ladder[-1].mul(factor))
    return ladder[t]


@functools.lru_cache(maxsize=8192)
def dmonomial_expand(r: DMonomial, domain: CoefficientDomain = ZZ) -> Polynomial:
    """Π elementary_symmetric(n, i)^{t_i} as an element of S.

    Args:
        r: d-monomial to expand
        domain: Coefficient domain of the result

    Returns:
        Polynomial in x1..xn; d_n = x1⋯xn is a single monomial, so its power only
        shifts exponents
    """
    n = r.n
    expanded = Polynomial.constant(n, domain.one, domain)
    for i, t in r.powers:
        if i == n:
            expanded = expanded.mul_monomial(Monomial._trusted((t,) * n))
        else:
            expanded = expanded.mul(_elementary_power(n, i, t, domain))
    return expanded


class DPolynomial:
    """An element of k[d_I]: DMonomial -> nonzero coefficient."""

    def __init__(
        self,
        index_set: IndexSet,
        terms: Mapping[DMonomial, Any] | Iterable[tuple[DMonomial, Any]] = (),
        domain: CoefficientDomain = ZZ,
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[DMonomial, Any] = {}
        for r, c in items:
            if r.index_set != index_set:
                raise PreconditionError(f"{r} is not a d-monomial over {index_set}")
            c = domain.coerce(c)
            merged[r] = domain.add(merged[r], c) if r in merged else c
        self.index_set = index_set
        self.domain = domain
        self.terms = {r: c for r, c in merged.items() if not domain.is_zero(c)}

    def expand(self) -> Polynomial:
        total = Polynomial.zero(self.index_set.n, self.domain)
        for r, c in self.terms.items():
            total = total.add(dmonomial_expand(r, self.domain).scale(c))
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DPolynomial):
            return NotImplemented
        return self.index_set == other.index_set and self.terms == other.terms


def d_monomials_of_degree(index_set: IndexSet, degree: int) -> list[DMonomial]:
    """All d_I-monomials r with Σ i·t_i = degree, in descending exponent-vector order."""
    parts = list(index_set.members)
    found: list[dict[int, int]] = []

    def walk(k: int, remaining: int, powers: dict[int, int]) -> None:
        if remaining == 0:
            found.append(dict(powers))
            return
        if k == len(parts):
            return
        part = parts[k]
        for t in range(remaining // part, -1, -1):
            powers[part] = t
            walk(k + 1, remaining - t * part, powers)
        powers.pop(part, None)

    if degree >= 0:
        walk(0, degree, {})
    result = [DMonomial.of(index_set, p) for p in found]
    return sorted(result, key=DMonomial.exponent_vector, reverse=True)


def count_d_monomials(index_set: IndexSet, degree: int) -> int:
    """Number of d_I-monomials of S-degree ``degree`` (coin-change count)."""
    if degree < 0:
        return 0
    ways = [1] + [0] * degree
    for part in index_set.members:
        for total in range(part, degree + 1):
            ways[total] += ways[total - part]
    return ways[degree]


def e_prime(index_set: IndexSet) -> Monomial:
    """e_I′ = Π_{i ∈ I∖{n}} lmlex(d_i) = lmlex(d̃_I)/d_n."""
    n = index_set.n
    exps = [0] * n
    for i in index_set.members:
        if i == n:
            continue
        for j in range(i):
            exps[j] += 1
    return Monomial._trusted(tuple(exps))


def e_double_prime(n: int, subset: Iterable[int]) -> Monomial:
    """e″_J = lmlex(d̃_J) for any J ⊆ [n]; 1 for J = ∅."""
    exps = [0] * n
    for i in set(subset):
        if not 1 <= i <= n:
            raise ArgumentError(f"Index {i} out of range for n={n}")
        for j in range(i):
            exps[j] += 1
    return Monomial._trusted(tuple(exps))


def module_dimension(index_set: IndexSet) -> int:
    """n!/(i1!(i2-i1)!...(n-i_{m-1})!)."""
    denominator = math.prod(math.factorial(b) for b in index_set.blocks())
    return math.factorial(index_set.n) // denominator


@dataclass(frozen=True)
class GeneratorSpec:
    """A validated generator e_I of V_I together with its leading monomial e_I′."""

    index_set: IndexSet
    generator: Polynomial
    leading: Monomial

    @property
    def domain(self) -> CoefficientDomain:
        return self.generator.domain

    @property
    def leading_coefficient(self) -> Any:
        return self.generator.coefficient(self.leading)

    @property
    def degree(self) -> int:
        return self.leading.degree

    def is_default(self) -> bool:
        return self.generator == Polynomial.monomial(self.leading, domain=self.domain)


def default_generator(index_set: IndexSet, domain: CoefficientDomain = ZZ) -> GeneratorSpec:
    """e_I = e_I′ with coefficient 1."""
    leading = e_prime(index_set)
    return GeneratorSpec(index_set, Polynomial.monomial(leading, domain=domain), leading)


def validate_generator(candidate: Polynomial, index_set: IndexSet) -> GeneratorSpec:
    """Check the generator conditions in order and return the spec.

    Args:
        candidate: Proposed generator e_I
        index_set: The I whose module V_I it should generate

    Returns:
        GeneratorSpec pairing the candidate with its leading monomial e_I′

    Raises:
        LeadingSetError: Glm(candidate) is not {e_I′}
        StabilizerError: stab(e_I′) moves the candidate
        UnitError: The coefficient on e_I′ is not a unit
        HomogeneityError: The candidate is not homogeneous
    """
    if candidate.n != index_set.n:
        raise DimensionError(candidate.n, index_set.n, "validate_generator")
    if candidate.is_zero():
        raise PreconditionError("The zero polynomial cannot generate V_I")
    leading = e_prime(index_set)

    found = glm(candidate)
    if found != (leading,):
        shown = ", ".join(str(m) for m in found)
        raise LeadingSetError(index_set, f"Glm = {{{shown}}}, expected {{{leading}}}")

    for g in stabilizer_generators(leading):
        if apply_poly(g, candidate) != candidate:
            raise StabilizerError(index_set, f"{g} fixes {leading} but moves the candidate")
    images = {apply_poly(rep, candidate) for rep in transversal(leading).reps}
    if len(images) * stabilizer_order(leading) != math.factorial(index_set.n):
        raise StabilizerError(
            index_set,
            f"orbit of the candidate has {len(images)} elements, "
            f"expected {math.factorial(index_set.n) // stabilizer_order(leading)}",
        )

    c = candidate.coefficient(leading)
    if not candidate.domain.is_unit(c):
        raise UnitError(
            index_set,
            f"coefficient {candidate.domain.to_string(c)} of {leading} "
            f"is not a unit in {candidate.domain.name}",
        )

    if not candidate.is_homogeneous():
        raise HomogeneityError(index_set, "all terms must share the degree of e_I′")

    return GeneratorSpec(index_set, candidate, leading)


@functools.lru_cache(maxsize=1024)
def module_basis(spec: GeneratorSpec) -> tuple[tuple[Permutation, Polynomial], ...]:
    """(g, g·e_I) for every transversal representative g of stab(e_I′)."""
    return tuple((rep, apply_poly(rep, spec.generator)) for rep in transversal(spec.leading).reps)


@dataclass(frozen=True)
class ModuleElement:
    """Σ λ_g · g·e_I in transversal coordinates; ``coords`` holds (rep index, λ) pairs."""

    spec: GeneratorSpec
    coords: tuple[tuple[int, Any], ...]

    @classmethod
    def of(cls, spec: GeneratorSpec, coords: Mapping[int, Any]) -> ModuleElement:
        domain = spec.domain
        size = len(transversal(spec.leading))
        kept = []
        for rep, c in sorted(coords.items()):
            if not 0 <= rep < size:
                raise ArgumentError(f"Representative index {rep} out of range [0, {size})")
            c = domain.coerce(c)
            if not domain.is_zero(c):
                kept.append((rep, c))
        return cls(spec, tuple(kept))

    @classmethod
    def from_polynomial(cls, spec: GeneratorSpec, u: Polynomial) -> ModuleElement:
        """Read coordinates back from a polynomial known to lie in V_I."""
        if u.domain is not spec.domain:
            raise DomainError(f"{u.domain} polynomial for a {spec.domain} module")
        domain = spec.domain
        inverse = domain.unit_inverse(spec.leading_coefficient)
        images = transversal(spec.leading).images
        coords = {
            k: domain.mul(u.coefficient(m), inverse)
            for k, m in enumerate(images)
        }
        element = cls.of(spec, coords)
        if element.expand() != u:
            raise PreconditionError(f"{u} is not an element of V_{spec.index_set}")
        return element

    def is_zero(self) -> bool:
        return not self.coords

    def expand(self) -> Polynomial:
        basis = module_basis(self.spec)
        total = Polynomial.zero(self.spec.index_set.n, self.spec.domain)
        for rep, c in self.coords:
            total = total.add(basis[rep][1].scale(c))
        return total

    def act(self, g: Permutation) -> ModuleElement:
        """g·v: permute cosets, g·(t·e_I) = t′·e_I with t′·e_I′ = g·t·e_I′."""
        tv = transversal(self.spec.leading)
        moved = {tv.index_of(apply(g, tv.images[rep])): c for rep, c in self.coords}
        return ModuleElement.of(self.spec, moved)

    def add(self, other: ModuleElement) -> ModuleElement:
        if other.spec != self.spec:
            raise PreconditionError("Module elements belong to different generators")
        domain = self.spec.domain
        merged = dict(self.coords)
        for rep, c in other.coords:
            merged[rep] = domain.add(merged[rep], c) if rep in merged else c
        return ModuleElement.of(self.spec, merged)

    def scale(self, c: Any) -> ModuleElement:
        domain = self.spec.domain
        return ModuleElement.of(self.spec, {rep: domain.mul(c, a) for rep, a in self.coords})
