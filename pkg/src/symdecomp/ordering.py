"""The orbit-maximal ordering ≽ on monomials and the leading set Glm.

Two monomials are compared through their orbit maxima, which are just the exponent
vectors sorted non-increasing. ``a ≈ b`` exactly when they lie in one orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from symdecomp.errors import ArgumentError, DimensionError
from symdecomp.permutations import MAX_FULL_GROUP_N, all_permutations, apply
from symdecomp.poly import Monomial, Polynomial


class Succession(Enum):
    """Outcome of comparing two monomials under ≽."""

    PRECEDES = -1
    APPROX_EQUAL = 0
    SUCCEEDS = 1


@dataclass(frozen=True, order=True)
class OrbitClass:
    """An orbit of monomials, named by its lex-greatest element."""

    canonical: Monomial

    @property
    def key(self) -> tuple[int, ...]:
        return self.canonical.exps


def canonical_key(m: Monomial) -> tuple[int, ...]:
    return tuple(sorted(m.exps, reverse=True))


def canonical(m: Monomial) -> OrbitClass:
    """Exponents sorted non-increasing, i.e. max_lex over the orbit of m."""
    return OrbitClass(Monomial._trusted(canonical_key(m)))


def succ_compare(a: Monomial, b: Monomial) -> Succession:
    if a.n != b.n:
        raise DimensionError(a.n, b.n, "succ_compare")
    ka, kb = canonical_key(a), canonical_key(b)
    if ka == kb:
        return Succession.APPROX_EQUAL
    return Succession.SUCCEEDS if ka > kb else Succession.PRECEDES


def approx(a: Monomial, b: Monomial) -> bool:
    return succ_compare(a, b) is Succession.APPROX_EQUAL


def support(u: Polynomial) -> frozenset[Monomial]:
    """M(u): the monomials occurring in u."""
    return frozenset(u.terms)


def glm(u: Polynomial) -> tuple[Monomial, ...]:
    """The ≽-maximal monomials of u in lex-descending order; empty for u = 0."""
    best: tuple[int, ...] | None = None
    members: list[Monomial] = []
    # terms iterate lex descending, so members stay in that order
    for m in u.terms:
        key = canonical_key(m)
        if best is None or key > best:
            best = key
            members = [m]
        elif key == best:
            members.append(m)
    return tuple(members)


@dataclass(frozen=True)
class GlmMeasure:
    """Position of u in the well-founded order used to prove surjectivity.

    ``key`` is the orbit class of Glm(u) (None for u = 0, the least element);
    within one class a strictly smaller Glm set is strictly lower.
    """

    key: tuple[int, ...] | None
    members: frozenset[Monomial]

    def __str__(self) -> str:
        if self.key is None:
            return "Glm=∅"
        return f"class {self.key}, |Glm|={len(self.members)}"


def glm_measure(u: Polynomial) -> GlmMeasure:
    leading = glm(u)
    if not leading:
        return GlmMeasure(None, frozenset())
    return GlmMeasure(canonical_key(leading[0]), frozenset(leading))


def measure_decreases(before: GlmMeasure, after: GlmMeasure) -> bool:
    """True when ``after`` lies strictly below ``before``."""
    if before.key is None:
        return False
    if after.key is None:
        return True
    if after.key != before.key:
        return after.key < before.key
    return after.members < before.members


def orbit_max_bruteforce(m: Monomial) -> Monomial:
    """max_lex of g·m over all of G. Only for n <= MAX_FULL_GROUP_N."""
    if m.n > MAX_FULL_GROUP_N:
        raise ArgumentError(f"Brute-force orbit maximum is capped at n={MAX_FULL_GROUP_N}")
    return max((apply(g, m) for g in all_permutations(m.n)), key=lambda x: x.exps)
