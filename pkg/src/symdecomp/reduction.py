"""Reduced forms of monomials.

Red(m) rank-compresses the exponent vector: each exponent becomes the number of
distinct exponent values strictly below it. Every reduced monomial is g·e_I′ for a
unique index set I, which ``classify_reduced`` recovers together with a canonical g.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from symdecomp.errors import DimensionError, PreconditionError
from symdecomp.ordering import approx
from symdecomp.permutations import Permutation, sorting_permutation
from symdecomp.poly import Monomial
from symdecomp.structure import IndexSet


def reduce(m: Monomial) -> Monomial:
    """Red(m)."""
    rank = {value: k for k, value in enumerate(sorted(set(m.exps)))}
    return Monomial._trusted(tuple(rank[e] for e in m.exps))


def is_reduced(m: Monomial) -> bool:
    return set(m.exps) == set(range(len(set(m.exps))))


def reduce_set(monomials: Iterable[Monomial]) -> frozenset[Monomial]:
    """Element-wise Red of a set whose members are pairwise ≈."""
    members = list(monomials)
    if members:
        first = members[0]
        for m in members[1:]:
            if m.n != first.n:
                raise DimensionError(first.n, m.n, "reduce_set")
            if not approx(first, m):
                raise PreconditionError(f"reduce_set needs pairwise ≈ input: {first} vs {m}")
    return frozenset(reduce(m) for m in members)


def same_reduced_form(a: Monomial, b: Monomial) -> bool:
    """Red(a) = Red(b), decided by comparing the strict order pattern of the exponents."""
    if a.n != b.n:
        raise DimensionError(a.n, b.n, "same_reduced_form")
    n = a.n
    return all(
        (a.exps[i] > a.exps[j]) == (b.exps[i] > b.exps[j]) for i in range(n) for j in range(n)
    )


@dataclass(frozen=True)
class ReducedClassification:
    """A reduced monomial written as g·e_I′."""

    g: Permutation
    index_set: IndexSet

    def __str__(self) -> str:
        return f"g={self.g}, I={self.index_set}"


def classify_reduced(m: Monomial) -> ReducedClassification:
    """Find (g, I) with g·e_I′ = m for a reduced monomial m.

    I is read from the descent positions of the sorted exponents, plus n.

    Args:
        m: Monomial already in reduced form

    Returns:
        ReducedClassification holding g and I

    Raises:
        PreconditionError: m is not reduced
    """
    if not is_reduced(m):
        raise PreconditionError(f"{m} is not in reduced form (Red gives {reduce(m)})")
    g = sorting_permutation(m)
    ordered = sorted(m.exps, reverse=True)
    descents = [i for i in range(1, m.n) if ordered[i - 1] > ordered[i]]
    return ReducedClassification(g, IndexSet(m.n, (*descents, m.n)))
