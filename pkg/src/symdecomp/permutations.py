"""The symmetric group Sym(x1..xn) acting on monomials and polynomials.

Convention: g·x_i = x_{g(i)}, so the exponent of x_{g(i)} in g·m is the exponent of x_i
in m. Composition ``g * h`` applies h first.

Orbits and transversals of monomials are built from the distinct arrangements of the
exponent vector, never by walking all n! permutations.
"""

from __future__ import annotations

import functools
import logging
import math
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import permutations as _all_arrangements

from sympy.utilities.iterables import multiset_permutations

from symdecomp.errors import ArgumentError, DimensionError, PreconditionError
from symdecomp.poly import Monomial, Polynomial

logger = logging.getLogger(__name__)

# Operations that really need every element of G refuse larger n.
MAX_FULL_GROUP_N = 8


class Permutation:
    """A bijection of {1..n}; ``images[i]`` is g(i+1)."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ArgumentError("A permutation needs n >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ArgumentError(f"{list(images)} is not a permutation of 1..{n}")
        self.images: tuple[int, ...] = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        g = object.__new__(cls)
        g.images = images
        g._hash = hash(images)
        return g

    @classmethod
    def identity(cls, n: int) -> Permutation:
        if n < 1:
            raise ArgumentError("A permutation needs n >= 1")
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ArgumentError(f"Transposition ({i} {j}) out of range for n={n}")
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls._trusted(tuple(images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int) -> Permutation:
        """Build from disjoint cycles; ArgumentError on overlap or out-of-range points."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = list(cycle)
            for point in cycle:
                if not 1 <= point <= n:
                    raise ArgumentError(f"Point {point} out of range for n={n}")
                if point in seen:
                    raise ArgumentError(f"Point {point} appears in more than one cycle")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls._trusted(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply other first."""
        if self.n != other.n:
            raise DimensionError(self.n, other.n, "compose")
        mine = self.images
        return Permutation._trusted(tuple(mine[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation._trusted(tuple(inv))

    def to_cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point; fixed points omitted."""
        seen: set[int] = set()
        cycles = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            cycles.append(tuple(cycle))
        return cycles

    def __mul__(self, other: Permutation) -> Permutation:
        return self.compose(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        cycles = self.to_cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def apply(g: Permutation, m: Monomial) -> Monomial:
    """g·m, with (g·m).exps[g(i)] = m.exps[i]."""
    if g.n != m.n:
        raise DimensionError(g.n, m.n, "apply")
    exps = [0] * m.n
    for i, e in enumerate(m.exps):
        exps[g.images[i] - 1] = e
    return Monomial._trusted(tuple(exps))


def apply_poly(g: Permutation, u: Polynomial) -> Polynomial:
    """Apply g term by term; coefficients are unchanged."""
    if g.n != u.n:
        raise DimensionError(g.n, u.n, "apply_poly")
    if g.is_identity():
        return u
    return Polynomial(u.n, [(apply(g, m), c) for m, c in u.items()], u.domain)


def _exponent_classes(m: Monomial) -> dict[int, list[int]]:
    """Map each exponent value to the 1-indexed positions carrying it."""
    classes: dict[int, list[int]] = {}
    for pos, e in enumerate(m.exps, start=1):
        classes.setdefault(e, []).append(pos)
    return classes


def stabilizer_order(m: Monomial) -> int:
    """Order of the Young subgroup permuting equal exponents among themselves."""
    return math.prod(math.factorial(c) for c in Counter(m.exps).values())


def stabilizer_generators(m: Monomial) -> list[Permutation]:
    """Transpositions of consecutive positions within each equal-exponent class."""
    gens = []
    for positions in _exponent_classes(m).values():
        for a, b in zip(positions, positions[1:]):
            gens.append(Permutation.transposition(m.n, a, b))
    return gens


def orbit(m: Monomial) -> frozenset[Monomial]:
    """All distinct g·m."""
    return frozenset(transversal(m).images)


def orbit_size(m: Monomial) -> int:
    return math.factorial(m.n) // stabilizer_order(m)


def _pairing(base: Monomial, target: Monomial) -> Permutation:
    """The lex-least g with g·base = target.

    Positions of equal exponent are paired in ascending order (a stable sort pairing).
    """
    if sorted(base.exps) != sorted(target.exps):
        raise PreconditionError(f"{target} is not in the orbit of {base}")
    src = sorted(range(base.n), key=lambda i: base.exps[i])
    dst = sorted(range(target.n), key=lambda i: target.exps[i])
    images = [0] * base.n
    for i, j in zip(src, dst):
        images[i] = j + 1
    return Permutation._trusted(tuple(images))


def sorting_permutation(m: Monomial) -> Permutation:
    """The canonical g with g⁻¹·m = exponents of m sorted non-increasing.

    g(i) is the position of the i-th largest exponent, ties broken by ascending position.
    """
    order = sorted(range(m.n), key=lambda i: -m.exps[i])
    return Permutation._trusted(tuple(i + 1 for i in order))


@dataclass(frozen=True)
class Transversal:
    """Coset representatives of stab(base) in G, one per orbit element.

    ``images[k] == apply(reps[k], base)``; orbit elements are listed lex descending.
    """

    base: Monomial
    reps: tuple[Permutation, ...]
    images: tuple[Monomial, ...]
    _index: dict[Monomial, int] = field(repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self) -> Iterator[tuple[Permutation, Monomial]]:
        return iter(zip(self.reps, self.images))

    def index_of(self, m: Monomial) -> int:
        """Index of the representative sending base to m."""
        try:
            return self._index[m]
        except KeyError:
            raise PreconditionError(f"{m} is not in the orbit of {self.base}") from None


@functools.lru_cache(maxsize=4096)
def transversal(m: Monomial) -> Transversal:
    """Canonical transversal of stab(m), built from distinct exponent arrangements.

    Args:
        m: Base monomial

    Returns:
        Transversal whose images run over the orbit of m in lex-descending order,
        each paired with the representative g that carries m onto it
    """
    arrangements = sorted(
        (tuple(a) for a in multiset_permutations(list(m.exps))), reverse=True
    )
    images = tuple(Monomial._trusted(a) for a in arrangements)
    reps = tuple(_pairing(m, img) for img in images)
    logger.debug("transversal of %s: %d representatives", m.exps, len(reps))
    return Transversal(
        base=m,
        reps=reps,
        images=images,
        _index={img: k for k, img in enumerate(images)},
    )


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of Sym(n); only for brute-force checks with n <= MAX_FULL_GROUP_N."""
    if n > MAX_FULL_GROUP_N:
        raise ArgumentError(
            f"Full group enumeration is capped at n={MAX_FULL_GROUP_N}, got n={n}"
        )
    for images in _all_arrangements(range(1, n + 1)):
        yield Permutation._trusted(images)
