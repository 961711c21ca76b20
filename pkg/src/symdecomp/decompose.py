"""Decomposition of polynomials along S ≅ ⊕_{I ∋ n} k[d_I] ⊗ V_I.

``decompose`` peels off one Glm monomial at a time: every monomial m is the unique
leading monomial of some r·(g·e_I), so subtracting the right multiple strictly lowers
the Glm measure of what is left. ``recompose`` is the multiplication map back into S.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from typing import Any, NamedTuple

from symdecomp.domains import CoefficientDomain
from symdecomp.errors import DimensionError, DomainError, InvariantViolation, PreconditionError
from symdecomp.ordering import glm, glm_measure, measure_decreases
from symdecomp.permutations import Permutation, apply, sorting_permutation, transversal
from symdecomp.poly import Monomial, Polynomial, homogeneous_components
from symdecomp.structure import (
    DMonomial,
    GeneratorSpec,
    IndexSet,
    ModuleElement,
    default_generator,
    dmonomial_expand,
    module_basis,
    validate_generator,
)

logger = logging.getLogger(__name__)

MINUS = "−"
TENSOR = "⊗"


class LeadingWitness(NamedTuple):
    """(I, r, g) with Glm(r·g·e_I) = {m}."""

    index_set: IndexSet
    r: DMonomial
    g: Permutation


def leading_witness(m: Monomial) -> LeadingWitness:
    """Write m as the leading monomial of r·(g·e_I).

    With the sorted exponents c, the gaps t_i = c_i - c_{i+1} (t_n = c_n) give
    canonical(m) = Π lmlex(d_i)^{t_i}; one factor of each d_i with i < n and t_i > 0
    is absorbed into e_I′.
    """
    n = m.n
    g = sorting_permutation(m)
    c = sorted(m.exps, reverse=True)
    gaps = [c[i] - c[i + 1] for i in range(n - 1)] + [c[-1]]
    members = [i for i in range(1, n) if gaps[i - 1]]
    index_set = IndexSet(n, (*members, n))
    powers = {i: gaps[i - 1] - 1 for i in members}
    powers[n] = gaps[-1]
    return LeadingWitness(index_set, DMonomial.of(index_set, powers), g)


@dataclass
class Decomposition:
    """An element of ⊕_I k[d_I] ⊗ V_I.

    ``components[I]`` maps each d_I-monomial r to the module element v of the term r ⊗ v.
    Zero module elements are never stored.
    """

    n: int
    domain: CoefficientDomain
    components: dict[IndexSet, dict[DMonomial, ModuleElement]] = field(default_factory=dict)
    generators: dict[IndexSet, GeneratorSpec] = field(default_factory=dict, compare=False)

    def generator(self, index_set: IndexSet) -> GeneratorSpec:
        if index_set not in self.generators:
            self.generators[index_set] = default_generator(index_set, self.domain)
        return self.generators[index_set]

    def accumulate(self, r: DMonomial, element: ModuleElement) -> None:
        """Add r ⊗ element, merging with an existing term for the same r."""
        index_set = r.index_set
        if element.spec.index_set != index_set:
            raise PreconditionError(
                f"d-monomial over {index_set} paired with an element of V_{element.spec.index_set}"
            )
        terms = self.components.setdefault(index_set, {})
        if r in terms:
            element = terms[r].add(element)
        if element.is_zero():
            terms.pop(r, None)
            if not terms:
                del self.components[index_set]
        else:
            terms[r] = element

    def is_zero(self) -> bool:
        return not self.components

    def iter_terms(self) -> Iterator[tuple[IndexSet, DMonomial, ModuleElement]]:
        """Terms with components by ascending I and r by descending exponent vector."""
        for index_set in sorted(self.components):
            terms = self.components[index_set]
            for r in sorted(terms, key=DMonomial.exponent_vector, reverse=True):
                yield index_set, r, terms[r]

    def term_count(self) -> int:
        return sum(len(terms) for terms in self.components.values())

    def __str__(self) -> str:
        return render_decomposition(self)


def _resolve_generators(
    n: int, domain: CoefficientDomain, generators: Mapping[IndexSet, GeneratorSpec] | None
) -> dict[IndexSet, GeneratorSpec]:
    table: dict[IndexSet, GeneratorSpec] = {}
    for index_set, spec in (generators or {}).items():
        if index_set.n != n or spec.index_set != index_set:
            raise PreconditionError(f"Generator table entry for {index_set} does not match n={n}")
        if spec.domain is not domain:
            raise DomainError(
                f"Generator for {index_set} is over {spec.domain}, input over {domain}"
            )
        table[index_set] = validate_generator(spec.generator, index_set)
    return table


def _decompose_homogeneous(part: Polynomial, result: Decomposition) -> int:
    """Drain one graded piece into ``result``; returns the iteration count."""
    n, domain = part.n, part.domain
    cap = math.comb(part.degree + n - 1, n - 1)
    remaining = part
    measure = glm_measure(remaining)
    steps = 0
    while not remaining.is_zero():
        steps += 1
        if steps > cap:
            raise InvariantViolation(
                f"decompose exceeded {cap} iterations in degree {part.degree} (n={n})"
            )
        m = glm(remaining)[0]
        witness = leading_witness(m)
        spec = result.generator(witness.index_set)
        coeff = domain.mul(remaining.coefficient(m), domain.unit_inverse(spec.leading_coefficient))

        rep = transversal(spec.leading).index_of(apply(witness.g, spec.leading))
        image = module_basis(spec)[rep][1]
        remaining = remaining.sub(dmonomial_expand(witness.r, domain).mul(image).scale(coeff))
        result.accumulate(witness.r, ModuleElement.of(spec, {rep: coeff}))

        after = glm_measure(remaining)
        if not measure_decreases(measure, after):
            raise InvariantViolation(
                f"Glm measure did not decrease after removing {m}: {measure} -> {after}"
            )
        logger.debug("extracted %s as %s ⊗ rep %d, now %s", m, witness.r, rep, after)
        measure = after
    return steps


def decompose(
    u: Polynomial, generators: Mapping[IndexSet, GeneratorSpec] | None = None
) -> Decomposition:
    """Write u as Σ r ⊗ v, the inverse of ``recompose``.

    Each homogeneous component of u is processed on its own.

    Args:
        u: Polynomial to decompose
        generators: Optional generator per index set; every entry is re-validated and
            index sets not in the table use e_I′

    Returns:
        Decomposition with one term per (I, r) pair

    Raises:
        GeneratorError: A supplied generator fails validation
        InvariantViolation: The Glm measure stopped decreasing
    """
    table = _resolve_generators(u.n, u.domain, generators)
    result = Decomposition(u.n, u.domain, generators=table)
    for degree, part in homogeneous_components(u).items():
        steps = _decompose_homogeneous(part, result)
        logger.debug("degree %d: %d terms in %d steps", degree, len(part), steps)
    return result


def recompose(decomposition: Decomposition) -> Polynomial:
    """φ: Σ r ⊗ v ↦ Σ r·v."""
    domain = decomposition.domain
    total = Polynomial.zero(decomposition.n, domain)
    for _, r, element in decomposition.iter_terms():
        total = total.add(dmonomial_expand(r, domain).mul(element.expand()))
    return total


def equivariance_apply(g: Permutation, decomposition: Decomposition) -> Decomposition:
    """g acting on every module element; the d_I-monomials are symmetric and stay fixed."""
    if g.n != decomposition.n:
        raise DimensionError(g.n, decomposition.n, "equivariance_apply")
    moved = Decomposition(
        decomposition.n, decomposition.domain, generators=dict(decomposition.generators)
    )
    for _, r, element in decomposition.iter_terms():
        moved.accumulate(r, element.act(g))
    return moved


def multiply_component(
    decomposition: Decomposition, index_set: IndexSet, r: DMonomial
) -> Decomposition:
    """Multiply every term of component I by the d_I-monomial r."""
    if r.index_set != index_set:
        raise PreconditionError(f"{r} is not a d-monomial over {index_set}")
    result = Decomposition(
        decomposition.n, decomposition.domain, generators=dict(decomposition.generators)
    )
    for current, s, element in decomposition.iter_terms():
        result.accumulate(s.mul(r) if current == index_set else s, element)
    return result


def decomposition_degree_check(decomposition: Decomposition) -> bool:
    """Every term r ⊗ v expands to a homogeneous polynomial of degree deg r + deg e_I′."""
    for _, r, element in decomposition.iter_terms():
        expected = r.degree + element.spec.degree
        expanded = dmonomial_expand(r, decomposition.domain).mul(element.expand())
        if not expanded.is_homogeneous() or expanded.degree != expected:
            return False
    return True


def _signed(domain: CoefficientDomain, c: Any) -> tuple[bool, Any]:
    if domain.is_negative(c):
        return True, domain.neg(c)
    return False, c


def _render_term(r: DMonomial, element: ModuleElement) -> tuple[bool, str]:
    domain = element.spec.domain
    basis = module_basis(element.spec)
    negative = False
    if len(element.coords) == 1 and element.spec.is_default():
        rep, c = element.coords[0]
        negative, c = _signed(domain, c)
        module_text = str(basis[rep][1])
    else:
        c = domain.one
        module_text = "(" + _unicode_minus(str(element.expand())) + ")"

    if c == domain.one:
        d_text = str(r)
    elif r.is_one():
        d_text = domain.to_string(c)
    else:
        d_text = f"{domain.to_string(c)}*{r}"
    return negative, f"{d_text} {TENSOR} {module_text}"


def _unicode_minus(text: str) -> str:
    text = text.replace(" - ", f" {MINUS} ")
    return MINUS + text[1:] if text.startswith("-") else text


def render_decomposition(decomposition: Decomposition) -> str:
    """Human-readable form, e.g. ``d1 ⊗ x1 − d2 ⊗ 1``."""
    pieces: list[str] = []
    for _, r, element in decomposition.iter_terms():
        negative, text = _render_term(r, element)
        if not pieces:
            pieces.append(f"{MINUS}{text}" if negative else text)
        else:
            pieces.append(f" {MINUS} {text}" if negative else f" + {text}")
    return "".join(pieces) or "0"
