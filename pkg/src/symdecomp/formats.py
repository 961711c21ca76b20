"""JSON forms of polynomials, permutations and decompositions.

Coefficients are written as exact decimal strings (``"3"``, ``"-1/2"``). Every
``*_to_dict`` has a ``*_from_dict`` that validates the structure and raises
FormatError (or a more specific SymDecompError) on malformed documents.
"""

from __future__ import annotations

import json
from typing import Any

from symdecomp.decompose import Decomposition
from symdecomp.domains import ZZ, CoefficientDomain, get_domain
from symdecomp.errors import ArgumentError, FormatError
from symdecomp.permutations import Permutation
from symdecomp.poly import Monomial, Polynomial
from symdecomp.structure import (
    DMonomial,
    GeneratorSpec,
    IndexSet,
    ModuleElement,
    default_generator,
    validate_generator,
)


def _require(data: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(data, dict):
        raise FormatError(f"{where}: expected an object, got {type(data).__name__}")
    if key not in data:
        raise FormatError(f"{where}: missing key {key!r}")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"{where}: {key!r} must be {kind.__name__}, got {type(value).__name__}")
    return value


def _int_list(values: Any, where: str) -> list[int]:
    if not isinstance(values, list) or any(
        not isinstance(v, int) or isinstance(v, bool) for v in values
    ):
        raise FormatError(f"{where}: expected a list of integers")
    return values


def _domain_of(data: dict[str, Any]) -> CoefficientDomain:
    name = data.get("domain", ZZ.name)
    try:
        return get_domain(name)
    except ArgumentError as e:
        raise FormatError(str(e)) from None


def polynomial_to_dict(u: Polynomial) -> dict[str, Any]:
    """``{"n", "terms": [{"coeff", "exps"}]}`` with terms in lex-descending order."""
    result: dict[str, Any] = {
        "n": u.n,
        "terms": [{"coeff": u.domain.to_string(c), "exps": list(m.exps)} for m, c in u.items()],
    }
    if u.domain is not ZZ:
        result["domain"] = u.domain.name
    return result


def polynomial_from_dict(data: Any) -> Polynomial:
    n = _require(data, "n", int, "polynomial")
    if n < 1:
        raise FormatError(f"polynomial: n must be positive, got {n}")
    domain = _domain_of(data)
    terms = []
    for k, term in enumerate(_require(data, "terms", list, "polynomial")):
        where = f"polynomial term {k}"
        coeff = domain.from_string(_require(term, "coeff", str, where))
        exps = _int_list(_require(term, "exps", list, where), where)
        if len(exps) != n or any(e < 0 for e in exps):
            raise FormatError(f"{where}: exps must be {n} natural numbers, got {exps}")
        terms.append((Monomial(exps), coeff))
    return Polynomial(n, terms, domain)


def permutation_to_dict(g: Permutation) -> dict[str, Any]:
    return {"images": list(g.images)}


def permutation_from_dict(data: Any) -> Permutation:
    images = _int_list(_require(data, "images", list, "permutation"), "permutation")
    try:
        return Permutation(images)
    except ArgumentError as e:
        raise FormatError(f"permutation: {e}") from None


def decomposition_to_dict(decomposition: Decomposition) -> dict[str, Any]:
    """Components by ascending I, terms by descending d-exponents, coords by ascending rep."""
    domain = decomposition.domain
    components: list[dict[str, Any]] = []
    used: dict[IndexSet, GeneratorSpec] = {}
    for index_set, r, element in decomposition.iter_terms():
        if not components or components[-1]["I"] != list(index_set.members):
            components.append({"I": list(index_set.members), "terms": []})
        components[-1]["terms"].append(
            {
                "d_exps": {str(i): t for i, t in r.powers},
                "coords": [
                    {"rep": rep, "coeff": domain.to_string(c)} for rep, c in element.coords
                ],
            }
        )
        if not element.spec.is_default():
            used[index_set] = element.spec

    result: dict[str, Any] = {"n": decomposition.n, "components": components}
    if domain is not ZZ:
        result["domain"] = domain.name
    if used:
        result["generators"] = [
            {"I": list(index_set.members), "generator": polynomial_to_dict(spec.generator)}
            for index_set, spec in sorted(used.items())
        ]
    return result


def decomposition_from_dict(data: Any) -> Decomposition:
    n = _require(data, "n", int, "decomposition")
    if n < 1:
        raise FormatError(f"decomposition: n must be positive, got {n}")
    domain = _domain_of(data)

    generators: dict[IndexSet, GeneratorSpec] = {}
    entries = []
    if "generators" in data:
        entries = _require(data, "generators", list, "decomposition")
    for k, entry in enumerate(entries):
        where = f"generator {k}"
        index_set = IndexSet.of(n, _int_list(_require(entry, "I", list, where), where))
        candidate = polynomial_from_dict(_require(entry, "generator", dict, where))
        if candidate.domain is not domain:
            candidate = candidate.change_domain(domain)
        generators[index_set] = validate_generator(candidate, index_set)

    result = Decomposition(n, domain, generators=generators)
    for k, component in enumerate(_require(data, "components", list, "decomposition")):
        where = f"component {k}"
        index_set = IndexSet.of(n, _int_list(_require(component, "I", list, where), where))
        spec = generators.get(index_set) or default_generator(index_set, domain)
        for j, term in enumerate(_require(component, "terms", list, where)):
            term_where = f"{where} term {j}"
            d_exps = _require(term, "d_exps", dict, term_where)
            try:
                powers = {int(i): t for i, t in d_exps.items()}
            except ValueError:
                raise FormatError(f"{term_where}: d_exps keys must be integers") from None
            _int_list(list(powers.values()), term_where)
            coords = {}
            for coord in _require(term, "coords", list, term_where):
                rep = _require(coord, "rep", int, term_where)
                if rep in coords:
                    raise FormatError(f"{term_where}: repeated rep {rep}")
                coords[rep] = domain.from_string(_require(coord, "coeff", str, term_where))
            element = ModuleElement.of(spec, coords)
            if not element.is_zero():
                result.accumulate(DMonomial.of(index_set, powers), element)
    return result


def to_json(data: dict[str, Any], indent: int | None = 2) -> str:
    return json.dumps(data, indent=indent, ensure_ascii=False)


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"Invalid JSON: {e}") from None
