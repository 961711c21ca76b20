"""Exact decomposition of k[x1..xn] under the symmetric group.

Every polynomial is written uniquely as Σ r·v with r a polynomial in the elementary
symmetric polynomials d_i (i ∈ I) and v in the permutation module V_I, for the index
sets {n} ⊆ I ⊆ [n].
"""

from importlib.metadata import version

__version__ = version("symdecomp")

from symdecomp.decompose import (
    Decomposition,
    LeadingWitness,
    decompose,
    decomposition_degree_check,
    equivariance_apply,
    leading_witness,
    multiply_component,
    recompose,
    render_decomposition,
)
from symdecomp.domains import QQ, ZZ, CoefficientDomain, get_domain
from symdecomp.errors import (
    ArgumentError,
    CapacityError,
    CycleError,
    DimensionError,
    DomainError,
    FormatError,
    GeneratorError,
    HomogeneityError,
    IndexSetError,
    InvariantViolation,
    LeadingMonomialError,
    LeadingSetError,
    ParseDiagnostic,
    ParseError,
    PermutationSyntaxError,
    PolynomialSyntaxError,
    PreconditionError,
    StabilizerError,
    SymDecompError,
    UnitError,
    VariableIndexError,
)
from symdecomp.oracle import (
    GradedReport,
    SeriesReport,
    VerificationReport,
    VerifyOptions,
    dimension_audit,
    dn_shift_audit,
    exact_rank,
    graded_basis_check,
    hilbert_check,
    random_polynomial,
    roundtrip_suite,
    run_verification,
)
from symdecomp.ordering import (
    OrbitClass,
    Succession,
    approx,
    canonical,
    glm,
    glm_measure,
    succ_compare,
    support,
)
from symdecomp.parser import (
    parse_index_set,
    parse_permutation,
    parse_polynomial,
    render_monomial,
    render_permutation,
    render_polynomial,
)
from symdecomp.permutations import (
    Permutation,
    Transversal,
    apply,
    apply_poly,
    orbit,
    sorting_permutation,
    stabilizer_generators,
    stabilizer_order,
    transversal,
)
from symdecomp.poly import (
    Monomial,
    Ordering,
    Polynomial,
    elementary_symmetric,
    homogeneous_components,
    lex_compare,
)
from symdecomp.reduction import (
    ReducedClassification,
    classify_reduced,
    reduce,
    reduce_set,
    same_reduced_form,
)
from symdecomp.structure import (
    DMonomial,
    DPolynomial,
    GeneratorSpec,
    IndexSet,
    ModuleElement,
    count_d_monomials,
    default_generator,
    dmonomial_expand,
    e_double_prime,
    e_prime,
    index_sets,
    module_basis,
    module_dimension,
    validate_generator,
)

__all__ = [
    # Polynomials
    "Monomial",
    "Ordering",
    "Polynomial",
    "CoefficientDomain",
    "ZZ",
    "QQ",
    "get_domain",
    "elementary_symmetric",
    "homogeneous_components",
    "lex_compare",
    # Symmetric group
    "Permutation",
    "Transversal",
    "apply",
    "apply_poly",
    "orbit",
    "sorting_permutation",
    "stabilizer_generators",
    "stabilizer_order",
    "transversal",
    # Ordering
    "OrbitClass",
    "Succession",
    "approx",
    "canonical",
    "glm",
    "glm_measure",
    "succ_compare",
    "support",
    # Reduction
    "ReducedClassification",
    "classify_reduced",
    "reduce",
    "reduce_set",
    "same_reduced_form",
    # Modules
    "DMonomial",
    "DPolynomial",
    "GeneratorSpec",
    "IndexSet",
    "ModuleElement",
    "count_d_monomials",
    "default_generator",
    "dmonomial_expand",
    "e_double_prime",
    "e_prime",
    "index_sets",
    "module_basis",
    "module_dimension",
    "validate_generator",
    # Decomposition
    "Decomposition",
    "LeadingWitness",
    "decompose",
    "decomposition_degree_check",
    "equivariance_apply",
    "leading_witness",
    "multiply_component",
    "recompose",
    "render_decomposition",
    # Verification
    "GradedReport",
    "SeriesReport",
    "VerificationReport",
    "VerifyOptions",
    "dimension_audit",
    "dn_shift_audit",
    "exact_rank",
    "graded_basis_check",
    "hilbert_check",
    "random_polynomial",
    "roundtrip_suite",
    "run_verification",
    # Text formats
    "ParseDiagnostic",
    "parse_index_set",
    "parse_permutation",
    "parse_polynomial",
    "render_monomial",
    "render_permutation",
    "render_polynomial",
    # Errors
    "SymDecompError",
    "ArgumentError",
    "CapacityError",
    "CycleError",
    "DimensionError",
    "DomainError",
    "FormatError",
    "GeneratorError",
    "HomogeneityError",
    "IndexSetError",
    "InvariantViolation",
    "LeadingMonomialError",
    "LeadingSetError",
    "ParseError",
    "PermutationSyntaxError",
    "PolynomialSyntaxError",
    "PreconditionError",
    "StabilizerError",
    "UnitError",
    "VariableIndexError",
]
