"""Brute-force verification of the structure theorem.

Nothing here uses the decomposition algorithm except the round-trip suite: the graded
check builds every candidate r·(g·e_I) of one degree and computes an exact rank, and the
Hilbert check compares power series. Reports follow one shape: ``passed``,
``to_dict()`` for the JSON output and ``__str__`` for the text output.
"""

from __future__ import annotations

import logging
import math
import random
from collections.abc import Hashable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any

from symdecomp.decompose import decompose, recompose
from symdecomp.domains import ZZ, CoefficientDomain
from symdecomp.errors import ArgumentError, CapacityError, InvariantViolation
from symdecomp.permutations import MAX_FULL_GROUP_N, stabilizer_order, transversal
from symdecomp.poly import Monomial, Polynomial
from symdecomp.structure import (
    GeneratorSpec,
    IndexSet,
    d_monomials_of_degree,
    default_generator,
    dmonomial_expand,
    e_double_prime,
    e_prime,
    index_sets,
    module_basis,
    module_dimension,
)

logger = logging.getLogger(__name__)

# Graded pieces of S above this dimension are refused.
MAX_GRADED_DIMENSION = 50_000
DEFAULT_SEED = 0
DEFAULT_MAX_TERMS = 20
DEFAULT_COEFFICIENT_RANGE = (-9, 9)


class CheckStatus(Enum):
    """Outcome of a graded-basis check."""

    PASS = "pass"
    COUNT_MISMATCH = "count_mismatch"
    RANK_DEFICIENT = "rank_deficient"


def graded_dimension(n: int, degree: int) -> int:
    """dim S_degree = C(degree+n-1, n-1)."""
    return math.comb(degree + n - 1, n - 1)


def exact_rank(rows: Sequence[Mapping[Hashable, Any]]) -> tuple[int, list[int]]:
    """Rank of sparse rows with integer or rational entries, computed exactly.

    Rational rows are scaled to integer rows first. Each row is reduced against the
    pivot sharing its greatest key using gcd-normalized cross multiplication, so no
    fractions appear and entries stay small.

    Args:
        rows: Each row maps a column key to its entry; keys must be mutually comparable

    Returns:
        Tuple of (rank, indices of rows that reduced to zero)
    """
    pivots: dict[Hashable, dict[Hashable, int]] = {}
    dependent: list[int] = []
    for index, row in enumerate(rows):
        current = _primitive(_integral(row))
        while True:
            if not current:
                dependent.append(index)
                break
            key = max(current)
            pivot = pivots.get(key)
            if pivot is None:
                pivots[key] = current
                break
            a, b = current[key], pivot[key]
            g = math.gcd(a, b)
            fa, fb = b // g, a // g
            merged = {k: fa * v for k, v in current.items()}
            for k, v in pivot.items():
                merged[k] = merged.get(k, 0) - fb * v
            current = _primitive({k: v for k, v in merged.items() if v})
    logger.debug("exact_rank: %d rows, rank %d", len(rows), len(pivots))
    return len(pivots), dependent


def _integral(row: Mapping[Hashable, Any]) -> dict[Hashable, int]:
    values = {k: Fraction(v) for k, v in row.items() if v}
    scale = math.lcm(*(v.denominator for v in values.values())) if values else 1
    return {k: int(v * scale) for k, v in values.items()}


def _primitive(row: dict[Hashable, int]) -> dict[Hashable, int]:
    if not row:
        return row
    content = math.gcd(*row.values())
    if content == 1:
        return row
    return {k: v // content for k, v in row.items()}


@dataclass
class GradedReport:
    """Result of checking that the candidates of one degree form a basis of S_degree."""

    n: int
    degree: int
    expected_dim: int
    candidate_count: int
    rank: int
    status: CheckStatus
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "degree": self.degree,
            "expected_dim": self.expected_dim,
            "candidate_count": self.candidate_count,
            "rank": self.rank,
            "status": self.status.value,
            "witness": self.witness,
        }

    def __str__(self) -> str:
        line = (
            f"degree {self.degree}: {self.candidate_count} candidates, rank {self.rank}, "
            f"expected {self.expected_dim} [{self.status.value.upper()}]"
        )
        if self.witness:
            line += f" - dependent: {self.witness}"
        return line


@dataclass
class SeriesReport:
    """Coefficient-wise comparison of two truncated power series."""

    n: int
    max_degree: int
    lhs: list[int]
    rhs: list[int]
    first_mismatch: int | None = None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "first_mismatch": self.first_mismatch,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else f"FAIL at t^{self.first_mismatch}"
        return f"Hilbert series up to t^{self.max_degree}: [{status}]"


@dataclass
class DimensionEntry:
    index_set: IndexSet
    formula: int
    enumerated: int
    stabilizer: int

    @property
    def passed(self) -> bool:
        return self.formula == self.enumerated

    def to_dict(self) -> dict[str, Any]:
        return {
            "I": list(self.index_set.members),
            "formula": self.formula,
            "enumerated": self.enumerated,
            "stabilizer_order": self.stabilizer,
        }


@dataclass
class DimensionAudit:
    """dim V_I from the closed formula against the enumerated transversal."""

    n: int
    entries: list[DimensionEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "entries": [entry.to_dict() for entry in self.entries]}

    def __str__(self) -> str:
        bad = [str(e.index_set) for e in self.entries if not e.passed]
        status = "PASS" if not bad else "FAIL for " + ", ".join(bad)
        return f"Dimension audit over {len(self.entries)} index sets: [{status}]"


@dataclass
class DnShiftReport:
    """Multiplication by d_n between the e″ modules."""

    n: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "checked": self.checked, "failures": self.failures}

    def __str__(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)})"
        return f"d_n shift audit over {self.checked} subsets: [{status}]"


@dataclass
class RoundTripReport:
    """recompose(decompose(u)) = u over seeded random inputs."""

    n: int
    max_degree: int
    trials: int
    seed: int
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "trials": self.trials,
            "seed": self.seed,
            "failures": self.failures,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} of {self.trials})"
        return f"Round trip, {self.trials} trials, seed {self.seed}: [{status}]"


def _graded_candidates(
    n: int, degree: int, generators: Mapping[IndexSet, GeneratorSpec] | None = None
) -> list[tuple[str, Polynomial]]:
    candidates = []
    for index_set in index_sets(n):
        spec = (generators or {}).get(index_set) or default_generator(index_set)
        rest = degree - spec.degree
        if rest < 0:
            continue
        for r in d_monomials_of_degree(index_set, rest):
            expanded = dmonomial_expand(r, spec.domain)
            for g, image in module_basis(spec):
                candidates.append((f"{r} ⊗ {g}·e{index_set}", expanded.mul(image)))
    return candidates


def graded_basis_check(
    n: int, degree: int, generators: Mapping[IndexSet, GeneratorSpec] | None = None
) -> GradedReport:
    """Check that every r·(g·e_I) of total degree ``degree`` together form a basis of S_degree.

    A count mismatch points at the dimension bookkeeping, a rank deficit at injectivity.

    Raises:
        CapacityError: If dim S_degree exceeds MAX_GRADED_DIMENSION
    """
    if n < 1 or degree < 0:
        raise ArgumentError(f"graded_basis_check needs n >= 1 and degree >= 0, got {n}, {degree}")
    expected = graded_dimension(n, degree)
    if expected > MAX_GRADED_DIMENSION:
        raise CapacityError(n, degree, expected, MAX_GRADED_DIMENSION)

    candidates = _graded_candidates(n, degree, generators)
    rows = [{m.exps: c for m, c in poly.items()} for _, poly in candidates]
    rank, dependent = exact_rank(rows)

    if len(candidates) != expected:
        status = CheckStatus.COUNT_MISMATCH
    elif rank != expected:
        status = CheckStatus.RANK_DEFICIENT
    else:
        status = CheckStatus.PASS
    witness = candidates[dependent[0]][0] if dependent else None
    logger.debug("graded check n=%d degree=%d: %s", n, degree, status.value)
    return GradedReport(n, degree, expected, len(candidates), rank, status, witness)


def _truncated_inverse(series: list[int], step: int) -> list[int]:
    """series / (1 - t^step), truncated to the same length."""
    result = list(series)
    for k in range(step, len(result)):
        result[k] += result[k - step]
    return result


def hilbert_check(n: int, max_degree: int) -> SeriesReport:
    """Σ_I dim V_I · t^{deg e_I′} / Π_{i∈I}(1 - t^i) against 1/(1 - t)^n."""
    if n < 1 or max_degree < 0:
        raise ArgumentError(
            f"hilbert_check needs n >= 1 and max_degree >= 0, got {n}, {max_degree}"
        )
    length = max_degree + 1
    lhs = [0] * length
    for index_set in index_sets(n):
        shift = e_prime(index_set).degree
        if shift >= length:
            continue
        series = [0] * length
        series[shift] = module_dimension(index_set)
        for i in index_set:
            series = _truncated_inverse(series, i)
        lhs = [a + b for a, b in zip(lhs, series)]
    rhs = [graded_dimension(n, d) for d in range(length)]
    mismatch = next((d for d in range(length) if lhs[d] != rhs[d]), None)
    return SeriesReport(n, max_degree, lhs, rhs, mismatch)


def dimension_audit(n: int) -> DimensionAudit:
    """Compare n!/(i1!(i2-i1)!...) with the enumerated transversal of e_I′ for every I."""
    if n > MAX_FULL_GROUP_N:
        raise ArgumentError(f"dimension_audit is capped at n={MAX_FULL_GROUP_N}, got {n}")
    audit = DimensionAudit(n)
    for index_set in index_sets(n):
        leading = e_prime(index_set)
        audit.entries.append(
            DimensionEntry(
                index_set,
                module_dimension(index_set),
                len(transversal(leading)),
                stabilizer_order(leading),
            )
        )
    return audit


def dn_shift_audit(n: int) -> DnShiftReport:
    """Check that multiplying by d_n = x1...xn carries ⟨e″_J⟩ onto ⟨e″_{J∪{n}}⟩."""
    report = DnShiftReport(n)
    dn = Monomial._trusted((1,) * n)
    for size in range(n):
        for subset in combinations(range(1, n), size):
            report.checked += 1
            lower = e_double_prime(n, subset)
            upper = e_double_prime(n, (*subset, n))
            if upper != lower * dn:
                report.failures.append(f"e″ for J={set(subset) or '{}'} does not shift by d_n")
                continue
            shifted = tuple(m * dn for m in transversal(lower).images)
            if shifted != transversal(upper).images:
                report.failures.append(
                    f"transversal of J={set(subset) or '{}'} is not carried over"
                )

            index_set = IndexSet(n, (*subset, n))
            leading = e_prime(index_set)
            if upper != leading * dn or stabilizer_order(upper) != stabilizer_order(leading):
                report.failures.append(f"e″ ≠ d_n·e′ for I={index_set}")
    return report


def random_polynomial(
    rng: random.Random,
    n: int,
    max_degree: int,
    max_terms: int = DEFAULT_MAX_TERMS,
    coefficient_range: tuple[int, int] = DEFAULT_COEFFICIENT_RANGE,
    domain: CoefficientDomain = ZZ,
) -> Polynomial:
    """A random polynomial of degree <= max_degree with at most ``max_terms`` terms."""
    low, high = coefficient_range
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(n)] += 1
        terms.append((Monomial._trusted(tuple(exps)), rng.randint(low, high)))
    return Polynomial(n, terms, domain)


def roundtrip_suite(
    n: int,
    max_degree: int,
    trials: int,
    seed: int = DEFAULT_SEED,
    max_terms: int = DEFAULT_MAX_TERMS,
    coefficient_range: tuple[int, int] = DEFAULT_COEFFICIENT_RANGE,
) -> RoundTripReport:
    """Decompose and recompose ``trials`` random polynomials.

    Every trial draws its own seed from ``random.Random(seed)``, so a failure is
    reproducible from the trial seed alone.
    """
    report = RoundTripReport(n, max_degree, trials, seed)
    master = random.Random(seed)
    for trial in range(trials):
        trial_seed = master.randrange(2**32)
        u = random_polynomial(
            random.Random(trial_seed), n, max_degree, max_terms, coefficient_range
        )
        try:
            back = recompose(decompose(u))
            problem = None if back == u else f"recomposed to {back}"
        except InvariantViolation as e:
            problem = str(e)
        if problem:
            report.failures.append(
                {"trial": trial, "trial_seed": trial_seed, "input": str(u), "problem": problem}
            )
    logger.debug("round trip n=%d: %d/%d failed", n, len(report.failures), trials)
    return report


@dataclass
class VerifyOptions:
    """Parameters of a full verification run."""

    n: int
    max_degree: int
    trials: int = 100
    seed: int = DEFAULT_SEED
    max_terms: int = DEFAULT_MAX_TERMS
    coefficient_range: tuple[int, int] = DEFAULT_COEFFICIENT_RANGE
    parallel_jobs: int = 1


@dataclass
class VerificationReport:
    """All oracle results of one run."""

    options: VerifyOptions
    graded: list[GradedReport]
    series: SeriesReport
    dimensions: DimensionAudit
    shift: DnShiftReport
    roundtrip: RoundTripReport

    @property
    def passed(self) -> bool:
        return (
            all(report.passed for report in self.graded)
            and self.series.passed
            and self.dimensions.passed
            and self.shift.passed
            and self.roundtrip.passed
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.options.n,
            "max_degree": self.options.max_degree,
            "seed": self.options.seed,
            "passed": self.passed,
            "graded": [report.to_dict() for report in self.graded],
            "hilbert": self.series.to_dict(),
            "dimensions": self.dimensions.to_dict(),
            "dn_shift": self.shift.to_dict(),
            "roundtrip": self.roundtrip.to_dict(),
        }

    def __str__(self) -> str:
        lines = [f"Verification for n={self.options.n}, seed {self.options.seed}:"]
        lines.append(f"  Status: {'PASS' if self.passed else 'FAIL'}")
        lines.extend(f"  {report}" for report in self.graded)
        lines.append(f"  {self.series}")
        lines.append(f"  {self.dimensions}")
        lines.append(f"  {self.shift}")
        lines.append(f"  {self.roundtrip}")
        return "\n".join(lines)


def _graded_job(args: tuple[int, int]) -> GradedReport:
    """Run one graded check (for parallel processing)."""
    n, degree = args
    return graded_basis_check(n, degree)


def run_verification(options: VerifyOptions) -> VerificationReport:
    """Run every oracle for one n.

    Graded checks for degrees 0..max_degree are independent and are spread over
    ``parallel_jobs`` worker processes when more than one is requested.
    """
    if options.n < 1 or options.max_degree < 0:
        raise ArgumentError(
            f"verification needs n >= 1 and max_degree >= 0, got {options.n}, {options.max_degree}"
        )
    jobs = [(options.n, degree) for degree in range(options.max_degree + 1)]
    if options.parallel_jobs > 1 and len(jobs) > 1:
        graded = []
        with ProcessPoolExecutor(max_workers=options.parallel_jobs) as executor:
            futures = [executor.submit(_graded_job, job) for job in jobs]
            for future in as_completed(futures):
                graded.append(future.result())
        graded.sort(key=lambda report: (report.n, report.degree))
    else:
        graded = [_graded_job(job) for job in jobs]

    return VerificationReport(
        options=options,
        graded=graded,
        series=hilbert_check(options.n, options.max_degree),
        dimensions=dimension_audit(options.n),
        shift=dn_shift_audit(options.n),
        roundtrip=roundtrip_suite(
            options.n,
            options.max_degree,
            options.trials,
            options.seed,
            options.max_terms,
            options.coefficient_range,
        ),
    )
