"""Tests for index sets, generators and the modules V_I."""

import math
import random

import pytest

from symdecomp.domains import QQ
from symdecomp.errors import (
    ArgumentError,
    DomainError,
    HomogeneityError,
    IndexSetError,
    LeadingSetError,
    PreconditionError,
    StabilizerError,
    UnitError,
)
from symdecomp.ordering import approx, glm
from symdecomp.parser import parse_polynomial
from symdecomp.permutations import Permutation, apply_poly, stabilizer_order, transversal
from symdecomp.poly import Monomial, Polynomial, elementary_symmetric
from symdecomp.reduction import reduce, reduce_set
from symdecomp.structure import (
    DMonomial,
    DPolynomial,
    IndexSet,
    ModuleElement,
    count_d_monomials,
    d_monomials_of_degree,
    default_generator,
    dmonomial_expand,
    e_double_prime,
    e_prime,
    index_sets,
    module_basis,
    module_dimension,
    validate_generator,
)


def I(n, *members):  # noqa: E743, N802
    return IndexSet(n, tuple(members))


def random_element(rng, spec):
    size = len(transversal(spec.leading))
    coords = {k: rng.randint(-5, 5) for k in range(size) if rng.random() < 0.6}
    return ModuleElement.of(spec, coords)


def random_d_monomial(rng, index_set, max_power=2):
    return DMonomial.of(index_set, {i: rng.randint(0, max_power) for i in index_set})


class TestIndexSet:
    """Tests for IndexSet and index_sets."""

    def test_requires_n(self):
        """n must be a member."""
        with pytest.raises(IndexSetError):
            IndexSet(3, (1, 2))

    def test_rejects_out_of_range(self):
        """Members lie in [1, n]."""
        with pytest.raises(IndexSetError):
            IndexSet(3, (0, 3))

    def test_rejects_unsorted(self):
        """Members are stored ascending without repeats."""
        with pytest.raises(IndexSetError):
            IndexSet(3, (3, 1))
        assert IndexSet.of(3, [3, 1, 1]) == I(3, 1, 3)

    def test_blocks(self):
        """Block sizes are consecutive differences."""
        assert I(5, 2, 3, 5).blocks() == [2, 1, 2]

    def test_index_sets(self):
        """All 2^(n-1) index sets, ordered by member tuple."""
        assert [s.members for s in index_sets(3)] == [(1, 2, 3), (1, 3), (2, 3), (3,)]
        for n in range(1, 8):
            assert len(index_sets(n)) == 2 ** (n - 1)


class TestEPrime:
    """Tests for e_prime and e_double_prime."""

    def test_examples(self):
        """Products of leading monomials x1...x_i over I without n."""
        assert e_prime(I(2, 2)) == Monomial((0, 0))
        assert e_prime(I(3, 1, 2, 3)) == Monomial((2, 1, 0))
        assert e_prime(I(3, 2, 3)) == Monomial((1, 1, 0))

    def test_is_reduced(self):
        """e′_I is always in reduced form."""
        for n in range(1, 7):
            for index_set in index_sets(n):
                assert reduce(e_prime(index_set)) == e_prime(index_set)

    def test_shift_by_dn(self):
        """For n ∉ J, e′ of J ∪ {n} is lmlex(Π_{i∈J} d_i)."""
        for n in range(1, 6):
            for index_set in index_sets(n):
                rest = [i for i in index_set if i != n]
                product = Polynomial.constant(n, 1)
                for i in rest:
                    product = product * elementary_symmetric(n, i)
                assert e_prime(index_set) == product.lmlex()
                assert e_double_prime(n, rest) == e_prime(index_set)

    def test_double_prime(self):
        """e″_J = lmlex(d̃_J), 1 for the empty set."""
        assert e_double_prime(3, []) == Monomial.one(3)
        assert e_double_prime(3, [1, 3]) == Monomial((2, 1, 1))
        with pytest.raises(ArgumentError):
            e_double_prime(3, [4])


class TestDMonomial:
    """Tests for DMonomial and its expansion."""

    def test_rejects_foreign_index(self):
        """Powers live on I."""
        with pytest.raises(IndexSetError):
            DMonomial.of(I(3, 2, 3), {1: 1})

    def test_zero_powers_dropped(self):
        """Zero powers normalize away."""
        r = DMonomial.of(I(3, 1, 3), {1: 0, 3: 2})
        assert r.powers == ((3, 2),)
        assert r.degree == 6
        assert str(r) == "d3^2"
        assert str(DMonomial.one(I(3, 3))) == "1"

    def test_expand_examples(self):
        """d2 and d1·d2 for n=2, and the empty product."""
        full = I(2, 1, 2)
        assert dmonomial_expand(DMonomial.of(full, {2: 1})) == parse_polynomial("x1*x2", 2)
        assert dmonomial_expand(DMonomial.of(full, {1: 1, 2: 1})) == parse_polynomial(
            "x1^2*x2 + x1*x2^2", 2
        )
        assert dmonomial_expand(DMonomial.one(full)) == Polynomial.constant(2, 1)

    def test_lmlex_of_expansion(self):
        """lmlex of the expansion is the product of leading monomials."""
        rng = random.Random(30)
        for _ in range(100):
            n = rng.randint(1, 4)
            r = random_d_monomial(rng, I(n, *range(1, n + 1)))
            assert dmonomial_expand(r).lmlex() == r.lmlex()
            assert dmonomial_expand(r).degree == r.degree

    def test_rational_expansion(self):
        """Expansion over QQ stays in QQ."""
        r = DMonomial.of(I(2, 1, 2), {1: 2})
        assert dmonomial_expand(r, QQ).domain is QQ

    def test_expand_high_powers(self):
        """Powers far beyond the interpreter's call depth expand iteratively."""
        assert dmonomial_expand(DMonomial.of(I(1, 1), {1: 3000})) == Polynomial.monomial(
            Monomial((3000,))
        )
        assert dmonomial_expand(DMonomial.of(I(3, 3), {3: 2500})) == Polynomial.monomial(
            Monomial((2500, 2500, 2500))
        )
        u = dmonomial_expand(DMonomial.of(I(2, 1, 2), {1: 1000, 2: 600}))
        assert u.degree == 2200
        assert len(u) == 1001
        assert u.lmlex() == Monomial((1600, 600))
        assert u.coefficient(Monomial((1100, 1100))) == math.comb(1000, 500)

    def test_d_polynomial_expand(self):
        """A k[d_I] element expands term by term."""
        index_set = I(2, 1, 2)
        d = DPolynomial(
            index_set, {DMonomial.of(index_set, {1: 1}): 2, DMonomial.of(index_set, {2: 1}): -1}
        )
        assert d.expand() == parse_polynomial("2*x1 + 2*x2 - x1*x2", 2)

    def test_enumeration_matches_count(self):
        """Enumerated d_I-monomials agree with the coin-change count."""
        for n in range(1, 6):
            for index_set in index_sets(n):
                for degree in range(0, 13):
                    found = d_monomials_of_degree(index_set, degree)
                    assert len(found) == count_d_monomials(index_set, degree)
                    assert all(r.degree == degree for r in found)
                    assert len(set(found)) == len(found)


class TestModules:
    """Tests for module bases and dimensions."""

    def test_default_generators(self):
        """e_I = e′_I with coefficient 1."""
        assert default_generator(I(2, 2)).generator == Polynomial.constant(2, 1)
        assert default_generator(I(2, 1, 2)).generator == parse_polynomial("x1", 2)
        assert default_generator(I(3, 1, 3)).generator == parse_polynomial("x1", 3)
        assert default_generator(I(3, 1, 3)).is_default()

    def test_basis_examples(self):
        """Bases are the orbit of e′_I in lex-descending order."""
        basis = module_basis(default_generator(I(2, 1, 2)))
        assert [str(p) for _, p in basis] == ["x1", "x2"]
        basis = module_basis(default_generator(I(3, 2, 3)))
        assert [str(p) for _, p in basis] == ["x1*x2", "x1*x3", "x2*x3"]
        assert [str(p) for _, p in module_basis(default_generator(I(3, 3)))] == ["1"]

    @pytest.mark.parametrize(
        "n, members, expected",
        [(3, (1, 3), 3), (2, (2,), 1), (3, (1, 2, 3), 6), (5, (2, 3, 5), 30)],
    )
    def test_dimension_formula(self, n, members, expected):
        """n!/(i1!(i2-i1)!...)."""
        assert module_dimension(IndexSet(n, members)) == expected

    def test_dimension_matches_basis(self):
        """The formula agrees with the basis length for all I, n <= 7."""
        for n in range(1, 8):
            for index_set in index_sets(n):
                spec = default_generator(index_set)
                assert module_dimension(index_set) == len(module_basis(spec))
                assert module_dimension(index_set) * stabilizer_order(spec.leading) == (
                    math.factorial(n)
                )

    def test_counting_identity(self):
        """Σ_I dim V_I · #{r : deg r + deg e′_I = d} = C(d+n-1, n-1)."""
        for n in range(1, 6):
            for degree in range(0, 13):
                total = sum(
                    module_dimension(s) * count_d_monomials(s, degree - e_prime(s).degree)
                    for s in index_sets(n)
                )
                assert total == math.comb(degree + n - 1, n - 1)


class TestValidateGenerator:
    """Tests for validate_generator."""

    def test_accepts_monomial(self):
        """x1 generates V_{1,2}."""
        spec = validate_generator(parse_polynomial("x1", 2), I(2, 1, 2))
        assert spec.leading == Monomial((1, 0))

    def test_rejects_non_singleton_glm(self):
        """x1 + x2 has two ≽-maximal monomials."""
        with pytest.raises(LeadingSetError):
            validate_generator(parse_polynomial("x1 + x2", 2), I(2, 1, 2))

    def test_rejects_wrong_leading_monomial(self):
        """The leading monomial must be e′_I itself."""
        with pytest.raises(LeadingSetError):
            validate_generator(parse_polynomial("x2", 2), I(2, 1, 2))

    def test_rejects_non_unit(self):
        """2·x1 over the integers has a non-unit leading coefficient."""
        with pytest.raises(UnitError):
            validate_generator(parse_polynomial("2*x1", 2), I(2, 1, 2))

    def test_rational_non_integer_unit(self):
        """Over QQ any nonzero leading coefficient is a unit."""
        spec = validate_generator(parse_polynomial("2*x1", 2, QQ), I(2, 1, 2))
        assert spec.leading_coefficient == 2

    def test_rejects_smaller_stabilizer(self):
        """x1²x2 + x1x2x3 in n=4 is not fixed by (3 4), which fixes e′."""
        with pytest.raises(StabilizerError):
            validate_generator(parse_polynomial("x1^2*x2 + x1*x2*x3", 4), I(4, 1, 2, 4))

    def test_rejects_inhomogeneous(self):
        """Lower-degree tails are refused."""
        with pytest.raises(HomogeneityError):
            validate_generator(parse_polynomial("x1^2*x2 + x3", 3), I(3, 1, 2, 3))

    def test_rejects_zero(self):
        """The zero polynomial generates nothing."""
        with pytest.raises(PreconditionError):
            validate_generator(Polynomial.zero(2), I(2, 1, 2))

    def test_accepts_perturbed_generators(self):
        """e′ plus a ≺-smaller symmetric tail is accepted."""
        validate_generator(parse_polynomial("x1^2*x2 + x1*x2*x3", 3), I(3, 1, 2, 3))
        validate_generator(parse_polynomial("-x1^2*x2 + 3*x1*x2*x3", 3), I(3, 1, 2, 3))
        validate_generator(
            parse_polynomial("x1^2*x2 + x1*x2*x3 + x1*x2*x4", 4), I(4, 1, 2, 4)
        )

    def test_localized_generator_rejected(self):
        """d1·e′ of the smaller set, x1 + x2, is not a valid generator of V_{1,2}."""
        with pytest.raises(LeadingSetError):
            validate_generator(parse_polynomial("x1 + x2", 2), I(2, 1, 2))


class TestModuleElement:
    """Tests for ModuleElement."""

    def test_nonzero_expansion(self):
        """Nonzero elements expand to nonzero polynomials with Glm ≈ e′_I."""
        rng = random.Random(31)
        for _ in range(500):
            n = rng.randint(1, 4)
            index_set = rng.choice(index_sets(n))
            spec = default_generator(index_set)
            element = random_element(rng, spec)
            if element.is_zero():
                continue
            u = element.expand()
            assert not u.is_zero()
            assert all(approx(m, spec.leading) for m in glm(u))

    def test_glm_of_d_multiple(self):
        """Glm(r·u) ≈ lmlex(r)·e′_I for nonzero u ∈ V_I."""
        rng = random.Random(32)
        for _ in range(500):
            n = rng.randint(1, 4)
            index_set = rng.choice(index_sets(n))
            spec = default_generator(index_set)
            element = random_element(rng, spec)
            if element.is_zero():
                continue
            r = random_d_monomial(rng, index_set)
            product = dmonomial_expand(r).mul(element.expand())
            target = r.lmlex() * spec.leading
            assert all(approx(m, target) for m in glm(product))

    def test_reduction_of_leading_product(self):
        """Red(lmlex(r)·e′_I) = e′_I, including single d_t factors."""
        rng = random.Random(33)
        for _ in range(500):
            n = rng.randint(1, 6)
            index_set = rng.choice(index_sets(n))
            r = random_d_monomial(rng, index_set, max_power=3)
            assert reduce(r.lmlex() * e_prime(index_set)) == e_prime(index_set)
            for t in index_set:
                single = DMonomial.of(index_set, {t: 1})
                assert reduce(single.lmlex() * e_prime(index_set)) == e_prime(index_set)

    def test_reduction_fingerprint(self):
        """Red(Glm(d·u)) ≈ e′_I for random d ∈ k[d_I], u ∈ V_I."""
        rng = random.Random(34)
        for _ in range(500):
            n = rng.randint(1, 4)
            index_set = rng.choice(index_sets(n))
            spec = default_generator(index_set)
            element = random_element(rng, spec)
            d = DPolynomial(
                index_set,
                [(random_d_monomial(rng, index_set), rng.choice([-2, -1, 1, 3])) for _ in range(3)],
            )
            if element.is_zero() or not d.terms:
                continue
            product = d.expand().mul(element.expand())
            assert all(approx(m, spec.leading) for m in reduce_set(glm(product)))

    def test_from_polynomial_round_trip(self):
        """Coordinates are read back exactly."""
        rng = random.Random(35)
        for _ in range(100):
            n = rng.randint(1, 4)
            spec = default_generator(rng.choice(index_sets(n)))
            element = random_element(rng, spec)
            assert ModuleElement.from_polynomial(spec, element.expand()) == element

    def test_from_polynomial_outside_module(self):
        """Polynomials outside V_I are refused."""
        spec = default_generator(I(2, 1, 2))
        with pytest.raises(PreconditionError):
            ModuleElement.from_polynomial(spec, parse_polynomial("x1^2", 2))
        with pytest.raises(DomainError):
            ModuleElement.from_polynomial(spec, parse_polynomial("x1", 2, QQ))

    def test_from_polynomial_with_perturbed_generator(self):
        """Read-back works through a non-monomial generator with coefficient -1."""
        spec = validate_generator(parse_polynomial("-x1^2*x2 + x1*x2*x3", 3), I(3, 1, 2, 3))
        element = ModuleElement.of(spec, {0: 2, 3: -1})
        assert ModuleElement.from_polynomial(spec, element.expand()) == element

    def test_act_matches_polynomial_action(self):
        """(g·v).expand() = g·(v.expand())."""
        rng = random.Random(36)
        for _ in range(500):
            n = rng.randint(1, 5)
            spec = default_generator(rng.choice(index_sets(n)))
            element = random_element(rng, spec)
            images = list(range(1, n + 1))
            rng.shuffle(images)
            g = Permutation(images)
            assert element.act(g).expand() == apply_poly(g, element.expand())

    def test_act_with_perturbed_generator(self):
        """The coset action also holds for a generator with a symmetric tail."""
        spec = validate_generator(parse_polynomial("x1^2*x2 + x1*x2*x3", 3), I(3, 1, 2, 3))
        element = ModuleElement.of(spec, {0: 1, 2: 4, 5: -3})
        g = Permutation([2, 3, 1])
        assert element.act(g).expand() == apply_poly(g, element.expand())

    def test_rep_out_of_range(self):
        """Coordinates index the transversal."""
        with pytest.raises(ArgumentError):
            ModuleElement.of(default_generator(I(2, 1, 2)), {2: 1})

    def test_add_and_scale(self):
        """Coordinates add and scale; zeros disappear."""
        spec = default_generator(I(2, 1, 2))
        a = ModuleElement.of(spec, {0: 1, 1: 2})
        b = ModuleElement.of(spec, {0: -1})
        assert a.add(b).coords == ((1, 2),)
        assert a.scale(3).coords == ((0, 3), (1, 6))
        assert a.scale(0).is_zero()
