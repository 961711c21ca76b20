"""Tests for the orbit ordering and Glm."""

import random
from itertools import product

import pytest

from symdecomp.errors import ArgumentError, DimensionError
from symdecomp.oracle import random_polynomial
from symdecomp.ordering import (
    Succession,
    approx,
    canonical,
    glm,
    glm_measure,
    measure_decreases,
    orbit_max_bruteforce,
    succ_compare,
    support,
)
from symdecomp.parser import parse_polynomial
from symdecomp.permutations import Permutation, apply, apply_poly, orbit
from symdecomp.poly import Monomial, Polynomial, elementary_symmetric
from symdecomp.structure import DMonomial, IndexSet, dmonomial_expand


def random_permutation(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def nonzero_samples(seed, count, max_n=5, max_degree=8):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        n = rng.randint(1, max_n)
        u = random_polynomial(rng, n, max_degree, max_terms=8)
        if not u.is_zero():
            found.append((rng, u))
    return found


class TestCanonical:
    """Tests for canonical orbit representatives."""

    @pytest.mark.parametrize(
        "exps, expected",
        [((0, 2, 3), (3, 2, 0)), ((1, 1, 1), (1, 1, 1))],
    )
    def test_examples(self, exps, expected):
        """Exponents are sorted non-increasing."""
        assert canonical(Monomial(exps)).key == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_orbit_maximum(self, n):
        """canonical(m) is the lex maximum over all g·m, for every m of degree <= 6."""
        for exps in product(range(7), repeat=n):
            if sum(exps) > 6:
                continue
            m = Monomial(exps)
            assert canonical(m).canonical == orbit_max_bruteforce(m)

    def test_brute_force_cap(self):
        """The brute-force oracle refuses large n."""
        with pytest.raises(ArgumentError):
            orbit_max_bruteforce(Monomial.one(9))


class TestSuccession:
    """Tests for ≽ and ≈."""

    def test_examples(self):
        """Hand-checked comparisons."""
        assert succ_compare(Monomial((2, 0)), Monomial((1, 1))) is Succession.SUCCEEDS
        assert succ_compare(Monomial((1, 2)), Monomial((2, 1))) is Succession.APPROX_EQUAL
        # (3,0) beats (2,2) in the first position
        assert succ_compare(Monomial((0, 3)), Monomial((2, 2))) is Succession.SUCCEEDS
        assert succ_compare(Monomial((1, 1)), Monomial((0, 2))) is Succession.PRECEDES

    def test_dimension_mismatch(self):
        """Monomials must share n."""
        with pytest.raises(DimensionError):
            succ_compare(Monomial((1,)), Monomial((1, 0)))

    def test_total_preorder(self):
        """Exactly one of a ≻ b, b ≻ a, a ≈ b, and the relation is antisymmetric in sign."""
        rng = random.Random(1)
        for _ in range(500):
            n = rng.randint(1, 5)
            a = Monomial(rng.randint(0, 3) for _ in range(n))
            b = Monomial(rng.randint(0, 3) for _ in range(n))
            ab, ba = succ_compare(a, b), succ_compare(b, a)
            assert ab.value == -ba.value
            assert (ab is Succession.APPROX_EQUAL) == (sorted(a.exps) == sorted(b.exps))

    def test_approx_is_same_orbit(self):
        """a ≈ b exactly when b lies in the orbit of a."""
        rng = random.Random(6)
        for _ in range(500):
            n = rng.randint(1, 4)
            a = Monomial(rng.randint(0, 2) for _ in range(n))
            b = Monomial(rng.randint(0, 2) for _ in range(n))
            assert approx(a, b) == (b in orbit(a))


class TestSupportAndGlm:
    """Tests for M(u) and Glm(u)."""

    def test_support(self):
        """Support is the key set."""
        u = parse_polynomial("x1^2 + 2*x1*x2", 2)
        assert support(u) == {Monomial((2, 0)), Monomial((1, 1))}
        assert support(Polynomial.zero(2)) == frozenset()
        assert len(support(elementary_symmetric(3, 2))) == 3

    def test_glm_examples(self):
        """Glm picks the ≽-maximal monomials in lex-descending order."""
        assert glm(parse_polynomial("x1^2 + x1*x2", 2)) == (Monomial((2, 0)),)
        d1d2 = parse_polynomial("x1^2*x2 + x1*x2^2", 2)
        assert glm(d1d2) == (Monomial((2, 1)), Monomial((1, 2)))

    def test_glm_of_zero_is_empty(self):
        """Glm(0) = ∅."""
        assert glm(Polynomial.zero(3)) == ()

    def test_glm_members_pairwise_approx(self):
        """All Glm members share one orbit class."""
        for _, u in nonzero_samples(10, 500):
            leading = glm(u)
            assert all(approx(leading[0], m) for m in leading)

    def test_glm_of_d_monomial_is_full_orbit(self):
        """For a d-monomial d, Glm(d) is the orbit of lmlex(d)."""
        rng = random.Random(12)
        for _ in range(500):
            n = rng.randint(1, 4)
            index_set = IndexSet(n, tuple(range(1, n + 1)))
            r = DMonomial.of(index_set, {i: rng.randint(0, 2) for i in range(1, n + 1)})
            d = dmonomial_expand(r)
            assert set(glm(d)) == orbit(d.lmlex())

    def test_glm_is_orbit_intersect_support(self):
        """Glm(u) = G·m ∩ M(u) for any m in Glm(u)."""
        for _, u in nonzero_samples(13, 500):
            leading = glm(u)
            assert set(leading) == orbit(leading[-1]) & support(u)

    def test_glm_equivariant(self):
        """Glm(g·u) = g·Glm(u), hence also Glm(g·u) ≈ Glm(u)."""
        for rng, u in nonzero_samples(14, 500):
            g = random_permutation(rng, u.n)
            moved = glm(apply_poly(g, u))
            assert set(moved) == {apply(g, m) for m in glm(u)}
            assert approx(moved[0], glm(u)[0])

    def test_glm_of_sum(self):
        """With disjoint Glm sets, Glm(u+v) ⊆ Glm(u) ∪ Glm(v) and ≈ one of them."""
        rng = random.Random(15)
        checked = 0
        while checked < 500:
            n = rng.randint(1, 4)
            u = random_polynomial(rng, n, 6, max_terms=6)
            v = random_polynomial(rng, n, 6, max_terms=6)
            w = u + v
            if u.is_zero() or v.is_zero() or w.is_zero() or set(glm(u)) & set(glm(v)):
                continue
            combined = glm(w)
            assert set(combined) <= set(glm(u)) | set(glm(v))
            assert approx(combined[0], glm(u)[0]) or approx(combined[0], glm(v)[0])
            checked += 1

    def test_glm_of_product_is_product_class(self):
        """lmlex(uv) = lmlex(u)lmlex(v) across sampled pairs."""
        for rng, u in nonzero_samples(16, 500, max_degree=5):
            v = random_polynomial(rng, u.n, 5, max_terms=6)
            if v.is_zero():
                continue
            assert (u * v).lmlex() == u.lmlex() * v.lmlex()


class TestGlmMeasure:
    """Tests for the well-founded measure."""

    def test_lower_class_decreases(self):
        """Dropping to a lower orbit class decreases the measure."""
        before = glm_measure(parse_polynomial("x1^2 + x1*x2", 2))
        after = glm_measure(parse_polynomial("x1*x2", 2))
        assert measure_decreases(before, after)
        assert not measure_decreases(after, before)

    def test_subset_within_class_decreases(self):
        """A strictly smaller Glm set in the same class is lower."""
        before = glm_measure(parse_polynomial("x1^2 + x2^2", 2))
        after = glm_measure(parse_polynomial("x2^2 + x1*x2", 2))
        assert measure_decreases(before, after)

    def test_zero_is_least(self):
        """Every nonzero measure lies above zero and zero lies above nothing."""
        zero = glm_measure(Polynomial.zero(2))
        assert measure_decreases(glm_measure(parse_polynomial("1", 2)), zero)
        assert not measure_decreases(zero, zero)

    def test_incomparable_sets_do_not_decrease(self):
        """Same class with unrelated sets is not a decrease."""
        before = glm_measure(parse_polynomial("x1^2", 2))
        after = glm_measure(parse_polynomial("x2^2", 2))
        assert not measure_decreases(before, after)
