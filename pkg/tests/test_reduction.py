"""Tests for reduced forms."""

import random

import pytest

from symdecomp.errors import PreconditionError
from symdecomp.oracle import random_polynomial
from symdecomp.ordering import approx, glm
from symdecomp.permutations import Permutation, apply
from symdecomp.poly import Monomial
from symdecomp.reduction import (
    classify_reduced,
    is_reduced,
    reduce,
    reduce_set,
    same_reduced_form,
)
from symdecomp.structure import IndexSet, e_prime


def random_monomial(rng, n, max_exponent=5):
    return Monomial(rng.randint(0, max_exponent) for _ in range(n))


def random_permutation(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


class TestReduce:
    """Tests for reduce."""

    def test_worked_example(self):
        """Red(x2²x3³) = x2x3²."""
        assert reduce(Monomial((0, 2, 3))) == Monomial((0, 1, 2))

    def test_definition_over_prose_example(self):
        """Red(x1⁴x2⁴x3) = x1x2.

        A frequently quoted worked example gives x1²x2²x3 here; rank compression of
        (4, 4, 1) only has the two values 1 and 4, so the reduced form is (1, 1, 0).
        """
        assert reduce(Monomial((4, 4, 1))) == Monomial((1, 1, 0))

    def test_constant(self):
        """Red(1) = 1."""
        assert reduce(Monomial.one(3)) == Monomial.one(3)

    def test_idempotent_and_has_zero(self):
        """Red(Red(m)) = Red(m), and Red(m) always has a zero exponent."""
        rng = random.Random(20)
        for _ in range(500):
            m = random_monomial(rng, rng.randint(1, 6))
            reduced = reduce(m)
            assert reduce(reduced) == reduced
            assert 0 in reduced.exps
            assert is_reduced(reduced)

    def test_order_pattern_criterion(self):
        """Red(m) = Red(r) iff the strict order patterns of the exponents agree."""
        rng = random.Random(21)
        agreeing = 0
        for _ in range(2000):
            n = rng.randint(1, 4)
            m = random_monomial(rng, n, 2)
            r = random_monomial(rng, n, 2)
            same = reduce(m) == reduce(r)
            assert same == same_reduced_form(m, r)
            agreeing += same
        # both directions were exercised
        assert 0 < agreeing < 2000

    def test_equivariant(self):
        """Red(g·m) = g·Red(m)."""
        rng = random.Random(22)
        for _ in range(500):
            n = rng.randint(1, 6)
            m = random_monomial(rng, n)
            g = random_permutation(rng, n)
            assert reduce(apply(g, m)) == apply(g, reduce(m))


class TestReduceSet:
    """Tests for reduce_set."""

    def test_examples(self):
        """Element-wise reduction."""
        assert reduce_set({Monomial((2, 0)), Monomial((0, 2))}) == {
            Monomial((1, 0)),
            Monomial((0, 1)),
        }
        assert reduce_set({Monomial((1, 1))}) == {Monomial((0, 0))}

    def test_rejects_non_approx_input(self):
        """Members must lie in one orbit class."""
        with pytest.raises(PreconditionError):
            reduce_set([Monomial((2, 0)), Monomial((1, 1))])

    def test_reduce_set_of_glm_is_one_class(self):
        """Red(Glm(u)) is pairwise ≈."""
        rng = random.Random(23)
        for _ in range(500):
            u = random_polynomial(rng, rng.randint(1, 5), 7, max_terms=10)
            reduced = list(reduce_set(glm(u)))
            assert all(approx(reduced[0], m) for m in reduced)


class TestClassifyReduced:
    """Tests for classify_reduced."""

    def test_worked_example(self):
        """x2x3² = (1 3)·e′ for I = {1,2,3}."""
        result = classify_reduced(Monomial((0, 1, 2)))
        assert result.g == Permutation.from_cycles([(1, 3)], 3)
        assert result.index_set == IndexSet(3, (1, 2, 3))

    def test_constant(self):
        """1 = id·e′ for I = {n}."""
        result = classify_reduced(Monomial.one(3))
        assert result.g.is_identity()
        assert result.index_set == IndexSet(3, (3,))

    def test_single_variable(self):
        """x1 = id·e′ for I = {1,2}."""
        result = classify_reduced(Monomial((1, 0)))
        assert result.g.is_identity()
        assert result.index_set == IndexSet(2, (1, 2))

    def test_rejects_unreduced(self):
        """Only reduced monomials can be classified."""
        with pytest.raises(PreconditionError):
            classify_reduced(Monomial((2, 0)))

    def test_soundness(self):
        """g·e′_I reproduces every reduced monomial exactly."""
        rng = random.Random(24)
        for _ in range(500):
            m = reduce(random_monomial(rng, rng.randint(1, 7)))
            result = classify_reduced(m)
            assert apply(result.g, e_prime(result.index_set)) == m
