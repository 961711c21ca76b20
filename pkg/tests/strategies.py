"""Hypothesis strategies for monomials, polynomials and permutations."""

from hypothesis import strategies as st

from symdecomp.permutations import Permutation
from symdecomp.poly import Monomial, Polynomial


def monomials(n: int, max_exponent: int = 4) -> st.SearchStrategy[Monomial]:
    return st.lists(
        st.integers(min_value=0, max_value=max_exponent), min_size=n, max_size=n
    ).map(Monomial)


def polynomials(
    n: int, max_exponent: int = 3, max_terms: int = 6
) -> st.SearchStrategy[Polynomial]:
    terms = st.lists(
        st.tuples(monomials(n, max_exponent), st.integers(min_value=-9, max_value=9)),
        max_size=max_terms,
    )
    return terms.map(lambda items: Polynomial(n, items))


def permutations(n: int) -> st.SearchStrategy[Permutation]:
    return st.permutations(list(range(1, n + 1))).map(Permutation)
