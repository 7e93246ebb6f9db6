import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oriented_hypergraphs.errors import InvariantError
from oriented_hypergraphs.polynomial import (
    IntPolynomial,
    MultivariatePolynomial,
    render_multivariate,
    render_univariate,
)


def test_univariate_normalizes_trailing_zeros():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).degree() == -1
    assert not IntPolynomial([])


def test_univariate_arithmetic():
    p = IntPolynomial([1, 1])  # 1 + x
    q = IntPolynomial([-1, 1])  # -1 + x
    assert (p * q).coeffs == (-1, 0, 1)
    assert (p + q).coeffs == (0, 2)
    assert (p - p).coeffs == ()
    assert (p * 3).coeffs == (3, 3)
    assert p.coefficient(7) == 0


def test_render_univariate_examples():
    assert render_univariate(IntPolynomial([0, 9, -6, 1])) == "x^3 - 6x^2 + 9x"
    assert render_univariate(IntPolynomial([-2, -3, 0, 1])) == "x^3 - 3x - 2"
    assert render_univariate(IntPolynomial([])) == "0"
    assert render_univariate(IntPolynomial([5])) == "5"
    assert render_univariate(IntPolynomial([0, -1])) == "-x"


def test_multivariate_identities():
    x = MultivariatePolynomial.variable
    p = x("a", "b") + x("a", "c")
    assert p.coefficient([("a", "b")]) == 1
    assert p.coefficient([("z", "z")]) == 0
    assert (p - p) == MultivariatePolynomial.zero()
    assert MultivariatePolynomial.constant(0) == MultivariatePolynomial.zero()
    assert p.degree() == 1


def test_multivariate_product_joins_disjoint_rows():
    x = MultivariatePolynomial.variable
    p = x("a", "b") * x("b", "a")
    assert p.coefficient([("a", "b"), ("b", "a")]) == 1
    with pytest.raises(InvariantError):
        x("a", "b") * x("a", "c")


def test_substitute_diagonal_keeps_diagonal_monomials():
    x = MultivariatePolynomial.variable
    p = x("a", "a") * x("b", "b") + x("a", "b") * x("b", "a") * 7
    assert p.substitute_diagonal().coeffs == (0, 0, 1)
    assert MultivariatePolynomial.constant(4).substitute_diagonal().coeffs == (4,)


def test_render_multivariate_order_and_signs():
    x = MultivariatePolynomial.variable
    p = x("u", "u") * x("w", "w") - x("u", "w") * x("w", "u") + x("w", "u") * -3
    text = render_multivariate(p, ["u", "w"])
    assert text == "+1*x[u,u]*x[w,w] -1*x[u,w]*x[w,u] -3*x[w,u]"
    assert render_multivariate(MultivariatePolynomial.zero(), ["u"]) == "0"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), max_size=6), st.lists(st.integers(-9, 9), max_size=6))
def test_univariate_multiplication_commutes(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert p * q == q * p
    assert (p + q).coeffs == (q + p).coeffs


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), max_size=5))
def test_univariate_addition_has_inverse(a):
    p = IntPolynomial(a)
    assert (p - p).degree() == -1
