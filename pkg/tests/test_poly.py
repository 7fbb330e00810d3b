import random
from fractions import Fraction

import pytest

from cubicfree.errors import ParseError
from cubicfree.poly import (
    ComplexPoint,
    HomogeneousPoly,
    compose_linear,
    dim_graded,
    evaluate_complex,
    evaluate_exact,
    gradient,
    hessian_det,
    monomial_basis,
    multiply,
    parse_poly,
    partial,
    product,
    to_text,
    x,
    y,
    z,
)

from conftest import random_invertible, random_poly


def test_basis_sizes_and_order():
    assert len(monomial_basis(0)) == 1
    assert monomial_basis(1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert len(monomial_basis(21)) == 253
    for t in range(12):
        assert len(monomial_basis(t)) == dim_graded(t) == (t + 1) * (t + 2) // 2


def test_multiply_examples():
    assert multiply(x + y, x - y) == x**2 - y**2
    assert (x**3 + y**3 + z**3) * (x**3 + y**3) == x**6 + 2 * x**3 * y**3 + y**6 + x**3 * z**3 + y**3 * z**3
    assert multiply(HomogeneousPoly(2), x).is_zero()
    assert multiply(x, x).degree == 2


def test_partials():
    F = x**3 + y**3 + z**3
    assert partial(F, "x") == 3 * x**2
    assert partial(F, 1) == 3 * y**2
    # derivative of a constant is the zero form of degree -1 is not allowed; degree 0 stays at 0
    assert partial(x * y * z, "z") == x * y


def test_hessian_examples():
    F = x**3 + y**3 + z**3
    assert hessian_det(F) == 216 * x * y * z
    # a union of three concurrent lines has identically vanishing Hessian
    H = hessian_det(x * y * (x + y))
    assert H.is_zero() and H.degree == 3


@pytest.mark.parametrize("seed", range(100))
def test_euler_relation(seed):
    rng = random.Random(seed)
    f = random_poly(rng, rng.randint(1, 9))
    fx, fy, fz = gradient(f)
    assert x * fx + y * fy + z * fz == f.scale(f.degree)


def test_ring_axioms(rng):
    for _ in range(20):
        a, b, c = (random_poly(rng, rng.randint(1, 4)) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert partial(a * b, "y") == partial(a, "y") * b + a * partial(b, "y")
        same = random_poly(rng, a.degree)
        assert (a + same) * c == a * c + same * c


def test_homogeneity_enforced():
    with pytest.raises(ValueError):
        x + x**2
    with pytest.raises(ValueError):
        HomogeneousPoly(2, {(1, 0, 0): 1})


def test_evaluation():
    f = x**2 - y * z
    assert evaluate_exact(f, (Fraction(1, 2), 1, 1)) == Fraction(-3, 4)
    assert evaluate_complex(x + y, (2, 1j, 0)) == 2 + 1j
    w = complex(-0.5, 3**0.5 / 2)
    assert abs(evaluate_complex(x**3 + y**3, (1, -w, 0))) < 1e-12


def test_compose_linear_identity_and_scaling(rng):
    f = random_poly(rng, 4)
    assert compose_linear(f, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == f
    assert compose_linear(f, [[2, 0, 0], [0, 2, 0], [0, 0, 2]]) == f.scale(16)
    g = random_invertible(rng)
    p = (Fraction(1), Fraction(-2), Fraction(3, 5))
    image = tuple(sum(g[i][j] * p[j] for j in range(3)) for i in range(3))
    assert evaluate_exact(compose_linear(f, g), p) == evaluate_exact(f, image)


def test_product_and_power():
    assert product([x + y, x - y, z]) == (x**2 - y**2) * z
    assert (x + y) ** 3 == x**3 + 3 * x**2 * y + 3 * x * y**2 + y**3


def test_text_round_trip(rng):
    assert to_text(x**2 - y**2) == "1*x^2*y^0*z^0 + -1*x^0*y^2*z^0"
    assert parse_poly("x^2-y^2") == x**2 - y**2
    for _ in range(20):
        f = random_poly(rng, rng.randint(0, 6))
        if not f.is_zero():
            assert parse_poly(to_text(f)) == f


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poly("x^2 + y")
    with pytest.raises(ParseError):
        parse_poly("x^^2")


def test_complex_point_normalization():
    p = ComplexPoint.from_array([1j, 1j, 0])
    q = ComplexPoint.from_array([2, 2, 0])
    assert p.distance(q) < 1e-12
    assert p.normalized().rounded() == q.normalized().rounded()
    assert ComplexPoint.from_array([1, 0, 0]).distance(ComplexPoint.from_array([0, 1, 0])) == 1.0
