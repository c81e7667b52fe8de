import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

import frobenius
import polyring
import symfun

def a_vars(sys):
    return [polyring.var(sys.base, name) for name in sys.base]

def test_dual_basis_display():
    assert str(frobenius.dual_basis(frobenius.universal(3))) == "{(x^2, 1), (x, x - a1), (1, x^2 - a1*x - a2)}"

@pytest.mark.parametrize("n", range(2, 7))
def test_dual_basis_is_dual(n):
    sys = frobenius.universal(n)
    pairs = list(frobenius.dual_basis(sys))
    for i, (x, _) in enumerate(pairs):
        for j, (_, y) in enumerate(pairs):
            assert frobenius.epsilon(x * y) == (1 if i == j else 0)

@pytest.mark.parametrize("n", [2, 3, 4])
def test_frobenius_matrix_inverse(n):
    sys = frobenius.universal(n)
    product = frobenius.frobenius_matrix(sys).dot(frobenius.inverse_frobenius_matrix(sys))
    for i in range(n):
        for j in range(n):
            assert product[i, j] == (1 if i == j else 0)

def test_reduction_mod_p():
    sys = frobenius.universal(2)
    a1, a2 = a_vars(sys)
    x2 = sys.x_power(2)
    assert x2.coeffs == (a2, a1)
    assert str(sys.x_power(3)) == "a1^2*x + a2*x + a1*a2"
    assert sys.element("x^2") == x2
    assert sys.element("x^2 - a1*x - a2").is_zero()

def test_genus_term_is_derivative():
    sys = frobenius.universal(2)
    assert str(frobenius.genus_term(sys)) == "2*x - a1"
    sys = frobenius.universal(3)
    assert str(frobenius.genus_term(sys)) == "3*x^2 - 2*a1*x - a2"

@pytest.mark.parametrize("n", range(2, 9))
def test_torus_evaluates_to_rank(n):
    sys = frobenius.universal(n)
    assert frobenius.closed_surface_eval(sys, 1) == n
    assert frobenius.closed_surface_eval(sys, 0) == 0
    assert frobenius.closed_surface_eval(sys, 0, sys.x_power(n - 1)) == 1

def test_closed_surface_table_for_sl2():
    sys = frobenius.universal(2)
    a1, a2 = a_vars(sys)
    d = a1 ** 2 + a2 * 4
    rows = frobenius.closed_surface_table(sys, 4)
    assert rows[0] == (0, 0, 1)
    assert rows[1] == (1, 2, a1)
    assert rows[2] == (2, 0, d)
    assert rows[3] == (3, d * 2, a1 * d)
    assert rows[4] == (4, 0, d ** 2)

@pytest.mark.parametrize("n", [2, 3, 4])
def test_comultiplication_of_one_is_neck_cutting(n):
    sys = frobenius.universal(n)
    unit = frobenius.comultiply(frobenius.one_element(sys))
    assert unit == frobenius.unit_tensor(sys)
    assert unit == frobenius.neck_cutting_terms(sys)

def test_comultiplication_is_a_bimodule_map():
    sys = frobenius.universal(3)
    x = sys.x_power(1)
    left = frobenius.TensorElement.from_pairs(sys, [(1, x * u, v) for u, v in sys.dual])
    right = frobenius.TensorElement.from_pairs(sys, [(1, u, x * v) for u, v in sys.dual])
    assert left == right == frobenius.comultiply(x)

def test_tensor_display():
    sys = frobenius.universal(2)
    assert str(frobenius.unit_tensor(sys)) == "x⊗1 + 1⊗x + (-a1)*1⊗1"

def test_counit_contracts_tensors():
    sys = frobenius.universal(2)
    unit = frobenius.unit_tensor(sys)
    assert frobenius.eps_tensor_mul(unit, unit) == unit

def test_system_mismatch():
    u = frobenius.universal(2).x_power(1)
    w = frobenius.universal(3).x_power(1)
    with pytest.raises(frobenius.SystemMismatch):
        frobenius.a_mul(u, w)
    assert u != w

def test_rank_too_small():
    with pytest.raises(frobenius.RankTooSmall):
        frobenius.universal(1)
    with pytest.raises(frobenius.RankTooSmall):
        frobenius.specialize_roots([1])
    with pytest.raises(frobenius.InvalidMultiplicities):
        frobenius.specialize_roots([0, 2])
    with pytest.raises(frobenius.InvalidMultiplicities):
        frobenius.product_system([])

def test_element_powers():
    sys = frobenius.universal(2)
    g = frobenius.genus_term(sys)
    assert g ** 3 == g * g * g
    assert frobenius.g_power(sys, 0) == 1

def test_specialize_roots():
    sys = frobenius.specialize_roots([2])
    alpha = polyring.var(sys.base, "alpha1")
    assert sys.pcoeffs == (alpha * -2, -alpha ** 2)
    assert sys.multiplicities == (2,)

    sys = frobenius.specialize_roots([2, 1])
    alpha1, alpha2 = a_vars(sys)
    assert sys.pcoeffs == (-(alpha1 * 2 + alpha2), -(alpha1 ** 2 + alpha1 * alpha2 * 2), -(alpha1 ** 2 * alpha2))

def multiplicity_vectors(low, high):
    return [list(parts) for n in range(low, high + 1) for parts in symfun.partitions(n)]

def test_multiplicity_vectors_are_complete():
    assert len(list(symfun.partitions(6))) == 11
    assert len(multiplicity_vectors(2, 6)) == 2 + 3 + 5 + 7 + 11

@pytest.mark.parametrize("multiplicities", multiplicity_vectors(2, 6), ids=str)
def test_g_square_vanishes_iff_roots_repeat(multiplicities):
    assert frobenius.check_g_square_zero(multiplicities) == all(k >= 2 for k in multiplicities)

@pytest.mark.parametrize("multiplicities", multiplicity_vectors(2, 5), ids=str)
def test_crt_map_preserves_the_form(multiplicities):
    assert frobenius.crt_map_check(multiplicities)
    prod = frobenius.product_system(multiplicities)
    assert (prod.g_prime * prod.g_prime).is_zero() == all(k >= 2 for k in multiplicities)

def test_product_of_simple_roots():
    prod = frobenius.product_system([1, 1])
    for i in range(2):
        for j in range(2):
            assert prod.lambda_prime[i, j] == (1 if i == j else 0)
    assert all(c == 1 for c in prod.g_prime.components)

def test_product_system_pieces():
    prod = frobenius.product_system([2, 1])
    assert prod.n == 3
    assert prod.lambda_prime.shape == (3, 3)
    assert [f.n for f in prod.factors] == [2, 1]
    x = polyring.var(prod.table, "x")
    embedded = prod.embed(x ** 2)
    assert embedded == prod.embed(x) * prod.embed(x)
    assert prod.genus_power(1) == prod.g_prime

def test_numeric_inverse():
    sys = frobenius.numeric_system([0, 1])
    u = sys.element("x + 2")
    assert frobenius.a_mul(u, frobenius.a_invert(u)) == 1
    assert frobenius.a_invert(frobenius.one_element(sys)) == 1
    with pytest.raises(frobenius.NotInvertible):
        frobenius.a_invert(sys.element("x + 1"))
    with pytest.raises(frobenius.NotNumeric):
        frobenius.a_invert(frobenius.universal(2).x_power(1))

def test_twisted_form():
    sys = frobenius.numeric_system([1, 2, -1])
    d = sys.element("x^2 + 3")
    twisted = frobenius.twist_system(sys, d)
    assert frobenius.a_mul(twisted.genus, d) == frobenius.genus_term(sys)
    for i, (u, _) in enumerate(twisted.dual):
        for j, (_, v) in enumerate(twisted.dual):
            assert twisted.epsilon(frobenius.a_mul(u, v)) == (1 if i == j else 0)

def test_genus_term_independent_of_basis():
    sys = frobenius.numeric_system([1, 1])
    left = [sys.element("x + 1"), sys.element("2*x - 3")]
    basis = frobenius.dual_basis_for(sys, left)
    g = frobenius.scalar_element(sys, 0)
    for u, v in basis:
        g = g + frobenius.a_mul(u, v)
    assert g == frobenius.genus_term(sys)
    with pytest.raises(frobenius.NotInvertible):
        frobenius.dual_basis_for(sys, [sys.element("x"), sys.element("2*x")])

def test_pushforward_genus():
    assert frobenius.pushforward_genus_check([1, -1])
    assert frobenius.pushforward_genus_check([1, 2, 3])
    assert frobenius.pushforward_genus_check([0, 1, 3])
    assert frobenius.pushforward_genus_check([Fraction(1, 2), -2])
    with pytest.raises(frobenius.RootsNotDistinct):
        frobenius.pushforward_genus_check([1, 1, 2])
    with pytest.raises(frobenius.RankTooSmall):
        frobenius.pushforward_genus_check([1])

def test_json():
    sys = frobenius.universal(3)
    u = frobenius.genus_term(sys)
    data = json.loads(json.dumps(frobenius.element_to_json(u)))
    assert frobenius.element_from_json(data) == u
    assert frobenius.system_from_json(frobenius.system_to_json(sys)) == sys

@pytest.mark.parametrize("n", range(2, 7))
def test_dual_basis_expands_every_element(n):
    sys = frobenius.universal(n)
    samples = [sys.x_power(k) for k in range(n)] + [frobenius.genus_term(sys), sys.x_power(n + 1)]
    for u in samples:
        left = frobenius.scalar_element(sys, 0)
        right = frobenius.scalar_element(sys, 0)
        for x, y in sys.dual:
            left = left + x * frobenius.epsilon(y * u)
            right = right + y * frobenius.epsilon(u * x)
        assert left == u
        assert right == u

@pytest.mark.parametrize("n", range(2, 9))
def test_genus_term_is_derivative_mod_p(n):
    sys = frobenius.universal(n)
    g = frobenius.genus_term(sys)
    derivative = polyring.poly_derivative(frobenius.polynomial(sys), "x")
    assert g == frobenius.reduce_mod_p(sys, derivative)
    total = frobenius.scalar_element(sys, 0)
    for x, y in sys.dual:
        total = total + x * y
    assert total == g
    assert frobenius.epsilon(g) == n

def test_odd_powers_of_the_sl2_genus_term():
    sys = frobenius.universal(2)
    a1, a2 = a_vars(sys)
    d = a1 ** 2 + a2 * 4
    g = frobenius.genus_term(sys)
    x = sys.x_power(1)
    rows = frobenius.closed_surface_table(sys, 9)
    for i in range(5):
        assert g ** (2*i + 1) == g * d ** i
        assert g ** (2*i) == d ** i
        assert rows[2*i + 1][1] == d ** i * 2
        assert frobenius.epsilon(x * g ** (2*i)) == d ** i
        assert rows[2*i] == (2*i, 0, d ** i)

SL3 = frobenius.universal(3)
a_one = polyring.var(SL3.base, "a1")
coefficients = st.tuples(st.integers(-3, 3), st.integers(-2, 2)).map(lambda t: a_one * t[1] + t[0])
sl3_elements = st.lists(coefficients, min_size=3, max_size=3).map(lambda cs: frobenius.AElement(SL3, cs))

@settings(max_examples=50, deadline=None)
@given(sl3_elements, sl3_elements)
def test_unit_tensor_is_a_unit_for_contraction(u, v):
    unit = frobenius.unit_tensor(SL3)
    t = frobenius.tensor(u, v)
    assert frobenius.eps_tensor_mul(unit, t) == t
    assert frobenius.eps_tensor_mul(t, unit) == t

@settings(max_examples=50, deadline=None)
@given(sl3_elements)
def test_comultiplication_is_cocommutative(u):
    delta = frobenius.comultiply(u)
    assert delta.swap() == delta
    assert frobenius.unit_tensor(SL3).swap() == frobenius.unit_tensor(SL3)

NUMERIC = frobenius.numeric_system([1, 2, -1])
numeric_elements = st.lists(st.integers(-4, 4), min_size=3, max_size=3).map(lambda cs: frobenius.AElement(NUMERIC, cs))

@settings(max_examples=30, deadline=None)
@given(numeric_elements)
def test_twist_by_invertible_elements(d):
    try:
        frobenius.a_invert(d)
    except frobenius.NotInvertible:
        assume(False)
    twisted = frobenius.twist_system(NUMERIC, d)
    assert frobenius.a_mul(twisted.genus, d) == frobenius.genus_term(NUMERIC)
    for i, (u, _) in enumerate(twisted.dual):
        for j, (_, v) in enumerate(twisted.dual):
            assert twisted.epsilon(frobenius.a_mul(u, v)) == (1 if i == j else 0)
