import pytest
from hypothesis import given, settings, strategies as st

import frobenius
import polyring
import symfun
from frobenius import root_table

def test_multiset_permutations():
    assert list(symfun.multiset_permutations([1, 0, 1])) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert len(list(symfun.multiset_permutations([2, 1, 1, 0]))) == 12

def test_partition_display_and_parse():
    p = symfun.Partition([1, 2, 1, 1], 5)
    assert str(p) == "(2^1 1^3)"
    assert symfun.parse_partition("(2^1 1^3)", 5) == p
    assert symfun.parse_partition("(2, 1, 1, 1)", 5) == p
    assert symfun.parse_partition("()", 2).parts == ()
    with pytest.raises(symfun.PartitionParseError):
        symfun.parse_partition("(2^", 3)

def test_too_many_parts():
    with pytest.raises(symfun.TooManyParts):
        symfun.Partition([1, 1, 1], 2)

def test_monomial_expansion():
    alpha1, alpha2 = (polyring.var(root_table(2), name) for name in ("alpha1", "alpha2"))
    assert symfun.monomial([2, 1], 2).expand() == alpha1 ** 2 * alpha2 + alpha1 * alpha2 ** 2
    assert symfun.monomial([], 2, 3).expand() == 3

def test_products():
    m1 = symfun.monomial([1], 3)
    assert m1 * m1 == symfun.monomial([2], 3) + symfun.monomial([1, 1], 3, 2)
    assert str(m1 * m1) == "m(2^1) + 2*m(1^2)"
    assert str(symfun.elementary(2, 3) - 1) == "m(1^2) - 1"

def test_nvars_mismatch():
    with pytest.raises(symfun.NvarsMismatch):
        symfun.monomial([1], 2) + symfun.monomial([1], 3)

def test_not_symmetric():
    with pytest.raises(symfun.NotSymmetric):
        symfun.to_monomial_basis(polyring.var(root_table(2), "alpha1"))

def test_power_sum_in_elementary_basis():
    expected = polyring.parse_poly("e1^2 - 2*e2", symfun.elementary_table(3))
    assert symfun.to_elementary_basis(symfun.power_sum(2, 3)).expression == expected
    expected = polyring.parse_poly("e1^3 - 3*e1*e2 + 3*e3", symfun.elementary_table(3))
    assert symfun.to_elementary_basis(symfun.power_sum(3, 3)).expression == expected

@pytest.mark.parametrize("n", range(1, 6))
def test_power_sum_times_elementary(n):
    for a in range(1, 5):
        for b in range(1, n + 1):
            assert symfun.verify_product_identities(a, b, n)

def test_b_out_of_range():
    with pytest.raises(symfun.BOutOfRange):
        symfun.verify_product_identities(1, 4, 3)
    with pytest.raises(symfun.BOutOfRange):
        symfun.verify_product_identities(1, 0, 3)

@st.composite
def sympolys(draw, nvars=None):
    n = nvars or draw(st.integers(1, 4))
    parts = st.lists(st.integers(1, 3), max_size=n)
    terms = draw(st.lists(st.tuples(parts, st.integers(-3, 3)), max_size=3))
    total = symfun.SymPoly(n)
    for p, c in terms:
        total = total + symfun.monomial(p, n, c)
    return total

@settings(max_examples=100, deadline=None)
@given(sympolys())
def test_elementary_basis_round_trip(s):
    assert symfun.to_elementary_basis(s).to_sympoly() == s

@settings(max_examples=40, deadline=None)
@given(sympolys(3), sympolys(3))
def test_products_commute(s, t):
    assert s * t == t * s
    assert (s * t).expand() == s.expand() * t.expand()

def test_partitions():
    assert list(symfun.partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(symfun.partitions(4, max_parts=2)) == [(4,), (3, 1), (2, 2)]
    assert list(symfun.partitions(5, smallest=2)) == [(5,), (3, 2)]
    assert list(symfun.partitions(0)) == [()]

@pytest.mark.parametrize("n", range(1, 6))
def test_monomial_expansion_collects_back(n):
    for size in range(7):
        for parts in symfun.partitions(size, max_parts=n):
            partition = symfun.Partition(parts, n)
            assert symfun.to_monomial_basis(symfun.monomial_expand(partition)) == symfun.monomial(parts, n)

def test_monomial_two_one_in_three_variables():
    alpha = [polyring.var(root_table(3), f"alpha{i}") for i in (1, 2, 3)]
    expected = polyring.zero(root_table(3))
    for i in range(3):
        for j in range(3):
            if i != j:
                expected = expected + alpha[i] ** 2 * alpha[j]
    assert symfun.monomial([2, 1], 3).expand() == expected

@pytest.mark.parametrize("n", range(2, 7))
def test_coefficients_of_p_are_negated_elementary(n):
    sys = frobenius.specialize_roots([1] * n)
    for k in range(1, n + 1):
        assert sys.pcoeffs[k-1] == -symfun.elementary(k, n).expand()
