import json

import pytest

import frobenius
import gmatrix
import polyring

def parse_rows(n, rows):
    base = frobenius.universal_table(n)
    return [[polyring.parse_poly(s, base) for s in row] for row in rows]

G2 = [["-a1", "2*a2"], ["2", "a1"]]
G3 = [
    ["-a2", "3*a3", "a1*a3"],
    ["-2*a1", "2*a2", "a1*a2 + 3*a3"],
    ["3", "a1", "a1^2 + 2*a2"],
]
G4 = [
    ["-a3", "4*a4", "a1*a4", "a1^2*a4 + 2*a2*a4"],
    ["-2*a2", "3*a3", "a1*a3 + 4*a4", "a1^2*a3 + 2*a2*a3 + a1*a4"],
    ["-3*a1", "2*a2", "a1*a2 + 3*a3", "a1^2*a2 + 2*a2^2 + a1*a3 + 4*a4"],
    ["4", "a1", "a1^2 + 2*a2", "a1^3 + 3*a1*a2 + 3*a3"],
]

@pytest.mark.parametrize("n, rows", [(2, G2), (3, G3), (4, G4)])
def test_recursive_matrix(n, rows):
    assert gmatrix.g_matrix_recursive(n).rows() == parse_rows(n, rows)

@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_recursion_is_multiplication_by_g(n):
    assert gmatrix.g_matrix_recursive(n) == gmatrix.g_matrix_operator(n)

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_symmetric_closed_form(n):
    assert gmatrix.g_matrix_symmetric(n) == gmatrix.g_matrix_from_substitution(n)

def test_symmetric_first_column():
    matrix = gmatrix.g_matrix_symmetric(4)
    assert str(matrix.entry(1, 1)) == "m(1^3)"
    assert str(matrix.entry(3, 1)) == "3*m(1^1)"
    assert str(matrix.entry(4, 1)) == "4"
    assert str(matrix.entry(1, 2)) == "-4*m(1^4)"
    assert str(matrix.entry(2, 3)) == "m(2^1 1^2)"
    assert str(matrix.entry(4, 4)) == "-m(3^1)"

@pytest.mark.parametrize("n", [2, 3, 4])
def test_torus_with_marks(n):
    sys = frobenius.universal(n)
    for k in range(n):
        assert gmatrix.torus_eval(n, k) == frobenius.closed_surface_eval(sys, 1, sys.x_power(k))
    assert gmatrix.torus_eval(n, 0) == n
    with pytest.raises(gmatrix.MarkDegreeOutOfRange):
        gmatrix.torus_eval(n, n)

def test_trace():
    assert gmatrix.g_matrix_recursive(2).trace() == 0

@pytest.mark.parametrize("k", range(1, 7))
def test_powers_of_g2(k):
    gmatrix.g2_power(k)

def test_square_of_g2():
    base = frobenius.universal_table(2)
    d = polyring.parse_poly("a1^2 + 4*a2", base)
    assert (gmatrix.g_matrix_recursive(2) ** 2).rows() == [[d, 0], [0, d]]

def test_display():
    assert str(gmatrix.g_matrix_recursive(2)) == "-a1  2*a2\n2    a1"

def test_rank_too_small():
    with pytest.raises(frobenius.RankTooSmall):
        gmatrix.g_matrix_recursive(1)

def test_json():
    matrix = gmatrix.g_matrix_recursive(3)
    assert gmatrix.from_json(json.loads(json.dumps(matrix.to_json()))) == matrix
