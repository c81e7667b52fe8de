from fractions import Fraction

import pytest

import linalg
import polyring
from polyring import RationalFunction, VarTable

def test_solve():
    assert linalg.solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]

def test_solve_needs_row_swap():
    assert linalg.solve([[0, 1], [1, 0]], [2, 3]) == [3, 2]

def test_inverse():
    m = [[1, 2], [3, 4]]
    inv = linalg.inverse(m)
    product = linalg.object_matrix(m).dot(inv)
    assert product.tolist() == [[1, 0], [0, 1]]

def test_singular():
    with pytest.raises(linalg.SingularMatrix):
        linalg.inverse([[1, 2], [2, 4]])

def test_ragged():
    with pytest.raises(ValueError):
        linalg.object_matrix([[1, 2], [3]])

def test_row_reducer():
    reducer = linalg.RowReducer(["u", "v", "w"])
    assert reducer.add({"u": Fraction(2), "v": Fraction(-2)})
    assert reducer.add({"v": Fraction(1), "w": Fraction(-3)})
    assert not reducer.add({"u": Fraction(1), "w": Fraction(-3)})
    assert len(reducer) == 2
    assert reducer.reduce({"u": Fraction(1)}) == {"w": 3}

def test_row_reducer_keeps_late_columns_free():
    reducer = linalg.RowReducer(["u", "b"], late=["b"])
    reducer.add({"b": Fraction(1), "u": Fraction(5)})
    assert "u" in reducer.pivots
    assert reducer.reduce({"u": Fraction(1)}) == {"b": Fraction(-1, 5)}

def test_row_reducer_over_rational_functions():
    a = polyring.var(VarTable(["a1"]), "a1")
    reducer = linalg.RowReducer(["u", "b"], late=["b"])
    reducer.add({"u": RationalFunction(a * 2), "b": RationalFunction(-a ** 2)})
    reduced = reducer.reduce({"u": RationalFunction(a + 0)})
    assert reduced["b"].to_poly() == a ** 2 / 2
