import fractions

import numpy as np

import utils

Fraction = fractions.Fraction

class SingularMatrix(utils.DomainError):
    pass

def object_matrix(rows):
    rows = [list(row) for row in rows]
    width = len(rows[0]) if rows else 0
    out = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValueError("ragged matrix rows")
        for j, value in enumerate(row):
            out[i, j] = value
    return out

def identity(n, one=1, zero=0):
    return object_matrix([[one if i == j else zero for j in range(n)] for i in range(n)])

def _field(value):
    if type(value) == int:
        return Fraction(value)
    return value

def _is_constant(value):
    if hasattr(value, "is_constant"):
        return value.is_constant()
    return True

def gauss_jordan(matrix, rhs):
    """Solve matrix @ X = rhs exactly. Pivots on the first nonzero entry of each column."""
    a = object_matrix([[_field(v) for v in row] for row in matrix])
    b = object_matrix([[_field(v) for v in row] for row in rhs])
    n = a.shape[0]
    if a.shape[1] != n or b.shape[0] != n:
        raise ValueError(f"cannot solve a {a.shape} system against {b.shape}")

    for i in range(n):
        k = next((r for r in range(i, n) if a[r, i] != 0), None)
        if k is None:
            raise SingularMatrix(f"no pivot in column {i+1}")
        if k != i:
            a[[i, k]] = a[[k, i]]
            b[[i, k]] = b[[k, i]]

        inv = 1 / a[i, i]
        a[i] = a[i] * inv
        b[i] = b[i] * inv

        for j in range(n):
            if j == i or a[j, i] == 0:
                continue
            d = a[j, i]
            a[j] = a[j] - a[i] * d
            b[j] = b[j] - b[i] * d

    return b

def solve(matrix, vector):
    column = [[v] for v in vector]
    return [row[0] for row in gauss_jordan(matrix, column)]

def inverse(matrix):
    n = len(matrix)
    return gauss_jordan(matrix, identity(n))

class RowReducer():
    """Incremental reduced row echelon form over sparse rows (column -> value).

    Pivots avoid columns in `late`, then prefer constant entries, then the
    earliest column in `order`."""

    def __init__(self, order, late=()):
        self.order = {c: i for i, c in enumerate(order)}
        self.late = set(late)
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row):
        row = {c: v for c, v in row.items() if v != 0}
        for c in [c for c in row if c in self.pivots]:
            v = row.pop(c)
            for cc, w in self.pivots[c].items():
                if cc == c:
                    continue
                value = row.get(cc, 0) - v * w
                if value == 0:
                    row.pop(cc, None)
                else:
                    row[cc] = value
        return row

    def add(self, row):
        row = self.reduce(row)
        if not row:
            return False

        pivot = min(row, key=lambda c: (c in self.late, not _is_constant(row[c]), self.order[c]))
        inv = 1 / _field(row[pivot])
        row = {c: v * inv for c, v in row.items()}

        for other in self.pivots.values():
            if not pivot in other:
                continue
            v = other.pop(pivot)
            for cc, w in row.items():
                if cc == pivot:
                    continue
                value = other.get(cc, 0) - v * w
                if value == 0:
                    other.pop(cc, None)
                else:
                    other[cc] = value

        self.pivots[pivot] = row
        return True
