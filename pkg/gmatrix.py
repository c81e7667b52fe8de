import numpy as np

import frobenius
import linalg
import polyring
import symfun
import utils

class ClosedFormMismatch(utils.DomainError):
    pass

class MarkDegreeOutOfRange(utils.DomainError):
    pass

class GMatrix():
    """Multiplication by g on the power basis; entry(i, j) is 1-based."""

    def __init__(self, n, entries):
        self.n = n
        self.entries = entries

    def entry(self, i, j):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i},{j}) is outside a {self.n}x{self.n} matrix")
        return self.entries[i-1, j-1]

    def column(self, j):
        return [self.entry(i, j) for i in range(1, self.n+1)]

    def rows(self):
        return [[self.entry(i, j) for j in range(1, self.n+1)] for i in range(1, self.n+1)]

    def trace(self):
        total = self.entry(1, 1)
        for i in range(2, self.n+1):
            total = total + self.entry(i, i)
        return total

    def __eq__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        return self.n == other.n and all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    def __hash__(self):
        return hash(tuple(self.entries.flat))

    def __matmul__(self, other):
        return GMatrix(self.n, self.entries.dot(other.entries))

    def __mul__(self, scale):
        return GMatrix(self.n, self.entries * scale)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 1:
            raise ValueError(f"power must be positive, got {k}")
        result = self
        for _ in range(k-1):
            result = result @ self
        return result

    def __str__(self):
        return utils.format_table(self.rows())

    def to_json(self):
        return [[str(c) for c in row] for row in self.rows()]

def from_json(rows):
    n = len(rows)
    base = frobenius.universal_table(n)
    return GMatrix(n, linalg.object_matrix([[polyring.parse_poly(s, base) for s in row] for row in rows]))

def _check_rank(n):
    if n < 2:
        raise frobenius.RankTooSmall(f"rank must be at least 2, got {n}")

def g_matrix_recursive(n):
    _check_rank(n)
    base = frobenius.universal_table(n)

    def a(k):
        return polyring.var(base, f"a{k}")

    g = {}
    for i in range(1, n):
        g[(i, 1)] = a(n-i) * (-i)
    g[(n, 1)] = polyring.constant(base, n)
    for j in range(2, n+1):
        g[(1, j)] = a(n) * g[(n, j-1)]
        for i in range(2, n+1):
            g[(i, j)] = a(n-i+1) * g[(n, j-1)] + g[(i-1, j-1)]

    return GMatrix(n, linalg.object_matrix([[g[(i, j)] for j in range(1, n+1)] for i in range(1, n+1)]))

def g_matrix_operator(n):
    _check_rank(n)
    sys = frobenius.universal(n)
    g = frobenius.genus_term(sys)
    columns = [frobenius.a_mul(sys.x_power(j), g).coeffs for j in range(n)]
    return GMatrix(n, linalg.object_matrix([[columns[j][i] for j in range(n)] for i in range(n)]))

class SymMatrix():
    def __init__(self, n, entries):
        self.n = n
        self.entries = entries

    def entry(self, i, j):
        return self.entries[i-1][j-1]

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __str__(self):
        return utils.format_table(self.entries)

    def to_json(self):
        return [[str(c) for c in row] for row in self.entries]

def g_matrix_symmetric(n):
    _check_rank(n)
    rows = []
    for i in range(1, n+1):
        row = [symfun.monomial([1] * (n-i), n, i)]
        row += [symfun.monomial([1] * (n-i+1), n, -(n-i+1))]
        for j in range(3, n+1):
            row += [symfun.monomial([j-1] + [1] * (n-i), n, (-1) ** (j-1))]
        rows += [row]
    return SymMatrix(n, rows)

def g_matrix_from_substitution(n):
    # a_k -> -e_k on the recursive matrix, read back on the monomial basis
    recursive = g_matrix_recursive(n)
    bindings = {f"a{k}": -symfun.elementary(k, n).expand() for k in range(1, n+1)}
    rows = []
    for row in recursive.rows():
        rows += [[symfun.to_monomial_basis(polyring.poly_subst(c, bindings)) for c in row]]
    return SymMatrix(n, rows)

def torus_eval(n, k):
    if k < 0 or k > n-1:
        raise MarkDegreeOutOfRange(f"mark degree must lie in 0..{n-1}, got {k}")
    value = g_matrix_recursive(n).entry(n, k+1)
    sys = frobenius.universal(n)
    direct = frobenius.closed_surface_eval(sys, 1, sys.x_power(k))
    if value != direct:
        raise utils.InternalInconsistency(f"entry ({n},{k+1}) = {value} but eps(x^{k} g) = {direct}")
    return value

def identity(n):
    base = frobenius.universal_table(n)
    return GMatrix(n, linalg.identity(n, polyring.one(base), polyring.zero(base)))

def g2_power(k):
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    g2 = g_matrix_recursive(2)
    base = frobenius.universal_table(2)
    a1, a2 = polyring.var(base, "a1"), polyring.var(base, "a2")
    discriminant = a1 ** 2 + a2 * 4

    power = g2 ** k
    if k % 2 == 0:
        expected = identity(2) * discriminant ** (k // 2)
    else:
        expected = g2 * discriminant ** ((k - 1) // 2)
    if power != expected:
        raise ClosedFormMismatch(f"(G2)^{k} does not match its closed form")
    return power
