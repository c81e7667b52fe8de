import fractions

import numpy as np

import linalg
import polyring
import utils
from polyring import MultiPoly, VarTable

Fraction = fractions.Fraction

X = polyring.QUOTIENT_VARIABLE

class SystemMismatch(utils.DomainError):
    pass

class RankTooSmall(utils.DomainError):
    pass

class NotInvertible(utils.DomainError):
    pass

class RootsNotDistinct(utils.DomainError):
    pass

class NotNumeric(utils.DomainError):
    pass

class InvalidMultiplicities(utils.DomainError):
    pass

def universal_table(n):
    return VarTable([f"a{i}" for i in range(1, n+1)])

def root_table(m):
    return VarTable([f"alpha{i}" for i in range(1, m+1)])

def _drop_x(p, base):
    # p is x-free over base + x
    return MultiPoly(base, {m[:-1]: c for m, c in p.terms.items()})

def _reduce_coefficients(sys, by_degree):
    n = sys.n
    zero = polyring.zero(sys.base)
    by_degree = dict(by_degree)
    top = max(by_degree, default=-1)
    for k in range(top, n-1, -1):
        c = by_degree.pop(k, None)
        if c is None or c.is_zero():
            continue
        for j in range(1, n+1):
            by_degree[k-j] = by_degree.get(k-j, zero) + c * sys.pcoeffs[j-1]
    return AElement(sys, [by_degree.get(k, zero) for k in range(n)])

class FrobSystem():
    """R -> R[x]/(p(x)) with p(x) = x^n - a1 x^(n-1) - ... - an and the form
    eps(x^(n-1)) = 1, eps(x^k) = 0 below. Rank 1 is allowed for local factors."""

    def __init__(self, pcoeffs, base, multiplicities=None):
        pcoeffs = tuple(c.to_table(base) if isinstance(c, MultiPoly) else polyring.constant(base, c) for c in pcoeffs)
        if len(pcoeffs) < 1:
            raise RankTooSmall("a Frobenius system needs rank at least 1")
        self.n = len(pcoeffs)
        self.base = base
        self.pcoeffs = pcoeffs
        self.table = base.extend(X)
        self.multiplicities = tuple(multiplicities) if multiplicities else None

        powers = [one_element(self)]
        for _ in range(2*self.n - 2):
            powers += [powers[-1].shift()]
        self.powers = tuple(powers)
        self.form_values = tuple(epsilon(u) for u in powers)
        self.dual = _build_dual_basis(self)

    def __eq__(self, other):
        if not isinstance(other, FrobSystem):
            return NotImplemented
        return self is other or (self.base == other.base and self.pcoeffs == other.pcoeffs)

    def __hash__(self):
        return hash((self.base, self.pcoeffs))

    def __repr__(self):
        return f"FrobSystem(n={self.n}, p={polynomial(self)})"

    def is_numeric(self):
        return len(self.base) == 0

    def lift(self, c):
        return c.to_table(self.table)

    def x_power(self, k):
        if k < len(self.powers):
            return self.powers[k]
        return reduce_mod_p(self, polyring.var(self.table, X) ** k)

    def element(self, text):
        return reduce_mod_p(self, polyring.parse_poly(text, self.table))

class AElement():
    __slots__ = ("sys", "coeffs")

    def __init__(self, sys, coeffs):
        coeffs = tuple(c.to_table(sys.base) if isinstance(c, MultiPoly) else polyring.constant(sys.base, c) for c in coeffs)
        if len(coeffs) != sys.n:
            raise ValueError(f"expected {sys.n} coefficients, got {len(coeffs)}")
        self.sys = sys
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, AElement):
            if other.sys != self.sys:
                raise SystemMismatch(f"{self.sys} and {other.sys} differ")
            return other
        if isinstance(other, MultiPoly) and other.table == self.sys.table:
            return reduce_mod_p(self.sys, other)
        if isinstance(other, MultiPoly) or polyring.is_scalar(other):
            return scalar_element(self.sys, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AElement(self.sys, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return AElement(self.sys, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if polyring.is_scalar(other) or (isinstance(other, MultiPoly) and other.table == self.sys.base):
            return AElement(self.sys, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return a_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if type(k) != int or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k}")
        result = one_element(self.sys)
        base = self
        while k:
            if k & 1:
                result = a_mul(result, base)
            k >>= 1
            if k:
                base = a_mul(base, base)
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except SystemMismatch:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.sys, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        names = self.sys.table.names
        terms = []
        for k in range(self.sys.n - 1, -1, -1):
            terms += [(m + (k,), c) for m, c in self.coeffs[k].sorted_terms()]
        return polyring.format_terms(terms, names)

    def __repr__(self):
        return f"AElement({self})"

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def is_scalar(self):
        return all(c.is_zero() for c in self.coeffs[1:])

    def shift(self):
        # multiplication by x
        return _reduce_coefficients(self.sys, {k+1: c for k, c in enumerate(self.coeffs)})

    def to_poly(self):
        x = polyring.var(self.sys.table, X)
        total = polyring.zero(self.sys.table)
        for k, c in enumerate(self.coeffs):
            total = total + self.sys.lift(c) * x ** k
        return total

class DualBasis():
    def __init__(self, pairs):
        self.pairs = tuple(pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __getitem__(self, i):
        return self.pairs[i]

    def __str__(self):
        return "{" + ", ".join(f"({x}, {y})" for x, y in self.pairs) + "}"

class TensorElement():
    """Element of A (x) A stored as coefficients on x^i (x) x^j."""

    __slots__ = ("sys", "coeffs")

    def __init__(self, sys, coeffs=None):
        self.sys = sys
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero()}

    @staticmethod
    def from_pairs(sys, pairs):
        coeffs = {}
        zero = polyring.zero(sys.base)
        for scale, u, v in pairs:
            if u.sys != sys or v.sys != sys:
                raise SystemMismatch("tensor factors come from another system")
            for i, cu in enumerate(u.coeffs):
                if cu.is_zero():
                    continue
                for j, cv in enumerate(v.coeffs):
                    if cv.is_zero():
                        continue
                    coeffs[(i, j)] = coeffs.get((i, j), zero) + cu * cv * scale
        return TensorElement(sys, coeffs)

    def _check(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.sys != self.sys:
            raise SystemMismatch(f"{self.sys} and {other.sys} differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        coeffs = dict(self.coeffs)
        zero = polyring.zero(self.sys.base)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs.get(k, zero) + c
        return TensorElement(self.sys, coeffs)

    def __neg__(self):
        return TensorElement(self.sys, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scale):
        if not (polyring.is_scalar(scale) or isinstance(scale, MultiPoly)):
            return NotImplemented
        return TensorElement(self.sys, {k: c * scale for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.sys == other.sys and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.sys, frozenset(self.coeffs.items())))

    def __str__(self):
        def factor(k):
            return "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs, key=lambda k: (-(k[0]+k[1]), -k[0])):
            c = self.coeffs[(i, j)]
            pair = f"{factor(i)}⊗{factor(j)}"
            if c == 1:
                parts += [pair]
            elif c == -1:
                parts += [f"-{pair}"]
            else:
                parts += [f"({c})*{pair}"]
        return " + ".join(parts)

    def is_zero(self):
        return not self.coeffs

    def swap(self):
        return TensorElement(self.sys, {(j, i): c for (i, j), c in self.coeffs.items()})

def universal(n):
    if n < 2:
        raise RankTooSmall(f"rank must be at least 2, got {n}")
    base = universal_table(n)
    return FrobSystem([polyring.var(base, name) for name in base], base)

def numeric_system(pcoeffs):
    return FrobSystem([polyring.normalize_scalar(c) for c in pcoeffs], VarTable())

def polynomial(sys):
    x = polyring.var(sys.table, X)
    p = x ** sys.n
    for k, a in enumerate(sys.pcoeffs, 1):
        p = p - sys.lift(a) * x ** (sys.n - k)
    return p

def one_element(sys):
    return scalar_element(sys, 1)

def scalar_element(sys, c):
    zero = polyring.zero(sys.base)
    if isinstance(c, MultiPoly):
        c = c.to_table(sys.base)
    return AElement(sys, [c] + [zero] * (sys.n - 1))

def reduce_mod_p(sys, q):
    if q.table != sys.table:
        q = q.to_table(sys.table)
    by_degree = {k: _drop_x(c, sys.base) for k, c in q.coefficients(X).items()}
    return _reduce_coefficients(sys, by_degree)

def a_mul(u, v):
    if u.sys != v.sys:
        raise SystemMismatch(f"{u.sys} and {v.sys} differ")
    zero = polyring.zero(u.sys.base)
    product = {}
    for i, cu in enumerate(u.coeffs):
        if cu.is_zero():
            continue
        for j, cv in enumerate(v.coeffs):
            if cv.is_zero():
                continue
            product[i+j] = product.get(i+j, zero) + cu * cv
    return _reduce_coefficients(u.sys, product)

def epsilon(u):
    return u.coeffs[u.sys.n - 1]

def frobenius_matrix(sys):
    n = sys.n
    return linalg.object_matrix([[sys.form_values[i+j] for j in range(n)] for i in range(n)])

def inverse_frobenius_matrix(sys):
    # anti-triangular: 1 on the anti-diagonal, -a_(n-1-r-c) above it
    n = sys.n
    zero = polyring.zero(sys.base)
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            if r + c == n - 1:
                row += [polyring.one(sys.base)]
            elif r + c < n - 1:
                row += [-sys.pcoeffs[n-2-r-c]]
            else:
                row += [zero]
        rows += [row]
    return linalg.object_matrix(rows)

def _build_dual_basis(sys):
    n = sys.n
    powers = sys.powers
    pairs = []
    for k in range(n):
        y = powers[k]
        for j in range(1, k+1):
            y = y - powers[k-j] * sys.pcoeffs[j-1]
        pairs += [(powers[n-1-k], y)]

    for i, (xi, _) in enumerate(pairs):
        for j, (_, yj) in enumerate(pairs):
            if epsilon(a_mul(xi, yj)) != (1 if i == j else 0):
                raise utils.InternalInconsistency(f"eps(x{i+1} y{j+1}) is not a Kronecker delta")

    product = frobenius_matrix(sys).dot(inverse_frobenius_matrix(sys))
    for i in range(n):
        for j in range(n):
            if product[i, j] != (1 if i == j else 0):
                raise utils.InternalInconsistency(f"lambda * lambda^-1 differs from the identity at ({i+1},{j+1})")

    return DualBasis(pairs)

def dual_basis(sys):
    return sys.dual

def tensor(u, v):
    return TensorElement.from_pairs(u.sys, [(1, u, v)])

def unit_tensor(sys):
    return TensorElement.from_pairs(sys, [(1, x, y) for x, y in sys.dual])

def comultiply(u):
    return TensorElement.from_pairs(u.sys, [(1, a_mul(x, u), y) for x, y in u.sys.dual])

def neck_cutting_terms(sys):
    # sum_k c_k sum_(i+j=n-1-k) x^i (x) x^j with c_0 = 1, c_k = -a_k
    n = sys.n
    coeffs = {}
    for k in range(n):
        c = polyring.one(sys.base) if k == 0 else -sys.pcoeffs[k-1]
        for i in range(n - k):
            coeffs[(i, n-1-k-i)] = c
    return TensorElement(sys, coeffs)

def eps_tensor_mul(s, t):
    if s.sys != t.sys:
        raise SystemMismatch(f"{s.sys} and {t.sys} differ")
    sys = s.sys
    zero = polyring.zero(sys.base)
    out = {}
    for (i, j), cs in s.coeffs.items():
        for (k, l), ct in t.coeffs.items():
            form = sys.form_values[j+k]
            if form.is_zero():
                continue
            out[(i, l)] = out.get((i, l), zero) + cs * ct * form
    return TensorElement(sys, out)

def genus_term(sys):
    g = scalar_element(sys, 0)
    for x, y in sys.dual:
        g = g + a_mul(x, y)
    derivative = reduce_mod_p(sys, polyring.poly_derivative(polynomial(sys), X))
    if g != derivative:
        raise utils.InternalInconsistency(f"sum x_i y_i = {g} but p'(x) = {derivative}")
    return g

def g_power(sys, i):
    return genus_term(sys) ** i

def closed_surface_eval(sys, genus, mark=None):
    if mark is None:
        mark = one_element(sys)
    return epsilon(a_mul(mark, g_power(sys, genus)))

def closed_surface_table(sys, max_genus):
    # rows (k, eps(g^k), eps(x g^k))
    g = genus_term(sys)
    x = sys.x_power(1)
    rows = []
    current = one_element(sys)
    for k in range(max_genus + 1):
        rows += [(k, epsilon(current), epsilon(a_mul(x, current)))]
        current = a_mul(current, g)
    return rows

def _check_multiplicities(multiplicities):
    multiplicities = tuple(int(k) for k in multiplicities)
    if not multiplicities or any(k < 1 for k in multiplicities):
        raise InvalidMultiplicities(f"multiplicities must be positive integers, got {multiplicities}")
    if sum(multiplicities) < 2:
        raise RankTooSmall(f"rank must be at least 2, got {sum(multiplicities)}")
    return multiplicities

def _read_pcoeffs(p, base, n):
    return [-_drop_x(p.coefficient(X, n-k), base) for k in range(1, n+1)]

def specialize_roots(multiplicities):
    multiplicities = _check_multiplicities(multiplicities)
    n = sum(multiplicities)
    base = root_table(len(multiplicities))
    table = base.extend(X)
    x = polyring.var(table, X)
    p = polyring.one(table)
    for name, k in zip(base, multiplicities):
        p = p * (x + polyring.var(table, name)) ** k
    return FrobSystem(_read_pcoeffs(p, base, n), base, multiplicities)

def check_g_square_zero(multiplicities):
    sys = specialize_roots(multiplicities)
    g = genus_term(sys)
    power = a_mul(g, g)
    answers = []
    for i in (2, 3, 4):
        if i > 2:
            power = a_mul(power, g)
        answers += [power.is_zero()]
    if len(set(answers)) != 1:
        raise utils.InternalInconsistency(f"g^2, g^3, g^4 disagree on vanishing: {answers}")
    return answers[0]

def local_system(base, root, k):
    table = base.extend(X)
    p = (polyring.var(table, X) + polyring.var(table, root)) ** k
    return FrobSystem(_read_pcoeffs(p, base, k), base)

class ProductElement():
    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(components)

    def __mul__(self, other):
        return ProductElement([a_mul(a, b) for a, b in zip(self.components, other.components)])

    def __add__(self, other):
        return ProductElement([a + b for a, b in zip(self.components, other.components)])

    def __eq__(self, other):
        if not isinstance(other, ProductElement):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

class ProductSystem():
    """prod_i R[x]/((x + alpha_i)^k_i) with the block-diagonal form."""

    def __init__(self, multiplicities):
        self.multiplicities = _check_multiplicities(multiplicities)
        self.n = sum(self.multiplicities)
        self.base = root_table(len(self.multiplicities))
        self.table = self.base.extend(X)
        self.roots = self.base.names
        self.factors = tuple(local_system(self.base, root, k) for root, k in zip(self.roots, self.multiplicities))

        zero = polyring.zero(self.base)
        lam = np.empty((self.n, self.n), dtype=object)
        lam.fill(zero)
        offset = 0
        for factor in self.factors:
            k = factor.n
            lam[offset:offset+k, offset:offset+k] = frobenius_matrix(factor)
            offset += k
        self.lambda_prime = lam
        self.dual_bases = tuple(f.dual for f in self.factors)
        self.g_prime = ProductElement([genus_term(f) for f in self.factors])

    def embed(self, q):
        # the CRT map: reduce q in every factor
        return ProductElement([reduce_mod_p(f, q) for f in self.factors])

    def genus_power(self, i):
        result = ProductElement([one_element(f) for f in self.factors])
        for _ in range(i):
            result = result * self.g_prime
        return result

    def hat_epsilon(self, element):
        """Transported form as (numerator, denominator) over the root ring.

        Each local component contributes its residue of a(x)/p(x) at x = -alpha_i."""
        x = polyring.var(self.table, X)
        residues = []
        for root, k, local in zip(self.roots, self.multiplicities, element.components):
            alpha = polyring.var(self.table, root)
            shift = {X: x - alpha}
            cofactor = polyring.one(self.table)
            for other, kj in zip(self.roots, self.multiplicities):
                if other != root:
                    cofactor = cofactor * (x + polyring.var(self.table, other)) ** kj
            a_shifted = polyring.poly_subst(local.to_poly(), shift).coefficients(X)
            q_shifted = polyring.poly_subst(cofactor, shift).coefficients(X)
            zero = polyring.zero(self.table)
            A = [_drop_x(a_shifted.get(s, zero), self.base) for s in range(k)]
            q = [_drop_x(q_shifted.get(s, zero), self.base) for s in range(k)]
            c = q[0]

            beta = [polyring.one(self.base)]
            for s in range(1, k):
                b = polyring.zero(self.base)
                for r in range(1, s+1):
                    b = b - q[r] * beta[s-r] * c ** (r-1)
                beta += [b]
            numerator = polyring.zero(self.base)
            for s in range(k):
                numerator = numerator + A[k-1-s] * beta[s] * c ** (k-1-s)
            residues += [(numerator, c ** k)]

        denominator = polyring.one(self.base)
        for _, d in residues:
            denominator = denominator * d
        numerator = polyring.zero(self.base)
        for i, (num, _) in enumerate(residues):
            term = num
            for j, (_, d) in enumerate(residues):
                if j != i:
                    term = term * d
            numerator = numerator + term
        return numerator, denominator

def product_system(multiplicities):
    return ProductSystem(multiplicities)

def crt_map_check(multiplicities, include_high_powers=True):
    sys = specialize_roots(multiplicities)
    prod = ProductSystem(multiplicities)
    top = 2*sys.n if include_high_powers else sys.n
    x = polyring.var(sys.table, X)
    for k in range(top):
        lhs = epsilon(reduce_mod_p(sys, x ** k))
        numerator, denominator = prod.hat_epsilon(prod.embed(x ** k))
        if lhs * denominator != numerator:
            utils.log("CRT", f"x^{k}: {lhs} != ({numerator})/({denominator})")
            return False
    return True

def _require_numeric(sys):
    if not sys.is_numeric():
        raise NotNumeric(f"{sys} is not specialized to rationals")

def _rationals(u):
    return [Fraction(c.constant_value()) for c in u.coeffs]

def multiplication_matrix(u):
    n = u.sys.n
    columns = [_rationals(a_mul(u, u.sys.x_power(j))) for j in range(n)]
    return linalg.object_matrix([[columns[j][i] for j in range(n)] for i in range(n)])

def a_invert(u):
    sys = u.sys
    _require_numeric(sys)
    unit = [1] + [0] * (sys.n - 1)
    try:
        v = linalg.solve(multiplication_matrix(u), unit)
    except linalg.SingularMatrix:
        raise NotInvertible(f"{u} is not invertible")
    inverse = AElement(sys, v)
    if a_mul(u, inverse) != 1:
        raise utils.InternalInconsistency(f"{u} * {inverse} is not 1")
    return inverse

class TwistedSystem():
    def __init__(self, sys, d, d_inverse, form_values, pairs, genus):
        self.sys = sys
        self.d = d
        self.d_inverse = d_inverse
        self.form_values = form_values
        self.dual = DualBasis(pairs)
        self.genus = genus

    def epsilon(self, u):
        return epsilon(a_mul(self.d, u))

def twist_system(sys, d):
    _require_numeric(sys)
    d_inverse = a_invert(d)
    form_values = tuple(epsilon(a_mul(d, sys.x_power(k))) for k in range(sys.n))
    pairs = [(x, a_mul(d_inverse, y)) for x, y in sys.dual]
    twisted = TwistedSystem(sys, d, d_inverse, form_values, pairs, None)

    for i, (xi, _) in enumerate(pairs):
        for j, (_, yj) in enumerate(pairs):
            if twisted.epsilon(a_mul(xi, yj)) != (1 if i == j else 0):
                raise utils.InternalInconsistency("twisted pairs are not dual")

    genus = scalar_element(sys, 0)
    for x, y in pairs:
        genus = genus + a_mul(x, y)
    if a_mul(genus, d) != genus_term(sys):
        raise utils.InternalInconsistency(f"d * {genus} differs from the genus term")
    twisted.genus = genus
    return twisted

def dual_basis_for(sys, left):
    """Dual partners of an arbitrary basis, through the inverse Gram matrix."""
    _require_numeric(sys)
    n = sys.n
    if len(left) != n:
        raise ValueError(f"a basis needs {n} elements")
    gram = [[Fraction(epsilon(a_mul(u, sys.x_power(k))).constant_value()) for k in range(n)] for u in left]
    try:
        inv = linalg.inverse(gram)
    except linalg.SingularMatrix:
        raise NotInvertible("elements do not form a basis")
    pairs = []
    for j, u in enumerate(left):
        pairs += [(u, AElement(sys, [inv[k, j] for k in range(n)]))]
    return DualBasis(pairs)

def pushforward_genus_check(roots):
    roots = [Fraction(r) for r in roots]
    n = len(roots)
    if n < 2:
        raise RankTooSmall(f"rank must be at least 2, got {n}")
    if len(set(roots)) != n:
        raise RootsNotDistinct(f"roots repeat: {roots}")

    table = VarTable([X])
    x = polyring.var(table, X)
    p = polyring.one(table)
    for r in roots:
        p = p * (x + r)
    sys = numeric_system([-p.coefficient(X, n-k).constant_value() for k in range(1, n+1)])

    points = [-r for r in roots]
    vandermonde = linalg.object_matrix([[t ** k for k in range(n)] for t in points])

    def phi(u):
        values = _rationals(u)
        return [sum(c * t ** k for k, c in enumerate(values)) for t in points]

    def hat_epsilon(v):
        return linalg.solve(vandermonde, v)[n-1]

    def unit(i):
        return [1 if t == i else 0 for t in range(n)]

    def times(u, v):
        return [a * b for a, b in zip(u, v)]

    gram = [[hat_epsilon(times(unit(i), unit(j))) for j in range(n)] for i in range(n)]
    inv = linalg.inverse(gram)
    left = [unit(i) for i in range(n)]
    right = [[sum(inv[i, k] * unit(k)[t] for k in range(n)) for t in range(n)] for i in range(n)]

    for i in range(n):
        for j in range(n):
            if hat_epsilon(times(left[i], right[j])) != (1 if i == j else 0):
                raise utils.InternalInconsistency("transported pairs are not dual")

    target = [0] * n
    for u, v in zip(left, right):
        target = [a + b for a, b in zip(target, times(u, v))]
    return phi(genus_term(sys)) == target

def element_to_json(u):
    return {"n": u.sys.n, "base": list(u.sys.base.names), "pcoeffs": [str(c) for c in u.sys.pcoeffs], "coeffs": [str(c) for c in u.coeffs]}

def system_to_json(sys):
    return {"n": sys.n, "base": list(sys.base.names), "pcoeffs": [str(c) for c in sys.pcoeffs]}

def system_from_json(data):
    base = VarTable(data.get("base", universal_table(data["n"]).names))
    pcoeffs = [polyring.parse_poly(s, base) for s in data["pcoeffs"]]
    if len(pcoeffs) != data["n"]:
        raise ValueError(f"expected {data['n']} coefficients of p")
    return FrobSystem(pcoeffs, base)

def element_from_json(data, sys=None):
    if sys is None:
        sys = system_from_json(data)
    return AElement(sys, [polyring.parse_poly(s, sys.base) for s in data["coeffs"]])
