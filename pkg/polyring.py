import fractions

import lark

import utils

Fraction = fractions.Fraction

class VarTableMismatch(utils.DomainError):
    pass

class UnknownVariable(utils.DomainError):
    pass

class UnboundVariable(utils.DomainError):
    pass

class PolyParseError(utils.DomainError):
    pass

class NotDivisible(utils.DomainError):
    pass

QUOTIENT_VARIABLE = "x"

def normalize_scalar(c):
    c = Fraction(c)
    if c.denominator == 1:
        return c.numerator
    return c

def is_scalar(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

class VarTable():
    __slots__ = ("names", "index")

    def __init__(self, names=()):
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        if QUOTIENT_VARIABLE in names and names[-1] != QUOTIENT_VARIABLE:
            raise ValueError(f"{QUOTIENT_VARIABLE} must be the last variable")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.index

    def __eq__(self, other):
        if not isinstance(other, VarTable):
            return NotImplemented
        return self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable({', '.join(self.names)})"

    def position(self, name):
        if not name in self.index:
            raise UnknownVariable(f"unknown variable: {name}")
        return self.index[name]

    def extend(self, *names):
        return VarTable(self.names + tuple(names))

    def zero_monomial(self):
        return (0,) * len(self.names)

class MultiPoly():
    __slots__ = ("table", "terms")

    def __init__(self, table, terms=None):
        self.table = table
        clean = {}
        if terms:
            size = len(table)
            for m, c in terms.items():
                if c != 0:
                    m = tuple(m)
                    if len(m) != size:
                        raise ValueError(f"monomial {m} does not fit {table}")
                    clean[m] = normalize_scalar(c)
        self.terms = clean

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.table != self.table:
                raise VarTableMismatch(f"{self.table} and {other.table} differ")
            return other
        if is_scalar(other):
            return constant(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return MultiPoly(self.table, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.table, {m: -c for m, c in self.terms.items()})

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
        if is_scalar(other):
            return MultiPoly(self.table, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return MultiPoly(self.table, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k):
        if type(k) != int or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k}")
        result = one(self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.table == other.table and self.terms == other.terms
        if is_scalar(other):
            return self.terms == constant(self.table, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)})"

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(self.table.zero_monomial(), 0)

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def degree(self, v):
        i = self.table.position(v)
        return max((m[i] for m in self.terms), default=-1)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def coefficients(self, v):
        # coefficient of v^k for every k, each still over the same table
        i = self.table.position(v)
        out = {}
        for m, c in self.terms.items():
            k = m[i]
            rest = m[:i] + (0,) + m[i+1:]
            out.setdefault(k, {})[rest] = c
        return {k: MultiPoly(self.table, t) for k, t in out.items()}

    def coefficient(self, v, k):
        return self.coefficients(v).get(k, zero(self.table))

    def variables(self):
        used = set()
        for m in self.terms:
            used |= {self.table.names[i] for i, e in enumerate(m) if e}
        return [n for n in self.table.names if n in used]

    def to_table(self, table):
        if table == self.table:
            return self
        positions = [table.position(n) if n in table else None for n in self.table.names]
        terms = {}
        for m, c in self.terms.items():
            mm = [0] * len(table)
            for name, pos, e in zip(self.table.names, positions, m):
                if e:
                    if pos is None:
                        raise UnknownVariable(f"{name} is not in {table}")
                    mm[pos] = e
            terms[tuple(mm)] = c
        return MultiPoly(table, terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

def zero(table):
    return MultiPoly(table)

def one(table):
    return constant(table, 1)

def constant(table, c):
    return MultiPoly(table, {table.zero_monomial(): c})

def var(table, name):
    m = [0] * len(table)
    m[table.position(name)] = 1
    return MultiPoly(table, {tuple(m): 1})

def poly_add(p, q):
    return p + q

def poly_mul(p, q):
    return p * q

def poly_pow(p, k):
    return p ** k

def poly_derivative(p, v):
    i = p.table.position(v)
    terms = {}
    for m, c in p.terms.items():
        if m[i]:
            d = m[:i] + (m[i] - 1,) + m[i+1:]
            terms[d] = terms.get(d, 0) + c * m[i]
    return MultiPoly(p.table, terms)

def poly_subst(p, bindings):
    if not bindings:
        return p
    for name in bindings:
        p.table.position(name)
    targets = list(bindings.values())
    table = targets[0].table
    for t in targets:
        if t.table != table:
            raise VarTableMismatch(f"substitution targets mix {table} and {t.table}")

    images = []
    for name in p.table.names:
        if name in bindings:
            images += [bindings[name]]
        elif name in table:
            images += [var(table, name)]
        else:
            images += [None]

    powers = {}
    def power(i, e):
        if not (i, e) in powers:
            powers[(i, e)] = images[i] ** e
        return powers[(i, e)]

    result = zero(table)
    for m, c in p.terms.items():
        term = constant(table, c)
        for i, e in enumerate(m):
            if e:
                if images[i] is None:
                    raise UnknownVariable(f"{p.table.names[i]} has no image in {table}")
                term = term * power(i, e)
        result = result + term
    return result

def poly_eval_rational(p, point):
    for name in point:
        p.table.position(name)
    total = Fraction(0)
    for m, c in p.terms.items():
        value = Fraction(c)
        for name, e in zip(p.table.names, m):
            if e:
                if not name in point:
                    raise UnboundVariable(f"no value for {name}")
                value *= Fraction(point[name]) ** e
        total += value
    return normalize_scalar(total)

def poly_divmod(p, q, v):
    # division with remainder in v; the leading coefficient of q in v must be a constant
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = q._coerce(p)
    lead_degree = q.degree(v)
    lead = q.coefficient(v, lead_degree)
    if not lead.is_constant():
        raise NotDivisible(f"leading coefficient {lead} is not a unit")
    lead = Fraction(lead.constant_value())
    xv = var(q.table, v)

    quotient = zero(q.table)
    remainder = p
    while not remainder.is_zero() and remainder.degree(v) >= lead_degree:
        d = remainder.degree(v)
        t = remainder.coefficient(v, d) * xv ** (d - lead_degree) / lead
        quotient = quotient + t
        remainder = remainder - t * q
    return quotient, remainder

def poly_divide_exact(p, q, v):
    quotient, remainder = poly_divmod(p, q, v)
    if not remainder.is_zero():
        raise NotDivisible(f"{q} does not divide {p}")
    return quotient

def _monic(p, v):
    lead = p.coefficient(v, p.degree(v)).constant_value()
    return p / lead

def univariate_gcd(p, q):
    if len(p.table) != 1:
        raise ValueError(f"gcd needs a single variable, got {p.table}")
    v = p.table.names[0]
    q = p._coerce(q)
    while not q.is_zero():
        p, q = q, poly_divmod(p, q, v)[1]
    if p.is_zero():
        return p
    return _monic(p, v)

class RationalFunction():
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = one(num.table)
        den = num._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if len(num.table) != 1:
            raise ValueError(f"rational functions need a single variable, got {num.table}")
        v = num.table.names[0]
        if num.is_zero():
            den = one(num.table)
        else:
            g = univariate_gcd(num, den)
            if not g.is_constant():
                num = poly_divide_exact(num, g, v)
                den = poly_divide_exact(den, g, v)
            lead = Fraction(den.coefficient(v, den.degree(v)).constant_value())
            num, den = num / lead, den / lead
        self.num = num
        self.den = den

    @property
    def table(self):
        return self.num.table

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.table != self.table:
                raise VarTableMismatch(f"{self.table} and {other.table} differ")
            return other
        if isinstance(other, MultiPoly) or is_scalar(other):
            return RationalFunction(self.num._coerce(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

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
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def to_poly(self):
        if not self.den.is_constant():
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num / self.den.constant_value()

def format_scalar(c):
    return str(Fraction(c))

def format_terms(terms, names):
    # terms: ordered (monomial, coefficient) pairs
    out = ""
    for m, c in terms:
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        magnitude = abs(Fraction(c))
        if not factors:
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_scalar(magnitude)] + factors)
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"

def format_poly(p):
    return format_terms(p.sorted_terms(), p.table.names)

poly_grammar = lark.Lark(r"""
start: sign? term (SIGN term)*
sign: SIGN
term: factor ("*"? factor)*
factor: NUMBER -> number
      | NAME ["^" NUMBER] -> power
SIGN: "+" | "-"
NAME: /[A-Za-z_][A-Za-z_0-9]*/
NUMBER: /\d+(\/\d+)?/
%import common.WS
%ignore WS
""", parser="lalr")

class PolyBuilder(lark.Transformer):
    def __init__(self, table):
        super().__init__()
        self.table = table

    def number(self, children):
        return constant(self.table, Fraction(str(children[0])))

    def power(self, children):
        name, exponent = children
        e = 1
        if exponent is not None:
            e = Fraction(str(exponent))
            if e.denominator != 1:
                raise PolyParseError(f"exponent must be an integer: {exponent}")
        return var(self.table, str(name)) ** int(e)

    def term(self, children):
        result = one(self.table)
        for factor in children:
            result = result * factor
        return result

    def sign(self, children):
        return str(children[0])

    def start(self, children):
        total = zero(self.table)
        sign = "+"
        for child in children:
            if isinstance(child, str):
                sign = str(child)
                continue
            total = total + child if sign == "+" else total - child
            sign = "+"
        return total

def parse_poly(text, table):
    try:
        tree = poly_grammar.parse(text)
    except lark.exceptions.LarkError as e:
        raise PolyParseError(f"cannot parse polynomial {text!r}: {e}")
    try:
        return PolyBuilder(table).transform(tree)
    except lark.exceptions.VisitError as e:
        raise e.orig_exc
