import fractions

import lark

import polyring
import utils
from frobenius import root_table
from polyring import MultiPoly, VarTable

Fraction = fractions.Fraction

class TooManyParts(utils.DomainError):
    pass

class NotSymmetric(utils.DomainError):
    pass

class NvarsMismatch(utils.DomainError):
    pass

class BOutOfRange(utils.DomainError):
    pass

class PartitionParseError(utils.DomainError):
    pass

def elementary_table(n):
    return VarTable([f"e{i}" for i in range(1, n+1)])

def multiset_permutations(items):
    """Distinct permutations of a multiset, in lexicographic order."""
    items = sorted(items)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i+1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i+1:] = reversed(items[i+1:])

def partitions(n, max_parts=None, smallest=1):
    """Partitions of n as non-increasing tuples, largest first."""
    if max_parts is None:
        max_parts = n

    def build(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for part in range(min(remaining, cap), smallest - 1, -1):
            for rest in build(remaining - part, part, slots - 1):
                yield (part,) + rest

    yield from build(n, n, max_parts)

class Partition():
    __slots__ = ("parts", "nvars")

    def __init__(self, parts, nvars):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        parts = tuple(sorted((p for p in parts if p), reverse=True))
        if len(parts) > nvars:
            raise TooManyParts(f"{len(parts)} parts do not fit {nvars} variables")
        self.parts = parts
        self.nvars = nvars

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts and self.nvars == other.nvars

    def __hash__(self):
        return hash((self.parts, self.nvars))

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        groups = []
        for p in sorted(set(self.parts), reverse=True):
            groups += [f"{p}^{self.parts.count(p)}"]
        return "(" + " ".join(groups) + ")"

    def __repr__(self):
        return f"Partition{self}"

    def size(self):
        return sum(self.parts)

    def exponents(self):
        return self.parts + (0,) * (self.nvars - len(self.parts))

partition_grammar = lark.Lark(r"""
start: "(" [group (","? group)*] ")"
group: INT ["^" INT]
%import common.INT
%import common.WS
%ignore WS
""", parser="lalr")

def parse_partition(text, nvars):
    try:
        tree = partition_grammar.parse(text)
    except lark.exceptions.LarkError as e:
        raise PartitionParseError(f"cannot parse partition {text!r}: {e}")
    parts = []
    for group in tree.find_data("group"):
        part, count = group.children
        parts += [int(part)] * (int(count) if count is not None else 1)
    return Partition(parts, nvars)

class SymPoly():
    """Symmetric polynomial on the monomial symmetric basis."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for partition, c in (terms or {}).items():
            if partition.nvars != nvars:
                raise NvarsMismatch(f"{partition} does not live in {nvars} variables")
            if c != 0:
                clean[partition] = polyring.normalize_scalar(c)
        self.terms = clean

    def _check(self, other):
        if isinstance(other, SymPoly):
            if other.nvars != self.nvars:
                raise NvarsMismatch(f"{self.nvars} and {other.nvars} variables")
            return other
        if polyring.is_scalar(other):
            return SymPoly(self.nvars, {Partition((), self.nvars): other})
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for partition, c in other.terms.items():
            terms[partition] = terms.get(partition, 0) + c
        return SymPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if polyring.is_scalar(other):
            return SymPoly(self.nvars, {k: c * other for k, c in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return sym_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self):
        out = ""
        for partition in sorted(self.terms, key=lambda p: p.exponents(), reverse=True):
            c = Fraction(self.terms[partition])
            magnitude = abs(c)
            if not partition.parts:
                body = str(magnitude)
            elif magnitude == 1:
                body = f"m{partition}"
            else:
                body = f"{magnitude}*m{partition}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out or "0"

    def __repr__(self):
        return f"SymPoly({self})"

    def is_zero(self):
        return not self.terms

    def leading(self):
        return max(self.terms, key=lambda p: p.exponents())

    def expand(self):
        total = polyring.zero(root_table(self.nvars))
        for partition, c in self.terms.items():
            total = total + monomial_expand(partition) * c
        return total

def monomial(parts, nvars, c=1):
    return SymPoly(nvars, {Partition(parts, nvars): c})

def elementary(k, nvars):
    return monomial([1] * k, nvars)

def power_sum(k, nvars):
    return monomial([k], nvars)

def monomial_expand(partition):
    table = root_table(partition.nvars)
    return MultiPoly(table, {m: 1 for m in multiset_permutations(partition.exponents())})

def is_symmetric(p):
    for i in range(len(p.table) - 1):
        swapped = {m[:i] + (m[i+1], m[i]) + m[i+2:]: c for m, c in p.terms.items()}
        if swapped != p.terms:
            return False
    return True

def to_monomial_basis(p):
    nvars = len(p.table)
    if not is_symmetric(p):
        raise NotSymmetric(f"{p} is not symmetric in {p.table}")
    remaining = dict(p.terms)
    terms = {}
    while remaining:
        lead = max(remaining)
        c = remaining[lead]
        partition = Partition(lead, nvars)
        terms[partition] = c
        for m in multiset_permutations(lead):
            value = remaining.get(m, 0) - c
            if value == 0:
                remaining.pop(m, None)
            else:
                remaining[m] = value
    return SymPoly(nvars, terms)

def sym_mul(s, t):
    if s.nvars != t.nvars:
        raise NvarsMismatch(f"{s.nvars} and {t.nvars} variables")
    return to_monomial_basis(s.expand() * t.expand())

class ElemPoly():
    """Polynomial in the elementary symmetric polynomials e1..en."""

    __slots__ = ("expression",)

    def __init__(self, expression):
        self.expression = expression

    @property
    def nvars(self):
        return len(self.expression.table)

    def __eq__(self, other):
        if not isinstance(other, ElemPoly):
            return NotImplemented
        return self.expression == other.expression

    def __hash__(self):
        return hash(self.expression)

    def __str__(self):
        return str(self.expression)

    def __repr__(self):
        return f"ElemPoly({self})"

    def expand(self):
        n = self.nvars
        bindings = {f"e{k}": elementary(k, n).expand() for k in range(1, n+1)}
        return polyring.poly_subst(self.expression, bindings)

    def to_sympoly(self):
        return to_monomial_basis(self.expand())

def to_elementary_basis(s):
    n = s.nvars
    table = elementary_table(n)
    expanded_e = {}

    def e_monomial(exps):
        if not exps in expanded_e:
            product = polyring.one(root_table(n))
            for k, e in enumerate(exps, 1):
                if e:
                    product = product * elementary(k, n).expand() ** e
            expanded_e[exps] = to_monomial_basis(product)
        return expanded_e[exps]

    result = polyring.zero(table)
    remaining = s
    while not remaining.is_zero():
        lead = remaining.leading()
        c = remaining.terms[lead]
        padded = lead.exponents() + (0,)
        exps = tuple(padded[k] - padded[k+1] for k in range(n))
        result = result + MultiPoly(table, {exps: c})
        remaining = remaining - e_monomial(exps) * c

    out = ElemPoly(result)
    if out.to_sympoly() != s:
        raise utils.InternalInconsistency(f"elementary expansion of {s} does not round-trip")
    return out

def verify_product_identities(a, b, n):
    if b < 1 or b > n:
        raise BOutOfRange(f"b must lie in 1..{n}, got {b}")
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    product = sym_mul(power_sum(a, n), elementary(b, n))
    if b == n:
        expected = monomial([a+1] + [1] * (n-1), n)
    elif a == 1:
        expected = monomial([2] + [1] * (b-1), n) + monomial([1] * (b+1), n, b+1)
    else:
        expected = monomial([a+1] + [1] * (b-1), n) + monomial([a] + [1] * b, n)
    return product == expected
