import itertools

import lark

import frobenius
import linalg
import polyring
import utils
from polyring import MultiPoly, VarTable, RationalFunction

class PatternMismatch(utils.DomainError):
    pass

class SizeBound(utils.DomainError):
    pass

class RootNotRepeated(utils.DomainError):
    pass

class ParamsInconsistent(utils.DomainError):
    pass

class SkeinParseError(utils.DomainError):
    pass

class RootIndexOutOfRange(utils.DomainError):
    pass

DOT = "d"
PLAIN = "p"

MARKS = {"d": DOT, "dot": DOT, "●": DOT, "p": PLAIN, "plain": PLAIN, "○": PLAIN}

DEFAULTS = {
    "max_oracle_spheres": 6,
    "random_budget": 3,
}

# surface component kinds
UNBOUNDING_SPHERE = "unboundingSphere"
BOUNDING_SPHERE = "boundingSphere"
BOUNDING_TORUS = "boundingTorus"
FIBERED_PARALLEL = "fiberedParallel"

MARKED_F = "markedF"
SPHERE = "sphere"
COMPRESSIBLE_TORUS = "compressibleTorus"
OTHER = "other"

COEFFICIENTS = VarTable(["a1"])

SL2 = frobenius.universal(2)

def min_rotation(word):
    if not word:
        return ""
    return min(word[i:] + word[:i] for i in range(len(word)))

class SphereConfig():
    __slots__ = ("word",)

    def __init__(self, word=""):
        word = "".join(word)
        if set(word) - {DOT, PLAIN}:
            raise ValueError(f"unknown marks in {word!r}")
        self.word = min_rotation(word)

    def __eq__(self, other):
        if not isinstance(other, SphereConfig):
            return NotImplemented
        return self.word == other.word

    def __lt__(self, other):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __hash__(self):
        return hash(self.word)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return ",".join(self.word) if self.word else "1"

    def __repr__(self):
        return f"SphereConfig({self})"

    def dots(self):
        return self.word.count(DOT)

def canonicalize(word):
    if isinstance(word, SphereConfig):
        return word
    marks = []
    for mark in word:
        if not mark in MARKS:
            raise SkeinParseError(f"unknown mark: {mark!r}")
        marks += [MARKS[mark]]
    return SphereConfig(marks)

def parse_config(text):
    text = text.strip()
    if text in {"", "1"}:
        return SphereConfig()
    return canonicalize([m.strip() for m in text.split(",")])

class TubeParams():
    """Values of the two tubed closed surfaces that replace 0 and 1 in relations 2 and 1."""

    def __init__(self, t_plain, t_dot):
        self.t_plain = t_plain
        self.t_dot = t_dot

    def __eq__(self, other):
        if not isinstance(other, TubeParams):
            return NotImplemented
        return self.t_plain == other.t_plain and self.t_dot == other.t_dot

    def __repr__(self):
        return f"TubeParams(t_plain={self.t_plain}, t_dot={self.t_dot})"

class SkeinRing():
    def __init__(self, table, a1, a2, params):
        self.table = table
        self.a1 = a1
        self.a2 = a2
        self.params = params
        self.t_plain = self.coerce(params.t_plain)
        self.t_dot = self.coerce(params.t_dot)

    def __eq__(self, other):
        if not isinstance(other, SkeinRing):
            return NotImplemented
        return (self.table, self.a2, self.t_plain, self.t_dot) == (other.table, other.a2, other.t_plain, other.t_dot)

    def __hash__(self):
        return hash((self.table, self.a2))

    def coerce(self, value):
        if polyring.is_scalar(value):
            return polyring.constant(self.table, value)
        if value.table == self.table:
            return value
        images = {"a1": self.a1, "a2": self.a2}
        bindings = {name: image for name, image in images.items() if name in value.table}
        return polyring.poly_subst(value, bindings).to_table(self.table)

def _constrained_ring():
    a1 = polyring.var(COEFFICIENTS, "a1")
    return SkeinRing(COEFFICIENTS, a1, -(a1 ** 2) / 4, TubeParams(0, 1))

CONSTRAINED = _constrained_ring()

def generic_ring(params):
    table = frobenius.universal_table(2)
    return SkeinRing(table, polyring.var(table, "a1"), polyring.var(table, "a2"), params)

def eliminate(p):
    return CONSTRAINED.coerce(p)

class SkeinElement():
    """Formal combination of canonical sphere configurations."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        collected = {}
        for config, c in (terms or {}).items():
            if not isinstance(config, SphereConfig):
                config = canonicalize(config)
            collected[config] = collected.get(config, polyring.zero(ring.table)) + ring.coerce(c)
        self.terms = {k: c for k, c in collected.items() if not c.is_zero()}

    def _check(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("skein elements over different coefficient rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, polyring.zero(self.ring.table)) + c
        return SkeinElement(self.ring, terms)

    def __neg__(self):
        return SkeinElement(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scale):
        if not (polyring.is_scalar(scale) or isinstance(scale, MultiPoly)):
            return NotImplemented
        scale = self.ring.coerce(scale)
        return SkeinElement(self.ring, {k: c * scale for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[k]}) * [{k}]" for k in sorted(self.terms))

    def __repr__(self):
        return f"SkeinElement({self})"

    def is_zero(self):
        return not self.terms

    def coefficient(self, config):
        return self.terms.get(canonicalize(config), polyring.zero(self.ring.table))

    def to_json(self):
        return [{"config": str(k), "coeff": str(self.terms[k])} for k in sorted(self.terms)]

def config_element(config, ring=CONSTRAINED, c=1):
    return SkeinElement(ring, {canonicalize(config): c})

sum_grammar = lark.Lark(r"""
start: sign? term (SIGN term)*
sign: SIGN
term: (coeff "*"?)? CONFIG
coeff: "(" POLY ")"
     | MONO
CONFIG: /\[[^\]]*\]/
POLY: /[^()]+/
MONO: /[0-9A-Za-z_^\/]+(\*[0-9A-Za-z_^\/]+)*/
SIGN: "+" | "-"
%import common.WS
%ignore WS
""", parser="lalr")

def parse_element(text, ring=CONSTRAINED):
    try:
        tree = sum_grammar.parse(text)
    except lark.exceptions.LarkError as e:
        raise SkeinParseError(f"cannot parse skein element {text!r}: {e}")

    table = ring.table
    total = SkeinElement(ring)
    sign = "+"
    for child in tree.children:
        if isinstance(child, lark.Tree) and child.data == "sign":
            sign = str(child.children[0])
            continue
        if isinstance(child, lark.Token) and child.type == "SIGN":
            sign = str(child)
            continue
        coeff = polyring.one(table)
        for part in child.children:
            if isinstance(part, lark.Tree):
                coeff = polyring.parse_poly(str(part.children[0]), table)
            else:
                config = parse_config(str(part)[1:-1])
        term = config_element(config, ring, coeff)
        total = total + term if sign == "+" else total - term
        sign = "+"
    return total

class NormalForm():
    """q(X) + c*e with X^k for 2k plain spheres and e for one dotted sphere."""

    __slots__ = ("qx", "ecoeff")

    def __init__(self, qx=None, ecoeff=None):
        reduced = {k: eliminate(c) for k, c in (qx or {}).items()}
        self.qx = {k: c for k, c in reduced.items() if not c.is_zero()}
        self.ecoeff = eliminate(ecoeff) if ecoeff is not None else polyring.zero(COEFFICIENTS)

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.qx == other.qx and self.ecoeff == other.ecoeff

    def __hash__(self):
        return hash((frozenset(self.qx.items()), self.ecoeff))

    def __add__(self, other):
        qx = dict(self.qx)
        for k, c in other.qx.items():
            qx[k] = qx.get(k, polyring.zero(COEFFICIENTS)) + c
        return NormalForm(qx, self.ecoeff + other.ecoeff)

    def __mul__(self, scale):
        scale = eliminate(scale) if isinstance(scale, MultiPoly) else scale
        return NormalForm({k: c * scale for k, c in self.qx.items()}, self.ecoeff * scale)

    __rmul__ = __mul__

    def __str__(self):
        parts = []
        for k in sorted(self.qx):
            c = self.qx[k]
            if k == 0:
                parts += [f"({c})"]
            elif k == 1:
                parts += [f"({c})·X"]
            else:
                parts += [f"({c})·X^{k}"]
        if not self.ecoeff.is_zero():
            parts += [f"({self.ecoeff})·e"]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"NormalForm({self})"

    def is_zero(self):
        return not self.qx and self.ecoeff.is_zero()

    def x_coefficient(self, k):
        return self.qx.get(k, polyring.zero(COEFFICIENTS))

    def to_json(self):
        return {"qx": {str(k): str(c) for k, c in sorted(self.qx.items())}, "e": str(self.ecoeff)}

def normal_form_from_json(data):
    qx = {int(k): polyring.parse_poly(s, COEFFICIENTS) for k, s in data["qx"].items()}
    return NormalForm(qx, polyring.parse_poly(data["e"], COEFFICIENTS))

def _rewrite(ring, word, r, i):
    """One relation at index i of the linear word; returns linear word -> coefficient."""
    L = len(word)
    one = polyring.one(ring.table)
    out = {}

    def expect(width, patterns):
        if i < 0 or i + width > L or not word[i:i+width] in patterns:
            raise PatternMismatch(f"relation {r} does not match [{','.join(word) or '1'}] at {i}")

    def add(w, c):
        out[w] = out.get(w, polyring.zero(ring.table)) + c

    if r == 1:
        expect(2, ("dd",))
        add(word[:i] + word[i+2:], ring.t_dot)
        add(word[:i] + "pp" + word[i+2:], -ring.a2)
    elif r == 2:
        expect(2, ("dp", "pd"))
        add(word[:i] + word[i+1] + word[i] + word[i+2:], -one)
        add(word[:i] + "pp" + word[i+2:], ring.a1)
        add(word[:i] + word[i+2:], ring.t_plain)
    elif r == 3:
        if not 0 <= i < max(L, 1):
            raise PatternMismatch(f"rotation {i} is out of range for {L} spheres")
        add(word[i:] + word[:i], one)
    elif r == 4:
        expect(3, ("ddp",))
        add(word[:i] + "pdd" + word[i+3:], one)
    elif r == 5:
        expect(3, ("dpp",))
        add(word[:i] + "ppd" + word[i+3:], one)
    elif r == 6:
        if word.count(DOT) != 1 or L < 2 or not 0 <= i < L or word[i] != DOT:
            raise PatternMismatch(f"relation 6 needs the single dot of a configuration with at least two spheres")
        add(PLAIN * L, ring.a1 / 2)
        add(PLAIN * (L - 2), ring.t_plain / 2)
    else:
        raise ValueError(f"unknown relation {r}")

    return {w: c for w, c in out.items() if not c.is_zero()}

def apply_relation(r, elt, position, config=None, rotation=0):
    if config is None:
        if len(elt.terms) != 1:
            raise PatternMismatch("element has several configurations; name the one to rewrite")
        config = next(iter(elt.terms))
    config = canonicalize(config)
    if not config in elt.terms:
        raise PatternMismatch(f"[{config}] does not occur in the element")
    coeff = elt.terms[config]
    word = config.word
    if word:
        rotation %= len(word)
        word = word[rotation:] + word[:rotation]

    rest = dict(elt.terms)
    del rest[config]
    out = SkeinElement(elt.ring, rest)
    return out + SkeinElement(elt.ring, {w: coeff * c for w, c in _rewrite(elt.ring, word, r, position).items()})

def expand_plain_pair(ring, word, position):
    """a1 times [word], rewritten through relation 2 at a plain-plain pair."""
    if word[position:position+2] != "pp":
        raise PatternMismatch(f"no plain pair at {position} in [{','.join(word)}]")
    i = position
    one = polyring.one(ring.table)
    terms = {}
    for w, c in ((word[:i] + "dp" + word[i+2:], one), (word[:i] + "pd" + word[i+2:], one), (word[:i] + word[i+2:], -ring.t_plain)):
        config = canonicalize(w)
        terms[config] = terms.get(config, polyring.zero(ring.table)) + c
    return SkeinElement(ring, terms)

def standard_position(config):
    """Unique representative fixed by length, dot count and dot parity classes."""
    word = canonicalize(config).word
    L, d = len(word), word.count(DOT)
    if d == 0 or d == L:
        return SphereConfig(word)
    if L % 2 == 0:
        classes = [0, 0]
        for i, mark in enumerate(word):
            if mark == DOT:
                classes[i % 2] += 1
        m = min(classes)
        r = abs(classes[0] - classes[1])
        return SphereConfig(DOT * (2*m) + "pd" * r + PLAIN * (L - 2*m - 2*r))
    return SphereConfig(DOT * d + PLAIN * (L - d))

def _closest_pair(word):
    # rotate so the closest cyclically consecutive pair of dots starts the word
    L = len(word)
    dots = [i for i, mark in enumerate(word) if mark == DOT]
    best = None
    for a, b in zip(dots, dots[1:] + [dots[0] + L]):
        gap = b - a - 1
        if best is None or gap < best[1]:
            best = (a, gap)
    start, gap = best
    return word[start:] + word[:start], gap

def _terminal(word):
    dots = word.count(DOT)
    return dots == 0 or (dots == 1 and len(word) == 1)

def _read_terminal(word, c, qx, ecoeff):
    if word == DOT:
        return ecoeff + c
    if len(word) % 2 == 0:
        k = len(word) // 2
        qx[k] = qx.get(k, polyring.zero(c.table)) + c
    return ecoeff

def _step(ring, word):
    if word.count(DOT) == 1:
        start = word.index(DOT)
        return _rewrite(ring, word[start:] + word[:start], 6, 0)
    rotated, gap = _closest_pair(word)
    return _rewrite(ring, rotated, 1 if gap == 0 else 2, 0)

def _accumulate(pending, word, c):
    if c.is_zero():
        return
    value = pending.get(word)
    pending[word] = c if value is None else value + c
    if pending[word].is_zero():
        del pending[word]

def diagrams_to_element(terms):
    """Steps 1 and 2: bounding components become scalars, handles become marks."""
    elt = SkeinElement(CONSTRAINED)
    for item in terms:
        coeff, diagram = item if isinstance(item, tuple) else (1, item)
        scalar = CONSTRAINED.coerce(coeff)
        linear = []
        for component in diagram.components:
            if component.kind in {BOUNDING_SPHERE, BOUNDING_TORUS}:
                scalar = scalar * evaluate_bounding(component)
            elif component.kind in {UNBOUNDING_SPHERE, FIBERED_PARALLEL}:
                mark = frobenius.a_mul(component.mark, frobenius.g_power(SL2, component.genus))
                linear += [(component.position, reduce_mark(mark))]
            else:
                raise ValueError(f"unknown component kind: {component.kind}")
        if scalar.is_zero():
            continue
        linear.sort(key=lambda t: t[0])

        words = {"": scalar}
        for _, (c_plain, c_dot) in linear:
            grown = {}
            for w, c in words.items():
                for mark, cm in ((PLAIN, c_plain), (DOT, c_dot)):
                    if not cm.is_zero():
                        grown[w + mark] = grown.get(w + mark, polyring.zero(COEFFICIENTS)) + c * cm
            words = grown
        elt = elt + SkeinElement(CONSTRAINED, words)
    return elt

def normalize(source):
    if isinstance(source, SkeinElement):
        elt = source
    elif isinstance(source, SurfaceDiagram):
        elt = diagrams_to_element([source])
    else:
        elt = diagrams_to_element(source)
    if elt.ring != CONSTRAINED:
        raise ValueError("normal forms exist only once 4*a2 + a1^2 = 0")

    ring = elt.ring
    pending = {}
    for config, c in elt.terms.items():
        _accumulate(pending, standard_position(config).word, c)

    qx, ecoeff = {}, polyring.zero(COEFFICIENTS)
    while pending:
        word = max(pending, key=lambda w: (len(w), w))
        c = pending.pop(word)
        if _terminal(word):
            ecoeff = _read_terminal(word, c, qx, ecoeff)
            continue
        for w, k in _step(ring, word).items():
            _accumulate(pending, standard_position(w).word, c * k)
    return NormalForm(qx, ecoeff)

def lambda_k(elt, k):
    normal = elt if isinstance(elt, NormalForm) else normalize(elt)
    return normal.x_coefficient(k)

def lambda_d(elt):
    normal = elt if isinstance(elt, NormalForm) else normalize(elt)
    return normal.ecoeff

def _matches(word):
    L = len(word)
    found = []
    for i in range(L):
        if word[i:i+2] == "dd":
            found += [(1, i)]
        if word[i:i+2] in ("dp", "pd"):
            found += [(2, i)]
        if word[i:i+3] == "ddp":
            found += [(4, i)]
        if word[i:i+3] == "dpp":
            found += [(5, i)]
    if word.count(DOT) == 1 and L >= 2:
        found += [(6, word.index(DOT))]
    return found

def random_normal_form(elt, rng, budget=None):
    """Rewrite with randomly chosen relations and sites, then finish deterministically."""
    if budget is None:
        budget = DEFAULTS["random_budget"]
    ring = elt.ring
    pending = {}
    for config, c in elt.terms.items():
        _accumulate(pending, (config.word, budget), c)

    qx, ecoeff = {}, polyring.zero(COEFFICIENTS)
    while pending:
        key = rng.choice(sorted(pending))
        c = pending.pop(key)
        word, left = key
        if _terminal(word):
            ecoeff = _read_terminal(word, c, qx, ecoeff)
            continue
        if left > 0:
            rotation = rng.randrange(len(word))
            rotated = word[rotation:] + word[:rotation]
            r, i = rng.choice(_matches(rotated))
            rewritten = _rewrite(ring, rotated, r, i)
            left -= 1
        else:
            rewritten = _step(ring, word)
        for w, k in rewritten.items():
            _accumulate(pending, (min_rotation(w), left), c * k)
    return NormalForm(qx, ecoeff)

def necklaces(max_spheres):
    words = set()
    for L in range(max_spheres + 1):
        for marks in itertools.product(DOT + PLAIN, repeat=L):
            words.add(min_rotation("".join(marks)))
    return sorted(words, key=lambda w: (len(w), w))

def relation_instances(max_spheres, ring=CONSTRAINED):
    """Every instance of relations 1, 2, 4, 5, 6 on configurations up to max_spheres, as zero elements."""
    seen = set()
    for word in necklaces(max_spheres):
        L = len(word)
        for rotation in range(max(L, 1)):
            rotated = word[rotation:] + word[:rotation]
            for r, i in _matches(rotated):
                row = SkeinElement(ring, {rotated: 1})
                row = row - SkeinElement(ring, _rewrite(ring, rotated, r, i))
                key = frozenset(row.terms.items())
                if row.is_zero() or key in seen:
                    continue
                seen.add(key)
                yield row

def _is_basis(word):
    return word == DOT or (set(word) <= {PLAIN} and len(word) % 2 == 0)

class SkeinQuotient():
    """Finite truncation of the module: every configuration up to max_spheres + 2 spheres,
    modulo every relation instance among them, reduced over Q(a1)."""

    def __init__(self, max_spheres, verbose=False):
        if max_spheres > DEFAULTS["max_oracle_spheres"]:
            raise SizeBound(f"oracle is limited to {DEFAULTS['max_oracle_spheres']} spheres, got {max_spheres}")
        self.max_spheres = max_spheres
        bound = max_spheres + 2
        words = necklaces(bound)
        late = [w for w in words if _is_basis(w)]
        early = [w for w in reversed(words) if not _is_basis(w)]
        self.reducer = linalg.RowReducer(early + late, late)
        for row in utils.progress(relation_instances(bound), desc="ORACLE", verbose=verbose):
            self.reducer.add({k.word: RationalFunction(c) for k, c in row.terms.items()})
        if verbose:
            utils.log("ORACLE", f"{len(words)} configurations, rank {len(self.reducer)}")

    def normal_form(self, elt):
        for config in elt.terms:
            if len(config) > self.max_spheres:
                raise SizeBound(f"[{config}] exceeds {self.max_spheres} spheres")
        reduced = self.reducer.reduce({k.word: RationalFunction(c) for k, c in elt.terms.items()})
        qx, ecoeff = {}, polyring.zero(COEFFICIENTS)
        for word, value in reduced.items():
            if _is_basis(word):
                ecoeff = _read_terminal(word, value.to_poly(), qx, ecoeff)
            elif set(word) <= {PLAIN} and len(word) % 2 and len(word) > self.max_spheres:
                # odd plain words vanish; the truncation leaves the long ones unreduced
                continue
            else:
                raise utils.InternalInconsistency(f"[{','.join(word)}] survived elimination")
        return NormalForm(qx, ecoeff)

def brute_force_normal_form(elt, max_spheres):
    return SkeinQuotient(max_spheres).normal_form(elt)

def reduce_mark(mark):
    c_plain, c_dot = mark.coeffs
    return eliminate(c_plain), eliminate(c_dot)

class SurfaceComponent():
    def __init__(self, kind, genus=0, mark=None, position=0):
        if genus < 0:
            raise ValueError(f"genus must be non-negative, got {genus}")
        self.kind = kind
        self.genus = genus
        self.mark = mark if mark is not None else frobenius.one_element(SL2)
        self.position = position

class SurfaceDiagram():
    def __init__(self, components):
        self.components = list(components)

def evaluate_bounding(component):
    genus = component.genus
    if component.kind == BOUNDING_TORUS:
        genus = max(genus, 1)
    elif component.kind != BOUNDING_SPHERE:
        raise ValueError(f"{component.kind} does not bound")
    return eliminate(frobenius.closed_surface_eval(SL2, genus, component.mark))

class AbstractSurface():
    def __init__(self, components):
        # (kind, value): markedF carries k, sphere and compressibleTorus carry an AElement
        self.components = list(components)

def _root(sys, root_index):
    if sys.multiplicities is None or any(k < 2 for k in sys.multiplicities):
        raise RootNotRepeated(f"every root must be repeated, got {sys.multiplicities}")
    if not 1 <= root_index <= len(sys.multiplicities):
        raise RootIndexOutOfRange(f"root index must lie in 1..{len(sys.multiplicities)}, got {root_index}")
    return polyring.var(sys.base, f"alpha{root_index}")

def lambda_F_eval(surface, sys, root_index):
    alpha = _root(sys, root_index)
    if any(kind == OTHER for kind, _ in surface.components):
        return polyring.zero(sys.base)
    marked = [value for kind, value in surface.components if kind == MARKED_F]
    if len(marked) > 1:
        return polyring.zero(sys.base)

    value = (-alpha) ** marked[0] if marked else polyring.one(sys.base)
    g = frobenius.genus_term(sys)
    for kind, mark in surface.components:
        if kind == SPHERE:
            value = value * frobenius.epsilon(mark)
        elif kind == COMPRESSIBLE_TORUS:
            value = value * frobenius.epsilon(frobenius.a_mul(mark, g))
        elif kind != MARKED_F:
            raise ValueError(f"unknown surface kind: {kind}")
    return value

def neckcut_functional_check(multiplicities, root_index):
    sys = frobenius.specialize_roots(multiplicities)
    t = -_root(sys, root_index)
    n, a = sys.n, sys.pcoeffs

    neck = t ** (n-1) * n
    for j in range(n-1):
        neck = neck - a[n-2-j] * (j+1) * t ** j

    ring = t ** n
    for k in range(1, n+1):
        ring = ring - a[k-1] * t ** (n-k)
    return neck.is_zero() and ring.is_zero()

def tube_params(i):
    power = frobenius.g_power(SL2, 2*i)
    return TubeParams(frobenius.epsilon(power), frobenius.epsilon(frobenius.a_mul(SL2.x_power(1), power)))

class DependenceWitness():
    def __init__(self, lhs, rhs, steps):
        self.lhs = lhs
        self.rhs = rhs
        self.steps = steps

    @property
    def lhs_coefficient(self):
        return self.lhs.coefficient("ppp")

    @property
    def rhs_coefficient(self):
        return self.rhs.coefficient("p")

    def constrained(self):
        return eliminate(self.lhs_coefficient), eliminate(self.rhs_coefficient)

def dependence_witness(i, params):
    expected = tube_params(i)
    if params != expected:
        raise ParamsInconsistent(f"{params} differs from the genus-{2*i} values {expected}")
    ring = generic_ring(params)
    a1, a2 = ring.a1, ring.a2

    start = config_element("ppp", ring, a1 ** 2)
    step1 = expand_plain_pair(ring, "ppp", 0) * a1
    if step1.coefficient("dpp") != a1 * 2:
        raise utils.InternalInconsistency(f"unexpected expansion {step1}")
    step2 = expand_plain_pair(ring, "dpp", 1) * 2 + config_element("p", ring, -a1 * ring.t_plain)
    step3 = apply_relation(1, step2, 0, config="ddp")

    lhs = config_element("ppp", ring, a1 ** 2 + a2 * 4)
    rhs = config_element("p", ring, ring.t_dot * 4)
    if step3 + config_element("ppp", ring, a2 * 4) != rhs:
        raise utils.InternalInconsistency(f"derivation ends at {step3}")
    return DependenceWitness(lhs, rhs, (start, step1, step2, step3))
