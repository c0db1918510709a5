"""Sparse polynomials in the cycle-count variables X_1, X_2, ... over Q.

The ring carries two gradings: the plain degree (deg X_i = 1) and the
weight (deg_w X_i = i).  Evaluation at a cycle type t substitutes
X_i := number of i-cycles of t; lifting the evaluation over every class
of a fixed degree m gives a class function.

Monomials are stored as tuples of (variable, exponent) pairs sorted by
variable index, with no zero exponents; coefficients are nonzero
Fractions.  The weight of the zero polynomial is the sentinel NEG_INF,
which compares below every integer.
"""

from fractions import Fraction
from math import factorial

from .characters import ClassFunction
from .errors import ParseError
from .partitions import cycle_types_of

NEG_INF = float("-inf")


class CharPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        clean = {}
        for mono, coef in dict(terms).items():
            coef = Fraction(coef)
            if coef == 0:
                continue
            mono = tuple(sorted((int(v), int(e)) for v, e in mono if e))
            for v, e in mono:
                if v < 1 or e < 1:
                    raise ValueError(f"bad monomial entry X{v}^{e}")
            clean[mono] = clean.get(mono, Fraction(0)) + coef
        self.terms = {m: c for m, c in clean.items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def variable(cls, i):
        if i < 1:
            raise ValueError("variables start at X1")
        return cls({((i, 1),): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    # -- ring structure ------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        acc = dict(self.terms)
        for mono, coef in other.terms.items():
            acc[mono] = acc.get(mono, Fraction(0)) + coef
        return CharPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return CharPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                c = c1 * c2
                if mono in acc:
                    acc[mono] += c
                else:
                    acc[mono] = c
        return CharPolynomial(acc)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        return CharPolynomial({m: v / c for m, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = CharPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CharPolynomial.constant(other)
        return isinstance(other, CharPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    # -- gradings -------------------------------------------------------

    def weighted_degree(self):
        """Weight deg_w with deg_w(X_i) = i; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(v * e for v, e in mono) for mono in self.terms)

    def degree(self):
        """Plain degree with deg(X_i) = 1; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e for _, e in mono) for mono in self.terms)

    def variables(self):
        return sorted({v for mono in self.terms for v, _ in mono})

    # -- evaluation -------------------------------------------------------

    def eval_counts(self, count_fn):
        """Evaluate with X_i := count_fn(i)."""
        total = Fraction(0)
        for mono, coef in self.terms.items():
            val = coef
            for v, e in mono:
                val *= Fraction(count_fn(v)) ** e
            total += val
        return total

    def substitute(self, mapping):
        """Substitute whole polynomials for variables: X_i := mapping[i].

        Variables absent from the mapping are kept.
        """
        total = CharPolynomial.zero()
        for mono, coef in self.terms.items():
            term = CharPolynomial.constant(coef)
            for v, e in mono:
                base = mapping.get(v)
                if base is None:
                    base = CharPolynomial.variable(v)
                term = term * base**e
            total = total + term
        return total

    def __repr__(self):
        return f"CharPolynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(x):
    if isinstance(x, CharPolynomial):
        return x
    return CharPolynomial.constant(x)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for v, e in m2:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


X = CharPolynomial.variable


def falling_factorial(p, k):
    """p (p-1) ... (p-k+1) in the polynomial ring; 1 for k = 0."""
    out = CharPolynomial.one()
    for t in range(k):
        out = out * (p - t)
    return out


def binomial_poly(p, k):
    """The degree-k polynomial 'p choose k' = p(p-1)...(p-k+1)/k!."""
    return falling_factorial(p, k) / factorial(k)


def eval_rho(poly, t):
    """Evaluate at the cycle type t: X_i := number of i-cycles of t."""
    return poly.eval_counts(t.count)


def eval_rho_all(poly, m):
    """Lift evaluation over every cycle type of degree m into a ClassFunction."""
    return ClassFunction(m, {t: eval_rho(poly, t) for t in cycle_types_of(m)})


def weighted_degree(poly):
    return poly.weighted_degree()


def kernel_relations(m):
    """Generators of relations that vanish on every class of degree m.

    The linear relation X_1 + 2 X_2 + ... + m X_m - m, and for each i the
    falling factorial X_i (X_i - 1) ... (X_i - floor(m/i)).
    """
    linear = sum((i * X(i) for i in range(1, m + 1)), CharPolynomial.zero()) - m
    rels = [linear]
    for i in range(1, m + 1):
        rels.append(falling_factorial(X(i), m // i + 1))
    return rels


def class_indicator(t):
    """A polynomial whose evaluation is 1 on the class of t and 0 on every
    other class of the same degree.

    Built as the product over i of the Lagrange-style factors
    D_k(X_i) = R_k(X_i) / R_k(k) with R_k(Z) = prod_{j != k} (Z - j),
    where k is the number of i-cycles of t and j ranges over the values
    X_i can take on degree m, i.e. 0..floor(m/i).
    """
    m = t.m
    out = CharPolynomial.one()
    for i in range(1, m + 1):
        out = out * _lagrange_factor(X(i), t.count(i), m // i)
    return out


def _lagrange_factor(z, k, span):
    num = CharPolynomial.one()
    den = Fraction(1)
    for j in range(span + 1):
        if j == k:
            continue
        num = num * (z - j)
        den *= k - j
    return num / den


# -- printing and parsing ---------------------------------------------------


def _mono_sort_key(mono):
    degw = sum(v * e for v, e in mono)
    return (-degw, mono)


def format_poly(poly):
    """Deterministic text form: monomials graded by weight (descending),
    ties broken lexicographically by variable index."""
    if not poly.terms:
        return "0"
    pieces = []
    for mono in sorted(poly.terms, key=_mono_sort_key):
        coef = poly.terms[mono]
        body = "*".join(f"X{v}" + (f"^{e}" if e > 1 else "") for v, e in mono)
        mag = abs(coef)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not pieces:
            pieces.append(text if coef > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if coef > 0 else f"- {text}")
    return " ".join(pieces)


class _PolyParser:
    """Recursive-descent parser for the polynomial grammar.

    poly   := ['-'] term (('+'|'-') term)*
    term   := coef ['*' mono] | mono
    coef   := INT ['/' INT]
    mono   := factor ('*' factor)*
    factor := 'X' INT ['^' INT]
    """

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def parse(self):
        poly = CharPolynomial.zero()
        self._skip_ws()
        if self._eof():
            raise ParseError("empty polynomial", self.pos)
        sign = self._read_sign(optional=True)
        poly = poly + sign * self._term()
        self._skip_ws()
        while not self._eof():
            sign = self._read_sign(optional=False)
            poly = poly + sign * self._term()
            self._skip_ws()
        return poly

    def _term(self):
        self._skip_ws()
        if self._peek().isdigit():
            coef = self._coef()
            self._skip_ws()
            if self._peek() == "*":
                self.pos += 1
                return coef * self._mono()
            return CharPolynomial.constant(coef)
        return self._mono()

    def _coef(self):
        num = self._int()
        self._skip_ws()
        if self._peek() == "/":
            self.pos += 1
            self._skip_ws()
            start = self.pos
            den = self._int()
            if den == 0:
                raise ParseError("zero denominator", start)
            return Fraction(num, den)
        return Fraction(num)

    def _mono(self):
        out = self._factor()
        self._skip_ws()
        while self._peek() == "*":
            self.pos += 1
            out = out * self._factor()
            self._skip_ws()
        return out

    def _factor(self):
        self._skip_ws()
        if self._peek() != "X":
            raise ParseError(f"expected variable, found {self._peek()!r}", self.pos)
        self.pos += 1
        start = self.pos
        idx = self._int()
        if idx < 1:
            raise ParseError("variables start at X1", start)
        exp = 1
        self._skip_ws()
        if self._peek() == "^":
            self.pos += 1
            self._skip_ws()
            exp = self._int()
            if exp < 1:
                raise ParseError("exponents must be positive", self.pos)
        return CharPolynomial({((idx, exp),): 1})

    def _int(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected integer, found {self._peek()!r}", start)
        return int(self.text[start : self.pos])

    def _read_sign(self, optional):
        self._skip_ws()
        ch = self._peek()
        if ch == "+":
            self.pos += 1
            return 1
        if ch == "-":
            self.pos += 1
            return -1
        if optional:
            return 1
        raise ParseError(f"expected '+' or '-', found {ch!r}", self.pos)

    def _peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _eof(self):
        return self.pos >= len(self.text)

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1


def parse_poly(text):
    """Parse the grammar of format_poly; whitespace is insignificant."""
    return _PolyParser(text).parse()
