"""Symbolic families of symmetric-group modules, one S_m-module per degree m.

A family is described by a finite tree of constructors: induced
(projective) families, the single-irreducible families V, permutation
modules on cycles, tensor products, direct sums, degree truncation, and
weight truncation.  Evaluating a family at a degree m yields its
decomposition into irreducibles (terms_at) or its character
(character_at).  Decompositions require enumerating all partitions of m,
so evaluation is guarded by an explicit degree budget.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characters import ClassFunction, IrrDecomposition, decompose
from .cyclepoly import CharPolynomial, X, eval_rho_all, falling_factorial
from .errors import BudgetError, ParseError
from .partitions import Partition, format_partition, parse_partition
from .pieri import projective_terms

DEFAULT_BUDGET = 14


# -- family constructors ------------------------------------------------------


@dataclass(frozen=True)
class Projective:
    """Induced family: zero below the base degree, Pieri expansion above."""

    base: IrrDecomposition


@dataclass(frozen=True)
class VFamily:
    """Family with a single irreducible term per degree.

    convention 'socle' (default): at degree m >= |lam| the term is the
    irreducible whose socle is the socle of lam (first row re-grown).
    convention 'padded': at degree m >= |lam| + lam_1 the term is the
    irreducible whose socle is lam itself; zero below that.
    """

    lam: Partition
    convention: str = "socle"

    def __post_init__(self):
        if self.convention not in ("socle", "padded"):
            raise ValueError(f"unknown convention {self.convention!r}")


@dataclass(frozen=True)
class CycleModule:
    """Permutation module on tuples of disjoint-length cycles: one tensor
    factor per part of nu, the part being the cycle length."""

    nu: Partition

    def __post_init__(self):
        if not self.nu:
            raise ValueError("cycle module needs a nonempty partition")


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@dataclass(frozen=True)
class DirectSum:
    children: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True)
class Truncate:
    """Zero out every degree below the cutoff."""

    child: object
    cutoff: int


@dataclass(frozen=True)
class WeightTruncateLE:
    """Keep only irreducible factors of weight <= p."""

    child: object
    p: int


@dataclass(frozen=True)
class WeightTruncateGT:
    """Keep only irreducible factors of weight > p."""

    child: object
    p: int


# -- evaluation ---------------------------------------------------------------


def terms_at(spec, m, budget=DEFAULT_BUDGET):
    """Decomposition into irreducibles of the family at degree m."""
    _check_budget(m, budget)
    return _terms(spec, m)


def character_at(spec, m, budget=DEFAULT_BUDGET):
    """Character of the family at degree m.

    Cycle modules evaluate their cycle-count polynomial directly and tensor
    products multiply the factors' characters, keeping those paths
    independent of the decomposition route.
    """
    _check_budget(m, budget)
    return _character(spec, m)


def dimension_at(spec, m, budget=DEFAULT_BUDGET):
    """Dimension at degree m: the character value on the identity class."""
    from .partitions import CycleType

    val = character_at(spec, m, budget).values[CycleType.identity(m)]
    assert val.denominator == 1 and val >= 0
    return int(val)


def _check_budget(m, budget):
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m > budget:
        raise BudgetError(
            f"degree {m} exceeds the enumeration budget {budget}", m=m
        )


@lru_cache(maxsize=None)
def _terms(spec, m):
    match spec:
        case Projective(base=w):
            return projective_terms(w, m)
        case VFamily(lam=lam, convention=conv):
            if conv == "socle":
                if m < lam.size:
                    return IrrDecomposition(m)
                return IrrDecomposition(m, {lam.socle().pad(m): 1})
            first = lam.parts[0] if lam else 0
            if m < lam.size + first:
                return IrrDecomposition(m)
            return IrrDecomposition(m, {lam.pad(m): 1})
        case CycleModule():
            return decompose(_character(spec, m))
        case Tensor():
            return decompose(_character(spec, m))
        case DirectSum(children=children):
            total = IrrDecomposition(m)
            for child in children:
                total = total + _terms(child, m)
            return total
        case Truncate(child=child, cutoff=cutoff):
            if m < cutoff:
                return IrrDecomposition(m)
            return _terms(child, m)
        case WeightTruncateLE(child=child, p=p):
            return weight_truncate(_terms(child, m), p)[1]
        case WeightTruncateGT(child=child, p=p):
            return weight_truncate(_terms(child, m), p)[0]
    raise TypeError(f"not a family constructor: {spec!r}")


@lru_cache(maxsize=None)
def _character(spec, m):
    match spec:
        case CycleModule(nu=nu):
            return eval_rho_all(cycle_poly_product(nu), m)
        case Tensor(left=left, right=right):
            return _character(left, m) * _character(right, m)
        case DirectSum(children=children):
            total = ClassFunction.zero(m)
            for child in children:
                total = total + _character(child, m)
            return total
        case _:
            return _terms(spec, m).character()


# -- cycle-count polynomials --------------------------------------------------


def _totient(n):
    count = 0
    for k in range(1, n + 1):
        a, b = k, n
        while b:
            a, b = b, a % b
        if a == 1:
            count += 1
    return count


def cycle_poly(ell):
    """Polynomial counting the ell-cycles commuting with a permutation.

    phi(ell) X_ell plus, for each proper divisor d of ell with e = ell/d,
    phi(d) d^e / ell times the falling factorial X_d (X_d-1) ... (X_d-e+1);
    phi is Euler's totient.  Weight ell, independent of the group degree.
    """
    if ell < 1:
        raise ValueError("cycle length must be positive")
    out = _totient(ell) * X(ell)
    for d in range(1, ell):
        if ell % d:
            continue
        e = ell // d
        coef = Fraction(_totient(d) * d**e, ell)
        out = out + coef * falling_factorial(X(d), e)
    return out


def cycle_poly_product(nu):
    """Product of cycle_poly over the parts of nu: the character polynomial
    of the corresponding tensor product of cycle modules."""
    out = CharPolynomial.one()
    for part in nu:
        out = out * cycle_poly(part)
    return out


def cycle_module_char(nu, m):
    """Character at degree m of the cycle module indexed by nu (nonempty)."""
    if not nu:
        raise ValueError("cycle module needs a nonempty partition")
    return eval_rho_all(cycle_poly_product(nu), m)


def express_X_in_E(n):
    """Invert the triangular system expressing cycle counts.

    Returns [Q_1, ..., Q_n]: Q_l is a polynomial of weight l whose
    variables stand for the cycle polynomials E_1..E_l, such that
    substituting E_i for the i-th variable recovers X_l identically.
    """
    qs = []
    for ell in range(1, n + 1):
        expr = X(ell)
        for d in range(1, ell):
            if ell % d:
                continue
            e = ell // d
            coef = Fraction(_totient(d) * d**e, ell)
            expr = expr - coef * falling_factorial(qs[d - 1], e)
        qs.append(expr / _totient(ell))
    return qs


# -- weights ------------------------------------------------------------------


def module_weight(dec):
    """Largest weight among the factors of a decomposition; 0 if zero module."""
    return dec.module_weight()


def weight_truncate(dec, p):
    """Split a decomposition by factor weight: (weight > p, weight <= p)."""
    gt = {lam: n for lam, n in dec.items() if lam.weight() > p}
    le = {lam: n for lam, n in dec.items() if lam.weight() <= p}
    return IrrDecomposition(dec.m, gt), IrrDecomposition(dec.m, le)


# -- the expression language ---------------------------------------------------


def format_spec(spec):
    """Canonical text form of a family; parse_spec inverts it."""
    match spec:
        case Projective(base=w):
            parts = " ".join(
                f'"{format_partition(lam)}"'
                for lam, n in w.items()
                for _ in range(n)
            )
            return f"(proj {w.m} {parts})" if parts else f"(proj {w.m})"
        case VFamily(lam=lam, convention=conv):
            suffix = "" if conv == "socle" else " padded"
            return f"(vfam {format_partition(lam)}{suffix})"
        case CycleModule(nu=nu):
            return "(cycle " + " ".join(str(p) for p in nu) + ")"
        case Tensor(left=left, right=right):
            return f"(tensor {format_spec(left)} {format_spec(right)})"
        case DirectSum(children=children):
            inner = " ".join(format_spec(c) for c in children)
            return f"(sum {inner})" if inner else "(sum)"
        case Truncate(child=child, cutoff=cutoff):
            return f"(trunc>= {cutoff} {format_spec(child)})"
        case WeightTruncateLE(child=child, p=p):
            return f"(wtrunc<= {p} {format_spec(child)})"
        case WeightTruncateGT(child=child, p=p):
            return f"(wtrunc> {p} {format_spec(child)})"
    raise TypeError(f"not a family constructor: {spec!r}")


def parse_spec(text):
    """Parse the s-expression family language, e.g.
    (tensor (vfam 1) (vfam 1)), (cycle 2 1), (proj 3 "2,1"),
    (trunc>= 5 (cycle 2)), (wtrunc<= 1 (proj 2 "1,1")), (sum ...)."""
    tokens = _tokenize_spec(text)
    spec, rest = _parse_node(tokens)
    if rest:
        raise ParseError("trailing input after expression", rest[0][1])
    return spec


def _tokenize_spec(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        elif ch == '"':
            j = text.find('"', i + 1)
            if j < 0:
                raise ParseError("unterminated string", i)
            tokens.append(("str:" + text[i + 1 : j], i))
            i = j + 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in '()"':
                j += 1
            tokens.append(("atom:" + text[i:j], i))
            i = j
    return tokens


def _parse_node(tokens):
    if not tokens:
        raise ParseError("unexpected end of input", 0)
    tok, pos = tokens[0]
    if tok != "(":
        raise ParseError(f"expected '(' to open an expression", pos)
    if len(tokens) < 2 or not tokens[1][0].startswith("atom:"):
        raise ParseError("expected a constructor name", pos)
    head = tokens[1][0][5:]
    rest = tokens[2:]
    args = []
    while rest and rest[0][0] != ")":
        if rest[0][0] == "(":
            node, rest = _parse_node(rest)
            args.append(node)
        else:
            args.append(rest[0])
            rest = rest[1:]
    if not rest:
        raise ParseError("missing ')'", pos)
    rest = rest[1:]  # drop ')'
    return _build_node(head, args, pos), rest


def _atom(arg, default_pos):
    if isinstance(arg, tuple) and isinstance(arg[0], str) and arg[0].startswith("atom:"):
        return arg[0][5:], arg[1]
    raise ParseError("expected a plain atom", default_pos)


def _build_node(head, args, pos):
    def want_int(arg):
        text, p = _atom(arg, pos)
        if not (text.isdigit() or (text[:1] == "-" and text[1:].isdigit())):
            raise ParseError(f"expected an integer, got {text!r}", p)
        return int(text)

    def want_partition(arg):
        if isinstance(arg, tuple) and arg[0].startswith("str:"):
            return parse_partition(arg[0][4:])
        text, _ = _atom(arg, pos)
        return parse_partition(text)

    def want_spec(arg):
        if isinstance(arg, tuple):
            raise ParseError("expected a sub-expression", arg[1])
        return arg

    if head == "proj":
        if not args:
            raise ParseError("(proj n \"parts\" ...) needs a degree", pos)
        n = want_int(args[0])
        mults = {}
        for arg in args[1:]:
            lam = want_partition(arg)
            mults[lam] = mults.get(lam, 0) + 1
        try:
            base = IrrDecomposition(n, mults)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
        return Projective(base)
    if head == "vfam":
        if not args:
            raise ParseError("(vfam parts [padded]) needs a partition", pos)
        lam = want_partition(args[0])
        conv = "socle"
        if len(args) > 1:
            conv, p = _atom(args[1], pos)
            if conv not in ("socle", "padded"):
                raise ParseError(f"unknown convention {conv!r}", p)
        if len(args) > 2:
            raise ParseError("too many arguments to vfam", pos)
        return VFamily(lam, conv)
    if head == "cycle":
        if not args:
            raise ParseError("(cycle parts...) needs at least one part", pos)
        parts = sorted((want_int(a) for a in args), reverse=True)
        try:
            return CycleModule(Partition(parts))
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
    if head == "tensor":
        if len(args) != 2:
            raise ParseError("(tensor a b) takes exactly two factors", pos)
        return Tensor(want_spec(args[0]), want_spec(args[1]))
    if head == "sum":
        return DirectSum(tuple(want_spec(a) for a in args))
    if head == "trunc>=":
        if len(args) != 2:
            raise ParseError("(trunc>= n expr) takes a cutoff and a family", pos)
        return Truncate(want_spec(args[1]), want_int(args[0]))
    if head == "wtrunc<=":
        if len(args) != 2:
            raise ParseError("(wtrunc<= p expr) takes a bound and a family", pos)
        return WeightTruncateLE(want_spec(args[1]), want_int(args[0]))
    if head == "wtrunc>":
        if len(args) != 2:
            raise ParseError("(wtrunc> p expr) takes a bound and a family", pos)
        return WeightTruncateGT(want_spec(args[1]), want_int(args[0]))
    raise ParseError(f"unknown constructor {head!r}", pos)
