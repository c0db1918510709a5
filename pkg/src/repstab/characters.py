"""Class functions of symmetric groups: irreducible characters, inner
products, and decomposition into irreducibles.

Character values come from the Murnaghan-Nakayama recursion; a compiled
kernel is used when the extension module is available, with a pure-Python
twin selected as fallback at import time.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from . import _mnpure
from .errors import BudgetError
from .partitions import (
    CycleType,
    class_size,
    cycle_types_of,
    format_cycle_type,
    parse_cycle_type,
    partitions_of,
)

try:
    from . import _mncore

    _HAVE_COMPILED = True
except ImportError:
    _mncore = None
    _HAVE_COMPILED = False

# the compiled kernel does its arithmetic in int64; character values of
# degrees up to this bound stay well inside that range
_COMPILED_MAX_DEGREE = 20

# direct enumeration of S_m stops being reasonable past this degree
INDUCTION_MAX_DEGREE = 8


def kernel_name():
    """Which Murnaghan-Nakayama kernel is active: 'compiled' or 'pure'."""
    return "compiled" if _HAVE_COMPILED else "pure"


def clear_caches():
    _mnpure.clear_cache()
    if _HAVE_COMPILED:
        _mncore.clear_cache()
    character_table.cache_clear()


def irr_char(lam, t):
    """Value of the irreducible character indexed by lam at cycle type t.

    Always an integer.  Raises ValueError when |lam| != t.m.
    """
    if lam.size != t.m:
        raise ValueError(f"degree mismatch: |lambda|={lam.size} but t is a type of {t.m}")
    cycles = t.cycles_desc()
    if _HAVE_COMPILED and t.m <= _COMPILED_MAX_DEGREE:
        return _mncore.char_value(lam.parts, cycles)
    return _mnpure.char_value(lam.parts, cycles)


def irr_dimension(lam):
    """Dimension of the irreducible module indexed by lam."""
    return irr_char(lam, CycleType.identity(lam.size))


@lru_cache(maxsize=64)
def character_table(m):
    """Full character table of degree m.

    Returns (types, {partition: tuple of integer values aligned with types}),
    rows and columns both in the partitions_of(m) order.
    """
    types = tuple(cycle_types_of(m))
    table = {
        lam: tuple(irr_char(lam, t) for t in types) for lam in partitions_of(m)
    }
    return types, table


class ClassFunction:
    """Exact-rational function on the conjugacy classes of a fixed degree m.

    Stores one value per cycle type of m.  Characters of actual
    representations take integer values, but arbitrary rational class
    functions are allowed.
    """

    __slots__ = ("m", "values")

    def __init__(self, m, values):
        self.m = m
        vals = {}
        for t, v in values.items():
            if t.m != m:
                raise ValueError(f"type {t} does not belong to degree {m}")
            vals[t] = Fraction(v)
        for t in cycle_types_of(m):
            vals.setdefault(t, Fraction(0))
        self.values = vals

    @classmethod
    def from_callable(cls, m, fn):
        return cls(m, {t: fn(t) for t in cycle_types_of(m)})

    @classmethod
    def zero(cls, m):
        return cls(m, {})

    def __call__(self, t):
        return self.values[t]

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.m == other.m
            and self.values == other.values
        )

    def __add__(self, other):
        self._check(other)
        return ClassFunction(
            self.m, {t: v + other.values[t] for t, v in self.values.items()}
        )

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(
            self.m, {t: v - other.values[t] for t, v in self.values.items()}
        )

    def __mul__(self, other):
        """Pointwise product (the character of a tensor product)."""
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(
                self.m, {t: v * other.values[t] for t, v in self.values.items()}
            )
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return ClassFunction(self.m, {t: v * c for t, v in self.values.items()})

    def is_zero(self):
        return all(v == 0 for v in self.values.values())

    def _check(self, other):
        if self.m != other.m:
            raise ValueError(f"degree mismatch: {self.m} vs {other.m}")

    def to_json_dict(self):
        return {
            "m": self.m,
            "values": [
                {"type": format_cycle_type(t), "value": str(self.values[t])}
                for t in cycle_types_of(self.m)
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        values = {
            parse_cycle_type(entry["type"]): Fraction(entry["value"])
            for entry in data["values"]
        }
        return cls(int(data["m"]), values)

    def __repr__(self):
        return f"ClassFunction(m={self.m})"


def irr_character(lam):
    """The irreducible character indexed by lam, as a ClassFunction."""
    m = lam.size
    return ClassFunction(m, {t: irr_char(lam, t) for t in cycle_types_of(m)})


def trivial_character(m):
    return ClassFunction(m, {t: 1 for t in cycle_types_of(m)})


class IrrDecomposition:
    """Multiset of irreducible factors of a module of degree m.

    Zero multiplicities are never stored; hashable and immutable.
    """

    __slots__ = ("m", "_items")

    def __init__(self, m, mults=()):
        self.m = m
        acc = {}
        for lam, n in dict(mults).items():
            n = int(n)
            if n < 0:
                raise ValueError(f"negative multiplicity {n} for {lam}")
            if lam.size != m:
                raise ValueError(f"{lam!r} is not a partition of {m}")
            if n:
                acc[lam] = acc.get(lam, 0) + n
        self._items = tuple(sorted(acc.items(), key=lambda kv: kv[0].parts, reverse=True))

    def items(self):
        return self._items

    def multiplicity(self, lam):
        for mu, n in self._items:
            if mu == lam:
                return n
        return 0

    def support(self):
        return tuple(lam for lam, _ in self._items)

    def is_zero(self):
        return not self._items

    def total_multiplicity(self):
        return sum(n for _, n in self._items)

    def dimension(self):
        return sum(n * irr_dimension(lam) for lam, n in self._items)

    def module_weight(self):
        """Largest weight among the factors; 0 for the zero module."""
        return max((lam.weight() for lam, _ in self._items), default=0)

    def socle_multiplicities(self):
        """Map socle -> multiplicity (socles of distinct factors never collide)."""
        return {lam.socle(): n for lam, n in self._items}

    def character(self):
        m = self.m
        vals = {t: 0 for t in cycle_types_of(m)}
        for lam, n in self._items:
            for t in vals:
                vals[t] += n * irr_char(lam, t)
        return ClassFunction(m, vals)

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError(f"degree mismatch: {self.m} vs {other.m}")
        acc = dict(self._items)
        for lam, n in other._items:
            acc[lam] = acc.get(lam, 0) + n
        return IrrDecomposition(self.m, acc)

    def scale(self, c):
        return IrrDecomposition(self.m, {lam: c * n for lam, n in self._items})

    def __eq__(self, other):
        return (
            isinstance(other, IrrDecomposition)
            and self.m == other.m
            and self._items == other._items
        )

    def __hash__(self):
        return hash((self.m, self._items))

    def __iter__(self):
        return iter(self._items)

    def __repr__(self):
        body = ", ".join(f"{lam}: {n}" for lam, n in self._items)
        return f"IrrDecomposition(m={self.m}, {{{body}}})"

    def to_json_dict(self):
        return {
            "m": self.m,
            "factors": [
                {"partition": str(lam), "mult": n} for lam, n in self._items
            ],
        }


def inner_product(f, g):
    """Scalar product sum_t |class(t)| f(t) g(t) / m!.

    In a symmetric group every element is conjugate to its inverse (they
    share a cycle type), so g(x^-1) = g(x) and no inverses are needed.
    """
    if f.m != g.m:
        raise ValueError(f"degree mismatch: {f.m} vs {g.m}")
    total = sum(class_size(t) * f.values[t] * g.values[t] for t in cycle_types_of(f.m))
    return Fraction(total, factorial(f.m))


def decompose(f):
    """Write the class function f as a sum of irreducible characters.

    Raises ValueError("not a character ...") when any extracted
    multiplicity is negative or non-integral.
    """
    m = f.m
    types, table = character_table(m)
    order = factorial(m)
    weights = [class_size(t) * f.values[t] for t in types]
    mults = {}
    for lam in partitions_of(m):
        row = table[lam]
        n = Fraction(sum(w * c for w, c in zip(weights, row)), order)
        if n.denominator != 1 or n < 0:
            raise ValueError(f"not a character: multiplicity of {lam} is {n}")
        if n:
            mults[lam] = int(n)
    return IrrDecomposition(m, mults)


def induce_bruteforce(chi, m, max_degree=INDUCTION_MAX_DEGREE):
    """Character of S_m induced from chi ⊠ trivial on (S_n x S_{m-n}).

    Deliberately naive: for each class representative g the whole of S_m is
    enumerated and chi is summed over the conjugates of g landing in the
    subgroup.  Serves as an oracle for the Pieri-rule path; refuses degrees
    past max_degree.  The enumeration tally for a given (n, m) is shared
    across calls, since it does not depend on chi.
    """
    n = chi.m
    if m < n:
        raise ValueError(f"cannot induce from degree {n} to smaller degree {m}")
    if m > max_degree:
        raise BudgetError(f"induction by enumeration capped at degree {max_degree}", m=m)
    if m == n:
        return ClassFunction(m, dict(chi.values))

    chi_by_lengths = {t.cycles_desc(): chi.values[t] for t in cycle_types_of(n)}
    subgroup_order = factorial(n) * factorial(m - n)
    values = {}
    for t, tally in _conjugation_tally(n, m).items():
        total = sum(count * chi_by_lengths[lengths] for lengths, count in tally.items())
        values[t] = Fraction(total, subgroup_order)
    return ClassFunction(m, values)


@lru_cache(maxsize=32)
def _conjugation_tally(n, m):
    """For each class of degree m: how many x in the whole group conjugate its
    representative into the (n, m-n) subgroup, bucketed by the cycle lengths
    of the first-block restriction.

    Membership and restriction only involve the first n positions of the
    conjugate, so only those are computed.
    """
    types = cycle_types_of(m)
    reps = [(t, _representative(t, m)) for t in types]
    tallies = {t: {} for t in types}
    block = range(n)
    for x in permutations(range(m)):
        xinv = [0] * m
        for i, xi in enumerate(x):
            xinv[xi] = i
        for t, g in reps:
            head = tuple(xinv[g[x[i]]] for i in block)
            if all(v < n for v in head):
                lengths = _cycle_lengths(head)
                tally = tallies[t]
                tally[lengths] = tally.get(lengths, 0) + 1
    return tallies


def _representative(t, m):
    p = list(range(m))
    start = 0
    for c in t.cycles_desc():
        for k in range(c):
            p[start + k] = start + (k + 1) % c
        start += c
    return tuple(p)


def _cycle_lengths(p):
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        count, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            count += 1
        out.append(count)
    return tuple(sorted(out, reverse=True))
