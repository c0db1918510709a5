"""Partitions, cycle types, and conjugacy-class sizes of symmetric groups.

A partition is a weakly decreasing tuple of positive integers; the empty
partition is a first-class value.  Cycle types are sparse multisets
{length -> count} with sum(length * count) equal to the ambient degree m.
Both are immutable and hashable.
"""

from math import factorial

from .errors import ParseError


class Partition:
    """Weakly decreasing tuple of positive integers (possibly empty)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        self.parts = parts

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __le__(self, other):
        return self.parts <= other.parts

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return format_partition(self)

    def socle(self):
        """Drop the first row: (l1, l2, ..., lk) -> (l2, ..., lk)."""
        return Partition(self.parts[1:])

    def weight(self):
        """Size minus the first part; 0 for the empty partition."""
        return self.size - (self.parts[0] if self.parts else 0)

    def pad(self, m):
        """Prepend a row of m - |self| boxes, giving the partition of m with this socle.

        Requires m >= |self| + self[0], otherwise the result would not be
        weakly decreasing.
        """
        first = self.parts[0] if self.parts else 0
        if m - self.size < first:
            raise ValueError(
                f"padding too small: need m >= {self.size + first}, got {m}"
            )
        if m == self.size:
            # only reachable for the empty partition at m = 0
            return self
        return Partition((m - self.size,) + self.parts)

    def double_first(self):
        """Duplicate the first row: (l1, l2, ...) -> (l1, l1, l2, ...).

        The result has this partition as its socle.  Empty stays empty.
        """
        if not self.parts:
            return self
        return Partition((self.parts[0],) + self.parts)

    def cycle_type(self):
        """The cycle type whose cycle lengths are the parts of this partition."""
        return CycleType.from_cycles(self.parts)


def socle(lam):
    return lam.socle()


def weight(lam):
    return lam.weight()


def pad(lam, m):
    return lam.pad(m)


def parse_partition(text):
    """Parse comma-separated parts, e.g. '3,2,2'; '-' is the empty partition."""
    text = text.strip()
    if text == "-":
        return Partition()
    if not text:
        raise ParseError("empty partition is spelled '-'", 0)
    parts = []
    for pos, chunk in _split_with_positions(text, ","):
        if not chunk.strip().isdigit():
            raise ParseError(f"bad partition part {chunk.strip()!r}", pos)
        parts.append(int(chunk))
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def format_partition(lam):
    if not lam:
        return "-"
    return ",".join(str(p) for p in lam.parts)


def _split_with_positions(text, sep):
    pos = 0
    for chunk in text.split(sep):
        yield pos, chunk
        pos += len(chunk) + len(sep)


class CycleType:
    """Cycle type of a permutation of m letters: counts[i] i-cycles, sum i*counts[i] = m.

    Zero counts are never stored; the empty type is the type of the sole
    element of the symmetric group on zero letters.
    """

    __slots__ = ("m", "_counts")

    def __init__(self, counts, m=None):
        items = tuple(sorted((int(i), int(n)) for i, n in dict(counts).items() if n))
        for i, n in items:
            if i < 1 or n < 0:
                raise ValueError(f"bad cycle-type entry {i}^{n}")
        total = sum(i * n for i, n in items)
        if m is not None and m != total:
            raise ValueError(f"cycle type sums to {total}, expected m={m}")
        self.m = total
        self._counts = items

    @classmethod
    def from_cycles(cls, lengths):
        counts = {}
        for c in lengths:
            counts[c] = counts.get(c, 0) + 1
        return cls(counts)

    @classmethod
    def identity(cls, m):
        return cls({1: m} if m else {})

    def count(self, i):
        """Number of i-cycles, i.e. the value X_i at this class."""
        for j, n in self._counts:
            if j == i:
                return n
        return 0

    def items(self):
        return self._counts

    def cycles_desc(self):
        """Cycle lengths as a descending tuple, e.g. (2, 1, 1)."""
        out = []
        for i, n in reversed(self._counts):
            out.extend([i] * n)
        return tuple(out)

    def partition(self):
        return Partition(self.cycles_desc())

    def extend(self, m):
        """The same permutation viewed in a larger group: add m - self.m fixed points."""
        if m < self.m:
            raise ValueError(f"cannot extend type of {self.m} down to {m}")
        counts = dict(self._counts)
        counts[1] = counts.get(1, 0) + (m - self.m)
        return CycleType(counts)

    def __eq__(self, other):
        return isinstance(other, CycleType) and self._counts == other._counts

    def __hash__(self):
        return hash(self._counts)

    def __repr__(self):
        return f"CycleType({dict(self._counts)})"

    def __str__(self):
        return format_cycle_type(self)


def parse_cycle_type(text):
    """Parse space-separated 'i^n' factors, e.g. '1^2 2^1'; '-' is the empty type."""
    text = text.strip()
    if text == "-":
        return CycleType({})
    counts = {}
    pos = 0
    for tok in text.split():
        pos = text.index(tok, pos)
        if "^" in tok:
            base, _, exp = tok.partition("^")
        else:
            base, exp = tok, "1"
        if not base.isdigit() or not exp.isdigit():
            raise ParseError(f"bad cycle-type factor {tok!r}", pos)
        i, n = int(base), int(exp)
        if i < 1:
            raise ParseError(f"cycle lengths start at 1, got {i}", pos)
        if i in counts:
            raise ParseError(f"duplicate cycle length {i}", pos)
        if n:
            counts[i] = n
        pos += len(tok)
    return CycleType(counts)


def format_cycle_type(t):
    if not t.items():
        return "-"
    return " ".join(f"{i}^{n}" for i, n in t.items())


def partitions_of(m):
    """All partitions of m, in reverse-lexicographic order: (m) first, (1^m) last."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = []
    _gen_partitions(m, m, [], out)
    return out


def _gen_partitions(remaining, cap, prefix, out):
    if remaining == 0:
        out.append(Partition(prefix))
        return
    for p in range(min(cap, remaining), 0, -1):
        prefix.append(p)
        _gen_partitions(remaining - p, p, prefix, out)
        prefix.pop()


def cycle_types_of(m):
    """All cycle types of degree m, aligned with the partitions_of(m) order."""
    return [lam.cycle_type() for lam in partitions_of(m)]


def class_size(t):
    """Number of elements of S_m with cycle type t: m! / prod(i^n_i * n_i!)."""
    denom = 1
    for i, n in t.items():
        denom *= i**n * factorial(n)
    return factorial(t.m) // denom
