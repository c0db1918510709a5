# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Murnaghan-Nakayama kernel; same contract as _mnpure.

Shapes are carried as 64-bit abacus masks: with a fixed number of beads
L, bit (part_i + L - 1 - i) is set for each of the L rows (absent rows
count as zero parts).  Removing a border strip of size k moves one bead
down k positions onto a free slot; the sign is the parity of the beads
strictly in between.  Values are C int64, which holds every character
of degree <= 20 (the caller keeps larger degrees on the pure kernel);
memo tables are per cycle-suffix dicts keyed by the mask.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

cdef dict _suffix_memos = {}
cdef dict _memo_lists = {}

DEF BEADS = 32
DEF ERRVAL = -9223372036854775807


def char_value(tuple shape, tuple cycles):
    cdef long long total = 0, csum = 0
    cdef Py_ssize_t i, ell = len(shape)
    for i in range(ell):
        total += <long long> shape[i]
    for i in range(len(cycles)):
        csum += <long long> cycles[i]
    if total != csum:
        raise ValueError(f"size mismatch: |{shape}| vs |{cycles}|")
    if ell > BEADS or (ell and <long long> shape[0] + BEADS - 1 >= 64):
        raise ValueError("shape too large for the compiled kernel")

    cdef unsigned long long mask = 0
    for i in range(BEADS):
        if i < ell:
            mask |= 1ULL << ((<unsigned long long> shape[i]) + BEADS - 1 - i)
        else:
            mask |= 1ULL << (BEADS - 1 - i)

    memos = _memo_lists.get(cycles)
    if memos is None:
        memos = []
        for i in range(len(cycles) + 1):
            suffix = cycles[i:]
            table = _suffix_memos.get(suffix)
            if table is None:
                table = {}
                _suffix_memos[suffix] = table
            memos.append(table)
        _memo_lists[cycles] = memos
    return _mn(mask, cycles, 0, memos)


def clear_cache():
    _suffix_memos.clear()
    _memo_lists.clear()


def cache_size():
    cdef long long n = 0
    for table in _suffix_memos.values():
        n += len(table)
    return n


cdef long long _mn(
    unsigned long long mask, tuple cycles, Py_ssize_t depth, list memos
) except? ERRVAL:
    if depth == len(cycles):
        return 1
    cdef dict memo = <dict> memos[depth]
    cached = memo.get(mask)
    if cached is not None:
        return cached

    cdef int k = <int> cycles[depth]
    cdef long long total = 0, value
    cdef int b, nb
    cdef unsigned long long bit, between
    for b in range(k, 64):
        bit = 1ULL << b
        if not mask & bit:
            continue
        nb = b - k
        if mask & (1ULL << nb):
            continue
        # beads strictly between positions nb and b
        between = mask & ((bit - 1) ^ ((2ULL << nb) - 1))
        value = _mn(mask ^ bit ^ (1ULL << nb), cycles, depth + 1, memos)
        if __builtin_popcountll(between) & 1:
            total -= value
        else:
            total += value
    memo[mask] = total
    return total
