"""Pure-Python Murnaghan-Nakayama kernel.

char_value(shape, cycles) returns the irreducible character of the
symmetric group indexed by `shape` (a descending tuple of positive ints)
at an element whose cycle lengths are `cycles` (a descending tuple with
the same sum).  Border strips are removed via beta-numbers: the beta-set
{shape[i] + (len-1-i)} loses a strip of size k by replacing one element b
with b-k; the sign is the parity of the number of beta elements jumped
over.  Results are memoized on (shape, cycles) across calls.
"""

_memo = {}


def char_value(shape, cycles):
    if sum(shape) != sum(cycles):
        raise ValueError(f"size mismatch: |{shape}| vs |{cycles}|")
    return _mn(shape, cycles)


def clear_cache():
    _memo.clear()


def cache_size():
    return len(_memo)


def _mn(shape, cycles):
    if not shape:
        return 1
    key = (shape, cycles)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    k = cycles[0]
    rest = cycles[1:]
    ell = len(shape)
    beta = [shape[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        jumped = sum(1 for c in beta if nb < c < b)
        sub = []
        for i, c in enumerate(sorted((nb if c == b else c for c in beta), reverse=True)):
            part = c - (ell - 1 - i)
            if part > 0:
                sub.append(part)
        value = _mn(tuple(sub), rest)
        total += -value if jumped % 2 else value
    _memo[key] = total
    return total
