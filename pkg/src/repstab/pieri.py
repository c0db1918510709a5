"""Pieri's rule: decompositions of modules induced along a trivial factor.

Inducing the irreducible indexed by nu from degree n up to degree m
(tensored with the trivial module on the extra m - n letters) decomposes
multiplicity-free into the irreducibles whose diagrams add m - n boxes to
nu with no two boxes in the same column (a horizontal strip).  The socles
of the summands stop changing once m reaches |nu| + nu_1.
"""

from .characters import IrrDecomposition
from .partitions import Partition


def pieri_expand(nu, m):
    """Set of partitions of m obtained from nu by adding a horizontal strip.

    Each row may grow up to the length of the row above it in nu, and one
    new row of at most nu's last part may appear; this is exactly the
    no-two-boxes-in-a-column condition.
    """
    if m < nu.size:
        raise ValueError(f"cannot expand a partition of {nu.size} to smaller m={m}")
    results = set()
    rows = nu.parts
    ell = len(rows)

    def rec(i, prefix, remaining):
        if i == ell:
            if remaining == 0:
                results.add(Partition(prefix))
            elif ell == 0 or remaining <= rows[ell - 1]:
                # one new bottom row, no wider than the last row of nu
                if not prefix or remaining <= prefix[-1]:
                    results.add(Partition(prefix + [remaining]))
            return
        low = rows[i]
        high = rows[i - 1] if i > 0 else low + remaining
        if prefix:
            high = min(high, prefix[-1])
        for newlen in range(low, min(high, low + remaining) + 1):
            prefix.append(newlen)
            rec(i + 1, prefix, remaining - (newlen - low))
            prefix.pop()

    rec(0, [], m - nu.size)
    return results


def projective_terms(w, m):
    """Decomposition at degree m of the induced family built from w.

    Zero below the base degree of w; above it, the Pieri expansion of each
    factor of w, carried with its multiplicity (the construction is
    additive and exact).
    """
    if m < w.m:
        return IrrDecomposition(m)
    acc = {}
    for nu, mult in w.items():
        for mu in pieri_expand(nu, m):
            acc[mu] = acc.get(mu, 0) + mult
    return IrrDecomposition(m, acc)


def stable_socle_set(nu):
    """The socles appearing in every expansion of nu at and past |nu| + nu_1."""
    if not nu:
        raise ValueError("stable socle set needs a nonempty partition")
    m0 = nu.size + nu.parts[0]
    return {mu.socle() for mu in pieri_expand(nu, m0)}


def rank_rs_projective(lam):
    """Degree at which the induced family of the irreducible lam stabilizes."""
    if not lam:
        raise ValueError("needs a nonempty partition")
    return lam.size + lam.parts[0]
