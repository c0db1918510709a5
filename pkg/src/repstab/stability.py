"""Empirical certification of the two stability ranks of a module family.

rank_rs_estimate finds the degree past which the socle-indexed
multiplicities of the family's decompositions stop changing (and the
occurring socles are admissible for that degree); rank_pc_estimate finds
the degree past which one fixed polynomial in the cycle-count variables
evaluates to the family's characters.  Both are certified only on the
scanned window [0, m_max]: the estimators verify, they do not prove.

The remaining operations exercise the structural facts relating the two
ranks: the evaluation map from weight-bounded polynomials to class
functions (image dimension and kernel triviality), minimality of the
module weight among representing-polynomial weights, stability of
trivial-isotypic multiplicities, the two-sided rank inequality, and
weight additivity of tensor products.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import decompose, inner_product, irr_character, trivial_character
from .cyclepoly import CharPolynomial, eval_rho, eval_rho_all, format_poly
from .fbmodules import (
    DEFAULT_BUDGET,
    DirectSum,
    VFamily,
    format_spec,
    module_weight,
    terms_at,
    character_at,
)
from .frobenius import frobenius_poly_of_module
from .partitions import cycle_types_of, format_partition, partitions_of


@dataclass
class StabilityReport:
    spec: object
    m_max: int
    rank_rs: int | None = None
    rank_pc: int | None = None
    poly: CharPolynomial | None = None
    stable_multiplicities: dict = field(default_factory=dict)
    bound_checks: list = field(default_factory=list)

    @property
    def certified_to(self):
        """Ranks are verified on [0, m_max] only; nothing beyond is claimed."""
        return self.m_max

    def all_bounds_hold(self):
        return all(ok for _, ok in self.bound_checks)

    def to_json_dict(self):
        return {
            "schema": 1,
            "spec": format_spec(self.spec),
            "m_max": self.m_max,
            "certified_to": self.certified_to,
            "rank_rs": self.rank_rs,
            "rank_pc": self.rank_pc,
            "poly": None if self.poly is None else format_poly(self.poly),
            "stable_multiplicities": [
                {"socle": format_partition(s), "mult": n}
                for s, n in sorted(
                    self.stable_multiplicities.items(), key=lambda kv: kv[0].parts
                )
            ],
            "bound_checks": [
                {"name": name, "ok": ok} for name, ok in self.bound_checks
            ],
        }


def rank_rs_estimate(spec, m_max, budget=DEFAULT_BUDGET):
    """Smallest N <= m_max from which the socle multiplicities are constant
    and every occurring socle s satisfies |s| + s_1 <= N.

    Returns (N, multiplicities) or None when no such N exists in the window.
    Constancy is only checked up to m_max.
    """
    maps = [
        terms_at(spec, m, budget).socle_multiplicities() for m in range(m_max + 1)
    ]
    stable = maps[m_max]
    start = m_max
    while start > 0 and maps[start - 1] == stable:
        start -= 1
    admissible = max(
        (s.size + (s.parts[0] if s else 0) for s in stable), default=0
    )
    n = max(start, admissible)
    if n > m_max:
        return None
    return n, stable


def rank_pc_estimate(spec, m_max, budget=DEFAULT_BUDGET):
    """Smallest N such that the module polynomial taken at m_max evaluates to
    the family's character on every degree in [N, m_max].

    Returns (N, P) or None ("not polynomial in the window") when the
    candidate already fails at m_max - 1.
    """
    poly = frobenius_poly_of_module(terms_at(spec, m_max, budget))
    n = m_max
    while n > 0 and eval_rho_all(poly, n - 1) == character_at(spec, n - 1, budget):
        n -= 1
    if n == m_max and m_max > 0:
        # re-derivation check: the polynomial taken one degree down must
        # disagree, else the failure would contradict its own construction
        other = frobenius_poly_of_module(terms_at(spec, m_max - 1, budget))
        assert other != poly
        return None
    return n, poly


def uniqueness_check(p, q, n, m_max, budget=DEFAULT_BUDGET):
    """Decide whether two candidate polynomials agree, by evaluation.

    Returns 'distinct' when some degree in [n, m_max] separates them,
    'equal' when they vanish jointly on the window and the kernel guard
    (both weights <= m_max / 2) makes that conclusive, and 'inconclusive'
    when the guard fails.
    """
    degw = max(p.weighted_degree(), q.weighted_degree())
    if 2 * degw > m_max or n > m_max:
        return "inconclusive"
    for m in range(n, m_max + 1):
        if not eval_rho_all(p - q, m).is_zero():
            return "distinct"
    # joint vanishing at m_max with weight <= m_max/2 forces equality
    assert p == q
    return "equal"


def weight_bounded_monomials(d):
    """The monomial basis of polynomials of weight <= d: one monomial
    X_1^{n_1} ... X_d^{n_d} per partition of size <= d."""
    monos = []
    for j in range(d + 1):
        for lam in partitions_of(j):
            counts = {}
            for part in lam:
                counts[part] = counts.get(part, 0) + 1
            monos.append(CharPolynomial({tuple(sorted(counts.items())): 1}))
    return monos


def matrix_rank(rows):
    """Rank of a rational matrix by exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rho_image_kernel(m, d):
    """Dimensions of the image and kernel of evaluation restricted to
    polynomials of weight <= d, on the classes of degree m."""
    monos = weight_bounded_monomials(d)
    types = cycle_types_of(m)
    rows = [[eval_rho(mono, t) for t in types] for mono in monos]
    image = matrix_rank(rows)
    return image, len(monos) - image


def low_weight_class_function_count(m, d):
    """Number of partitions of m of weight <= d: the dimension the image
    of the weight-restricted evaluation must hit."""
    return sum(1 for lam in partitions_of(m) if lam.weight() <= d)


def minimal_weight_check(dec, poly):
    """Check that a representing polynomial weighs at least the module, and
    that the module's own polynomial achieves the weight exactly.

    Raises when poly does not actually represent the character of dec.
    """
    if eval_rho_all(poly, dec.m) != dec.character():
        raise ValueError("polynomial does not represent the module character")
    if dec.is_zero():
        return True
    w = dec.module_weight()
    return (
        poly.weighted_degree() >= w
        and frobenius_poly_of_module(dec).weighted_degree() == w
    )


def scalar_stability_check(poly, m_range, budget=DEFAULT_BUDGET):
    """Trivial-isotypic multiplicities <1 | evaluation of poly> must be
    constant from the weight of poly on."""
    degw = poly.weighted_degree()
    tail = [
        inner_product(trivial_character(m), eval_rho_all(poly, m))
        for m in sorted(m_range)
        if m >= degw
    ]
    return len(set(tail)) <= 1


def verify_equivalence(spec, m_max, budget=DEFAULT_BUDGET):
    """Estimate both ranks and check every bound relating them.

    Bound checks (all certified on [0, m_max] only):
      - rank_pc <= rank_rs;
      - rank_rs <= max(rank_pc, 2 * weight of the polynomial);
      - from max(2 * weight, rank_pc) on, the module polynomial is the
        polynomial and the module weight equals its weight.
    """
    report = StabilityReport(spec=spec, m_max=m_max)
    rs = rank_rs_estimate(spec, m_max, budget)
    pc = rank_pc_estimate(spec, m_max, budget)
    if rs is not None:
        report.rank_rs, report.stable_multiplicities = rs
    if pc is not None:
        report.rank_pc, report.poly = pc
    if rs is None or pc is None:
        return report
    poly = report.poly
    two_d = 0 if poly.is_zero() else 2 * poly.weighted_degree()
    report.bound_checks.append(("rank_pc_le_rank_rs", report.rank_pc <= report.rank_rs))
    report.bound_checks.append(
        ("rank_rs_le_max_rank_pc_2degw", report.rank_rs <= max(report.rank_pc, two_d))
    )
    lo = max(two_d, report.rank_pc)
    poly_ok, weight_ok = True, True
    for m in range(lo, m_max + 1):
        dec = terms_at(spec, m, budget)
        if frobenius_poly_of_module(dec) != poly:
            poly_ok = False
        expected_w = 0 if poly.is_zero() else poly.weighted_degree()
        if module_weight(dec) != expected_w:
            weight_ok = False
    report.bound_checks.append(("poly_equals_module_polynomial", poly_ok))
    report.bound_checks.append(("module_weight_equals_poly_weight", weight_ok))
    return report


def reconstruct_stable_family(spec, m_max, budget=DEFAULT_BUDGET):
    """Rebuild the family as a direct sum of single-irreducible families.

    Anchors at M = max(2 * weight, rank_pc): each factor of the degree-M
    decomposition contributes one family labelled by its socle with the
    first part doubled, so that the rebuilt family reproduces the factor at
    every admissible degree.  Returns None when the family is not
    polynomially stable in the window or M exceeds it.
    """
    pc = rank_pc_estimate(spec, m_max, budget)
    if pc is None:
        return None
    n, poly = pc
    d = 0 if poly.is_zero() else poly.weighted_degree()
    anchor = max(2 * d, n)
    if anchor > m_max:
        return None
    children = []
    for mu, mult in terms_at(spec, anchor, budget).items():
        lam = mu.socle()
        children.extend([VFamily(lam.double_first())] * mult)
    return DirectSum(tuple(children))


def tensor_weight_check(lam, mu, m, budget=DEFAULT_BUDGET):
    """Weight bound for a tensor product of two padded irreducibles.

    The weight of the product module never exceeds |lam| + |mu|, and
    equals it once m >= 2 (|lam| + |mu|).  Raises when m is too small to
    pad either label.
    """
    for x in (lam, mu):
        first = x.parts[0] if x else 0
        if m < x.size + first:
            raise ValueError(
                f"m={m} too small to pad {format_partition(x)} (needs {x.size + first})"
            )
    product = irr_character(lam.pad(m)) * irr_character(mu.pad(m))
    w = decompose(product).module_weight()
    total = lam.size + mu.size
    if w > total:
        return False
    if m >= 2 * total and w != total:
        return False
    return True
