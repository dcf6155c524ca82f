"""
Tableau-sum T-functions.

- box_X / box_Xbar / box_Xconj: the single-box ratios of shifted Q's
- tab_sum_F / tab_sum_Fbar: sums over admissible tableaux of products of boxes
- jacobi_trudi: the same functions as determinants of one-row or one-column sums
- normalized_F / normalized_Fbar and their rectangular versions with boundary values

Every function takes a QFamily. For unbarred formulas it is the Q view of the
hierarchy, for barred ones the Qbar view; tableau_family() hands out the right one.
Values are RationalFn; sums go through factored_sum so each tableau contributes a
monomial in shifted Q's over one shared denominator.
"""

import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Tuple

from ..diagrams import GradedTuple, Partition, SkewDiagram, enumerate_admissible
from ..errors import ConventionError
from ..exact_arith import ONE, ZERO, RationalFn, det, factored_sum
from ..qhierarchy import QFamily, QHierarchy
from . import shifts

logger = logging.getLogger(__name__)

Factors = Dict[Hashable, int]


def tableau_family(h: QHierarchy, barred: bool = False, sample: Optional[Fraction] = None) -> QFamily:
    """Q view for unbarred F's on an unbarred hierarchy, Qbar view for barred F's on a
    barred one."""
    if barred != h.barred:
        side = "barred" if barred else "unbarred"
        raise ConventionError(f"normalized {side} F-functions need a {side} hierarchy, got {h.convention}")
    return h.bar_family(sample) if barred else h.family(sample)


# ------------------------------ boxes ------------------------------


def _box(fam: QFamily, tup: GradedTuple, shift: int) -> Tuple[Fraction, Factors]:
    """z_{gamma_K} and the Q factors of X_tup(x t^shift)."""
    tw = fam.twist
    K = len(tup)
    head = tup.prefix(K - 1)
    p = tup.p(K)
    (a_num, b_num), (a_den, b_den) = shifts.box(head.grading_sum(), tup.grading_sum(), p, tw.M, tw.N)
    factors: Factors = Counter()
    factors[(head.mask(), shift + a_num)] += 1
    factors[(tup.mask(), shift + b_num)] += 1
    factors[(head.mask(), shift + a_den)] -= 1
    factors[(tup.mask(), shift + b_den)] -= 1
    return tw.zeta(tup.indices[-1]), factors


def _box_bar(fam: QFamily, tup: GradedTuple, shift: int) -> Tuple[Fraction, Factors]:
    tw = fam.twist
    tail = tup.suffix_from(2)
    p = tup.p(1)
    (a_num, b_num), (a_den, b_den) = shifts.box_bar(tail.grading_sum(), tup.grading_sum(), p, tw.M, tw.N)
    factors: Factors = Counter()
    factors[(tail.mask(), shift + a_num)] += 1
    factors[(tup.mask(), shift + b_num)] += 1
    factors[(tail.mask(), shift + a_den)] -= 1
    factors[(tup.mask(), shift + b_den)] -= 1
    return tw.zeta(tup.indices[0]), factors


def _resolver(fam: QFamily):
    return lambda key: fam.q(key[0], key[1])


def box_X(fam: QFamily, tup: GradedTuple, shift: int = 0) -> RationalFn:
    """X_tup(x t^shift) on the Q view."""
    if not len(tup):
        raise ValueError("box needs a nonempty tuple")
    z, factors = _box(fam, tup, shift)
    return factored_sum([(z, factors)], _resolver(fam))


def box_Xbar(fam: QFamily, tup: GradedTuple, shift: int = 0) -> RationalFn:
    """Xbar_tup(x t^shift) on the Qbar view."""
    if not len(tup):
        raise ValueError("box needs a nonempty tuple")
    z, factors = _box_bar(fam, tup, shift)
    return factored_sum([(z, factors)], _resolver(fam))


def box_Xconj(h: QHierarchy, tup: GradedTuple, shift: int = 0) -> RationalFn:
    """Box of the conjugated data (z -> 1/z, shifts reversed)."""
    return box_X(h.conjugated().family(), tup, shift)


# ------------------------------ tableau sums ------------------------------


def _tab_terms(fam: QFamily, tup: GradedTuple, d: SkewDiagram, shift: int, barred: bool):
    tw = fam.twist
    m, n = tup.m, tup.n
    cell_shift = shifts.tableau_cell_bar if barred else shifts.tableau_cell
    # boxes depend only on the entry, so build them once per entry and shift them per cell
    heads = {}
    for pos in range(1, len(tup) + 1):
        sub = tup.suffix_from(pos) if barred else tup.prefix(pos)
        z, factors = (_box_bar if barred else _box)(fam, sub, 0)
        heads[pos] = (tup.p(pos) * z, factors)
    offsets = {cell: shift + cell_shift(d.outer, cell[0], cell[1], m, n, tw.M, tw.N) for cell in d.cells()}
    for tab in enumerate_admissible(tup, d):
        coeff = Fraction(1)
        factors: Factors = Counter()
        for cell, pos in tab.as_dict().items():
            c, box_factors = heads[pos]
            coeff *= c
            k = offsets[cell]
            for (mask, base), e in box_factors.items():
                factors[(mask, base + k)] += e
        yield coeff, factors


def _tab_sum(fam: QFamily, tup: GradedTuple, d: SkewDiagram, shift: int, barred: bool) -> RationalFn:
    key = ("Fbar" if barred else "F", tup.indices, d.outer.parts, d.inner.parts, shift)
    hit = fam.cache.get(key)
    if hit is not None:
        return hit
    if d.size == 0:
        value = RationalFn(ONE)
    elif not len(tup):
        value = RationalFn(ZERO)
    else:
        value = factored_sum(_tab_terms(fam, tup, d, shift, barred), _resolver(fam))
    fam.cache[key] = value
    return value


def tab_sum_F(fam: QFamily, tup: GradedTuple, d: SkewDiagram, shift: int = 0) -> RationalFn:
    """Unnormalized F_d over the tuple, at x t^shift, on a Q view."""
    return _tab_sum(fam, tup, d, shift, barred=False)


def tab_sum_Fbar(fam: QFamily, tup: GradedTuple, d: SkewDiagram, shift: int = 0) -> RationalFn:
    """Unnormalized Fbar_d over the tuple, at x t^shift, on a Qbar view."""
    return _tab_sum(fam, tup, d, shift, barred=True)


# ------------------------------ Jacobi-Trudi ------------------------------

AXES = ("row", "column")


def one_column(fam: QFamily, tup: GradedTuple, length: int, shift: int, barred: bool = False) -> RationalFn:
    """F_{(1^length)}: zero for negative length, one for length zero."""
    if length < 0:
        return RationalFn(ZERO)
    return _tab_sum(fam, tup, SkewDiagram(Partition.rectangle(length, 1)), shift, barred)


def one_row(fam: QFamily, tup: GradedTuple, length: int, shift: int, barred: bool = False) -> RationalFn:
    """F_{(length)}: zero for negative length, one for length zero."""
    if length < 0:
        return RationalFn(ZERO)
    return _tab_sum(fam, tup, SkewDiagram(Partition.rectangle(1, length)), shift, barred)


def jacobi_trudi_matrix(
    fam: QFamily, tup: GradedTuple, d: SkewDiagram, axis: str = "row", shift: int = 0, barred: bool = False
) -> List[List[RationalFn]]:
    mu, lam = d.outer, d.inner
    if axis == "column":
        size = mu.width
        return [
            [
                one_column(fam, tup, mu.col(i) - lam.col(j) - i + j,
                           shift + shifts.column_generator(mu, lam, i, j), barred)
                for j in range(1, size + 1)
            ]
            for i in range(1, size + 1)
        ]
    if axis == "row":
        size = mu.height
        return [
            [
                one_row(fam, tup, mu.row(j) - lam.row(i) + i - j,
                        shift + shifts.row_generator(mu, lam, i, j), barred)
                for j in range(1, size + 1)
            ]
            for i in range(1, size + 1)
        ]
    raise ValueError(f"axis must be one of {AXES}, got {axis!r}")


def jacobi_trudi(
    fam: QFamily, tup: GradedTuple, d: SkewDiagram, axis: str = "row", shift: int = 0, barred: bool = False
) -> RationalFn:
    """Determinant of one-row (axis='row', mu'_1 x mu'_1) or one-column
    (axis='column', mu_1 x mu_1) tableau sums; equals the tableau sum over d."""
    return det(jacobi_trudi_matrix(fam, tup, d, axis, shift, barred))


# ------------------------------ normalized F ------------------------------


def normalized_F(fam: QFamily, tup: GradedTuple, mu: Partition, shift: int = 0, route: str = "tab") -> RationalFn:
    """Q_tup times the tableau sum over the rotated diagram.

    route='tab' sums tableaux, 'row'/'column' use the Jacobi-Trudi determinants.
    """
    d = SkewDiagram(mu).rotate180()
    prefactor = fam.q(tup.mask(), shift + shifts.normalization(mu, tup.m, tup.n))
    if route == "tab":
        body = tab_sum_F(fam, tup, d, shift)
    else:
        body = jacobi_trudi(fam, tup, d, route, shift)
    return body * prefactor


def normalized_Fbar(fam: QFamily, tup: GradedTuple, mu: Partition, shift: int = 0, route: str = "tab") -> RationalFn:
    """Qbar_tup times the barred tableau sum over mu itself."""
    d = SkewDiagram(mu)
    prefactor = fam.q(tup.mask(), shift + shifts.normalization_bar(mu, tup.m, tup.n))
    if route == "tab":
        body = tab_sum_Fbar(fam, tup, d, shift)
    else:
        body = jacobi_trudi(fam, tup, d, route, shift, barred=True)
    return body * prefactor


def normalized_rect(fam: QFamily, tup: GradedTuple, a: int, s: int, shift: int = 0, barred: bool = False) -> RationalFn:
    """F^{(a)}_s (or its barred mirror) for any integers a, s.

    a = 0 and s = 0 are boundary values of Q_tup; a < 0, or a > 0 with s < 0, or
    a > m with s > n give zero.
    """
    m, n = tup.m, tup.n
    sigma = -1 if barred else 1
    mask = tup.mask()
    if a < 0:
        return RationalFn(ZERO)
    if a == 0:
        return RationalFn(fam.q(mask, shift + sigma * (-(m - n) - 2 * s)))
    if s < 0:
        return RationalFn(ZERO)
    if s == 0:
        return RationalFn(fam.q(mask, shift + sigma * (-(m - n) + 2 * a)))
    if a > m and s > n:
        return RationalFn(ZERO)
    mu = Partition.rectangle(a, s)
    if barred:
        return normalized_Fbar(fam, tup, mu, shift)
    return normalized_F(fam, tup, mu, shift)


def duality_factor(fam: QFamily, tup: GradedTuple) -> Fraction:
    """prod over the tuple of p z^p, i.e. prod z_B / prod(-z_F)."""
    out = Fraction(1)
    for pos, a in enumerate(tup.indices, start=1):
        p = tup.p(pos)
        out *= p * fam.twist.zeta(a) ** p
    return out
