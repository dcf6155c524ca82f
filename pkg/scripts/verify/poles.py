"""
Pole cancellation between adjacent boxes.

X_{I_a} and X_{I_{a+1}} share the denominator factor Q_{I_a}(x t^k) with
k = -2 S(I_a) + (M - N). In p_a X_{I_a} + p_{a+1} X_{I_{a+1}} the residues at its zeros
cancel, so over the common denominator the numerator is divisible by that factor.
Checked exactly for every ordering of the full index set; sampling would lose the
divisibility statement.
"""

import logging
from collections import Counter
from fractions import Fraction
from itertools import permutations
from typing import Iterable, List, Optional

from ..diagrams import GradedTuple
from ..exact_arith import LaurentPoly, factored_sum
from ..qhierarchy import QFamily, QHierarchy
from ..report import VerifyReport, check_divides
from ..tfunctions import shifts
from ..tfunctions.tableaux import _box
from .options import SuiteOptions

logger = logging.getLogger(__name__)

ALT = "alt"


def adjacent_terms(fam: QFamily, order: GradedTuple, a: int, detached: bool = False):
    """Factored terms of p_a X_{I_a} + p_{a+1} X_{I_{a+1}}.

    detached=True renames the Q_{I_a} factors of the first box so they resolve to a
    different polynomial, leaving the second box untouched.
    """
    low, high = order.prefix(a), order.prefix(a + 1)
    terms = []
    for pos, sub in ((a, low), (a + 1, high)):
        z, factors = _box(fam, sub, 0)
        if detached and pos == a:
            factors = Counter({
                ((ALT, key[0], key[1]) if key[0] == low.mask() else key): e for key, e in factors.items()
            })
        terms.append((order.p(pos) * z, factors))
    return terms


def pole_argument(order: GradedTuple, a: int) -> int:
    return shifts.pole(order.prefix(a).grading_sum(), order.M, order.N)


def pole_reports(fam: QFamily, order: GradedTuple, replacement: Optional[LaurentPoly] = None,
                 identity: str = "pole-cancellation", levels: Optional[Iterable[int]] = None) -> List[VerifyReport]:
    out = []

    def resolve(key):
        if key[0] == ALT:
            return replacement.shift(fam.sign * key[2], fam.twist.t)
        return fam.q(key[0], key[1])

    for a in (levels if levels is not None else range(1, len(order))):
        mask, k = order.prefix(a).mask(), pole_argument(order, a)
        params = {"M": order.M, "N": order.N, "order": list(order.indices), "a": a}
        terms = adjacent_terms(fam, order, a, detached=replacement is not None)
        out.append(
            check_divides(
                identity,
                params,
                lambda mask=mask, k=k: fam.q(mask, k),
                lambda terms=terms: factored_sum(terms, resolve).num,
            )
        )
    return out


def all_orders(M: int, N: int) -> Iterable[GradedTuple]:
    for perm in permutations(range(1, M + N + 1)):
        yield GradedTuple(perm, M, N)


def verify_pole_cancellation(h: QHierarchy, opts: Optional[SuiteOptions] = None,
                             sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Divisibility for every adjacent pair of every ordering; always exact."""
    if sample is not None:
        logger.debug("pole cancellation ignores the sample point and runs exactly")
    fam = h.family()
    reports: List[VerifyReport] = []
    for order in all_orders(h.M, h.N):
        reports += pole_reports(fam, order)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Pole cancellation: {len(reports)} instances, {failed} failed")
    return reports


def detached_pole_reports(h: QHierarchy, order: GradedTuple) -> List[VerifyReport]:
    """Same checks with Q_{I_a} replaced by Q_{I_a} + x in the first box only; every
    instance with a nonconstant Q_{I_a} is expected to fail."""
    fam = h.family()
    out = []
    for a in range(1, len(order)):
        mask = order.prefix(a).mask()
        replacement = fam.poly(mask) + LaurentPoly.monomial(1)
        out += pole_reports(fam, order, replacement, "pole-cancellation-detached", levels=[a])
    return out
