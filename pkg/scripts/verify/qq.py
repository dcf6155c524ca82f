"""
QQ relations among Q_I, Q_{I+i}, Q_{I+j}, Q_{I+i+j}.

Same-grading pairs use the bosonic form, opposite gradings the mixed form. The barred
relations are the unbarred ones on the Qbar view with the gradings flipped; both
families are checked on every hierarchy.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Optional

from ..exact_arith import RationalFn
from ..qhierarchy import QFamily, QHierarchy, mask_of
from ..report import VerifyReport, check_equal
from .options import SuiteOptions

logger = logging.getLogger(__name__)


def qq_sides(fam: QFamily, I: int, i: int, j: int, flip: bool = False):
    """(lhs, rhs) thunks of the QQ relation for (I, i, j) on one view."""
    tw = fam.twist
    pi, pj = tw.grading(i), tw.grading(j)
    if flip:
        pi, pj = -pi, -pj
    zi, zj = tw.zeta(i), tw.zeta(j)
    Ii, Ij, Iij = I | mask_of((i,)), I | mask_of((j,)), I | mask_of((i, j))
    k = 2 * pi
    if pi == pj:
        def lhs():
            return RationalFn(fam.q(I, 0) * fam.q(Iij, 0)) * (zi - zj)

        def rhs():
            return RationalFn(
                fam.q(Ii, k) * fam.q(Ij, -k) * zi - fam.q(Ii, -k) * fam.q(Ij, k) * zj
            )
    else:
        def lhs():
            return RationalFn(fam.q(Ii, 0) * fam.q(Ij, 0)) * (zi - zj)

        def rhs():
            return RationalFn(
                fam.q(I, -k) * fam.q(Iij, k) * zi - fam.q(I, k) * fam.q(Iij, -k) * zj
            )
    return lhs, rhs


def qq_reports(fam: QFamily, prefix: str, flip: bool) -> List[VerifyReport]:
    tw = fam.twist
    out = []
    for i, j in combinations(range(1, tw.K + 1), 2):
        rest = [a for a in range(1, tw.K + 1) if a not in (i, j)]
        kind = "boson" if tw.grading(i) == tw.grading(j) else "mixed"
        for size in range(len(rest) + 1):
            for I in combinations(rest, size):
                lhs, rhs = qq_sides(fam, mask_of(I), i, j, flip)
                params = {"M": tw.M, "N": tw.N, "I": list(I), "i": i, "j": j}
                out.append(check_equal(f"{prefix}-{kind}", params, lhs, rhs))
    return out


def verify_qq(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Every (I, i, j) instance of the unbarred and barred QQ relations."""
    reports = qq_reports(h.family(sample), "qq", flip=False)
    reports += qq_reports(h.bar_family(sample), "qq-bar", flip=True)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"QQ relations: {len(reports)} instances, {failed} failed")
    return reports

