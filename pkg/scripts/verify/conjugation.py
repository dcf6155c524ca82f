"""
Invariance under the conjugation z -> 1/z, t -> 1/t.

The conjugated data use the same Q table, so every relation checked here is a
statement about the original hierarchy read with reversed shifts and inverted twists.
"""

import logging
from fractions import Fraction
from typing import List, Optional

from ..diagrams import GradedTuple, Partition, SkewDiagram
from ..exact_arith import RationalFn
from ..qhierarchy import QHierarchy, require_generic
from ..report import VerifyReport, check_equal, check_true
from ..tfunctions.tableaux import box_Xconj, tab_sum_F
from ..tfunctions.wronskian import BOSON, conjugate_laplace_rhs, laplace_T, wronskian_T
from .options import SuiteOptions, pair_params, subset_pairs
from .qq import qq_reports

logger = logging.getLogger(__name__)

INVOLUTION_SHAPES = (Partition(), Partition((1,)), Partition((2, 1)))


def box_sum_reports(h: QHierarchy, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """F_(1) of the conjugated data against the sum of its signed boxes."""
    conj = h.conjugated()
    full = GradedTuple.full(h.M, h.N)
    fam = conj.family(sample)

    def boxes():
        total = RationalFn(0)
        for a in range(1, len(full) + 1):
            total = total + box_Xconj(h, full.prefix(a)) * full.p(a)
        return total if sample is None else RationalFn(total.eval(sample))

    return [
        check_equal(
            "conj-box-sum",
            {"M": h.M, "N": h.N},
            lambda: tab_sum_F(fam, full, SkewDiagram(Partition((1,)))),
            boxes,
        )
    ]


def involution_reports(h: QHierarchy, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    twice = h.conjugated().conjugated()
    out = [
        check_true(
            "conj-involution-twist",
            {"M": h.M, "N": h.N},
            lambda: twice.twist == h.twist,
            {"twist": twice.twist.describe()},
        )
    ]
    fam = h.wronskian_family(h.barred, sample)
    back = twice.wronskian_family(h.barred, sample)
    B, F = h.twist.bosons(), h.twist.fermions()
    for mu in INVOLUTION_SHAPES:
        out.append(
            check_equal(
                "conj-involution",
                {"M": h.M, "N": h.N, "mu": list(mu.parts)},
                lambda mu=mu: wronskian_T(back, B, F, mu),
                lambda mu=mu: wronskian_T(fam, B, F, mu),
            )
        )
    return out


def laplace_reports(h: QHierarchy, opts: SuiteOptions, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Boson Laplace sum on the conjugated data against the rescaled original sum at
    s -> -s - (m - n)."""
    fam = h.wronskian_family(h.barred, sample)
    conj = h.conjugated().wronskian_family(h.barred, sample)
    out = []
    for B, F in subset_pairs(h, opts, nonempty=True):
        for a in range(len(B) + 1):
            for s in range(opts.s_max + 1):
                out.append(
                    check_equal(
                        "conj-laplace",
                        pair_params(B, F, a=a, s=s, barred=h.barred),
                        lambda B=B, F=F, a=a, s=s: laplace_T(conj, B, F, a, s, BOSON, relaxed=True),
                        lambda B=B, F=F, a=a, s=s: conjugate_laplace_rhs(fam, B, F, a, s),
                    )
                )
    return out


def verify_conj_invariance(h: QHierarchy, opts: Optional[SuiteOptions] = None,
                           sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Raises GenericityError when the conjugated twist is not generic."""
    opts = opts or SuiteOptions()
    conj = h.conjugated()
    require_generic(conj.twist)
    reports = qq_reports(conj.family(sample), "conj-qq", flip=False)
    reports += qq_reports(conj.bar_family(sample), "conj-qq-bar", flip=True)
    reports += box_sum_reports(h, sample)
    reports += involution_reports(h, sample)
    reports += laplace_reports(h, opts, sample)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Conjugation invariance: {len(reports)} instances, {failed} failed")
    return reports
