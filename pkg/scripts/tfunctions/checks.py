"""
Cross-checks between tableau-sum functions built from the same hierarchy.

- box_complement_check: Xbar of the complementary suffix equals X of the prefix
- reverse_check: F over (tuple, d) equals Fbar over (reversed tuple, rotated d) once
  Qbar_J(x t^k) is read as Q_J(x t^-k)
- conv_series_check: one-row F of the full tuple as a convolution of the one-row F of a
  prefix and the one-row Fbar of the complementary suffix
"""

from fractions import Fraction
from typing import List, Optional

from ..diagrams import GradedTuple, Partition, SkewDiagram
from ..exact_arith import ZERO, RationalFn
from ..qhierarchy import QFamily, QHierarchy
from ..report import VerifyReport, check_equal
from . import shifts
from .tableaux import box_X, box_Xbar, tab_sum_F, tab_sum_Fbar


def _row(length: int) -> SkewDiagram:
    return SkewDiagram(Partition.rectangle(1, length))


def box_complement_check(h: QHierarchy, order: GradedTuple, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    qfam, bfam = h.family(sample), h.bar_family(sample)
    out = []
    for a in range(1, len(order) + 1):
        params = {"M": h.M, "N": h.N, "order": order.indices, "a": a}
        out.append(
            check_equal(
                "box-complement",
                params,
                lambda a=a: box_Xbar(bfam, order.suffix_from(a)),
                lambda a=a: box_X(qfam, order.prefix(a)),
            )
        )
    return out


def reverse_check(
    h: QHierarchy, tup: GradedTuple, d: SkewDiagram, sample: Optional[Fraction] = None
) -> VerifyReport:
    qfam = h.family(sample)
    mirrored = qfam.with_sign(-1)
    params = {"M": h.M, "N": h.N, "tuple": tup.indices, "diagram": str(d)}
    return check_equal(
        "reverse-tableaux",
        params,
        lambda: tab_sum_F(qfam, tup, d),
        lambda: tab_sum_Fbar(mirrored, tup.reversed(), d.rotate180()),
    )


def convolution_rhs(qfam: QFamily, bfam: QFamily, K: int, s: int) -> RationalFn:
    """Sum over alpha of F_(alpha) of the prefix I_K times Fbar_(s-alpha) of the rest."""
    M, N = qfam.twist.M, qfam.twist.N
    full = GradedTuple.full(M, N)
    head, tail = full.prefix(K), full.suffix_from(K + 1)
    total = RationalFn(ZERO)
    for alpha in range(s + 1):
        a_shift, b_shift = shifts.convolution(s, alpha, head.m, head.n, tail.m, tail.n, M, N)
        left = tab_sum_F(qfam, head, _row(alpha), a_shift)
        if left.is_zero():
            continue
        total = total + left * tab_sum_Fbar(bfam, tail, _row(s - alpha), b_shift)
    return total


def conv_series_check(h: QHierarchy, K: int, s_max: int, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Coefficient-by-coefficient form of the generating-series factorization."""
    if not 0 <= K <= h.twist.K:
        raise ValueError(f"split point must lie in 0..{h.twist.K}, got {K}")
    full = GradedTuple.full(h.M, h.N)
    qfam, bfam = h.family(sample), h.bar_family(sample)
    out = []
    for s in range(s_max + 1):
        params = {"M": h.M, "N": h.N, "K": K, "s": s}
        out.append(
            check_equal(
                "convolution",
                params,
                lambda s=s: tab_sum_F(qfam, full, _row(s)),
                lambda s=s: convolution_rhs(qfam, bfam, K, s),
            )
        )
    return out
