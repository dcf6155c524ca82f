"""
Backlund relations between neighbouring levels of the hierarchy.

With A, B the rectangular T's of the larger and smaller (or smaller and larger) level
and z the twist of the removed index, shifts in t-units:

  A^{(a+1)}_s(0) B^{(a)}_s(3) - A^{(a)}_s(2) B^{(a+1)}_s(1) = z A^{(a+1)}_{s-1}(2) B^{(a)}_{s+1}(1)
  A^{(a)}_{s+1}(2) B^{(a)}_s(1) - A^{(a)}_s(0) B^{(a)}_{s+1}(3) = z A^{(a+1)}_s(2) B^{(a-1)}_{s+1}(1)

Removing a boson puts the larger set in A, removing a fermion puts it in B. The barred
tableau F's satisfy the same relations with every shift negated. The a = 0 case of the
first boson relation is the TQ relation, checked separately against stored Q's.
"""

import logging
from fractions import Fraction
from typing import Callable, List, Optional

from ..diagrams import GradedTuple
from ..exact_arith import RationalFn
from ..qhierarchy import QHierarchy
from ..report import VerifyReport, check_equal
from ..tfunctions.tableaux import normalized_rect, tableau_family
from ..tfunctions.wronskian import q_union, rect_T
from .options import SuiteOptions, pair_params, subset_pairs
from .tsystem import tableau_tuples

logger = logging.getLogger(__name__)

Rect = Callable[[int, int, int], RationalFn]


def backlund_sides(A: Rect, Bt: Rect, z: Fraction, a: int, s: int, which: int, sigma: int = 1):
    """(lhs, rhs) thunks of relation 1 or 2; sigma = -1 negates every shift."""
    k0, k1, k2, k3 = 0, sigma, 2 * sigma, 3 * sigma
    if which == 1:
        def lhs():
            return A(a + 1, s, k0) * Bt(a, s, k3) - A(a, s, k2) * Bt(a + 1, s, k1)

        def rhs():
            return A(a + 1, s - 1, k2) * Bt(a, s + 1, k1) * z
    else:
        def lhs():
            return A(a, s + 1, k2) * Bt(a, s, k1) - A(a, s, k0) * Bt(a, s + 1, k3)

        def rhs():
            return A(a + 1, s, k2) * Bt(a - 1, s + 1, k1) * z
    return lhs, rhs


def backlund_reports(A: Rect, Bt: Rect, z: Fraction, a_max: int, s_max: int, prefix: str, base: dict,
                     sigma: int = 1) -> List[VerifyReport]:
    out = []
    for which in (1, 2):
        for a in range(a_max + 1):
            for s in range(s_max + 1):
                lhs, rhs = backlund_sides(A, Bt, z, a, s, which, sigma)
                out.append(check_equal(f"{prefix}-{which}", dict(base, a=a, s=s), lhs, rhs))
    return out


def tq_sides(fam, B, F, b: int, s: int):
    """TQ relation for removing boson b from B, s >= 1."""
    m, n = len(B), len(F)
    small = tuple(x for x in B if x != b)
    z = fam.twist.zeta(b)
    d = m - n

    def lhs():
        return (rect_T(fam, B, F, 1, s, 0) * q_union(fam, small, F, -d - 2 * s + 4)
                - q_union(fam, B, F, -d - 2 * s + 2) * rect_T(fam, small, F, 1, s, 1))

    def rhs():
        return rect_T(fam, B, F, 1, s - 1, 2) * q_union(fam, small, F, -2 * s - d) * z

    return lhs, rhs


def verify_backlund(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    opts = opts or SuiteOptions()
    fam = h.wronskian_family(h.barred, sample)
    reports: List[VerifyReport] = []
    for B, F in subset_pairs(h, opts, nonempty=True):
        for b in B:
            small = tuple(x for x in B if x != b)
            base = pair_params(B, F, removed=b, barred=h.barred)

            def A(a, s, k, B=B, F=F):
                return rect_T(fam, B, F, a, s, k)

            def Bt(a, s, k, small=small, F=F):
                return rect_T(fam, small, F, a, s, k)

            reports += backlund_reports(A, Bt, h.twist.zeta(b), opts.a_max, opts.s_max, "backlund-boson", base)
            for s in range(1, opts.s_max + 1):
                lhs, rhs = tq_sides(fam, B, F, b, s)
                reports.append(check_equal("tq", dict(base, s=s), lhs, rhs))
        for f in F:
            small = tuple(x for x in F if x != f)
            base = pair_params(B, F, removed=f, barred=h.barred)

            def A(a, s, k, B=B, small=small):
                return rect_T(fam, B, small, a, s, k)

            def Bt(a, s, k, B=B, F=F):
                return rect_T(fam, B, F, a, s, k)

            reports += backlund_reports(A, Bt, h.twist.zeta(f), opts.a_max, opts.s_max, "backlund-fermion", base)
    reports += verify_backlund_tableaux(h, opts, sample)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Backlund relations: {len(reports)} instances, {failed} failed")
    return reports


def verify_backlund_tableaux(h: QHierarchy, opts: SuiteOptions, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """F-level relations between I_K and I_{K-1} (or the barred suffixes)."""
    fam = tableau_family(h, h.barred, sample)
    full = GradedTuple.full(h.M, h.N)
    sigma = -1 if h.barred else 1
    reports: List[VerifyReport] = []
    for tup in tableau_tuples(h):
        if h.barred:
            # tup = (i_K, ..., i_{M+N}); its neighbour drops i_K
            removed_pos = full.indices.index(tup.indices[0]) + 1
            larger, smaller = tup, tup.suffix_from(2)
        else:
            removed_pos = len(tup)
            larger, smaller = tup, tup.prefix(len(tup) - 1)
        p = full.p(removed_pos)
        z = h.twist.zeta(full.indices[removed_pos - 1])
        first, second = (larger, smaller) if p == 1 else (smaller, larger)

        def A(a, s, k, t=first):
            return normalized_rect(fam, t, a, s, k, barred=h.barred)

        def Bt(a, s, k, t=second):
            return normalized_rect(fam, t, a, s, k, barred=h.barred)

        base = {"tuple": list(larger.indices), "removed": full.indices[removed_pos - 1], "barred": h.barred}
        reports += backlund_reports(A, Bt, z, opts.f_max, opts.f_max, "backlund-F", base, sigma)
    return reports
