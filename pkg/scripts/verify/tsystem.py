"""
T-system (Hirota bilinear relation) on rectangular T-functions.

T^{(a)}_s(x q^-1) T^{(a)}_s(x q) = T^{(a)}_{s-1} T^{(a)}_{s+1} + T^{(a-1)}_s T^{(a+1)}_s

- full relation for 1 <= a <= m-1, for 1 <= s <= n-1 and at (a, s) = (m, n)
- a = m, s > n: first term only; s = n, a > m: second term only
- T and the right-hand side vanish for a > m, s > n
- the a = 0 and s = 0 values entering the relation are the stored Q_{B u F}; the
  determinant at the empty diagram is compared with them separately
- the (m|n) duality

Checked on Wronskian T's of (B, F) pairs and on normalized tableau F's of the prefixes
of the natural tuple (suffixes on a barred hierarchy).
"""

import logging
from fractions import Fraction
from typing import Callable, List, Optional

from ..diagrams import GradedTuple, Partition
from ..exact_arith import RationalFn
from ..qhierarchy import QHierarchy
from ..report import VerifyReport, check_equal, check_zero
from ..tfunctions.tableaux import duality_factor, normalized_rect, tableau_family
from ..tfunctions.wronskian import q_union, rect_T, union_is_input, wronskian_T
from .options import SuiteOptions, pair_params, subset_pairs

logger = logging.getLogger(__name__)

Rect = Callable[[int, int, int], RationalFn]  # (a, s, shift) -> value


def hirota_region(a: int, s: int, m: int, n: int) -> str:
    if 1 <= a <= m - 1 or 1 <= s <= n - 1 or (a, s) == (m, n):
        return "full"
    if a == m and s >= n + 1:
        return "row"
    if s == n and a >= m + 1:
        return "column"
    return "vanishing"


def hirota_sides(T: Rect, a: int, s: int, region: str):
    def lhs():
        return T(a, s, -2) * T(a, s, 2)

    def rhs():
        first = T(a, s - 1, 0) * T(a, s + 1, 0)
        second = T(a - 1, s, 0) * T(a + 1, s, 0)
        if region == "row":
            return first
        if region == "column":
            return second
        return first + second

    return lhs, rhs


def hirota_reports(T: Rect, m: int, n: int, a_max: int, s_max: int, prefix: str, base: dict) -> List[VerifyReport]:
    out = []
    names = {"full": prefix, "row": f"{prefix}-reduced", "column": f"{prefix}-reduced",
             "vanishing": f"{prefix}-vanishing"}
    for a in range(1, a_max + 1):
        for s in range(1, s_max + 1):
            region = hirota_region(a, s, m, n)
            params = dict(base, a=a, s=s, region=region)
            lhs, rhs = hirota_sides(T, a, s, region)
            if region == "vanishing":
                out.append(check_zero(names[region], params, lambda a=a, s=s: T(a, s, 0)))
                out.append(check_zero(f"{prefix}-vanishing-rhs", params, rhs))
                continue
            out.append(check_equal(names[region], params, lhs, rhs))
    return out


def duality_reports(T: Rect, m: int, n: int, factor: Fraction, b_max: int, prefix: str, base: dict) -> List[VerifyReport]:
    """T^{(m)}_{b+n} = factor^b T^{(b+m)}_n."""
    out = []
    for b in range(b_max + 1):
        out.append(
            check_equal(
                f"{prefix}-duality",
                dict(base, b=b),
                lambda b=b: T(m, b + n, 0),
                lambda b=b: T(b + m, n, 0) * factor**b,
            )
        )
    return out


def stored_boundary_rect(fam, B, F, a: int, s: int, shift: int) -> RationalFn:
    """T^{(a)}_s with the a = 0 and s = 0 values read from the stored Q_{B u F}."""
    d = len(B) - len(F)
    if a == 0:
        return q_union(fam, B, F, shift - 2 * s - d)
    if s == 0 and a > 0:
        return q_union(fam, B, F, shift + 2 * a - d)
    return rect_T(fam, B, F, a, s, shift)


def _twist_ratio(h: QHierarchy, B, F) -> Fraction:
    out = Fraction(1)
    for b in B:
        out *= h.twist.zeta(b)
    for f in F:
        out /= -h.twist.zeta(f)
    return out


def verify_tsystem(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """T-level relations on (B, F) pairs, then the tableau-level ones."""
    opts = opts or SuiteOptions()
    fam = h.wronskian_family(h.barred, sample)
    reports: List[VerifyReport] = []
    for B, F in subset_pairs(h, opts):
        m, n = len(B), len(F)
        base = pair_params(B, F, barred=h.barred)

        def T(a, s, shift, B=B, F=F):
            return stored_boundary_rect(fam, B, F, a, s, shift)

        # singles and boson-fermion pairs are inputs of the determinant itself
        boundary_shifts = () if union_is_input(B, F) else range(-2, 3)
        for k in boundary_shifts:
            reports.append(
                check_equal(
                    "tsystem-boundary",
                    dict(base, shift=k),
                    lambda B=B, F=F, k=k: wronskian_T(fam, B, F, Partition(), k),
                    lambda B=B, F=F, k=k: q_union(fam, B, F, k - (m - n)),
                )
            )
        reports += hirota_reports(T, m, n, opts.a_max, opts.s_max, "tsystem", base)
        reports += duality_reports(T, m, n, _twist_ratio(h, B, F), opts.duality_max, "tsystem", base)
    reports += verify_tsystem_tableaux(h, opts, sample)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"T-system: {len(reports)} instances, {failed} failed")
    return reports


def tableau_tuples(h: QHierarchy) -> List[GradedTuple]:
    """Prefixes I_1..I_K of the natural order, or the suffixes on a barred hierarchy."""
    full = GradedTuple.full(h.M, h.N)
    K = h.twist.K
    if h.barred:
        return [full.suffix_from(k) for k in range(K, 0, -1)]
    return [full.prefix(k) for k in range(1, K + 1)]


def verify_tsystem_tableaux(h: QHierarchy, opts: SuiteOptions, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    fam = tableau_family(h, h.barred, sample)
    reports: List[VerifyReport] = []
    for tup in tableau_tuples(h):
        base = {"tuple": list(tup.indices), "barred": h.barred}

        def T(a, s, shift, tup=tup):
            return normalized_rect(fam, tup, a, s, shift, barred=h.barred)

        reports += hirota_reports(T, tup.m, tup.n, opts.f_max, opts.f_max, "tsystem-F", base)
        reports += duality_reports(T, tup.m, tup.n, duality_factor(fam, tup), min(opts.duality_max, 1),
                                   "tsystem-F", base)
    return reports
