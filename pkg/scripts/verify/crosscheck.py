"""
Suites comparing independent constructions of the same T-function.

- reverse: tableau sums against the barred sums of the reversed tuple
- convolution: one-row F of the full tuple split at every K
- box_complement: Xbar of a suffix against X of the complementary prefix
- routes: every route of tfunctions (Wronskian, Weyl, coset, tableaux, Jacobi-Trudi,
  Laplace, rectangular regimes, typical factorizations) against the Wronskian T
- order_independence: tableau sums of every ordering of the full index set
- characters: the three supercharacter formulas at x = 0
"""

import logging
from fractions import Fraction
from itertools import permutations
from typing import Iterator, List, Optional

from ..diagrams import GradedTuple, Partition, SkewDiagram, hook_check, partitions_of
from ..qhierarchy import QHierarchy
from ..report import VerifyReport, check_equal
from ..tfunctions.characters import sergeev_pragacz, super_schur_tab, wronskian_char
from ..tfunctions.checks import box_complement_check, conv_series_check, reverse_check
from ..tfunctions.routes import ROUTES, t_by_route
from ..tfunctions.tableaux import tab_sum_F
from ..tfunctions.wronskian import (
    BOSON,
    FERMION,
    augmented,
    boson_only_shifted,
    fermion_only_shifted,
    is_typical_shape,
    laplace_T,
    rect_regimes,
    rect_T,
    rectangular_delta_T,
    rows_added,
    rows_stacked,
    typical_rectangle,
    typical_T,
    weyl_sum_T,
    wronskian_T,
)
from .options import SuiteOptions, pair_params, subset_pairs
from .poles import all_orders

logger = logging.getLogger(__name__)

REVERSE_SIZE = 3
ORDER_SIZE = 2


def _summary(name: str, reports: List[VerifyReport]) -> List[VerifyReport]:
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"{name}: {len(reports)} instances, {failed} failed")
    return reports


def hook_partitions(M: int, N: int, size_max: int) -> Iterator[Partition]:
    for size in range(size_max + 1):
        for mu in partitions_of(size):
            if hook_check(mu, M, N):
                yield mu


def skew_diagrams(size_max: int) -> Iterator[SkewDiagram]:
    """Straight and skew diagrams with at most size_max cells."""
    for outer_size in range(1, size_max + 1):
        for outer in partitions_of(outer_size):
            for inner_size in range(outer_size):
                for inner in partitions_of(inner_size):
                    if outer.contains(inner):
                        yield SkewDiagram.of(outer, inner)


def verify_reverse(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    full = GradedTuple.full(h.M, h.N)
    reports = [reverse_check(h, full, d, sample) for d in skew_diagrams(REVERSE_SIZE)]
    return _summary("Reversed tableaux", reports)


def verify_convolution(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    opts = opts or SuiteOptions()
    reports: List[VerifyReport] = []
    for K in range(h.twist.K + 1):
        reports += conv_series_check(h, K, opts.conv_max, sample)
    return _summary("Convolution", reports)


def verify_box_complement(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    reports: List[VerifyReport] = []
    for order in all_orders(h.M, h.N):
        reports += box_complement_check(h, order, sample)
    return _summary("Box complements", reports)


# ----------------------------- routes -----------------------------


def route_applies(route: str, mu: Partition, m: int, n: int) -> bool:
    if route == "laplace":
        return not mu or mu.parts == (mu.width,) * mu.height
    if route == "typical":
        return is_typical_shape(mu, m, n)
    return True


def route_reports(h: QHierarchy, opts: SuiteOptions, sample: Optional[Fraction]) -> List[VerifyReport]:
    B, F = h.twist.bosons(), h.twist.fermions()
    fam = h.wronskian_family(h.barred, sample)
    out = []
    for mu in hook_partitions(h.M, h.N, opts.size_max):
        for route in ROUTES:
            if route == "wronskian" or not route_applies(route, mu, h.M, h.N):
                continue
            out.append(
                check_equal(
                    f"route-{route}",
                    {"M": h.M, "N": h.N, "mu": list(mu.parts), "barred": h.barred},
                    lambda mu=mu, route=route: t_by_route(h, mu, route, B, F, sample=sample),
                    lambda mu=mu: wronskian_T(fam, B, F, mu),
                )
            )
    return out


def rectangle_reports(h: QHierarchy, opts: SuiteOptions, sample: Optional[Fraction]) -> List[VerifyReport]:
    """Closed-form regimes and both Laplace expansions of T^{(a)}_s."""
    fam = h.wronskian_family(h.barred, sample)
    out = []
    for B, F in subset_pairs(h, opts, nonempty=True):
        m, n = len(B), len(F)
        for a in range(1, opts.a_max + 1):
            for s in range(1, opts.s_max + 1):
                base = pair_params(B, F, a=a, s=s, barred=h.barred)
                for regime in rect_regimes(m, n, a, s):
                    out.append(
                        check_equal(
                            "rect-regime",
                            dict(base, regime=regime),
                            lambda B=B, F=F, a=a, s=s, regime=regime: rectangular_delta_T(fam, B, F, a, s, regime),
                            lambda B=B, F=F, a=a, s=s: rect_T(fam, B, F, a, s),
                        )
                    )
                regimes = ([BOSON] if a - s <= m - n else []) + ([FERMION] if a - s >= m - n else [])
                for regime in regimes:
                    out.append(
                        check_equal(
                            f"laplace-{regime}",
                            base,
                            lambda B=B, F=F, a=a, s=s, regime=regime: laplace_T(fam, B, F, a, s, regime),
                            lambda B=B, F=F, a=a, s=s: rect_T(fam, B, F, a, s),
                        )
                    )
    return out


def weyl_reports(h: QHierarchy, opts: SuiteOptions, sample: Optional[Fraction]) -> List[VerifyReport]:
    fam = h.wronskian_family(h.barred, sample)
    B, F = h.twist.bosons(), h.twist.fermions()
    return [
        check_equal(
            "weyl-coset",
            {"M": h.M, "N": h.N, "mu": list(mu.parts)},
            lambda mu=mu: weyl_sum_T(fam, B, F, mu, coset=True),
            lambda mu=mu: weyl_sum_T(fam, B, F, mu),
        )
        for mu in hook_partitions(h.M, h.N, opts.size_max)
    ]


def typical_reports(h: QHierarchy, opts: SuiteOptions, sample: Optional[Fraction]) -> List[VerifyReport]:
    """Augmented typical diagrams and the one-sided row additions."""
    fam = h.wronskian_family(h.barred, sample)
    out = []
    for B, F in subset_pairs(h, opts, nonempty=True):
        m, n = len(B), len(F)
        base = pair_params(B, F, barred=h.barred)
        grid = [(c1, c2) for c1 in range(opts.typical_max + 1) for c2 in range(opts.typical_max + 1)]
        if m and n:
            rect = Partition.rectangle(m, n)
            shapes = [mu for size in range(m * n, m * n + 3) for mu in partitions_of(size) if is_typical_shape(mu, m, n)]
            for mu in shapes:
                for c1, c2 in grid:
                    out.append(
                        check_equal(
                            "typical",
                            dict(base, mu=list(mu.parts), c1=c1, c2=c2),
                            lambda B=B, F=F, mu=mu, c1=c1, c2=c2: typical_T(fam, B, F, mu, c1, c2),
                            lambda B=B, F=F, mu=mu, c1=c1, c2=c2, m=m, n=n: wronskian_T(
                                fam, B, F, augmented(mu, m, n, c1, c2)
                            ),
                        )
                    )
            for c1, c2 in grid:
                out.append(
                    check_equal(
                        "typical-rectangle",
                        dict(base, c1=c1, c2=c2),
                        lambda B=B, F=F, c1=c1, c2=c2: typical_rectangle(fam, B, F, c1, c2),
                        lambda B=B, F=F, c1=c1, c2=c2, rect=rect: typical_T(fam, B, F, rect, c1, c2),
                    )
                )
        for c in range(1, opts.typical_max + 1):
            for tau in (Partition(), Partition((1,)), Partition((2, 1))):
                if m and tau.height <= m:
                    out.append(
                        check_equal(
                            "typical-bosons",
                            dict(base, tau=list(tau.parts), c=c),
                            lambda B=B, tau=tau, c=c: boson_only_shifted(fam, B, tau, c),
                            lambda B=B, tau=tau, c=c, m=m: wronskian_T(fam, B, (), rows_added(tau, m, c)),
                        )
                    )
            for eta in (Partition(), Partition((1,)), Partition((1, 1))):
                if n and eta.width <= n:
                    out.append(
                        check_equal(
                            "typical-fermions",
                            dict(base, eta=list(eta.parts), c=c),
                            lambda F=F, eta=eta, c=c: fermion_only_shifted(fam, F, eta, c),
                            lambda F=F, eta=eta, c=c, n=n: wronskian_T(fam, (), F, rows_stacked(eta, n, c)),
                        )
                    )
    return out


def verify_routes(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    opts = opts or SuiteOptions()
    reports = route_reports(h, opts, sample)
    reports += rectangle_reports(h, opts, sample)
    reports += weyl_reports(h, opts, sample)
    reports += typical_reports(h, opts, sample)
    return _summary("Routes", reports)


# ----------------------------- orderings and characters -----------------------------


def verify_order_independence(h: QHierarchy, opts: Optional[SuiteOptions] = None,
                              sample: Optional[Fraction] = None) -> List[VerifyReport]:
    fam = h.family(sample)
    natural = GradedTuple.full(h.M, h.N)
    reports = []
    for mu in hook_partitions(h.M, h.N, ORDER_SIZE):
        if not mu:
            continue
        d = SkewDiagram(mu)
        for perm in permutations(natural.indices):
            order = GradedTuple(perm, h.M, h.N)
            if order == natural:
                continue
            reports.append(
                check_equal(
                    "order-independence",
                    {"M": h.M, "N": h.N, "mu": list(mu.parts), "order": list(perm)},
                    lambda d=d, order=order: tab_sum_F(fam, order, d),
                    lambda d=d: tab_sum_F(fam, natural, d),
                )
            )
    return _summary("Order independence", reports)


def verify_characters(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Exact at x = 0 whatever the mode."""
    opts = opts or SuiteOptions()
    tw = h.twist
    reports = []
    for mu in hook_partitions(h.M, h.N, opts.size_max):
        params = {"M": h.M, "N": h.N, "mu": list(mu.parts)}
        reports.append(
            check_equal("char-tableaux", params,
                        lambda mu=mu: super_schur_tab(mu, tw.M, tw.N, tw.z),
                        lambda mu=mu: sergeev_pragacz(mu, tw.M, tw.N, tw.z))
        )
        reports.append(
            check_equal("char-wronskian", params,
                        lambda mu=mu: wronskian_char(h, mu),
                        lambda mu=mu: sergeev_pragacz(mu, tw.M, tw.N, tw.z))
        )
    return _summary("Characters", reports)
