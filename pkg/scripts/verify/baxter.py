"""
Baxter equations: finite linear difference equations on single-index Q's whose
coefficients are T-functions of near-rectangular diagrams.

  sum_{a=0}^{m} (-z_k)^{-a} T_{((n+1)^a, n^(m-a))} Q_k = 0     k in B
  sum_{a=0}^{n}   z_k^{-a}  T_{(n^m, a)}           Q_k = 0     k in F

plus the reduced forms on T^{B,0}_{(1^a)} and T^{0,F}_{(a)}. On a barred hierarchy the
same sums run on the barred view (shifts reversed, Qbar in place of Q).

With Wronskian coefficients the sums vanish identically in Q_k. The tableau form takes
the T's of the full sets from tableau sums over an ordering of the indices; those read
the stored Q of every prefix of the ordering. Stored Q_{B u F} that are not inputs of
the determinant are compared with T_empty.
"""

import logging
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from ..diagrams import Partition
from ..exact_arith import RationalFn
from ..qhierarchy import QFamily, QHierarchy, mask_of
from ..report import VerifyReport, check_equal, check_zero
from ..tfunctions import shifts
from ..tfunctions.routes import t_by_route
from ..tfunctions.wronskian import q_union, union_is_input, wronskian_T
from .options import SUBSETS_ALL, SuiteOptions, pair_params, subset_pairs

logger = logging.getLogger(__name__)


def boson_diagram(a: int, m: int, n: int) -> Partition:
    return Partition((n + 1,) * a + (n,) * (m - a))


def fermion_diagram(a: int, m: int, n: int) -> Partition:
    return Partition((n,) * m + (a,))


def baxter_terms(k_is_boson: bool, m: int, n: int, reduced: bool = False):
    """(a, diagram, T argument, Q_k argument) for every term of one equation."""
    if k_is_boson:
        for a in range(m + 1):
            if reduced:
                t_arg, q_arg = shifts.baxter_boson_reduced(a, m)
                yield a, Partition((1,) * a), t_arg, q_arg
            else:
                t_arg, q_arg = shifts.baxter_boson(a, m, n)
                yield a, boson_diagram(a, m, n), t_arg, q_arg
    else:
        for a in range(n + 1):
            if reduced:
                t_arg, q_arg = shifts.baxter_fermion_reduced(a, n)
                yield a, Partition((a,)), t_arg, q_arg
            else:
                t_arg, q_arg = shifts.baxter_fermion(a, m, n)
                yield a, fermion_diagram(a, m, n), t_arg, q_arg


def baxter_coefficient(fam: QFamily, k: int, a: int) -> Fraction:
    zk = fam.twist.zeta(k)
    return (-zk) ** (-a) if fam.twist.is_boson(k) else zk ** (-a)


def baxter_boson_sum(fam, B, F, k: int, reduced: bool = False) -> RationalFn:
    m, n = len(B), len(F)
    total = RationalFn(0)
    for a, mu, t_arg, q_arg in baxter_terms(True, m, n, reduced):
        T = wronskian_T(fam, B, () if reduced else F, mu, t_arg)
        total = total + T * RationalFn(fam.q(mask_of((k,)), q_arg)) * baxter_coefficient(fam, k, a)
    return total


def baxter_fermion_sum(fam, B, F, k: int, reduced: bool = False) -> RationalFn:
    m, n = len(B), len(F)
    total = RationalFn(0)
    for a, mu, t_arg, q_arg in baxter_terms(False, m, n, reduced):
        T = wronskian_T(fam, () if reduced else B, F, mu, t_arg)
        total = total + T * RationalFn(fam.q(mask_of((k,)), q_arg)) * baxter_coefficient(fam, k, a)
    return total


def tableau_orderings(h: QHierarchy, opts: SuiteOptions) -> List[Tuple[int, ...]]:
    """Orderings whose prefixes feed the tableau coefficients: natural and reversed,
    or every ordering when all subsets are requested."""
    natural = tuple(range(1, h.twist.K + 1))
    if opts.subsets == SUBSETS_ALL:
        return list(permutations(natural))
    if len(natural) < 2:
        return [natural]
    return [natural, natural[::-1]]


def baxter_tableau_sum(
    h: QHierarchy,
    fam: QFamily,
    order: Tuple[int, ...],
    k: int,
    cache: Dict,
    sample: Optional[Fraction] = None,
) -> RationalFn:
    """Baxter sum of the full sets with every T from the tableau route over order."""
    B, F = h.twist.bosons(), h.twist.fermions()
    m, n = len(B), len(F)
    k_is_boson = h.twist.is_boson(k)
    total = RationalFn(0)
    for a, mu, t_arg, q_arg in baxter_terms(k_is_boson, m, n):
        key = (order, mu.parts, t_arg)
        if key not in cache:
            # the tableau view runs its shifts forward; fam.sign maps the Wronskian argument
            cache[key] = t_by_route(h, mu, "tab", B, F, shift=fam.sign * t_arg, sample=sample, tup=order)
        total = total + cache[key] * RationalFn(fam.q(mask_of((k,)), q_arg)) * baxter_coefficient(fam, k, a)
    return total


def verify_baxter(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Both equations and their reduced forms for every k of every (B, F) pair, then the
    tableau form for every k on the full sets."""
    opts = opts or SuiteOptions()
    fam = h.wronskian_family(h.barred, sample)
    reports: List[VerifyReport] = []
    for B, F in subset_pairs(h, opts, nonempty=True):
        m, n = len(B), len(F)
        base = pair_params(B, F, barred=h.barred)
        if not union_is_input(B, F):
            reports.append(
                check_equal(
                    "baxter-boundary",
                    base,
                    lambda B=B, F=F: wronskian_T(fam, B, F, Partition(), 0),
                    lambda B=B, F=F, d=m - n: q_union(fam, B, F, -d),
                )
            )
        for k in B:
            reports.append(check_zero("baxter-boson", dict(base, k=k),
                                      lambda B=B, F=F, k=k: baxter_boson_sum(fam, B, F, k)))
            reports.append(check_zero("baxter-boson-reduced", dict(base, k=k),
                                      lambda B=B, F=F, k=k: baxter_boson_sum(fam, B, F, k, reduced=True)))
        for k in F:
            reports.append(check_zero("baxter-fermion", dict(base, k=k),
                                      lambda B=B, F=F, k=k: baxter_fermion_sum(fam, B, F, k)))
            reports.append(check_zero("baxter-fermion-reduced", dict(base, k=k),
                                      lambda B=B, F=F, k=k: baxter_fermion_sum(fam, B, F, k, reduced=True)))

    cache: Dict = {}
    for order in tableau_orderings(h, opts):
        for k in range(1, h.twist.K + 1):
            kind = "boson" if h.twist.is_boson(k) else "fermion"
            params = {"M": h.M, "N": h.N, "order": list(order), "k": k, "barred": h.barred}
            reports.append(check_zero(f"baxter-tableau-{kind}", params,
                                      lambda order=order, k=k: baxter_tableau_sum(h, fam, order, k, cache, sample)))
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Baxter equations: {len(reports)} instances, {failed} failed")
    return reports
