"""
Conserved quantities and generalized Baxter equations in determinant form.

T^{(a)}_s is taken as the Laplace sum itself, for any integer s (boson sums over
a-subsets of B) or any integer a (fermion sums over s-subsets of F). Each entry of

  I_s: T^{(a)}_{s+i+j}(x t^{-2s+2i-2j})      J_s: T^{(a)}_{s-i-j}(x t^{2s+2i-2j})
  K_a: T^{(a+i+j)}_s(x t^{2a-2i+2j})         L_a: T^{(a-i-j)}_s(x t^{-2a-2i+2j})

is a sum of C separable terms (C = C(m,a) resp. C(n,s)), so the
(C+1)x(C+1) determinants vanish, as do those with one column replaced by the Q's of a
single term. Ratios of first minors sharing a removed column do not depend on s
(resp. a); they are compared in cross-multiplied form.
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..exact_arith import RationalFn, det
from ..qhierarchy import QFamily, QHierarchy, mask_of
from ..report import VerifyReport, check_equal, check_zero
from ..tfunctions.wronskian import BOSON, FERMION, _prod_z, laplace_T
from .options import SuiteOptions, pair_params, subset_pairs

logger = logging.getLogger(__name__)

Matrix = List[List[RationalFn]]

KINDS = ("I", "J", "K", "L")


class ConservedFamily:
    """Entries and augmenting columns of one matrix family for a fixed (B, F) and the
    fixed label (a for I/J, s for K/L); the free label is the one the matrices run over."""

    def __init__(self, fam: QFamily, B: Sequence[int], F: Sequence[int], kind: str, fixed: int):
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
        self.fam, self.B, self.F = fam, tuple(B), tuple(F)
        self.kind, self.fixed = kind, fixed
        self._cache: Dict[Tuple[int, int, int], RationalFn] = {}

    @property
    def boson(self) -> bool:
        return self.kind in ("I", "J")

    @property
    def size(self) -> int:
        pool = self.B if self.boson else self.F
        return comb(len(pool), self.fixed) + 1

    def subsets(self) -> List[Tuple[int, ...]]:
        return list(combinations(self.B if self.boson else self.F, self.fixed))

    def _T(self, a: int, s: int, shift: int) -> RationalFn:
        key = (a, s, shift)
        if key not in self._cache:
            regime = BOSON if self.boson else FERMION
            self._cache[key] = laplace_T(self.fam, self.B, self.F, a, s, regime, shift, relaxed=True)
        return self._cache[key]

    def entry(self, free: int, i: int, j: int) -> RationalFn:
        c = self.fixed
        if self.kind == "I":
            return self._T(c, free + i + j, -2 * free + 2 * i - 2 * j)
        if self.kind == "J":
            return self._T(c, free - i - j, 2 * free + 2 * i - 2 * j)
        if self.kind == "K":
            return self._T(free + i + j, c, 2 * free - 2 * i + 2 * j)
        return self._T(free - i - j, c, -2 * free - 2 * i + 2 * j)

    def matrix(self, free: int) -> Matrix:
        n = self.size
        return [[self.entry(free, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]

    def column(self, subset: Sequence[int]) -> Callable[[int], RationalFn]:
        """i -> i-th component of the Q column belonging to one Laplace term."""
        fam = self.fam
        d = len(self.B) - len(self.F)
        sub = mask_of(subset)
        rest = mask_of(self.B + self.F) ^ sub
        if self.boson:
            w = _prod_z(fam, subset)
            if self.kind == "I":
                return lambda i: RationalFn(fam.q(sub, 4 * i + d)) * w**i
            return lambda i: RationalFn(fam.q(rest, 4 * i - d)) * w ** (-i)
        w = _prod_z(fam, subset, negate=True)
        if self.kind == "K":
            return lambda i: RationalFn(fam.q(sub, -4 * i + d)) * w**i
        return lambda i: RationalFn(fam.q(rest, -4 * i - d)) * w ** (-i)

    def augmented(self, free: int, r: int, subset: Sequence[int]) -> Matrix:
        col = self.column(subset)
        rows = self.matrix(free)
        for i in range(1, self.size + 1):
            rows[i - 1][r - 1] = col(i)
        return rows


def first_minor(rows: Matrix, alpha: int, beta: int) -> RationalFn:
    """Determinant with row alpha and column beta removed (1-based)."""
    sub = [
        [v for j, v in enumerate(row, start=1) if j != beta]
        for i, row in enumerate(rows, start=1)
        if i != alpha
    ]
    return det(sub)


def determinant_reports(cf: ConservedFamily, free: int, base: dict) -> List[VerifyReport]:
    out = [check_zero(f"conserved-det-{cf.kind}", dict(base, free=free), lambda: det(cf.matrix(free)))]
    for subset in cf.subsets():
        for r in range(1, cf.size + 1):
            out.append(
                check_zero(
                    f"conserved-baxter-{cf.kind}",
                    dict(base, free=free, r=r, subset=list(subset)),
                    lambda r=r, subset=subset: det(cf.augmented(free, r, subset)),
                )
            )
    return out


def ratio_reports(cf: ConservedFamily, free: int, base: dict) -> List[VerifyReport]:
    """D[alpha|1]/D[gamma|1] at free and free+1, cross-multiplied."""
    out = []
    now, nxt = cf.matrix(free), cf.matrix(free + 1)
    minors_now = {a: first_minor(now, a, 1) for a in range(1, cf.size + 1)}
    minors_nxt = {a: first_minor(nxt, a, 1) for a in range(1, cf.size + 1)}
    for alpha, gamma in combinations(range(1, cf.size + 1), 2):
        out.append(
            check_equal(
                f"conserved-ratio-{cf.kind}",
                dict(base, free=free, alpha=alpha, gamma=gamma, beta=1),
                lambda alpha=alpha, gamma=gamma: minors_now[alpha] * minors_nxt[gamma],
                lambda alpha=alpha, gamma=gamma: minors_nxt[alpha] * minors_now[gamma],
            )
        )
    return out


def verify_conserved(h: QHierarchy, opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Boson families over s = 0..s_max for each a <= m; fermion families over
    a = 0..a_max for each s <= n. Ratios use three consecutive values of the free label."""
    opts = opts or SuiteOptions()
    fam = h.wronskian_family(h.barred, sample)
    reports: List[VerifyReport] = []
    for B, F in subset_pairs(h, opts, nonempty=True):
        families = [("I", a) for a in range(len(B) + 1)] + [("J", a) for a in range(len(B) + 1)]
        families += [("K", s) for s in range(len(F) + 1)] + [("L", s) for s in range(len(F) + 1)]
        for kind, fixed in families:
            cf = ConservedFamily(fam, B, F, kind, fixed)
            label = "a" if cf.boson else "s"
            base = pair_params(B, F, barred=h.barred, **{label: fixed})
            top = opts.s_max if cf.boson else opts.a_max
            for free in range(top + 1):
                reports += determinant_reports(cf, free, base)
            for free in range(min(top, 1) + 1):
                reports += ratio_reports(cf, free, base)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Conserved quantities: {len(reports)} instances, {failed} failed")
    return reports
