"""
Determinant identities behind the proofs, checked directly.

- Plucker-type relations on random (n+2) x n and (n+1) x n rational matrices and on
  their column versions, and the Jacobi identity on square ones
- shift lemmas for the block minors of a hierarchy
- index order: the empty-diagram minor of (B, F) under permutations of B and of F,
  before and after the x = 0 normalization
- the Cauchy-type denominator: its value against the empty minor at x = 0, and its
  three-term relations
"""

import logging
from fractions import Fraction
from itertools import combinations, permutations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..exact_arith import RationalFn, det
from ..qhierarchy import QHierarchy, TwistData, cauchy_denominator, empty_maya, wronskian_Q
from ..report import VerifyReport, check_equal, check_zero
from ..tfunctions.characters import trivial_family
from ..tfunctions.wronskian import _prod_z, bf_sign, delta_minor, empty_minor_at_zero, perm_sign
from .options import SuiteOptions, subset_pairs

logger = logging.getLogger(__name__)

MATRIX_MAX = 6
ENTRY_BOUND = 9
BF_GRID = 3
SHIFT_C_MAX = 2

Matrix = List[List[Fraction]]


# ----------------------------- random matrices -----------------------------


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> Matrix:
    return [
        [Fraction(int(rng.integers(-ENTRY_BOUND, ENTRY_BOUND + 1)), int(rng.integers(1, 4))) for _ in range(cols)]
        for _ in range(rows)
    ]


def removed(mat: Matrix, rows: Sequence[int] = (), cols: Sequence[int] = ()) -> RationalFn:
    """D[rows|cols]: determinant with the listed rows and columns (1-based) taken out."""
    sub = [
        [v for j, v in enumerate(row, start=1) if j not in cols]
        for i, row in enumerate(mat, start=1)
        if i not in rows
    ]
    return det(sub)


def _cut(mat: Matrix, on_rows: bool):
    """D over rows (on_rows) or over columns, the other side given explicitly."""
    if on_rows:
        return lambda lines, other=(): removed(mat, lines, other)
    return lambda lines, other=(): removed(mat, other, lines)


def plucker_reports(mat: Matrix, on_rows: bool, params: dict) -> List[VerifyReport]:
    """D[j1,j2]D[j3,j4] - D[j1,j3]D[j2,j4] + D[j1,j4]D[j2,j3] = 0 on the long side."""
    D = _cut(mat, on_rows)
    count = len(mat) if on_rows else len(mat[0])
    identity = "det-plucker" if on_rows else "det-plucker-columns"
    out = []
    for j1, j2, j3, j4 in combinations(range(1, count + 1), 4):
        out.append(
            check_zero(
                identity,
                dict(params, j=[j1, j2, j3, j4]),
                lambda j1=j1, j2=j2, j3=j3, j4=j4: (
                    D((j1, j2)) * D((j3, j4)) - D((j1, j3)) * D((j2, j4)) + D((j1, j4)) * D((j2, j3))
                ),
            )
        )
    return out


def plucker3_reports(mat: Matrix, on_rows: bool, params: dict) -> List[VerifyReport]:
    """D[j1]D[j2,j3|k] - D[j2]D[j1,j3|k] + D[j3]D[j1,j2|k] = 0 on the long side."""
    D = _cut(mat, on_rows)
    count, short = (len(mat), len(mat[0])) if on_rows else (len(mat[0]), len(mat))
    identity = "det-plucker3" if on_rows else "det-plucker3-columns"
    out = []
    for j1, j2, j3 in combinations(range(1, count + 1), 3):
        for k in range(1, short + 1):
            out.append(
                check_zero(
                    identity,
                    dict(params, j=[j1, j2, j3], k=k),
                    lambda j1=j1, j2=j2, j3=j3, k=k: (
                        D((j1,)) * D((j2, j3), (k,)) - D((j2,)) * D((j1, j3), (k,)) + D((j3,)) * D((j1, j2), (k,))
                    ),
                )
            )
    return out


def jacobi_reports(mat: Matrix, params: dict) -> List[VerifyReport]:
    """D D[j1,j2|k1,k2] = D[j1|k1]D[j2|k2] - D[j1|k2]D[j2|k1]."""
    n = len(mat)
    full = det(mat)
    out = []
    for j1, j2 in combinations(range(1, n + 1), 2):
        for k1, k2 in combinations(range(1, n + 1), 2):
            out.append(
                check_equal(
                    "det-jacobi",
                    dict(params, j=[j1, j2], k=[k1, k2]),
                    lambda j1=j1, j2=j2, k1=k1, k2=k2: full * removed(mat, (j1, j2), (k1, k2)),
                    lambda j1=j1, j2=j2, k1=k1, k2=k2: (
                        removed(mat, (j1,), (k1,)) * removed(mat, (j2,), (k2,))
                        - removed(mat, (j1,), (k2,)) * removed(mat, (j2,), (k1,))
                    ),
                )
            )
    return out


def verify_matrix_identities(seed: int = 0, size_max: int = MATRIX_MAX) -> List[VerifyReport]:
    """All matrices have at most size_max rows and columns."""
    rng = np.random.default_rng(seed)
    reports: List[VerifyReport] = []
    for n in range(2, size_max - 1):
        params = {"seed": seed, "n": n}
        reports += plucker_reports(random_matrix(rng, n + 2, n), True, params)
        reports += plucker_reports(random_matrix(rng, n, n + 2), False, params)
    for n in range(2, size_max):
        params = {"seed": seed, "n": n}
        reports += plucker3_reports(random_matrix(rng, n + 1, n), True, params)
        reports += plucker3_reports(random_matrix(rng, n, n + 1), False, params)
    for n in range(2, size_max + 1):
        reports += jacobi_reports(random_matrix(rng, n, n), {"seed": seed, "n": n})
    # repeated rows make every term vanish
    mat = random_matrix(rng, 4, 2)
    mat[1] = list(mat[0])
    reports += plucker_reports(mat, True, {"seed": seed, "n": 2, "repeated": True})
    return reports


# ----------------------------- shift lemmas -----------------------------


def _maya_variants(length: int, start: int) -> List[Tuple[int, ...]]:
    """Two increasing sequences of the given length beginning at start."""
    if length == 0:
        return [()]
    tight = tuple(range(start, start + length))
    gapped = (start,) + tuple(range(start + 2, start + length + 1))
    return [tight] if tight == gapped else [tight, gapped]


def shift_lemma_reports(fam, B, F, base: dict) -> List[VerifyReport]:
    m, n = len(B), len(F)
    ratio = _prod_z(fam, F) / _prod_z(fam, B)
    out = []
    for alpha in range(3):
        beta = m + alpha - n
        if beta < 0:
            continue
        sign = -1 if alpha % 2 else 1
        for r in _maya_variants(alpha, 1):
            for s in (_maya_variants(beta, 0) if beta else []):
                out.append(
                    check_equal(
                        "shift-lemma-zero-column",
                        dict(base, r=list(r), s=list(s)),
                        lambda r=r, s=s: delta_minor(fam, B, F, r, s, 4),
                        lambda r=r, s=s: delta_minor(
                            fam, B, F, tuple(v - 1 for v in r), tuple(v + 1 for v in s), 0
                        ) * (sign * ratio),
                    )
                )
        if not alpha:
            continue
        for r in _maya_variants(alpha, 0):
            for s in _maya_variants(beta, 1):
                out.append(
                    check_equal(
                        "shift-lemma-zero-row",
                        dict(base, r=list(r), s=list(s)),
                        lambda r=r, s=s: delta_minor(fam, B, F, r, s, -4),
                        lambda r=r, s=s: delta_minor(
                            fam, B, F, tuple(v + 1 for v in r), tuple(v - 1 for v in s), 0
                        ) * (sign / ratio),
                    )
                )
    return out


def uniform_shift_reports(fam, base: dict) -> List[VerifyReport]:
    """Boson-only minors move their columns by c, fermion-only ones their rows."""
    tw = fam.twist
    B, F = tw.bosons(), tw.fermions()
    out = []
    for c in range(1, SHIFT_C_MAX + 1):
        if B:
            s = tuple(range(1, len(B) + 1))
            out.append(
                check_equal(
                    "shift-lemma-bosons",
                    dict(base, c=c),
                    lambda c=c: delta_minor(fam, B, (), (), tuple(v + c for v in s), 0),
                    lambda c=c: delta_minor(fam, B, (), (), s, 4 * c) * _prod_z(fam, B) ** c,
                )
            )
        if F:
            r = tuple(range(1, len(F) + 1))
            zf = (-1) ** len(F) * _prod_z(fam, F)
            out.append(
                check_equal(
                    "shift-lemma-fermions",
                    dict(base, c=c),
                    lambda c=c: delta_minor(fam, (), F, tuple(v + c for v in r), (), 0),
                    lambda c=c: delta_minor(fam, (), F, r, (), -4 * c) * zf**c,
                )
            )
    return out


# ----------------------------- index order -----------------------------


def index_order_reports(fam, B, F, base: dict) -> List[VerifyReport]:
    """Reordering B and F permutes rows and columns of the minor: the determinant takes
    the two permutation signs and the normalized Q_{B u F} stays the same."""
    B, F = tuple(B), tuple(F)
    m, n = len(B), len(F)
    r, s = empty_maya(m, n)
    shift = -2 * (m - n)
    natural = {}

    def reference(normalized: bool):
        if normalized not in natural:
            value = wronskian_Q(fam, B, F) if normalized else delta_minor(fam, B, F, r, s, shift)
            natural[normalized] = value
        return natural[normalized]

    out = []
    for Bp in permutations(B):
        for Fp in permutations(F):
            if (Bp, Fp) == (B, F):
                continue
            sign = perm_sign(Bp, B) * perm_sign(Fp, F)
            params = dict(base, B=list(Bp), F=list(Fp), sign=sign)
            out.append(
                check_equal(
                    "wronskian-q-order",
                    params,
                    lambda Bp=Bp, Fp=Fp: delta_minor(fam, Bp, Fp, r, s, shift),
                    lambda sign=sign: reference(False) * sign,
                )
            )
            out.append(
                check_equal(
                    "wronskian-q-order-normalized",
                    params,
                    lambda Bp=Bp, Fp=Fp: wronskian_Q(fam, Bp, Fp),
                    lambda: reference(True),
                )
            )
    return out


# ----------------------------- denominators -----------------------------


def bf_identity_reports(grid: int = BF_GRID) -> List[VerifyReport]:
    """Signed empty minor at x = 0 of an all-ones family equals the Cauchy product."""
    out = []
    for m in range(grid + 1):
        for n in range(grid + 1):
            if not m + n:
                continue
            tw = TwistData.default(m, n)
            fam = trivial_family(m, n, tw.z, tw.t)
            B, F = tw.bosons(), tw.fermions()
            out.append(
                check_equal(
                    "bf-id",
                    {"m": m, "n": n},
                    lambda fam=fam, B=B, F=F: empty_minor_at_zero(fam, B, F),
                    lambda m=m, n=n, tw=tw, B=B, F=F: bf_sign(m, n) * cauchy_denominator(B, F, tw),
                )
            )
    return out


def denominator_relation_reports(tw: TwistData) -> List[VerifyReport]:
    D = lambda B, F=(): cauchy_denominator(B, F, tw)  # noqa: E731
    z = tw.zeta
    out = []
    bosons, fermions = tw.bosons(), tw.fermions()
    for alpha, beta in combinations(bosons, 2):
        rest = [b for b in bosons if b not in (alpha, beta)]
        for size in range(len(rest) + 1):
            for B in combinations(rest, size):
                out.append(
                    check_equal(
                        "denominator-bosons",
                        {"B": list(B), "alpha": alpha, "beta": beta},
                        lambda B=B, a=alpha, b=beta: D(B) * D(B + (a, b)),
                        lambda B=B, a=alpha, b=beta: (z(a) - z(b)) * D(B + (a,)) * D(B + (b,)),
                    )
                )
    for alpha, beta in combinations(fermions, 2):
        rest = [f for f in fermions if f not in (alpha, beta)]
        for size in range(len(rest) + 1):
            for F in combinations(rest, size):
                out.append(
                    check_equal(
                        "denominator-fermions",
                        {"F": list(F), "alpha": alpha, "beta": beta},
                        lambda F=F, a=alpha, b=beta: D((), F) * D((), F + (a, b)),
                        lambda F=F, a=alpha, b=beta: (z(b) - z(a)) * D((), F + (a,)) * D((), F + (b,)),
                    )
                )
    for alpha in bosons:
        for beta in fermions:
            B = tuple(b for b in bosons if b != alpha)
            F = tuple(f for f in fermions if f != beta)
            out.append(
                check_equal(
                    "denominator-mixed",
                    {"B": list(B), "F": list(F), "alpha": alpha, "beta": beta},
                    lambda B=B, F=F, a=alpha, b=beta: D(B + (a,), F) * D(B, F + (b,)),
                    lambda B=B, F=F, a=alpha, b=beta: (z(a) - z(b)) * D(B, F) * D(B + (a,), F + (b,)),
                )
            )
    return out


def verify_denominators(h: QHierarchy, opts: Optional[SuiteOptions] = None,
                        sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """bf-id on a grid of default twists and on the hierarchy itself, then the D relations."""
    opts = opts or SuiteOptions()
    reports = bf_identity_reports()
    fam = h.wronskian_family(h.barred)
    for B, F in subset_pairs(h, opts, nonempty=True):
        reports.append(
            check_equal(
                "bf-id-hierarchy",
                {"B": list(B), "F": list(F)},
                lambda B=B, F=F: empty_minor_at_zero(fam, B, F),
                lambda B=B, F=F: bf_sign(len(B), len(F)) * cauchy_denominator(B, F, h.twist),
            )
        )
    reports += denominator_relation_reports(h.twist)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Denominators: {len(reports)} instances, {failed} failed")
    return reports


def verify_det_identities(h: QHierarchy, opts: Optional[SuiteOptions] = None,
                          sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Random-matrix identities (seeded by the hierarchy seed), then the shift lemmas on
    the minors of h; exact, the sample point is not used."""
    opts = opts or SuiteOptions()
    seed = h.seed or 0
    reports = verify_matrix_identities(seed)
    fam = h.wronskian_family(h.barred)
    base = {"M": h.M, "N": h.N, "barred": h.barred}
    for B, F in subset_pairs(h, opts, nonempty=True):
        reports += shift_lemma_reports(fam, B, F, dict(base, B=list(B), F=list(F)))
        reports += index_order_reports(fam, B, F, base)
    reports += uniform_shift_reports(fam, base)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Determinant identities: {len(reports)} instances, {failed} failed")
    return reports
