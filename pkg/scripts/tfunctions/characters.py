"""
Supercharacters: the x -> 0 limit of the T-functions.

- sergeev_pragacz: Weyl-type alternating sum over S_M x S_N
- super_schur_tab: tableau sum with every Q set to one
- wronskian_char: the Wronskian T-function of the full sets at x = 0
"""

import logging
from fractions import Fraction
from itertools import permutations
from typing import Dict, Sequence

from ..diagrams import GradedTuple, Partition, SkewDiagram, hook_check
from ..exact_arith import ONE
from ..qhierarchy import DEFAULT_T, QFamily, QHierarchy, TwistData, subset_order
from .tableaux import tab_sum_F
from .wronskian import perm_sign, wronskian_T

logger = logging.getLogger(__name__)


def sergeev_pragacz(mu: Partition, M: int, N: int, z: Sequence[Fraction]) -> Fraction:
    """S_mu(x|y) with x_i = z_i, y_j = z_{M+j}; x_i = 0 past row M, y_j = 0 past column N.

    Diagrams outside the (M,N)-hook give zero with a warning.
    """
    z = tuple(Fraction(v) for v in z)
    if len(z) != M + N:
        raise ValueError(f"expected {M + N} twist values, got {len(z)}")
    if not hook_check(mu, M, N):
        logger.warning(f"({mu}) is outside the ({M},{N})-hook; supercharacter is 0")
        return Fraction(0)
    xs, ys = z[:M], z[M:]
    cells = mu.cells()
    total = Fraction(0)
    for px in permutations(range(M)):
        for py in permutations(range(N)):
            x = [xs[i] for i in px]
            y = [ys[j] for j in py]
            term = Fraction(perm_sign(px, tuple(range(M))) * perm_sign(py, tuple(range(N))))
            for i in range(M - 1):
                term *= x[i] ** (M - 1 - i)
            for j in range(N - 1):
                term *= y[j] ** (N - 1 - j)
            for i, j in cells:
                xi = x[i - 1] if i <= M else 0
                yj = y[j - 1] if j <= N else 0
                term *= xi - yj
                if not term:
                    break
            total += term
    denom = Fraction(1)
    for i in range(M):
        for j in range(i + 1, M):
            denom *= xs[i] - xs[j]
    for i in range(N):
        for j in range(i + 1, N):
            denom *= ys[i] - ys[j]
    return total / denom


def trivial_family(M: int, N: int, z: Sequence[Fraction], t: Fraction = DEFAULT_T) -> QFamily:
    """Every Q identically one, sampled at x = 0."""
    tw = TwistData(M, N, Fraction(t), tuple(z))
    table: Dict[int, object] = {mask: ONE for mask in subset_order(tw.K)}
    return QFamily(table, tw, sample=Fraction(0))


def super_schur_tab(mu: Partition, M: int, N: int, z: Sequence[Fraction]) -> Fraction:
    """Sum over admissible tableaux of prod p z."""
    fam = trivial_family(M, N, z)
    value = tab_sum_F(fam, GradedTuple.full(M, N), SkewDiagram(mu))
    return value.eval(0)


def wronskian_char(h: QHierarchy, mu: Partition, B: Sequence[int] = None, F: Sequence[int] = None) -> Fraction:
    """T_mu of (B, F) (all bosons and fermions by default) at x = 0."""
    B = h.twist.bosons() if B is None else tuple(B)
    F = h.twist.fermions() if F is None else tuple(F)
    fam = h.wronskian_family(h.barred, sample=Fraction(0))
    return wronskian_T(fam, B, F, mu).eval(0)


def character_table(h: QHierarchy, mu: Partition) -> Dict[str, Fraction]:
    """The three supercharacter values of mu for the twist of h."""
    tw = h.twist
    return {
        "sergeev_pragacz": sergeev_pragacz(mu, tw.M, tw.N, tw.z),
        "super_schur_tab": super_schur_tab(mu, tw.M, tw.N, tw.z),
        "wronskian_char": wronskian_char(h, mu),
    }
