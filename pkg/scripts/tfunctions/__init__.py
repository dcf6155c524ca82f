"""
T-functions of a Q hierarchy by every route: tableau sums, Jacobi-Trudi determinants,
Wronskian minors, Laplace expansions, Weyl-group sums, typical factorizations and the
x = 0 supercharacters.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..diagrams import GradedTuple
from ..qhierarchy import QFamily, QHierarchy
from .characters import character_table, sergeev_pragacz, super_schur_tab, wronskian_char
from .checks import box_complement_check, conv_series_check, reverse_check
from .tableaux import (
    box_X,
    box_Xbar,
    box_Xconj,
    jacobi_trudi,
    normalized_F,
    normalized_Fbar,
    normalized_rect,
    tab_sum_F,
    tab_sum_Fbar,
    tableau_family,
)
from .wronskian import (
    delta_minor,
    laplace_T,
    rect_T,
    rectangular_delta_T,
    typical_T,
    weyl_sum_T,
    wronskian_T,
)


@dataclass(frozen=True)
class TContext:
    """A hierarchy with the index data one T-function call needs.

    tup drives the tableau routes; (B, F) drive the determinant routes. Both default
    to the full index set in its natural order.
    """

    hierarchy: QHierarchy
    tup: Optional[GradedTuple] = None
    B: Optional[Tuple[int, ...]] = None
    F: Optional[Tuple[int, ...]] = None

    @classmethod
    def of(cls, h: QHierarchy, tup: Optional[Sequence[int]] = None, B=None, F=None) -> "TContext":
        tw = h.twist
        tup_ = GradedTuple(tuple(tup), tw.M, tw.N) if tup is not None else GradedTuple.full(tw.M, tw.N)
        B_ = tuple(B) if B is not None else tw.bosons()
        F_ = tuple(F) if F is not None else tw.fermions()
        if any(not tw.is_boson(b) for b in B_):
            raise ValueError(f"B must hold bosonic indices 1..{tw.M}, got {B_}")
        if any(tw.is_boson(f) or f > tw.K for f in F_):
            raise ValueError(f"F must hold fermionic indices {tw.M + 1}..{tw.K}, got {F_}")
        return cls(h, tup_, B_, F_)

    @property
    def m(self) -> int:
        return len(self.B)

    @property
    def n(self) -> int:
        return len(self.F)

    def tableau_view(self, sample: Optional[Fraction] = None) -> QFamily:
        return tableau_family(self.hierarchy, self.hierarchy.barred, sample)

    def determinant_view(self, sample: Optional[Fraction] = None) -> QFamily:
        return self.hierarchy.wronskian_family(self.hierarchy.barred, sample)


__all__ = [
    "TContext",
    "box_X",
    "box_Xbar",
    "box_Xconj",
    "box_complement_check",
    "character_table",
    "conv_series_check",
    "delta_minor",
    "jacobi_trudi",
    "laplace_T",
    "normalized_F",
    "normalized_Fbar",
    "normalized_rect",
    "rect_T",
    "rectangular_delta_T",
    "reverse_check",
    "sergeev_pragacz",
    "super_schur_tab",
    "tab_sum_F",
    "tab_sum_Fbar",
    "tableau_family",
    "typical_T",
    "weyl_sum_T",
    "wronskian_T",
    "wronskian_char",
]
