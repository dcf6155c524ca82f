"""
One entry point per route for T_mu of a (B, F) pair.

The tableau routes use the tuple B then F in increasing order (or the tuple given),
the determinant routes use the sets. On a barred hierarchy every route returns the
barred function.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..diagrams import GradedTuple, Partition
from ..errors import RegimeError
from ..exact_arith import RationalFn
from ..qhierarchy import QHierarchy
from .tableaux import normalized_F, normalized_Fbar, tableau_family
from .wronskian import BOSON, FERMION, is_typical_shape, laplace_T, typical_T, weyl_sum_T, wronskian_T

logger = logging.getLogger(__name__)

ROUTES = ("tab", "row", "column", "wronskian", "weyl", "coset", "laplace", "typical")
DEFAULT_CHECK_ROUTES = ("tab", "row", "column", "wronskian", "weyl")


def parse_routes(text: str) -> List[str]:
    """'tab,wronskian' or 'all'."""
    if text.strip() == "all":
        return list(ROUTES)
    routes = [r.strip() for r in text.split(",") if r.strip()]
    unknown = [r for r in routes if r not in ROUTES]
    if unknown:
        raise ValueError(f"unknown route(s) {unknown}; choose from {ROUTES}")
    return routes


def t_by_route(
    h: QHierarchy,
    mu: Partition,
    route: str,
    B: Sequence[int],
    F: Sequence[int],
    shift: int = 0,
    sample: Optional[Fraction] = None,
    tup: Optional[Sequence[int]] = None,
) -> RationalFn:
    """T_mu(x t^shift) of (B, F) computed by the named route."""
    B, F = tuple(B), tuple(F)
    m, n = len(B), len(F)
    if route in ("tab", "row", "column"):
        order = GradedTuple(tuple(tup) if tup is not None else B + F, h.M, h.N)
        if sorted(order.indices) != sorted(B + F):
            raise ValueError(f"tuple {order.indices} does not enumerate B u F = {sorted(B + F)}")
        fam = tableau_family(h, h.barred, sample)
        if h.barred:
            return normalized_Fbar(fam, order, mu, shift, route)
        return normalized_F(fam, order, mu, shift, route)
    fam = h.wronskian_family(h.barred, sample)
    if route == "wronskian":
        return wronskian_T(fam, B, F, mu, shift)
    if route in ("weyl", "coset"):
        return weyl_sum_T(fam, B, F, mu, shift, coset=route == "coset")
    if route == "laplace":
        if mu and mu.parts != (mu.width,) * mu.height:
            raise RegimeError(f"the Laplace route needs a rectangular diagram, got ({mu})")
        a, s = mu.height, mu.width
        regime = BOSON if a - s <= m - n else FERMION
        return laplace_T(fam, B, F, a, s, regime, shift)
    if route == "typical":
        if not is_typical_shape(mu, m, n):
            raise RegimeError(f"({mu}) is not typical for (m,n)=({m},{n})")
        return typical_T(fam, B, F, mu, 0, 0, shift)
    raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")


def compare_routes(
    h: QHierarchy,
    mu: Partition,
    routes: Sequence[str],
    B: Sequence[int],
    F: Sequence[int],
    sample: Optional[Fraction] = None,
) -> Dict[str, Optional[RationalFn]]:
    """Value per route; None where the route's precondition does not hold."""
    out: Dict[str, Optional[RationalFn]] = {}
    for route in routes:
        try:
            out[route] = t_by_route(h, mu, route, B, F, sample=sample)
        except RegimeError as e:
            logger.info(f"route {route} skipped for ({mu}): {e}")
            out[route] = None
    return out


def routes_agree(values: Dict[str, Optional[RationalFn]]) -> bool:
    present = [v for v in values.values() if v is not None]
    return all(v == present[0] for v in present[1:])

