"""
Degree bounds behind fast mode.

Every checked value is a rational function N/C of the stored Q's read at shifted
arguments, with constant coefficients. Weight(num, den) bounds the total degree of N and
C in those Q's; a suite's weight bounds the numerator of lhs - rhs over all its
instances. With every stored Q of degree at most D, lhs - rhs has a numerator of
degree at most weight * D in x, so agreement at weight * D + 1 points where no Q
vanishes proves the relation.

- determinant T's (Wronskian, Laplace, Weyl, typical) are polynomials of degree at most
  the matrix size, K + |mu|
- a tableau sum over a diagram of S cells has one common denominator of degree at most
  (K + 1) * S: a factor is a prefix Q at the argument of one diagonal, and a cell puts
  at most one copy of it into a term; every term has degree zero
- a Jacobi-Trudi determinant is bounded row by row through its one-row entries
"""

from dataclasses import dataclass
from functools import reduce
from math import comb
from typing import Callable, Dict, Iterable, Sequence

from ..diagrams import Partition, SkewDiagram
from ..qhierarchy import QHierarchy
from .crosscheck import ORDER_SIZE, REVERSE_SIZE, hook_partitions
from .options import SuiteOptions


@dataclass(frozen=True)
class Weight:
    """deg N <= num and deg C <= den, degrees counted in stored Q's."""

    num: int
    den: int = 0

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(max(self.num + other.den, other.num + self.den), self.den + other.den)

    def __mul__(self, other: "Weight") -> "Weight":
        return Weight(self.num + other.num, self.den + other.den)


Q = Weight(1)
CONSTANT = Weight(0)


def total(weights: Iterable[Weight]) -> Weight:
    return reduce(lambda a, b: a + b, weights, CONSTANT)


def difference(lhs: Weight, rhs: Weight) -> int:
    """Bound on the numerator of lhs - rhs."""
    return (lhs + rhs).num


def bilinear(w: Weight) -> int:
    """A product of two values against a sum of two such products."""
    return difference(w * w, w * w + w * w)


def determinant_T(K: int, size: int) -> Weight:
    return Weight(max(K + size, 2))


def tableau_F(K: int, size: int, normalized: bool = True) -> Weight:
    den = (K + 1) * size
    return Weight(den + int(normalized), den)


def jacobi_trudi_F(K: int, mu: Partition) -> Weight:
    """Normalized F through either Jacobi-Trudi axis, on the rotated diagram."""
    d = SkewDiagram(mu).rotate180()
    outer, inner = d.outer, d.inner
    rows = sum(
        max(outer.row(j) - inner.row(i) + i - j, 0)
        for i in range(1, outer.height + 1)
        for j in range(1, outer.height + 1)
    )
    cols = sum(
        max(outer.col(i) - inner.col(j) - i + j, 0)
        for i in range(1, outer.width + 1)
        for j in range(1, outer.width + 1)
    )
    den = (K + 1) * max(rows, cols)
    return Weight(den + 1, den)


# ----------------------------- suites -----------------------------


def qq_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    return difference(Q * Q, Q * Q + Q * Q)


def tsystem_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    M, N, K = h.M, h.N, h.twist.K
    dual = opts.duality_max
    size = max((opts.a_max + 1) * (opts.s_max + 1), M * (dual + N), (dual + M) * N)
    f_size = max((opts.f_max + 1) ** 2, M * (1 + N), (1 + M) * N)
    return max(bilinear(determinant_T(K, size)), bilinear(tableau_F(K, f_size)))


def backlund_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    K = h.twist.K
    size = (opts.a_max + 1) * (opts.s_max + 1)
    f_size = (opts.f_max + 1) ** 2
    return max(bilinear(determinant_T(K, size)), bilinear(tableau_F(K, f_size)))


def baxter_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    M, N, K = h.M, h.N, h.twist.K
    size = M * N + max(M, N)
    terms = max(M, N) + 1
    wronskian = total([determinant_T(K, size) * Q] * terms)
    tableau = total([tableau_F(K, size) * Q] * terms)
    return max(difference(wronskian, CONSTANT), difference(tableau, CONSTANT))


def conserved_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    pool = max(h.M, h.N)
    C = comb(pool, pool // 2)
    # Laplace sums: every term is a product of two Q's
    return max(2 * (C + 1), 4 * C)


def conjugation_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    K = h.twist.K
    box = Weight(2, 2)
    box_sum = difference(tableau_F(K, 1, normalized=False), total([box] * K))
    involution = difference(determinant_T(K, 3), determinant_T(K, 3))
    return max(qq_weight(h, opts), box_sum, involution, 2)


def reverse_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    w = tableau_F(h.twist.K, REVERSE_SIZE, normalized=False)
    return difference(w, w)


def convolution_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    K = h.twist.K
    out = 0
    for s in range(opts.conv_max + 1):
        rhs = total(tableau_F(K, a, False) * tableau_F(K, s - a, False) for a in range(s + 1))
        out = max(out, difference(tableau_F(K, s, False), rhs))
    return out


def box_complement_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    return difference(Weight(2, 2), Weight(2, 2))


def routes_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    M, N, K = h.M, h.N, h.twist.K
    out = 0
    for mu in hook_partitions(M, N, opts.size_max):
        ref = determinant_T(K, mu.size)
        for w in (tableau_F(K, mu.size), jacobi_trudi_F(K, mu), ref):
            out = max(out, difference(w, ref))
    rect = determinant_T(K, opts.a_max * opts.s_max)
    typical = determinant_T(K, M * N + 3 + K * opts.typical_max)
    return max(out, difference(rect, rect), difference(typical, typical))


def order_weight(h: QHierarchy, opts: SuiteOptions) -> int:
    w = tableau_F(h.twist.K, ORDER_SIZE, normalized=False)
    return difference(w, w)


SUITE_WEIGHTS: Dict[str, Callable[[QHierarchy, SuiteOptions], int]] = {
    "qq": qq_weight,
    "tsystem": tsystem_weight,
    "backlund": backlund_weight,
    "baxter": baxter_weight,
    "conserved": conserved_weight,
    "conjugation": conjugation_weight,
    "reverse": reverse_weight,
    "convolution": convolution_weight,
    "box-complement": box_complement_weight,
    "routes": routes_weight,
    "order": order_weight,
}


def required_samples(h: QHierarchy, name: str, opts: SuiteOptions) -> int:
    """Points that make a sampled run of the suite a proof."""
    return SUITE_WEIGHTS[name](h, opts) * h.max_degree() + 1


def sample_requirements(h: QHierarchy, names: Sequence[str], opts: SuiteOptions) -> Dict[str, int]:
    return {name: required_samples(h, name, opts) for name in names if name in SUITE_WEIGHTS}
