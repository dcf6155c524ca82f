"""
Determinant-based T-functions of a boson set B and a fermion set F.

- delta_minor: the block minor [[Z, X], [Y, 0]] with chosen Maya columns
- wronskian_T: T_mu as a signed minor normalized by the empty-diagram minor at x = 0
- rect_T: rectangular T^{(a)}_s with boundary values, for any integers a, s
- rectangular_delta_T: the four closed-form rectangular specializations
- laplace_T: subset expansions of T^{(a)}_s (boson and fermion regimes)
- weyl_sum_T: signed sum over S(B) x S(F) (full or coset form)
- typical_T and the one-sided typical factorizations

Functions take the QFamily from QHierarchy.wronskian_family(); on a barred hierarchy
the same code computes the barred T-functions.
"""

import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Dict, Hashable, List, Sequence, Tuple

from ..diagrams import Partition, maya_sequences, mn_index
from ..errors import DegenerateError, RegimeError, VanishingDiagram
from ..exact_arith import ZERO, RationalFn, det, factored_sum
from ..qhierarchy import QFamily, cauchy_denominator, mask_of, minor_matrix
from . import shifts

logger = logging.getLogger(__name__)

BOSON = "boson"
FERMION = "fermion"
REGIMES = (BOSON, FERMION)


def delta_minor(
    fam: QFamily, B: Sequence[int], F: Sequence[int], r: Sequence[int], s: Sequence[int], shift: int = 0
) -> RationalFn:
    """Exact determinant of the minor with every Q argument moved by t^shift."""
    return det(minor_matrix(fam, B, F, r, s, shift))


def _parity_sign(e: int) -> int:
    return -1 if e % 2 else 1


def maya_sign(m: int, n: int, xi: int) -> int:
    return _parity_sign((m + n + 1) * (xi + 1))


def empty_minor_at_zero(fam: QFamily, B: Sequence[int], F: Sequence[int]) -> Fraction:
    """Signed empty-diagram minor at x = 0."""
    key = ("T0", tuple(B), tuple(F))
    hit = fam.cache.get(key)
    if hit is not None:
        return hit
    m, n = len(B), len(F)
    maya = maya_sequences(Partition(), m, n)
    xi = mn_index(Partition(), m, n)
    value = delta_minor(fam.at(Fraction(0)), B, F, maya.r, maya.s, shifts.wronskian(Partition(), m, n))
    out = maya_sign(m, n, xi) * value.eval(0)
    if out == 0:
        raise DegenerateError(f"empty-diagram minor vanishes at x = 0 for B={tuple(B)} F={tuple(F)}")
    fam.cache[key] = out
    return out


def bf_sign(m: int, n: int) -> int:
    """Sign relating the empty minor at x = 0 to the Cauchy denominator."""
    return _parity_sign((m - n) * (m + n - 1) // 2)


def wronskian_T(fam: QFamily, B: Sequence[int], F: Sequence[int], mu: Partition, shift: int = 0) -> RationalFn:
    """T_mu(x t^shift); zero when mu contains the (n+1)^(m+1) rectangle."""
    key = ("T", tuple(B), tuple(F), mu.parts, shift)
    hit = fam.cache.get(key)
    if hit is not None:
        return hit
    m, n = len(B), len(F)
    try:
        maya = maya_sequences(mu, m, n)
    except VanishingDiagram:
        value = RationalFn(ZERO)
    else:
        xi = mn_index(mu, m, n)
        minor = delta_minor(fam, B, F, maya.r, maya.s, shift + shifts.wronskian(mu, m, n))
        value = minor * Fraction(maya_sign(m, n, xi)) / empty_minor_at_zero(fam, B, F)
    fam.cache[key] = value
    return value


def rect_T(fam: QFamily, B: Sequence[int], F: Sequence[int], a: int, s: int, shift: int = 0) -> RationalFn:
    """T^{(a)}_s for any integers: boundary values on a = 0 and s = 0, zero off the
    first quadrant."""
    m, n = len(B), len(F)
    if a == 0:
        return wronskian_T(fam, B, F, Partition(), shift - 2 * s)
    if s == 0 and a > 0:
        return wronskian_T(fam, B, F, Partition(), shift + 2 * a)
    if a < 0 or s < 0:
        return RationalFn(ZERO)
    return wronskian_T(fam, B, F, Partition.rectangle(a, s), shift)


def q_union(fam: QFamily, B: Sequence[int], F: Sequence[int], shift: int) -> RationalFn:
    """Q_{B u F}(x t^shift)."""
    return RationalFn(fam.q(mask_of(tuple(B) + tuple(F)), shift))


def union_is_input(B: Sequence[int], F: Sequence[int]) -> bool:
    """True when the minor of (B, F) reads Q_{B u F} directly: at most one index, or
    one boson with one fermion."""
    m, n = len(B), len(F)
    return m + n <= 1 or (m == 1 and n == 1)


# ------------------------------ rectangular regimes ------------------------------


def rect_regimes(m: int, n: int, a: int, s: int) -> List[int]:
    """Which of the four closed forms (1..4) apply to (s^a)."""
    d = m - n
    out = []
    if a <= d:
        out.append(1)
    if a - s <= d <= a:
        out.append(2)
    if -s <= d <= a - s:
        out.append(3)
    if d <= -s:
        out.append(4)
    return out


def rect_maya(m: int, n: int, a: int, s: int, regime: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], int]:
    """(r, s, sign) of the rectangle (s^a) in one regime."""
    d = m - n
    if regime == 1:
        return (), tuple(range(1, d - a + 1)) + tuple(range(d - a + s + 1, d + s + 1)), 1
    if regime == 2:
        return tuple(range(1, -d + a + 1)), tuple(range(d - a + s + 1, d + s + 1)), _parity_sign((m + n + 1) * a)
    if regime == 3:
        return tuple(range(-d - s + a + 1, -d + a + 1)), tuple(range(1, d + s + 1)), _parity_sign((m + n + 1) * s)
    if regime == 4:
        return tuple(range(1, -d - s + 1)) + tuple(range(-d - s + a + 1, -d + a + 1)), (), 1
    raise ValueError(f"regime must be 1..4, got {regime}")


def rectangular_delta_T(
    fam: QFamily, B: Sequence[int], F: Sequence[int], a: int, s: int, regime: int, shift: int = 0
) -> RationalFn:
    """T^{(a)}_s from the closed-form Maya data of one regime (a, s >= 1)."""
    m, n = len(B), len(F)
    if regime not in rect_regimes(m, n, a, s):
        raise RegimeError(f"regime {regime} does not cover (a,s)=({a},{s}) at (m,n)=({m},{n})")
    r, sq, sign = rect_maya(m, n, a, s, regime)
    arg = shift + shifts.wronskian(Partition.rectangle(a, s), m, n)
    return delta_minor(fam, B, F, r, sq, arg) * Fraction(sign) / empty_minor_at_zero(fam, B, F)


# ------------------------------ Laplace expansions ------------------------------


def _prod_z(fam: QFamily, idx: Sequence[int], negate: bool = False) -> Fraction:
    out = Fraction(1)
    for a in idx:
        out *= -fam.twist.zeta(a) if negate else fam.twist.zeta(a)
    return out


def _cross(fam: QFamily, left: Sequence[int], right: Sequence[int]) -> Fraction:
    """prod_{alpha in left, beta in right} (z_alpha - z_beta)."""
    z = fam.twist.zeta
    out = Fraction(1)
    for i in left:
        for j in right:
            out *= z(i) - z(j)
    return out


def laplace_T(
    fam: QFamily,
    B: Sequence[int],
    F: Sequence[int],
    a: int,
    s: int,
    regime: str = BOSON,
    shift: int = 0,
    relaxed: bool = False,
) -> RationalFn:
    """T^{(a)}_s as a sum over a-subsets of B (boson) or s-subsets of F (fermion).

    Boson regime needs a - s <= m - n, fermion regime a - s >= m - n; relaxed=True
    drops the check and evaluates the sum for any integer a, s.
    """
    m, n = len(B), len(F)
    B, F = tuple(B), tuple(F)
    full = mask_of(B + F)
    terms = []
    if regime == BOSON:
        if not relaxed and a - s > m - n:
            raise RegimeError(f"boson Laplace needs a - s <= m - n, got a={a} s={s} m={m} n={n}")
        rest_arg, sub_arg = shifts.laplace_boson(s, m, n)
        for I in (combinations(B, a) if a >= 0 else ()):
            others = tuple(b for b in B if b not in I)
            coeff = _prod_z(fam, I) ** (s - a + m - n) * _cross(fam, I, F) / _cross(fam, I, others)
            sub = mask_of(I)
            factors: Dict[Hashable, int] = Counter()
            factors[(full ^ sub, shift + rest_arg)] += 1
            factors[(sub, shift + sub_arg)] += 1
            terms.append((coeff, factors))
    elif regime == FERMION:
        if not relaxed and a - s < m - n:
            raise RegimeError(f"fermion Laplace needs a - s >= m - n, got a={a} s={s} m={m} n={n}")
        rest_arg, sub_arg = shifts.laplace_fermion(a, m, n)
        for J in (combinations(F, s) if s >= 0 else ()):
            others = tuple(f for f in F if f not in J)
            coeff = _prod_z(fam, J, negate=True) ** (a - s + n - m) * _cross(fam, B, J) / _cross(fam, others, J)
            sub = mask_of(J)
            factors = Counter()
            factors[(full ^ sub, shift + rest_arg)] += 1
            factors[(sub, shift + sub_arg)] += 1
            terms.append((coeff, factors))
    else:
        raise ValueError(f"regime must be one of {REGIMES}, got {regime!r}")
    return factored_sum(terms, lambda key: fam.q(key[0], key[1]))


def conjugate_laplace_rhs(fam: QFamily, B: Sequence[int], F: Sequence[int], a: int, s: int) -> RationalFn:
    """What the boson Laplace sum turns into under z -> 1/z, t -> 1/t, written on the
    original data."""
    m, n = len(B), len(F)
    sign = _parity_sign(a * (n - m + 1))
    factor = Fraction(sign) * _prod_z(fam, B) ** a / _prod_z(fam, F) ** a
    return laplace_T(fam, B, F, a, -s - (m - n), BOSON, relaxed=True) * factor


def typical_factorization(fam: QFamily, B: Sequence[int], F: Sequence[int], a: int, s: int, shift: int = 0) -> RationalFn:
    """Single-term form of T^{(a)}_s at a = m (any s) or s = n (a >= m)."""
    m, n = len(B), len(F)
    if a == m:
        return laplace_T(fam, B, F, a, s, BOSON, shift, relaxed=True)
    if s == n and a >= m:
        return laplace_T(fam, B, F, a, s, FERMION, shift, relaxed=True)
    raise RegimeError(f"(a,s)=({a},{s}) is not on the a = m or s = n line for (m,n)=({m},{n})")


# ------------------------------ Weyl-group sums ------------------------------


def _weyl_layout(mu: Partition, m: int, n: int):
    xi = mn_index(mu, m, n)
    if xi > m + 1:
        return None
    l = mu.row(xi) + 1
    r = n - m + xi - l
    return xi, l, r


def _weyl_term(fam: QFamily, b: Sequence[int], f: Sequence[int], mu: Partition, layout, shift: int):
    """Coefficient and factors of t_mu for one ordering of B and F."""
    xi, l, r = layout
    m, n = len(b), len(f)
    z = fam.twist.zeta
    base = shift + shifts.weyl(mu, m, n)
    coeff = Fraction(1)
    factors: Dict[Hashable, int] = Counter()
    for i in range(1, xi):
        coeff *= z(b[i - 1]) ** (mu.row(i) + m - n - i)
        factors[(mask_of((b[i - 1],)), base + 2 * (2 * mu.row(i) - 2 * i + 1))] += 1
    for i in range(1, l):
        coeff *= (-z(f[i - 1])) ** (mu.col(i) + n - m - i)
        factors[(mask_of((f[i - 1],)), base + 2 * (-2 * mu.col(i) + 2 * i - 1))] += 1
    for i in range(xi, m + 1):
        bi, fj = b[i - 1], f[l + i - xi - 1]
        coeff *= (-z(fj)) ** r / (z(bi) ** r * (z(bi) - z(fj)))
        factors[(mask_of((bi, fj)), base - 4 * (r + m - n))] += 1
    for i in range(l + m + 1 - xi, n + 1):
        coeff *= (-z(f[i - 1])) ** (n - i)
        factors[(mask_of((f[i - 1],)), base + 2 * (-2 * (m - i) - 1))] += 1
    return coeff, factors


def perm_sign(perm: Sequence[int], ref: Sequence[int]) -> int:
    pos = [ref.index(v) for v in perm]
    sign = 1
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            if pos[i] > pos[j]:
                sign = -sign
    return sign


def weyl_sum_T(
    fam: QFamily, B: Sequence[int], F: Sequence[int], mu: Partition, shift: int = 0, coset: bool = False
) -> RationalFn:
    """Signed Weyl-group sum of t_mu divided by the Cauchy denominator.

    The full sum runs over S(B) x S(F) and is divided by (m - xi + 1)!; the coset form
    keeps one ordering per coset of the subgroup moving the paired b's and f's together.
    """
    B, F = tuple(B), tuple(F)
    m, n = len(B), len(F)
    layout = _weyl_layout(mu, m, n)
    if layout is None:
        return RationalFn(ZERO)
    xi, l, r = layout
    if r < 0:
        return RationalFn(ZERO)
    terms = []
    seen = set()
    for pb in permutations(B):
        for pf in permutations(F):
            if coset:
                pairs = frozenset((pb[i - 1], pf[l + i - xi - 1]) for i in range(xi, m + 1))
                rest = pf[l + m - xi:]
                key = (pb[: xi - 1], pf[: l - 1], pairs, rest)
                if key in seen:
                    continue
                seen.add(key)
            coeff, factors = _weyl_term(fam, pb, pf, mu, layout, shift)
            terms.append((perm_sign(pb, B) * perm_sign(pf, F) * coeff, factors))
    total = factored_sum(terms, lambda key: fam.q(key[0], key[1]))
    denom = cauchy_denominator(B, F, fam.twist)
    if not coset:
        denom *= factorial(m - xi + 1)
    return total / denom


# ------------------------------ typical diagrams ------------------------------


def is_typical_shape(mu: Partition, m: int, n: int) -> bool:
    """mu_{m+1} <= n <= mu_m with m, n >= 1."""
    return m >= 1 and n >= 1 and mu.row(m + 1) <= n <= mu.row(m)


def augmented(mu: Partition, m: int, n: int, c1: int, c2: int) -> Partition:
    """(mu_1+c1, ..., mu_m+c1, n^c2, mu_{m+1}, ...)."""
    head = tuple(mu.row(i) + c1 for i in range(1, m + 1))
    return Partition(head + (n,) * c2 + mu.parts[m:])


def typical_T(
    fam: QFamily, B: Sequence[int], F: Sequence[int], mu: Partition, c1: int = 0, c2: int = 0, shift: int = 0
) -> RationalFn:
    """Factorized T of the augmented diagram: a boson-only T times a fermion-only T."""
    m, n = len(B), len(F)
    if not is_typical_shape(mu, m, n):
        raise RegimeError(f"({mu}) is not typical for (m,n)=({m},{n}): need mu_(m+1) <= n <= mu_m")
    if c1 < 0 or c2 < 0:
        raise RegimeError(f"augmentation must be nonnegative, got c1={c1} c2={c2}")
    tau = Partition(tuple(mu.row(i) - n for i in range(1, m + 1)))
    eta = Partition(mu.parts[m:])
    c = c1 + c2
    prefactor = _prod_z(fam, B) ** c1 * _prod_z(fam, F, negate=True) ** c2 * _cross(fam, B, F)
    left = wronskian_T(fam, B, (), tau, shift + shifts.typical_boson(mu, n, c))
    right = wronskian_T(fam, (), F, eta, shift + shifts.typical_fermion(mu, m, c))
    return left * right * prefactor


def typical_rectangle(fam: QFamily, B: Sequence[int], F: Sequence[int], c1: int, c2: int, shift: int = 0) -> RationalFn:
    """The (n^m) case written directly in Q_B and Q_F."""
    m, n = len(B), len(F)
    c = c1 + c2
    prefactor = _prod_z(fam, B) ** c1 * _prod_z(fam, F, negate=True) ** c2 * _cross(fam, B, F)
    return q_union(fam, B, (), shift + (m + n) + 2 * c) * q_union(fam, (), F, shift - (m + n) - 2 * c) * prefactor


def boson_only_shifted(fam: QFamily, B: Sequence[int], tau: Partition, c1: int, shift: int = 0) -> RationalFn:
    """T^{B,0} of tau with c1 added to all m rows, through T^{B,0}_tau."""
    m = len(B)
    return wronskian_T(fam, B, (), tau, shift + shifts.boson_only_rows(tau, m, c1)) * _prod_z(fam, B) ** c1


def fermion_only_shifted(fam: QFamily, F: Sequence[int], eta: Partition, c2: int, shift: int = 0) -> RationalFn:
    """T^{0,F} of (n^c2, eta), through T^{0,F}_eta."""
    n = len(F)
    return wronskian_T(fam, (), F, eta, shift + shifts.fermion_only_rows(eta, n, c2)) * _prod_z(fam, F, negate=True) ** c2


def rows_added(tau: Partition, m: int, c1: int) -> Partition:
    return Partition(tuple(tau.row(i) + c1 for i in range(1, m + 1)))


def rows_stacked(eta: Partition, n: int, c2: int) -> Partition:
    return Partition((n,) * c2 + eta.parts)

