#!/usr/bin/env python3
"""
qhierarchy.py

Construction and storage of the 2^(M+N) Baxter Q-functions.

- TwistData: (M, N), shift base t (q = t^2) and twists z_1..z_{M+N}
- gen_singles: seeded random single-index polynomials with Q_i(0) = 1
- solve_pair: boson-fermion pair function from the bilinear pair relation
- wronskian_Q: every larger set from the Wronskian-type determinant
- QHierarchy: the table, in one of two normalizations
    unbarred: table[I] = Q_I with Q_empty = 1
    barred:   table[J] = Qbar_J = Q_{complement of J} with Qbar_empty = 1
- QFamily: a read-only view of a table used by the T-function routes

Subsets are bitmasks over the indices: index a is bit (a - 1).
All shift exponents are integers in units of t, so q^(1/2) is one step.

Usage:
  from baxterq.qhierarchy import TwistData, GenConfig, build_hierarchy
  h = build_hierarchy(TwistData.default(2, 1), GenConfig(seed=0, degrees=(1, 1, 1)))
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    ConventionError,
    DegenerateError,
    GenericityError,
    HierarchyFormatError,
    ResonanceError,
)
from .exact_arith import ONE, LaurentPoly, RationalFn, as_scalar, det

logger = logging.getLogger(__name__)

# ----------------------------- config -----------------------------
UNBARRED = "unbarred"
BARRED = "barred"
CONVENTIONS = (UNBARRED, BARRED)

DEFAULT_T = Fraction(2)
DEFAULT_K_MAX = 8
DEFAULT_COEFF_BOUND = 3
MAX_REGENERATIONS = 8
FILE_MAGIC = "# baxterq hierarchy v1"


def first_primes(count: int) -> List[int]:
    primes: List[int] = []
    k = 2
    while len(primes) < count:
        if all(k % p for p in primes):
            primes.append(k)
        k += 1
    return primes


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for a in indices:
        out |= 1 << (a - 1)
    return out


def indices_of(mask: int) -> Tuple[int, ...]:
    out = []
    a = 1
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


@dataclass(frozen=True)
class TwistData:
    """Twist parameters and shift base for gl(M|N)."""

    M: int
    N: int
    t: Fraction
    z: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.M < 0 or self.N < 0:
            raise GenericityError(f"M and N must be nonnegative, got ({self.M},{self.N})")
        z = tuple(as_scalar(v) for v in self.z)
        if len(z) != self.M + self.N:
            raise GenericityError(
                f"expected {self.M + self.N} twist parameters for ({self.M},{self.N}), got {len(z)}"
            )
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "t", as_scalar(self.t))

    @classmethod
    def default(cls, M: int, N: int, t=DEFAULT_T) -> "TwistData":
        """z_a = a-th prime."""
        return cls(M, N, Fraction(t), tuple(Fraction(p) for p in first_primes(M + N)))

    @property
    def K(self) -> int:
        return self.M + self.N

    @property
    def q(self) -> Fraction:
        return self.t * self.t

    @property
    def full_mask(self) -> int:
        return (1 << self.K) - 1

    def grading(self, a: int) -> int:
        return 1 if a <= self.M else -1

    def zeta(self, a: int) -> Fraction:
        return self.z[a - 1]

    def is_boson(self, a: int) -> bool:
        return a <= self.M

    def bosons(self) -> Tuple[int, ...]:
        return tuple(range(1, self.M + 1))

    def fermions(self) -> Tuple[int, ...]:
        return tuple(range(self.M + 1, self.K + 1))

    def split(self, mask: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """(B, F) of a subset, each in increasing order."""
        idx = indices_of(mask)
        return tuple(a for a in idx if a <= self.M), tuple(a for a in idx if a > self.M)

    def grading_sum(self, mask: int) -> int:
        return sum(self.grading(a) for a in indices_of(mask))

    def conjugated(self) -> "TwistData":
        """z -> 1/z with every shift reversed (t -> 1/t)."""
        if self.t == 0 or any(v == 0 for v in self.z):
            raise GenericityError("cannot conjugate twist data with zero entries")
        return TwistData(self.M, self.N, 1 / self.t, tuple(1 / v for v in self.z))

    def describe(self) -> str:
        zs = ",".join(str(v) for v in self.z)
        return f"(M,N)=({self.M},{self.N}) t={self.t} z=[{zs}]"


def parse_scalar_list(text: str) -> Tuple[Fraction, ...]:
    """'2,3,5/2' -> (2, 3, 5/2)."""
    return tuple(Fraction(v) for v in text.replace(" ", "").split(",") if v != "")


# ------------------------------ genericity ------------------------------


def _resonance_k(ratio: Fraction, q: Fraction, k_max: int) -> Optional[Fraction]:
    """k with ratio == q^(2k), 0 < |k| <= k_max and 2k integral, else None."""
    for e in range(1, 2 * k_max + 1):
        if ratio == q**e:
            return Fraction(e, 2)
        if ratio == q**-e:
            return Fraction(-e, 2)
    return None


def _scan_twist(tw: TwistData, k_max: int) -> List[Tuple[str, Optional[Fraction]]]:
    problems: List[Tuple[str, Optional[Fraction]]] = []
    if tw.t in (0, 1, -1):
        problems.append((f"t = {tw.t} makes q = t^2 a root of unity or zero", None))
    for a, v in enumerate(tw.z, start=1):
        if v == 0:
            problems.append((f"z_{a} = 0", None))
    for a, b in combinations(range(1, tw.K + 1), 2):
        if tw.zeta(a) == tw.zeta(b):
            problems.append((f"duplicate twist z_{a} = z_{b} = {tw.zeta(a)}", None))
    if problems:
        return problems
    for b in tw.bosons():
        for f in tw.fermions():
            k = _resonance_k(tw.zeta(f) / tw.zeta(b), tw.q, k_max)
            if k is not None:
                msg = f"resonance: z_{f}/z_{b} = q^{2 * k} (k={k}), q^k z_{b} - q^-k z_{f} vanishes"
                problems.append((msg, k))
    return problems


def validate_genericity(tw: TwistData, k_max: int = DEFAULT_K_MAX) -> List[str]:
    """Every violated twist invariant up to k_max; empty when the data is generic.

    Resonances are boson-fermion pairs with z_f/z_b = q^(2k), 0 < |k| <= k_max; half-integer
    k is included since T-functions shift by q^(1/2).
    """
    return [msg for msg, _ in _scan_twist(tw, k_max)]


def require_generic(tw: TwistData, k_max: int = DEFAULT_K_MAX) -> None:
    problems = _scan_twist(tw, k_max)
    if not problems:
        return
    messages = [msg for msg, _ in problems]
    for msg in messages:
        logger.debug(msg)
    for msg, k in problems:
        if k is not None:
            raise ResonanceError(f"{tw.describe()}: {msg}", k, messages)
    raise GenericityError(f"{tw.describe()}: {messages[0]}", messages)


# ------------------------------ generation ------------------------------


@dataclass(frozen=True)
class GenConfig:
    """Seed, per-index degrees and coefficient pool for random singles."""

    seed: int = 0
    degrees: Tuple[int, ...] = (1,)
    coeff_bound: int = DEFAULT_COEFF_BOUND
    k_max: int = DEFAULT_K_MAX

    def degree_of(self, a: int) -> int:
        """Degree of Q_a; a short list repeats its last entry."""
        if not self.degrees:
            return 0
        d = self.degrees[a - 1] if a <= len(self.degrees) else self.degrees[-1]
        if d < 0:
            raise ValueError(f"degrees must be nonnegative, got {d}")
        return d


def coefficient_pool(bound: int) -> List[Fraction]:
    """Sorted distinct rationals p/r with |p| <= bound, 1 <= r <= bound."""
    pool = {Fraction(p, r) for p in range(-bound, bound + 1) for r in range(1, bound + 1)}
    return sorted(pool)


def gen_singles(tw: TwistData, cfg: GenConfig) -> Dict[int, LaurentPoly]:
    """Q_a for every index a, deterministic in cfg.seed."""
    rng = np.random.default_rng(cfg.seed)
    pool = coefficient_pool(max(1, cfg.coeff_bound))
    nonzero = [c for c in pool if c != 0]
    singles: Dict[int, LaurentPoly] = {}
    for a in range(1, tw.K + 1):
        d = cfg.degree_of(a)
        coeffs = [Fraction(1)]
        for k in range(1, d + 1):
            choices = nonzero if k == d else pool
            coeffs.append(choices[int(rng.integers(len(choices)))])
        singles[a] = LaurentPoly(coeffs)
    return singles


def solve_pair(
    b: int, f: int, Qb: LaurentPoly, Qf: LaurentPoly, tw: TwistData, barred: bool = False
) -> LaurentPoly:
    """Polynomial Q_{bf} with Q_{bf}(0) = 1 from the boson-fermion pair relation.

    Unbarred: (z_b - z_f) Q_b Q_f (x) = z_b Q_bf(xq) - z_f Q_bf(x/q).
    Barred:   the same relation with q -> 1/q.
    """
    zb, zf = tw.zeta(b), tw.zeta(f)
    q = tw.q if not barred else 1 / tw.q
    prod = Qb * Qf
    coeffs: Dict[int, Fraction] = {}
    for k, c in prod.items():
        denom = q**k * zb - q**-k * zf
        if denom == 0:
            raise ResonanceError(
                f"pair ({b},{f}): q^{k} z_{b} - q^-{k} z_{f} = 0 at k={k}", Fraction(k)
            )
        coeffs[k] = (zb - zf) * c / denom
    return LaurentPoly(coeffs)


def cauchy_denominator(B: Sequence[int], F: Sequence[int], tw: TwistData) -> Fraction:
    """prod_{i<j}(z_bi - z_bj) prod_{i<j}(z_fj - z_fi) / prod_{i,j}(z_bi - z_fj)."""
    num = Fraction(1)
    for i, j in combinations(range(len(B)), 2):
        num *= tw.zeta(B[i]) - tw.zeta(B[j])
    for i, j in combinations(range(len(F)), 2):
        num *= tw.zeta(F[j]) - tw.zeta(F[i])
    den = Fraction(1)
    for b in B:
        for f in F:
            den *= tw.zeta(b) - tw.zeta(f)
    if den == 0:
        raise DegenerateError(f"equal twists between bosons {B} and fermions {F}")
    return num / den


# ------------------------------ views ------------------------------


@dataclass(eq=False)
class QFamily:
    """Read-only view of a Q table.

    q(mask, k) is the stored function for mask (or for its complement) at x * t^(sign*k).
    With sample set, every function is evaluated at that rational point and returned as
    a constant, which turns every route into scalar arithmetic.
    """

    table: Dict[int, LaurentPoly]
    twist: TwistData
    complement: bool = False
    sign: int = 1
    sample: Optional[Fraction] = None
    cache: Dict = field(default_factory=dict, repr=False)

    def poly(self, mask: int) -> LaurentPoly:
        key = self.twist.full_mask ^ mask if self.complement else mask
        try:
            return self.table[key]
        except KeyError:
            raise HierarchyFormatError(f"missing Q-function for subset {indices_of(key)}") from None

    def q(self, mask: int, k: int = 0) -> LaurentPoly:
        key = (mask, k)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        p = self.poly(mask)
        if self.sample is None:
            out = p.shift(self.sign * k, self.twist.t)
        else:
            out = LaurentPoly.constant(p(self.sample * self.twist.t ** (self.sign * k)))
        self.cache[key] = out
        return out

    def with_sign(self, sign: int) -> "QFamily":
        return QFamily(self.table, self.twist, self.complement, sign, self.sample)

    def at(self, sample: Optional[Fraction]) -> "QFamily":
        return QFamily(self.table, self.twist, self.complement, self.sign, sample)

    @property
    def is_sampled(self) -> bool:
        return self.sample is not None


# ------------------------------ Wronskian Q ------------------------------


def minor_matrix(
    fam: QFamily,
    B: Sequence[int],
    F: Sequence[int],
    r: Sequence[int],
    s: Sequence[int],
    shift: int = 0,
) -> List[List[RationalFn]]:
    """Block matrix [[Z, X], [Y, 0]] with every Q argument moved by t^shift.

    Z_{b,f} = Q_bf / (z_b - z_f), X_{b,s} = z_b^(s-1) Q_b(x q^(2s-1)),
    Y_{r,f} = (-z_f)^(r-1) Q_f(x q^(1-2r)).
    """
    tw = fam.twist
    if len(B) + len(r) != len(F) + len(s):
        raise ValueError(f"minor size mismatch: |B|+|r| = {len(B) + len(r)}, |F|+|s| = {len(F) + len(s)}")
    rows: List[List[RationalFn]] = []
    for b in B:
        zb = tw.zeta(b)
        row = [
            RationalFn(fam.q(mask_of((b, f)), shift).scale(1 / (zb - tw.zeta(f)))) for f in F
        ]
        row += [RationalFn(fam.q(mask_of((b,)), shift + 2 * (2 * sl - 1)).scale(zb ** (sl - 1))) for sl in s]
        rows.append(row)
    zero = RationalFn(LaurentPoly())
    for rk in r:
        row = [
            RationalFn(fam.q(mask_of((f,)), shift + 2 * (1 - 2 * rk)).scale((-tw.zeta(f)) ** (rk - 1)))
            for f in F
        ]
        row += [zero] * len(s)
        rows.append(row)
    return rows


def empty_maya(m: int, n: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(r, s) of the empty diagram: s = 1..m-n when m >= n, else r = 1..n-m."""
    if m >= n:
        return (), tuple(range(1, m - n + 1))
    return tuple(range(1, n - m + 1)), ()


def wronskian_Q(fam: QFamily, B: Sequence[int], F: Sequence[int]) -> LaurentPoly:
    """Q_{B u F} from the determinant of its minor at the empty diagram.

    Requires singles and boson-fermion pairs of B u F in fam. The value at x = 0 is
    normalized to one.
    """
    m, n = len(B), len(F)
    if m + n == 0:
        return ONE
    r, s = empty_maya(m, n)
    value = det(minor_matrix(fam, B, F, r, s, shift=-2 * (m - n)))
    poly = value.as_polynomial()
    if poly is None:
        raise DegenerateError(f"Wronskian for B={tuple(B)} F={tuple(F)} is not a polynomial")
    at_zero = poly(0)
    if at_zero == 0:
        raise DegenerateError(f"Wronskian for B={tuple(B)} F={tuple(F)} vanishes at x = 0")
    return poly.scale(1 / at_zero)


# ------------------------------ hierarchy ------------------------------


@dataclass
class QHierarchy:
    """All 2^(M+N) Q-functions of one normalization."""

    twist: TwistData
    convention: str
    table: Dict[int, LaurentPoly]
    seed: Optional[int] = None
    degrees: Tuple[int, ...] = ()
    mutation: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"convention must be one of {CONVENTIONS}, got {self.convention!r}")

    @property
    def M(self) -> int:
        return self.twist.M

    @property
    def N(self) -> int:
        return self.twist.N

    @property
    def barred(self) -> bool:
        return self.convention == BARRED

    def Q(self, mask: int) -> LaurentPoly:
        """Q_I in the unbarred labelling, whatever the storage."""
        return self.table[self.twist.full_mask ^ mask if self.barred else mask]

    def Qbar(self, mask: int) -> LaurentPoly:
        return self.table[mask if self.barred else self.twist.full_mask ^ mask]

    def family(self, sample: Optional[Fraction] = None) -> QFamily:
        """Q_I view, shifts as written."""
        return QFamily(self.table, self.twist, complement=self.barred, sign=1, sample=sample)

    def bar_family(self, sample: Optional[Fraction] = None) -> QFamily:
        """Qbar_I view, shifts as written."""
        return QFamily(self.table, self.twist, complement=not self.barred, sign=1, sample=sample)

    def wronskian_family(self, barred: bool, sample: Optional[Fraction] = None) -> QFamily:
        """View on which the unbarred determinant formulas compute the requested side.

        The barred formulas are the unbarred ones with q -> 1/q and Q -> Qbar, so the
        barred side reads Qbar with reversed shifts.
        """
        if barred != self.barred:
            raise ConventionError(
                f"{'barred' if barred else 'unbarred'} determinant formulas need a "
                f"{'barred' if barred else 'unbarred'} hierarchy, got {self.convention}"
            )
        return QFamily(self.table, self.twist, complement=False, sign=-1 if barred else 1, sample=sample)

    def conjugated(self) -> "QHierarchy":
        """Same table under z -> 1/z, t -> 1/t."""
        return QHierarchy(
            self.twist.conjugated(), self.convention, dict(self.table), self.seed, self.degrees, self.mutation
        )

    def mutated(self, seed: int) -> "QHierarchy":
        """+1 on one coefficient of one entry other than the normalized one."""
        rng = np.random.default_rng(seed)
        normalized = 0
        candidates = sorted(k for k in self.table if k != normalized)
        if not candidates:
            raise DegenerateError("hierarchy has no entry to mutate")
        mask = candidates[int(rng.integers(len(candidates)))]
        poly = self.table[mask]
        top = max(poly.degree or 0, 1)
        exponent = int(rng.integers(1, top + 1))
        table = dict(self.table)
        table[mask] = poly + LaurentPoly.monomial(exponent)
        logger.info(f"mutated subset {indices_of(mask)} at x^{exponent} (seed {seed})")
        return QHierarchy(self.twist, self.convention, table, self.seed, self.degrees, (mask, exponent))

    def max_degree(self) -> int:
        return max((p.degree or 0) for p in self.table.values())


def subset_order(K: int) -> List[int]:
    """Masks by size, then lexicographically."""
    return [mask_of(c) for size in range(K + 1) for c in combinations(range(1, K + 1), size)]


def _build_table(tw: TwistData, cfg: GenConfig, barred: bool) -> Dict[int, LaurentPoly]:
    singles = gen_singles(tw, cfg)
    table: Dict[int, LaurentPoly] = {0: ONE}
    for a, p in singles.items():
        table[mask_of((a,))] = p
    for b in tw.bosons():
        for f in tw.fermions():
            table[mask_of((b, f))] = solve_pair(b, f, singles[b], singles[f], tw, barred)
    fam = QFamily(table, tw, complement=False, sign=-1 if barred else 1)
    for mask in subset_order(tw.K):
        if mask in table:
            continue
        B, F = tw.split(mask)
        table[mask] = wronskian_Q(fam, B, F)
        logger.debug(f"Q{indices_of(mask)} degree {table[mask].degree}")
    return table


def build_hierarchy(tw: TwistData, cfg: GenConfig, convention: str = UNBARRED) -> QHierarchy:
    """Singles, pair functions, then Wronskians for every larger subset."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    k_max = max(cfg.k_max, 2 * max((cfg.degree_of(a) for a in range(1, tw.K + 1)), default=0))
    require_generic(tw, k_max)
    barred = convention == BARRED
    seed = cfg.seed
    for attempt in range(MAX_REGENERATIONS):
        try:
            table = _build_table(tw, replace(cfg, seed=seed), barred)
        except DegenerateError as e:
            logger.warning(f"degenerate hierarchy for seed {seed} ({e}); regenerating with seed {seed + 1}")
            seed += 1
            continue
        if any(p.is_zero() for p in table.values()):
            logger.warning(f"vanishing Q-function for seed {seed}; regenerating with seed {seed + 1}")
            seed += 1
            continue
        logger.info(f"built {len(table)} Q-functions, {convention}, {tw.describe()}, seed {seed}")
        degrees = tuple(cfg.degree_of(a) for a in range(1, tw.K + 1))
        return QHierarchy(tw, convention, table, seed, degrees)
    raise DegenerateError(f"no usable hierarchy after {MAX_REGENERATIONS} seeds from {cfg.seed}")


def complement_Q(mask: int, h: QHierarchy) -> LaurentPoly:
    """Qbar_I = Q of the complement of I."""
    return h.Q(h.twist.full_mask ^ mask)


# ------------------------------ file format ------------------------------


def _fmt_list(values: Iterable) -> str:
    return " ".join(str(v) for v in values)


def dumps_hierarchy(h: QHierarchy) -> str:
    """Text form: header lines, then one 'record <mask> <coefficients...>' per subset."""
    lines = [
        FILE_MAGIC,
        f"M {h.M}",
        f"N {h.N}",
        f"t {h.twist.t}",
        f"z {_fmt_list(h.twist.z)}",
        f"convention {h.convention}",
        f"seed {'' if h.seed is None else h.seed}".rstrip(),
        f"degrees {_fmt_list(h.degrees)}".rstrip(),
    ]
    if h.mutation is not None:
        lines.append(f"mutation {h.mutation[0]} {h.mutation[1]}")
    for mask in sorted(h.table):
        poly = h.table[mask]
        if not poly.is_polynomial():
            raise HierarchyFormatError(f"entry {indices_of(mask)} is not a polynomial")
        lines.append(f"record {mask} {_fmt_list(poly.to_list())}".rstrip())
    return "\n".join(lines) + "\n"


def loads_hierarchy(text: str) -> QHierarchy:
    header: Dict[str, List[str]] = {}
    table: Dict[int, LaurentPoly] = {}
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines or lines[0] != FILE_MAGIC:
        raise HierarchyFormatError(f"missing header line {FILE_MAGIC!r}")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line or line.startswith("#"):
            continue
        key, *values = line.split()
        if key == "record":
            if not values:
                raise HierarchyFormatError(f"line {lineno}: record without mask")
            try:
                mask = int(values[0])
                coeffs = [Fraction(v) for v in values[1:]]
            except ValueError as e:
                raise HierarchyFormatError(f"line {lineno}: {e}") from None
            if mask in table:
                raise HierarchyFormatError(f"line {lineno}: duplicate record for mask {mask}")
            table[mask] = LaurentPoly(coeffs)
        else:
            header[key] = values
    try:
        M, N = int(header["M"][0]), int(header["N"][0])
        tw = TwistData(M, N, Fraction(header["t"][0]), tuple(Fraction(v) for v in header["z"]))
        convention = header["convention"][0]
    except (KeyError, IndexError, ValueError) as e:
        raise HierarchyFormatError(f"incomplete header: {e}") from None
    seed = int(header["seed"][0]) if header.get("seed") else None
    degrees = tuple(int(v) for v in header.get("degrees", []))
    mutation = tuple(int(v) for v in header["mutation"]) if "mutation" in header else None
    if len(table) != 1 << tw.K:
        raise HierarchyFormatError(f"expected {1 << tw.K} records, found {len(table)}")
    if any(mask >> tw.K for mask in table):
        raise HierarchyFormatError("record mask outside the index set")
    return QHierarchy(tw, convention, table, seed, degrees, mutation)


def save_hierarchy(h: QHierarchy, path: str) -> None:
    with open(path, "w") as f:
        f.write(dumps_hierarchy(h))
    logger.info(f"wrote {len(h.table)} records to {path}")


def load_hierarchy(path: str) -> QHierarchy:
    with open(path) as f:
        return loads_hierarchy(f.read())
