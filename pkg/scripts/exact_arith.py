#!/usr/bin/env python3
"""
exact_arith.py

Exact arithmetic in the spectral variable x:
- LaurentPoly: finite Laurent polynomials with Fraction coefficients
- RationalFn: ratios of LaurentPoly, compared by cross-multiplication
- shift: the substitution x -> x * t^k (one step of k is half a power of q)
- det: cofactor expansion up to 4x4, fraction-free (Bareiss) elimination above
- factored_sum: sums of products of keyed polynomial factors over one denominator

Nothing here uses floating point. Values are immutable after construction.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from .errors import DegenerateError, PoleError

logger = logging.getLogger(__name__)

# ----------------------------- config -----------------------------
COFACTOR_LIMIT = 4  # matrices up to this size use cofactor expansion

ScalarLike = Union[int, Fraction]

_SYMPY_X = sympy.Symbol("x")


def as_scalar(value) -> Fraction:
    """Coerce an int, Fraction or 'num/den' string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    return Fraction(value)


# ------------------------- Laurent polynomials -------------------------


class LaurentPoly:
    """Finite Laurent polynomial in x with exact rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Optional[Union[Mapping[int, ScalarLike], Sequence]] = None):
        data: Dict[int, Fraction] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
            for e, v in items:
                v = as_scalar(v)
                if v:
                    data[int(e)] = v
        self._c = data

    @classmethod
    def _raw(cls, data: Dict[int, Fraction]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._c = data
        return obj

    @classmethod
    def constant(cls, value: ScalarLike) -> "LaurentPoly":
        value = as_scalar(value)
        return cls._raw({0: value} if value else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: ScalarLike = 1) -> "LaurentPoly":
        coeff = as_scalar(coeff)
        return cls._raw({int(exponent): coeff} if coeff else {})

    # -- inspection --

    def items(self) -> List[Tuple[int, Fraction]]:
        return sorted(self._c.items())

    def coeff(self, exponent: int) -> Fraction:
        return self._c.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    @property
    def degree(self) -> Optional[int]:
        return max(self._c) if self._c else None

    @property
    def low_degree(self) -> Optional[int]:
        return min(self._c) if self._c else None

    def leading_coeff(self) -> Fraction:
        return self._c[max(self._c)] if self._c else Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def to_list(self) -> List[Fraction]:
        """Dense ascending coefficient list of a polynomial."""
        if not self.is_polynomial():
            raise ValueError("to_list needs a polynomial (no negative exponents)")
        if not self._c:
            return []
        return [self.coeff(e) for e in range(self.degree + 1)]

    # -- arithmetic --

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._c)
        for e, v in other._c.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: ScalarLike) -> "LaurentPoly":
        factor = as_scalar(factor)
        if not factor:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({e: v * factor for e, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c or not other._c:
            return LaurentPoly._raw({})
        out: Dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise DegenerateError("negative power of a non-monomial Laurent polynomial")
            (e, v), = self._c.items()
            return LaurentPoly._raw({e * n: v**n})
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def shift(self, k: int, t: ScalarLike) -> "LaurentPoly":
        """Return p(x * t^k): coefficient a_j becomes a_j * t^(k*j)."""
        if k == 0 or not self._c:
            return self
        step = as_scalar(t) ** k
        return LaurentPoly._raw({e: v * step**e for e, v in self._c.items()})

    def __call__(self, x0: ScalarLike) -> Fraction:
        x0 = as_scalar(x0)
        if x0 == 0:
            if any(e < 0 for e in self._c):
                raise PoleError("Laurent polynomial with negative exponents evaluated at 0", 0)
            return self.coeff(0)
        return sum((v * x0**e for e, v in self._c.items()), Fraction(0))

    # -- comparison --

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            if e == 0:
                parts.append(str(v))
                continue
            mono = "x" if e == 1 else f"x^{e}"
            if v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
X = LaurentPoly.monomial(1)


def as_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.constant(value)


def _long_division(p: LaurentPoly, d: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Polynomial division p = d*q + r with deg r < deg d."""
    d_deg = d.degree
    lead = d.leading_coeff()
    rem = dict(p._c)
    quo: Dict[int, Fraction] = {}
    top = p.degree if p._c else -1
    for e in range(top, d_deg - 1, -1):
        c = rem.get(e)
        if not c:
            continue
        qc = c / lead
        shift = e - d_deg
        quo[shift] = qc
        for de, dc in d._c.items():
            k = shift + de
            v = rem.get(k, 0) - qc * dc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(quo), LaurentPoly._raw(rem)


def divides(d: LaurentPoly, p: LaurentPoly) -> Tuple[bool, Optional[LaurentPoly]]:
    """Return (True, q) when p = d*q exactly, else (False, None).

    For two polynomials q must be a polynomial; otherwise division is taken in the
    Laurent ring, where monomials are units.
    """
    d, p = as_poly(d), as_poly(p)
    if d.is_zero():
        raise DegenerateError("division by the zero polynomial")
    if p.is_zero():
        return True, ZERO
    if d.is_polynomial() and p.is_polynomial():
        q, r = _long_division(p, d)
        return (True, q) if r.is_zero() else (False, None)
    dl, pl = d.low_degree, p.low_degree
    q, r = _long_division(p.mul_monomial(-pl), d.mul_monomial(-dl))
    if not r.is_zero():
        return False, None
    return True, q.mul_monomial(pl - dl)


def _exact_quotient(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    ok, q = divides(d, p)
    if not ok:
        raise DegenerateError("expected exact polynomial division")
    return q


def _to_sympy(p: LaurentPoly) -> sympy.Poly:
    terms = {(e,): sympy.Rational(v.numerator, v.denominator) for e, v in p.items()}
    return sympy.Poly.from_dict(terms or {(0,): 0}, _SYMPY_X, domain=sympy.QQ)


def _from_sympy(poly: sympy.Poly) -> LaurentPoly:
    return LaurentPoly({m[0]: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd over QQ.

    Polynomial inputs keep their common power of x; Laurent inputs are reduced to
    their monomial-free cores first.
    """
    a, b = as_poly(a), as_poly(b)
    if a.is_zero() and b.is_zero():
        return ZERO
    if not (a.is_polynomial() and b.is_polynomial()):
        if not a.is_zero():
            a = a.mul_monomial(-a.low_degree)
        if not b.is_zero():
            b = b.mul_monomial(-b.low_degree)
    if a.is_constant() and not a.is_zero() or b.is_constant() and not b.is_zero():
        return ONE
    g = _from_sympy(sympy.gcd(_to_sympy(a), _to_sympy(b)))
    return g.scale(1 / g.leading_coeff())


def poly_lcm(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Least common multiple of polynomial denominators; constants are units."""
    result = ONE
    seen: List[LaurentPoly] = []
    for p in polys:
        if p.is_constant() or any(p == s for s in seen):
            continue
        seen.append(p)
        g = poly_gcd(result, p)
        result = result * _exact_quotient(p, g)
    return result


def shift(p, k: int, t: ScalarLike):
    """x -> x * t^k on a LaurentPoly or RationalFn."""
    return p.shift(k, t)


# --------------------------- rational functions ---------------------------


class RationalFn:
    """num/den with den != 0; equality is a*d == c*b, no reduction needed."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = as_poly(num)
        den = ONE if den is None else as_poly(den)
        if den.is_zero():
            raise DegenerateError("rational function with zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def coerce(value) -> "RationalFn":
        if isinstance(value, RationalFn):
            return value
        return RationalFn(as_poly(value))

    def _other(self, other) -> Optional["RationalFn"]:
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, LaurentPoly) or (
            isinstance(other, (int, Fraction)) and not isinstance(other, bool)
        ):
            return RationalFn(as_poly(other))
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RationalFn(ZERO)
        if self.num == other.den:
            return RationalFn(other.num, self.den)
        if other.num == self.den:
            return RationalFn(self.num, other.den)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise DegenerateError("division by the zero rational function")
        return self * RationalFn(other.den, other.num)

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n >= 0:
            return RationalFn(self.num**n, self.den**n)
        if self.num.is_zero():
            raise DegenerateError("negative power of zero")
        return RationalFn(self.den ** (-n), self.num ** (-n))

    def shift(self, k: int, t: ScalarLike) -> "RationalFn":
        return RationalFn(self.num.shift(k, t), self.den.shift(k, t))

    def eval(self, x0: ScalarLike) -> Fraction:
        x0 = as_scalar(x0)
        d = self.den(x0)
        if d == 0:
            raise PoleError(f"pole at x = {x0}", x0)
        return self.num(x0) / d

    def as_polynomial(self) -> Optional[LaurentPoly]:
        """The quotient when the denominator divides the numerator, else None."""
        ok, q = divides(self.den, self.num)
        return q if ok else None

    def canonicalize(self) -> "RationalFn":
        """gcd-reduced form with monic denominator; equal to self."""
        if self.num.is_zero():
            return RationalFn(ZERO)
        n, d = self.num, self.den
        n_low, d_low = n.low_degree, d.low_degree
        n0, d0 = n.mul_monomial(-n_low), d.mul_monomial(-d_low)
        g = poly_gcd(n0, d0)
        n0, d0 = _exact_quotient(n0, g), _exact_quotient(d0, g)
        k = n_low - d_low
        if k >= 0:
            n0 = n0.mul_monomial(k)
        else:
            d0 = d0.mul_monomial(-k)
        lead = d0.leading_coeff()
        return RationalFn(n0.scale(1 / lead), d0.scale(1 / lead))

    def coefficient_lists(self) -> Tuple[List[Fraction], List[Fraction]]:
        """Ascending coefficients of the canonical numerator and denominator."""
        c = self.canonicalize()
        return c.num.to_list() or [Fraction(0)], c.den.to_list()

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        return f"RationalFn({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def as_rational(value) -> RationalFn:
    return RationalFn.coerce(value)


# ------------------------------ determinants ------------------------------


def _cofactor(rows: List[List[RationalFn]]) -> RationalFn:
    n = len(rows)
    if n == 0:
        return RationalFn(ONE)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # expand along the row with the most zeros
    zeros = [sum(1 for e in row if e.is_zero()) for row in rows]
    r = zeros.index(max(zeros))
    total = RationalFn(ZERO)
    for c, entry in enumerate(rows[r]):
        if entry.is_zero():
            continue
        minor = [row[:c] + row[c + 1 :] for i, row in enumerate(rows) if i != r]
        term = entry * _cofactor(minor)
        total = total + term if (r + c) % 2 == 0 else total - term
    return total


def _bareiss(rows: List[List[RationalFn]]) -> RationalFn:
    n = len(rows)
    mat = np.empty((n, n), dtype=object)
    den_product = ONE
    for i, row in enumerate(rows):
        common = poly_lcm(e.den for e in row)
        den_product = den_product * common
        for j, e in enumerate(row):
            mat[i, j] = e.num * _exact_quotient(common, e.den)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if mat[k, k].is_zero():
            swap = next((i for i in range(k + 1, n) if not mat[i, k].is_zero()), None)
            if swap is None:
                return RationalFn(ZERO)
            mat[[k, swap]] = mat[[swap, k]]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numer = mat[k, k] * mat[i, j] - mat[i, k] * mat[k, j]
                mat[i, j] = _exact_quotient(numer, prev)
            mat[i, k] = ZERO
        prev = mat[k, k]
    return RationalFn(mat[n - 1, n - 1].scale(sign), den_product)


def det(matrix) -> RationalFn:
    """Exact determinant of a square matrix of RationalFn (or coercible) entries."""
    rows = [[as_rational(v) for v in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError(f"det needs a square matrix, got {n} rows of lengths {[len(r) for r in rows]}")
    if n <= COFACTOR_LIMIT:
        return _cofactor(rows)
    try:
        return _bareiss(rows)
    except DegenerateError as e:
        logger.debug(f"Bareiss elimination fell back to cofactor expansion ({e})")
        return _cofactor(rows)


# ------------------------------ factored sums ------------------------------

FactorMap = Mapping[Hashable, int]


def factored_sum(
    terms: Iterable[Tuple[Fraction, FactorMap]],
    resolve: Callable[[Hashable], LaurentPoly],
) -> RationalFn:
    """Sum of coeff * prod(resolve(key)^exp) over one common factored denominator.

    Keys resolving to constants are folded into the coefficients.
    """
    resolved: Dict[Hashable, LaurentPoly] = {}
    cleaned: List[Tuple[Fraction, Dict[Hashable, int]]] = []
    for coeff, factors in terms:
        coeff = as_scalar(coeff)
        if not coeff:
            continue
        kept: Dict[Hashable, int] = {}
        for key, e in factors.items():
            if not e:
                continue
            if key not in resolved:
                resolved[key] = resolve(key)
            p = resolved[key]
            if p.is_constant():
                c = p.constant_term()
                if c == 0:
                    if e < 0:
                        raise DegenerateError(f"factor {key!r} vanishes identically")
                    coeff = Fraction(0)
                    break
                coeff *= c**e
            else:
                kept[key] = e
        if coeff:
            cleaned.append((coeff, kept))
    if not cleaned:
        return RationalFn(ZERO)

    den_exp: Dict[Hashable, int] = {}
    for _, factors in cleaned:
        for key, e in factors.items():
            if e < 0 and -e > den_exp.get(key, 0):
                den_exp[key] = -e

    powers: Dict[Tuple[Hashable, int], LaurentPoly] = {}

    def power(key, e: int) -> LaurentPoly:
        if (key, e) not in powers:
            powers[(key, e)] = resolved[key] ** e
        return powers[(key, e)]

    numer = ZERO
    for coeff, factors in cleaned:
        prod = LaurentPoly.constant(coeff)
        for key in set(factors) | set(den_exp):
            e = factors.get(key, 0) + den_exp.get(key, 0)
            if e:
                prod = prod * power(key, e)
        numer = numer + prod
    denom = ONE
    for key, e in den_exp.items():
        denom = denom * power(key, e)
    return RationalFn(numer, denom)
