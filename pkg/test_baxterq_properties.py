#!/usr/bin/env python3
"""
Property tests for baxterq (hypothesis)

Run with: python -m pytest test_baxterq_properties.py -v
"""

import importlib.util
import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import assume, given, settings
from hypothesis import strategies as st

ROOT = Path(__file__).resolve().parent

try:
    import baxterq  # noqa: F401
except ImportError:
    _spec = importlib.util.spec_from_file_location(
        "baxterq", ROOT / "scripts" / "__init__.py", submodule_search_locations=[str(ROOT / "scripts")]
    )
    baxterq = importlib.util.module_from_spec(_spec)
    sys.modules["baxterq"] = baxterq
    _spec.loader.exec_module(baxterq)

from baxterq.diagrams import (  # noqa: E402
    GradedTuple,
    Partition,
    SkewDiagram,
    enumerate_admissible,
    hook_check,
    partitions_of,
)
from baxterq.exact_arith import LaurentPoly, RationalFn, det, divides  # noqa: E402
from baxterq.tfunctions.characters import sergeev_pragacz, super_schur_tab  # noqa: E402

# ----------------------------- strategies -----------------------------

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=6)
nonzero_fractions = fractions.filter(lambda v: v != 0)


@st.composite
def laurent(draw, low=-2, high=3, max_terms=4):
    exps = draw(st.lists(st.integers(low, high), max_size=max_terms, unique=True))
    return LaurentPoly({e: draw(fractions) for e in exps})


@st.composite
def polynomials(draw, max_degree=3):
    return LaurentPoly(draw(st.lists(fractions, min_size=1, max_size=max_degree + 1)))


@st.composite
def partitions(draw, max_size=6):
    size = draw(st.integers(0, max_size))
    options = list(partitions_of(size))
    return options[draw(st.integers(0, len(options) - 1))]


@st.composite
def square_matrices(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return [[draw(fractions) for _ in range(n)] for _ in range(n)]


def hook_content_count(mu: Partition, K: int) -> int:
    """Semistandard tableaux of shape mu with entries 1..K."""
    total = Fraction(1)
    conj = mu.conjugate()
    for i, j in mu.cells():
        hook = mu.row(i) - j + conj.row(j) - i + 1
        total *= Fraction(K + j - i, hook)
    return int(total)


# ----------------------------- exact arithmetic -----------------------------


@given(laurent(), laurent(), laurent())
def test_ring_axioms(a, b, c):
    """Commutativity, associativity and distributivity of Laurent polynomials."""
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()


@given(laurent(), laurent(), st.integers(-3, 3), st.integers(-3, 3), nonzero_fractions)
def test_shift_homomorphism(a, b, j, k, t):
    """x -> x t^k respects products and composes additively."""
    assert (a * b).shift(k, t) == a.shift(k, t) * b.shift(k, t)
    assert (a + b).shift(k, t) == a.shift(k, t) + b.shift(k, t)
    assert a.shift(j, t).shift(k, t) == a.shift(j + k, t)


@given(laurent(), laurent(), nonzero_fractions)
def test_evaluation_homomorphism(a, b, x0):
    assert (a * b)(x0) == a(x0) * b(x0)
    assert (a + b)(x0) == a(x0) + b(x0)


@given(polynomials(), polynomials())
def test_exact_division(d, q):
    """d divides d*q with quotient q."""
    assume(not d.is_zero())
    ok, quotient = divides(d, d * q)
    assert ok and quotient == q


@given(polynomials(), polynomials())
def test_canonicalize_preserves_value(n, d):
    assume(not d.is_zero())
    r = RationalFn(n, d)
    c = r.canonicalize()
    assert c == r
    if not c.num.is_zero():
        assert c.den.leading_coeff() == 1


@given(square_matrices())
def test_det_alternation(mat):
    """Row swaps flip the sign, repeated rows vanish, transposition is harmless."""
    n = len(mat)
    value = det(mat)
    assert det([list(col) for col in zip(*mat)]) == value
    if n >= 2:
        swapped = [mat[1], mat[0]] + mat[2:]
        assert det(swapped) == -value
        repeated = [mat[0], mat[0]] + mat[2:]
        assert det(repeated).is_zero()


@settings(max_examples=30)
@given(st.integers(5, 6), st.data())
def test_det_elimination_matches_small_products(n, data):
    """Triangular matrices above the cofactor limit: det is the diagonal product."""
    diag = [data.draw(fractions) for _ in range(n)]
    mat = [[diag[i] if i == j else (data.draw(fractions) if j > i else Fraction(0)) for j in range(n)]
           for i in range(n)]
    expected = Fraction(1)
    for v in diag:
        expected *= v
    assert det(mat) == RationalFn(expected)


# ----------------------------- diagrams -----------------------------


@given(partitions())
def test_partition_involutions(mu):
    """Conjugation and 180-degree rotation are involutions preserving size."""
    assert mu.conjugate().conjugate() == mu
    assert mu.conjugate().size == mu.size
    d = SkewDiagram(mu)
    assert d.rotate180().rotate180() == d
    assert d.rotate180().size == d.size


@settings(max_examples=40)
@given(partitions(max_size=5), st.integers(1, 3))
def test_tableau_counts(mu, K):
    """Bosonic counts follow the hook-content formula; fermionic ones use the
    conjugate shape; row- and column-major generation agree."""
    d = SkewDiagram(mu)
    bosonic = enumerate_admissible(GradedTuple.full(K, 0), d)
    assert len(bosonic) == hook_content_count(mu, K)
    fermionic = enumerate_admissible(GradedTuple.full(0, K), d)
    assert len(fermionic) == hook_content_count(mu.conjugate(), K)
    by_column = enumerate_admissible(GradedTuple.full(K, 0), d, order="column")
    assert sorted(t.entries for t in by_column) == sorted(t.entries for t in bosonic)


@settings(max_examples=40, deadline=None)
@given(partitions(max_size=4), st.integers(0, 2), st.integers(0, 2), st.data())
def test_supercharacters_agree(mu, M, N, data):
    """Sergeev-Pragacz and the tableau super-Schur sum agree in the hook."""
    assume(M + N >= 1 and hook_check(mu, M, N))
    z = data.draw(st.lists(st.integers(1, 40), min_size=M + N, max_size=M + N, unique=True))
    z = [Fraction(v) for v in z]
    assert sergeev_pragacz(mu, M, N, z) == super_schur_tab(mu, M, N, z)
