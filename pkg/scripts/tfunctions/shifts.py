"""
Shift calculators for every T-function formula.

All results are integers in t-units, t = q^(1/2): an argument x q^e is x t^(2e).
Each formula gets one function so the exponents live in one place.
"""

from ..diagrams import Partition


def box(grading_sum_prefix: int, grading_sum_tuple: int, p: int, M: int, N: int):
    """Arguments of the two numerator and two denominator Q's of an unbarred box.

    Returns ((prefix_num, tuple_num), (prefix_den, tuple_den)).
    """
    base = M - N
    return (
        (-2 * grading_sum_prefix - 4 * p + base, -2 * grading_sum_tuple + 4 * p + base),
        (-2 * grading_sum_prefix + base, -2 * grading_sum_tuple + base),
    )


def box_bar(grading_sum_suffix: int, grading_sum_tuple: int, p: int, M: int, N: int):
    """Barred box: same layout as box(), the suffix plays the prefix role."""
    base = M - N
    return (
        (2 * grading_sum_suffix + 4 * p - base, 2 * grading_sum_tuple - 4 * p - base),
        (2 * grading_sum_suffix - base, 2 * grading_sum_tuple - base),
    )


def tableau_cell(mu: Partition, row: int, col: int, m: int, n: int, M: int, N: int) -> int:
    """Argument of the box sitting in cell (row, col) of a diagram with outer shape mu."""
    return 2 * (mu.width - mu.height + 2 * row - 2 * col) + (m - n) - (M - N)


def tableau_cell_bar(mu: Partition, row: int, col: int, m: int, n: int, M: int, N: int) -> int:
    return 2 * (mu.width - mu.height + 2 * row - 2 * col) - (m - n) + (M - N)


def normalization(mu: Partition, m: int, n: int) -> int:
    """Q_{I_K} prefactor turning a tableau sum into the normalized F."""
    return -(m - n) - 2 * mu.width + 2 * mu.height


def normalization_bar(mu: Partition, m: int, n: int) -> int:
    return (m - n) + 2 * mu.width - 2 * mu.height


def column_generator(mu: Partition, lam: Partition, i: int, j: int) -> int:
    """Entry (i, j) of the column-axis Jacobi-Trudi matrix."""
    return 2 * (mu.width - mu.height + mu.col(i) + lam.col(j) - i - j + 1)


def row_generator(mu: Partition, lam: Partition, i: int, j: int) -> int:
    """Entry (i, j) of the row-axis Jacobi-Trudi matrix."""
    return 2 * (mu.width - mu.height - mu.row(j) - lam.row(i) + i + j - 1)


def wronskian(mu: Partition, m: int, n: int) -> int:
    """Argument shift of the Wronskian minor of mu."""
    return -3 * (m - n) + 2 * (mu.height - mu.width)


def t_empty(m: int, n: int) -> int:
    """T of the empty diagram is Q_{B u F} at this shift."""
    return -(m - n)


def laplace_boson(s: int, m: int, n: int):
    """(rest, subset) arguments of a boson-regime Laplace term."""
    return -2 * s - (m - n), 2 * s + (m - n)


def laplace_fermion(a: int, m: int, n: int):
    """(rest, subset) arguments of a fermion-regime Laplace term."""
    return 2 * a - (m - n), -2 * a + (m - n)


def weyl(mu: Partition, m: int, n: int) -> int:
    """Common shift added to every factor of a Weyl-sum monomial."""
    return (m - n) + 2 * (mu.height - mu.width)


def typical_boson(mu: Partition, n: int, c: int) -> int:
    return n - 2 * mu.col(n + 1) + 2 * mu.height + 2 * c


def typical_fermion(mu: Partition, m: int, c: int) -> int:
    return -m + 2 * mu.row(m + 1) - 2 * mu.width - 2 * c


def boson_only_rows(tau: Partition, m: int, c1: int) -> int:
    """T^{B,0} of tau with c1 added to each of its m rows, relative to T^{B,0}_tau."""
    return 2 * c1 - (2 * (tau.height - m) if c1 > 0 else 0)


def fermion_only_rows(eta: Partition, n: int, c2: int) -> int:
    """T^{0,F} with c2 rows of length n stacked on eta, relative to T^{0,F}_eta."""
    return -2 * c2 + (2 * (eta.width - n) if c2 > 0 else 0)


def baxter_boson(a: int, m: int, n: int):
    """(T argument, Q_k argument) of term a in the boson Baxter equation."""
    t_arg = 2 * (-(a - m) * (n == 0) - (a == 0))
    return t_arg, -4 * a + 3 * m + n


def baxter_fermion(a: int, m: int, n: int):
    t_arg = 2 * ((a - n) * (m == 0) + (a == 0))
    return t_arg, 4 * a - m - 3 * n


def baxter_boson_reduced(a: int, m: int):
    return 2 * (-a - (a == 0)), -4 * a + m


def baxter_fermion_reduced(a: int, n: int):
    return 2 * (a + (a == 0)), 4 * a - n


def pole(grading_sum_prefix: int, M: int, N: int) -> int:
    """Where Q_{I_a} must vanish for the residues of adjacent boxes to cancel."""
    return -2 * grading_sum_prefix + (M - N)


def convolution(s: int, alpha: int, m: int, n: int, mb: int, nb: int, M: int, N: int):
    """(unbarred, barred) arguments of term alpha in the one-row convolution."""
    return 2 * (s - alpha) - (m - n) + (M - N), -2 * alpha + (mb - nb) - (M - N)
