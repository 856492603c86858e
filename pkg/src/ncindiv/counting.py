"""Exact closed-form counts for the k-indivisible noncrossing families.

Everything here is arbitrary-precision integer arithmetic.  The central
object is the two-parameter Raney number

    Ran(n, p, r) = r / (np + r) * binomial(np + r, n),

which specializes to the Fuss-Catalan numbers (r = 1), the cardinality
of the k-indivisible noncrossing partition poset (p = k + 1, r = 2),
and, through negative values of p and r, to zeta-polynomial and Mobius
evaluations of that poset.  The binomial coefficient is the generalized
one: the top argument may be any integer, the bottom must be >= 0.
"""

from __future__ import annotations

import math
from fractions import Fraction


def binomial(top: int, bottom: int) -> int:
    """Generalized binomial coefficient C(top, bottom).

    top may be negative; bottom must be a nonnegative integer.  For
    negative top the falling-factorial definition is used, equivalently
    C(-a, b) = (-1)^b C(a + b - 1, b).
    """
    if bottom < 0:
        raise ValueError("bottom index of a binomial must be nonnegative")
    if top >= 0:
        if bottom > top:
            return 0
        return math.comb(top, bottom)
    return (-1) ** bottom * math.comb(-top + bottom - 1, bottom)


def raney(n: int, p: int, r: int) -> int:
    """Raney number Ran(n, p, r) = r/(np+r) * C(np+r, n).

    n must be >= 0 and np + r must be nonzero.  p and r may be any
    integers; the result is always an exact integer.
    """
    if n < 0:
        raise ValueError("Raney numbers need n >= 0")
    if n == 0:
        return 1
    d = n * p + r
    if d == 0:
        raise ValueError("Raney number undefined: np + r = 0")
    value = Fraction(r, d) * binomial(d, n)
    if value.denominator != 1:
        raise ArithmeticError(f"Ran({n},{p},{r}) is not an integer: {value}")
    return int(value)


def catalan(n: int) -> int:
    """Catalan number, i.e. Ran(n, 2, 1)."""
    return raney(n, 2, 1)


def fuss_catalan(n: int, p: int) -> int:
    """Fuss-Catalan number Ran(n, p, 1), the count of p-ary trees with
    n internal vertices."""
    return raney(n, p, 1)


def nc_cardinality(n: int, k: int) -> int:
    """Number of k-indivisible noncrossing partitions of [kn+1]."""
    return raney(n, k + 1, 2)


def nc_rank_count(n: int, k: int, r: int) -> int:
    """Number of k-indivisible noncrossing partitions of rank r.

    The poset on [kn+1] is graded with ranks 0..n; rank r holds
    (1/N) C(n, r) C(kn+1, n-r) * (n-r) ... in closed product form
    Ran-convolution style.  Concretely the count is the two-parameter
    Fuss-Narayana number (1/N) * C(N, r) * ... expressed below via the
    rank-jump formula with a single jump profile.
    """
    if not 0 <= r <= n:
        return 0
    N = k * n + 1
    # Multichains id <= x with rank(x) = r: jump profile (r, n - r).
    # The product formula for rank-jump counts with q = 1 gives the
    # rank sizes directly.
    return rank_jump_count(n, k, (r, n - r))


def rank_jump_count(n: int, k: int, jumps: tuple[int, ...]) -> int:
    """Number of multichains x_1 <= ... <= x_q in the k-indivisible
    noncrossing partition poset whose rank jumps are the given profile.

    jumps = (r_0, ..., r_q) with sum n: r_0 = rank of x_1, r_i the rank
    increase at step i, r_q = n - rank(x_q).  The count is
    (1/N) * prod_i Ran(r_i, 1 - k, N) with N = kn + 1.
    """
    if sum(jumps) != n:
        raise ValueError("rank jumps must sum to n")
    if any(r < 0 for r in jumps):
        raise ValueError("rank jumps must be nonnegative")
    N = k * n + 1
    value = Fraction(1, N)
    for r in jumps:
        value *= raney(r, 1 - k, N)
    if value.denominator != 1:
        raise ArithmeticError(f"rank-jump count not integral for {jumps}")
    return int(value)


def zeta_value(n: int, k: int, q: int) -> int:
    """Zeta polynomial of the k-indivisible poset evaluated at q + 1,
    i.e. the number of q-element multichains:

        Z(q + 1) = (q + 1)/(Nq + 1) * C(Nq + n, n),  N = kn + 1.

    Defined as a polynomial in q, so negative q is legal; the argument
    q + 1 = -1, i.e. q = -2, gives the Mobius invariant.
    """
    N = k * n + 1
    d = N * q + 1
    if d == 0:
        raise ValueError("zeta evaluation undefined: Nq + 1 = 0")
    value = Fraction(q + 1, d) * binomial(N * q + n, n)
    if value.denominator != 1:
        raise ArithmeticError(f"zeta value not integral at q = {q}")
    return int(value)


def mobius_invariant(n: int, k: int) -> int:
    """Mobius function of the bounded k-indivisible poset between its
    minimum and maximum: (-1)^n Ran(n, 2k, 1) = Z(-1), i.e. q = -2."""
    return (-1) ** n * raney(n, 2 * k, 1)


def chain_count(n: int, k: int) -> int:
    """Number of maximal chains of the k-indivisible poset, equal to the
    number of reduced (k+1)-cycle factorizations of the long cycle:
    N^(n-1) with N = kn + 1."""
    N = k * n + 1
    return N ** (n - 1)


def commutation_class_count(n: int, k: int) -> int:
    """Number of commutation classes of reduced factorizations,
    Ran(n, 2k + 1, 1)."""
    return raney(n, 2 * k + 1, 1)


def mdiv_cardinality(n: int, k: int, m: int) -> int:
    """Number of m-divisible k-indivisible noncrossing partitions,
    i.e. m-element multichains: zeta at m."""
    return zeta_value(n, k, m)


def mdiv_zeta_value(n: int, k: int, m: int, q: int) -> int:
    """Zeta polynomial of the m-divisible poset at q + 1:

        (mq + 1)/(mNq + 1) * C(mNq + n, n),  N = kn + 1.
    """
    N = k * n + 1
    d = m * N * q + 1
    if d == 0:
        raise ValueError("m-divisible zeta undefined: mNq + 1 = 0")
    value = Fraction(m * q + 1, d) * binomial(m * N * q + n, n)
    if value.denominator != 1:
        raise ArithmeticError(f"m-divisible zeta not integral at q = {q}")
    return int(value)


def mdiv_mobius_hat(n: int, k: int, m: int) -> int:
    """Mobius invariant of the m-divisible poset with an artificial
    bottom adjoined: (-1)^(n-1) Ran(n, km, m - 1)."""
    return (-1) ** (n - 1) * raney(n, k * m, m - 1)


def mdiv_mobius_bar(n: int, k: int, m: int) -> int:
    """Mobius invariant of the m-divisible poset with its minimal
    elements merged into one: (-1)^n (Ran(n, k(m+1), m) - Ran(n, km, m-1))."""
    return (-1) ** n * (raney(n, k * (m + 1), m) - raney(n, k * m, m - 1))


def determinant_prediction(n: int, k: int) -> int:
    """Value of the n x n Hankel-style determinant
    det(C((n-j)k + 2, j - i + 1)), predicted to equal Ran(n, k+1, 2)."""
    return raney(n, k + 1, 2)


def nc_matrix(n: int, k: int) -> list[list[int]]:
    """The n x n matrix M with M[i][j] = C((n-j)k + 2, j - i + 1) for
    1-based i, j, whose determinant counts the poset."""
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            b = j - i + 1
            row.append(binomial((n - j) * k + 2, b) if b >= 0 else 0)
        rows.append(row)
    return rows


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact integer determinant via Bareiss fraction-free elimination."""
    m = [row[:] for row in matrix]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("determinant needs a square matrix")
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(size - 1):
        if m[col][col] == 0:
            for row in range(col + 1, size):
                if m[row][col] != 0:
                    m[col], m[row] = m[row], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for row in range(col + 1, size):
            for c in range(col + 1, size):
                num = m[row][c] * m[col][col] - m[row][col] * m[col][c]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                m[row][c] = q
            m[row][col] = 0
        prev = m[col][col]
    return sign * m[size - 1][size - 1]
