"""Exact dense linear algebra over fields and over the Laurent polynomial ring.

Matrices are lists of rows.  Field routines only need ``+ - * /`` and a truth
value that is False exactly for zero, so they work unchanged for Fraction,
RationalFunction, PrimeFieldElement and CyclotomicNumber entries.

Matrices arising from S_q(n, r) are sparse with a block pattern (entries
vanish unless shapes match), so inversion and determinants first split the
matrix into its connected blocks.
"""

from __future__ import annotations

from typing import Callable, Sequence

import networkx as nx

from .exactarith import LaurentPoly, RationalFunction, exact_divide

Matrix = list[list]


def identity_matrix(n: int, one, zero) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def matmul(A: Matrix, B: Matrix, zero) -> Matrix:
    """Product skipping zero entries of A."""
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [zero] * m
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def map_matrix(A: Matrix, fn: Callable) -> Matrix:
    return [[fn(x) for x in row] for row in A]


def is_monomial(A: Matrix) -> bool:
    """Exactly one nonzero entry in every row and every column."""
    n = len(A)
    cols = [0] * (len(A[0]) if A else 0)
    for row in A:
        nz = [j for j, x in enumerate(row) if x]
        if len(nz) != 1:
            return False
        cols[nz[0]] += 1
    return n == len(cols) and all(c == 1 for c in cols)


# -- block structure ------------------------------------------------------

def block_decomposition(A: Matrix) -> list[tuple[list[int], list[int]]]:
    """Connected components of the bipartite row/column graph of nonzero entries.

    Rows or columns that are entirely zero form blocks of their own with an
    empty partner list.
    """
    g = nx.Graph()
    n, m = len(A), len(A[0]) if A else 0
    g.add_nodes_from(("r", i) for i in range(n))
    g.add_nodes_from(("c", j) for j in range(m))
    g.add_edges_from((("r", i), ("c", j)) for i in range(n) for j in range(m) if A[i][j])
    blocks = []
    for comp in nx.connected_components(g):
        rows = sorted(k for t, k in comp if t == "r")
        cols = sorted(k for t, k in comp if t == "c")
        blocks.append((rows, cols))
    blocks.sort(key=lambda b: (b[0][0] if b[0] else n + b[1][0]))
    return blocks


def _submatrix(A: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[A[i][j] for j in cols] for i in rows]


def _perm_sign(order: Sequence[int]) -> int:
    seen, sign = [False] * len(order), 1
    for i in range(len(order)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = order[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


# -- elimination over a field -------------------------------------------------

def rank(A: Matrix, pivoting: str = "first") -> int:
    """Rank over a field by Gaussian elimination.

    ``pivoting="first"`` sweeps columns left to right taking the topmost
    usable row; ``"last"`` sweeps right to left taking the bottom-most.  The
    two must agree; tests use this as a cross-check.
    """
    if pivoting not in ("first", "last"):
        raise ValueError(f"unknown pivoting strategy {pivoting!r}")
    M = [list(row) for row in A]
    if not M:
        return 0
    n, m = len(M), len(M[0])
    cols = range(m) if pivoting == "first" else range(m - 1, -1, -1)
    free = list(range(n))
    r = 0
    for j in cols:
        candidates = [i for i in free if M[i][j]]
        if not candidates:
            continue
        p = candidates[0] if pivoting == "first" else candidates[-1]
        free.remove(p)
        inv = 1 / M[p][j] if not hasattr(M[p][j], "inverse") else M[p][j].inverse()
        for i in free:
            if M[i][j]:
                factor = M[i][j] * inv
                M[i] = [x - factor * y if y else x for x, y in zip(M[i], M[p])]
        r += 1
    return r


def gauss_inverse(A: Matrix, one, zero) -> Matrix:
    """Gauss-Jordan inverse over a field; raises ZeroDivisionError if singular."""
    n = len(A)
    M = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(A)]
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        M[k], M[p] = M[p], M[k]
        piv = M[k][k]
        M[k] = [x / piv if x else x for x in M[k]]
        for i in range(n):
            if i != k and M[i][k]:
                factor = M[i][k]
                M[i] = [x - factor * y if y else x for x, y in zip(M[i], M[k])]
    return [row[n:] for row in M]


# -- fraction-free elimination over A --------------------------------------------

def bareiss_det(A: Matrix):
    """Determinant over an integral domain with exact division (ints or LaurentPoly)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if not M[k][k]:
            p = next((i for i in range(k + 1, n) if M[i][k]), None)
            if p is None:
                return 0 * M[0][0]
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = _exact(num, prev)
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


def _exact(num, den):
    if isinstance(den, int) and den == 1:
        return num
    if isinstance(num, LaurentPoly):
        return exact_divide(num, den if isinstance(den, LaurentPoly) else LaurentPoly(den))
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return q


def bareiss_adjugate(A: Matrix) -> tuple[Matrix, object]:
    """Fraction-free Gauss-Jordan on [A | I]: returns (X, p) with A X = p I and p = +-det A.

    Entries are LaurentPoly; every division is exact by Sylvester's identity.
    Raises ZeroDivisionError if A is singular.
    """
    n = len(A)
    one, zero = LaurentPoly(1), LaurentPoly()
    M = [[LaurentPoly(x) if isinstance(x, int) else x for x in row]
         + [one if i == j else zero for j in range(n)] for i, row in enumerate(A)]
    prev = one
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        M[k], M[p] = M[p], M[k]
        piv = M[k][k]
        for i in range(n):
            if i == k:
                continue
            f = M[i][k]
            row_i, row_k = M[i], M[k]
            M[i] = [exact_divide(piv * row_i[j] - f * row_k[j], prev)
                    if (row_i[j] or (f and row_k[j])) else zero
                    for j in range(2 * n)]
        prev = piv
    # M is now [prev I | prev A^-1]
    return [row[n:] for row in M], prev


def _clear_row_denominators(A: Matrix) -> tuple[Matrix, list]:
    """Scale each row by a common denominator: returns (polynomial matrix, scales)."""
    out, scales = [], []
    for row in A:
        den = LaurentPoly(1)
        for x in row:
            if isinstance(x, RationalFunction) and not x.is_polynomial():
                den = _lcm(den, x.den)
        scaled = []
        for x in row:
            y = RationalFunction.coerce(x) * den
            scaled.append(y.as_laurent())
        out.append(scaled)
        scales.append(den)
    return out, scales


def _lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """A least common multiple up to units: a * (b / gcd(a, b))."""
    return a * RationalFunction(a, b).den


def inverse(A: Matrix) -> Matrix:
    """Inverse over Q(v), block by block, by fraction-free elimination.

    Entries may be LaurentPoly or RationalFunction; the result holds
    RationalFunction values, demoted to LaurentPoly where possible.
    Raises ZeroDivisionError if A is singular.
    """
    n = len(A)
    out: Matrix = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for rows, cols in block_decomposition(A):
        if len(rows) != len(cols):
            raise ZeroDivisionError("singular matrix (non-square block)")
        sub = _submatrix(A, rows, cols)
        poly, scales = _clear_row_denominators(sub)
        X, p = bareiss_adjugate(poly)
        # (diag(s) sub)^-1 = X / p, so sub^-1 = X diag(s) / p
        for bi, j in enumerate(cols):
            for bk, i in enumerate(rows):
                x = X[bi][bk]
                if x:
                    val = RationalFunction(x * scales[bk], p)
                    out[j][i] = val.num if val.is_polynomial() else val
    return out


def det(A: Matrix):
    """Determinant over Q(v) (or any ring with exact division), via blocks."""
    n = len(A)
    if n == 0:
        return 1
    blocks = block_decomposition(A)
    if any(len(r) != len(c) for r, c in blocks):
        return 0
    row_order = [i for r, _ in blocks for i in r]
    col_order = [j for _, c in blocks for j in c]
    sign = _perm_sign(row_order) * _perm_sign(col_order)
    total = sign
    for rows, cols in blocks:
        sub = _submatrix(A, rows, cols)
        if any(isinstance(x, RationalFunction) for row in sub for x in row):
            poly, scales = _clear_row_denominators(sub)
            d = RationalFunction.coerce(bareiss_det(poly))
            for s in scales:
                d = d / s
        else:
            d = bareiss_det(sub)
        total = total * d
    return total


def solve_left(B: Matrix, W: Matrix) -> Matrix:
    """M with M W = B, i.e. B W^-1."""
    return matmul(B, inverse(W), LaurentPoly())


__all__ = [
    "identity_matrix", "transpose", "matmul", "map_matrix", "is_monomial",
    "block_decomposition", "rank", "gauss_inverse", "bareiss_det",
    "bareiss_adjugate", "inverse", "det", "solve_left",
]
