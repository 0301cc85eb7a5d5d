"""Integer lattice utilities.

Small exact helpers shared by the polytope and frame-construction code:
primitivity, Hermite-style column reduction with a tracked unimodular
transform, completion of a primitive vector to a basis of Z^d, and exact
determinants/inverses of small integer matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

IntVec = tuple[int, ...]


def content(v) -> int:
    """gcd of the absolute components (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def is_primitive(v) -> bool:
    return content(v) == 1


def primitive(v) -> IntVec:
    """Divide out the content; errors on the zero vector."""
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in v)


def int_det(matrix: list[list[int]]) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def unimodular_inverse(matrix: list[list[int]]) -> list[list[int]]:
    """Exact inverse of a matrix with determinant ±1."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            x = aug[i][n + j]
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(x))
        inv.append(row)
    return inv


def column_reduce(rows: list[IntVec], dim: int) -> tuple[list[list[int]], int]:
    """Column-echelon reduction by a unimodular transform.

    Returns (V, rank) with V a unimodular dim x dim matrix, stored as a
    list of columns, such that for every input row r the vector
    r @ V has zeros beyond position rank-1.  The map x -> first `rank`
    entries of x @ V is then a bijection between the lattice points of
    the rows' linear span and Z^rank, which is what the degenerate-hull
    projection needs.
    """
    acols = [[row[j] for row in rows] for j in range(dim)]
    vcols = [[int(i == j) for i in range(dim)] for j in range(dim)]
    nrows = len(rows)
    fixed = 0
    for r in range(nrows):
        if fixed == dim:
            break
        active = [j for j in range(fixed, dim) if acols[j][r] != 0]
        while len(active) > 1:
            active.sort(key=lambda j: abs(acols[j][r]))
            a = active[0]
            still = [a]
            for b in active[1:]:
                q = acols[b][r] // acols[a][r]
                for i in range(nrows):
                    acols[b][i] -= q * acols[a][i]
                for i in range(dim):
                    vcols[b][i] -= q * vcols[a][i]
                if acols[b][r] != 0:
                    still.append(b)
            active = still
        if active:
            j = active[0]
            acols[fixed], acols[j] = acols[j], acols[fixed]
            vcols[fixed], vcols[j] = vcols[j], vcols[fixed]
            fixed += 1
    return vcols, fixed


def apply_columns(vcols: list[list[int]], x, count: int | None = None) -> IntVec:
    """x @ V for V given as columns; optionally only the first `count` entries."""
    upto = len(vcols) if count is None else count
    return tuple(sum(xi * col[i] for i, xi in enumerate(x)) for col in vcols[:upto])


def combine_columns(vcols: list[list[int]], weights, dim: int) -> IntVec:
    """Integer combination sum_j weights[j] * column_j."""
    return tuple(
        sum(w * vcols[j][i] for j, w in enumerate(weights)) for i in range(dim)
    )


def complete_to_unimodular(v: IntVec) -> list[list[int]]:
    """Extend a primitive vector to a basis of Z^d.

    Returns a row-major matrix M with |det M| = 1 whose first *column*
    is v.  Built by reducing v to e_1 with elementary row operations and
    accumulating their inverses.
    """
    if not is_primitive(v):
        raise ValueError(f"{v} is not primitive")
    d = len(v)
    w = list(v)
    m = [[int(i == j) for j in range(d)] for i in range(d)]  # columns tracked below

    def col_add(dst: int, src: int, q: int) -> None:
        for i in range(d):
            m[i][dst] += q * m[i][src]

    # w_b -= q * w_a pairs with column_a += q * column_b on the inverse
    while True:
        nz = [i for i in range(d) if w[i] != 0]
        if len(nz) == 1:
            break
        nz.sort(key=lambda i: abs(w[i]))
        a = nz[0]
        for b in nz[1:]:
            q = w[b] // w[a]
            w[b] -= q * w[a]
            col_add(a, b, q)
    t = next(i for i in range(d) if w[i] != 0)
    if w[t] < 0:
        w[t] = -w[t]
        for i in range(d):
            m[i][t] = -m[i][t]
    if t != 0:
        w[0], w[t] = w[t], w[0]
        for i in range(d):
            m[i][0], m[i][t] = m[i][t], m[i][0]
    assert w[0] == 1 and all(x == 0 for x in w[1:])
    return m
