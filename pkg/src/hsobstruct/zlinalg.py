"""Exact integer linear algebra.

Matrices are plain lists of rows of Python ints, so every entry is an
arbitrary-precision integer. Functions never mutate their arguments.
Routines that may see a matrix with zero rows take an explicit ``ncols``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .errors import DependentInput, DimensionMismatch, NotSquare

IntMatrix = List[List[int]]
IntVector = List[int]


@dataclass(frozen=True)
class SmithForm:
    """``left @ m @ right`` is the rectangular diagonal matrix ``diagonal``.

    ``left_inv`` and ``right_inv`` are the inverses of the two unimodular
    transforms; they are tracked during the reduction rather than recomputed.
    """

    diagonal: Tuple[int, ...]
    left: IntMatrix
    right: IntMatrix
    left_inv: IntMatrix
    right_inv: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    def invariant_factors(self) -> List[int]:
        """Nonzero diagonal entries other than 1 (the torsion of the cokernel)."""
        return [d for d in self.diagonal if d > 1]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy_matrix(m: Sequence[Sequence[int]]) -> IntMatrix:
    return [[int(x) for x in row] for row in m]


def shape(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Tuple[int, int]:
    rows = len(m)
    if rows == 0:
        return 0, (ncols or 0)
    cols = len(m[0])
    if any(len(row) != cols for row in m):
        raise DimensionMismatch("ragged matrix")
    if ncols is not None and ncols != cols:
        raise DimensionMismatch(f"expected {ncols} columns, got {cols}")
    return rows, cols


def transpose(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    rows, cols = shape(m, ncols)
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch("inner dimensions differ")
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def matpow(m: Sequence[Sequence[int]], k: int) -> IntMatrix:
    n = len(m)
    result = identity(n)
    base = copy_matrix(m)
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def _smallest_pivot(a: IntMatrix, k: int) -> Optional[Tuple[int, int]]:
    best = None
    best_abs = 0
    for i in range(k, len(a)):
        row = a[i]
        for j in range(k, len(row)):
            x = row[j]
            if x and (best is None or abs(x) < best_abs):
                best, best_abs = (i, j), abs(x)
    return best


def smith_normal_form(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SmithForm:
    """Smith normal form with unimodular transforms.

    Pivot rule: smallest nonzero magnitude in the remaining block, ties broken
    by lowest (row, col). The result is deterministic for a given input.
    """
    rows, cols = shape(m, ncols)
    a = copy_matrix(m)
    u, u_inv = identity(rows), identity(rows)
    v, v_inv = identity(cols), identity(cols)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for row in u_inv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def add_row(dst: int, src: int, q: int) -> None:
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]
        for row in u_inv:
            row[src] -= q * row[dst]

    def add_col(dst: int, src: int, q: int) -> None:
        # col[dst] += q * col[src]
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]
        v_inv[src] = [x - q * y for x, y in zip(v_inv[src], v_inv[dst])]

    for k in range(min(rows, cols)):
        while True:
            piv = _smallest_pivot(a, k)
            if piv is None:
                break
            i, j = piv
            if i != k:
                swap_rows(k, i)
            if j != k:
                swap_cols(k, j)
            p = a[k][k]
            clean = True
            for i in range(k + 1, rows):
                if a[i][k]:
                    add_row(i, k, -(a[i][k] // p))
                    clean = clean and a[i][k] == 0
            for j in range(k + 1, cols):
                if a[k][j]:
                    add_col(j, k, -(a[k][j] // p))
                    clean = clean and a[k][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(k + 1, rows) if any(a[i][j] % p for j in range(k + 1, cols))),
                None,
            )
            if bad is None:
                break
            add_row(k, bad, 1)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            u[k] = [-x for x in u[k]]
            for row in u_inv:
                row[k] = -row[k]
        if a[k][k] == 0:
            break

    diagonal = tuple(a[i][i] for i in range(min(rows, cols)))
    return SmithForm(diagonal, u, v, u_inv, v_inv)


def hermite_normal_form(vectors: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Row Hermite normal form of the lattice spanned by ``vectors``.

    Returns the nonzero rows: echelon, positive pivots, entries above each
    pivot reduced into ``[0, pivot)``.
    """
    rows, cols = shape(vectors, ncols)
    a = copy_matrix(vectors)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        for i in range(r + 1, rows):
            if a[i][c] == 0:
                continue
            x, y = a[r][c], a[i][c]
            g, s, t = xgcd(x, y)
            xr, yr = x // g, y // g
            top = [s * p + t * q for p, q in zip(a[r], a[i])]
            bottom = [-yr * p + xr * q for p, q in zip(a[r], a[i])]
            a[r], a[i] = top, bottom
        p = a[r][c]
        if p == 0:
            continue
        if p < 0:
            a[r] = [-x for x in a[r]]
            p = -p
        for i in range(r):
            q = a[i][c] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return [row for row in a[:r]]


def rank(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    return len(hermite_normal_form(m, ncols))


def kernel_basis(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Basis of ``{v : m v = 0}``, a direct summand of Z^cols, in Hermite form."""
    rows, cols = shape(m, ncols)
    snf = smith_normal_form(m, cols)
    r = snf.rank
    vectors = [[snf.right[i][j] for i in range(cols)] for j in range(r, cols)]
    return hermite_normal_form(vectors, cols)


def saturate(vectors: Sequence[Sequence[int]], ambient_rank: int) -> IntMatrix:
    """Basis of the smallest direct summand of Z^n containing the given span."""
    k, _ = shape(vectors, ambient_rank)
    if k == 0:
        return []
    snf = smith_normal_form(vectors, ambient_rank)
    if snf.rank != k:
        raise DependentInput("vectors are rationally dependent")
    # rows of the input span the same lattice as diag * right_inv
    return hermite_normal_form(snf.right_inv[:k], ambient_rank)


def complement(vectors: Sequence[Sequence[int]], ambient_rank: int) -> IntMatrix:
    """Vectors completing the saturation of ``vectors`` to a basis of Z^n."""
    k, _ = shape(vectors, ambient_rank)
    snf = smith_normal_form(vectors, ambient_rank)
    if snf.rank != k:
        raise DependentInput("vectors are rationally dependent")
    return [list(row) for row in snf.right_inv[k:]]


def is_primitive_system(vectors: Sequence[Sequence[int]], ambient_rank: int) -> bool:
    """True when the vectors are part of some basis of Z^n."""
    k, _ = shape(vectors, ambient_rank)
    if k == 0:
        return True
    snf = smith_normal_form(vectors, ambient_rank)
    return snf.rank == k and all(d == 1 for d in snf.diagonal[:k])


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NotSquare(f"{n} rows but a row of different length")
    if n == 0:
        return 1
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]
