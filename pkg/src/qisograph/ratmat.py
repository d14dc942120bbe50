"""Small dense exact-rational matrix helpers (Gaussian elimination)."""

from __future__ import annotations

from fractions import Fraction

Mat = list[list[Fraction]]


def rat_matrix(rows) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def rat_identity(n: int) -> Mat:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def rat_zeros(m: int, n: int) -> Mat:
    return [[Fraction(0)] * n for _ in range(m)]


def rat_matmul(a: Mat, b: Mat) -> Mat:
    n, k, m = len(a), len(b), len(b[0])
    out = rat_zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def rat_transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)]


def rat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def rat_max_abs(a: Mat) -> Fraction:
    m = Fraction(0)
    for row in a:
        for x in row:
            if abs(x) > m:
                m = abs(x)
    return m


def _row_echelon(a: Mat) -> tuple[Mat, list[int]]:
    """In-place-free reduced row echelon form; returns (rref, pivot cols)."""
    mat = [row[:] for row in a]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return mat, pivots


def rat_rank(a: Mat) -> int:
    if not a:
        return 0
    _, pivots = _row_echelon(a)
    return len(pivots)


def rat_nullspace(a: Mat) -> list[list[Fraction]]:
    """Basis of the right nullspace of a."""
    if not a:
        return []
    cols = len(a[0])
    rref, pivots = _row_echelon(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -rref[r][f]
        basis.append(vec)
    return basis
