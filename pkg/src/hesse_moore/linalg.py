"""Exact dense linear algebra over F_p.

Everything operates on lists of lists of FieldElement.  Sizes here are
tiny (at most a few dozen rows), so plain Gaussian elimination is all we
need.  Reduced row echelon form is canonical, which makes subspace
comparison a matter of comparing rref bases.
"""

from __future__ import annotations

from .field import FieldElement, zero, one

Vector = list[FieldElement]
Matrix = list[Vector]


def mat_zero(rows: int, cols: int, p: int) -> Matrix:
    return [[zero(p) for _ in range(cols)] for _ in range(rows)]


def identity(n: int, p: int) -> Matrix:
    out = mat_zero(n, n, p)
    for i in range(n):
        out[i][i] = one(p)
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    p = a[0][0].p
    out = mat_zero(rows, cols, p)
    for i in range(rows):
        for k in range(inner):
            aik = a[i][k]
            if not aik:
                continue
            for j in range(cols):
                out[i][j] = out[i][j] + aik * b[k][j]
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    p = v[0].p
    return [sum((aij * vj for aij, vj in zip(row, v)), zero(p)) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (input left untouched)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix) -> list[Vector]:
    """Basis of {v : a @ v = 0}, one vector per free column."""
    if not a:
        return []
    cols = len(a[0])
    p = a[0][0].p
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero(p) for _ in range(cols)]
        v[fc] = one(p)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One solution of a @ x = b, or None when the system is inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    p = b[0].p
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [zero(p) for _ in range(cols)]
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def row_space(vectors: list[Vector]) -> Matrix:
    """Canonical (rref, zero rows dropped) basis of the span of the vectors."""
    if not vectors:
        return []
    red, pivots = rref(vectors)
    return red[: len(pivots)]


def span_dim(vectors: list[Vector]) -> int:
    return len(row_space(vectors))


def same_span(u: list[Vector], v: list[Vector]) -> bool:
    return row_space(u) == row_space(v)


def in_span(vectors: list[Vector], v: Vector) -> bool:
    return span_dim(vectors + [v]) == span_dim(vectors)
