"""Dense linear algebra over a scalar field (row reduction, kernels, solves).

Matrices are lists of rows.  With the rational field everything is exact;
with the complex field pivots smaller than epsilon are treated as zero.
"""

from __future__ import annotations

from .scalars import QQ


def zeros(rows, cols, field=QQ):
    z = field.coerce(0)
    return [[z] * cols for _ in range(rows)]


def identity(n, field=QQ):
    one, z = field.coerce(1), field.coerce(0)
    return [[one if i == j else z for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        if len(row) != inner:
            raise ValueError("shape mismatch in matmul")
        acc = [0] * cols
        for k, a in enumerate(row):
            if a == 0:
                continue
            Bk = B[k]
            for j in range(cols):
                b = Bk[j]
                if b != 0:
                    acc[j] += a * b
        out.append(acc)
    return out


def matvec(A, v):
    return [sum((a * x for a, x in zip(row, v) if a != 0 and x != 0), 0) for row in A]


def transpose(A):
    return [list(r) for r in zip(*A)] if A else []


def rref(A, field=QQ):
    """Reduced row echelon form.  Returns ``(R, pivot_columns)``."""
    R = [[field.coerce(x) for x in row] for row in A]
    if not R:
        return R, []
    rows, cols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        if field.exact:
            p = next((i for i in range(r, rows) if R[i][c] != 0), None)
        else:
            best = max(range(r, rows), key=lambda i: abs(R[i][c]))
            p = best if not field.is_zero(R[best][c]) else None
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = field.div(1, R[r][c])
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                m = R[i][c]
                Ri, Rr = R[i], R[r]
                R[i] = [a - m * b for a, b in zip(Ri, Rr)]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A, field=QQ) -> int:
    return len(rref(A, field)[1])


def nullspace(A, ncols=None, field=QQ):
    """Basis of ``{x : A x = 0}`` as a list of column vectors."""
    if not A:
        n = ncols or 0
        return identity(n, field)
    R, pivots = rref(A, field)
    cols = len(R[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.coerce(0)] * cols
        v[fc] = field.coerce(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(A, b, field=QQ):
    """One solution of ``A x = b`` or ``None`` if inconsistent."""
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, field)
    cols = len(A[0])
    if cols in pivots:
        return None
    x = [field.coerce(0)] * cols
    for row, pc in zip(R, pivots):
        x[pc] = row[cols]
    return x


def column_space_basis(A, field=QQ):
    """Columns of ``A`` forming a basis of its image."""
    _, pivots = rref(A, field)
    return [[row[c] for row in A] for c in pivots]
