"""Division-free determinants over commutative rings."""

from __future__ import annotations

from itertools import combinations


def ring_determinant(M):
    """Determinant of a square matrix whose entries support ``+``, ``-`` and ``*``.

    Laplace expansion along successive rows, memoised on the set of columns
    already used: O(n 2^n) ring operations and no division, so it is valid
    over any commutative ring (algebra elements, polynomials over an algebra,
    multivariate polynomials).
    """
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix has no well-defined ring for its determinant")
    if any(len(row) != n for row in M):
        raise ValueError("ring_determinant requires a square matrix")
    # minors[S] = det of rows (n-|S|..n-1) restricted to the columns in S
    minors = {}
    last = n - 1
    for c in range(n):
        minors[1 << c] = M[last][c]
    for size in range(2, n + 1):
        row = M[n - size]
        new = {}
        for S in _masks_of_size(n, size):
            acc = None
            sign_pos = 0
            for c in range(n):
                if not S >> c & 1:
                    continue
                term = row[c] * minors[S & ~(1 << c)]
                if sign_pos % 2:
                    acc = -term if acc is None else acc - term
                else:
                    acc = term if acc is None else acc + term
                sign_pos += 1
            new[S] = acc
        minors = new
    return minors[(1 << n) - 1]


def _masks_of_size(n, k):
    for cols in combinations(range(n), k):
        yield sum(1 << c for c in cols)
