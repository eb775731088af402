"""Smith and Hermite normal forms over the integers.

Both routines work on plain lists of Python ints internally, so there is
no overflow, and pick pivots deterministically (first nonzero entry in
row-major order) so that repeated runs give identical transforms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import ExactMatrix


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: ExactMatrix
    D: ExactMatrix
    V: ExactMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """The diagonal of ``D`` in ascending divisibility order, zeros included."""
        k = min(self.D.shape)
        return tuple(self.D[i, i].numerator for i in range(k))

    @property
    def nontrivial_factors(self) -> tuple[int, ...]:
        """Invariant factors other than 1: the cyclic orders of the cokernel torsion."""
        return tuple(d for d in self.invariant_factors if d != 1)


def _integer_rows(a: ExactMatrix) -> list[list[int]]:
    if not a.is_integer():
        raise ValueError("normal forms need an integer matrix")
    return a.to_int_rows()


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a: ExactMatrix) -> SmithDecomposition:
    A = _integer_rows(a)
    m, n = a.shape
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        pivot = next(((i, j) for i in range(t, m) for j in range(t, n) if A[i][j] != 0), None)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t] != 0:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j] != 0:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # Row t and column t are clear; enforce divisibility on the rest.
            p = A[t][t]
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    return SmithDecomposition(ExactMatrix(U), ExactMatrix(A, ncols=n), ExactMatrix(V))


def invariant_factors(a: ExactMatrix) -> tuple[int, ...]:
    return smith_normal_form(a).invariant_factors


def hermite_normal_form(a: ExactMatrix, return_transform: bool = False):
    """Column-style Hermite normal form of an integer matrix.

    Returns the matrix ``H`` whose columns are a basis of the integer
    column span of ``a``: pivots are positive and move strictly down from
    column to column, and entries to the left of a pivot lie in
    ``[0, pivot)``. With ``return_transform`` also returns the unimodular
    ``W`` such that ``a @ W`` equals ``H`` padded with zero columns.
    """
    A = _integer_rows(a)
    m, n = a.shape
    W = _identity(n)

    def col_op(j, k, p, q, r, s):
        # (col_j, col_k) <- (p col_j + q col_k, r col_j + s col_k)
        for M in (A, W):
            for row in M:
                x, y = row[j], row[k]
                row[j] = p * x + q * y
                row[k] = r * x + s * y

    k = 0
    for i in range(m):
        if k == n:
            break
        for j in range(k + 1, n):
            if A[i][j] == 0:
                continue
            x, y = A[i][k], A[i][j]
            g, s, t = _xgcd(x, y)
            # unimodular: [[s, -y/g], [t, x/g]] has determinant 1
            col_op(k, j, s, t, -y // g, x // g)
        if A[i][k] == 0:
            continue
        if A[i][k] < 0:
            for M in (A, W):
                for row in M:
                    row[k] = -row[k]
        p = A[i][k]
        for j in range(k):
            q = A[i][j] // p
            if q:
                for M in (A, W):
                    for row in M:
                        row[j] -= q * row[k]
        k += 1

    H = ExactMatrix(([row[j] for j in range(k)] for row in A), ncols=k)
    if return_transform:
        return H, ExactMatrix(W)
    return H


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
