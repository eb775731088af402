"""Immutable rational matrices with exact determinant and inverse."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import as_fraction, format_rational


class ExactMatrix:
    """A rectangular matrix of ``Fraction`` entries.

    Instances are immutable; every arithmetic operation returns a new
    matrix. Indexing is zero-based: ``m[i, j]``.
    """

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable[int | Fraction | str]], ncols: int | None = None):
        data = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("rows of unequal length")
        else:
            width = ncols or 0
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # construction helpers

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> ExactMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def diagonal(cls, entries: Sequence[int | Fraction]) -> ExactMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int | Fraction]]) -> ExactMatrix:
        if not columns:
            raise ValueError("need at least one column")
        return cls(zip(*columns))

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integer():
            raise ValueError("matrix has non-integer entries")
        return [[x.numerator for x in r] for r in self._rows]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.nrows)
            for j in range(i)
        )

    # arithmetic

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix(zip(*self._rows), ncols=self.nrows) if self.nrows else ExactMatrix([], 0)

    def transpose(self) -> ExactMatrix:
        return self.T

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return ExactMatrix(
            ([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols]
             for r in self._rows),
            ncols=other.ncols,
        )

    def apply(self, v: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self._rows)

    def _check_same_shape(self, other: ExactMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return ExactMatrix(
            ([a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)),
            ncols=self.ncols,
        )

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(([-a for a in r] for r in self._rows), ncols=self.ncols)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int | Fraction) -> ExactMatrix:
        c = as_fraction(c)
        return ExactMatrix(([c * a for a in r] for r in self._rows), ncols=self.ncols)

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> ExactMatrix:
        return ExactMatrix(([self._rows[i][j] for j in cols] for i in rows), ncols=len(cols))

    def hstack(self, other: ExactMatrix) -> ExactMatrix:
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return ExactMatrix(r + s for r, s in zip(self._rows, other._rows))

    # comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.shape, self._rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"ExactMatrix({[[format_rational(x) for x in r] for r in self._rows]})"

    def __str__(self) -> str:
        return format_matrix(self)


def format_matrix(m: ExactMatrix) -> str:
    """One row per line, entries separated by single spaces."""
    return "\n".join(" ".join(format_rational(x) for x in r) for r in m.rows())


def parse_matrix(text: str) -> ExactMatrix:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    return ExactMatrix(rows)


def _require_square(m: ExactMatrix) -> None:
    if not m.is_square():
        raise ValueError(f"expected a square matrix, got shape {m.shape}")


def _lcm_of_denominators(m: ExactMatrix) -> int:
    from math import lcm

    d = 1
    for r in m.rows():
        for x in r:
            d = lcm(d, x.denominator)
    return d


def determinant(m: ExactMatrix) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination.

    Rational input is scaled to an integer matrix first, so all the
    intermediate divisions are exact integer divisions.
    """
    _require_square(m)
    n = m.nrows
    if n == 0:
        return Fraction(1)
    d = _lcm_of_denominators(m)
    a = [[(x * d).numerator for x in r] for r in m.rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], d**n)


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    _require_square(m)
    n = m.nrows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.rows())]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return ExactMatrix(r[n:] for r in aug)


def solve(m: ExactMatrix, b: Sequence[int | Fraction]) -> tuple[Fraction, ...] | None:
    """Return one exact solution ``x`` of ``m x = b``, or None if there is none."""
    rows, cols = m.shape
    if len(b) != rows:
        raise ValueError("dimension mismatch")
    aug = [list(r) + [as_fraction(bi)] for r, bi in zip(m.rows(), b)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        aug[r] = [x / piv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(aug[i][cols] != 0 for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return tuple(x)


def rank(m: ExactMatrix) -> int:
    a = [list(r) for r in m.rows()]
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r
