"""Negative-definite Niemeier lattices N(24A1) and N(12A2).

Vectors are 24-tuples of rationals: coefficients with respect to the
simple roots r_1..r_24 (stored zero-based). For 12A2 the k-th component
(k = 1..12) is spanned by roots 2k-1 and 2k, with Gram block
[[-2, 1], [1, -2]].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .codes import Codeword, ConstructionError, GolayCode, build_binary_golay, build_ternary_golay
from .exactmath import ExactMatrix, determinant, hermite_normal_form, inverse, rank, smith_normal_form

RANK = 24

LatticeVector = tuple[Fraction, ...]


class RootSystemLabel(str, enum.Enum):
    A1_24 = "24A1"
    A2_12 = "12A2"
    A4_6 = "6A4"
    D4_6 = "6D4"

    @classmethod
    def parse(cls, text: str) -> RootSystemLabel:
        key = text.replace("₁", "1").replace("₂", "2").replace("₄", "4").strip()
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown root system {text!r}")

    def __str__(self) -> str:
        return self.value


def vector(coeffs: Iterable[int | Fraction | str]) -> LatticeVector:
    v = tuple(Fraction(c) for c in coeffs)
    if len(v) != RANK:
        raise ValueError(f"lattice vectors have {RANK} coordinates, got {len(v)}")
    return v


def root(i: int) -> LatticeVector:
    """The simple root r_{i+1} (zero-based index ``i``)."""
    return tuple(Fraction(int(j == i)) for j in range(RANK))


def combination(terms: Iterable[tuple[int | Fraction, int]]) -> LatticeVector:
    """Sum of ``coefficient * root(index)`` over ``terms``."""
    v = [Fraction(0)] * RANK
    for c, i in terms:
        v[i] += Fraction(c)
    return tuple(v)


def half_sum(indices: Iterable[int]) -> LatticeVector:
    return combination((Fraction(1, 2), i) for i in indices)


def add(v: Sequence[Fraction], w: Sequence[Fraction]) -> LatticeVector:
    return tuple(a + b for a, b in zip(v, w))


def scale(c: int | Fraction, v: Sequence[Fraction]) -> LatticeVector:
    return tuple(c * a for a in v)


def ternary_glue_vector(word: Codeword | Sequence[int]) -> LatticeVector:
    """Sum over the support of +-(r_{2k-1} + 2 r_{2k})/3, sign + for digit 1."""
    digits = word.digits if isinstance(word, Codeword) else tuple(word)
    terms = []
    for k, d in enumerate(digits):
        if d % 3 == 0:
            continue
        sign = 1 if d % 3 == 1 else -1
        terms.append((Fraction(sign, 3), 2 * k))
        terms.append((Fraction(2 * sign, 3), 2 * k + 1))
    return combination(terms)


def binary_glue_vector(word: Codeword | Sequence[int]) -> LatticeVector:
    digits = word.digits if isinstance(word, Codeword) else tuple(word)
    return half_sum(i for i, d in enumerate(digits) if d % 2)


def _a1_gram() -> ExactMatrix:
    return ExactMatrix.diagonal([-2] * RANK)


def _a2_gram() -> ExactMatrix:
    rows = [[0] * RANK for _ in range(RANK)]
    for k in range(12):
        i, j = 2 * k, 2 * k + 1
        rows[i][i] = rows[j][j] = -2
        rows[i][j] = rows[j][i] = 1
    return ExactMatrix(rows)


# fractional parts of an A2 component pair -> ternary digit
_A2_DIGITS = {
    (Fraction(0), Fraction(0)): 0,
    (Fraction(1, 3), Fraction(2, 3)): 1,
    (Fraction(2, 3), Fraction(1, 3)): 2,
}


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, eq=False)
class NiemeierLattice:
    label: RootSystemLabel
    glue: GolayCode
    root_gram: ExactMatrix
    basis: ExactMatrix  # columns: an integral basis, in root coordinates

    @cached_property
    def basis_inverse(self) -> ExactMatrix:
        return inverse(self.basis)

    @cached_property
    def basis_gram(self) -> ExactMatrix:
        return self.basis.T @ self.root_gram @ self.basis

    @cached_property
    def _gram_rows(self) -> list[list[tuple[int, int]]]:
        return [
            [(j, self.root_gram[i, j].numerator) for j in range(RANK) if self.root_gram[i, j]]
            for i in range(RANK)
        ]

    def glue_vector(self, word: Codeword | Sequence[int]) -> LatticeVector:
        if self.label is RootSystemLabel.A1_24:
            return binary_glue_vector(word)
        return ternary_glue_vector(word)

    def glue_digits(self, v: Sequence[Fraction]) -> tuple[int, ...] | None:
        """The glue-code word of ``v`` modulo the root lattice, or None."""
        if self.label is RootSystemLabel.A1_24:
            digits = []
            for c in v:
                twice = 2 * c
                if twice.denominator != 1:
                    return None
                digits.append(twice.numerator % 2)
            return tuple(digits)
        digits = []
        for k in range(12):
            d = _A2_DIGITS.get((_frac(v[2 * k]), _frac(v[2 * k + 1])))
            if d is None:
                return None
            digits.append(d)
        return tuple(digits)


def inner_product(n: NiemeierLattice, v: Sequence[Fraction], w: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for i, a in enumerate(v):
        if not a:
            continue
        for j, g in n._gram_rows[i]:
            b = w[j]
            if b:
                total += a * g * b
    return total


def contains(n: NiemeierLattice, v: Sequence[Fraction]) -> bool:
    if len(v) != RANK:
        raise ValueError(f"lattice vectors have {RANK} coordinates")
    digits = n.glue_digits(v)
    return digits is not None and digits in n.glue.word_set


@lru_cache(maxsize=None)
def build_niemeier(label: RootSystemLabel | str) -> NiemeierLattice:
    """Root lattice plus glue, with an integral basis extracted by HNF."""
    label = label if isinstance(label, RootSystemLabel) else RootSystemLabel.parse(label)
    if label is RootSystemLabel.A1_24:
        code, gram, denom = build_binary_golay(), _a1_gram(), 2
        glue = [binary_glue_vector(r) for r in code.generator.to_int_rows()]
    elif label is RootSystemLabel.A2_12:
        code, gram, denom = build_ternary_golay(), _a2_gram(), 3
        glue = [ternary_glue_vector(r) for r in code.generator.to_int_rows()]
    else:
        raise ValueError(f"{label} is only a label here; no lattice is constructed for it")

    generators = [root(i) for i in range(RANK)] + glue
    scaled = ExactMatrix.from_columns([[denom * c for c in g] for g in generators])
    h = hermite_normal_form(scaled)
    if h.ncols != RANK:
        raise ConstructionError(f"generators of N({label}) have rank {h.ncols}")
    lattice = NiemeierLattice(label, code, gram, h.scale(Fraction(1, denom)))
    if abs(determinant(lattice.basis_gram)) != 1:
        raise ConstructionError(f"N({label}) basis is not unimodular")
    return lattice


def coordinates(n: NiemeierLattice, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Coordinates of ``v`` in the extracted integral basis."""
    return n.basis_inverse.apply(v)


def saturation_index(n: NiemeierLattice, vs: Sequence[Sequence[Fraction]]) -> int:
    """Index of span_Z(vs) in (span_Q(vs) intersected with the lattice)."""
    if not vs:
        raise ValueError("need at least one vector")
    cols = []
    for v in vs:
        if not contains(n, v):
            raise ValueError("vector is not in the lattice")
        cols.append(coordinates(n, v))
    x = ExactMatrix.from_columns(cols)
    if rank(x) != len(vs):
        raise ValueError("vectors are linearly dependent")
    factors = smith_normal_form(x).invariant_factors
    index = 1
    for d in factors:
        index *= d
    return index
