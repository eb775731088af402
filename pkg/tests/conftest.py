from __future__ import annotations

import itertools
import random
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from a5lattice.exactmath import ExactMatrix, parse_matrix

GOLDEN = Path(__file__).parent / "golden"
CASES = ("2i", "2ii", "2iii", "2iv", "2v", "2vi")


def golden_matrix(name: str) -> ExactMatrix:
    return parse_matrix((GOLDEN / f"{name}.txt").read_text(encoding="utf-8"))


def leibniz_det(rows) -> Fraction:
    """Permutation-sum determinant: slow, but shares no code with Bareiss."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction(-1 if inversions % 2 else 1)
        for i, p in enumerate(perm):
            term *= Fraction(rows[i][p])
            if not term:
                break
        total += term
    return total


def to_sympy(m: ExactMatrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.rows()])


def random_int_matrix(rng: random.Random, nrows: int, ncols: int, bound: int = 6) -> ExactMatrix:
    return ExactMatrix([[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
