"""Discriminant groups A_M = Z^n / M Z^n of even lattices with Gram matrix M.

Elements are integer vectors of coefficients on the dual basis e*_1..e*_n;
the lattice vector e_j has coordinates given by column j of M. The
bilinear form is x^T M^{-1} y mod Z and the quadratic form x^T M^{-1} x
mod 2Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Sequence

from .exactmath import (
    ExactMatrix,
    ResidueMod2Z,
    ResidueModZ,
    determinant,
    inverse,
    reduce_mod_2z,
    reduce_mod_z,
    smith_normal_form,
)
from .reference import (
    COMMON_FORM_TABLE,
    DISCRIMINANT_CLAIMS,
    DISCRIMINANT_ORDERS,
    ISOMETRY_BASIS_CHANGES,
    ORDER_FORMULAS,
    reference_gram,
)

DiscElement = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class DiscGroup:
    gram: ExactMatrix
    gram_inverse: ExactMatrix
    U: ExactMatrix  # U @ gram @ V = diag(d_1, ..., d_n)
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.gram.nrows

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 1)

    @property
    def order(self) -> int:
        out = 1
        for d in self.diagonal:
            out *= d
        return out

    @property
    def exponent(self) -> int:
        return max(self.diagonal, default=1)

    @cached_property
    def _scaled_inverse(self) -> tuple[int, list[list[int]]]:
        """(d, N) with N = d * M^{-1} integral."""
        d = lcm(*(x.denominator for row in self.gram_inverse.rows() for x in row))
        return d, [[int(x * d) for x in row] for row in self.gram_inverse.rows()]

    @cached_property
    def _U_rows(self) -> list[list[int]]:
        return self.U.to_int_rows()

    @cached_property
    def generators(self) -> tuple[DiscElement, ...]:
        """Dual-basis coordinates of generators of the cyclic summands, in factor order."""
        u_inv = inverse(self.U).to_int_rows()
        return tuple(
            tuple(u_inv[r][i] for r in range(self.rank))
            for i, d in enumerate(self.diagonal)
            if d != 1
        )

    def smith_coordinates(self, x: Sequence[int]) -> tuple[int, ...]:
        """Image of ``x`` in the product of Z/d_i (entries reduced, trivial factors dropped)."""
        self._check(x)
        ux = [sum(a * b for a, b in zip(row, x)) for row in self._U_rows]
        return tuple(v % d for v, d in zip(ux, self.diagonal) if d != 1)

    def is_zero(self, x: Sequence[int]) -> bool:
        return not any(self.smith_coordinates(x))

    def equal(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.smith_coordinates(x) == self.smith_coordinates(y)

    def _check(self, x: Sequence[int]) -> None:
        if len(x) != self.rank:
            raise ValueError(f"element has {len(x)} coordinates, group rank is {self.rank}")


def disc_group(m: ExactMatrix) -> DiscGroup:
    if not m.is_square() or not m.is_integer():
        raise ValueError("need a square integer Gram matrix")
    if determinant(m) == 0:
        raise ValueError("Gram matrix is singular")
    snf = smith_normal_form(m)
    return DiscGroup(m, inverse(m), snf.U, snf.invariant_factors)


def _form(g: DiscGroup, x: Sequence[int], y: Sequence[int]) -> Fraction:
    g._check(x)
    g._check(y)
    d, n = g._scaled_inverse
    total = sum(xi * sum(a * yj for a, yj in zip(n[i], y)) for i, xi in enumerate(x) if xi)
    return Fraction(total, d)


def pairing(g: DiscGroup, x: Sequence[int], y: Sequence[int]) -> ResidueModZ:
    return reduce_mod_z(_form(g, x, y))


def quadratic(g: DiscGroup, x: Sequence[int]) -> ResidueMod2Z:
    return reduce_mod_2z(_form(g, x, x))


def element_order(g: DiscGroup, x: Sequence[int]) -> int:
    coords = g.smith_coordinates(x)
    factors = g.invariant_factors
    return lcm(1, *(d // gcd(d, c) for c, d in zip(coords, factors)))


def subgroup_order(g: DiscGroup, xs: Sequence[Sequence[int]]) -> int:
    """|<xs>| = |A| / |coker [M | xs]|."""
    if not xs:
        return 1
    for x in xs:
        g._check(x)
    relations = g.gram.hstack(ExactMatrix.from_columns([list(x) for x in xs]))
    quotient = 1
    for d in smith_normal_form(relations).invariant_factors:
        quotient *= d
    return g.order // quotient


def combine(xs: Sequence[Sequence[int]], coeffs: Sequence[int]) -> DiscElement:
    """sum_i coeffs[i] * xs[i]."""
    n = len(xs[0])
    return tuple(sum(c * x[k] for c, x in zip(coeffs, xs)) for k in range(n))


def form_table(g: DiscGroup, xs: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Quadratic values on the diagonal (in [0, 2)), bilinear values off it (in [0, 1))."""
    return [
        [
            quadratic(g, x).representative if i == j else pairing(g, x, y).representative
            for j, y in enumerate(xs)
        ]
        for i, x in enumerate(xs)
    ]


def table_matches(g: DiscGroup, xs: Sequence[Sequence[int]], table: Sequence[Sequence[Fraction]]) -> bool:
    """Compare a printed table entrywise, each entry in its own value group."""
    for i, x in enumerate(xs):
        for j, y in enumerate(xs):
            if i == j:
                ok = quadratic(g, x) == reduce_mod_2z(table[i][j])
            else:
                ok = pairing(g, x, y) == reduce_mod_z(table[i][j])
            if not ok:
                return False
    return True


@dataclass(frozen=True)
class ClaimCheck:
    name: str
    expected: str
    actual: str
    passed: bool


def check_case_claims(case: str, gram: ExactMatrix | None = None) -> list[ClaimCheck]:
    """Invariant factors, generation and form table of the named generators."""
    case = str(case)
    claim = DISCRIMINANT_CLAIMS[case]
    g = disc_group(gram if gram is not None else reference_gram(case))
    checks = []

    def add(name, expected, actual):
        checks.append(ClaimCheck(name, str(expected), str(actual), expected == actual))

    add("invariant factors", list(claim.factors), list(g.invariant_factors))
    add("generated subgroup order", g.order, subgroup_order(g, claim.generators))
    if claim.table is not None:
        printed = [[str(reduce_mod_2z(v) if i == j else reduce_mod_z(v)) for j, v in enumerate(row)]
                   for i, row in enumerate(claim.table)]
        computed = [[str(reduce_mod_2z(v) if i == j else reduce_mod_z(v)) for j, v in enumerate(row)]
                    for i, row in enumerate(form_table(g, claim.generators))]
        add("form table", printed, computed)
    if claim.cyclic_orders is not None:
        add("generator orders", list(claim.cyclic_orders), [element_order(g, x) for x in claim.generators])
    return checks


def isometry_generators(case: str, matrix: Sequence[Sequence[int]] | None = None) -> tuple[DiscElement, DiscElement]:
    """Images of t*_1, t*_2: (old generators) @ matrix, columnwise."""
    old, default = ISOMETRY_BASIS_CHANGES[str(case)]
    mat = matrix if matrix is not None else default
    return (
        combine(old, [mat[0][0], mat[1][0]]),
        combine(old, [mat[0][1], mat[1][1]]),
    )


def verify_common_form(case: str, matrix: Sequence[Sequence[int]] | None = None) -> bool:
    """The two images generate A_M and carry the common table [[1/15, 1/30], [1/30, 1/15]]."""
    case = str(case)
    if case not in ISOMETRY_BASIS_CHANGES:
        raise ValueError(f"no basis change recorded for case {case}")
    g = disc_group(reference_gram(case))
    t1, t2 = isometry_generators(case, matrix)
    if subgroup_order(g, [t1, t2]) != g.order:
        return False
    return table_matches(g, [t1, t2], COMMON_FORM_TABLE)


def listed_order_check() -> dict[str, bool]:
    """|A_M| per case against the listed orders c * k^2."""
    out = {}
    for case, expected in DISCRIMINANT_ORDERS.items():
        c, k = ORDER_FORMULAS[case]
        out[case] = disc_group(reference_gram(case)).order == expected == c * k * k
    return out
