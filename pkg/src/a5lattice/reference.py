"""Published Gram matrices, inverses and discriminant-form tables.

Matrices are stored in the package text format (rows on lines, entries
``p/q``). ``load_references`` can overlay files from a fixture directory
named ``gram_<case>.txt`` / ``inverse_<case>.txt``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .exactmath import ExactMatrix, parse_matrix

_GRAMS = {
    "2i": """
        -2 0 0 -1 -1 -1
        0 -2 0 -1 -1 -1
        0 0 -10 0 0 -5
        -1 -1 0 -4 -1 -1
        -1 -1 0 -1 -4 -1
        -1 -1 -5 -1 -1 -6
    """,
    "2ii": """
        -2 0 0 -1 -1 -1
        0 -2 0 -1 -1 -1
        0 0 -2 -1 0 0
        -1 -1 -1 -4 -1 -1
        -1 -1 0 -1 -4 -1
        -1 -1 0 -1 -1 -6
    """,
    "2iii": """
        -2 0 0 0 -1 0
        0 -2 0 0 -1 0
        0 0 -2 0 -1 0
        0 0 0 -2 0 -1
        -1 -1 -1 0 -4 0
        0 0 0 -1 0 -8
    """,
    "2iv": """
        -2 0 0 0 -1 0
        0 -2 0 0 -1 0
        0 0 -2 0 0 -1
        0 0 0 -2 0 -1
        -1 -1 0 0 -6 0
        0 0 -1 -1 0 -6
    """,
    "2v": """
        -2 1 0 0 0 0
        1 -2 0 0 0 -1
        0 0 -2 1 0 0
        0 0 1 -2 0 -1
        0 0 0 0 -20 0
        0 -1 0 -1 0 -8
    """,
    "2vi": """
        -2 1 0 0 0 0
        1 -2 0 0 -1 0
        0 0 -10 0 0 0
        0 0 0 -12 0 0
        0 -1 0 0 -4 0
        0 0 0 0 0 -4
    """,
}

_INVERSES = {
    "2i": """
        -23/30 -4/15 -1/10 1/6 1/6 1/5
        -4/15 -23/30 -1/10 1/6 1/6 1/5
        -1/10 -1/10 -1/5 0 0 1/5
        1/6 1/6 0 -1/3 0 0
        1/6 1/6 0 0 -1/3 0
        1/5 1/5 1/5 0 0 -2/5
    """,
    "2ii": """
        -11/15 -7/30 -1/10 1/5 1/6 1/10
        -7/30 -11/15 -1/10 1/5 1/6 1/10
        -1/10 -1/10 -3/5 1/5 0 0
        1/5 1/5 1/5 -2/5 0 0
        1/6 1/6 0 0 -1/3 0
        1/10 1/10 0 0 0 -1/5
    """,
    "2iii": """
        -3/5 -1/10 -1/10 0 1/5 0
        -1/10 -3/5 -1/10 0 1/5 0
        -1/10 -1/10 -3/5 0 1/5 0
        0 0 0 -8/15 0 1/15
        1/5 1/5 1/5 0 -2/5 0
        0 0 0 1/15 0 -2/15
    """,
    "2iv": """
        -11/20 -1/20 0 0 1/10 0
        -1/20 -11/20 0 0 1/10 0
        0 0 -11/20 -1/20 0 1/10
        0 0 -1/20 -11/20 0 1/10
        1/10 1/10 0 0 -1/5 0
        0 0 1/10 1/10 0 -1/5
    """,
    "2v": """
        -41/60 -11/30 -1/60 -1/30 0 1/20
        -11/30 -11/15 -1/30 -1/15 0 1/10
        -1/60 -1/30 -41/60 -11/30 0 1/20
        -1/30 -1/15 -11/30 -11/15 0 1/10
        0 0 0 0 -1/20 0
        1/20 1/10 1/20 1/10 0 -3/20
    """,
    "2vi": """
        -7/10 -2/5 0 0 1/10 0
        -2/5 -4/5 0 0 1/5 0
        0 0 -1/10 0 0 0
        0 0 0 -1/12 0 0
        1/10 1/5 0 0 -3/10 0
        0 0 0 0 0 -1/4
    """,
}


@dataclass(frozen=True)
class DiscriminantClaim:
    """Named generators (in dual-basis coordinates) and their form table.

    ``table`` is None where only generation is asserted. Diagonal entries
    are quadratic values (mod 2Z), off-diagonal ones bilinear (mod Z).
    ``cyclic_orders`` lists the claimed orders of the generators when the
    group is asserted to be their direct sum.
    """

    factors: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    table: tuple[tuple[Fraction, ...], ...] | None
    cyclic_orders: tuple[int, ...] | None = None


def _e(*idx: int) -> tuple[int, ...]:
    v = [0] * 6
    for i in idx:
        v[i - 1] += 1
    return tuple(v)


def _t(*rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


DISCRIMINANT_CLAIMS: dict[str, DiscriminantClaim] = {
    "2i": DiscriminantClaim((30, 30), (_e(1), _e(2, 3, 4)), _t(("-23/30", "-1/5"), ("-1/5", "-35/30"))),
    "2ii": DiscriminantClaim((10, 30), (_e(1), _e(3)), _t(("-11/15", "-1/10"), ("-1/10", "-3/5"))),
    "2iii": DiscriminantClaim((10, 30), (_e(2), _e(1, 4)), _t(("-3/5", "-1/10"), ("-1/10", "13/15"))),
    "2iv": DiscriminantClaim((20, 20), (_e(1), _e(3)), _t(("-11/20", "0"), ("0", "-11/20"))),
    "2v": DiscriminantClaim((20, 60), (_e(1), _e(5)), _t(("-41/60", "0"), ("0", "-1/20"))),
    "2vi": DiscriminantClaim(
        (2, 2, 20, 60), (_e(1), _e(3), _e(4), _e(6)), None, cyclic_orders=(10, 10, 12, 4)
    ),
}

# Basis changes onto a common pair of generators for cases 2ii and 2iii:
# new generators = (old generators) @ matrix, columnwise.
ISOMETRY_BASIS_CHANGES: dict[str, tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, int], ...]]] = {
    "2ii": ((_e(1), _e(3)), ((2, 7), (1, 0))),
    "2iii": ((_e(2), _e(1, 4)), ((1, 7), (1, -4))),
}
COMMON_FORM_TABLE = _t(("1/15", "1/30"), ("1/30", "1/15"))

# Orders of the discriminant groups as listed for the invariant rank-4 lattice.
DISCRIMINANT_ORDERS = {"2i": 900, "2ii": 300, "2iii": 300, "2iv": 400, "2v": 1200, "2vi": 4800}
ORDER_FORMULAS = {"2i": (1, 30), "2ii": (3, 10), "2iii": (3, 10), "2iv": (1, 20), "2v": (3, 20), "2vi": (3, 40)}


@dataclass(frozen=True)
class References:
    grams: dict[str, ExactMatrix]
    inverses: dict[str, ExactMatrix]


def load_references(fixture_dir: str | Path | None = None) -> References:
    grams = {k: parse_matrix(v) for k, v in _GRAMS.items()}
    inverses = {k: parse_matrix(v) for k, v in _INVERSES.items()}
    if fixture_dir is not None:
        root = Path(fixture_dir)
        if not root.is_dir():
            raise FileNotFoundError(f"fixture directory {root} does not exist")
        for case in _GRAMS:
            for prefix, target in (("gram", grams), ("inverse", inverses)):
                path = root / f"{prefix}_{case}.txt"
                if path.exists():
                    target[case] = parse_matrix(path.read_text(encoding="utf-8"))
    return References(grams, inverses)


_DEFAULT = load_references()


def reference_gram(case: str) -> ExactMatrix:
    return _DEFAULT.grams[str(case)]


def reference_inverse(case: str) -> ExactMatrix:
    return _DEFAULT.inverses[str(case)]
