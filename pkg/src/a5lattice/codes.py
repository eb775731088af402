"""The binary [24,12,8] and ternary [12,6,6] Golay codes.

Both codes are built as extended quadratic-residue codes (primes 23 and 11),
fully enumerated, and checked against their known invariants before they
are handed out. Coordinates are zero-based internally; "lexicographic"
always means comparison of sorted coordinate tuples.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Sequence

from .exactmath import ExactMatrix

BINARY_SPECTRUM = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
TERNARY_SPECTRUM = {0: 1, 6: 264, 9: 440, 12: 24}

Support = tuple[int, ...]


class ConstructionError(RuntimeError):
    """A built object failed its own consistency checks."""


@dataclass(frozen=True, order=True)
class Codeword:
    """A word over GF(q); ``digits`` are integers in ``range(q)``."""

    digits: tuple[int, ...]
    q: int = field(default=2, compare=False)

    @property
    def support(self) -> Support:
        return tuple(i for i, d in enumerate(self.digits) if d)

    @property
    def weight(self) -> int:
        return sum(1 for d in self.digits if d)

    def __add__(self, other: Codeword) -> Codeword:
        return Codeword(tuple((a + b) % self.q for a, b in zip(self.digits, other.digits)), self.q)

    def __neg__(self) -> Codeword:
        return Codeword(tuple((-a) % self.q for a in self.digits), self.q)

    def __sub__(self, other: Codeword) -> Codeword:
        return self + (-other)


# Names for the two word shapes.
BinaryWord24 = Codeword
TernaryWord12 = Codeword


def _row_reduce_mod(rows: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    """Reduced row echelon form over GF(q), zero rows dropped."""
    a = [[x % q for x in r] for r in rows]
    n = len(a[0])
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = pow(a[r][c], -1, q)
        a[r] = [x * inv % q for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % q for x, y in zip(a[i], a[r])]
        r += 1
    return a[:r]


def _span(generators: Sequence[Sequence[int]], q: int) -> list[tuple[int, ...]]:
    words = [tuple([0] * len(generators[0]))]
    for g in generators:
        words = [
            tuple((x + c * y) % q for x, y in zip(w, g))
            for c in range(q)
            for w in words
        ]
    return sorted(words)


def _extended_qr_generators(p: int, q: int) -> list[list[int]]:
    residues = {x * x % p for x in range(1, p)}
    base = [1 if i == 0 or i in residues else 0 for i in range(p)]
    rows = [base[-s:] + base[:-s] for s in range(p)] + [[1] * p]
    return [r + [(-sum(r)) % q] for r in rows]


@dataclass(frozen=True)
class GolayCode:
    kind: str
    q: int
    length: int
    generator: ExactMatrix
    words: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return self.generator.nrows

    @cached_property
    def word_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.words)

    @cached_property
    def support_masks(self) -> frozenset[int]:
        """Bitmasks of all codeword supports (binary: one per word)."""
        return frozenset(sum(1 << i for i, d in enumerate(w) if d) for w in self.words)

    def __contains__(self, word) -> bool:
        digits = word.digits if isinstance(word, Codeword) else tuple(int(x) % self.q for x in word)
        return digits in self.word_set

    def weight_distribution(self) -> dict[int, int]:
        hist = Counter(sum(1 for d in w if d) for w in self.words)
        return dict(sorted(hist.items()))

    def minimum_weight(self) -> int:
        return min(w for w in self.weight_distribution() if w)

    @lru_cache(maxsize=None)
    def supports_of_weight(self, k: int) -> tuple[Support, ...]:
        """Distinct supports of weight-``k`` words, sorted lexicographically."""
        sups = {tuple(i for i, d in enumerate(w) if d) for w in self.words}
        return tuple(sorted(s for s in sups if len(s) == k))

    def octads(self) -> tuple[Support, ...]:
        self._require("binary")
        return self.supports_of_weight(8)

    def dodecads(self) -> tuple[Support, ...]:
        self._require("binary")
        return self.supports_of_weight(12)

    def hexads(self) -> tuple[Support, ...]:
        self._require("ternary")
        return self.supports_of_weight(6)

    def words_with_support(self, support: Iterable[int]) -> list[Codeword]:
        s = set(support)
        return [
            Codeword(w, self.q)
            for w in self.words
            if {i for i, d in enumerate(w) if d} == s
        ]

    def is_self_dual(self) -> bool:
        rows = self.generator.to_int_rows()
        orthogonal = all(sum(a * b for a, b in zip(r, s)) % self.q == 0 for r in rows for s in rows)
        return orthogonal and 2 * self.dimension == self.length

    def _require(self, kind: str) -> None:
        if self.kind != kind:
            raise ValueError(f"operation needs the {kind} code, got {self.kind}")

    # tolerate lru_cache on a frozen dataclass method
    def __hash__(self) -> int:
        return hash((self.kind, self.generator))


def _build(kind: str, p: int, q: int, spectrum: dict[int, int], steiner: tuple[int, int]) -> GolayCode:
    gens = _row_reduce_mod(_extended_qr_generators(p, q), q)
    words = tuple(_span(gens, q))
    code = GolayCode(kind, q, p + 1, ExactMatrix(gens), words)
    if code.dimension != (p + 1) // 2:
        raise ConstructionError(f"{kind} code has dimension {code.dimension}")
    if code.weight_distribution() != spectrum:
        raise ConstructionError(f"{kind} code has weights {code.weight_distribution()}")
    if not code.is_self_dual():
        raise ConstructionError(f"{kind} code is not self-dual")
    if not verify_steiner(code, *steiner):
        raise ConstructionError(f"{kind} code blocks do not form S{steiner}")
    return code


@lru_cache(maxsize=None)
def build_binary_golay() -> GolayCode:
    return _build("binary", 23, 2, BINARY_SPECTRUM, (5, 8))


@lru_cache(maxsize=None)
def build_ternary_golay() -> GolayCode:
    return _build("ternary", 11, 3, TERNARY_SPECTRUM, (5, 6))


def is_steiner_system(blocks: Iterable[Iterable[int]], n: int, t: int) -> bool:
    """True iff every ``t``-subset of ``range(n)`` lies in exactly one block."""
    counts = Counter()
    for b in blocks:
        counts.update(itertools.combinations(sorted(b), t))
    return len(counts) == comb(n, t) and all(c == 1 for c in counts.values())


def verify_steiner(code: GolayCode, t: int, k: int) -> bool:
    expected = {"binary": (5, 8), "ternary": (5, 6)}[code.kind]
    if (t, k) != expected:
        raise ValueError(f"the {code.kind} code carries S{expected}, not S({t},{k})")
    return is_steiner_system(code.supports_of_weight(k), code.length, t)


def octads_through(code: GolayCode, s: Iterable[int]) -> list[Support]:
    s = set(s)
    return [o for o in code.octads() if s.issubset(o)]


def find_octad_pair(code: GolayCode, meet: int) -> tuple[Support, Support]:
    """Lexicographically least pair of distinct octads meeting in ``meet`` points."""
    if meet not in (0, 2, 4):
        raise ValueError(f"distinct octads meet in 0, 2 or 4 points, not {meet}")
    octads = code.octads()
    for i, a in enumerate(octads):
        sa = set(a)
        for b in octads[i + 1:]:
            if len(sa.intersection(b)) == meet:
                return a, b
    raise ConstructionError(f"no octad pair with intersection {meet}")


def normalize_sign(word: Codeword) -> Codeword:
    """The scalar multiple of ``word`` whose first nonzero digit is 1."""
    lead = next((d for d in word.digits if d), 1)
    inv = pow(lead, -1, word.q)
    return Codeword(tuple(d * inv % word.q for d in word.digits), word.q)


def hexad_pair_partition(code: GolayCode) -> tuple[Codeword, Codeword]:
    """Two weight-6 ternary words with complementary supports.

    The first support is the lexicographically least hexad; each word is
    sign-normalized to have leading digit 1.
    """
    code._require("ternary")
    hexads = code.hexads()
    first = hexads[0]
    second = tuple(i for i in range(code.length) if i not in first)
    if second not in hexads:
        raise ConstructionError("complement of a hexad is not a hexad")
    w1 = normalize_sign(code.words_with_support(first)[0])
    w2 = normalize_sign(code.words_with_support(second)[0])
    return w1, w2
