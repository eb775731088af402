"""The six orbit cases for A5 on N(24A1) and N(12A2), and their invariant bases.

Each case fixes a naming of the orbits on "named roots" r_1..r_24 together
with the formulas for the six basis vectors e_1..e_6. A labeling realizes
the naming inside the concrete lattice: ``root_map[j]`` is the lattice root
carrying the name r_{j+1}. Labelings are found by deterministic searches
in the Golay codes.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .codes import (
    ConstructionError,
    GolayCode,
    find_octad_pair,
    hexad_pair_partition,
    normalize_sign,
)
from .exactmath import ExactMatrix
from .niemeier import (
    RANK,
    LatticeVector,
    NiemeierLattice,
    RootSystemLabel,
    build_niemeier,
    contains,
    inner_product,
)
from .reference import reference_gram


class CaseId(str, enum.Enum):
    I = "2i"
    II = "2ii"
    III = "2iii"
    IV = "2iv"
    V = "2v"
    VI = "2vi"

    @property
    def root_system(self) -> RootSystemLabel:
        return RootSystemLabel.A2_12 if self in (CaseId.V, CaseId.VI) else RootSystemLabel.A1_24

    @property
    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(v) for v in ORBITS[self].values()))

    @classmethod
    def parse(cls, text: str) -> CaseId:
        return cls(text.strip().lower())

    def __str__(self) -> str:
        return self.value


def _r(a: int, b: int, step: int = 1) -> tuple[int, ...]:
    """Named roots r_a..r_b (inclusive) as zero-based indices."""
    return tuple(range(a - 1, b, step))


# Orbits on named roots; names follow O_1, O'_1, O''_1, O'''_1, O_5, ...
ORBITS: dict[CaseId, dict[str, tuple[int, ...]]] = {
    CaseId.I: {"O1": _r(1, 1), "O1'": _r(2, 2), "O5": _r(3, 7), "O5'": _r(8, 12),
               "O6": _r(13, 18), "O6'": _r(19, 24)},
    CaseId.II: {"O1": _r(1, 1), "O1'": _r(2, 2), "O1''": _r(3, 3), "O5": _r(4, 8),
                "O6": _r(9, 14), "O10": _r(15, 24)},
    CaseId.III: {"O1": _r(1, 1), "O1'": _r(2, 2), "O1''": _r(3, 3), "O1'''": _r(4, 4),
                 "O5": _r(5, 9), "O15": _r(10, 24)},
    CaseId.IV: {"O1": _r(1, 1), "O1'": _r(2, 2), "O1''": _r(3, 3), "O1'''": _r(4, 4),
                "O10": _r(5, 14), "O10'": _r(15, 24)},
    CaseId.V: {"O1": _r(1, 1), "O1'": _r(2, 2), "O1''": _r(3, 3), "O1'''": _r(4, 4),
               "O10": _r(5, 23, 2), "O10'": _r(6, 24, 2)},
    CaseId.VI: {"O1": _r(1, 1), "O1'": _r(2, 2), "O5": _r(3, 11, 2), "O5'": _r(4, 12, 2),
                "O6": _r(13, 23, 2), "O6'": _r(14, 24, 2)},
}

# Basis formulas: e_i = sum of (coefficient, orbit names) terms, where an
# orbit name stands for the sum of its named roots. For 12A2 the entry
# ("third", first, last) stands for (1/3) sum_{k=first..last} (r_{2k-1} + 2 r_{2k}),
# and ("odd", first, last) for sum_{k=first..last} r_{2k-1}.
_HALF = Fraction(1, 2)
BASIS_FORMULAS: dict[CaseId, tuple[tuple, ...]] = {
    CaseId.I: (
        ((1, "O1"),),
        ((1, "O1'"),),
        ((1, "O5"),),
        ((_HALF, "O1", "O1'", "O6"),),
        ((_HALF, "O1", "O1'", "O6'"),),
        ((_HALF, "O1", "O1'", "O5", "O5'"),),
    ),
    CaseId.II: (
        ((1, "O1"),),
        ((1, "O1'"),),
        ((1, "O1''"),),
        ((_HALF, "O1", "O1'", "O1''", "O5"),),
        ((_HALF, "O1", "O1'", "O6"),),
        ((_HALF, "O1", "O1'", "O10"),),
    ),
    CaseId.III: (
        ((1, "O1"),),
        ((1, "O1'"),),
        ((1, "O1''"),),
        ((1, "O1'''"),),
        ((_HALF, "O1", "O1'", "O1''", "O5"),),
        ((_HALF, "O1'''", "O15"),),
    ),
    CaseId.IV: (
        ((1, "O1"),),
        ((1, "O1'"),),
        ((1, "O1''"),),
        ((1, "O1'''"),),
        ((_HALF, "O1", "O1'", "O10"),),
        ((_HALF, "O1''", "O1'''", "O10'"),),
    ),
    CaseId.V: (
        ((1, "O1"),),
        ((1, "O1'"),),
        ((1, "O1''"),),
        ((1, "O1'''"),),
        (("odd", 3, 12),),
        (("third", 1, 12),),
    ),
    CaseId.VI: (
        ((1, "O1"),),
        ((1, "O1'"),),
        (("odd", 2, 6),),
        (("odd", 7, 12),),
        (("third", 1, 6),),
        (("third", 7, 12),),
    ),
}


# --- orbit-size enumeration --------------------------------------------------

def orbit_partitions(root_system: RootSystemLabel | str, allowed: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Sorted 6-orbit decompositions of the 24 simple roots with a fixed root.

    ``allowed`` are the permitted orbit sizes; by default 1 plus the sizes
    of transitive A5-sets.
    """
    from .k3reps import allowed_orbit_sizes

    label = root_system if isinstance(root_system, RootSystemLabel) else RootSystemLabel.parse(root_system)
    sizes = set(allowed) if allowed is not None else {1} | set(allowed_orbit_sizes())
    sizes = sorted(s for s in sizes if 1 <= s <= RANK)
    found = set()
    if label is RootSystemLabel.A1_24:
        for parts in itertools.combinations_with_replacement(sizes, 5):
            if sum(parts) == RANK - 1:
                found.add(tuple(sorted((1,) + parts)))
    elif label is RootSystemLabel.A2_12:
        # one fixed component plus orbits a, b on the other 11; each splits into two root orbits
        for a, b in itertools.combinations_with_replacement(sizes, 2):
            if 1 + a + b == 12:
                found.add(tuple(sorted((1, 1, a, a, b, b))))
    else:
        raise ValueError(f"no orbit enumeration for {label}")
    return sorted(found)


def enumerate_cases(root_system: RootSystemLabel | str, allowed: Iterable[int] | None = None) -> list[CaseId]:
    label = root_system if isinstance(root_system, RootSystemLabel) else RootSystemLabel.parse(root_system)
    by_sizes = {c.orbit_sizes: c for c in CaseId if c.root_system is label}
    out = []
    for parts in orbit_partitions(label, allowed):
        if parts not in by_sizes:
            raise ConstructionError(f"unexpected orbit decomposition {parts} for {label}")
        out.append(by_sizes[parts])
    return sorted(out, key=lambda c: list(CaseId).index(c))


# --- labelings ---------------------------------------------------------------

@dataclass(frozen=True)
class OrbitLabeling:
    case: CaseId
    root_map: tuple[int, ...]  # named root index -> lattice root index

    @property
    def orbits(self) -> dict[str, tuple[int, ...]]:
        return ORBITS[self.case]

    def lattice_orbit(self, name: str) -> tuple[int, ...]:
        return tuple(sorted(self.root_map[j] for j in ORBITS[self.case][name]))

    def lattice_orbits(self) -> dict[str, tuple[int, ...]]:
        return {name: self.lattice_orbit(name) for name in ORBITS[self.case]}

    def to_lattice(self, named: Sequence[Fraction]) -> LatticeVector:
        v = [Fraction(0)] * RANK
        for j, c in enumerate(named):
            v[self.root_map[j]] = c
        return tuple(v)


def _mask(points: Iterable[int]) -> int:
    return sum(1 << p for p in points)


def orbit_union_codewords(labeling: OrbitLabeling, code: GolayCode) -> list[tuple[str, ...]]:
    """Binary codewords whose support is a union of orbits, by orbit names."""
    orbits = labeling.lattice_orbits()
    names = list(orbits)
    found = []
    for k in range(len(names) + 1):
        for combo in itertools.combinations(names, k):
            if _mask(p for n in combo for p in orbits[n]) in code.support_masks:
                found.append(combo)
    return found


def _glue_count(case: CaseId) -> int:
    return sum(1 for f in BASIS_FORMULAS[case] if f[0][0] == _HALF)


def _binary_labeling(case: CaseId, code: GolayCode) -> OrbitLabeling:
    def accept(root_map: Sequence[int]) -> OrbitLabeling | None:
        lab = OrbitLabeling(case, tuple(root_map))
        if len(orbit_union_codewords(lab, code)) == 2 ** _glue_count(case):
            return lab
        return None

    everything = set(range(RANK))
    if case is CaseId.III:
        octad = code.octads()[0]
        outside = sorted(everything - set(octad))
        lab = accept(list(octad[:3]) + [outside[0]] + list(octad[3:]) + outside[1:])
        if lab:
            return lab
        raise ConstructionError(f"no labeling for case {case}")

    a, b = find_octad_pair(code, 2)
    common = sorted(set(a) & set(b))
    only_a = sorted(set(a) - set(b))
    only_b = sorted(set(b) - set(a))
    rest = sorted(everything - set(a) - set(b))
    if case is CaseId.I:
        for five in itertools.combinations(rest, 5):
            other = [p for p in rest if p not in five]
            lab = accept(common + list(five) + other + only_a + only_b)
            if lab:
                return lab
    elif case is CaseId.II:
        for c in only_a:
            lab = accept(common + [c] + [p for p in only_a if p != c] + only_b + rest)
            if lab:
                return lab
    elif case is CaseId.IV:
        lab = accept([only_a[0], only_b[0]] + common + only_a[1:] + only_b[1:] + rest)
        if lab:
            return lab
    raise ConstructionError(f"no labeling for case {case}")


def _ternary_labeling(case: CaseId, code: GolayCode) -> OrbitLabeling:
    """Components in naming order, with the two roots swapped where the glue digit is 2."""
    if case is CaseId.V:
        dodecads = [w for w in code.words if all(w)]
        word = normalize_sign(_as_word(min(dodecads), code)).digits
        order = list(range(12))
    else:
        w1, w2 = hexad_pair_partition(code)
        order = list(w1.support) + list(w2.support)
        word = tuple((w1 + w2).digits)
    root_map = []
    for comp in order:
        first, second = 2 * comp, 2 * comp + 1
        root_map += [first, second] if word[comp] == 1 else [second, first]
    return OrbitLabeling(case, tuple(root_map))


def _as_word(digits, code):
    from .codes import Codeword

    return Codeword(tuple(digits), code.q)


def build_labeling(case: CaseId | str, code: GolayCode | None = None) -> OrbitLabeling:
    case = case if isinstance(case, CaseId) else CaseId.parse(case)
    lattice = build_niemeier(case.root_system)
    code = code or lattice.glue
    if code.kind != ("ternary" if case.root_system is RootSystemLabel.A2_12 else "binary"):
        raise ValueError(f"case {case} needs the glue code of {case.root_system}")
    if case.root_system is RootSystemLabel.A1_24:
        return _binary_labeling(case, code)
    return _ternary_labeling(case, code)


# --- bases -------------------------------------------------------------------

@dataclass(frozen=True)
class CaseBasis:
    case: CaseId
    labeling: OrbitLabeling
    vectors: tuple[LatticeVector, ...]

    @property
    def lattice(self) -> NiemeierLattice:
        return build_niemeier(self.case.root_system)


def _named_vector(case: CaseId, formula: tuple) -> list[Fraction]:
    v = [Fraction(0)] * RANK
    for term in formula:
        if term[0] == "odd":
            _, lo, hi = term
            for k in range(lo, hi + 1):
                v[2 * k - 2] += 1
        elif term[0] == "third":
            _, lo, hi = term
            for k in range(lo, hi + 1):
                v[2 * k - 2] += Fraction(1, 3)
                v[2 * k - 1] += Fraction(2, 3)
        else:
            coeff, *names = term
            for name in names:
                for j in ORBITS[case][name]:
                    v[j] += Fraction(coeff)
    return v


def build_basis(labeling: OrbitLabeling) -> CaseBasis:
    case = labeling.case
    lattice = build_niemeier(case.root_system)
    vectors = tuple(labeling.to_lattice(_named_vector(case, f)) for f in BASIS_FORMULAS[case])
    for i, v in enumerate(vectors, 1):
        if not contains(lattice, v):
            raise ConstructionError(f"e_{i} of case {case} is not a lattice vector")
    return CaseBasis(case, labeling, vectors)


def gram_matrix(lattice: NiemeierLattice, vectors: Sequence[Sequence[Fraction]]) -> ExactMatrix:
    return ExactMatrix([[inner_product(lattice, v, w) for w in vectors] for v in vectors])


def gram(basis: CaseBasis) -> ExactMatrix:
    return gram_matrix(basis.lattice, basis.vectors)


def find_alignment(g: ExactMatrix, target: ExactMatrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A signed permutation (perm, signs) with s_i s_j g[p_i, p_j] == target[i, j].

    Depth-first search in the order of target rows; returns the first hit
    (the identity when ``g == target``), or None.
    """
    n = g.nrows
    if g.shape != target.shape or not g.is_square():
        return None
    perm: list[int] = []
    signs: list[int] = []

    def extend(i: int) -> bool:
        if i == n:
            return True
        for p in range(n):
            if p in perm or g[p, p] != target[i, i]:
                continue
            for s in (1, -1):
                if all(s * signs[k] * g[p, perm[k]] == target[i, k] for k in range(i)):
                    perm.append(p)
                    signs.append(s)
                    if extend(i + 1):
                        return True
                    perm.pop()
                    signs.pop()
        return False

    if extend(0):
        return tuple(perm), tuple(signs)
    return None


def align_basis(basis: CaseBasis, target: ExactMatrix) -> CaseBasis:
    found = find_alignment(gram(basis), target)
    if found is None:
        raise ConstructionError(f"case {basis.case}: no signed reordering matches the target Gram matrix")
    perm, signs = found
    vectors = tuple(tuple(s * x for x in basis.vectors[p]) for p, s in zip(perm, signs))
    return CaseBasis(basis.case, basis.labeling, vectors)


@lru_cache(maxsize=None)
def build_case(case: CaseId | str) -> CaseBasis:
    """Labeling, basis and alignment to the reference Gram matrix."""
    case = case if isinstance(case, CaseId) else CaseId.parse(case)
    basis = build_basis(build_labeling(case))
    return align_basis(basis, reference_gram(case))
