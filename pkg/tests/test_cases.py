from __future__ import annotations

import random
from fractions import Fraction

import pytest

from a5lattice.cases import (
    CaseId,
    align_basis,
    build_basis,
    build_case,
    build_labeling,
    enumerate_cases,
    find_alignment,
    gram,
    gram_matrix,
    orbit_partitions,
    orbit_union_codewords,
)
from a5lattice.codes import build_binary_golay
from a5lattice.exactmath import ExactMatrix, determinant, inverse, solve
from a5lattice.niemeier import build_niemeier, contains, root, saturation_index
from a5lattice.reference import DISCRIMINANT_ORDERS, reference_gram, reference_inverse

from conftest import CASES, golden_matrix


def test_enumeration_24A1():
    assert enumerate_cases("24A1") == [CaseId.I, CaseId.II, CaseId.III, CaseId.IV]


def test_enumeration_12A2():
    assert enumerate_cases("12A2") == [CaseId.V, CaseId.VI]


def test_partitions_with_restricted_parts():
    assert orbit_partitions("24A1", allowed={1, 5, 6}) == [(1, 1, 5, 5, 6, 6)]


def test_orbit_sizes_of_cases():
    assert CaseId.I.orbit_sizes == (1, 1, 5, 5, 6, 6)
    assert CaseId.V.orbit_sizes == (1, 1, 1, 1, 10, 10)
    assert CaseId.VI.orbit_sizes == (1, 1, 5, 5, 6, 6)


def _binary_word(support):
    return tuple(int(i in set(support)) for i in range(24))


def test_labeling_2i_octads():
    lab = build_labeling("2i")
    orbits = lab.lattice_orbits()
    code = build_binary_golay()
    for big in ("O6", "O6'"):
        support = orbits["O1"] + orbits["O1'"] + orbits[big]
        assert len(support) == 8 and _binary_word(support) in code


def test_labeling_2i_uses_lexicographic_split():
    lab = build_labeling("2i")
    assert lab.lattice_orbit("O5") < lab.lattice_orbit("O5'")


def test_labeling_2iii_complement_half_sum():
    lab = build_labeling("2iii")
    orbits = lab.lattice_orbits()
    support = orbits["O1'''"] + orbits["O15"]
    assert len(support) == 16
    n = build_niemeier("24A1")
    v = tuple(Fraction(1, 2) if i in support else Fraction(0) for i in range(24))
    assert contains(n, v)
    complement = [i for i in range(24) if i not in support]
    assert _binary_word(complement) in build_binary_golay()


def test_labeling_2iv_dodecad():
    orbits = build_labeling("2iv").lattice_orbits()
    support = orbits["O1"] + orbits["O1'"] + orbits["O10"]
    assert len(support) == 12 and _binary_word(support) in build_binary_golay()


@pytest.mark.parametrize("case", ["2i", "2ii", "2iii", "2iv"])
def test_orbit_union_codewords_count(case):
    lab = build_labeling(case)
    found = orbit_union_codewords(lab, build_binary_golay())
    glue = sum(1 for f in build_basis(lab).vectors if any(x.denominator == 2 for x in f))
    assert len(found) == 2 ** glue


def test_basis_examples():
    b2 = build_case("2ii")
    assert gram(b2)[3, 3] == -4
    b6 = build_case("2vi")
    lab = b6.labeling
    named = [Fraction(0)] * 24
    for k in range(2, 7):
        named[2 * k - 2] = Fraction(1)
    assert lab.to_lattice(named) == b6.vectors[2]
    assert gram(b6)[2, 2] == -10
    assert gram(build_case("2v"))[4, 5] == 0


def test_gram_of_single_root():
    assert gram_matrix(build_niemeier("24A1"), [root(0)]) == ExactMatrix([[-2]])


@pytest.mark.parametrize("case", CASES)
def test_gram_matches_published_matrix(case):
    g = gram(build_case(case))
    assert g == golden_matrix(f"gram_{case}")
    assert g == reference_gram(case)


@pytest.mark.parametrize("case", CASES)
def test_inverse_matches_published_matrix(case):
    g = gram(build_case(case))
    assert inverse(g) == golden_matrix(f"inverse_{case}")
    assert inverse(g) == reference_inverse(case)


@pytest.mark.parametrize("case", CASES)
def test_unaligned_basis_already_matches(case):
    basis = build_basis(build_labeling(case))
    assert find_alignment(gram(basis), reference_gram(case)) == (tuple(range(6)), (1,) * 6)


@pytest.mark.parametrize("case", CASES)
def test_determinant_is_discriminant_order(case):
    assert determinant(gram(build_case(case))) == DISCRIMINANT_ORDERS[case]


def test_alignment_recovers_random_signed_permutations():
    rng = random.Random(4)
    for case in CASES:
        target = reference_gram(case)
        basis = build_case(case)
        for _ in range(5):
            perm = list(range(6))
            rng.shuffle(perm)
            signs = [rng.choice((1, -1)) for _ in range(6)]
            scrambled = type(basis)(basis.case, basis.labeling, tuple(
                tuple(s * x for x in basis.vectors[p]) for p, s in zip(perm, signs)
            ))
            assert gram(align_basis(scrambled, target)) == target


def test_alignment_reports_mismatch():
    assert find_alignment(reference_gram("2i"), reference_gram("2ii")) is None


@pytest.mark.parametrize("case", ["2i", "2ii", "2iii", "2iv"])
def test_24A1_bases_are_primitive(case):
    b = build_case(case)
    assert saturation_index(b.lattice, b.vectors) == 1


def test_doubling_a_generator_gives_index_two():
    b = build_case("2i")
    vs = [tuple(2 * x for x in b.vectors[0])] + list(b.vectors[1:])
    assert saturation_index(b.lattice, vs) == 2


# The published 12A2 bases span a sublattice of index 2 (case 2v) and 4 (case
# 2vi) in their saturation. The witnesses are sums over the primed orbits,
# which lie in the root lattice and in the rational span but not in the span.

def _orbit_sum(case: str, name: str):
    lab = build_labeling(case)
    named = [Fraction(int(j in lab.orbits[name])) for j in range(24)]
    return lab.to_lattice(named)


def _coefficients(vectors, v):
    m = ExactMatrix.from_columns(vectors)
    x = solve(m.T @ m, m.T.apply(v))
    assert x is not None and m.apply(x) == tuple(v)
    return x


@pytest.mark.parametrize("case,missing,index", [("2v", ["O10'"], 2), ("2vi", ["O5'", "O6'"], 4)])
def test_12A2_published_bases_are_not_primitive(case, missing, index):
    b = build_case(case)
    assert saturation_index(b.lattice, b.vectors) == index
    for name in missing:
        w = _orbit_sum(case, name)
        assert contains(b.lattice, w)
        coeffs = _coefficients(b.vectors, w)
        assert any(c.denominator == 2 for c in coeffs)


def test_2v_orbit_sum_relation():
    b = build_case("2v")
    e = b.vectors
    w = _orbit_sum("2v", "O10'")
    assert _coefficients(e, w) == tuple(Fraction(c, 2) for c in (-1, -2, -1, -2, -1, 3))


@pytest.mark.parametrize("case,replace", [("2v", {4: "O10'"}), ("2vi", {2: "O5'", 3: "O6'"})])
def test_12A2_saturated_bases_have_determinant_300(case, replace):
    b = build_case(case)
    vs = list(b.vectors)
    for slot, name in replace.items():
        vs[slot] = _orbit_sum(case, name)
    assert saturation_index(b.lattice, vs) == 1
    assert determinant(gram_matrix(b.lattice, vs)) == 300
