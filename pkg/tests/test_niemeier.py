from __future__ import annotations

import random
from fractions import Fraction

import pytest

from a5lattice.codes import build_binary_golay
from a5lattice.niemeier import (
    RootSystemLabel,
    add,
    build_niemeier,
    contains,
    coordinates,
    half_sum,
    inner_product,
    root,
    saturation_index,
    scale,
    ternary_glue_vector,
)

from conftest import to_sympy

LABELS = ["24A1", "12A2"]


@pytest.mark.parametrize("label", LABELS)
def test_unimodular_basis(label):
    n = build_niemeier(label)
    assert n.basis.shape == (24, 24)
    assert abs(to_sympy(n.basis_gram).det()) == 1


@pytest.mark.parametrize("label", LABELS)
def test_basis_vectors_are_members_and_gram_is_even(label):
    n = build_niemeier(label)
    for v in n.basis.columns():
        assert contains(n, v)
    g = n.basis_gram
    assert g.is_integer() and g.is_symmetric()
    assert all(g[i, i].numerator % 2 == 0 for i in range(24))


def test_label_parsing():
    assert RootSystemLabel.parse("24A₁") is RootSystemLabel.A1_24
    assert RootSystemLabel.parse("12A2") is RootSystemLabel.A2_12
    with pytest.raises(ValueError):
        RootSystemLabel.parse("8E8")


@pytest.mark.parametrize("label", ["6A4", "6D4"])
def test_no_lattice_for_excluded_labels(label):
    with pytest.raises(ValueError):
        build_niemeier(label)


def test_root_inner_products():
    a1 = build_niemeier("24A1")
    a2 = build_niemeier("12A2")
    assert inner_product(a1, root(0), root(0)) == -2
    assert inner_product(a1, root(0), root(2)) == 0
    assert inner_product(a2, root(0), root(1)) == 1
    assert inner_product(a2, root(1), root(2)) == 0


def test_membership_examples():
    n = build_niemeier("24A1")
    code = build_binary_golay()
    assert contains(n, root(0))
    assert contains(n, half_sum(code.octads()[0]))
    octads = set(code.octads())
    rng = random.Random(3)
    while True:
        s = tuple(sorted(rng.sample(range(24), 8)))
        if s not in octads:
            break
    assert not contains(n, half_sum(s))
    assert not contains(n, half_sum([0]))


def test_all_ones_ternary_glue_vector_has_norm_minus_8():
    n = build_niemeier("12A2")
    e6 = ternary_glue_vector([1] * 12)
    assert contains(n, e6)
    assert inner_product(n, e6, e6) == -8


@pytest.mark.parametrize("label", LABELS)
def test_every_glue_word_gives_a_member(label):
    n = build_niemeier(label)
    for w in n.glue.words:
        v = n.glue_vector(w)
        assert contains(n, v)
        assert n.glue_digits(v) == w


@pytest.mark.parametrize("label", LABELS)
def test_random_members_closed_and_even(label):
    n = build_niemeier(label)
    rng = random.Random(11)
    words = n.glue.words

    def sample():
        v = n.glue_vector(rng.choice(words))
        for _ in range(3):
            v = add(v, scale(rng.randint(-2, 2), root(rng.randrange(24))))
        return v

    for _ in range(300):
        v, w = sample(), sample()
        assert contains(n, add(v, w)) and contains(n, scale(-1, v))
        ip = inner_product(n, v, w)
        assert ip.denominator == 1
        norm = inner_product(n, v, v)
        assert norm.denominator == 1 and norm.numerator % 2 == 0
        assert all(c.denominator == 1 for c in coordinates(n, v))


def test_saturation_examples():
    n = build_niemeier("24A1")
    assert saturation_index(n, [root(0)]) == 1
    octad = build_binary_golay().octads()[0]
    h = half_sum(octad)
    assert saturation_index(n, [h, root(octad[0])]) == 1
    assert saturation_index(n, [scale(2, h), root(octad[0])]) == 2
    with pytest.raises(ValueError):
        saturation_index(n, [half_sum([0, 1])])
    with pytest.raises(ValueError):
        saturation_index(n, [root(0), scale(3, root(0))])


def test_membership_rejects_wrong_length():
    with pytest.raises(ValueError):
        contains(build_niemeier("24A1"), (Fraction(0),) * 23)
