"""Acceptance criteria, each checked at zero tolerance.

Every test prints a single ``CRITERION n PASS|FAIL`` line (also under
``pytest -q``) and then asserts the same condition.
"""

from __future__ import annotations

import math
import random

import pytest

from a5lattice.cases import build_case, enumerate_cases, gram, orbit_partitions
from a5lattice.codes import build_binary_golay, build_ternary_golay, verify_steiner
from a5lattice.discform import check_case_claims, disc_group, pairing, quadratic, verify_common_form
from a5lattice.exactmath import ExactMatrix, determinant, hermite_normal_form, inverse, reduce_mod_2z, smith_normal_form
from a5lattice.k3reps import (
    a5_character_table,
    exclude_root_system,
    fixed_locus_profile,
    lefschetz_sum_check,
    solve_picard_decomposition,
    solve_zeta3_twist,
)
from a5lattice.niemeier import build_niemeier, contains, inner_product, saturation_index
from a5lattice.reference import COMMON_FORM_TABLE, DISCRIMINANT_CLAIMS, reference_gram

from conftest import CASES, golden_matrix, random_int_matrix

SAMPLES = 1000


@pytest.fixture
def verdict(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nCRITERION {number:>2} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def test_criterion_01_binary_golay(verdict):
    code = build_binary_golay()
    spectrum = code.weight_distribution()
    five_sets = math.comb(24, 5)
    ok = (
        code.dimension == 12
        and code.minimum_weight() == 8
        and spectrum == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
        and five_sets == 42504
        and verify_steiner(code, 5, 8)
    )
    verdict(1, ok, f"dim {code.dimension}, d {code.minimum_weight()}, weights {spectrum}, S(5,8,24) over {five_sets} 5-sets")


def test_criterion_02_ternary_golay(verdict):
    code = build_ternary_golay()
    spectrum = code.weight_distribution()
    ok = len(code.words) == 729 and spectrum == {0: 1, 6: 264, 9: 440, 12: 24} and verify_steiner(code, 5, 6)
    verdict(2, ok, f"{len(code.words)} words, weights {spectrum}, S(5,6,12)")


def test_criterion_03_niemeier_lattices(verdict):
    details, ok = [], True
    for label in ("24A1", "12A2"):
        n = build_niemeier(label)
        det = abs(determinant(n.basis_gram))
        glue = [n.glue_vector(w) for w in n.glue.words]
        members = all(contains(n, v) for v in glue)
        rng = random.Random(label)
        pairs = [(rng.choice(glue), rng.choice(glue)) for _ in range(500)]
        even = all(inner_product(n, v, v).denominator == 1 and inner_product(n, v, v).numerator % 2 == 0 for v in glue)
        integral = all(inner_product(n, v, w).denominator == 1 for v, w in pairs)
        ok &= det == 1 and members and even and integral
        details.append(f"{label}: |det| {det}, glue members {members}, even {even}, integral {integral}")
    verdict(3, ok, "; ".join(details))


def test_criterion_04_case_enumeration(verdict):
    a1 = [c.value for c in enumerate_cases("24A1")]
    a2 = [c.value for c in enumerate_cases("12A2")]
    sizes = {1, 5, 6, 10, 12, 15, 20}
    parts_a1 = orbit_partitions("24A1", allowed=sizes)
    parts_a2 = orbit_partitions("12A2", allowed=sizes)
    ok = (
        a1 == ["2i", "2ii", "2iii", "2iv"]
        and a2 == ["2v", "2vi"]
        and sorted(parts_a1) == [(1, 1, 1, 1, 5, 15), (1, 1, 1, 1, 10, 10), (1, 1, 1, 5, 6, 10), (1, 1, 5, 5, 6, 6)]
        and sorted(parts_a2) == [(1, 1, 1, 1, 10, 10), (1, 1, 5, 5, 6, 6)]
    )
    verdict(4, ok, f"24A1 -> {a1} {parts_a1}; 12A2 -> {a2} {parts_a2}")


def test_criterion_05_grams_and_inverses(verdict):
    bad = []
    for case in CASES:
        g = gram(build_case(case))
        if g != golden_matrix(f"gram_{case}"):
            bad.append(f"gram {case}")
        inv = inverse(g)
        entries = sum(1 for row in inv.rows() for _ in row)
        if entries != 36 or inv != golden_matrix(f"inverse_{case}"):
            bad.append(f"inverse {case}")
    verdict(5, not bad, "all 6 Gram matrices and 216 inverse entries match" if not bad else f"mismatch: {bad}")


def test_criterion_06_saturation(verdict):
    indices = {}
    for case in CASES:
        b = build_case(case)
        indices[case] = saturation_index(b.lattice, b.vectors)
    ok = all(v == 1 for v in indices.values())
    verdict(6, ok, "saturation indices " + ", ".join(f"{c}: {v}" for c, v in indices.items()))


def test_criterion_07_discriminant_groups(verdict):
    expected = {
        "2i": (30, 30), "2ii": (10, 30), "2iii": (10, 30),
        "2iv": (20, 20), "2v": (20, 60), "2vi": (2, 2, 20, 60),
    }
    listed = {"2i": 30**2, "2ii": 3 * 10**2, "2iii": 3 * 10**2, "2iv": 20**2, "2v": 3 * 20**2, "2vi": 3 * 40**2}
    factors = {c: disc_group(gram(build_case(c))).invariant_factors for c in CASES}
    orders = {c: math.prod(f) for c, f in factors.items()}
    ok = factors == expected and orders == listed
    verdict(7, ok, f"factors {factors}; orders {orders}")


def test_criterion_08_generators_and_tables(verdict):
    failed = []
    for case in CASES:
        for chk in check_case_claims(case, gram(build_case(case))):
            if not chk.passed:
                failed.append(f"{case} {chk.name}")
    tables = {c: DISCRIMINANT_CLAIMS[c].table is not None for c in CASES}
    ok = not failed and all(tables[c] for c in CASES if c != "2vi")
    verdict(8, ok, "generation and printed tables hold for all cases" if ok else f"failed: {failed}")


def test_criterion_09_common_form(verdict):
    results = {c: verify_common_form(c) for c in ("2ii", "2iii")}
    target = [[str(x) for x in row] for row in COMMON_FORM_TABLE]
    verdict(9, all(results.values()), f"{results} against {target}")


def test_criterion_10_characters(verdict):
    table = a5_character_table()
    orth = all(
        table.inner(table.values[i], table.values[j]) == int(i == j) for i in range(5) for j in range(5)
    )
    sols = [s.as_tuple() for s in solve_picard_decomposition()]
    lsum = lefschetz_sum_check()
    ranks = (lsum.lattice_invariant_rank, lsum.picard_invariant_rank)
    ok = orth and sols == [(0, 0, 2, 2)] and lsum.total == 360 and ranks == (4, 2)
    verdict(10, ok, f"orthogonal {orth}, solutions {sols}, sum {lsum.total}, ranks {ranks}")


def test_criterion_11_twist(verdict):
    branches = {b.exponents: b.chi_top for b in solve_zeta3_twist()}
    profiles = {chi: fixed_locus_profile(chi) for chi in (-6, 9)}
    ok = branches == {(1, 2, 1, 2): -6, (1, 2, 0, 0): 9} and profiles == {-6: (-3, 0), 9: (2, 5)}
    verdict(11, ok, f"branches {branches}, profiles {profiles}")


def test_criterion_12_exclusions(verdict):
    a4 = exclude_root_system("6A4")
    d4 = exclude_root_system("6D4")
    ok = a4.excluded and a4.reason == "stabilizer order 20 < 60" and d4.excluded and d4.reason == "8 orbits ≠ 6"
    verdict(12, ok, f"6A4: {a4.reason}; 6D4: {d4.reason}")


def _snf_ok(a: ExactMatrix) -> bool:
    dec = smith_normal_form(a)
    if dec.U @ a @ dec.V != dec.D or abs(determinant(dec.U)) != 1 or abs(determinant(dec.V)) != 1:
        return False
    f = dec.invariant_factors
    chain = all(hi == 0 or (lo != 0 and hi % lo == 0) for lo, hi in zip(f, f[1:]))
    if a.nrows == a.ncols and determinant(a) != 0:
        chain &= math.prod(f) == abs(determinant(a))
    return chain


def _hnf_ok(a: ExactMatrix) -> bool:
    h, w = hermite_normal_form(a, return_transform=True)
    r = h.ncols
    padded = h.hstack(ExactMatrix.zeros(a.nrows, a.ncols - r)) if a.ncols > r else h
    if abs(determinant(w)) != 1 or a @ w != padded:
        return False
    # same column span: a = padded @ w^{-1} with w^{-1} integral
    w_inv = inverse(w)
    if not w_inv.is_integer() or padded @ w_inv != a:
        return False
    last = -1
    for j in range(r):
        piv = next(i for i in range(h.nrows) if h[i, j] != 0)
        if piv <= last or h[piv, j] <= 0 or not all(0 <= h[piv, k] < h[piv, j] for k in range(j)):
            return False
        last = piv
    return True


def test_criterion_13_property_suites(verdict):
    rng = random.Random(13)
    snf = hnf = 0
    for _ in range(SAMPLES):
        a = random_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        snf += _snf_ok(a)
        hnf += _hnf_ok(a)
    shifts = {}
    polar = {}
    for case in CASES:
        g = disc_group(reference_gram(case))
        cols = g.gram.columns()
        good_shift = good_polar = 0
        for _ in range(SAMPLES):
            x = tuple(rng.randint(-20, 20) for _ in range(6))
            y = tuple(rng.randint(-20, 20) for _ in range(6))
            col, k = rng.choice(cols), rng.randint(-4, 4)
            xs = tuple(a + k * int(c) for a, c in zip(x, col))
            good_shift += quadratic(g, xs) == quadratic(g, x) and pairing(g, xs, y) == pairing(g, x, y)
            s = tuple(a + b for a, b in zip(x, y))
            lhs = quadratic(g, s) - quadratic(g, x) - quadratic(g, y)
            good_polar += lhs == reduce_mod_2z(2 * pairing(g, x, y).representative)
        shifts[case], polar[case] = good_shift, good_polar
    ok = snf == hnf == SAMPLES and all(v == SAMPLES for v in shifts.values()) and all(
        v == SAMPLES for v in polar.values()
    )
    verdict(
        13,
        ok,
        f"SNF {snf}/{SAMPLES}, HNF {hnf}/{SAMPLES}, shifts {shifts}, polarization {polar}",
    )
