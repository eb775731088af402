"""A5 characters and Lefschetz fixed-point bookkeeping for K3 surfaces.

Everything here is finite: the A5 character table over Q(sqrt 5), the
fixed-point counts of symplectic automorphisms, the Diophantine system for
the Neron-Severi decomposition, the cube-root-of-unity twist system, and
the counting arguments that rule out the root systems 6A4 and 6D4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .codes import ConstructionError
from .exactmath import ExactMatrix, Sqrt5Number, Zeta3Number, determinant
from .niemeier import RootSystemLabel

A5_ORDER = 60
K3_EULER_NUMBER = 24  # 2 + b_2, b_2 = 22
TRANSCENDENTAL_RANK = 2
PICARD_RANK = 20

# |X^delta| for a symplectic automorphism delta of the given order.
FIXED_POINTS = {2: 8, 3: 6, 4: 4, 5: 4, 6: 2, 7: 3, 8: 2}

Perm = tuple[int, ...]


# --- the group A5 as permutations of {0..4} ---------------------------------

def _compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``."""
    return tuple(p[i] for i in q)


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _is_even(p: Perm) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2 == 0


def _order(p: Perm) -> int:
    ident = tuple(range(len(p)))
    k, q = 1, p
    while q != ident:
        q = _compose(p, q)
        k += 1
    return k


@lru_cache(maxsize=None)
def a5_elements() -> tuple[Perm, ...]:
    return tuple(p for p in itertools.permutations(range(5)) if _is_even(p))


def _closure(gens: tuple[Perm, ...]) -> frozenset[Perm]:
    ident = tuple(range(5))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _compose(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(group)


@lru_cache(maxsize=None)
def a5_subgroup_orders() -> frozenset[int]:
    """Orders of all subgroups of A5 (every subgroup is 2-generated)."""
    elems = a5_elements()
    return frozenset(len(_closure((a, b))) for a in elems for b in elems)


@lru_cache(maxsize=None)
def a5_conjugacy_classes() -> tuple[tuple[int, int], ...]:
    """(element order, class size) for each class, ordered 1A 2A 3A 5A 5B."""
    elems = a5_elements()
    seen: set[Perm] = set()
    classes = []
    for x in sorted(elems, key=lambda p: (_order(p), p)):
        if x in seen:
            continue
        cls = {_compose(_compose(g, x), _inverse(g)) for g in elems}
        seen |= cls
        classes.append((_order(x), len(cls)))
    return tuple(classes)


# --- character table ---------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    classes: tuple[str, ...]
    class_sizes: tuple[int, ...]
    class_orders: tuple[int, ...]
    values: tuple[tuple[Sqrt5Number, ...], ...]  # values[i][z] = chi_{i+1}(class z)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(int(row[0].a) for row in self.values)

    def value(self, character: int, cls: str) -> Sqrt5Number:
        """``character`` is 1-based, as in chi_1..chi_5."""
        return self.values[character - 1][self.classes.index(cls)]

    def inner(self, f, g) -> Sqrt5Number:
        """<f, g> for class functions given as sequences of class values (real-valued)."""
        total = sum((n * a * b for n, a, b in zip(self.class_sizes, f, g)), Sqrt5Number(0))
        return total / A5_ORDER


@lru_cache(maxsize=None)
def a5_character_table() -> CharacterTable:
    r5 = Sqrt5Number.sqrt5()
    minus = (1 - r5) / 2
    plus = (1 + r5) / 2
    s = Sqrt5Number
    # columns by class 1A, 2A, 3A, 5A, 5B
    columns = [
        [s(1), s(3), s(3), s(4), s(5)],
        [s(1), s(-1), s(-1), s(0), s(1)],
        [s(1), s(0), s(0), s(1), s(-1)],
        [s(1), minus, plus, s(-1), s(0)],
        [s(1), plus, minus, s(-1), s(0)],
    ]
    values = tuple(tuple(col[i] for col in columns) for i in range(5))
    table = CharacterTable(("1A", "2A", "3A", "5A", "5B"), (1, 15, 20, 12, 12), (1, 2, 3, 5, 5), values)
    if tuple(zip(table.class_orders, table.class_sizes)) != a5_conjugacy_classes():
        raise ConstructionError("class sizes disagree with the permutation model of A5")
    for i, j in itertools.product(range(5), repeat=2):
        if table.inner(values[i], values[j]) != int(i == j):
            raise ConstructionError(f"characters {i + 1} and {j + 1} fail row orthogonality")
    for z, w in itertools.product(range(5), repeat=2):
        col = sum((values[i][z] * values[i][w] for i in range(5)), Sqrt5Number(0))
        expected = A5_ORDER // table.class_sizes[z] if z == w else 0
        if col != expected:
            raise ConstructionError(f"classes {z} and {w} fail column orthogonality")
    return table


# --- Lefschetz sums and the Neron-Severi decomposition -----------------------

def euler_number_of_fixed_locus(order: int) -> int:
    """chi_top(X^a) for a symplectic automorphism ``a`` of the given order."""
    if order == 1:
        return K3_EULER_NUMBER
    return FIXED_POINTS[order]


@dataclass(frozen=True)
class LefschetzSum:
    total: int
    identity_term: int
    cohomology_invariant_rank: int
    lattice_invariant_rank: int
    picard_invariant_rank: int


def lefschetz_sum_check() -> LefschetzSum:
    table = a5_character_table()
    terms = [n * euler_number_of_fixed_locus(o) for n, o in zip(table.class_sizes, table.class_orders)]
    total = sum(terms)
    if total % A5_ORDER:
        raise ConstructionError(f"Lefschetz sum {total} is not divisible by {A5_ORDER}")
    invariant_h = total // A5_ORDER
    # H^0 and H^4 are trivial A5-modules; H^2 contributes the rest.
    lattice_rank = invariant_h - 2
    return LefschetzSum(total, terms[0], invariant_h, lattice_rank, lattice_rank - TRANSCENDENTAL_RANK)


@dataclass(frozen=True)
class LefschetzEquation:
    """``lhs == constant + sum(coefficients[i] * a_{i+2})`` for one class."""

    cls: str
    lhs: int
    constant: Sqrt5Number
    coefficients: tuple[Sqrt5Number, ...]


def picard_traces() -> tuple[int, ...]:
    """Trace of each class on the Neron-Severi lattice, from fixed-point counts."""
    table = a5_character_table()
    return tuple(
        euler_number_of_fixed_locus(o) - 2 - TRANSCENDENTAL_RANK for o in table.class_orders
    )


def lefschetz_equations(trivial_multiplicity: int | None = None) -> list[LefschetzEquation]:
    table = a5_character_table()
    if trivial_multiplicity is None:
        trivial_multiplicity = lefschetz_sum_check().picard_invariant_rank
    eqs = []
    for z, (cls, trace) in enumerate(zip(table.classes, picard_traces())):
        eqs.append(
            LefschetzEquation(
                cls,
                trace,
                trivial_multiplicity * table.values[0][z],
                tuple(table.values[i][z] for i in range(1, 5)),
            )
        )
    return eqs


@dataclass(frozen=True, order=True)
class LefschetzSolution:
    a2: int
    a3: int
    a4: int
    a5: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a2, self.a3, self.a4, self.a5)


def solve_picard_decomposition(bound: int = 6) -> list[LefschetzSolution]:
    """All non-negative (a2..a5) up to ``bound`` solving the five class equations."""
    eqs = lefschetz_equations()
    solutions = []
    for a in itertools.product(range(bound + 1), repeat=4):
        if all(
            e.constant + sum((c * x for c, x in zip(e.coefficients, a)), Sqrt5Number(0)) == e.lhs
            for e in eqs
        ):
            solutions.append(LefschetzSolution(*a))
    return solutions


def picard_multiplicities() -> tuple[Sqrt5Number, ...]:
    """Multiplicities of chi_1..chi_5 in the Neron-Severi character, by inner products."""
    table = a5_character_table()
    traces = [Sqrt5Number(t) for t in picard_traces()]
    return tuple(table.inner(traces, row) for row in table.values)


# --- the twist by an order-3 non-symplectic automorphism -------------------

@dataclass(frozen=True)
class TwistBranch:
    exponents: tuple[int, int, int, int]  # (b, c, d, e)
    chi_top: int
    chi_2a: int
    chi_3a: int
    chi_5a: int
    profile: tuple[int, int] | None
    status: str


def twist_euler_numbers(b: int, c: int, d: int, e: int) -> dict[str, Zeta3Number]:
    """chi_top of X^{g a} for a in 1A, 2A, 3A, 5A."""
    z = Zeta3Number.zeta()
    sb, sc, sd, se = z**b, z**c, z**d, z**e
    return {
        "1A": 3 + 4 * (sb + sc) + 5 * (sd + se),
        "2A": 3 + sd + se,
        "3A": 3 + sb + sc - sd - se,
        "5A": 3 - sb - sc,
    }


def _canonical(exps: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    b, c, d, e = exps
    return (min(b, c), max(b, c), min(d, e), max(d, e))


def solve_zeta3_twist(merge_symmetric: bool = True) -> list[TwistBranch]:
    """Exponent patterns with chi(X^{g.5A}) = 4 and chi(X^{g.3A}) rational."""
    found = {}
    for exps in itertools.product(range(3), repeat=4):
        chis = twist_euler_numbers(*exps)
        if chis["5A"] != 4 or not chis["3A"].is_rational():
            continue
        if not all(v.is_rational() for v in chis.values()):
            raise ConstructionError(f"irrational Euler number for exponents {exps}")
        key = _canonical(exps) if merge_symmetric else exps
        if key in found:
            continue
        chi = int(chis["1A"].to_rational())
        try:
            profile = fixed_locus_profile(chi)
        except ValueError:
            profile = None
        d, e = key[2], key[3]
        status = "valid" if (d, e) != (0, 0) else "excluded geometrically"
        found[key] = TwistBranch(
            key,
            chi,
            int(chis["2A"].to_rational()),
            int(chis["3A"].to_rational()),
            int(chis["5A"].to_rational()),
            profile,
            status,
        )
    return sorted(found.values(), key=lambda br: (br.chi_top, br.exponents))


def fixed_locus_profile(chi: int) -> tuple[int, int]:
    """(n_h, m_h) from chi_top(X^h) = 3(1 + n_h), m_h = n_h + 3."""
    if chi % 3:
        raise ValueError(f"Euler number {chi} is not divisible by 3")
    n = chi // 3 - 1
    if not -3 <= n <= 6:
        raise ValueError(f"n_h = {n} lies outside [-3, 6]")
    return n, n + 3


# --- transcendental lattice --------------------------------------------------

TRANSCENDENTAL_ACTION = ExactMatrix([[0, -1], [1, -1]])  # t1 -> t2, t2 -> -(t1 + t2)


def transcendental_form(m: int) -> ExactMatrix:
    if m < 1:
        raise ValueError("m must be a positive integer")
    form = ExactMatrix([[2 * m, -m], [-m, 2 * m]])
    g = TRANSCENDENTAL_ACTION
    if g.T @ form @ g != form:
        raise ConstructionError("form is not invariant under the order-3 action")
    return form


def transcendental_determinant(m: int) -> Fraction:
    return determinant(transcendental_form(m))


# --- orbit sizes and root-system exclusion -----------------------------------

def allowed_orbit_sizes() -> frozenset[int]:
    """Sizes of transitive A5-sets with more than one point: indices of proper subgroups."""
    return frozenset(A5_ORDER // h for h in a5_subgroup_orders() if h < A5_ORDER)


def _pgl2_5() -> list[tuple[int, int, int, int]]:
    """Representatives of PGL_2(F_5): invertible matrices with first nonzero entry 1."""
    reps = []
    for a, b, c, d in itertools.product(range(5), repeat=4):
        if (a * d - b * c) % 5 == 0:
            continue
        lead = next(x for x in (a, b, c, d) if x)
        if lead == 1:
            reps.append((a, b, c, d))
    return reps


def _projective_line_stabilizer_order() -> tuple[int, int]:
    """(|PGL_2(5)|, order of the stabilizer of the point at infinity)."""
    group = _pgl2_5()
    # z -> (a z + b)/(c z + d) fixes infinity iff c == 0
    return len(group), sum(1 for (_, _, c, _) in group if c == 0)


def _d4_orbit_count() -> int:
    """Orbits on the 24 simple roots of 6D4 when A5 fixes one component."""
    roots = [(comp, node) for comp in range(6) for node in range(4)]
    parent = {r: r for r in roots}

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for p in a5_elements():
        for comp, node in roots:
            image = (0 if comp == 0 else p[comp - 1] + 1, node)
            parent[find((comp, node))] = find(image)
    return len({find(r) for r in roots})


@dataclass(frozen=True)
class ExclusionVerdict:
    label: RootSystemLabel
    excluded: bool
    reason: str


def exclude_root_system(label: RootSystemLabel | str) -> ExclusionVerdict:
    label = label if isinstance(label, RootSystemLabel) else RootSystemLabel.parse(label)
    if label is RootSystemLabel.A4_6:
        group_order, stab = _projective_line_stabilizer_order()
        if group_order // 6 != stab:
            raise ConstructionError("PGL_2(5) stabilizer count is inconsistent")
        return ExclusionVerdict(label, stab < A5_ORDER, f"stabilizer order {stab} < {A5_ORDER}")
    if label is RootSystemLabel.D4_6:
        orbits = _d4_orbit_count()
        return ExclusionVerdict(label, orbits != 6, f"{orbits} orbits ≠ 6")
    from .cases import enumerate_cases

    found = enumerate_cases(label)
    return ExclusionVerdict(
        label, not found, f"{len(found)} orbit decompositions: " + ", ".join(c.value for c in found)
    )
