"""The end-to-end check runner behind ``a5lattice verify-all``.

Checks run in a fixed order, grouped in stages. A stage that cannot even
build its objects raises ``StageError`` (exit status 2); a check whose
computed value differs from the expected one is simply recorded as failed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from . import __version__
from .cases import CaseId, align_basis, build_basis, build_labeling, enumerate_cases, gram
from .codes import BINARY_SPECTRUM, TERNARY_SPECTRUM, build_binary_golay, build_ternary_golay, verify_steiner
from .discform import check_case_claims, disc_group, verify_common_form
from .exactmath import ExactMatrix, determinant, inverse
from .k3reps import (
    a5_character_table,
    exclude_root_system,
    fixed_locus_profile,
    lefschetz_sum_check,
    solve_picard_decomposition,
    solve_zeta3_twist,
)
from .niemeier import RootSystemLabel, build_niemeier, contains, inner_product, saturation_index
from .reference import DISCRIMINANT_ORDERS, ORDER_FORMULAS, References, load_references


class StageError(RuntimeError):
    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"stage '{stage}' failed: {type(cause).__name__}: {cause}")
        self.stage = stage


@dataclass(frozen=True)
class CheckResult:
    name: str
    paper: str  # short descriptive label for the source of the claim (JSON key fixed by the report schema)
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "paper": self.paper,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class Report:
    version: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(c.passed for c in self.checks)
        return {"passed": passed, "failed": len(self.checks) - passed}

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> str:
        body = {
            "version": self.version,
            "checks": [c.as_dict() for c in self.checks],
            "summary": self.summary,
        }
        return json.dumps(body, indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
            if not c.passed:
                line += f": expected {c.expected}, got {c.actual}"
            lines.append(f"{line} [{c.paper}]")
        s = self.summary
        lines.append(f"{s['passed']} passed, {s['failed']} failed (a5lattice {self.version})")
        return "\n".join(lines) + "\n"


def _flat(m: ExactMatrix) -> str:
    """The text format on one line, rows separated by semicolons."""
    return "; ".join(str(m).splitlines())


def _is_even(x) -> bool:
    return x.denominator == 1 and x.numerator % 2 == 0


def _sorted_dict(d: dict) -> str:
    return ", ".join(f"{k}: {v}" for k, v in sorted(d.items()))


# --- stages ------------------------------------------------------------------

Stage = Callable[[References], Iterator[CheckResult]]


def _codes(_: References) -> Iterator[CheckResult]:
    for name, code, dim, spectrum, (t, k, n) in (
        ("binary", build_binary_golay(), 12, BINARY_SPECTRUM, (5, 8, 24)),
        ("ternary", build_ternary_golay(), 6, TERNARY_SPECTRUM, (5, 6, 12)),
    ):
        where = f"{name} Golay glue code"
        yield CheckResult(f"codes {name} dimension", where, str(dim), str(code.dimension))
        yield CheckResult(
            f"codes {name} weights", where, _sorted_dict(spectrum), _sorted_dict(code.weight_distribution())
        )
        yield CheckResult(
            f"codes {name} steiner", f"Steiner system S({t},{k},{n})", "true", str(verify_steiner(code, t, k)).lower()
        )


def _lattices(_: References) -> Iterator[CheckResult]:
    for label in (RootSystemLabel.A1_24, RootSystemLabel.A2_12):
        n = build_niemeier(label)
        where = f"Niemeier lattice N({label})"
        yield CheckResult(f"lattice {label} unimodular", where, "1", str(abs(determinant(n.basis_gram))))
        glue = [n.glue_vector(w) for w in n.glue.generator.to_int_rows()]
        members = all(contains(n, v) for v in glue)
        even = all(_is_even(inner_product(n, v, v)) for v in glue) and all(
            inner_product(n, v, w).denominator == 1 for v in glue for w in glue
        )
        yield CheckResult(f"lattice {label} glue membership", where, "true", str(members).lower())
        yield CheckResult(f"lattice {label} glue even", where, "true", str(even).lower())


def _enumeration(_: References) -> Iterator[CheckResult]:
    for label, expected in (
        (RootSystemLabel.A1_24, "2i, 2ii, 2iii, 2iv"),
        (RootSystemLabel.A2_12, "2v, 2vi"),
    ):
        found = ", ".join(c.value for c in enumerate_cases(label))
        yield CheckResult(f"cases {label} enumeration", "orbit decompositions of the invariant lattice", expected, found)


def _constructed(refs: References) -> dict[CaseId, tuple]:
    out = {}
    for case in CaseId:
        basis = build_basis(build_labeling(case))
        try:
            basis = align_basis(basis, refs.grams[case.value])
        except Exception:  # keep the unaligned basis; the Gram check will report it
            pass
        out[case] = (basis, gram(basis))
    return out


def _grams(refs: References) -> Iterator[CheckResult]:
    built = _constructed(refs)
    for case, (_, g) in built.items():
        yield CheckResult(f"gram {case}", f"Gram matrix of case {case}", _flat(refs.grams[case.value]), _flat(g))
    for case, (_, g) in built.items():
        yield CheckResult(
            f"inverse {case}", f"inverse Gram matrix of case {case}", _flat(refs.inverses[case.value]), _flat(inverse(g))
        )
    for case, (basis, _) in built.items():
        yield CheckResult(
            f"saturation {case}",
            f"primitivity of the case {case} basis",
            "1",
            str(saturation_index(basis.lattice, basis.vectors)),
        )


def _discriminants(refs: References) -> Iterator[CheckResult]:
    for case in CaseId:
        for chk in check_case_claims(case.value, refs.grams[case.value]):
            yield CheckResult(f"disc {case} {chk.name}", f"discriminant form of case {case}", chk.expected, chk.actual)


def _isometries(_: References) -> Iterator[CheckResult]:
    for case in ("2ii", "2iii"):
        yield CheckResult(
            f"isometry {case}", "common discriminant form of cases 2ii and 2iii", "true", str(verify_common_form(case)).lower()
        )


def _orders(refs: References) -> Iterator[CheckResult]:
    for case in CaseId:
        c, k = ORDER_FORMULAS[case.value]
        expected = DISCRIMINANT_ORDERS[case.value]
        if expected != c * k * k:
            raise ValueError(f"listed order {expected} of case {case} is not {c}*{k}^2")
        yield CheckResult(
            f"order {case}",
            "listed orders of the invariant discriminant groups",
            str(expected),
            str(disc_group(refs.grams[case.value]).order),
        )


def _characters(_: References) -> Iterator[CheckResult]:
    a5_character_table()  # the constructor raises unless both orthogonality relations hold
    yield CheckResult("characters orthogonality", "character table of A5", "true", "true")
    sols = [s.as_tuple() for s in solve_picard_decomposition()]
    yield CheckResult("picard decomposition", "Neron-Severi character multiplicities", "[(0, 0, 2, 2)]", str(sols))
    ls = lefschetz_sum_check()
    yield CheckResult("lefschetz sum", "Lefschetz sum over A5", "360", str(ls.total))
    yield CheckResult(
        "invariant ranks", "ranks of the A5-invariant lattices", "(4, 2)",
        str((ls.lattice_invariant_rank, ls.picard_invariant_rank)),
    )


def _twist(_: References) -> Iterator[CheckResult]:
    branches = solve_zeta3_twist()
    got = ", ".join(f"{b.exponents} -> {b.chi_top}" for b in branches)
    yield CheckResult("twist branches", "order-3 twist of the A5 action", "(1, 2, 1, 2) -> -6, (1, 2, 0, 0) -> 9", got)
    for chi, expected in ((-6, (-3, 0)), (9, (2, 5))):
        yield CheckResult(f"profile {chi}", "fixed locus of the order-3 twist", str(expected), str(fixed_locus_profile(chi)))


def _exclusions(_: References) -> Iterator[CheckResult]:
    for label, expected in (
        (RootSystemLabel.A4_6, "excluded: stabilizer order 20 < 60"),
        (RootSystemLabel.D4_6, "excluded: 8 orbits ≠ 6"),
    ):
        v = exclude_root_system(label)
        got = f"{'excluded' if v.excluded else 'admissible'}: {v.reason}"
        yield CheckResult(f"exclusion {label}", f"no A5 action on {label}", expected, got)


STAGES: tuple[tuple[str, Stage], ...] = (
    ("codes", _codes),
    ("lattices", _lattices),
    ("enumeration", _enumeration),
    ("gram matrices", _grams),
    ("discriminant forms", _discriminants),
    ("isometries", _isometries),
    ("discriminant orders", _orders),
    ("characters", _characters),
    ("twist", _twist),
    ("exclusions", _exclusions),
)


def verify_all(fixture_dir: str | Path | None = None) -> Report:
    try:
        refs = load_references(fixture_dir)
    except Exception as exc:
        raise StageError("fixtures", exc) from exc
    report = Report(__version__)
    for name, stage in STAGES:
        try:
            report.checks.extend(stage(refs))
        except Exception as exc:
            raise StageError(name, exc) from exc
    return report
