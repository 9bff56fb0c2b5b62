"""Seeded fixtures and the end-to-end acceptance checks.

Each ``check_*`` function returns a :class:`CheckResult`; the ``selftest``
CLI subcommand and the acceptance test module both run them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import classify
from .coeffs import GF, QQ
from .distribution import (
    analyze,
    generic_pencil,
    generic_plucker_form,
    generic_split_form,
    h0_tangent,
    is_integrable,
    tangent_hilbert_polynomial,
)
from .groebner import (
    Ideal,
    colon,
    intersect,
    satisfies_buchberger_criterion,
    saturate,
    saturate_irrelevant,
)
from .hilbert import (
    ci_invariants,
    hilbert_function,
    hilbert_numerator,
    scheme_invariants,
    series_coefficient,
)
from .moduli import h0_tp3, hrr_chi, moduli_dim_335
from .poly import P3

FIXTURE_SEED = 0
FP = GF(32003)

# Table 1.1 of the classification, as (deg C, c2, c3 values)
REFERENCE_TABLE = (
    (0, 11, (51,)),
    (1, 10, (42,)),
    (2, 9, (29, 31, 33, 35)),
    (3, 8, tuple(range(0, 31, 2))),
    (4, 7, tuple(range(1, 28, 2))),
    (5, 6, tuple(range(0, 27, 2))),
    (6, 5, tuple(range(1, 26, 2))),
    (7, 4, tuple(range(0, 17, 2))),
    (8, 3, tuple(range(1, 16, 2))),
    (9, 2, (0, 2, 4, 6, 8)),
    (10, 1, (1, 3)),
    (11, 0, (0,)),
    (13, -2, (0,)),
)


# ---------- fixtures ----------


def _ring(field):
    return P3 if field is None or field is QQ else P3.with_field(field)


def fixture_plucker(field=FP, seed: int = FIXTURE_SEED):
    """Generic degree-3 Plucker form: B_ij cubics with three single-digit terms."""
    return generic_plucker_form(seed, degree=3, nterms=3, ring=_ring(field))


def fixture_pencil_linear_quartic(field=QQ, seed: int = FIXTURE_SEED):
    return generic_pencil(1, 4, seed=seed, ring=_ring(field), linear_x0=True)


def fixture_pencil_quadric_cubic(field=QQ, seed: int = FIXTURE_SEED):
    return generic_pencil(2, 3, seed=seed, ring=_ring(field))


def fixture_split(field=QQ, seed: int = FIXTURE_SEED):
    return generic_split_form(seed, ring=_ring(field))


def twisted_cubic(ring=P3) -> Ideal:
    return Ideal.parse(["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"], ring)


def complete_intersection(a: int, b: int, seed: int = 0, ring=P3) -> Ideal:
    rng = random.Random(1000 * a + b + seed)
    return Ideal([ring.random_form(a, rng), ring.random_form(b, rng)], ring)


CI_TYPES = ((1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3))


def oracle_ideals(field=QQ) -> list[Ideal]:
    """A mixed bag of homogeneous ideals for cross-checking Hilbert computations."""
    ring = _ring(field)
    out = [twisted_cubic(ring)]
    out += [complete_intersection(a, b, ring=ring) for a, b in CI_TYPES]
    for texts in (
        ["x0^2", "x0*x1"],
        ["x0^3", "x1^2", "x2"],
        ["x0", "x1", "x2", "x3"],
        ["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"],
        ["x0*x1", "x2*x3"],
        ["x0^2*x1", "x1^3 - x2^2*x3"],
        ["x0*x3 - x1*x2", "x0^2 + x3^2"],
    ):
        out.append(Ideal.parse(texts, ring))
    out.append(intersect(Ideal.parse(["x0", "x1"], ring), Ideal.parse(["x2", "x3"], ring)))
    rng = random.Random(7)
    for _ in range(6):
        gens = [ring.random_form(rng.choice([2, 3]), rng, nterms=3) for _ in range(3)]
        out.append(Ideal(gens, ring))
    return out


# ---------- checks ----------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds <= self.limit

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        timing = f"{self.seconds:.2f}s / {self.limit:g}s"
        return f"{self.name}: {status} ({timing}) {self.detail}"


def _run(name: str, limit: float, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    passed, detail = fn()
    return CheckResult(name, passed, detail, time.perf_counter() - start, limit)


def check_table() -> CheckResult:
    def body():
        table = classify.enumerate(3)
        got = tuple((r.deg_c, r.c2, r.c3) for r in table)
        ok = got == REFERENCE_TABLE
        return ok, f"{len(table)} rows" + ("" if ok else f"; got {got}")

    return _run("A1 classification table", 1.0, body)


def check_fifty_one_points(field=FP) -> CheckResult:
    def body():
        report = analyze(fixture_plucker(field), seed=FIXTURE_SEED)
        s = report.scheme
        ok = (
            s.saturated_dimension == 0
            and s.residual_length == 51
            and tuple(report.chern) == (-1, 11, 51)
        )
        return ok, f"dim {s.saturated_dimension}, length {s.residual_length}, chern {tuple(report.chern)}"

    limit = 120.0 if field is not QQ else 1800.0
    return _run(f"A2 fifty-one points over {field.name}", limit, body)


HILBERT_CASES = (
    ("pencil(x0, quartic)", fixture_pencil_linear_quartic, (4, 3), (-1, 7, 27)),
    ("pencil(quadric, cubic)", fixture_pencil_quadric_cubic, (6, 4), (-1, 5, 15)),
)


def check_hilbert_consistency_case(index: int, field=QQ) -> CheckResult:
    label, make, curve, chern = HILBERT_CASES[index]

    def body():
        report = analyze(make(field), seed=FIXTURE_SEED)
        s = report.scheme
        row = classify.enumerate(3).row(s.curve_degree)
        in_table = row is not None and report.chern.c3 in row.c3
        got_curve = (s.curve_degree, s.curve_genus)
        ok = (
            report.hilbert_consistent
            and got_curve == curve
            and tuple(report.chern) == chern
            and in_table
        )
        return ok, (
            f"curve {got_curve}, chern {tuple(report.chern)}, "
            f"consistent {report.hilbert_consistent}, in table {in_table}"
        )

    return _run(f"A3 Hilbert consistency {label}", 120.0, body)


def check_hilbert_consistency(field=QQ) -> list[CheckResult]:
    return [check_hilbert_consistency_case(i, field) for i in range(len(HILBERT_CASES))]


def _stability_pencil(field):
    form = fixture_pencil_quadric_cubic(field)
    h0 = h0_tangent(form, 0)
    report = analyze(form, seed=FIXTURE_SEED)
    ok = h0 == 0 and report.stability == "stable" and report.scheme.curve_degree <= 7
    return ok, f"h0 {h0}, {report.stability}, deg C {report.scheme.curve_degree}"


def _stability_split(field):
    report = analyze(fixture_split(field), seed=FIXTURE_SEED)
    s = report.scheme
    ok = (
        report.h0_tangent >= 1
        and report.stability == "not-stable"
        and s.curve_degree == 11
        and report.chern.c3 == 0
    )
    return ok, (
        f"h0 {report.h0_tangent}, {report.stability}, deg C {s.curve_degree}, "
        f"genus {s.curve_genus}, c3 {report.chern.c3}"
    )


STABILITY_CASES = (
    ("pencil(quadric, cubic)", _stability_pencil),
    ("split form", _stability_split),
)


def check_stability_case(index: int, field=QQ) -> CheckResult:
    label, fn = STABILITY_CASES[index]
    return _run(f"A4 stability {label}", 60.0, lambda: fn(field))


def check_stability(field=QQ) -> list[CheckResult]:
    return [check_stability_case(i, field) for i in range(len(STABILITY_CASES))]


def check_moduli() -> CheckResult:
    def body():
        der = moduli_dim_335()
        h0 = next(s for s in der.steps if s.label.startswith("h0"))
        ok = der.value == 42 and h0.value == 4 and h0.source == "computed" and h0_tp3(-1) == 4
        return ok, str(der.steps[-1].label) + f" = {der.value}"

    return _run("A5 moduli dimension", 1.0, body)


def check_riemann_roch() -> CheckResult:
    def body():
        bad = set()
        for d in range(6):
            for c in range(-2, 12):
                for l in range(52):
                    if hrr_chi(2, 2 - d, c, l) != tangent_hilbert_polynomial(d, c, l):
                        bad.add(d)
        if not bad:
            return True, "identity holds for d in 0..5"
        return False, f"closed form differs from Riemann-Roch for d in {sorted(bad)}"

    return _run("A6 Riemann-Roch identity", 5.0, body)


def check_oracles() -> CheckResult:
    def body():
        ideals = oracle_ideals(QQ) + oracle_ideals(FP)[:4]
        problems = []
        for k, I in enumerate(ideals):
            num = hilbert_numerator(I)
            for m in range(9):
                if series_coefficient(num, m) != hilbert_function(I, m):
                    problems.append(f"HF mismatch ideal {k} degree {m}")
                    break
            if not satisfies_buchberger_criterion(I.groebner()):
                problems.append(f"S-polynomial residue in ideal {k}")
        m = Ideal.irrelevant(P3)
        for k, I in enumerate(ideals[:12]):
            if I.ring is not P3:
                continue
            S = saturate_irrelevant(I)
            if not (S.contains(I) and S.contains(colon(S, m)) and saturate(S, m) == S):
                problems.append(f"saturation fixpoint fails for ideal {k}")
        for a, b in CI_TYPES:
            inv = scheme_invariants(complete_intersection(a, b))
            if (inv.degree, inv.arithmetic_genus) != ci_invariants(a, b):
                problems.append(f"complete intersection ({a}, {b})")
        return not problems, f"{len(ideals)} ideals" + (f"; {problems}" if problems else "")

    return _run("A7 oracle equivalence", 60.0, body)


def check_integrability() -> CheckResult:
    def body():
        p1 = is_integrable(fixture_pencil_linear_quartic(QQ))
        p2 = is_integrable(fixture_pencil_quadric_cubic(QQ))
        g = is_integrable(fixture_plucker(QQ))
        return (p1 and p2 and not g), f"pencils {p1}, {p2}; generic Plucker {g}"

    return _run("A8 integrability", 30.0, body)


def run_all(include_rational_51: bool = False) -> list[CheckResult]:
    results = [check_table(), check_fifty_one_points(FP)]
    if include_rational_51:
        results.append(check_fifty_one_points(QQ))
    results += check_hilbert_consistency()
    results += check_stability()
    results += [check_moduli(), check_riemann_roch(), check_oracles(), check_integrability()]
    return results
