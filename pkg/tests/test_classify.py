from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from distp3.classify import (
    UNBOUNDED,
    ConstraintPolicy,
    UnsupportedDegreeError,
    admissible,
    degc_bound,
    enumerate as enumerate_table,
    max_genus,
    min_genus,
)
from distp3.selftest import REFERENCE_TABLE


def rows(table):
    return tuple((r.deg_c, r.c2, r.c3) for r in table)


def test_default_policy_reproduces_reference_table():
    assert rows(enumerate_table(3)) == REFERENCE_TABLE


def test_table_shape():
    table = enumerate_table(3)
    assert len(table) == 13
    assert table.row(12) is None
    assert [r.c2 for r in table] == [11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, -2]
    for r in table:
        assert all(b - a == 2 for a, b in zip(r.c3, r.c3[1:]))
        assert all((c3 - r.c2) % 2 == 0 for c3 in r.c3)


def test_strict_policy_caps_c2_three_row():
    strict = enumerate_table(3, ConstraintPolicy.strict())
    assert strict.row(8).c3 == (1, 3, 5, 7, 9)
    default = enumerate_table(3)
    assert [r for r in strict if r.deg_c != 8] == [r for r in default if r.deg_c != 8]


def test_genus_bounds():
    assert max_genus(3) == 1 and max_genus(1) == 0 and max_genus(7) == 15
    with pytest.raises(ValueError):
        max_genus(0)
    assert min_genus(0) == 1 and min_genus(1) == 0 and min_genus(2) == -3
    assert min_genus(5) is UNBOUNDED


def test_degc_bound():
    assert degc_bound(3) == 13
    assert degc_bound(3, 10) == 10
    with pytest.raises(UnsupportedDegreeError):
        degc_bound(2)
    with pytest.raises(UnsupportedDegreeError):
        enumerate_table(2)


def test_admissible_examples():
    assert admissible(-1, 3, 15) == (True, [])
    ok, why = admissible(-1, 3, 17)
    assert not ok and "hartshorne_weak" in why
    ok, why = admissible(-1, 5, 27)
    assert not ok and why == ["hartshorne_stable"]
    assert admissible(-1, -2, 0)[0] and admissible(-1, 0, 0)[0]
    assert not admissible(-1, -1, 0)[0]
    assert admissible(-1, 8, 3)[1] == ["parity"]


def test_degc_override_truncates():
    assert [r.deg_c for r in enumerate_table(3, degc_max=5)] == [0, 1, 2, 3, 4, 5]


@given(
    st.booleans(), st.booleans(), st.booleans(), st.booleans(), st.booleans(), st.integers(2, 6)
)
def test_weakening_never_shrinks_rows(parity, nonneg, genus, weak, stable, stable_from):
    strong = ConstraintPolicy(stable_from=stable_from)
    weaker = ConstraintPolicy(
        apply_parity=parity,
        apply_c3_nonneg=nonneg,
        apply_genus_bounds=genus,
        hartshorne_weak=weak,
        hartshorne_stable=stable,
        stable_from=stable_from,
    )
    base = {r.deg_c: set(r.c3) for r in enumerate_table(3, strong)}
    loose = {r.deg_c: set(r.c3) for r in enumerate_table(3, weaker)}
    for deg_c, vals in base.items():
        assert vals <= loose[deg_c]


def test_emitters():
    table = enumerate_table(3)
    md = table.render("md").splitlines()
    assert md[0] == "| deg(C) | c2 | c3 |"
    assert md[2] == "| 0 | 11 | 51 |"
    assert md[4] == "| 2 | 9 | 29, 31, 33, 35 |"
    assert len(md) == 15
    csv_lines = table.render("csv").splitlines()
    assert csv_lines[0] == "degC,c2,c3" and csv_lines[-1] == "13,-2,0"
    data = json.loads(table.render("json"))
    assert data[7] == {"degC": 7, "c2": 4, "c3": list(range(0, 17, 2))}
    with pytest.raises(ValueError):
        table.render("html")


def test_policy_json_round_trip():
    p = ConstraintPolicy.strict().with_options(degc_max=11)
    assert ConstraintPolicy.from_json(json.loads(json.dumps(p.to_json()))) == p
    with pytest.raises(ValueError):
        ConstraintPolicy.named("lenient")
