"""Acceptance criteria A1-A8; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import pytest

from distp3 import selftest
from distp3.coeffs import QQ

RESULTS: list[selftest.CheckResult] = []


def _report(result: selftest.CheckResult, capsys=None):
    RESULTS.append(result)
    if capsys is None:
        print(result.line())
    else:
        with capsys.disabled():
            print("\n" + result.line())
    assert result.passed, result.detail
    assert result.seconds <= result.limit, f"took {result.seconds:.1f}s, limit {result.limit}s"


def test_a1_classification_table(capsys):
    _report(selftest.check_table(), capsys)


def test_a2_fifty_one_points_prime_field(capsys):
    _report(selftest.check_fifty_one_points(selftest.FP), capsys)


def test_a2_fifty_one_points_rationals(capsys):
    _report(selftest.check_fifty_one_points(QQ), capsys)


@pytest.mark.parametrize("index", [0, 1], ids=["pencil-linear-quartic", "pencil-quadric-cubic"])
def test_a3_hilbert_consistency(capsys, index):
    _report(selftest.check_hilbert_consistency_case(index), capsys)


@pytest.mark.parametrize("index", [0, 1], ids=["pencil-quadric-cubic", "split-form"])
def test_a4_stability(capsys, index):
    _report(selftest.check_stability_case(index), capsys)


def test_a5_moduli_dimension(capsys):
    _report(selftest.check_moduli(), capsys)


def test_a6_riemann_roch_identity(capsys):
    _report(selftest.check_riemann_roch(), capsys)


def test_a7_oracle_equivalence(capsys):
    _report(selftest.check_oracles(), capsys)


def test_a8_integrability(capsys):
    _report(selftest.check_integrability(), capsys)


if __name__ == "__main__":
    for r in selftest.run_all(include_rational_51=True):
        print(r.line())
