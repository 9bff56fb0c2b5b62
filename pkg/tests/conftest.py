from __future__ import annotations

import pytest
from hypothesis import settings

from distp3 import selftest
from distp3.coeffs import GF
from distp3.distribution import analyze
from distp3.poly import P3

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

FP = GF(32003)


@pytest.fixture(scope="session")
def fp_ring():
    return P3.with_field(FP)


@pytest.fixture(scope="session")
def report_pencil_14_fp():
    return analyze(selftest.fixture_pencil_linear_quartic(FP))


@pytest.fixture(scope="session")
def report_pencil_23_fp():
    return analyze(selftest.fixture_pencil_quadric_cubic(FP))


@pytest.fixture(scope="session")
def report_split_fp():
    return analyze(selftest.fixture_split(FP))


@pytest.fixture(scope="session")
def report_plucker_fp():
    return analyze(selftest.fixture_plucker(FP))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for r in RESULTS:
            terminalreporter.write_line(r.line())
