from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from spectral_transfer.qarith import GaussianRational

rationals = st.builds(
    Fraction,
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=12),
)
gaussian = st.builds(GaussianRational, rationals, rationals)
# mostly real values, with repeats and zeros likely
small_real = st.builds(GaussianRational, st.sampled_from([Fraction(x, 2) for x in range(-6, 7)]))
coord = st.one_of(small_real, gaussian)


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome:7s} {name}")


@pytest.fixture
def data_dir():
    from pathlib import Path

    return Path(__file__).parent / "data"
