from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from sedeon.algebra import Sedeon

# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}

_component = st.complex_numbers(min_magnitude=0.0, max_magnitude=10.0, allow_nan=False, allow_infinity=False)
sedeons = st.lists(_component, min_size=16, max_size=16).map(Sedeon)
reals = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
