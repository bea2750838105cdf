import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hypants.moebius import mat  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_transform(rng, spread=1.0):
    while True:
        e = spread * (rng.normal(size=4) + 1j * rng.normal(size=4))
        if abs(e[0] * e[3] - e[1] * e[2]) > 0.1 * spread ** 2:
            return mat(*e)


coords = st.floats(min_value=-3, max_value=3, allow_nan=False, allow_infinity=False)


@st.composite
def transforms(draw):
    """Products upper(x) lower(y) diag(exp(w)), so det = 1 by construction."""
    x, y = (complex(draw(coords), draw(coords)) for _ in range(2))
    lam = np.exp(complex(draw(coords), draw(coords)) / 3)
    return mat(1, x, 0, 1) @ mat(1, 0, y, 1) @ mat(lam, 0, 0, 1 / lam)


@st.composite
def annulus_points(draw, lo=0.1, hi=10.0):
    r = draw(st.floats(min_value=lo, max_value=hi))
    t = draw(st.floats(min_value=-3.14159, max_value=3.14159))
    return complex(r * np.cos(t), r * np.sin(t))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.LINES:
        terminalreporter.write_line(line)
