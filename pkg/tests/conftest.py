# tests/conftest.py
import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from agq.curves import new_curve  # noqa: E402
from agq.field import new_field  # noqa: E402


@pytest.fixture
def gf4():
    """GF(4) with q = 2."""
    return new_field(1)


@pytest.fixture
def gf16():
    """GF(16) with q = 4."""
    return new_field(2)


@pytest.fixture
def curve_a2():
    """y^2 + y = x^3 over GF(4): n = 8, g = 1."""
    return new_curve("a", 1)


@pytest.fixture
def curve_a4():
    """y^2 + y = x^5 over GF(16): n = 32, g = 2."""
    return new_curve("a", 2)


@pytest.fixture
def curve_a8():
    """y^2 + y = x^9 over GF(64): n = 128, g = 4."""
    return new_curve("a", 3)


@pytest.fixture
def curve_b2():
    """y^2 + y = x^3 over GF(4) read as the trace-like curve: n = 8, g = 1."""
    return new_curve("b", 1)


@pytest.fixture
def curve_b8():
    """y^8 + y = x^3 over GF(64): n = 176, g = 7."""
    return new_curve("b", 3)


@pytest.fixture
def clean_env(monkeypatch):
    """Drop every AGQ_* variable so settings start from defaults."""
    for name in list(os.environ):
        if name.startswith("AGQ_"):
            monkeypatch.delenv(name, raising=False)
    return monkeypatch
