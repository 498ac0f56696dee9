"""
conftest.py - Shared pytest setup: put src/ on the path, reset global caps
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from alcove import DEFAULT_INTERVAL_CAP, set_interval_cap  # noqa: E402
from console import set_verbose  # noqa: E402
from g1 import DEFAULT_SCAN_CAP, set_scan_cap  # noqa: E402
from rootdata import CartanType, build_root_system  # noqa: E402


@pytest.fixture(autouse=True)
def reset_settings():
    yield
    set_interval_cap(DEFAULT_INTERVAL_CAP)
    set_scan_cap(DEFAULT_SCAN_CAP)
    set_verbose(False)


@pytest.fixture
def a1():
    return build_root_system(CartanType('A', 1))


@pytest.fixture
def a2():
    return build_root_system(CartanType('A', 2))


@pytest.fixture
def b2():
    return build_root_system(CartanType('B', 2))


@pytest.fixture
def g2():
    return build_root_system(CartanType('G', 2))
