from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bkcodes import construct_field, make_ring  # noqa: E402


@pytest.fixture(scope="session")
def F2():
    return construct_field(2)


@pytest.fixture(scope="session")
def F4():
    return construct_field(2, 2)


@pytest.fixture(scope="session")
def R1_F2(F2):
    return make_ring(F2, 1)


@pytest.fixture(scope="session")
def R1_F4(F4):
    return make_ring(F4, 1)


@pytest.fixture(scope="session")
def R2_F2(F2):
    return make_ring(F2, 2)
