from __future__ import annotations

import pytest

from graphprops.universe import enumerate_universe


@pytest.fixture(scope="session")
def u4():
    return enumerate_universe(4)


@pytest.fixture(scope="session")
def u5():
    return enumerate_universe(5)


@pytest.fixture(scope="session")
def u6():
    return enumerate_universe(6)


@pytest.fixture(scope="session")
def u7():
    return enumerate_universe(7)
