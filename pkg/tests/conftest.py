import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from indstab.enumeration import enumerate_graphs

_CATALOGS: dict[int, list] = {}


@pytest.fixture(scope="session")
def catalog():
    """catalog(n) -> list of (CanonicalCode, Graph), computed once per session."""

    def get(n: int):
        if n not in _CATALOGS:
            _CATALOGS[n] = list(enumerate_graphs(n))
        return _CATALOGS[n]

    return get


@pytest.fixture(scope="session")
def jobs():
    return os.cpu_count() or 1
