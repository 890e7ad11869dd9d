"""Shared fixtures: small fields, the carry digraph, and the m=5 code."""

import pytest

from tricode.cyclic import define_code
from tricode.field import build_field
from tricode.graph import build_digraph


@pytest.fixture(scope="session")
def field5():
    return build_field(5)


@pytest.fixture(scope="session")
def field7():
    return build_field(7)


@pytest.fixture(scope="session")
def digraph():
    return build_digraph()


@pytest.fixture(scope="session")
def code5(field5):
    return define_code(field5, (1, 3, 13))
