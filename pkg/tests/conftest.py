from __future__ import annotations

import pytest

from qcff.algebra import field_create, parse_poly


@pytest.fixture(scope="session")
def ctx3():
    return field_create(3)


@pytest.fixture(scope="session")
def ctx5():
    return field_create(5)


@pytest.fixture(scope="session")
def ctx7():
    return field_create(7)


@pytest.fixture(scope="session")
def ctx9():
    return field_create(3, 2, [1, 0, 1])


@pytest.fixture(scope="session")
def mk():
    """Polynomial literal helper: mk(ctx, 'T^2+1')."""
    return parse_poly
