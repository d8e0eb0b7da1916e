import pytest

import revembed as rv


@pytest.fixture
def running():
    return rv.parse_pla(rv.data_path("running_example.pla").read_text())


@pytest.fixture
def underapprox():
    return rv.parse_pla(rv.data_path("underapprox_example.pla").read_text())


@pytest.fixture
def underapprox_dsop3():
    """The certified 3-cube disjoint form of the underapprox example."""
    return rv.dsop(rv.parse_pla(rv.data_path("underapprox_dsop.pla").read_text()))


@pytest.fixture
def identity2():
    return rv.parse_pla(rv.data_path("identity2.pla").read_text())


@pytest.fixture
def and2():
    return rv.parse_pla(rv.data_path("and2.pla").read_text())
