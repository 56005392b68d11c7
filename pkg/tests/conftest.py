import pytest

from polygrid import fixtures, trace_faces


@pytest.fixture
def square():
    return fixtures.square()


@pytest.fixture
def domino():
    return fixtures.domino()


@pytest.fixture
def grid3():
    return fixtures.grid3()


@pytest.fixture
def grid4():
    return fixtures.grid4()


@pytest.fixture
def fig8():
    return fixtures.fig8()


@pytest.fixture
def twin_nonagons():
    return fixtures.twin_nonagons()


def basis_of(g):
    return trace_faces(g)
