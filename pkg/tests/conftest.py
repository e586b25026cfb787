import pytest

from flathg.hg_semiring import build_semiring
from flathg.hypergraph import family
from flathg.words import build_sc, builtin_s7


@pytest.fixture(scope="session")
def sc_abc():
    return build_sc(["abc"])


@pytest.fixture(scope="session")
def sc_abcd():
    return build_sc(["abcd"])


@pytest.fixture(scope="session")
def s7():
    return builtin_s7()


@pytest.fixture(scope="session")
def triangle_semiring():
    """The 14-element semiring of the beam(1) triangle."""
    return build_semiring(family("beam", 1)).exported


@pytest.fixture(scope="session")
def nested_semirings():
    return {i: build_semiring(family("nested", i)).exported for i in (1, 2, 3)}
