import pytest

from latkit.corpus import (default_corpus, make_boolean, make_fig2, make_M3,
                           make_Mn, make_N5)


@pytest.fixture(scope="session")
def n5():
    return make_N5()


@pytest.fixture(scope="session")
def m3():
    return make_M3()


@pytest.fixture(scope="session")
def fig2():
    return make_fig2()


@pytest.fixture(scope="session")
def b3():
    return make_boolean(3)


@pytest.fixture(scope="session")
def mn3():
    return make_Mn(3)


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()
