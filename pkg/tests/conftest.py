import pytest

from tanglebounds.fixtures import load_corpus
from tanglebounds.pd import parse_pd

TREFOIL_LEFT = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
HOPF = "X(1,3,2,4) X(3,1,4,2)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def by_name(corpus):
    return {f.name: f for f in corpus}


@pytest.fixture(scope="session")
def link_fixtures(corpus):
    return [f for f in corpus if f.kind != "tangle"]


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL_LEFT)


@pytest.fixture
def hopf():
    return parse_pd(HOPF)


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT)
