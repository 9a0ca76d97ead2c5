import pytest

from gammah import corpus
from gammah.correspondence import build_context

GRID = ("0", "1/2", "1")


@pytest.fixture(scope="session")
def boolean():
    return corpus.boolean()


@pytest.fixture(scope="session")
def z2():
    return corpus.zmod(2)


@pytest.fixture(scope="session")
def z3():
    return corpus.zmod(3)


@pytest.fixture(scope="session")
def z4():
    return corpus.zmod(4)


@pytest.fixture(scope="session")
def z2xz2():
    return corpus.z2xz2()


@pytest.fixture(scope="session")
def mat_b():
    return corpus.boolean_matrix_2x1()


@pytest.fixture(scope="session")
def all_corpus():
    return corpus.standard_corpus()


@pytest.fixture(scope="session")
def ctx_z2(z2):
    return build_context(z2)


@pytest.fixture(scope="session")
def ctx_boolean(boolean):
    return build_context(boolean)


@pytest.fixture(scope="session")
def ctx_z4(z4):
    return build_context(z4)


@pytest.fixture(scope="session")
def ctx_zero_action():
    return build_context(corpus.zero_action(2))
