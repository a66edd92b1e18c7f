import pytest

from qha.algebra import build
from qha.families import generate
from qha.fuzz import algebra_corpus
from qha.presentation import load

A2 = "vertices 1 2\narrow a 1 2\n"
L2 = "vertices 1\narrow x 1 1\nrelation x x\n"
N3 = "vertices 1 2 3\narrow a 1 2\narrow b 2 3\nrelation a b\n"

FUZZ_SEED = 2024
FUZZ_COUNT = 200


def algebra(text):
    return build(load(text))


@pytest.fixture
def A2_alg():
    return algebra(A2)


@pytest.fixture
def L2_alg():
    return algebra(L2)


@pytest.fixture
def N3_alg():
    return algebra(N3)


@pytest.fixture(scope="session")
def E41():
    return algebra(generate("example41", 10))


@pytest.fixture(scope="session")
def E42():
    return algebra(generate("example42", 9))


@pytest.fixture(scope="session")
def fuzz_corpus():
    # at most 5 vertices, 8 arrows, 4 relations of length 2-3
    return algebra_corpus(FUZZ_SEED, FUZZ_COUNT)


@pytest.fixture
def write(tmp_path):
    def _write(text, name="alg.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
