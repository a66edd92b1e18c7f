import pytest
from hypothesis import given, settings, strategies as st

from qha.algebra import Path, build, loewy_length, multiply, opposite, paths_from, paths_to
from qha.errors import BasisLimitExceeded, InfiniteDimensional, NotComposable, UnknownVertex
from qha.families import generate
from qha.fuzz import random_presentation
from qha.presentation import load

from conftest import algebra


def test_l2_basis(L2_alg):
    assert [str(p) for p in L2_alg.basis] == ["e1", "x"]
    assert L2_alg.dimension == 2


def test_free_loop_is_infinite():
    with pytest.raises(InfiniteDimensional):
        algebra("vertices 1\narrow x 1 1\n")


def test_cycle_without_killing_relation_is_infinite():
    with pytest.raises(InfiniteDimensional):
        algebra("vertices 1 2 3\narrow a 1 2\narrow b 2 1\narrow c 2 3\nrelation a c\n")


def test_long_relation_on_cycle_is_finite():
    # every path of length 5 around the 2-cycle contains a b a b a or b a b a b
    alg = algebra("vertices 1 2\narrow a 1 2\narrow b 2 1\nrelation a b a b a\nrelation b a b a b\n")
    assert loewy_length(alg) == 5


def test_two_cycle_with_relations_is_finite():
    alg = algebra("vertices 1 2\narrow a 1 2\narrow b 2 1\nrelation a b\nrelation b a\n")
    assert alg.dimension == 4


def test_n3_basis(N3_alg):
    assert sorted(str(p) for p in N3_alg.basis) == ["a", "b", "e1", "e2", "e3"]


def test_basis_limit():
    with pytest.raises(BasisLimitExceeded):
        build(load(generate("example41", 10)), basis_limit=20)


def test_multiply(A2_alg, N3_alg, L2_alg):
    assert multiply(A2_alg, A2_alg.trivial("1"), A2_alg.path("a")) == A2_alg.path("a")
    assert multiply(N3_alg, N3_alg.path("a"), N3_alg.path("b")) is None
    assert multiply(L2_alg, L2_alg.path("x"), L2_alg.path("x")) is None


def test_multiply_not_composable(N3_alg):
    with pytest.raises(NotComposable):
        multiply(N3_alg, N3_alg.path("b"), N3_alg.path("a"))


def test_loewy_lengths(L2_alg):
    assert loewy_length(L2_alg) == 2
    for m in (10, 11, 12):
        assert loewy_length(algebra(generate("example41", m))) == m - 1
    for m in (9, 10, 11):
        assert loewy_length(algebra(generate("example42", m))) == m


def test_opposite_a2(A2_alg):
    op = opposite(A2_alg)
    a = op.arrows["a"]
    assert (a.source, a.target) == ("2", "1")
    assert opposite(op) is A2_alg


def test_opposite_n3(N3_alg):
    op = opposite(N3_alg)
    assert op.relations == (("b", "a"),)
    assert op.dimension == 5
    assert build(op.presentation).dimension == 5


def test_paths_from_to(N3_alg, E41):
    assert [str(p) for p in paths_from(N3_alg, "1")] == ["e1", "a"]
    assert [str(p) for p in paths_to(N3_alg, "3")] == ["e3", "b"]
    assert len(paths_from(E41, "1")) == 12


def test_unknown_vertex(N3_alg):
    with pytest.raises(UnknownVertex):
        paths_from(N3_alg, "9")


def test_path_str():
    assert str(Path("1", (), "1")) == "e1"
    assert str(Path("1", ("a", "b"), "3")) == "a b"


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_basis_is_subword_closed_and_relation_free(seed):
    import random
    p = random_presentation(random.Random(seed))
    try:
        alg = build(p, basis_limit=500)
    except (InfiniteDimensional, BasisLimitExceeded):
        return
    for q in alg.basis:
        for k in range(q.length):
            for j in range(k + 1, q.length + 1):
                assert alg.is_nonzero(alg.path(*q.arrows[k:j]))
        for rel in alg.relations:
            assert all(q.arrows[k:k + len(rel)] != rel for k in range(q.length))
    assert opposite(alg).dimension == alg.dimension
    assert loewy_length(opposite(alg)) == loewy_length(alg)
