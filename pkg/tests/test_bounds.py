import pytest

from qha import bounds as bd
from qha import pathmod as pm
from qha.errors import TooManySimples, VNotInFinitePdClass
from qha.pathmod import INFINITE

V41 = [str(i) for i in range(3, 10)]
V42 = [str(i) for i in range(2, 10)]


def test_pd_id_sets(E41):
    assert bd.pd_set(E41, ()) == bd.id_set(E41, ()) == -1
    assert bd.pd_set(E41, V41) == bd.id_set(E41, V41) == 1
    assert bd.pd_set(E41, ["1"]) == INFINITE


def test_derived_formula():
    assert bd.derived_formula(1, 2) == 7
    assert bd.derived_formula(-1, 5) == 4
    assert bd.derived_formula(INFINITE, 0) == INFINITE


def test_bound_db(E41, E42, A2_alg):
    assert bd.bound_db(E41, V41) == 7
    assert bd.bound_db(E42, V42) == 7
    assert bd.bound_db(E42, E42.vertices) == bd.gldim(E42) == 8
    assert bd.bound_db(A2_alg, ()) == 1


def test_bound_dsg(E41, E42):
    assert bd.bound_dsg(E41, V41) == 0
    assert bd.bound_dsg(E41, ()) == 7
    with pytest.raises(VNotInFinitePdClass):
        bd.bound_dsg(E41, ["1", "3"])
    assert bd.bound_dsg(E42, V42) == 0


def test_corollary_dsg(L2_alg, E41, E42):
    assert bd.corollary_dsg(L2_alg) == 0
    assert bd.corollary_dsg(E42) == 0
    assert bd.corollary_dsg(E41) == bd.bound_dsg(E41, pm.simple_classes(E41).finite_pd)


def test_classical(E41, E42, A2_alg):
    assert bd.classical_bounds(E41) == bd.ClassicalBounds(8, INFINITE, 7)
    assert bd.classical_bounds(E42) == bd.ClassicalBounds(8, 8, 7)
    assert bd.classical_bounds(A2_alg) == bd.ClassicalBounds(1, 1, 0)


def test_report_e41(E41):
    r = bd.bound_report(E41, V41)
    assert (r.a, r.c, r.d, r.n, r.db_bound, r.dsg_bound) == (1, 1, 1, 2, 7, 0)
    assert r.db_headline == 7 and r.dsg_headline == 0


def test_report_dsg_not_applicable(E41):
    r = bd.bound_report(E41, ["1"])
    assert r.dsg_bound is None
    assert r.db_bound == INFINITE
    assert r.dsg_headline == 7


def test_optimize_e41(E41):
    res = bd.optimize_db(E41)
    assert res.value <= 7
    assert bd.bound_db(E41, res.V) == res.value
    assert bd.optimize_dsg(E41).value == 0


def test_optimize_e42(E42):
    res = bd.optimize_db(E42)
    assert res.value <= 7 and bd.bound_db(E42, res.V) == res.value
    assert bd.optimize_dsg(E42).value == 0


def test_optimize_a2_exhaustive(A2_alg):
    import itertools
    res = bd.optimize_db(A2_alg)
    every = [bd.bound_db(A2_alg, c) for k in range(3) for c in itertools.combinations(A2_alg.vertices, k)]
    assert res.value == min(every) <= 1


def test_optimize_matches_exhaustive_on_fuzz(fuzz_corpus):
    import itertools
    for alg in fuzz_corpus[:40]:
        subsets = [c for k in range(len(alg.vertices) + 1)
                   for c in itertools.combinations(alg.vertices, k)]
        assert bd.optimize_db(alg).value == min(bd.bound_db(alg, c) for c in subsets)
        fin = pm.simple_classes(alg).finite_pd
        assert bd.optimize_dsg(alg).value == min(bd.bound_dsg(alg, c) for c in subsets if set(c) <= fin)


def test_too_many_simples(E42):
    with pytest.raises(TooManySimples):
        bd.optimize_db(E42, max_simples=5)
