"""Acceptance criteria 1-8.

Each test prints one PASS/FAIL line, asserts exact integer equality and
fails if the criterion takes 10 seconds or more. Run alone with

    pytest tests/test_acceptance.py -v
"""
import contextlib
import random
import time

import pytest

from qha import bounds as bd
from qha import checks, linrep
from qha import pathmod as pm
from qha.algebra import loewy_length
from qha.families import generate
from qha.fuzz import algebra_corpus
from qha.pathmod import INFINITE

from conftest import A2, FUZZ_COUNT, FUZZ_SEED, L2, N3, algebra

TIME_LIMIT = 10.0
INF = INFINITE


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(number, title):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            ok = ok and elapsed < TIME_LIMIT
            with capsys.disabled():
                print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s)")
        assert elapsed < TIME_LIMIT, f"criterion {number} took {elapsed:.2f}s"
    return run


def corpus():
    return [algebra(generate("example41", 10)), algebra(generate("example42", 9)),
            algebra(A2), algebra(L2), algebra(N3)]


def assert_no_violations(violations):
    assert violations == [], "\n".join(violations[:20])


def test_criterion_1_example41(criterion):
    with criterion(1, "first example family, m = 10, 11, 12"):
        for m in (10, 11, 12):
            alg = algebra(generate("example41", m))
            v = [str(i) for i in range(1, m + 3)]
            pd = {i: pm.pd_simple(alg, i) for i in v}
            idd = {i: pm.id_simple(alg, i) for i in v}
            assert pd == {i: INF if k == 1 else 1 if k <= m - 1 else 0
                          for k, i in enumerate(v, start=1)}
            assert idd == {i: 1 if 3 <= k <= m - 1 else INF for k, i in enumerate(v, start=1)}
            V = [str(i) for i in range(3, m)]
            r = bd.bound_report(alg, V)
            assert (r.a, r.c, r.d) == (1, 1, 1)
            ll = [pm.layer_length(alg, pm.projective(alg, i), V) for i in v]
            assert ll == [2, 2] + [1] * m
            assert (r.n, r.db_bound, r.dsg_bound) == (2, 7, 0)
            assert r.classical == bd.ClassicalBounds(m - 2, INF, m - 3)


def test_criterion_2_example42(criterion):
    with criterion(2, "second example family, m = 9, 10, 11"):
        for m in (9, 10, 11):
            alg = algebra(generate("example42", m))
            ks = range(1, 2 * m)
            pd = [pm.pd_simple(alg, str(k)) for k in ks]
            idd = [pm.id_simple(alg, str(k)) for k in ks]
            assert pd == [m - 1 if k == 1 else 1 if k <= m - 1 else 0 if k == m else 2 * m - 1 - k
                          for k in ks]
            assert idd == [0 if k == 1 else 1 if k <= m else k - m for k in ks]
            assert bd.gldim(alg) == m - 1
            assert loewy_length(alg) == m
            r = bd.bound_report(alg, [str(i) for i in range(2, m + 1)])
            assert (r.d, r.n, r.db_bound, r.dsg_bound) == (1, 2, 7, 0)
            assert r.classical == bd.ClassicalBounds(m - 1, m - 1, m - 2)


def test_criterion_3_classical_recovery(criterion):
    with criterion(3, "classical bounds recovered at V = empty and V = S"):
        for alg in corpus():
            assert bd.bound_db(alg, ()) == loewy_length(alg) - 1
            if bd.gldim(alg) < INF:
                assert bd.bound_db(alg, alg.vertices) == bd.gldim(alg)
                assert pm.layer_length_algebra(alg, alg.vertices) == 0
            assert_no_violations(checks.recovery(alg))


def test_criterion_4_finite_pd_class(criterion):
    with criterion(4, "layer length over the finite-pd simples is never 1, 0 iff gldim finite"):
        algs = corpus() + algebra_corpus(FUZZ_SEED, FUZZ_COUNT)
        assert len(algs) == 5 + FUZZ_COUNT
        for alg in algs:
            assert_no_violations(checks.finite_pd_class_layer(alg))


def test_criterion_5_cross_engine(criterion, fuzz_corpus):
    with criterion(5, "pathmod and linrep agree on pd, id, layer length and Loewy length"):
        for k, alg in enumerate(fuzz_corpus):
            assert loewy_length(alg) == linrep.loewy_length(linrep.regular_rep(alg))
            assert_no_violations(checks.cross_engine_dims(alg))
            assert_no_violations(checks.cross_engine_layers(alg, random.Random(k), nV=10))


def test_criterion_6_layer_length_of_algebra(criterion, fuzz_corpus):
    with criterion(6, "layer length of the algebra equals that of its dual and bounds every module"):
        for k, alg in enumerate(fuzz_corpus):
            rng = random.Random(k)
            assert_no_violations(checks.duality_layers(alg, rng, nV=10))
            assert_no_violations(checks.layer_bound(alg, rng, cases=20))


def test_criterion_7_torsion_pair_axioms(criterion, fuzz_corpus):
    with criterion(7, "torsion pair axioms, shift identity and syzygy drop"):
        for k, alg in enumerate(fuzz_corpus):
            assert_no_violations(checks.torsion_axioms(alg, random.Random(k), cases=20))


def test_criterion_8_optimizers(criterion):
    with criterion(8, "optimizers return consistent bounds on both examples"):
        for alg in (algebra(generate("example41", 10)), algebra(generate("example42", 9))):
            res = bd.optimize_db(alg)
            assert res.value <= 7
            assert bd.bound_db(alg, res.V) == res.value
            assert bd.optimize_dsg(alg).value == 0
