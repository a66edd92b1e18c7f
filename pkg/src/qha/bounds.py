"""Upper bounds for the dimensions of D^b(mod Λ) and its singularity category.

For a set V of simples with d = min{pd V, id V} and n = ℓℓ^{t_V}(Λ):

* derived bound      (d+2)(n+1) - 2    (vacuous when d is infinite)
* singularity bound  max{0, n - 2}      (only for V inside S^{<∞})

together with the classical LL(Λ)-1, gldim Λ and max{0, LL(Λ)-2}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import pathmod
from .algebra import Algebra, loewy_length
from .errors import TooManySimples, VNotInFinitePdClass
from .pathmod import INFINITE, HomDim

DEFAULT_MAX_SIMPLES = 20


def pd_set(alg: Algebra, V: Iterable[str]) -> HomDim:
    V = pathmod.simple_set(alg, V)
    return max((pathmod.pd_simple(alg, i) for i in V), default=-1)


def id_set(alg: Algebra, V: Iterable[str]) -> HomDim:
    V = pathmod.simple_set(alg, V)
    return max((pathmod.id_simple(alg, i) for i in V), default=-1)


def derived_formula(d: HomDim, n: int) -> HomDim:
    if d == INFINITE:
        return INFINITE
    return (d + 2) * (n + 1) - 2


def bound_db(alg: Algebra, V: Iterable[str]) -> HomDim:
    V = pathmod.simple_set(alg, V)
    d = min(pd_set(alg, V), id_set(alg, V))
    if d == INFINITE:
        return INFINITE
    return derived_formula(d, pathmod.layer_length_algebra(alg, V))


def bound_dsg(alg: Algebra, V: Iterable[str]) -> int:
    V = pathmod.simple_set(alg, V)
    bad = [i for i in pathmod.ordered(alg, V) if pathmod.pd_simple(alg, i) == INFINITE]
    if bad:
        raise VNotInFinitePdClass(f"simples {', '.join(bad)} have infinite projective dimension")
    return max(0, pathmod.layer_length_algebra(alg, V) - 2)


def corollary_dsg(alg: Algebra) -> int:
    return bound_dsg(alg, pathmod.simple_classes(alg).finite_pd)


def gldim(alg: Algebra) -> HomDim:
    return pd_set(alg, alg.vertices)


@dataclass(frozen=True)
class ClassicalBounds:
    ll_minus_1: int
    gldim: HomDim
    ll_minus_2: int


def classical_bounds(alg: Algebra) -> ClassicalBounds:
    ll = loewy_length(alg)
    return ClassicalBounds(ll - 1, gldim(alg), max(0, ll - 2))


@dataclass(frozen=True)
class BoundReport:
    V: tuple[str, ...]
    a: HomDim
    c: HomDim
    d: HomDim
    n: int
    db_bound: HomDim
    dsg_bound: int | None  # None: V has a simple of infinite pd
    classical: ClassicalBounds

    @property
    def db_headline(self) -> HomDim:
        return min(self.db_bound, self.classical.ll_minus_1, self.classical.gldim)

    @property
    def dsg_headline(self) -> int:
        if self.dsg_bound is None:
            return self.classical.ll_minus_2
        return min(self.dsg_bound, self.classical.ll_minus_2)


def bound_report(alg: Algebra, V: Iterable[str]) -> BoundReport:
    V = pathmod.simple_set(alg, V)
    a, c = pd_set(alg, V), id_set(alg, V)
    d = min(a, c)
    n = pathmod.layer_length_algebra(alg, V)
    db = derived_formula(d, n)
    assert db >= 0
    try:
        dsg = bound_dsg(alg, V)
    except VNotInFinitePdClass:
        dsg = None
    return BoundReport(tuple(pathmod.ordered(alg, V)), a, c, d, n, db, dsg, classical_bounds(alg))


# ------------------------------------------------------------------ optimizers

@dataclass(frozen=True)
class OptimizeResult:
    V: tuple[str, ...]
    value: HomDim
    headline: HomDim  # min of value and the matching classical bounds


def _subsets_lex(items: list[int]) -> Iterator[tuple[int, ...]]:
    """All subsets of ``items`` (sorted) in lexicographic order of sorted tuples."""
    def rec(prefix, start):
        yield prefix
        for k in range(start, len(items)):
            yield from rec(prefix + (items[k],), k + 1)
    return rec((), 0)


class _LayerCache:
    """ℓℓ^{t_V}(P(i)) depends on V only through V ∩ supp P(i); cache on that."""

    def __init__(self, alg: Algebra):
        self.alg = alg
        idx = alg.vertex_index
        self.supp = [sum(1 << idx[v] for v in pathmod.composition_factors(alg, (alg.trivial(i),)))
                     for i in alg.vertices]
        self.cache: list[dict[int, int]] = [{} for _ in alg.vertices]

    def n(self, mask: int) -> int:
        best = 0
        for k, i in enumerate(self.alg.vertices):
            key = mask & self.supp[k]
            table = self.cache[k]
            val = table.get(key)
            if val is None:
                V = [v for j, v in enumerate(self.alg.vertices) if key >> j & 1]
                val = table[key] = pathmod.layer_length(self.alg, (self.alg.trivial(i),), V)
            best = max(best, val)
        return best


def _check_size(alg: Algebra, max_simples: int) -> None:
    if len(alg.vertices) > max_simples:
        raise TooManySimples(f"{len(alg.vertices)} simples exceed the limit of {max_simples}")


def optimize_db(alg: Algebra, max_simples: int = DEFAULT_MAX_SIMPLES) -> OptimizeResult:
    """Exact minimum of the derived bound over all subsets V.

    Ties go to the lexicographically smallest V (as a tuple of vertex
    positions). The only shortcut skips computing n when the bound cannot
    beat the incumbent even with n = 0.
    """
    _check_size(alg, max_simples)
    verts = alg.vertices
    pd = [pathmod.pd_simple(alg, v) for v in verts]
    idd = [pathmod.id_simple(alg, v) for v in verts]
    layers = _LayerCache(alg)
    best_V: tuple[int, ...] | None = None
    best: HomDim = INFINITE
    for S in _subsets_lex(list(range(len(verts)))):
        d = min(max((pd[k] for k in S), default=-1), max((idd[k] for k in S), default=-1))
        if best_V is not None and derived_formula(d, 0) >= best:
            continue
        mask = sum(1 << k for k in S)
        value = derived_formula(d, layers.n(mask))
        if best_V is None or value < best:
            best_V, best = S, value
    cl = classical_bounds(alg)
    return OptimizeResult(tuple(verts[k] for k in best_V), best,
                          min(best, cl.ll_minus_1, cl.gldim))


def optimize_dsg(alg: Algebra, max_simples: int = DEFAULT_MAX_SIMPLES) -> OptimizeResult:
    """Exact minimum of the singularity bound over V inside S^{<∞}.

    Subsets are visited in lexicographic order and the bound is never below
    0, so the first V reaching 0 is the answer.
    """
    _check_size(alg, max_simples)
    verts = alg.vertices
    finite = [k for k, v in enumerate(verts) if pathmod.pd_simple(alg, v) < INFINITE]
    layers = _LayerCache(alg)
    best_V: tuple[int, ...] | None = None
    best = INFINITE
    for S in _subsets_lex(finite):
        value = max(0, layers.n(sum(1 << k for k in S)) - 2)
        if best_V is None or value < best:
            best_V, best = S, value
            if best == 0:
                break
    cl = classical_bounds(alg)
    return OptimizeResult(tuple(verts[k] for k in best_V), best, min(best, cl.ll_minus_2))
