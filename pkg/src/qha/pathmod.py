"""Combinatorial homology of path modules over a monomial algebra.

A module here is a finite multiset of basis paths ``(p_1, ..., p_r)`` standing
for the right module ``p_1 Λ ⊕ ... ⊕ p_r Λ``. Over a monomial algebra the
syzygy of ``pΛ`` is again such a sum, which makes projective dimensions
(including infinity) exactly computable, and torsion radicals for the pair
``(T_V, F(V))`` split along generators.

Homological dimensions are ints, with ``math.inf`` for infinity and ``-1``
for the zero module / empty class.
"""
from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, NamedTuple

from .algebra import Algebra, Path, opposite

INFINITE = math.inf

HomDim = int | float  # float only ever holds math.inf
PathModuleSum = tuple  # tuple[Path, ...]


def simple_set(alg: Algebra, vertices: Iterable[str]) -> frozenset[str]:
    """Validate a set of vertex ids naming simples."""
    return frozenset(alg.check_vertex(v) for v in vertices)


def complement(alg: Algebra, V: Iterable[str]) -> frozenset[str]:
    V = simple_set(alg, V)
    return frozenset(v for v in alg.vertices if v not in V)


def ordered(alg: Algebra, V: Iterable[str]) -> list[str]:
    """Vertices of V in declared order."""
    return sorted(V, key=alg.vertex_index.__getitem__)


def projective(alg: Algebra, i: str) -> PathModuleSum:
    return (alg.trivial(i),)


def regular(alg: Algebra) -> PathModuleSum:
    return tuple(alg.trivial(i) for i in alg.vertices)


def min_annihilators(alg: Algebra, p: Path) -> list[Path]:
    """Minimal basis paths q with p*q = 0, sorted canonically.

    These are prefix-incomparable and the syzygy of pΛ is ⊕ qΛ over them.
    """
    memo = alg.memo("sigma")
    if p in memo:
        return memo[p]
    out = []
    stack = [alg.trivial(p.target)]
    while stack:
        q = stack.pop()
        for a in alg.out_arrows[q.target]:
            qa = alg.extend(q, a)
            if qa is None:
                continue
            if Path(p.source, p.arrows + qa.arrows, qa.target) in alg.basis_set:
                stack.append(qa)
            else:
                out.append(qa)
    out.sort(key=alg.path_key)
    memo[p] = out
    return out


def pd_path_module(alg: Algebra, p: Path) -> HomDim:
    """Projective dimension of pΛ.

    pd(pΛ) = 0 when σ(p) is empty, else 1 + max pd(qΛ) over q in σ(p); it is
    infinite exactly when the graph p -> σ(p) reaches a directed cycle.
    """
    memo = alg.memo("pd")
    if p in memo:
        return memo[p]
    on_stack: set[Path] = set()
    stack = [(p, iter(min_annihilators(alg, p)))]
    on_stack.add(p)
    best: dict[Path, HomDim] = {p: 0}
    while stack:
        node, children = stack[-1]
        advanced = False
        for q in children:
            if q in memo:
                val = memo[q]
            elif q in on_stack:
                val = INFINITE
            else:
                on_stack.add(q)
                best[q] = 0
                stack.append((q, iter(min_annihilators(alg, q))))
                advanced = True
                break
            best[node] = max(best[node], val + 1)
        if advanced:
            continue
        stack.pop()
        on_stack.discard(node)
        memo[node] = best[node]
        if stack:
            parent = stack[-1][0]
            best[parent] = max(best[parent], best[node] + 1)
    return memo[p]


def pd_simple(alg: Algebra, i: str) -> HomDim:
    """pd S(i): 0 at a sink, else 1 + max pd(αΛ) over arrows α out of i."""
    alg.check_vertex(i)
    arrows = alg.out_arrows[i]
    if not arrows:
        return 0
    return 1 + max(pd_path_module(alg, alg.path(a)) for a in arrows)


def id_simple(alg: Algebra, i: str) -> HomDim:
    """id S(i), computed as pd of the simple at i over the opposite algebra."""
    alg.check_vertex(i)
    return pd_simple(opposite(alg), i)


class SimpleClasses(NamedTuple):
    finite_pd: frozenset
    infinite_pd: frozenset
    finite_id: frozenset


def simple_classes(alg: Algebra) -> SimpleClasses:
    fin = frozenset(i for i in alg.vertices if pd_simple(alg, i) < INFINITE)
    fin_id = frozenset(i for i in alg.vertices if id_simple(alg, i) < INFINITE)
    return SimpleClasses(fin, frozenset(alg.vertices) - fin, fin_id)


def torsion_radical(alg: Algebra, M: PathModuleSum, V: Iterable[str]) -> PathModuleSum:
    """t_V(M) as a sum of path modules.

    A generator ending in V' spans a module with top in add V', which is
    torsion; otherwise t_V(pΛ) = t_V(rad pΛ) = ⊕ t_V(pαΛ).
    """
    V = frozenset(V)
    out = []
    stack = list(reversed(M))
    while stack:
        p = stack.pop()
        if p.target not in V:
            out.append(p)
        else:
            stack.extend(reversed([q for _, q in alg.successors(p)]))
    return tuple(out)


def radical(alg: Algebra, M: PathModuleSum) -> PathModuleSum:
    return tuple(q for p in M for _, q in alg.successors(p))


def f_tV(alg: Algebra, M: PathModuleSum, V: Iterable[str]) -> PathModuleSum:
    """F_{t_V}(M) = rad t_V(M)."""
    return radical(alg, torsion_radical(alg, M, V))


def layer_length(alg: Algebra, M: PathModuleSum, V: Iterable[str]) -> int:
    """Least i with t_V(F^i(M)) = 0."""
    V = frozenset(V)
    i = 0
    while True:
        t = torsion_radical(alg, M, V)
        if not t:
            return i
        M = radical(alg, t)
        i += 1


def layer_length_algebra(alg: Algebra, V: Iterable[str]) -> int:
    V = simple_set(alg, V)
    return max(layer_length(alg, (alg.trivial(i),), V) for i in alg.vertices)


def _height(alg: Algebra, p: Path) -> int:
    """Length of the longest nonzero path q with p*q != 0."""
    memo = alg.memo("height")
    if p not in memo:
        # basis paths extending p in order of decreasing length
        order = []
        stack = [p]
        while stack:
            q = stack.pop()
            order.append(q)
            stack.extend(r for _, r in alg.successors(q) if r not in memo)
        for q in reversed(order):
            memo[q] = max((memo[r] + 1 for _, r in alg.successors(q)), default=0)
    return memo[p]


def loewy_length(alg: Algebra, M: PathModuleSum) -> int:
    if not M:
        return 0
    return 1 + max(_height(alg, p) for p in M)


def module_basis(alg: Algebra, p: Path) -> list[Path]:
    """Nonzero paths p*q spanning pΛ."""
    out = []
    stack = [p]
    while stack:
        q = stack.pop()
        out.append(q)
        stack.extend(r for _, r in alg.successors(q))
    return out


def composition_factors(alg: Algebra, M: PathModuleSum) -> Counter:
    return Counter(q.target for p in M for q in module_basis(alg, p))


def dimension(alg: Algebra, M: PathModuleSum) -> int:
    return sum(len(module_basis(alg, p)) for p in M)
