"""Seeded random monomial algebras, modules and short exact sequences."""
from __future__ import annotations

import random
import warnings
from fractions import Fraction

from . import linrep
from .algebra import Algebra, build
from .errors import BasisLimitExceeded, InfiniteDimensional, RedundantRelationRemoved
from .presentation import Arrow, Presentation, Quiver, validate


def _on_cycle(a: Arrow, out: dict) -> bool:
    seen, todo = set(), [a.target]
    while todo:
        v = todo.pop()
        if v == a.source:
            return True
        if v not in seen:
            seen.add(v)
            todo.extend(b.target for b in out[v])
    return False


def random_presentation(rng: random.Random, max_vertices=5, max_arrows=8, max_relations=4,
                        rel_lengths=(2, 3)) -> Presentation:
    nv = rng.randint(1, max_vertices)
    verts = [str(k) for k in range(1, nv + 1)]
    na = rng.randint(1, max_arrows)
    arrows = []
    for k in range(na):
        arrows.append(Arrow(f"x{k}", rng.choice(verts), rng.choice(verts)))
    out = {v: [a for a in arrows if a.source == v] for v in verts}
    rels = []
    # relations along cycles keep the rejection rate (and hereditary share) down
    cyclic = [a for a in arrows if _on_cycle(a, out)]
    for _ in range(rng.randint(1, max_relations)):
        L = rng.choice(rel_lengths)
        word = [rng.choice(cyclic if cyclic and rng.random() < 0.8 else arrows)]
        while len(word) < L and out[word[-1].target]:
            word.append(rng.choice(out[word[-1].target]))
        if len(word) >= 2:
            rels.append(tuple(a.name for a in word))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RedundantRelationRemoved)
        return validate(Presentation(Quiver(tuple(verts), tuple(arrows)), tuple(rels)))


def random_algebra(rng: random.Random, max_dim: int = 200, **kw) -> Algebra:
    """Rejection-sample until the algebra is finite-dimensional (and not huge)."""
    while True:
        p = random_presentation(rng, **kw)
        try:
            return build(p, basis_limit=max_dim)
        except (InfiniteDimensional, BasisLimitExceeded):
            continue


def algebra_corpus(seed: int, count: int, **kw) -> list[Algebra]:
    rng = random.Random(seed)
    return [random_algebra(rng, **kw) for _ in range(count)]


def random_subset(rng: random.Random, alg: Algebra) -> frozenset[str]:
    return frozenset(v for v in alg.vertices if rng.random() < 0.5)


def _random_vector(rng: random.Random, n: int) -> dict:
    v = {}
    for k in range(n):
        if rng.random() < 0.6:
            x = rng.randint(-3, 3)
            if x:
                v[k] = Fraction(x)
    if not v and n:
        v[rng.randrange(n)] = Fraction(1)
    return v


def _ambient(rng: random.Random, alg: Algebra) -> linrep.Rep:
    pieces = []
    for _ in range(rng.randint(1, 2)):
        v = rng.choice(alg.vertices)
        make = rng.choice((linrep.projective_rep, linrep.injective_rep, linrep.simple_rep))
        pieces.append(make(alg, v))
    return linrep.direct_sum(alg, pieces)


def random_family(rng: random.Random, M: linrep.Rep, ngens: int | None = None):
    """A submodule of M generated by a few random homogeneous vectors."""
    support = [v for v in M.alg.vertices if M.dims[v]]
    if not support:
        return M.zero_family()
    gens: dict = {}
    for _ in range(ngens if ngens is not None else rng.randint(1, 2)):
        v = rng.choice(support)
        gens.setdefault(v, []).append(_random_vector(rng, M.dims[v]))
    return linrep.generated_family(M, gens)


def random_rep(rng: random.Random, alg: Algebra) -> linrep.Rep:
    """A submodule or quotient of a small sum of projectives, injectives and simples."""
    M = _ambient(rng, alg)
    F = random_family(rng, M)
    kind = rng.random()
    if kind < 0.4:
        return linrep.subrep(M, F)[0]
    if kind < 0.8:
        return linrep.quotient(M, F)[0]
    return M


def random_mono(rng: random.Random, alg: Algebra) -> linrep.RepMorphism:
    M = random_rep(rng, alg)
    return linrep.subrep(M, random_family(rng, M))[1]


def random_epi(rng: random.Random, alg: Algebra) -> linrep.RepMorphism:
    M = random_rep(rng, alg)
    return linrep.quotient(M, random_family(rng, M))[1]


def random_ses(rng: random.Random, alg: Algebra):
    """0 -> K -> M -> Q -> 0 as (inclusion, projection)."""
    M = random_rep(rng, alg)
    F = random_family(rng, M)
    return linrep.subrep(M, F)[1], linrep.quotient(M, F)[1]


def random_path_sum(rng: random.Random, alg: Algebra, max_gens: int = 3) -> tuple:
    return tuple(rng.choice(alg.basis) for _ in range(rng.randint(0, max_gens)))


def family_is_submodule(M: linrep.Rep, F: dict) -> bool:
    rad = linrep.radical_family(M, F)
    return all(rad[v] <= F[v] for v in M.alg.vertices)

