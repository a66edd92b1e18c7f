"""Exact rational representations of a bound quiver, independent of pathmod.

A right module M is a vector space M_i per vertex and, per arrow a: i -> j, a
matrix of shape dim M_i x dim M_j acting on row vectors. Submodules are
handled as per-vertex :class:`~qha.linalg.Subspace` families inside an
ambient representation, and only turned into standalone :class:`Rep`
objects (with an inclusion morphism) at the API boundary.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import Algebra, Path, opposite
from .errors import LiftFailure, Undecided
from .linalg import ONE, Matrix, Subspace, Vec, axpy, is_invertible, left_kernel, nullspace, vecmat

Family = dict  # dict[vertex, Subspace]


@dataclass(eq=False)
class Rep:
    alg: Algebra
    dims: dict
    maps: dict

    def __post_init__(self):
        for v in self.alg.vertices:
            self.dims.setdefault(v, 0)
        for name, a in self.alg.arrows.items():
            if name not in self.maps:
                self.maps[name] = Matrix.zero(self.dims[a.source], self.dims[a.target])
            A = self.maps[name]
            if A.nrows != self.dims[a.source] or A.ncols != self.dims[a.target]:
                raise ValueError(f"arrow {name}: matrix shape {A.nrows}x{A.ncols} does not match "
                                 f"dimensions {self.dims[a.source]}x{self.dims[a.target]}")
        for rel in self.alg.relations:
            if not self.act(Matrix.identity(self.dims[self.alg.arrows[rel[0]].source]), rel).is_zero():
                raise ValueError(f"relation {' '.join(rel)} does not act as zero")

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.alg.vertices)

    def act(self, X: Matrix, arrows: Iterable[str]) -> Matrix:
        """Rows of X (vectors at the start vertex) moved along ``arrows``."""
        for a in arrows:
            X = X @ self.maps[a]
        return X

    def is_zero(self) -> bool:
        return self.dim == 0

    def full(self) -> Family:
        return {v: Subspace.full(self.dims[v]) for v in self.alg.vertices}

    def zero_family(self) -> Family:
        return {v: Subspace(self.dims[v]) for v in self.alg.vertices}


@dataclass(eq=False)
class RepMorphism:
    domain: Rep
    codomain: Rep
    mats: dict

    def __post_init__(self):
        for v in self.domain.alg.vertices:
            self.mats.setdefault(v, Matrix.zero(self.domain.dims[v], self.codomain.dims[v]))
        for name, a in self.domain.alg.arrows.items():
            lhs = self.domain.maps[name] @ self.mats[a.target]
            rhs = self.mats[a.source] @ self.codomain.maps[name]
            if lhs != rhs:
                raise ValueError(f"morphism does not commute with arrow {name}")

    def is_mono(self) -> bool:
        return all(self.mats[v].rank() == self.domain.dims[v] for v in self.domain.alg.vertices)

    def is_epi(self) -> bool:
        return all(self.mats[v].rank() == self.codomain.dims[v] for v in self.domain.alg.vertices)

    def is_iso(self) -> bool:
        return all(is_invertible(self.mats[v]) for v in self.domain.alg.vertices)

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        """Composite: first self, then other."""
        return RepMorphism(self.domain, other.codomain,
                           {v: self.mats[v] @ other.mats[v] for v in self.domain.alg.vertices})


def identity(M: Rep) -> RepMorphism:
    return RepMorphism(M, M, {v: Matrix.identity(M.dims[v]) for v in M.alg.vertices})


def zero_morphism(M: Rep, N: Rep) -> RepMorphism:
    return RepMorphism(M, N, {})


def zero_rep(alg: Algebra) -> Rep:
    return Rep(alg, {}, {})


# ---------------------------------------------------------------- constructions

def _path_rep(alg: Algebra, paths: list[Path], move) -> tuple[Rep, dict]:
    """Rep with basis ``paths`` placed at vertex ``key(p)``; ``move(p, a)`` is p.a or None."""
    index: dict[Path, tuple[str, int]] = {}
    dims: Counter = Counter()
    for p, v in paths:
        index[p] = (v, dims[v])
        dims[v] += 1
    rows = {name: [{} for _ in range(dims[a.source])] for name, a in alg.arrows.items()}
    for p, (v, k) in index.items():
        for name in alg.out_arrows[v]:
            q = move(p, name)
            if q is not None and q in index:
                rows[name][k][index[q][1]] = ONE
    maps = {name: Matrix(rows[name], dims[a.target]) for name, a in alg.arrows.items()}
    return Rep(alg, dict(dims), maps), index


def projective_rep(alg: Algebra, i: str) -> Rep:
    """P(i) = e_i Λ with basis paths_from(i); arrows append on the right."""
    paths = [(p, p.target) for p in alg.paths_from(i)]
    return _path_rep(alg, paths, alg.extend)[0]


def injective_rep(alg: Algebra, i: str) -> Rep:
    """I(i) = D(Λ e_i): dual basis p* of paths ending at i, sitting at source(p).

    p*.a = (p')* when p = a p', else 0.
    """
    paths = [(p, p.source) for p in alg.paths_to(i)]

    def move(p: Path, a: str):
        if p.arrows and p.arrows[0] == a:
            return Path(alg.arrows[a].target, p.arrows[1:], p.target)
        return None

    return _path_rep(alg, paths, move)[0]


def simple_rep(alg: Algebra, i: str) -> Rep:
    alg.check_vertex(i)
    return Rep(alg, {i: 1}, {})


def direct_sum(alg: Algebra, reps: Iterable[Rep]) -> Rep:
    reps = list(reps)
    dims = {v: sum(M.dims[v] for M in reps) for v in alg.vertices}
    maps = {}
    for name, a in alg.arrows.items():
        rows: list = []
        off = 0
        for M in reps:
            rows.extend({c + off: x for c, x in r.items()} for r in M.maps[name].rows)
            off += M.dims[a.target]
        maps[name] = Matrix(rows, dims[a.target])
    return Rep(alg, dims, maps)


def regular_rep(alg: Algebra) -> Rep:
    return direct_sum(alg, (projective_rep(alg, i) for i in alg.vertices))


def coregular_rep(alg: Algebra) -> Rep:
    return direct_sum(alg, (injective_rep(alg, i) for i in alg.vertices))


# ------------------------------------------------------- subspace families of M

def family_dim(F: Family) -> int:
    return sum(s.dim for s in F.values())


def radical_family(M: Rep, F: Family) -> Family:
    """rad of the submodule F: images of F under all arrows."""
    out = M.zero_family()
    for name, a in M.alg.arrows.items():
        A = M.maps[name]
        for b in F[a.source].basis():
            out[a.target].add(vecmat(b, A))
    return out


def generated_family(M: Rep, gens: dict) -> Family:
    """Smallest submodule containing the given vectors (vertex -> list of vectors)."""
    out = M.zero_family()
    todo = [(v, g) for v, vecs in gens.items() for g in vecs]
    while todo:
        v, g = todo.pop()
        if out[v].add(g):
            for name in M.alg.out_arrows[v]:
                w = vecmat(g, M.maps[name])
                if w:
                    todo.append((M.alg.arrows[name].target, w))
    return out


def torsion_family(M: Rep, F: Family, V: frozenset) -> Family:
    """t_V of the submodule F, by peeling V-parts off the top until none is left."""
    K = dict(F)
    while True:
        R = radical_family(M, K)
        if all(R[v].dim == K[v].dim for v in V):
            return K
        for v in V:
            K[v] = R[v]


def subrep(M: Rep, F: Family) -> tuple[Rep, RepMorphism]:
    alg = M.alg
    dims = {v: F[v].dim for v in alg.vertices}
    maps = {}
    for name, a in alg.arrows.items():
        A = M.maps[name]
        tgt = F[a.target]
        maps[name] = Matrix([tgt.coords(vecmat(b, A)) for b in F[a.source].basis()], dims[a.target])
    S = Rep(alg, dims, maps)
    inc = RepMorphism(S, M, {v: Matrix(F[v].basis(), M.dims[v]) for v in alg.vertices})
    return S, inc


def quotient(M: Rep, F: Family) -> tuple[Rep, RepMorphism]:
    """M/F with basis the images of the standard vectors off the pivot columns of F."""
    alg = M.alg
    comp = {v: F[v].complement_columns() for v in alg.vertices}
    pos = {v: {c: k for k, c in enumerate(comp[v])} for v in alg.vertices}

    def proj(v, x: Vec) -> Vec:
        r = F[v].reduce(x)
        return {pos[v][c]: y for c, y in r.items()}

    dims = {v: len(comp[v]) for v in alg.vertices}
    maps = {}
    for name, a in alg.arrows.items():
        A = M.maps[name]
        maps[name] = Matrix([proj(a.target, A.rows[c]) for c in comp[a.source]], dims[a.target])
    Q = Rep(alg, dims, maps)
    pi = RepMorphism(M, Q, {v: Matrix([proj(v, {k: ONE}) for k in range(M.dims[v])], dims[v])
                            for v in alg.vertices})
    return Q, pi


# -------------------------------------------------------------------- operations

def radical(M: Rep) -> tuple[Rep, RepMorphism]:
    return subrep(M, radical_family(M, M.full()))


def top(M: Rep) -> tuple[Counter, RepMorphism]:
    Q, pi = quotient(M, radical_family(M, M.full()))
    return Counter({v: d for v, d in Q.dims.items() if d}), pi


def socle(M: Rep) -> Rep:
    fam = {}
    for v in M.alg.vertices:
        outs = M.alg.out_arrows[v]
        if outs:
            # kernel of v -> (v.A_1, ..., v.A_k)
            stacked: list = [{} for _ in range(M.dims[v])]
            off = 0
            for name in outs:
                A = M.maps[name]
                for r, row in zip(stacked, A.rows):
                    r.update({c + off: x for c, x in row.items()})
                off += A.ncols
            fam[v] = Subspace.span(left_kernel(Matrix(stacked, off)), M.dims[v])
        else:
            fam[v] = Subspace.full(M.dims[v])
    return subrep(M, fam)[0]


def kernel(f: RepMorphism) -> tuple[Rep, RepMorphism]:
    M = f.domain
    fam = {v: Subspace.span(left_kernel(f.mats[v]), M.dims[v]) for v in M.alg.vertices}
    return subrep(M, fam)


def image_family(f: RepMorphism) -> Family:
    return {v: Subspace.span(f.mats[v].rows, f.codomain.dims[v]) for v in f.domain.alg.vertices}


def image(f: RepMorphism) -> tuple[Rep, RepMorphism]:
    return subrep(f.codomain, image_family(f))


def cokernel(f: RepMorphism) -> tuple[Rep, RepMorphism]:
    return quotient(f.codomain, image_family(f))


def projective_cover(M: Rep) -> RepMorphism:
    """P(M) ->> M, sending the generator of each P(i) summand to a lift of a top basis vector."""
    alg = M.alg
    rad = radical_family(M, M.full())
    gens = [(v, c) for v in alg.vertices for c in rad[v].complement_columns()]
    P = direct_sum(alg, (projective_rep(alg, v) for v, _ in gens))
    rows: dict = {v: [] for v in alg.vertices}
    for v, c in gens:
        # images of the basis paths from v, in the order projective_rep uses
        images: dict[Path, Vec] = {alg.trivial(v): {c: ONE}}
        for p in alg.paths_from(v):
            if p.arrows:
                prefix = Path(p.source, p.arrows[:-1], alg.arrows[p.arrows[-1]].source)
                images[p] = vecmat(images[prefix], M.maps[p.arrows[-1]])
            rows[p.target].append(images[p])
    f = RepMorphism(P, M, {v: Matrix(rows[v], M.dims[v]) for v in alg.vertices})
    if not f.is_epi():
        raise LiftFailure("lifted top does not generate the module")
    return f


def is_projective(M: Rep) -> bool:
    return projective_cover(M).domain.dim == M.dim


def syzygy(M: Rep, m: int = 1) -> Rep:
    for _ in range(m):
        if M.is_zero():
            break
        M = kernel(projective_cover(M))[0]
    return M


@dataclass(frozen=True)
class AtLeast:
    """pd undecided up to the cutoff: pd >= bound (possibly infinite)."""
    bound: int


def pd_bounded(M: Rep, cutoff: int | None = None) -> int | AtLeast:
    """Least d <= cutoff with Ω^d(M) projective, else AtLeast(cutoff).

    The zero module has pd -1. Default cutoff is 2 dim Λ.
    """
    if cutoff is None:
        cutoff = 2 * M.alg.dimension
    if M.is_zero():
        return -1
    for d in range(cutoff + 1):
        cover = projective_cover(M)
        if cover.domain.dim == M.dim:
            return d
        if d == cutoff:
            break
        M = kernel(cover)[0]
    return AtLeast(cutoff)


def pd_simple_bounded(alg: Algebra, i: str, cutoff: int | None = None) -> int | AtLeast:
    return pd_bounded(simple_rep(alg, i), cutoff)


def id_simple_bounded(alg: Algebra, i: str, cutoff: int | None = None) -> int | AtLeast:
    """id S(i) via the simple at i over the opposite algebra."""
    return pd_bounded(simple_rep(opposite(alg), i), cutoff)


def torsion_radical(M: Rep, V: Iterable[str]) -> tuple[Rep, RepMorphism]:
    return subrep(M, torsion_family(M, M.full(), frozenset(V)))


def q_tV(M: Rep, V: Iterable[str]) -> Rep:
    return quotient(M, torsion_family(M, M.full(), frozenset(V)))[0]


def f_tV(M: Rep, V: Iterable[str]) -> Rep:
    return subrep(M, radical_family(M, torsion_family(M, M.full(), frozenset(V))))[0]


def layer_length(M: Rep, V: Iterable[str]) -> int:
    V = frozenset(V)
    X = M.full()
    i = 0
    while True:
        T = torsion_family(M, X, V)
        if family_dim(T) == 0:
            return i
        X = radical_family(M, T)
        i += 1


def loewy_length(M: Rep) -> int:
    X = M.full()
    i = 0
    while family_dim(X):
        X = radical_family(M, X)
        i += 1
    return i


def composition_factors(M: Rep) -> Counter:
    return Counter({v: d for v, d in M.dims.items() if d})


def in_FV(M: Rep, V: Iterable[str]) -> bool:
    V = frozenset(V)
    return all(d == 0 for v, d in M.dims.items() if v not in V)


def induced_torsion_map(f: RepMorphism, V: Iterable[str]) -> RepMorphism:
    """t_V(f): t_V(M) -> t_V(N), the restriction of f."""
    V = frozenset(V)
    M, N = f.domain, f.codomain
    TM = torsion_family(M, M.full(), V)
    TN = torsion_family(N, N.full(), V)
    src, _ = subrep(M, TM)
    dst, _ = subrep(N, TN)
    mats = {}
    for v in M.alg.vertices:
        mats[v] = Matrix([TN[v].coords(vecmat(b, f.mats[v])) for b in TM[v].basis()], dst.dims[v])
    return RepMorphism(src, dst, mats)


# ------------------------------------------------------------ hom and isomorphism

def hom_space(M: Rep, N: Rep) -> list[RepMorphism]:
    alg = M.alg
    offset = {}
    n = 0
    for v in alg.vertices:
        offset[v] = n
        n += M.dims[v] * N.dims[v]

    def var(v, r, c):
        return offset[v] + r * N.dims[v] + c

    eqs = []
    for name, a in alg.arrows.items():
        i, j = a.source, a.target
        A, B = M.maps[name], N.maps[name]
        # (A F_j - F_i B)[r, c] = 0
        for r in range(M.dims[i]):
            for c in range(N.dims[j]):
                eq: Vec = {}
                for k, x in A.rows[r].items():
                    eq[var(j, k, c)] = eq.get(var(j, k, c), 0) + x
                for k in range(N.dims[i]):
                    y = B.rows[k].get(c)
                    if y:
                        key = var(i, r, k)
                        eq[key] = eq.get(key, 0) - y
                eq = {k: x for k, x in eq.items() if x}
                if eq:
                    eqs.append(eq)
    out = []
    for x in nullspace(Matrix(eqs, n)):
        mats = {}
        for v in alg.vertices:
            rows = []
            for r in range(M.dims[v]):
                rows.append({c: x[var(v, r, c)] for c in range(N.dims[v]) if var(v, r, c) in x})
            mats[v] = Matrix(rows, N.dims[v])
        out.append(RepMorphism(M, N, mats))
    return out


def _combine(basis: list[RepMorphism], coeffs) -> RepMorphism:
    M, N = basis[0].domain, basis[0].codomain
    mats = {}
    for v in M.alg.vertices:
        rows = [{} for _ in range(M.dims[v])]
        for h, a in zip(basis, coeffs):
            if a:
                for r, hr in zip(rows, h.mats[v].rows):
                    axpy(r, a, hr)
        mats[v] = Matrix(rows, N.dims[v])
    return RepMorphism(M, N, mats)


def is_isomorphic(M: Rep, N: Rep, budget: int = 64, seed: int = 0) -> bool:
    """Search the hom space for an invertible element.

    Tries each basis element, then seeded random integer combinations. Raises
    Undecided when the budget runs out and no obstruction was found either.
    """
    if M.dim_vector() != N.dim_vector():
        return False
    if M.is_zero():
        return True
    H = hom_space(M, N)
    if not H:
        return False
    rng = random.Random(seed)
    trials = [[int(k == j) for k in range(len(H))] for j in range(len(H))]
    while len(trials) < budget:
        trials.append([Fraction(rng.randint(-9, 9)) for _ in H])
    for coeffs in trials[:max(budget, 1)]:
        if _combine(H, coeffs).is_iso():
            return True
    # iso forces Hom(M, N) ~ End(N) ~ Hom(N, M) as vector spaces
    if len(H) != len(hom_space(N, N)) or len(H) != len(hom_space(N, M)):
        return False
    raise Undecided(f"no invertible morphism among {budget} candidates")
