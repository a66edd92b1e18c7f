"""Invariant and cross-engine checks, shared by ``qha check`` and the test suite.

Every check takes an algebra (plus an rng where it fuzzes) and returns a list
of human-readable violation strings; an empty list means the property held.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import bounds, linrep, pathmod
from .algebra import Algebra, loewy_length, opposite
from .fuzz import random_epi, random_mono, random_path_sum, random_rep, random_ses, random_subset
from .pathmod import INFINITE

# pd of an infinite-pd simple is only probed this far by the oracle
INFINITE_PROBE = 6


def _fmt(V) -> str:
    return "{" + ",".join(sorted(V)) + "}"


def algebra_invariants(alg: Algebra) -> list[str]:
    out = []
    for p in alg.basis:
        for k in range(p.length + 1):
            for j in range(k + 1, p.length + 1):
                w = p.arrows[k:j]
                if alg.path(*w) not in alg.basis_set:
                    out.append(f"subword closure: {' '.join(w)} of {p} is not a basis path")
    for rel in alg.relations:
        if any(p.arrows[k:k + len(rel)] == rel for p in alg.basis for k in range(p.length)):
            out.append(f"basis path contains relation {' '.join(rel)}")
    n_from = sum(len(alg.paths_from(v)) for v in alg.vertices)
    n_to = sum(len(alg.paths_to(v)) for v in alg.vertices)
    if not n_from == n_to == alg.dimension:
        out.append(f"path counts {n_from}/{n_to} differ from dim {alg.dimension}")
    if loewy_length(alg) != loewy_length(opposite(alg)):
        out.append("LL(Λ) != LL(Λ^op)")
    return out


def sigma_contract(alg: Algebra) -> list[str]:
    out = []
    for p in alg.basis:
        sig = pathmod.min_annihilators(alg, p)
        for a in sig:
            for b in sig:
                if a != b and b.arrows[:a.length] == a.arrows:
                    out.append(f"σ({p}): {a} is a prefix of {b}")
        lhs = pathmod.dimension(alg, (p,)) + pathmod.dimension(alg, tuple(sig))
        if lhs != len(alg.paths_from(p.target)):
            out.append(f"σ({p}): dim pΛ + dim Ω(pΛ) = {lhs} != dim P({p.target})")
    return out


def cross_engine_dims(alg: Algebra) -> list[str]:
    """pd/id of simples: pathmod against syzygies of rational representations."""
    out = []
    cutoff = 2 * alg.dimension
    for v in alg.vertices:
        for name, exact, oracle in (("pd", pathmod.pd_simple, linrep.pd_simple_bounded),
                                    ("id", pathmod.id_simple, linrep.id_simple_bounded)):
            e = exact(alg, v)
            if e == INFINITE:
                o = oracle(alg, v, min(cutoff, INFINITE_PROBE))
                if not isinstance(o, linrep.AtLeast):
                    out.append(f"{name} S({v}): pathmod infinite, linrep {o}")
            else:
                o = oracle(alg, v, cutoff)
                if o != e:
                    out.append(f"{name} S({v}): pathmod {e}, linrep {o}")
    return out


def cross_engine_layers(alg: Algebra, rng: random.Random, nV: int = 10) -> list[str]:
    out = []
    R = linrep.regular_rep(alg)
    if linrep.loewy_length(R) != loewy_length(alg):
        out.append(f"LL: linrep {linrep.loewy_length(R)} vs algebra {loewy_length(alg)}")
    for _ in range(nV):
        V = random_subset(rng, alg)
        a, b = pathmod.layer_length_algebra(alg, V), linrep.layer_length(R, V)
        if a != b:
            out.append(f"ℓℓ^t_V(Λ), V={_fmt(V)}: pathmod {a}, linrep {b}")
    return out


def duality_layers(alg: Algebra, rng: random.Random, nV: int = 10) -> list[str]:
    """ℓℓ^{t_V}(Λ) = ℓℓ^{t_V}(DΛ)."""
    out = []
    R, D = linrep.regular_rep(alg), linrep.coregular_rep(alg)
    for _ in range(nV):
        V = random_subset(rng, alg)
        a, b = linrep.layer_length(R, V), linrep.layer_length(D, V)
        if a != b:
            out.append(f"ℓℓ(Λ)={a} != ℓℓ(DΛ)={b} for V={_fmt(V)}")
    return out


def layer_bound(alg: Algebra, rng: random.Random, cases: int = 20) -> list[str]:
    """ℓℓ^{t_V}(M) <= ℓℓ^{t_V}(Λ), for representations and path-module sums."""
    out = []
    for _ in range(cases):
        V = random_subset(rng, alg)
        n = pathmod.layer_length_algebra(alg, V)
        M = random_rep(rng, alg)
        if linrep.layer_length(M, V) > n:
            out.append(f"rep {M.dim_vector()}: ℓℓ={linrep.layer_length(M, V)} > ℓℓ(Λ)={n}, V={_fmt(V)}")
        P = random_path_sum(rng, alg)
        if pathmod.layer_length(alg, P, V) > n:
            out.append(f"path sum {[str(p) for p in P]}: ℓℓ exceeds ℓℓ(Λ)={n}, V={_fmt(V)}")
    return out


def finite_pd_class_layer(alg: Algebra) -> list[str]:
    """ℓℓ^{t_{S<∞}}(Λ) is never 1, and is 0 exactly when gldim is finite."""
    fin = pathmod.simple_classes(alg).finite_pd
    n = pathmod.layer_length_algebra(alg, fin)
    g = bounds.gldim(alg)
    out = []
    if n == 1:
        out.append("ℓℓ^{t_S<∞}(Λ) = 1")
    if (n == 0) != (g < INFINITE):
        out.append(f"ℓℓ^{{t_S<∞}}(Λ) = {n} but gldim = {g}")
    return out


def recovery(alg: Algebra) -> list[str]:
    """Classical bounds come back at V = ∅ and, for finite gldim, at V = S."""
    out = []
    ll = loewy_length(alg)
    if bounds.bound_db(alg, ()) != ll - 1:
        out.append(f"bound_db(∅) = {bounds.bound_db(alg, ())} != LL-1 = {ll - 1}")
    if bounds.bound_dsg(alg, ()) != max(0, ll - 2):
        out.append("bound_dsg(∅) != max(0, LL-2)")
    if pathmod.layer_length_algebra(alg, ()) != ll:
        out.append("ℓℓ^{t_∅}(Λ) != LL(Λ)")
    g = bounds.gldim(alg)
    if g < INFINITE:
        if bounds.bound_db(alg, alg.vertices) != g:
            out.append(f"bound_db(S) = {bounds.bound_db(alg, alg.vertices)} != gldim = {g}")
        if pathmod.layer_length_algebra(alg, alg.vertices) != 0:
            out.append("ℓℓ^{t_S}(Λ) != 0 with finite gldim")
    return out


def torsion_axioms(alg: Algebra, rng: random.Random, cases: int = 20) -> list[str]:
    """Torsion-pair properties of t_V on random representations and path sums."""
    out = []
    fin = pathmod.simple_classes(alg).finite_pd
    for _ in range(cases):
        V = random_subset(rng, alg)
        Vp = pathmod.complement(alg, V)
        M = random_rep(rng, alg)
        T, _ = linrep.torsion_radical(M, V)
        Q = linrep.q_tV(M, V)
        top_M, _ = linrep.top(M)
        tag = f"M={M.dim_vector()} V={_fmt(V)}"
        if (T.dim == M.dim) != (set(top_M) <= Vp):
            out.append(f"t_V(M)=M iff top M in add V' fails: {tag}")
        if (T.dim == 0) != linrep.in_FV(M, V):
            out.append(f"t_V(M)=0 iff factors in V fails: {tag}")
        if not linrep.in_FV(Q, V):
            out.append(f"q_tV(M) not in F(V): {tag}")
        if T.dim + Q.dim != M.dim:
            out.append(f"dim t + dim q != dim M: {tag}")
        if not set(linrep.top(T)[0]) <= Vp:
            out.append(f"t_V(M) not torsion: {tag}")
        ll = linrep.layer_length(M, V)
        X = M
        for j in range(ll + 1):
            if linrep.layer_length(X, V) + j != ll:
                out.append(f"shift identity fails at j={j}: {tag}")
                break
            X = linrep.f_tV(X, V)
        if ll > 0 and V <= fin:
            n = pathmod.layer_length_algebra(alg, V)
            drop = linrep.layer_length(linrep.syzygy(T, 1), V)
            if drop > n - 1:
                out.append(f"ℓℓ(Ω t_V M) = {drop} > n-1 = {n - 1}: {tag}")

        P = random_path_sum(rng, alg)
        t = pathmod.torsion_radical(alg, P, V)
        factors = pathmod.composition_factors(alg, P)
        if (not t) != (set(factors) <= V):
            out.append(f"path sum t_V = 0 iff factors in V fails: {[str(p) for p in P]} V={_fmt(V)}")
        if (pathmod.dimension(alg, t) == pathmod.dimension(alg, P)) != all(p.target in Vp for p in P):
            out.append(f"path sum t_V = M iff tops in V' fails: {[str(p) for p in P]} V={_fmt(V)}")
        ll = pathmod.layer_length(alg, P, V)
        X = P
        for j in range(ll + 1):
            if pathmod.layer_length(alg, X, V) + j != ll:
                out.append(f"path sum shift identity fails at j={j}")
                break
            X = pathmod.f_tV(alg, X, V)
        if pathmod.layer_length(alg, P, ()) != pathmod.loewy_length(alg, P):
            out.append(f"ℓℓ^{{t_∅}} != LL on path sum {[str(p) for p in P]}")
    return out


def exactness(alg: Algebra, rng: random.Random, cases: int = 10) -> list[str]:
    """t_V keeps monos mono and epis epi; F(V) is closed under sub, quotient, extension."""
    out = []
    for _ in range(cases):
        V = random_subset(rng, alg)
        f = random_mono(rng, alg)
        if not linrep.induced_torsion_map(f, V).is_mono():
            out.append(f"t_V(mono) not mono, V={_fmt(V)}")
        g = random_epi(rng, alg)
        if not linrep.induced_torsion_map(g, V).is_epi():
            out.append(f"t_V(epi) not epi, V={_fmt(V)}")
        i, p = random_ses(rng, alg)
        K, M, Q = i.domain, i.codomain, p.codomain
        if linrep.in_FV(M, V) and not (linrep.in_FV(K, V) and linrep.in_FV(Q, V)):
            out.append(f"F(V) not closed under sub/quotient, V={_fmt(V)}")
        if linrep.in_FV(K, V) and linrep.in_FV(Q, V) and not linrep.in_FV(M, V):
            out.append(f"F(V) not closed under extensions, V={_fmt(V)}")
    return out


@dataclass
class CheckReport:
    seed: int
    results: dict = field(default_factory=dict)  # check name -> violations

    @property
    def ok(self) -> bool:
        return not any(self.results.values())


def run_all(alg: Algebra, seed: int = 1, cases: int = 50) -> CheckReport:
    """The full suite used by ``qha check``."""
    rng = random.Random(seed)
    rep = CheckReport(seed)
    rep.results["algebra invariants"] = algebra_invariants(alg)
    rep.results["sigma contract"] = sigma_contract(alg)
    rep.results["cross-engine pd/id"] = cross_engine_dims(alg)
    rep.results["cross-engine layer length"] = cross_engine_layers(alg, rng)
    rep.results["layer length of Λ vs DΛ"] = duality_layers(alg, rng)
    rep.results["layer length bound by Λ"] = layer_bound(alg, rng, cases)
    rep.results["finite-pd class layer length"] = finite_pd_class_layer(alg)
    rep.results["classical bound recovery"] = recovery(alg)
    rep.results["torsion pair axioms"] = torsion_axioms(alg, rng, cases)
    rep.results["exactness of t_V"] = exactness(alg, rng, max(1, cases // 5))
    return rep
