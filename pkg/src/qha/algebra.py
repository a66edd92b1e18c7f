"""Finite-dimensional monomial algebras kQ/I and their path bases."""
from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .errors import (
    BasisLimitExceeded,
    InfiniteDimensional,
    NotComposable,
    UnknownVertex,
)
from .presentation import Arrow, Presentation, Quiver

DEFAULT_BASIS_LIMIT = 10**6


class Path(NamedTuple):
    """A path in the quiver; ``arrows == ()`` is the trivial path at ``source``."""

    source: str
    arrows: tuple[str, ...]
    target: str

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self):
        return " ".join(self.arrows) if self.arrows else f"e{self.source}"


class Algebra:
    """A monomial algebra together with its basis of nonzero paths.

    Immutable after :func:`build`. Memo tables used by the homological engines
    hang off ``_memo``; they only ever cache deterministic values.
    """

    def __init__(self, presentation: Presentation, basis: list[Path]):
        self.presentation = presentation
        q = presentation.quiver
        self.vertices: tuple[str, ...] = q.vertices
        self.arrows: dict[str, Arrow] = {a.name: a for a in q.arrows}
        self.relations = presentation.relations
        self.vertex_index = {v: k for k, v in enumerate(q.vertices)}
        self.arrow_index = {a.name: k for k, a in enumerate(q.arrows)}
        self.out_arrows: dict[str, tuple[str, ...]] = {
            v: tuple(a.name for a in q.arrows if a.source == v) for v in q.vertices}
        self.in_arrows: dict[str, tuple[str, ...]] = {
            v: tuple(a.name for a in q.arrows if a.target == v) for v in q.vertices}

        basis.sort(key=self.path_key)
        self.basis: tuple[Path, ...] = tuple(basis)
        self.basis_set = frozenset(basis)
        self._from: dict[str, list[Path]] = {v: [] for v in q.vertices}
        self._to: dict[str, list[Path]] = {v: [] for v in q.vertices}
        for p in self.basis:
            self._from[p.source].append(p)
            self._to[p.target].append(p)
        self.max_path_len = max(p.length for p in self.basis)
        self._memo: dict[str, dict] = {}

    def __repr__(self):
        return (f"Algebra({len(self.vertices)} vertices, {len(self.arrows)} arrows, "
                f"{len(self.relations)} relations, dim {self.dimension})")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def memo(self, name: str) -> dict:
        return self._memo.setdefault(name, {})

    def path_key(self, p: Path):
        return (len(p.arrows), tuple(self.arrow_index[a] for a in p.arrows),
                self.vertex_index[p.source])

    def check_vertex(self, i: str) -> str:
        if i not in self.vertex_index:
            raise UnknownVertex(f"unknown vertex {i!r}")
        return i

    def trivial(self, i: str) -> Path:
        self.check_vertex(i)
        return Path(i, (), i)

    def path(self, *arrow_names: str) -> Path:
        """The path spelled by ``arrow_names`` (must be composable, may be zero)."""
        if not arrow_names:
            raise ValueError("use trivial() for the idempotent paths")
        for x, y in zip(arrow_names, arrow_names[1:]):
            if self.arrows[x].target != self.arrows[y].source:
                raise NotComposable(f"{x} then {y} is not a path")
        return Path(self.arrows[arrow_names[0]].source, tuple(arrow_names),
                    self.arrows[arrow_names[-1]].target)

    def is_nonzero(self, p: Path) -> bool:
        return p in self.basis_set

    def extend(self, p: Path, arrow: str) -> Path | None:
        """``p * arrow`` in the algebra, or None when it is zero."""
        q = Path(p.source, p.arrows + (arrow,), self.arrows[arrow].target)
        return q if q in self.basis_set else None

    def successors(self, p: Path) -> list[tuple[str, Path]]:
        """Nonzero one-arrow extensions ``(arrow, p*arrow)`` of a basis path."""
        out = []
        for a in self.out_arrows[p.target]:
            q = self.extend(p, a)
            if q is not None:
                out.append((a, q))
        return out

    def paths_from(self, i: str) -> list[Path]:
        return list(self._from[self.check_vertex(i)])

    def paths_to(self, i: str) -> list[Path]:
        return list(self._to[self.check_vertex(i)])


def _has_relation_suffix(word: tuple[str, ...], relations: frozenset, lengths: tuple[int, ...]) -> bool:
    n = len(word)
    return any(L <= n and word[n - L:] in relations for L in lengths)


def _is_finite(presentation: Presentation) -> bool:
    """Decide finite-dimensionality exactly.

    States are nonzero paths of length w = max(1, longest relation - 1); an
    edge joins two states when they overlap in w-1 arrows and their union is
    still nonzero. Long nonzero paths are exactly long walks, so the algebra
    is infinite-dimensional iff this graph has a directed cycle.
    """
    q = presentation.quiver
    rels = frozenset(presentation.relations)
    lengths = tuple(sorted({len(r) for r in rels}))
    w = max(1, max(lengths, default=0) - 1)
    arrows = {a.name: a for a in q.arrows}
    out: dict[str, list[str]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        out[a.source].append(a.name)

    # nonzero words of length exactly w
    layer = [(a,) for a in arrows]
    for _ in range(w - 1):
        layer = [word + (b,) for word in layer for b in out[arrows[word[-1]].target]
                 if not _has_relation_suffix(word + (b,), rels, lengths)]
    states = set(layer)
    succ: dict[tuple, list[tuple]] = {s: [] for s in states}
    indeg = {s: 0 for s in states}
    for s in states:
        for b in out[arrows[s[-1]].target]:
            word = s + (b,)
            if _has_relation_suffix(word, rels, lengths):
                continue
            t = word[1:]
            if t in states:
                succ[s].append(t)
                indeg[t] += 1
    # Kahn: every state is removed iff the graph is acyclic
    queue = deque(s for s, d in indeg.items() if d == 0)
    removed = 0
    while queue:
        s = queue.popleft()
        removed += 1
        for t in succ[s]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    return removed == len(states)


def build(p: Presentation, basis_limit: int = DEFAULT_BASIS_LIMIT) -> Algebra:
    """Enumerate the nonzero paths of a validated presentation.

    Raises InfiniteDimensional before enumerating anything when the algebra
    is infinite-dimensional, and BasisLimitExceeded past ``basis_limit``.
    """
    if not _is_finite(p):
        raise InfiniteDimensional("a cycle of nonzero paths exists; the algebra is infinite-dimensional")
    q: Quiver = p.quiver
    rels = frozenset(p.relations)
    lengths = tuple(sorted({len(r) for r in rels}))
    arrows = {a.name: a for a in q.arrows}
    out: dict[str, list[str]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        out[a.source].append(a.name)

    basis = [Path(v, (), v) for v in q.vertices]
    frontier = list(basis)
    while frontier:
        nxt = []
        for path in frontier:
            for b in out[path.target]:
                word = path.arrows + (b,)
                if not _has_relation_suffix(word, rels, lengths):
                    nxt.append(Path(path.source, word, arrows[b].target))
        basis.extend(nxt)
        if len(basis) > basis_limit:
            raise BasisLimitExceeded(f"more than {basis_limit} nonzero paths")
        frontier = nxt
    return Algebra(p, basis)


def multiply(alg: Algebra, p: Path, q: Path) -> Path | None:
    """Product of two basis paths; None stands for zero."""
    if p.target != q.source:
        raise NotComposable(f"{p} ends at {p.target} but {q} starts at {q.source}")
    r = Path(p.source, p.arrows + q.arrows, q.target)
    return r if r in alg.basis_set else None


def loewy_length(alg: Algebra) -> int:
    return 1 + alg.max_path_len


def opposite_presentation(p: Presentation) -> Presentation:
    q = p.quiver
    arrows = tuple(Arrow(a.name, a.target, a.source) for a in q.arrows)
    rels = tuple(tuple(reversed(r)) for r in p.relations)
    return Presentation(Quiver(q.vertices, arrows), rels)


def opposite(alg: Algebra) -> Algebra:
    memo = alg.memo("opposite")
    if "op" not in memo:
        basis = [Path(p.target, tuple(reversed(p.arrows)), p.source) for p in alg.basis]
        op = Algebra(opposite_presentation(alg.presentation), basis)
        op._memo["opposite"] = {"op": alg}
        memo["op"] = op
    return memo["op"]


def paths_from(alg: Algebra, i: str) -> list[Path]:
    return alg.paths_from(i)


def paths_to(alg: Algebra, i: str) -> list[Path]:
    return alg.paths_to(i)
