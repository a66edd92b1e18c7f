"""Line-based text format for monomial bound quiver algebras.

A document looks like::

    # A_3 with the relation ab
    vertices 1 2 3
    arrow a 1 2
    arrow b 2 3
    relation a b

Juxtaposition in a ``relation`` line is path composition with the leftmost
arrow acting first.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from .errors import (
    DuplicateName,
    NonAdmissibleRelation,
    NonComposableRelation,
    NonMonomialRelation,
    PresentationSyntaxError,
    RedundantRelationRemoved,
    UndefinedSymbol,
)

_NAME = re.compile(r"^[A-Za-z0-9_.']+$")
# tokens that only make sense in a linear combination
_COEFF = re.compile(r"^[+\-*/]$|^[+\-]?\d+(/\d+)?\*")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise UndefinedSymbol(f"unknown arrow {name!r}")


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple[tuple[str, ...], ...]


def parse(text: str) -> Presentation:
    vertices: list[str] = []
    arrows: dict[str, Arrow] = {}
    relations: list[tuple[str, ...]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        if keyword == "vertices":
            if not args:
                raise PresentationSyntaxError(lineno, raw, "no vertex identifiers")
            for v in args:
                if not _NAME.match(v):
                    raise PresentationSyntaxError(lineno, raw, f"bad vertex identifier {v!r}")
                if v in vertices:
                    raise DuplicateName(f"line {lineno}: vertex {v!r} declared twice")
                vertices.append(v)
        elif keyword == "arrow":
            if len(args) != 3:
                raise PresentationSyntaxError(lineno, raw, "expected 'arrow <name> <source> <target>'")
            name, s, t = args
            if not _NAME.match(name):
                raise PresentationSyntaxError(lineno, raw, f"bad arrow name {name!r}")
            if name in arrows:
                raise DuplicateName(f"line {lineno}: arrow {name!r} declared twice")
            for v in (s, t):
                if v not in vertices:
                    raise UndefinedSymbol(f"line {lineno}: vertex {v!r} used before declaration")
            arrows[name] = Arrow(name, s, t)
        elif keyword == "relation":
            if not args:
                raise PresentationSyntaxError(lineno, raw, "empty relation")
            for tok in args:
                if _COEFF.match(tok) or "+" in tok:
                    raise NonMonomialRelation(f"line {lineno}: only monomial relations are supported")
                if tok not in arrows:
                    raise UndefinedSymbol(f"line {lineno}: arrow {tok!r} used before declaration")
            relations.append(tuple(args))
        else:
            raise PresentationSyntaxError(lineno, raw, f"unknown keyword {keyword!r}")

    return Presentation(Quiver(tuple(vertices), tuple(arrows.values())), tuple(relations))


def _contains(word: tuple[str, ...], sub: tuple[str, ...]) -> bool:
    n = len(sub)
    return any(word[k:k + n] == sub for k in range(len(word) - n + 1))


def validate(p: Presentation) -> Presentation:
    """Check composability and admissibility, drop redundant relations.

    Raises NonComposableRelation / NonAdmissibleRelation; a relation that
    contains another relation (or repeats one) is removed with a
    RedundantRelationRemoved warning.
    """
    q = p.quiver
    by_name = {a.name: a for a in q.arrows}
    for rel in p.relations:
        for name in rel:
            if name not in by_name:
                raise UndefinedSymbol(f"arrow {name!r} in relation is not declared")
        if len(rel) < 2:
            raise NonAdmissibleRelation(
                f"relation {' '.join(rel)!r} has length {len(rel)}; admissible relations have length >= 2")
        for x, y in zip(rel, rel[1:]):
            if by_name[x].target != by_name[y].source:
                raise NonComposableRelation(
                    f"relation {' '.join(rel)!r}: {x} ends at {by_name[x].target} "
                    f"but {y} starts at {by_name[y].source}")

    kept: list[tuple[str, ...]] = []
    for k, rel in enumerate(p.relations):
        earlier = p.relations[:k]
        later = p.relations[k + 1:]
        # strict containment in any other relation, or an exact earlier duplicate
        redundant = rel in earlier or any(
            len(other) < len(rel) and _contains(rel, other) for other in earlier + later)
        if redundant:
            warnings.warn(f"relation {' '.join(rel)!r} is redundant and was removed",
                          RedundantRelationRemoved, stacklevel=2)
        else:
            kept.append(rel)
    return Presentation(q, tuple(kept))


def load(text: str) -> Presentation:
    return validate(parse(text))


def format_presentation(p: Presentation) -> str:
    lines = ["vertices " + " ".join(p.quiver.vertices)]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in p.quiver.arrows]
    lines += ["relation " + " ".join(rel) for rel in p.relations]
    return "\n".join(lines) + "\n"
