"""Presentation texts for the two parameterized example families."""
from __future__ import annotations

from .errors import InputError, MBelowMinimum

MINIMUM_M = {"example41": 10, "example42": 9}


def example41(m: int) -> str:
    """Loop a1 at 1, arrows a2: 1->2, a_k: k-1 -> k (3 <= k <= m), a_{m+1}, a_{m+2} out of 1.

    Relations a1 a1, a1 a_{m+1}, a1 a_{m+2}, a1 a2 and the long path a2 a3 ... a_m.
    """
    if m < MINIMUM_M["example41"]:
        raise MBelowMinimum(f"example41 needs m >= 10, got {m}")
    lines = [f"# example41, m = {m}", "vertices " + " ".join(str(i) for i in range(1, m + 3))]
    lines.append("arrow a1 1 1")
    lines.append("arrow a2 1 2")
    lines += [f"arrow a{k} {k - 1} {k}" for k in range(3, m + 1)]
    lines.append(f"arrow a{m + 1} 1 {m + 1}")
    lines.append(f"arrow a{m + 2} 1 {m + 2}")
    lines += ["relation a1 a1", f"relation a1 a{m + 1}", f"relation a1 a{m + 2}", "relation a1 a2"]
    lines.append("relation " + " ".join(f"a{k}" for k in range(2, m + 1)))
    return "\n".join(lines) + "\n"


def example42(m: int) -> str:
    """Two linear branches out of 1: a_k: k -> k+1 (k < m) and 1 -> m+1 -> ... -> 2m-1.

    Relations a_i a_{i+1} for m+1 <= i <= 2m-2 on the lower branch.
    """
    if m < MINIMUM_M["example42"]:
        raise MBelowMinimum(f"example42 needs m >= 9, got {m}")
    lines = [f"# example42, m = {m}", "vertices " + " ".join(str(i) for i in range(1, 2 * m))]
    lines += [f"arrow a{k} {k} {k + 1}" for k in range(1, m)]
    lines.append(f"arrow a{m + 1} 1 {m + 1}")
    lines += [f"arrow a{k} {k - 1} {k}" for k in range(m + 2, 2 * m)]
    lines += [f"relation a{i} a{i + 1}" for i in range(m + 1, 2 * m - 1)]
    return "\n".join(lines) + "\n"


FAMILIES = {"example41": example41, "example42": example42}


def generate(family: str, m: int) -> str:
    try:
        gen = FAMILIES[family]
    except KeyError:
        raise InputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    return gen(m)
