"""Sparse exact linear algebra over the rationals.

Vectors are ``dict[int, Fraction]`` with no stored zeros; a matrix is a list
of such rows plus a column count. All maps act on row vectors from the
right (``v -> v @ A``), matching right modules.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

Vec = dict  # dict[int, Fraction]

ONE = Fraction(1)


def axpy(y: Vec, a, x: Vec) -> None:
    """y += a*x in place."""
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


def scale(x: Vec, a) -> Vec:
    return {k: a * v for k, v in x.items()} if a else {}


@dataclass
class Matrix:
    rows: list
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([{} for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([{k: ONE} for k in range(n)], n)

    @classmethod
    def from_dense(cls, dense, ncols: int | None = None) -> "Matrix":
        rows = [{k: Fraction(x) for k, x in enumerate(r) if x} for r in dense]
        if ncols is None:
            ncols = len(dense[0]) if dense else 0
        return cls(rows, ncols)

    def to_dense(self) -> list[list[Fraction]]:
        return [[r.get(k, Fraction(0)) for k in range(self.ncols)] for r in self.rows]

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return Matrix([vecmat(r, other) for r in self.rows], other.ncols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ncols == other.ncols
                and self.rows == other.rows)

    def __sub__(self, other: "Matrix") -> "Matrix":
        out = []
        for r, s in zip(self.rows, other.rows):
            r = dict(r)
            axpy(r, -1, s)
            out.append(r)
        return Matrix(out, self.ncols)

    def transpose(self) -> "Matrix":
        cols: list[dict] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return Matrix(cols, self.nrows)

    def rank(self) -> int:
        return Subspace.span(self.rows, self.ncols).dim


def vecmat(v: Vec, A: Matrix) -> Vec:
    out: Vec = {}
    rows = A.rows
    for k, a in v.items():
        for c, b in rows[k].items():
            s = out.get(c, 0) + a * b
            if s:
                out[c] = s
            else:
                del out[c]
    return out


@dataclass
class Subspace:
    """Row space in reduced echelon form.

    ``pivots`` maps a pivot column to its basis row; every basis row has a 1 in
    its own pivot column and 0 in all other pivot columns.
    """

    ambient: int
    pivots: dict = field(default_factory=dict)

    @classmethod
    def span(cls, vectors, ambient: int) -> "Subspace":
        s = cls(ambient)
        for v in vectors:
            s.add(v)
        return s

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, {k: {k: ONE} for k in range(ambient)})

    def copy(self) -> "Subspace":
        return Subspace(self.ambient, dict(self.pivots))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Vec) -> Vec:
        r = dict(v)
        for p in [k for k in r if k in self.pivots]:
            axpy(r, -r[p], self.pivots[p])
        return r

    def add(self, v: Vec) -> bool:
        """Enlarge the span by ``v``; False when ``v`` was already inside."""
        r = self.reduce(v)
        if not r:
            return False
        c = min(r)
        inv = 1 / r[c]
        r = {k: x * inv for k, x in r.items()}
        # rows may be shared with copies; replace, never mutate
        for p, row in list(self.pivots.items()):
            a = row.get(c)
            if a:
                row = dict(row)
                axpy(row, -a, r)
                self.pivots[p] = row
        self.pivots[c] = r
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def basis(self) -> list[Vec]:
        return [self.pivots[c] for c in sorted(self.pivots)]

    def coords(self, v: Vec) -> Vec:
        """Coordinates of ``v`` (assumed inside) w.r.t. :meth:`basis`."""
        order = {c: k for k, c in enumerate(sorted(self.pivots))}
        return {order[c]: x for c, x in v.items() if c in order}

    def complement_columns(self) -> list[int]:
        return [k for k in range(self.ambient) if k not in self.pivots]

    def __add__(self, other: "Subspace") -> "Subspace":
        big, small = (self, other) if self.dim >= other.dim else (other, self)
        s = big.copy()
        for v in small.basis():
            s.add(v)
        return s

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.pivots == other.pivots)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.pivots.values())

    def intersect(self, other: "Subspace") -> "Subspace":
        # v = x.B1 = y.B2  <=>  (x, -y) in left kernel of [B1; B2]
        b1, b2 = self.basis(), other.basis()
        if not b1 or not b2:
            return Subspace(self.ambient)
        k = left_kernel(Matrix(b1 + b2, self.ambient))
        out = Subspace(self.ambient)
        for w in k:
            v: Vec = {}
            for i, a in w.items():
                if i < len(b1):
                    axpy(v, a, b1[i])
            out.add(v)
        return out


def nullspace(A: Matrix) -> list[Vec]:
    """Basis of {x : A x = 0} (column vectors), one vector per free column."""
    s = Subspace.span(A.rows, A.ncols)
    free = s.complement_columns()
    out = []
    for f in free:
        x: Vec = {f: ONE}
        for p, row in s.pivots.items():
            a = row.get(f)
            if a:
                x[p] = -a
        out.append(x)
    return out


def left_kernel(A: Matrix) -> list[Vec]:
    """Basis of {v : v A = 0}."""
    return nullspace(A.transpose())


def is_invertible(A: Matrix) -> bool:
    return A.nrows == A.ncols and A.rank() == A.nrows
