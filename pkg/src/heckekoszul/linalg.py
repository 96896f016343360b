"""Exact sparse linear algebra over the rationals.

Matrices are column-major dictionaries: column ``c`` is the image of the
``c``-th source basis vector, stored as ``{row: value}`` with no zeros.
Values are ``int`` or ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Num = int | Fraction


def normalize(x: Num) -> Num:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class SMat:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: dict[int, dict[int, Num]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols: dict[int, dict[int, Num]] = {}
        for c, col in (cols or {}).items():
            clean = {r: normalize(v) for r, v in col.items() if v}
            if clean:
                self.cols[c] = clean

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "SMat":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "SMat":
        return cls(n, n, {k: {k: 1} for k in range(n)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Num]]) -> "SMat":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols: dict[int, dict[int, Num]] = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    cols.setdefault(c, {})[r] = v
        return cls(nrows, ncols, cols)

    def to_dense(self) -> list[list[Num]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for c, col in self.cols.items():
            for r, v in col.items():
                out[r][c] = v
        return out

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, SMat):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.cols == other.cols

    def __repr__(self) -> str:
        return f"SMat({self.nrows}x{self.ncols}, nnz={sum(map(len, self.cols.values()))})"

    def column(self, c: int) -> dict[int, Num]:
        return self.cols.get(c, {})

    def transpose(self) -> "SMat":
        out: dict[int, dict[int, Num]] = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = v
        return SMat(self.ncols, self.nrows, out)

    def scale(self, s: Num) -> "SMat":
        if not s:
            return SMat(self.nrows, self.ncols)
        return SMat(self.nrows, self.ncols, {c: {r: v * s for r, v in col.items()} for c, col in self.cols.items()})

    def __neg__(self) -> "SMat":
        return self.scale(-1)

    def __add__(self, other: "SMat") -> "SMat":
        _same_shape(self, other)
        out = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            dst = out.setdefault(c, {})
            for r, v in col.items():
                s = dst.get(r, 0) + v
                if s:
                    dst[r] = s
                else:
                    dst.pop(r, None)
        return SMat(self.nrows, self.ncols, out)

    def __sub__(self, other: "SMat") -> "SMat":
        return self + (-other)

    def __matmul__(self, other: "SMat") -> "SMat":
        """Composition ``self o other``."""
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out: dict[int, dict[int, Num]] = {}
        for c, col in other.cols.items():
            acc: dict[int, Num] = {}
            for k, v in col.items():
                for r, w in self.cols.get(k, {}).items():
                    acc[r] = acc.get(r, 0) + v * w
            out[c] = acc
        return SMat(self.nrows, other.ncols, out)

    def apply(self, vec: dict[int, Num]) -> dict[int, Num]:
        acc: dict[int, Num] = {}
        for k, v in vec.items():
            for r, w in self.cols.get(k, {}).items():
                acc[r] = acc.get(r, 0) + v * w
        return {r: normalize(v) for r, v in acc.items() if v}

    def rank(self) -> int:
        return rank_of_vectors(self.cols.values())

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for col in self.cols.values() for v in col.values())


def _same_shape(a: SMat, b: SMat) -> None:
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValueError(f"shape mismatch {a.nrows}x{a.ncols} vs {b.nrows}x{b.ncols}")


def _integral(vec: dict[int, Num]) -> dict[int, int]:
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {k: int(v * den) for k, v in vec.items() if v}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


def rank_of_vectors(vectors: Iterable[dict[int, Num]]) -> int:
    """Rank of a family of sparse vectors by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for vec in vectors:
        row = _integral(vec)
        while row:
            p = min(row)
            prow = pivots.get(p)
            if prow is None:
                if row[p] < 0:
                    row = {k: -v for k, v in row.items()}
                pivots[p] = row
                break
            a, b = prow[p], row[p]
            g = gcd(a, b)
            a, b = a // g, b // g
            new: dict[int, int] = {k: a * v for k, v in row.items()}
            for k, v in prow.items():
                s = new.get(k, 0) - b * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            row = new
    return len(pivots)


# dense helpers for the (tiny) subspace computations -------------------------


def rref(rows: Sequence[Sequence[Num]], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(v) for v in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Num]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve_coordinates(basis: Sequence[Sequence[Num]], vec: Sequence[Num]) -> list[Fraction]:
    """Coordinates of ``vec`` in the (independent) ``basis``; raises if not in the span."""
    k = len(basis)
    n = len(vec)
    aug = [[Fraction(basis[b][c]) for b in range(k)] + [Fraction(vec[c])] for c in range(n)]
    red, pivots = rref(aug, k + 1)
    if k in pivots:
        raise ValueError("vector not in span")
    coords = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        coords[p] = row[k]
    return coords


def dense_rank(rows: Sequence[Sequence[Num]]) -> int:
    return rank_of_vectors({c: v for c, v in enumerate(r) if v} for r in rows)
