"""Finite root systems of small rank and their Weyl groups.

Weights are integer tuples in fundamental-weight coordinates, so the pairing
``<x, alpha_i^vee>`` is simply ``x[i-1]``. Simple roots are the columns of the
Cartan matrix. Simple-reflection indices are 1-based everywhere in the public
API.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

Weight = tuple[int, ...]

_CARTAN: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -3), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
}

_BRAID = {0: 2, 1: 3, 2: 4, 3: 6}


class RootDataError(ValueError):
    pass


class WeylElt(tuple):
    """A Weyl group element, stored as its canonical reduced word.

    Only :class:`RootDatum` builds these, so two equal group elements always
    carry the identical (lexicographically least) word.
    """

    __slots__ = ()

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return "WeylElt(" + ",".join(map(str, self)) + ")"


@dataclass(frozen=True)
class RootDatum:
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    type_label: str
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        n = self.rank
        if n < 1 or len(self.cartan) != n or any(len(r) != n for r in self.cartan):
            raise RootDataError("cartan matrix must be rank x rank")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise RootDataError("cartan diagonal entries must be 2")
            for j in range(n):
                if i != j:
                    a, b = self.cartan[i][j], self.cartan[j][i]
                    if a > 0 or (a == 0) != (b == 0) or a * b not in _BRAID:
                        raise RootDataError(f"invalid cartan entries at ({i + 1},{j + 1})")

    @classmethod
    def from_label(cls, label: str) -> "RootDatum":
        key = label.replace("×", "x").replace("X", "x")
        if key not in _CARTAN:
            raise RootDataError(f"unknown root system {label!r}; known: {', '.join(_CARTAN)}")
        cartan = _CARTAN[key]
        return cls(len(cartan), cartan, key)

    # lattice ---------------------------------------------------------------

    def simple_root(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(row[i - 1] for row in self.cartan)

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    def _check_index(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.rank):
            raise RootDataError(f"simple root index {i} out of range 1..{self.rank}")

    # Weyl group ------------------------------------------------------------

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def _group(self):
        """BFS over the orbit of rho; returns (vec -> length, vec -> word)."""
        if self.rank > 3:
            raise RootDataError("exhaustive Weyl group enumeration needs rank <= 3")
        rho = self.rho
        length = {rho: 0}
        order = [rho]
        queue = deque([rho])
        while queue:
            vec = queue.popleft()
            for i in range(1, self.rank + 1):
                nxt = reflect(self, i, vec)
                if nxt not in length:
                    length[nxt] = length[vec] + 1
                    order.append(nxt)
                    queue.append(nxt)
        words: dict[Weight, WeylElt] = {rho: WeylElt(())}
        for vec in order[1:]:
            # the smallest left descent starts the lex-least reduced word
            for i in range(1, self.rank + 1):
                prev = reflect(self, i, vec)
                if length[prev] < length[vec]:
                    words[vec] = WeylElt((i,) + words[prev])
                    break
        vecs = {w: vec for vec, w in words.items()}
        return length, words, vecs

    def identity(self) -> WeylElt:
        return WeylElt(())

    def simple(self, i: int) -> WeylElt:
        self._check_index(i)
        return WeylElt((i,))

    def element(self, word) -> WeylElt:
        """The group element of an arbitrary (not necessarily reduced) word."""
        vec = self.rho
        for i in reversed(tuple(word)):
            self._check_index(i)
            vec = reflect(self, i, vec)
        return self._group[1][vec]

    def rho_image(self, w: WeylElt) -> Weight:
        return self._group[2][w]

    def act(self, w: WeylElt, x: Weight) -> Weight:
        for i in reversed(w):
            x = reflect(self, i, x)
        return x

    def length(self, w: WeylElt) -> int:
        return len(w)

    def left_mul_simple(self, i: int, w: WeylElt) -> WeylElt:
        key = ("L", i, w)
        out = self._cache.get(key)
        if out is None:
            out = self._group[1][reflect(self, i, self._group[2][w])]
            self._cache[key] = out
        return out

    def right_mul_simple(self, w: WeylElt, i: int) -> WeylElt:
        key = ("R", w, i)
        out = self._cache.get(key)
        if out is None:
            out = self.element(tuple(w) + (i,))
            self._cache[key] = out
        return out

    def inverse(self, w: WeylElt) -> WeylElt:
        return self.element(tuple(reversed(w)))


def reflect(d: RootDatum, i: int, x: Weight) -> Weight:
    """s_i(x) = x - <x, alpha_i^vee> alpha_i."""
    d._check_index(i)
    if len(x) != d.rank:
        raise RootDataError(f"weight {x} has length {len(x)}, expected {d.rank}")
    n = x[i - 1]
    if n == 0:
        return tuple(x)
    return tuple(xk - n * row[i - 1] for xk, row in zip(x, d.cartan))


def weyl_mul(d: RootDatum, u: WeylElt, w: WeylElt) -> WeylElt:
    return d.element(tuple(u) + tuple(w))


def braid_order(d: RootDatum, i: int, j: int) -> int:
    d._check_index(i)
    d._check_index(j)
    if i == j:
        raise RootDataError("braid_order needs two distinct indices")
    return _BRAID[d.cartan[i - 1][j - 1] * d.cartan[j - 1][i - 1]]


def all_elements(d: RootDatum) -> list[WeylElt]:
    """All of W, ordered by length and then by canonical word."""
    words = d._group[1].values()
    return sorted(words, key=lambda w: (len(w), tuple(w)))


def known_types() -> list[str]:
    return list(_CARTAN)
