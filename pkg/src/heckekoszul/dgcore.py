"""Bigraded dg-modules over Koszul dg-algebras, at a one-point base.

A Koszul algebra here is ``Lambda(ext generators) (x) Sym(sym generators)``
with a differential sending each ext generator to a linear combination of sym
generators. Bidegrees are ``(i, j)``: cohomological degree ``i`` and internal
degree ``j``. Signs follow the Koszul rule with respect to ``i`` only.

Modules are stored by explicit finite components. A module that stands for
an infinite object (a free module over a polynomial algebra, say) keeps only
finitely many internal degrees, and ``window = (lo, hi)`` records the range
of internal degrees on which the stored data is the honest thing (``None``
meaning unbounded). Since every generator moves the internal degree in one
direction, such a truncation is a subquotient and so still a dg-module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .laurent import LaurentPoly
from .linalg import Num, SMat, normalize, nullspace, rref

Bideg = tuple[int, int]
Window = tuple[int | None, int | None]
Mono = tuple[tuple[int, ...], tuple[int, ...]]


class WindowError(ValueError):
    """Raised when a result would not be exact on the requested internal degrees."""


# subspaces ------------------------------------------------------------------


def _canonical_basis(vectors: Iterable[Sequence[Num]], n: int) -> tuple[tuple[Fraction, ...], ...]:
    rows = [list(v) for v in vectors]
    for r in rows:
        if len(r) != n:
            raise ValueError(f"vector {r} does not lie in Q^{n}")
    if not rows:
        return ()
    red, _ = rref(rows, n)
    return tuple(tuple(r) for r in red)


def perp(basis: Sequence[Sequence[Num]], n: int) -> tuple[tuple[Fraction, ...], ...]:
    """RREF basis of the annihilator of span(basis) inside the dual space."""
    return _canonical_basis(nullspace([list(b) for b in basis], n), n)


@dataclass(frozen=True)
class SubspacePair:
    """Two subspaces F1, F2 of E = Q^n, each stored by its RREF basis."""

    ambient_dim: int
    F1_basis: tuple[tuple[Fraction, ...], ...] = ()
    F2_basis: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        n = self.ambient_dim
        f1 = _canonical_basis(self.F1_basis, n)
        f2 = _canonical_basis(self.F2_basis, n)
        if len(f1) != len(self.F1_basis) or len(f2) != len(self.F2_basis):
            raise ValueError("subspace bases must be linearly independent")
        object.__setattr__(self, "F1_basis", f1)
        object.__setattr__(self, "F2_basis", f2)

    @property
    def F1_perp(self):
        return perp(self.F1_basis, self.ambient_dim)

    @property
    def F2_perp(self):
        return perp(self.F2_basis, self.ambient_dim)

    def dual(self) -> "SubspacePair":
        """The pair (F2^perp, F1^perp) inside E^dual."""
        return SubspacePair(self.ambient_dim, self.F2_perp, self.F1_perp)

    def describe(self) -> dict:
        return {
            "n": self.ambient_dim,
            "F1": [[str(x) for x in v] for v in self.F1_basis],
            "F2": [[str(x) for x in v] for v in self.F2_basis],
        }


def _dot(a: Sequence[Num], b: Sequence[Num]) -> Num:
    return normalize(sum(Fraction(x) * y for x, y in zip(a, b)))


# algebras -------------------------------------------------------------------


@dataclass(frozen=True)
class KoszulAlgebra:
    """Lambda(ext) (x) Sym(sym) with d(ext_a) = sum_b diff[a][b] sym_b.

    Generators are numbered ext first, then sym.
    """

    ext_gens: tuple[tuple[str, Bideg], ...]
    sym_gens: tuple[tuple[str, Bideg], ...]
    diff: tuple[tuple[Num, ...], ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "ext_gens", tuple((n, tuple(b)) for n, b in self.ext_gens))
        object.__setattr__(self, "sym_gens", tuple((n, tuple(b)) for n, b in self.sym_gens))
        object.__setattr__(self, "diff", tuple(tuple(normalize(Fraction(x)) for x in row) for row in self.diff))
        problems = self.problems()
        if problems:
            raise ValueError("invalid Koszul algebra: " + "; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        for name, (p, _) in self.ext_gens:
            if p % 2 == 0:
                out.append(f"ext generator {name} has even degree {p}")
        for name, (p, _) in self.sym_gens:
            if p % 2:
                out.append(f"sym generator {name} has odd degree {p}")
        if len(self.diff) != len(self.ext_gens) or any(len(r) != len(self.sym_gens) for r in self.diff):
            out.append("differential matrix has the wrong shape")
            return out
        for a, (na, (p, q)) in enumerate(self.ext_gens):
            for b, (nb, (p2, q2)) in enumerate(self.sym_gens):
                if self.diff[a][b] and (p2, q2) != (p + 1, q):
                    out.append(f"d({na}) has a {nb} term of the wrong bidegree")
        return out

    @property
    def n_ext(self) -> int:
        return len(self.ext_gens)

    @property
    def n_sym(self) -> int:
        return len(self.sym_gens)

    @property
    def n_gens(self) -> int:
        return self.n_ext + self.n_sym

    def is_ext(self, g: int) -> bool:
        return g < self.n_ext

    def gen_name(self, g: int) -> str:
        return self.ext_gens[g][0] if g < self.n_ext else self.sym_gens[g - self.n_ext][0]

    def gen_degree(self, g: int) -> Bideg:
        return self.ext_gens[g][1] if g < self.n_ext else self.sym_gens[g - self.n_ext][1]

    def d_gen(self, a: int) -> dict[int, Num]:
        """d of ext generator ``a`` as {global sym generator index: coeff}."""
        return {self.n_ext + b: c for b, c in enumerate(self.diff[a]) if c}

    def same_shape(self, other: "KoszulAlgebra") -> bool:
        return [b for _, b in self.ext_gens] == [b for _, b in other.ext_gens] and [
            b for _, b in self.sym_gens
        ] == [b for _, b in other.sym_gens]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "ext": [[n, list(b)] for n, b in self.ext_gens],
            "sym": [[n, list(b)] for n, b in self.sym_gens],
            "diff": [[_frac_json(x) for x in row] for row in self.diff],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "KoszulAlgebra":
        return cls(
            tuple((n, tuple(b)) for n, b in doc["ext"]),
            tuple((n, tuple(b)) for n, b in doc["sym"]),
            tuple(tuple(_frac_parse(x) for x in row) for row in doc["diff"]),
            doc.get("label", ""),
        )


def build_T(pair: SubspacePair) -> KoszulAlgebra:
    """Sym of (F1^perp -> F2^dual): ext at (-1,2), sym at (0,2)."""
    n = pair.ambient_dim
    xi = pair.F1_perp
    f = pair.F2_basis
    ext = tuple((f"xi{a + 1}", (-1, 2)) for a in range(len(xi)))
    sym = tuple((f"eta{b + 1}", (0, 2)) for b in range(len(f)))
    diff = tuple(tuple(_dot(x, fb) for fb in f) for x in xi)
    return KoszulAlgebra(ext, sym, diff, f"T(n={n},f1={len(pair.F1_basis)},f2={len(f)})")


def build_S(pair: SubspacePair) -> KoszulAlgebra:
    """Sym of (F2 -> E/F1) in the non-regraded bidegrees (1,-2), (2,-2)."""
    return _build_dual_side(pair, (1, -2), (2, -2), "S")


def build_R(pair: SubspacePair) -> KoszulAlgebra:
    """Sym of (F2 -> E/F1)[2]: ext at (-1,-2), sym at (0,-2), d = -(F2 -> E/F1)."""
    return _build_dual_side(pair, (-1, -2), (0, -2), "R")


def _build_dual_side(pair: SubspacePair, ext_deg: Bideg, sym_deg: Bideg, tag: str) -> KoszulAlgebra:
    n = pair.ambient_dim
    xi = pair.F1_perp
    f = pair.F2_basis
    # u_b = f_b in F2; z_a is the class in E/F1 dual to xi_a, so f_b = sum_a xi_a(f_b) z_a mod F1
    ext = tuple((f"u{b + 1}", ext_deg) for b in range(len(f)))
    sym = tuple((f"z{a + 1}", sym_deg) for a in range(len(xi)))
    diff = tuple(tuple(-_dot(x, fb) for x in xi) for fb in f)
    return KoszulAlgebra(ext, sym, diff, f"{tag}(n={n},f1={len(pair.F1_basis)},f2={len(f)})")


# monomials ------------------------------------------------------------------


def mono_degree(alg: KoszulAlgebra, m: Mono) -> Bideg:
    S, e = m
    i = j = 0
    for a in S:
        p, q = alg.ext_gens[a][1]
        i += p
        j += q
    for b, k in enumerate(e):
        if k:
            p, q = alg.sym_gens[b][1]
            i += k * p
            j += k * q
    return i, j


def mono_one(alg: KoszulAlgebra) -> Mono:
    return ((), (0,) * alg.n_sym)


def mono_mul(m1: Mono, m2: Mono) -> tuple[int, Mono] | None:
    """m1 * m2 as (sign, monomial), or None if an ext generator repeats."""
    S1, e1 = m1
    S2, e2 = m2
    if set(S1) & set(S2):
        return None
    inv = 0
    for a in S1:
        for b in S2:
            if b < a:
                inv += 1
    S = tuple(sorted(S1 + S2))
    e = tuple(x + y for x, y in zip(e1, e2))
    return (-1 if inv % 2 else 1), (S, e)


def gen_mono(alg: KoszulAlgebra, g: int) -> Mono:
    if alg.is_ext(g):
        return ((g,), (0,) * alg.n_sym)
    e = [0] * alg.n_sym
    e[g - alg.n_ext] = 1
    return ((), tuple(e))


def gen_times_mono(alg: KoszulAlgebra, g: int, m: Mono) -> tuple[int, Mono] | None:
    return mono_mul(gen_mono(alg, g), m)


def mono_diff(alg: KoszulAlgebra, m: Mono) -> dict[Mono, Num]:
    """d(xi_{s0} xi_{s1} ... eta^e) = sum_r (-1)^r d(xi_{s_r}) (S minus s_r) eta^e."""
    S, e = m
    out: dict[Mono, Num] = {}
    for r, a in enumerate(S):
        rest = S[:r] + S[r + 1 :]
        sign = -1 if r % 2 else 1
        for g, c in alg.d_gen(a).items():
            b = g - alg.n_ext
            e2 = list(e)
            e2[b] += 1
            key = (rest, tuple(e2))
            out[key] = out.get(key, 0) + sign * c
    return {k: v for k, v in out.items() if v}


def enumerate_monomials(alg: KoszulAlgebra, jmin: int | None, jmax: int | None) -> list[Mono]:
    """All monomials with internal degree in [jmin, jmax].

    Requires the sym generators to share the sign of their internal degree so
    that the range is finite; the bound on that side must be given.
    """
    qs = [q for _, (_, q) in alg.sym_gens]
    if any(q == 0 for q in qs):
        raise ValueError("sym generators of internal degree 0 give infinite slices")
    positive = all(q > 0 for q in qs)
    negative = all(q < 0 for q in qs)
    if qs and not (positive or negative):
        raise ValueError("sym generators must all move the internal degree the same way")
    if qs and positive and jmax is None:
        raise WindowError("need an upper internal-degree bound")
    if qs and negative and jmin is None:
        raise WindowError("need a lower internal-degree bound")
    out: list[Mono] = []
    for k in range(alg.n_ext + 1):
        for S in combinations(range(alg.n_ext), k):
            base = sum(alg.ext_gens[a][1][1] for a in S)

            def rec(b: int, cur: list[int], j: int):
                if b == alg.n_sym:
                    if (jmin is None or j >= jmin) and (jmax is None or j <= jmax):
                        out.append((S, tuple(cur)))
                    return
                q = qs[b]
                t = 0
                while True:
                    jj = j + t * q
                    if positive and jmax is not None and jj > jmax:
                        break
                    if negative and jmin is not None and jj < jmin:
                        break
                    rec(b + 1, cur + [t], jj)
                    t += 1

            rec(0, [], base)
    return out


# modules --------------------------------------------------------------------


@dataclass(frozen=True)
class BigradedDims:
    table: dict[Bideg, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "table", {k: v for k, v in sorted(self.table.items()) if v})

    def restrict(self, lo: int | None = None, hi: int | None = None) -> "BigradedDims":
        return BigradedDims(
            {(i, j): v for (i, j), v in self.table.items() if (lo is None or j >= lo) and (hi is None or j <= hi)}
        )

    def shifted(self, n: int, m: int) -> "BigradedDims":
        """Re-index as for ``shift(M, n, m)``: (i, j) -> (i - n, j + m)."""
        return BigradedDims({(i - n, j + m): v for (i, j), v in self.table.items()})

    def total(self) -> int:
        return sum(self.table.values())

    def __add__(self, other: "BigradedDims") -> "BigradedDims":
        out = dict(self.table)
        for k, v in other.table.items():
            out[k] = out.get(k, 0) + v
        return BigradedDims(out)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({i},{j}): {v}" for (i, j), v in self.table.items()) + "}"


def window_intersect(a: Window, b: Window) -> Window:
    lo = a[0] if b[0] is None else b[0] if a[0] is None else max(a[0], b[0])
    hi = a[1] if b[1] is None else b[1] if a[1] is None else min(a[1], b[1])
    return lo, hi


def in_window(j: int, w: Window) -> bool:
    return (w[0] is None or j >= w[0]) and (w[1] is None or j <= w[1])


class DgModule:
    """A finite-dimensional bigraded dg-module over a :class:`KoszulAlgebra`.

    ``d[(i, j)]`` maps component (i, j) to (i + 1, j); ``act[g][(i, j)]`` maps
    (i, j) to (i + p, j + q) for generator ``g`` of bidegree (p, q). Missing
    entries are zero maps.
    """

    def __init__(
        self,
        algebra: KoszulAlgebra,
        dims: dict[Bideg, int],
        d: dict[Bideg, SMat] | None = None,
        act: Sequence[dict[Bideg, SMat]] | None = None,
        window: Window = (None, None),
        labels: dict[Bideg, list] | None = None,
    ):
        self.algebra = algebra
        self.dims = {k: v for k, v in sorted(dims.items()) if v}
        self.d = {k: m for k, m in (d or {}).items() if not m.is_zero()}
        acts = list(act) if act is not None else [{} for _ in range(algebra.n_gens)]
        if len(acts) != algebra.n_gens:
            raise ValueError("one action table per algebra generator is required")
        self.act = [{k: m for k, m in a.items() if not m.is_zero()} for a in acts]
        self.window = tuple(window)
        self.labels = labels
        self._cohom: BigradedDims | None = None

    # access ---------------------------------------------------------------

    def dim(self, bideg: Bideg) -> int:
        return self.dims.get(bideg, 0)

    def d_at(self, bideg: Bideg) -> SMat:
        i, j = bideg
        m = self.d.get(bideg)
        return m if m is not None else SMat(self.dim((i + 1, j)), self.dim(bideg))

    def act_at(self, g: int, bideg: Bideg) -> SMat:
        p, q = self.algebra.gen_degree(g)
        m = self.act[g].get(bideg)
        return m if m is not None else SMat(self.dim((bideg[0] + p, bideg[1] + q)), self.dim(bideg))

    def support(self) -> list[Bideg]:
        return list(self.dims)

    def internal_degrees(self) -> list[int]:
        return sorted({j for _, j in self.dims})

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_finite(self) -> bool:
        return self.window == (None, None)

    def __repr__(self) -> str:
        return f"DgModule({self.algebra.label}, dim={self.total_dim()}, window={self.window})"

    # invariants -------------------------------------------------------------

    def problems(self, limit: int = 10) -> list[str]:
        """Violations of the dg-module axioms (empty when valid)."""
        out: list[str] = []
        alg = self.algebra
        for (i, j), m in self.d.items():
            if (m.nrows, m.ncols) != (self.dim((i + 1, j)), self.dim((i, j))):
                out.append(f"d at {(i, j)} has shape {m.nrows}x{m.ncols}")
        for g in range(alg.n_gens):
            p, q = alg.gen_degree(g)
            for (i, j), m in self.act[g].items():
                if (m.nrows, m.ncols) != (self.dim((i + p, j + q)), self.dim((i, j))):
                    out.append(f"action of {alg.gen_name(g)} at {(i, j)} has the wrong shape")
        if out:
            return out[:limit]
        for b in self.dims:
            i, j = b
            if not (self.d_at((i + 1, j)) @ self.d_at(b)).is_zero():
                out.append(f"d^2 != 0 at {b}")
        for g in range(alg.n_gens):
            p, q = alg.gen_degree(g)
            sgn = -1 if p % 2 else 1
            dg = alg.d_gen(g) if alg.is_ext(g) else {}
            for b in self.dims:
                i, j = b
                lhs = self.d_at((i + p, j + q)) @ self.act_at(g, b)
                rhs = (self.act_at(g, (i + 1, j)) @ self.d_at(b)).scale(sgn)
                for h, c in dg.items():
                    rhs = rhs + self.act_at(h, b).scale(c)
                if lhs != rhs:
                    out.append(f"Leibniz fails for {alg.gen_name(g)} at {b}")
                    if len(out) >= limit:
                        return out
        for g in range(alg.n_gens):
            pg, qg = alg.gen_degree(g)
            for h in range(g, alg.n_gens):
                ph, qh = alg.gen_degree(h)
                sgn = -1 if (pg * ph) % 2 else 1
                for b in self.dims:
                    i, j = b
                    gh = self.act_at(g, (i + ph, j + qh)) @ self.act_at(h, b)
                    hg = self.act_at(h, (i + pg, j + qg)) @ self.act_at(g, b)
                    if gh != hg.scale(sgn):
                        out.append(f"{alg.gen_name(g)} and {alg.gen_name(h)} do not graded-commute at {b}")
                        if len(out) >= limit:
                            return out
        return out[:limit]

    def is_valid(self) -> bool:
        return not self.problems(limit=1)

    def d_squared_witness(self) -> str | None:
        for b in self.dims:
            i, j = b
            sq = self.d_at((i + 1, j)) @ self.d_at(b)
            if not sq.is_zero():
                c, col = next(iter(sq.cols.items()))
                return f"d^2(e_{c} at {b}) = {dict(col)} != 0"
        return None

    def same_as(self, other: "DgModule") -> bool:
        return (
            self.algebra == other.algebra
            and self.dims == other.dims
            and self.d == other.d
            and self.act == other.act
            and self.window == other.window
        )


# builders -------------------------------------------------------------------


class ModuleBuilder:
    """Assemble a module from labelled basis vectors and sparse structure maps."""

    def __init__(self, algebra: KoszulAlgebra):
        self.algebra = algebra
        self.deg: dict[Hashable, Bideg] = {}
        self.order: list[Hashable] = []
        self.d: dict[Hashable, dict[Hashable, Num]] = {}
        self.act: list[dict[Hashable, dict[Hashable, Num]]] = [{} for _ in range(algebra.n_gens)]

    def add_basis(self, label: Hashable, bideg: Bideg) -> None:
        if label in self.deg:
            raise ValueError(f"duplicate basis label {label!r}")
        self.deg[label] = tuple(bideg)
        self.order.append(label)

    def has(self, label: Hashable) -> bool:
        return label in self.deg

    def add_d(self, src: Hashable, dst: Hashable, c: Num) -> None:
        if c:
            row = self.d.setdefault(src, {})
            row[dst] = row.get(dst, 0) + c

    def add_act(self, g: int, src: Hashable, dst: Hashable, c: Num) -> None:
        if c:
            row = self.act[g].setdefault(src, {})
            row[dst] = row.get(dst, 0) + c

    def build(self, window: Window = (None, None), keep_labels: bool = False, strict: bool = True) -> DgModule:
        """Freeze into a :class:`DgModule`.

        Targets that are not basis labels are dropped (this is how truncation
        to a quotient is expressed) unless ``strict`` is set, in which case
        they raise.
        """
        index: dict[Hashable, int] = {}
        comps: dict[Bideg, list] = {}
        for lab in self.order:
            b = self.deg[lab]
            lst = comps.setdefault(b, [])
            index[lab] = len(lst)
            lst.append(lab)
        dims = {b: len(v) for b, v in comps.items()}

        def assemble(table: dict, shift: Bideg) -> dict[Bideg, SMat]:
            cols: dict[Bideg, dict[int, dict[int, Num]]] = {}
            for src, row in table.items():
                if src not in index:
                    raise ValueError(f"unknown source label {src!r}")
                b = self.deg[src]
                tb = (b[0] + shift[0], b[1] + shift[1])
                for dst, c in row.items():
                    if not c:
                        continue
                    if dst not in index:
                        if strict:
                            raise ValueError(f"unknown target label {dst!r}")
                        continue
                    if self.deg[dst] != tb:
                        raise ValueError(f"map {src!r} -> {dst!r} has the wrong bidegree")
                    col = cols.setdefault(b, {}).setdefault(index[src], {})
                    col[index[dst]] = col.get(index[dst], 0) + c
            return {
                b: SMat(dims.get((b[0] + shift[0], b[1] + shift[1]), 0), dims[b], c) for b, c in cols.items()
            }

        d = assemble(self.d, (1, 0))
        act = [assemble(self.act[g], self.algebra.gen_degree(g)) for g in range(self.algebra.n_gens)]
        return DgModule(self.algebra, dims, d, act, window, comps if keep_labels else None)


def skyscraper(alg: KoszulAlgebra, bideg: Bideg = (0, 0), dim: int = 1) -> DgModule:
    """Q^dim in a single bidegree, every generator acting by zero."""
    return DgModule(alg, {tuple(bideg): dim})


def free_module(alg: KoszulAlgebra, gens: Sequence[Bideg], hi: int | None = None) -> DgModule:
    """The free module A (x) W on generators of the given bidegrees, truncated to j <= hi."""
    return semifree_module(alg, gens, {}, hi)


def semifree_module(
    alg: KoszulAlgebra,
    gens: Sequence[Bideg],
    twist: dict[tuple[int, int], Sequence[tuple[Num, Mono]]],
    hi: int | None = None,
) -> DgModule:
    """A (x) W with d(a w_t) = d(a) w_t + (-1)^|a| sum c a m w_b.

    ``twist[(t, b)]`` lists (c, m) with ``m`` a sym-only monomial; the twist
    must square to zero (for instance a two-level one, where no ``b`` occurs
    as a ``t``).
    """
    for (t, b), terms in twist.items():
        for _, m in terms:
            if m[0]:
                raise ValueError("twisting monomials must be cycles (sym-only)")
            mi, mj = mono_degree(alg, m)
            if (gens[t][0] + 1, gens[t][1]) != (gens[b][0] + mi, gens[b][1] + mj):
                raise ValueError(f"twist {t}->{b} has the wrong bidegree")
    positive = all(q > 0 for _, (_, q) in alg.sym_gens + alg.ext_gens)
    if not positive:
        raise ValueError("free modules are only built over algebras with positive internal degrees")
    if alg.n_sym and hi is None:
        raise WindowError("a free module over a polynomial algebra needs an upper window bound")
    jmax = None if hi is None else hi - min((q for _, q in gens), default=0)
    monos = enumerate_monomials(alg, None, jmax)
    mb = ModuleBuilder(alg)
    for w, (gi, gj) in enumerate(gens):
        for m in monos:
            mi, mj = mono_degree(alg, m)
            if hi is None or gj + mj <= hi:
                mb.add_basis((m, w), (gi + mi, gj + mj))
    for (m, w) in list(mb.order):
        for m2, c in mono_diff(alg, m).items():
            mb.add_d((m, w), (m2, w), c)
        sa = -1 if mono_degree(alg, m)[0] % 2 else 1
        for (t, b), terms in twist.items():
            if t != w:
                continue
            for c, cm in terms:
                sm = mono_mul(m, cm)
                if sm is not None:
                    mb.add_d((m, w), (sm[1], b), sa * c * sm[0])
        for g in range(alg.n_gens):
            r = gen_times_mono(alg, g, m)
            if r is not None:
                mb.add_act(g, (m, w), (r[1], w), r[0])
    window = (None, hi) if alg.n_sym else (None, None)
    return mb.build(window, strict=False)


# operations -----------------------------------------------------------------


def cohomology(M: DgModule) -> BigradedDims:
    """dim ker d - rank of incoming d, per bidegree, by exact rank."""
    if M._cohom is None:
        ranks = {b: M.d_at(b).rank() for b in M.dims}
        table = {}
        for (i, j), n in M.dims.items():
            h = n - ranks[(i, j)] - ranks.get((i - 1, j), 0)
            if h:
                table[(i, j)] = h
        M._cohom = BigradedDims(table)
    return M._cohom


def shift(M: DgModule, n: int, m: int) -> DgModule:
    """M[n]<m>: (i, j) -> (i - n, j + m), d scaled by (-1)^n, g by (-1)^(n|g|)."""
    if n == 0 and m == 0:
        return M
    alg = M.algebra
    mv = lambda b: (b[0] - n, b[1] + m)
    dsign = -1 if n % 2 else 1
    dims = {mv(b): v for b, v in M.dims.items()}
    d = {mv(b): mat.scale(dsign) for b, mat in M.d.items()}
    act = []
    for g in range(alg.n_gens):
        p = alg.gen_degree(g)[0]
        s = -1 if (n * p) % 2 else 1
        act.append({mv(b): mat.scale(s) for b, mat in M.act[g].items()})
    lo, hi = M.window
    window = (None if lo is None else lo + m, None if hi is None else hi + m)
    return DgModule(alg, dims, d, act, window)


def truncate(M: DgModule, lo: int | None, hi: int | None) -> DgModule:
    """Keep internal degrees in [lo, hi]; the window shrinks accordingly."""
    keep = lambda b: in_window(b[1], (lo, hi))
    dims = {b: v for b, v in M.dims.items() if keep(b)}
    d = {b: m for b, m in M.d.items() if keep(b)}
    act = []
    for g in range(M.algebra.n_gens):
        q = M.algebra.gen_degree(g)[1]
        act.append({b: m for b, m in M.act[g].items() if keep(b) and keep((b[0], b[1] + q))})
    return DgModule(M.algebra, dims, d, act, window_intersect(M.window, (lo, hi)))


def _block(mats: Sequence[tuple[SMat, int, int]], nrows: int, ncols: int) -> SMat:
    cols: dict[int, dict[int, Num]] = {}
    for mat, r0, c0 in mats:
        for c, col in mat.cols.items():
            dst = cols.setdefault(c + c0, {})
            for r, v in col.items():
                dst[r + r0] = dst.get(r + r0, 0) + v
    return SMat(nrows, ncols, cols)


def direct_sum(*mods: DgModule) -> DgModule:
    if not mods:
        raise ValueError("direct_sum needs at least one module")
    alg = mods[0].algebra
    if any(M.algebra != alg for M in mods):
        raise ValueError("direct summands must live over the same algebra")
    window: Window = (None, None)
    for M in mods:
        window = window_intersect(window, M.window)
    mods = [truncate(M, *window) for M in mods]
    keys = sorted(set().union(*[M.dims for M in mods]))
    offs = {b: [0] for b in keys}
    for b in keys:
        for M in mods:
            offs[b].append(offs[b][-1] + M.dim(b))
    dims = {b: offs[b][-1] for b in keys}

    def combine(get, target) -> dict[Bideg, SMat]:
        out = {}
        for b in keys:
            t = target(b)
            blocks = [(get(M, b), offs.get(t, [0] * (len(mods) + 1))[k], offs[b][k]) for k, M in enumerate(mods)]
            mat = _block(blocks, dims.get(t, 0), dims[b])
            if not mat.is_zero():
                out[b] = mat
        return out

    d = combine(lambda M, b: M.d_at(b), lambda b: (b[0] + 1, b[1]))
    act = []
    for g in range(alg.n_gens):
        p, q = alg.gen_degree(g)
        act.append(combine(lambda M, b, g=g: M.act_at(g, b), lambda b, p=p, q=q: (b[0] + p, b[1] + q)))
    return DgModule(alg, dims, d, act, window)


@dataclass
class ModuleMap:
    """A degree-(0,0) map of dg-modules, one matrix per bidegree."""

    source: DgModule
    target: DgModule
    maps: dict[Bideg, SMat]

    def at(self, b: Bideg) -> SMat:
        m = self.maps.get(b)
        return m if m is not None else SMat(self.target.dim(b), self.source.dim(b))

    @classmethod
    def identity(cls, M: DgModule) -> "ModuleMap":
        return cls(M, M, {b: SMat.identity(n) for b, n in M.dims.items()})

    @classmethod
    def zero(cls, M: DgModule, N: DgModule) -> "ModuleMap":
        return cls(M, N, {})

    def scale(self, c: Num) -> "ModuleMap":
        return ModuleMap(self.source, self.target, {b: m.scale(c) for b, m in self.maps.items()})

    def problems(self) -> list[str]:
        out = []
        M, N = self.source, self.target
        alg = M.algebra
        for b in M.dims:
            i, j = b
            if N.d_at(b) @ self.at(b) != self.at((i + 1, j)) @ M.d_at(b):
                out.append(f"map does not commute with d at {b}")
            for g in range(alg.n_gens):
                p, q = alg.gen_degree(g)
                if N.act_at(g, b) @ self.at(b) != self.at((i + p, j + q)) @ M.act_at(g, b):
                    out.append(f"map is not linear for {alg.gen_name(g)} at {b}")
        return out


def cone(f: ModuleMap) -> DgModule:
    """N (+) M[1] with d = [[d_N, f], [0, -d_M]], g acting as (g, (-1)^|g| g)."""
    M, N = f.source, f.target
    alg = M.algebra
    if N.algebra != alg:
        raise ValueError("cone of a map between modules over different algebras")
    window = window_intersect(M.window, N.window)
    M, N = truncate(M, *window), truncate(N, *window)
    M1 = shift(M, 1, 0)
    keys = sorted(set(N.dims) | set(M1.dims))
    dims = {b: N.dim(b) + M1.dim(b) for b in keys}
    d = {}
    for b in keys:
        i, j = b
        t = (i + 1, j)
        blocks = [(N.d_at(b), 0, 0), (M1.d_at(b), N.dim(t), N.dim(b)), (f.at((i + 1, j)), 0, N.dim(b))]
        mat = _block(blocks, dims.get(t, 0), dims[b])
        if not mat.is_zero():
            d[b] = mat
    act = []
    for g in range(alg.n_gens):
        p, q = alg.gen_degree(g)
        tab = {}
        for b in keys:
            t = (b[0] + p, b[1] + q)
            mat = _block([(N.act_at(g, b), 0, 0), (M1.act_at(g, b), N.dim(t), N.dim(b))], dims.get(t, 0), dims[b])
            if not mat.is_zero():
                tab[b] = mat
        act.append(tab)
    return DgModule(alg, dims, d, act, window)


def euler_class(M: DgModule, window: Window | None = None) -> LaurentPoly:
    """sum (-1)^i dim H^i_j v^j, optionally restricted to a window of internal degrees."""
    H = cohomology(M)
    if window is not None:
        H = H.restrict(*window)
    return LaurentPoly(((j, -v if i % 2 else v) for (i, j), v in H.table.items()))


def cohomology_module(M: DgModule) -> DgModule:
    """H(M) as a bigraded vector space with zero differential and zero action."""
    return DgModule(M.algebra, dict(cohomology(M).table), window=M.window)


# serialization --------------------------------------------------------------


def _frac_json(x: Num) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def _frac_parse(v) -> Num:
    if isinstance(v, int):
        return v
    return normalize(Fraction(int(v[0]), int(v[1])))


def _mat_json(m: SMat) -> dict:
    entries = sorted((r, c, _frac_json(v)) for c, col in m.cols.items() for r, v in col.items())
    return {"shape": [m.nrows, m.ncols], "entries": [[r, c, f] for r, c, f in entries]}


def _mat_parse(doc: dict) -> SMat:
    nr, nc = doc["shape"]
    cols: dict[int, dict[int, Num]] = {}
    for r, c, f in doc["entries"]:
        cols.setdefault(c, {})[r] = _frac_parse(f)
    return SMat(nr, nc, cols)


def to_json(M: DgModule) -> dict:
    alg = M.algebra
    return {
        "algebra": alg.to_json(),
        "window": list(M.window),
        "components": [[i, j, n] for (i, j), n in M.dims.items()],
        "differential": [[i, j, _mat_json(m)] for (i, j), m in sorted(M.d.items())],
        "actions": {
            alg.gen_name(g): [[i, j, _mat_json(m)] for (i, j), m in sorted(M.act[g].items())]
            for g in range(alg.n_gens)
        },
    }


def from_json(doc: dict) -> DgModule:
    alg = KoszulAlgebra.from_json(doc["algebra"])
    dims = {(i, j): n for i, j, n in doc["components"]}
    d = {(i, j): _mat_parse(m) for i, j, m in doc["differential"]}
    act = []
    for g in range(alg.n_gens):
        act.append({(i, j): _mat_parse(m) for i, j, m in doc["actions"].get(alg.gen_name(g), [])})
    return DgModule(alg, dims, d, act, tuple(doc.get("window", (None, None))))


def dumps(M: DgModule) -> str:
    return json.dumps(to_json(M), sort_keys=True, indent=1)


def loads(s: str) -> DgModule:
    return from_json(json.loads(s))
