"""Seeded random inputs for the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .dgcore import (
    DgModule,
    KoszulAlgebra,
    ModuleMap,
    SubspacePair,
    direct_sum,
    free_module,
    mono_one,
    semifree_module,
    shift,
)
from .hecke import HeckeElt, monomial
from .laurent import LaurentPoly
from .linalg import SMat, rref
from .rootdata import RootDatum, all_elements


def random_laurent(rng: random.Random, terms: int = 3, span: int = 3, coeff: int = 3) -> LaurentPoly:
    return LaurentPoly({rng.randint(-span, span): rng.randint(-coeff, coeff) for _ in range(rng.randint(0, terms))})


def random_weight(rng: random.Random, d: RootDatum, bound: int) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(d.rank))


def random_hecke(rng: random.Random, d: RootDatum, n_terms: int = 2, bound: int = 2) -> HeckeElt:
    W = all_elements(d)
    out = monomial(d, d.zero(), (), 0)
    for _ in range(n_terms):
        c = random_laurent(rng, 2, 2, 2)
        out = out + monomial(d, random_weight(rng, d, bound), rng.choice(W), c)
    return out


def random_subspace(rng: random.Random, n: int, k: int) -> tuple[tuple[Fraction, ...], ...]:
    """A uniformly-ish random k-dimensional subspace of Q^n (RREF basis)."""
    if k == 0:
        return ()
    while True:
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
        red, piv = rref(rows, n)
        if len(piv) == k:
            return tuple(tuple(r) for r in red)


def random_pair(rng: random.Random, max_dim: int = 3) -> SubspacePair:
    n = rng.randint(1, max_dim)
    return SubspacePair(n, random_subspace(rng, n, rng.randint(0, n)), random_subspace(rng, n, rng.randint(0, n)))


def random_unimodular(rng: random.Random, n: int) -> tuple[SMat, SMat]:
    """A random integer matrix with integer inverse, as (P, P^-1)."""
    P = SMat.identity(n)
    Pinv = SMat.identity(n)
    for _ in range(2 * n):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        c = rng.choice((-1, 1, 2))
        E = SMat(n, n, {k: {k: 1} for k in range(n)})
        E.cols[b] = {b: 1, a: c}
        Einv = SMat(n, n, {k: {k: 1} for k in range(n)})
        Einv.cols[b] = {b: 1, a: -c}
        P = E @ P
        Pinv = Pinv @ Einv
    return P, Pinv


def change_basis(rng: random.Random, M: DgModule) -> DgModule:
    """Conjugate every structure map by random unimodular basis changes."""
    P = {b: random_unimodular(rng, n) for b, n in M.dims.items()}
    alg = M.algebra
    d = {}
    for b, m in M.d.items():
        t = (b[0] + 1, b[1])
        d[b] = P[t][0] @ m @ P[b][1]
    act = []
    for g in range(alg.n_gens):
        p, q = alg.gen_degree(g)
        tab = {}
        for b, m in M.act[g].items():
            t = (b[0] + p, b[1] + q)
            tab[b] = P[t][0] @ m @ P[b][1]
        act.append(tab)
    return DgModule(alg, M.dims, d, act, M.window)


def random_complex(rng: random.Random, alg: KoszulAlgebra, max_bidegrees: int = 6) -> DgModule:
    """A complex of vector spaces with every generator acting by zero."""
    pieces: dict[tuple[int, int], int] = {}
    arrows: list[tuple[tuple[int, int], int, int]] = []
    budget = rng.randint(1, max_bidegrees)
    for _ in range(budget):
        i, j = rng.randint(-2, 2), rng.randint(-3, 3)
        if rng.random() < 0.5:
            a = pieces.get((i, j), 0)
            b = pieces.get((i + 1, j), 0)
            pieces[(i, j)] = a + 1
            pieces[(i + 1, j)] = b + 1
            arrows.append(((i, j), a, b))
        else:
            pieces[(i, j)] = pieces.get((i, j), 0) + 1
    cols: dict[tuple[int, int], dict[int, dict[int, int]]] = {}
    for (b, a, t) in arrows:
        cols.setdefault(b, {})[a] = {t: 1}
    d = {b: SMat(pieces[(b[0] + 1, b[1])], pieces[b], c) for b, c in cols.items()}
    M = DgModule(alg, pieces, d)
    return change_basis(rng, M)


def _positive(alg: KoszulAlgebra) -> bool:
    return all(q > 0 for _, (_, q) in alg.ext_gens + alg.sym_gens)


def random_free(rng: random.Random, alg: KoszulAlgebra, hi_span: int = 4) -> DgModule:
    gens = [(rng.randint(-1, 1), rng.randint(-2, 2)) for _ in range(rng.randint(1, 2))]
    hi = max(j for _, j in gens) + rng.randint(0, hi_span) if alg.n_sym else None
    return free_module(alg, gens, hi)


def random_semifree(rng: random.Random, alg: KoszulAlgebra, hi_span: int = 4) -> DgModule:
    """Two generators with the top one's differential hitting m * bottom."""
    i, j = rng.randint(-1, 1), rng.randint(-2, 2)
    if alg.n_sym and rng.random() < 0.7:
        e = [0] * alg.n_sym
        e[rng.randrange(alg.n_sym)] = 1
        if rng.random() < 0.3:
            e[rng.randrange(alg.n_sym)] += 1
        m = ((), tuple(e))
        q = alg.sym_gens[0][1][1] * sum(e)
    else:
        m = mono_one(alg)
        q = 0
    gens = [(i, j), (i + 1, j - q)]
    c = rng.choice((1, -1, 2, Fraction(1, 2)))
    hi = max(j, j - q) + rng.randint(0, hi_span) if alg.n_sym else None
    return semifree_module(alg, gens, {(0, 1): [(c, m)]}, hi)


def random_module(rng: random.Random, alg: KoszulAlgebra, depth: int = 0) -> DgModule:
    kinds = ["complex"]
    if _positive(alg):
        kinds += ["free", "semifree"]
    if depth < 1:
        kinds += ["sum", "shift"]
    kind = rng.choice(kinds)
    if kind == "complex":
        return random_complex(rng, alg)
    if kind == "free":
        return change_basis(rng, random_free(rng, alg))
    if kind == "semifree":
        return change_basis(rng, random_semifree(rng, alg))
    if kind == "sum":
        return direct_sum(random_module(rng, alg, depth + 1), random_module(rng, alg, depth + 1))
    return shift(random_module(rng, alg, depth + 1), rng.randint(-1, 1), rng.randint(-2, 2))


def random_finite_module(rng: random.Random, alg: KoszulAlgebra) -> DgModule:
    """Like :func:`random_module` but always finite-dimensional (no window)."""
    while True:
        M = random_module(rng, alg)
        if M.is_finite():
            return M


def random_chain_map(rng: random.Random, M: DgModule) -> ModuleMap:
    """A scalar multiple of the identity, possibly zero."""
    return ModuleMap.identity(M).scale(rng.choice((0, 1, -2)))


__all__ = [
    "random_laurent",
    "random_weight",
    "random_hecke",
    "random_subspace",
    "random_pair",
    "change_basis",
    "random_complex",
    "random_free",
    "random_semifree",
    "random_module",
    "random_finite_module",
    "random_chain_map",
]
