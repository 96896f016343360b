"""Linear Koszul duality at a one-point base.

``kappa = regrade o koszul_transform o dualize`` turns a dg-module over
``T = Sym(F1^perp -> F2^dual)`` into one over ``R = Sym((F2 -> E/F1)[2])``.
``kappa_dual`` runs the same construction for the dual pair and lands back
over ``T``; the grading inversion between ``R`` and the ``T``-algebra of the
dual pair is :func:`invert_grading`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .dgcore import (
    DgModule,
    KoszulAlgebra,
    ModuleBuilder,
    SubspacePair,
    Window,
    WindowError,
    build_R,
    build_S,
    build_T,
    enumerate_monomials,
    gen_times_mono,
    mono_degree,
    mono_diff,
)

DEFAULT_WINDOW: Window = (-16, 16)
PERTURBATIONS = ("module_sign", "twist_sign")


def _sigma(i: int) -> int:
    return -1 if (i * (i + 1) // 2) % 2 else 1


@dataclass(frozen=True)
class DualityContext:
    pair: SubspacePair
    window: Window = DEFAULT_WINDOW

    def __post_init__(self):
        lo, hi = self.window
        if lo is not None and hi is not None and lo > hi:
            raise ValueError("window must be nonempty")

    @cached_property
    def T(self) -> KoszulAlgebra:
        return build_T(self.pair)

    @cached_property
    def S(self) -> KoszulAlgebra:
        return build_S(self.pair)

    @cached_property
    def R(self) -> KoszulAlgebra:
        return build_R(self.pair)

    def dual(self) -> "DualityContext":
        return DualityContext(self.pair.dual(), self.window)


def dualize(ctx: DualityContext | None, M: DgModule) -> DgModule:
    """Graded dual: component (i, j) is the dual of M at (-i, -j).

    Basis vectors of the dual at cohomological degree i are rescaled by
    (-1)^(i(i+1)/2), which makes dualize an exact involution.
    """
    alg = M.algebra
    if ctx is not None and alg != ctx.T:
        raise ValueError("module is not over the context's T-algebra")
    dims = {(-i, -j): n for (i, j), n in M.dims.items()}
    d = {}
    for (i, j) in dims:
        src = M.d.get((-i - 1, -j))
        if src is not None:
            s = _sigma(i + 1) * _sigma(i) * (-1 if (i + 1) % 2 else 1)
            d[(i, j)] = src.transpose().scale(s)
    act = []
    for g in range(alg.n_gens):
        p, q = alg.gen_degree(g)
        tab = {}
        for (i, j) in dims:
            src = M.act[g].get((-i - p, -j - q))
            if src is not None:
                s = _sigma(i + p) * _sigma(i) * (-1 if (p * i) % 2 else 1)
                tab[(i, j)] = src.transpose().scale(s)
        act.append(tab)
    lo, hi = M.window
    return DgModule(alg, dims, d, act, (None if hi is None else -hi, None if lo is None else -lo))


def koszul_transform(
    ctx: DualityContext, N: DgModule, lo: int | None = None, perturb: str | None = None
) -> DgModule:
    """S (x) N with the Koszul twisting differential, on internal degrees >= lo.

    D(s n) = d(s) n + (-1)^|s| s d(n) + sum_k (-1)^(|x_k||s|) y_k s x_k n over
    the dual pairs (z_a, xi_a) and (u_b, eta_b). S acts on the left factor.

    Slice j only sees N on [j, infinity), so N must be finite above and exact
    from ``lo`` on. ``perturb`` deliberately breaks one sign (negative control).
    """
    T, S = ctx.T, ctx.S
    if N.algebra != T:
        raise ValueError("module is not over the context's T-algebra")
    if perturb is not None and perturb not in PERTURBATIONS:
        raise ValueError(f"unknown perturbation {perturb!r}")
    if N.window[1] is not None:
        raise WindowError("koszul_transform needs a module that is exact in all high internal degrees")
    n_lo = N.window[0]
    if lo is None:
        lo = ctx.window[0]
        if n_lo is not None and (lo is None or lo < n_lo):
            lo = n_lo
    elif n_lo is not None and lo < n_lo:
        raise WindowError(f"requested internal degree {lo} lies below the certified window start {n_lo}")
    if lo is None:
        raise WindowError("koszul_transform needs a lower internal-degree bound")
    if not N.dims:
        return DgModule(S, {}, window=(lo, None))
    jtop = max(j for _, j in N.dims)
    monos = enumerate_monomials(S, lo - jtop, 0)
    nT = T.n_ext
    nS = S.n_ext
    mb = ModuleBuilder(S)
    for s in monos:
        si, sj = mono_degree(S, s)
        for (i, j), n in N.dims.items():
            if sj + j >= lo:
                for k in range(n):
                    mb.add_basis((s, (i, j), k), (si + i, sj + j))
    for lab in list(mb.order):
        s, b, k = lab
        si = mono_degree(S, s)[0]
        sgn_s = -1 if si % 2 else 1
        for s2, c in mono_diff(S, s).items():
            mb.add_d(lab, (s2, b, k), c)
        ms = 1 if perturb == "module_sign" else sgn_s
        tb = (b[0] + 1, b[1])
        for r, c in N.d_at(b).column(k).items():
            mb.add_d(lab, (s, tb, r), ms * c)
        # (z_a (x) xi_a): xi_a is odd, so the sign is (-1)^|s|
        ts = 1 if perturb == "twist_sign" else sgn_s
        for a in range(nT):
            zs = gen_times_mono(S, nS + a, s)
            if zs is None:
                continue
            p, q = T.gen_degree(a)
            tb = (b[0] + p, b[1] + q)
            for r, c in N.act_at(a, b).column(k).items():
                mb.add_d(lab, (zs[1], tb, r), ts * zs[0] * c)
        # (u_b (x) eta_b): eta_b is even
        for bb in range(T.n_sym):
            us = gen_times_mono(S, bb, s)
            if us is None:
                continue
            g = nT + bb
            p, q = T.gen_degree(g)
            tb = (b[0] + p, b[1] + q)
            for r, c in N.act_at(g, b).column(k).items():
                mb.add_d(lab, (us[1], tb, r), us[0] * c)
        for g in range(S.n_gens):
            gs = gen_times_mono(S, g, s)
            if gs is not None:
                mb.add_act(g, lab, (gs[1], b, k), gs[0])
    return mb.build((lo, None), strict=False)


def regrade(N: DgModule, target: KoszulAlgebra | None = None) -> DgModule:
    """(i, j) -> (i + j, j); no signs change."""
    alg = N.algebra
    if target is None:
        target = KoszulAlgebra(
            tuple((n, (p + q, q)) for n, (p, q) in alg.ext_gens),
            tuple((n, (p + q, q)) for n, (p, q) in alg.sym_gens),
            alg.diff,
            alg.label + "'",
        )
    elif target.diff != alg.diff or [(p + q, q) for _, (p, q) in alg.ext_gens + alg.sym_gens] != [
        b for _, b in target.ext_gens + target.sym_gens
    ]:
        raise ValueError("target algebra is not the regrading of the module's algebra")
    mv = lambda b: (b[0] + b[1], b[1])
    return DgModule(
        target,
        {mv(b): n for b, n in N.dims.items()},
        {mv(b): m for b, m in N.d.items()},
        [{mv(b): m for b, m in tab.items()} for tab in N.act],
        N.window,
    )


def unregrade(N: DgModule, target: KoszulAlgebra) -> DgModule:
    """Inverse of :func:`regrade`: (i, j) -> (i - j, j)."""
    mv = lambda b: (b[0] - b[1], b[1])
    return DgModule(
        target,
        {mv(b): n for b, n in N.dims.items()},
        {mv(b): m for b, m in N.d.items()},
        [{mv(b): m for b, m in tab.items()} for tab in N.act],
        N.window,
    )


def invert_grading(M: DgModule, target: KoszulAlgebra) -> DgModule:
    """j -> -j, negating the ext actions; the target's differential is the negated one."""
    alg = M.algebra
    if [(p, -q) for _, (p, q) in alg.ext_gens + alg.sym_gens] != [b for _, b in target.ext_gens + target.sym_gens]:
        raise ValueError("target algebra does not have the inverted bidegrees")
    if any(a != -b for ra, rb in zip(alg.diff, target.diff) for a, b in zip(ra, rb)):
        raise ValueError("target algebra must carry the negated differential")
    mv = lambda b: (b[0], -b[1])
    act = []
    for g in range(alg.n_gens):
        s = -1 if alg.is_ext(g) else 1
        act.append({mv(b): m.scale(s) for b, m in M.act[g].items()})
    lo, hi = M.window
    return DgModule(
        target,
        {mv(b): n for b, n in M.dims.items()},
        {mv(b): m for b, m in M.d.items()},
        act,
        (None if hi is None else -hi, None if lo is None else -lo),
    )


def kappa(ctx: DualityContext, M: DgModule, lo: int | None = None, perturb: str | None = None) -> DgModule:
    """regrade(koszul_transform(dualize(M))), a module over ``ctx.R``.

    Exact on internal degrees >= lo (default: the context window start).
    """
    N = dualize(ctx, M)
    K = koszul_transform(ctx, N, lo, perturb)
    return regrade(K, ctx.R)


def kappa_dual(ctx: DualityContext, N: DgModule, lo: int | None = None) -> DgModule:
    """The duality of the dual pair, taking R-modules back to T-modules.

    Exact on internal degrees <= -lo.
    """
    dctx = ctx.dual()
    if N.algebra != ctx.R:
        raise ValueError("module is not over the context's R-algebra")
    Np = invert_grading(N, dctx.T)
    K = kappa(dctx, Np, lo)
    return invert_grading(K, ctx.T)


def kappa_window(M: DgModule, lo: int) -> Window:
    """Internal degrees on which kappa(M) computed from ``lo`` is exact."""
    hi = M.window[1]
    start = lo if hi is None else max(lo, -hi)
    return (start, None)


def inverted_algebra(alg: KoszulAlgebra, label: str | None = None) -> KoszulAlgebra:
    """The algebra that :func:`invert_grading` lands in: q -> -q, d -> -d."""
    return KoszulAlgebra(
        tuple((n, (p, -q)) for n, (p, q) in alg.ext_gens),
        tuple((n, (p, -q)) for n, (p, q) in alg.sym_gens),
        tuple(tuple(-x for x in row) for row in alg.diff),
        label if label is not None else alg.label + "^inv",
    )


def swapped(pair: SubspacePair) -> SubspacePair:
    return SubspacePair(pair.ambient_dim, pair.F2_basis, pair.F1_basis)


def swap_roles(pair: SubspacePair, N: DgModule, hi: int | None = None) -> DgModule:
    """Move a module over T(F1, F2) to T(F2, F1) through the symmetric model.

    C = Sym(E^dual[1] -> F1^dual (+) F2^dual) contains both algebras and is
    semifree over T(F1, F2): C = T(F1, F2) (x) Lambda(Q) (x) Sym(F1^dual) with
    Q spanned by the unit covectors at the non-pivot columns of F1^perp. The
    module C (x)_T N is quasi-isomorphic to N and carries the T(F2, F1)-action.
    """
    T12 = build_T(pair)
    T21 = build_T(swapped(pair))
    if N.algebra != T12:
        raise ValueError("module is not over T of the given pair")
    if hi is None:
        hi = N.window[1]
    elif N.window[1] is not None and hi > N.window[1]:
        raise WindowError("requested window exceeds the module's certified window")
    n = pair.ambient_dim
    xi = pair.F1_perp
    g = pair.F1_basis  # F1^dual generators are dual to this basis
    h = pair.F2_basis
    if g and hi is None:
        raise WindowError("swap_roles needs an upper internal-degree bound")
    pivots = [next(c for c, x in enumerate(v) if x) for v in xi]
    qcols = [c for c in range(n) if c not in pivots]

    def dot(x, y):
        return sum(a * b for a, b in zip(x, y))

    # d q_c = sum_k q_c(g_k) zeta_k + sum_b q_c(h_b) eta_b
    dq_zeta = [[g[k][c] for k in range(len(g))] for c in qcols]
    dq_eta = [[h[b][c] for b in range(len(h))] for c in qcols]
    # ext generators y of T21 as (T12 ext part, Q part)
    y_parts = []
    for y in T21_ext_vectors(pair):
        alpha = [y[p] for p in pivots]
        rest = list(y)
        for a, v in zip(alpha, xi):
            if a:
                rest = [r - a * x for r, x in zip(rest, v)]
        beta = [rest[c] for c in qcols]
        y_parts.append((alpha, beta))

    # Lambda(Q) (x) Sym(F1^dual): reuse the monomial machinery of T21's shape
    aux = KoszulAlgebra(
        tuple((f"q{c + 1}", (-1, 2)) for c in qcols),
        tuple((f"zeta{k + 1}", (0, 2)) for k in range(len(g))),
        tuple(tuple(0 for _ in g) for _ in qcols),
        "aux",
    )
    lo_n = min((j for _, j in N.dims), default=0)
    monos = enumerate_monomials(aux, None, None if hi is None else hi - lo_n)
    mb = ModuleBuilder(T21)
    for m in monos:
        mi, mj = mono_degree(aux, m)
        for (i, j), dim in N.dims.items():
            if hi is None or j + mj <= hi:
                for k in range(dim):
                    mb.add_basis((m, (i, j), k), (i + mi, j + mj))
    nT = T12.n_ext
    for lab in list(mb.order):
        (S, e), b, k = lab
        sgn = -1 if len(S) % 2 else 1
        for r, c in N.d_at(b).column(k).items():
            mb.add_d(lab, ((S, e), (b[0] + 1, b[1]), r), sgn * c)
        for t, qi in enumerate(S):
            rest = S[:t] + S[t + 1 :]
            st = -1 if t % 2 else 1
            for kk, c in enumerate(dq_zeta[qi]):
                if c:
                    e2 = list(e)
                    e2[kk] += 1
                    mb.add_d(lab, ((rest, tuple(e2)), b, k), st * c)
            for bb, c in enumerate(dq_eta[qi]):
                if c:
                    gidx = nT + bb
                    tb = (b[0], b[1] + 2)
                    for r, c2 in N.act_at(gidx, b).column(k).items():
                        mb.add_d(lab, ((rest, e), tb, r), st * c * c2)
        # T21 ext generators
        for y, (alpha, beta) in enumerate(y_parts):
            for c_idx, c in enumerate(beta):
                if c:
                    r = gen_times_mono(aux, c_idx, (S, e))
                    if r is not None:
                        mb.add_act(y, lab, (r[1], b, k), c * r[0])
            for a, c in enumerate(alpha):
                if c:
                    tb = (b[0] - 1, b[1] + 2)
                    for r, c2 in N.act_at(a, b).column(k).items():
                        mb.add_act(y, lab, ((S, e), tb, r), sgn * c * c2)
        # T21 sym generators: the zeta variables
        for kk in range(len(g)):
            e2 = list(e)
            e2[kk] += 1
            mb.add_act(T21.n_ext + kk, lab, ((S, tuple(e2)), b, k), 1)
    window = (N.window[0], hi)
    return mb.build(window, strict=False)


def T21_ext_vectors(pair: SubspacePair):
    """Ext generators of T(F2, F1), i.e. the RREF basis of F2^perp."""
    return pair.F2_perp
