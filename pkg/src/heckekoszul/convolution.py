"""Convolution of dg-modules over the derived self-intersection of F in V.

At a one-point base the algebra is ``Sym(F^dual (+) F^dual) (x) Lambda(V^dual)``
with ``d(xi) = (xi|F, -xi|F)``: the T-algebra of the pair (diagonal V,
F x F) inside V x V. The duality ``frak_K`` lands in the same kind of
algebra for ``F^perp`` inside ``V^dual``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .dgcore import (
    DgModule,
    KoszulAlgebra,
    ModuleBuilder,
    SubspacePair,
    Window,
    WindowError,
    build_T,
    perp,
    shift,
)
from .koszul import (
    DualityContext,
    invert_grading,
    inverted_algebra,
    kappa,
    swap_roles,
)

DEFAULT_WINDOW: Window = (-16, 16)


@dataclass(frozen=True)
class ConvolutionContext:
    V_dim: int
    F_basis: tuple[tuple[Fraction, ...], ...] = ()
    window: Window = DEFAULT_WINDOW

    def __post_init__(self):
        # canonical RREF basis, validated through SubspacePair
        p = SubspacePair(self.V_dim, (), self.F_basis)
        object.__setattr__(self, "F_basis", p.F2_basis)

    @property
    def F_dim(self) -> int:
        return len(self.F_basis)

    @cached_property
    def pair(self) -> SubspacePair:
        n = self.V_dim
        diag = [[1 if c in (i, i + n) else 0 for c in range(2 * n)] for i in range(n)]
        ff = [list(v) + [0] * n for v in self.F_basis] + [[0] * n + list(v) for v in self.F_basis]
        return SubspacePair(2 * n, tuple(map(tuple, diag)), tuple(map(tuple, ff)))

    @cached_property
    def algebra(self) -> KoszulAlgebra:
        return build_T(self.pair)

    @cached_property
    def duality(self) -> DualityContext:
        return DualityContext(self.pair, self.window)

    def dual(self) -> "ConvolutionContext":
        return ConvolutionContext(self.V_dim, perp(self.F_basis, self.V_dim), self.window)

    def is_full(self) -> bool:
        """F = V, the degenerate case of the unit."""
        return self.F_dim == self.V_dim

    def sym_index(self, copy: int, k: int) -> int:
        """Global generator index of the k-th F^dual generator in copy 1 or 2."""
        return self.V_dim + (copy - 1) * self.F_dim + k

    def describe(self) -> dict:
        return {"n": self.V_dim, "F": [[str(x) for x in v] for v in self.F_basis], "window": list(self.window)}


def unit(ctx: ConvolutionContext, hi: int | None = None) -> DgModule:
    """Sym(F^dual) at (0, 2k); both copies act by multiplication, Lambda(V^dual) by 0."""
    A = ctx.algebra
    r = ctx.F_dim
    if hi is None:
        hi = ctx.window[1]
    if r and hi is None:
        raise WindowError("the unit is infinite; an upper window bound is required")
    mb = ModuleBuilder(A)
    exps: list[tuple[int, ...]] = []

    def rec(k: int, cur: list[int], deg: int):
        if k == r:
            exps.append(tuple(cur))
            return
        t = 0
        while deg + 2 * t <= (hi if r else 0):
            rec(k + 1, cur + [t], deg + 2 * t)
            t += 1

    rec(0, [], 0)
    for e in exps:
        mb.add_basis(e, (0, 2 * sum(e)))
    for e in exps:
        for k in range(r):
            e2 = list(e)
            e2[k] += 1
            e2 = tuple(e2)
            for copy in (1, 2):
                mb.add_act(ctx.sym_index(copy, k), e, e2, 1)
    return mb.build((None, hi) if r else (None, None), strict=False)


def _minj(M: DgModule) -> int | None:
    """Lowest internal degree of the true module (None for the zero module).

    An empty truncation still hides content above its window.
    """
    lo = min((j for _, j in M.dims), default=None)
    if lo is None and M.window[1] is not None:
        return M.window[1] + 1
    return lo


def convolution_window(M1: DgModule, M2: DgModule) -> int | None:
    """Top internal degree up to which M1 * M2 is exact (None: everywhere)."""
    bounds = []
    m1, m2 = _minj(M1), _minj(M2)
    if m1 is None or m2 is None:
        return None  # one factor is zero
    if M1.window[1] is not None:
        bounds.append(M1.window[1] + m2)
    if M2.window[1] is not None:
        bounds.append(M2.window[1] + m1)
    return min(bounds) if bounds else None


def convolve(ctx: ConvolutionContext, M1: DgModule, M2: DgModule, hi: int | None = None) -> DgModule:
    """M1 * M2 = M2 (x) Lambda(e_1..e_f) (x) M1, the derived tensor over the middle copy.

    d(e_k) = eta_k on M2's second copy minus eta_k on M1's first copy. The
    result's first copy acts through M2, its second copy through M1, and xi
    acts by xi (x) 1 + 1 (x) xi + sum_k xi(f_k) e_k.
    """
    A = ctx.algebra
    if M1.algebra != A or M2.algebra != A:
        raise ValueError("modules are not over the context's algebra")
    for M in (M1, M2):
        if M.window[0] is not None:
            raise WindowError("convolution needs modules that are exact in all low internal degrees")
    H = convolution_window(M1, M2)
    if hi is not None:
        if H is not None and hi > H:
            raise WindowError(f"requested top degree {hi} exceeds the certified bound {H}")
        H = hi
    n, f = ctx.V_dim, ctx.F_dim
    subsets = [S for k in range(f + 1) for S in combinations(range(f), k)]
    mb = ModuleBuilder(A)
    for b2, d2 in M2.dims.items():
        for S in subsets:
            for b1, d1 in M1.dims.items():
                i = b2[0] - len(S) + b1[0]
                j = b2[1] + 2 * len(S) + b1[1]
                if H is not None and j > H:
                    continue
                for k2 in range(d2):
                    for k1 in range(d1):
                        mb.add_basis((b2, k2, S, b1, k1), (i, j))
    for lab in list(mb.order):
        b2, k2, S, b1, k1 = lab
        s2 = -1 if b2[0] % 2 else 1
        sw = -1 if (b2[0] - len(S)) % 2 else 1
        # d on M2
        for r, c in M2.d_at(b2).column(k2).items():
            mb.add_d(lab, ((b2[0] + 1, b2[1]), r, S, b1, k1), c)
        # d on M1
        for r, c in M1.d_at(b1).column(k1).items():
            mb.add_d(lab, (b2, k2, S, (b1[0] + 1, b1[1]), r), sw * c)
        # Koszul part: contract e_k, multiply by eta_k (x) 1 - 1 (x) eta_k
        for t, k in enumerate(S):
            rest = S[:t] + S[t + 1 :]
            st = s2 * (-1 if t % 2 else 1)
            g2 = ctx.sym_index(2, k)
            g1 = ctx.sym_index(1, k)
            for r, c in M2.act_at(g2, b2).column(k2).items():
                mb.add_d(lab, ((b2[0], b2[1] + 2), r, rest, b1, k1), st * c)
            for r, c in M1.act_at(g1, b1).column(k1).items():
                mb.add_d(lab, (b2, k2, rest, (b1[0], b1[1] + 2), r), -st * c)
        # sym actions: copy 1 through M2, copy 2 through M1
        for k in range(f):
            g = ctx.sym_index(1, k)
            for r, c in M2.act_at(g, b2).column(k2).items():
                mb.add_act(g, lab, ((b2[0], b2[1] + 2), r, S, b1, k1), c)
            g = ctx.sym_index(2, k)
            for r, c in M1.act_at(g, b1).column(k1).items():
                mb.add_act(g, lab, (b2, k2, S, (b1[0], b1[1] + 2), r), c)
        # ext actions
        for a in range(n):
            for r, c in M2.act_at(a, b2).column(k2).items():
                mb.add_act(a, lab, ((b2[0] - 1, b2[1] + 2), r, S, b1, k1), c)
            for r, c in M1.act_at(a, b1).column(k1).items():
                mb.add_act(a, lab, (b2, k2, S, (b1[0] - 1, b1[1] + 2), r), sw * c)
            for k in range(f):
                c = ctx.F_basis[k][a]
                if c and k not in S:
                    pos = sum(1 for x in S if x < k)
                    sk = s2 * (-1 if pos % 2 else 1)
                    S2 = tuple(sorted(S + (k,)))
                    mb.add_act(a, lab, (b2, k2, S2, b1, k1), sk * c)
    return mb.build((None, H), strict=False)


def xi_identification(M: DgModule, ctx_dual: ConvolutionContext) -> DgModule:
    """Negate the second-copy sym actions, relabelling the diagonal as the anti-diagonal."""
    A = ctx_dual.algebra
    if not M.algebra.same_shape(A):
        raise ValueError("module does not match the dual convolution algebra")
    act = []
    for g in range(A.n_gens):
        s = -1 if g >= ctx_dual.sym_index(2, 0) and not A.is_ext(g) else 1
        act.append({b: m.scale(s) for b, m in M.act[g].items()})
    expected = tuple(
        tuple(-x if k >= ctx_dual.F_dim else x for k, x in enumerate(row)) for row in M.algebra.diff
    )
    if expected != A.diff:
        raise ValueError("sign change does not match the dual algebra's differential")
    return DgModule(A, M.dims, M.d, act, M.window)


def frak_K(ctx: ConvolutionContext, M: DgModule, lo: int | None = None, im: bool = True) -> DgModule:
    """The duality for convolution modules.

    kappa for the pair (diagonal V, F x F), then the grading inversion onto
    the T-algebra of the dual pair, the role swap to (diagonal, F^perp x
    F^perp), and the sign change on the second copy. With ``im`` (the
    default) the result keeps this inverted internal grading and is a module
    over ``ctx.dual().algebra``; without it the grading is flipped back.
    """
    dual = ctx.dual()
    N = kappa(ctx.duality, M, lo)
    dpair = ctx.pair.dual()
    P = invert_grading(N, build_T(dpair))
    Q = swap_roles(dpair, P)
    X = xi_identification(Q, dual)
    if im:
        return X
    return invert_grading(X, inverted_algebra(dual.algebra))


def twist_by_character(ctx: ConvolutionContext, M: DgModule, m: int) -> DgModule:
    return shift(M, 0, m)
