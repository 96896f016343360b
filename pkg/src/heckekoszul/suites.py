"""Deterministic verification suites and their reports.

Every check gets its own random stream seeded from ``(seed, check name)``, so
a report depends only on the parameters and the seed, whatever order or
process the checks run in.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import hecke
from .convolution import ConvolutionContext, convolve, frak_K, twist_by_character, unit
from .dgcore import (
    BigradedDims,
    DgModule,
    ModuleMap,
    cohomology,
    cohomology_module,
    cone,
    direct_sum,
    euler_class,
    shift,
)
from .expr import parse_morphism_spec
from .koszul import (
    PERTURBATIONS,
    DualityContext,
    invert_grading,
    inverted_algebra,
    kappa,
    kappa_dual,
)
from .laurent import V, LaurentPoly
from .rootdata import RootDatum, all_elements
from .samples import random_hecke, random_module, random_pair, random_subspace

STATUSES = ("pass", "fail", "skipped")
SUITES = ("hecke", "koszul", "convolution")
HECKE_TYPES = ("A1", "A1xA1", "A2", "B2", "G2")


@dataclass
class CheckRecord:
    name: str
    status: str
    witness: str | None = None
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "fail") != (self.witness is not None):
            raise ValueError("a witness is recorded exactly for failing checks")

    def to_json(self, timing: bool = False) -> dict:
        out = {"name": self.name, "status": self.status, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass
class Report:
    suite: str
    params: dict
    seed: int
    checks: list[CheckRecord]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self, timing: bool = False) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "checks": [c.to_json(timing) for c in sorted(self.checks, key=lambda c: c.name)],
        }

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, indent=2) + "\n"

    def summary_lines(self) -> list[str]:
        lines = []
        for c in sorted(self.checks, key=lambda c: c.name):
            extra = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"{c.status.upper():7s} {c.name}{extra}")
        passed = sum(c.status == "pass" for c in self.checks)
        failed = sum(c.status == "fail" for c in self.checks)
        lines.append(f"{self.suite}: {passed} passed, {failed} failed, {len(self.checks) - passed - failed} skipped")
        return lines


@dataclass
class SuiteParams:
    types: tuple[str, ...] = HECKE_TYPES
    weight_bound: int = 3
    dim: int | None = None
    fdim: int | None = None
    trials: int | None = None
    window: tuple[int, int] | None = None
    spec: str | None = None
    jobs: int = 1

    def to_json(self, suite: str) -> dict:
        out: dict = {}
        if suite in ("hecke", "all"):
            out["types"] = list(self.types)
            out["weight_bound"] = self.weight_bound
            if self.spec is not None:
                out["spec"] = self.spec
        if suite in ("koszul", "convolution", "all"):
            out["dim"] = self.dim
            out["fdim"] = self.fdim
            out["window"] = list(self.window) if self.window else None
        out["trials"] = self.trials
        return out


class CheckFailed(Exception):
    def __init__(self, witness: str, **detail):
        super().__init__(witness)
        self.witness = witness
        self.detail = detail


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


# hecke checks -----------------------------------------------------------------


def _weights(d: RootDatum, bound: int):
    from itertools import product

    return [tuple(p) for p in product(range(-bound, bound + 1), repeat=d.rank)]


def check_relations(label: str, spec_src: str, weight_bound: int, rng) -> dict:
    d = RootDatum.from_label(label)
    spec = parse_morphism_spec(spec_src, d)
    rep = hecke.verify_relations(spec, d, weight_bound)
    counts = {k: f"{p}/{t}" for k, (p, t) in rep.counts().items()}
    if not rep.ok:
        f = rep.failures()
        rels = sorted({c.relation for c in f})
        first = next((c for c in f if c.relation == "vi"), f[0])
        raise CheckFailed(
            f"relation ({first.relation}) at {first.instance}: {first.witness}", failing_relations=rels, counts=counts
        )
    return {"instances": len(rep.checks), "counts": counts}


def check_kim_generators(label: str, weight_bound: int, rng) -> dict:
    d = RootDatum.from_label(label)
    n = 0
    for i in range(1, d.rank + 1):
        T = hecke.t_alpha(d, i)
        expect = T - hecke.scalar(d, V) + hecke.scalar(d, V**-1)
        got = hecke.k_im(T)
        if got != expect:
            raise CheckFailed(f"k_im(T[{i}]) = {got}, expected {expect}")
        n += 1
    for x in _weights(d, weight_bound):
        got = hecke.k_im(hecke.theta(d, x))
        expect = hecke.theta(d, tuple(-t for t in x))
        if got != expect:
            raise CheckFailed(f"k_im(theta{list(x)}) = {got}, expected {expect}")
        n += 1
    return {"instances": n}


def check_kim_homomorphism(label: str, trials: int, rng) -> dict:
    d = RootDatum.from_label(label)
    for _ in range(trials):
        a, b = random_hecke(rng, d), random_hecke(rng, d)
        lhs, rhs = hecke.k_im(a * b), hecke.k_im(a) * hecke.k_im(b)
        if lhs != rhs:
            raise CheckFailed(f"k_im(ab) != k_im(a)k_im(b) for a = {a}, b = {b}")
    return {"pairs": trials}


def check_involutions(label: str, bound: int, rng) -> dict:
    d = RootDatum.from_label(label)
    n = 0
    for a in hecke.basis_monomials(d, bound):
        for name, f in (("im", hecke.im), ("iota", hecke.iota), ("k_im", hecke.k_im)):
            if f(f(a)) != a:
                raise CheckFailed(f"{name}({name}({a})) != {a}")
        if hecke.im(hecke.iota(a)) != hecke.iota(hecke.im(a)):
            raise CheckFailed(f"im and iota do not commute on {a}")
        n += 1
    return {"monomials": n}


def check_kim_t_alpha(label: str, rng) -> dict:
    d = RootDatum.from_label(label)
    q = V * V
    for i in range(1, d.rank + 1):
        t = hecke.t_small(d, i)
        got = hecke.k_im(t)
        stated = -t + hecke.scalar(d, q - 1)
        t_inv = hecke.inverse(hecke.t_alpha(d, i)).scale(V**-1)
        if t * t_inv != hecke.one(d):
            raise CheckFailed(f"t_{i} * t_{i}^-1 != 1")
        via_inverse = -(t_inv.scale(q))
        if got != stated:
            raise CheckFailed(f"k_im(t_{i}) = {got}, expected {stated}")
        if got != via_inverse:
            raise CheckFailed(f"k_im(t_{i}) = {got}, but -q t^-1 = {via_inverse}")
    return {"generators": d.rank}


def check_associativity(label: str, trials: int, rng) -> dict:
    d = RootDatum.from_label(label)
    for _ in range(trials):
        a, b, c = (random_hecke(rng, d, 2, 1) for _ in range(3))
        if (a * b) * c != a * (b * c):
            raise CheckFailed(f"(ab)c != a(bc) for a = {a}, b = {b}, c = {c}")
    return {"triples": trials}


def check_semilinearity(label: str, trials: int, rng) -> dict:
    from .samples import random_laurent

    d = RootDatum.from_label(label)
    for _ in range(trials):
        a = random_hecke(rng, d)
        f = random_laurent(rng)
        if hecke.k_im(a.scale(f)) != hecke.k_im(a).scale(f.substitute_neg_v()):
            raise CheckFailed(f"k_im(f a) != f(-v) k_im(a) for f = {f}, a = {a}")
    return {"trials": trials}


def check_closures(label: str, bound: int, rng) -> dict:
    """Generator-defined KIM and iota agree with the composite and closed forms."""
    d = RootDatum.from_label(label)
    kspec = hecke.k_im_spec(d)
    ispec = hecke.iota_spec(d)
    n = 0
    for a in hecke.basis_monomials(d, bound):
        if hecke.apply_morphism(kspec, a) != hecke.iota(hecke.im(a)):
            raise CheckFailed(f"generator-defined KIM differs from iota(im(.)) on {a}")
        if hecke.apply_morphism(ispec, a) != hecke.iota(a):
            raise CheckFailed(f"iota closed form differs from the generator extension on {a}")
        n += 1
    return {"monomials": n}


def reduced_words(d: RootDatum, w) -> list[tuple[int, ...]]:
    """All reduced words of w."""
    if not w:
        return [()]
    out = []
    for i in range(1, d.rank + 1):
        u = d.left_mul_simple(i, w)
        if len(u) < len(w):
            out.extend((i,) + r for r in reduced_words(d, u))
    return out


def check_word_independence(label: str, rng) -> dict:
    d = RootDatum.from_label(label)
    specs = [hecke.im_spec(d), hecke.k_im_spec(d)]
    n = 0
    for w in all_elements(d):
        words = reduced_words(d, w)
        for spec in specs:
            ref = spec.image_T_word(w)
            for word in words:
                if spec.image_T_word(word) != ref:
                    raise CheckFailed(f"{spec.name} image of T{list(word)} differs from that of T{list(w)}")
                n += 1
        # theta generators in a different order
        x = tuple(rng.randint(-2, 2) for _ in range(d.rank))
        for spec in specs:
            prod = hecke.one(d)
            for i in reversed(range(d.rank)):
                g = spec.image_theta_generator(i + 1, 1 if x[i] > 0 else -1)
                for _ in range(abs(x[i])):
                    prod = prod * g
            if prod != spec.image_theta(x):
                raise CheckFailed(f"{spec.name} image of theta{list(x)} depends on the factor order")
    return {"words": n}


def check_negative_control_hecke(label: str, rng) -> dict:
    d = RootDatum.from_label(label)
    rep = hecke.verify_relations(parse_morphism_spec("T->T+1", d), d, 1)
    vi = [c for c in rep.failures() if c.relation == "vi"]
    if not vi:
        raise CheckFailed("the spec T->T+1 passed relation (vi); the verifier is vacuous")
    return {"detected": f"relation (vi) at {vi[0].instance}: {vi[0].witness}"}


def hecke_checks(p: SuiteParams) -> list[tuple[str, Callable, tuple]]:
    checks = []
    trials = p.trials if p.trials is not None else 500
    for t in p.types:
        d = RootDatum.from_label(t)
        inv_bound = 2 if d.rank <= 2 else 1
        wb = p.weight_bound
        pre = f"hecke.{t}"
        if p.spec is not None:
            checks.append((f"{pre}.relations.custom", check_relations, (t, p.spec, wb)))
            continue
        for s in ("KIM", "IM", "iota", "identity"):
            checks.append((f"{pre}.relations.{s}", check_relations, (t, s, wb)))
        checks += [
            (f"{pre}.kim_generators", check_kim_generators, (t, wb)),
            (f"{pre}.kim_homomorphism", check_kim_homomorphism, (t, trials)),
            (f"{pre}.involutions", check_involutions, (t, inv_bound)),
            (f"{pre}.kim_t_alpha", check_kim_t_alpha, (t,)),
            (f"{pre}.associativity", check_associativity, (t, trials)),
            (f"{pre}.semilinearity", check_semilinearity, (t, min(trials, 100))),
            (f"{pre}.closures", check_closures, (t, inv_bound)),
            (f"{pre}.word_independence", check_word_independence, (t,)),
            (f"{pre}.negative_control", check_negative_control_hecke, (t,)),
        ]
    return checks


# koszul checks ----------------------------------------------------------------

KOSZUL_WINDOW = (-8, 8)
MAX_BIDEGREES = 12


def check_euler_cohomology(max_dim: int, trials: int, rng) -> dict:
    n_bideg = []
    for _ in range(trials):
        pair = random_pair(rng, max_dim)
        M = random_module(rng, DualityContext(pair).T)
        while len(M.dims) > MAX_BIDEGREES:
            M = random_module(rng, DualityContext(pair).T)
        probs = M.problems(limit=1)
        if probs:
            raise CheckFailed(f"random module is not a dg-module: {probs[0]}")
        if euler_class(M) != euler_class(cohomology_module(M)):
            raise CheckFailed(f"euler class differs from that of cohomology for a module of dims {M.dims}")
        n_bideg.append(len(M.dims))
    return {"modules": trials, "max_bidegrees": max(n_bideg, default=0)}


def check_cone_shift(max_dim: int, trials: int, rng) -> dict:
    for _ in range(trials):
        pair = random_pair(rng, max_dim)
        T = DualityContext(pair).T
        M, N = random_module(rng, T), random_module(rng, T)
        S = direct_sum(M, N)
        w = S.window
        if euler_class(S) != euler_class(M, w) + euler_class(N, w):
            raise CheckFailed("euler class is not additive on a direct sum")
        f = ModuleMap.identity(S).scale(rng.choice((0, 1, -2)))
        C = cone(f)
        if C.problems(limit=1):
            raise CheckFailed(f"cone is not a dg-module: {C.problems(limit=1)[0]}")
        if euler_class(C) != euler_class(S) - euler_class(S):
            raise CheckFailed("euler class of a cone is not target minus source")
        n, m = rng.randint(-2, 2), rng.randint(-2, 2)
        Ms = shift(M, n, m)
        expect = euler_class(M) * LaurentPoly.monomial(m, -1 if n % 2 else 1)
        if euler_class(Ms) != expect:
            raise CheckFailed(f"euler class of M[{n}]<{m}> is not (-1)^n v^m times that of M")
        if cohomology(Ms) != cohomology(M).shifted(n, m):
            raise CheckFailed("cohomology of a shift is not the re-indexed cohomology")
        if not shift(Ms, -n, -m).same_as(M):
            raise CheckFailed("shift(shift(M, n, m), -n, -m) != M")
    return {"trials": trials}


def _ctx(pair, window) -> DualityContext:
    return DualityContext(pair, tuple(window))


def check_kappa_examples(window, rng) -> dict:
    from .dgcore import SubspacePair, free_module, skyscraper

    ctx = _ctx(SubspacePair(1), window)
    lo = window[0]
    K = kappa(ctx, skyscraper(ctx.T))
    expect = BigradedDims({(0, -2 * k): 1 for k in range(0, -lo // 2 + 1)})
    if cohomology(K) != expect:
        raise CheckFailed(f"kappa(trivial) = {cohomology(K)}, expected {expect}")
    K = kappa(ctx, free_module(ctx.T, [(0, 0)]))
    if cohomology(K).total() != 1 or len(cohomology(K).table) != 1:
        raise CheckFailed(f"kappa(free exterior module) = {cohomology(K)}, expected one class")
    return {"examples": 2}


def _kappa_sample(rng, max_dim, window):
    pair = random_pair(rng, max_dim)
    ctx = _ctx(pair, window)
    return ctx, random_module(rng, ctx.T)


def check_kappa_valid(max_dim: int, trials: int, window, rng) -> dict:
    for _ in range(trials):
        ctx, M = _kappa_sample(rng, max_dim, window)
        K = kappa(ctx, M)
        probs = K.problems(limit=1)
        if probs:
            raise CheckFailed(f"kappa output is not a dg-module over R: {probs[0]}")
    return {"trials": trials}


def check_grading_identity(max_dim: int, trials: int, window, rng) -> dict:
    compared = 0
    for _ in range(trials):
        ctx, M = _kappa_sample(rng, max_dim, window)
        K = kappa(ctx, M)
        for n in range(-2, 3):
            for m in range(-2, 3):
                Ks = kappa(ctx, shift(M, n, m))
                start = max(Ks.window[0], K.window[0] - m)
                a = cohomology(Ks).restrict(start)
                b = cohomology(shift(K, -n + m, -m)).restrict(start)
                if a != b:
                    raise CheckFailed(f"kappa(M[{n}]<{m}>) = {a} but kappa(M)[{-n + m}]<{-m}> = {b} on j >= {start}")
                compared += 1
    return {"samples": trials, "comparisons": compared}


def check_double_duality(max_dim: int, trials: int, window, rng) -> dict:
    for _ in range(trials):
        ctx, M = _kappa_sample(rng, max_dim, window)
        D = kappa_dual(ctx, kappa(ctx, M))
        hi = D.window[1]
        a, b = cohomology(D).restrict(None, hi), cohomology(M).restrict(None, hi)
        if a != b:
            raise CheckFailed(f"kappa_dual(kappa(M)) = {a} but M has {b} on j <= {hi}")
    return {"samples": trials}


def check_exactness_additivity(max_dim: int, trials: int, window, rng) -> dict:
    for _ in range(trials):
        ctx, M = _kappa_sample(rng, max_dim, window)
        A = cone(ModuleMap.identity(M))
        KA = kappa(ctx, A)
        if cohomology(KA).table:
            raise CheckFailed(f"kappa of an acyclic module has cohomology {cohomology(KA)}")
        M2 = random_module(rng, ctx.T)
        S = kappa(ctx, direct_sum(M, M2))
        w = S.window
        a = cohomology(S).restrict(*w)
        b = (cohomology(kappa(ctx, M)) + cohomology(kappa(ctx, M2))).restrict(*w)
        if a != b:
            raise CheckFailed(f"kappa(M + M') = {a} but kappa(M) + kappa(M') = {b}")
    return {"trials": trials}


def check_negative_control_koszul(window, rng) -> dict:
    from .dgcore import SubspacePair, free_module

    pair = SubspacePair(2, ((1, 0),), ((0, 1),))
    ctx = _ctx(pair, window)
    M = free_module(ctx.T, [(0, 0)], hi=4)
    perturb = rng.choice(PERTURBATIONS)
    K = kappa(ctx, M, perturb=perturb)
    w = K.d_squared_witness()
    if w is None:
        raise CheckFailed(f"perturbing the {perturb} went unnoticed by the d^2 = 0 check")
    if kappa(ctx, M).d_squared_witness() is not None:
        raise CheckFailed("the unperturbed transform fails d^2 = 0")
    return {"perturbation": perturb, "detected": w}


def koszul_checks(p: SuiteParams) -> list[tuple[str, Callable, tuple]]:
    n = p.dim if p.dim is not None else 3
    trials = p.trials if p.trials is not None else 100
    w = p.window or KOSZUL_WINDOW
    return [
        ("koszul.euler_cohomology", check_euler_cohomology, (n, 2 * trials)),
        ("koszul.cone_shift", check_cone_shift, (n, trials)),
        ("koszul.examples", check_kappa_examples, (w,)),
        ("koszul.kappa_valid", check_kappa_valid, (n, trials, w)),
        ("koszul.grading_identity", check_grading_identity, (n, trials, w)),
        ("koszul.double_duality", check_double_duality, (n, trials, w)),
        ("koszul.exactness_additivity", check_exactness_additivity, (n, trials, w)),
        ("koszul.negative_control", check_negative_control_koszul, (w,)),
    ]


# convolution checks -------------------------------------------------------------

CONVOLUTION_WINDOW = (-4, 4)


def _conv_ctx(n: int, f: int, window, rng) -> ConvolutionContext:
    return ConvolutionContext(n, random_subspace(rng, n, f), tuple(window))


def _top(*mods: DgModule) -> int | None:
    his = [M.window[1] for M in mods if M.window[1] is not None]
    return min(his) if his else None


def check_unit_image(n: int, f: int, window, rng) -> dict:
    ctx = _conv_ctx(n, f, window, rng)
    U = unit(ctx)
    K = frak_K(ctx, U)
    Ud = unit(ctx.dual())
    hi = _top(K, Ud)
    a, b = cohomology(K).restrict(None, hi), cohomology(Ud).restrict(None, hi)
    if a != b:
        raise CheckFailed(f"frak_K(unit_F) = {a} but unit_F^perp = {b} on j <= {hi}")
    # without the grading inversion the match is with the inverted unit
    K2 = frak_K(ctx, U, im=False)
    Ui = invert_grading(Ud, inverted_algebra(ctx.dual().algebra))
    lo = max(x for x in (K2.window[0], Ui.window[0], -hi if hi is not None else None) if x is not None) if hi is not None else None
    if cohomology(K2).restrict(lo) != cohomology(Ui).restrict(lo):
        raise CheckFailed("frak_K(unit_F) without grading inversion does not match the inverted unit")
    return {"F_dim": f, "F_equals_V": ctx.is_full(), "classes": b.total(), "window_top": hi}


def check_unit_law(n: int, f: int, trials: int, window, rng) -> dict:
    ctx = _conv_ctx(n, f, window, rng)
    U = unit(ctx)
    for _ in range(trials):
        M = random_module(rng, ctx.algebra)
        for side, C in (("right", convolve(ctx, M, U)), ("left", convolve(ctx, U, M))):
            hi = _top(C, M)
            w = (None, hi)
            if euler_class(C, w) != euler_class(M, w):
                raise CheckFailed(f"{side} unit law fails: {euler_class(C, w)} vs {euler_class(M, w)}")
    return {"trials": trials, "F_equals_V": ctx.is_full()}


def check_conv_associativity(n: int, f: int, trials: int, window, rng) -> dict:
    ctx = _conv_ctx(n, f, window, rng)
    for _ in range(trials):
        M1, M2, M3 = (random_module(rng, ctx.algebra) for _ in range(3))
        L = convolve(ctx, convolve(ctx, M1, M2), M3)
        R = convolve(ctx, M1, convolve(ctx, M2, M3))
        hi = _top(L, R)
        if euler_class(L, (None, hi)) != euler_class(R, (None, hi)):
            raise CheckFailed(f"(M1*M2)*M3 and M1*(M2*M3) have different classes on j <= {hi}")
    return {"trials": trials}


def check_compatibility(n: int, f: int, trials: int, window, rng) -> dict:
    ctx = _conv_ctx(n, f, window, rng)
    dual = ctx.dual()
    nonempty = 0
    for _ in range(trials):
        M1, M2 = random_module(rng, ctx.algebra), random_module(rng, ctx.algebra)
        C = convolve(ctx, M1, M2)
        L = frak_K(ctx, C)
        R = convolve(dual, frak_K(ctx, M1), frak_K(ctx, M2))
        for X in (C, L, R):
            probs = X.problems(limit=1)
            if probs:
                raise CheckFailed(f"convolution or duality output is not a dg-module: {probs[0]}")
        hi = _top(L, R)
        a, b = cohomology(L).restrict(None, hi), cohomology(R).restrict(None, hi)
        if a != b:
            raise CheckFailed(f"frak_K(M1*M2) = {a} but frak_K(M1)*frak_K(M2) = {b} on j <= {hi}")
        nonempty += bool(a.table)
    return {"trials": trials, "nonzero_comparisons": nonempty}


def check_twist(n: int, f: int, window, rng) -> dict:
    ctx = _conv_ctx(n, f, window, rng)
    U = unit(ctx)
    Ui = invert_grading(unit(ctx.dual()), inverted_algebra(ctx.dual().algebra))
    for m in range(-2, 3):
        K = frak_K(ctx, twist_by_character(ctx, U, m), im=False)
        expect = shift(twist_by_character(ctx, Ui, -m), m, 0)
        lo = max(x for x in (K.window[0], expect.window[0]) if x is not None)
        if cohomology(K).restrict(lo) != cohomology(expect).restrict(lo):
            raise CheckFailed(
                f"frak_K(unit<{m}>) = {cohomology(K).restrict(lo)}, expected {cohomology(expect).restrict(lo)}"
            )
        if twist_by_character(ctx, twist_by_character(ctx, U, m), -m).dims != U.dims:
            raise CheckFailed("twists do not compose additively")
    return {"twists": 5}


def convolution_checks(p: SuiteParams) -> list[tuple[str, Callable, tuple]]:
    n = p.dim if p.dim is not None else 1
    fdims = [p.fdim] if p.fdim is not None else list(range(n + 1))
    trials = p.trials if p.trials is not None else 20
    w = p.window or CONVOLUTION_WINDOW
    checks = []
    for f in fdims:
        if not 0 <= f <= n:
            raise ValueError(f"fdim must lie in 0..{n}")
        pre = f"convolution.n{n}.f{f}"
        checks += [
            (f"{pre}.unit_image", check_unit_image, (n, f, w)),
            (f"{pre}.unit_law", check_unit_law, (n, f, trials, w)),
            (f"{pre}.associativity", check_conv_associativity, (n, f, max(1, trials // 4), w)),
            (f"{pre}.compatibility", check_compatibility, (n, f, trials, w)),
            (f"{pre}.twist", check_twist, (n, f, w)),
        ]
    return checks


# runner -------------------------------------------------------------------------

_BUILDERS = {"hecke": hecke_checks, "koszul": koszul_checks, "convolution": convolution_checks}


def _run_one(name: str, func: Callable, args: tuple, seed: int) -> CheckRecord:
    t = time.perf_counter()
    try:
        detail = func(*args, _rng(seed, name))
        return CheckRecord(name, "pass", None, detail, time.perf_counter() - t)
    except CheckFailed as exc:
        return CheckRecord(name, "fail", exc.witness, exc.detail, time.perf_counter() - t)


def run_suite(name: str, params: SuiteParams | None = None, seed: int = 0) -> Report:
    params = params or SuiteParams()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}")
    plan = [c for s in names for c in _BUILDERS[s](params)]
    if params.jobs > 1 and len(plan) > 1:
        with ProcessPoolExecutor(max_workers=params.jobs) as pool:
            futs = [pool.submit(_run_one, n, f, a, seed) for n, f, a in plan]
            records = [fu.result() for fu in futs]
    else:
        records = [_run_one(n, f, a, seed) for n, f, a in plan]
    return Report(name, params.to_json(name), seed, sorted(records, key=lambda r: r.name))
