import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckekoszul.dgcore import (
    BigradedDims,
    ModuleMap,
    SubspacePair,
    WindowError,
    build_S,
    cohomology,
    cone,
    direct_sum,
    free_module,
    shift,
    skyscraper,
)
from heckekoszul.koszul import (
    PERTURBATIONS,
    DualityContext,
    dualize,
    invert_grading,
    inverted_algebra,
    kappa,
    kappa_dual,
    koszul_transform,
    regrade,
    unregrade,
)
from heckekoszul.samples import random_module, random_pair

W = (-8, 8)
POINT = DualityContext(SubspacePair(1), W)


def test_transform_of_trivial_before_regrading():
    N = koszul_transform(POINT, dualize(POINT, skyscraper(POINT.T)))
    assert cohomology(N).table == {(2 * k, -2 * k): 1 for k in range(5)}


def test_kappa_trivial_is_free_R_module():
    K = kappa(POINT, skyscraper(POINT.T))
    assert cohomology(K) == BigradedDims({(0, -2 * k): 1 for k in range(5)})
    assert K.window == (-8, None)


def test_kappa_free_exterior_module():
    K = kappa(POINT, free_module(POINT.T, [(0, 0)]))
    assert cohomology(K).table == {(0, 0): 1}


def test_dualize_skyscrapers():
    assert dualize(POINT, skyscraper(POINT.T)).dims == {(0, 0): 1}
    assert dualize(POINT, skyscraper(POINT.T, (2, 3))).dims == {(-2, -3): 1}


def test_regrade_degrees():
    S = build_S(SubspacePair(1, (), ((1,),)))
    assert [g for _, g in S.ext_gens] == [(1, -2)]
    M = skyscraper(S, (3, -2))
    R = regrade(M)
    assert R.dims == {(1, -2): 1}
    assert [g for _, g in R.algebra.ext_gens] == [(-1, -2)]
    assert unregrade(R, S).same_as(M)


def test_invert_grading_is_involution():
    ctx = DualityContext(SubspacePair(2, ((1, 0),), ((1, 1),)), W)
    M = free_module(ctx.T, [(0, 0), (1, 2)], hi=6)
    inv = inverted_algebra(ctx.T)
    N = invert_grading(M, inv)
    assert N.is_valid()
    assert cohomology(N) == BigradedDims({(i, -j): n for (i, j), n in cohomology(M).table.items()})
    assert invert_grading(N, ctx.T).same_as(M)


def test_window_errors():
    ctx = DualityContext(SubspacePair(1, (), ((1,),)), W)
    M = free_module(ctx.T, [(0, 0)], hi=4)
    assert kappa(ctx, M).window == (-4, None)
    with pytest.raises(WindowError):
        kappa(ctx, M, lo=-6)
    with pytest.raises(WindowError):
        koszul_transform(ctx, M)


@pytest.mark.parametrize("perturb", PERTURBATIONS)
def test_perturbed_transform_breaks_d_squared(perturb):
    ctx = DualityContext(SubspacePair(2, ((1, 0),), ((0, 1),)), W)
    M = free_module(ctx.T, [(0, 0)], hi=4)
    assert kappa(ctx, M).d_squared_witness() is None
    assert kappa(ctx, M, perturb=perturb).d_squared_witness() is not None


samples = st.builds(
    lambda r: (lambda ctx: (ctx, random_module(r, ctx.T)))(DualityContext(random_pair(r, 3), W)),
    st.randoms(use_true_random=False),
)


@settings(max_examples=25)
@given(samples)
def test_dualize_is_involution(sample):
    ctx, M = sample
    D = dualize(ctx, M)
    assert D.is_valid()
    assert dualize(ctx, D).same_as(M)


@settings(max_examples=25)
@given(samples)
def test_kappa_outputs_valid_R_modules(sample):
    ctx, M = sample
    K = kappa(ctx, M)
    assert K.algebra.same_shape(ctx.R)
    assert K.problems() == []


@settings(max_examples=15)
@given(samples, st.integers(-2, 2), st.integers(-2, 2))
def test_grading_identity(sample, n, m):
    ctx, M = sample
    K = kappa(ctx, M)
    Ks = kappa(ctx, shift(M, n, m))
    start = max(Ks.window[0], K.window[0] - m)
    assert cohomology(Ks).restrict(start) == cohomology(shift(K, m - n, -m)).restrict(start)


@settings(max_examples=25)
@given(samples)
def test_double_duality(sample):
    ctx, M = sample
    D = kappa_dual(ctx, kappa(ctx, M))
    hi = D.window[1]
    assert cohomology(D).restrict(None, hi) == cohomology(M).restrict(None, hi)


@settings(max_examples=15)
@given(samples, st.randoms(use_true_random=False))
def test_exact_and_additive(sample, rng):
    ctx, M = sample
    assert cohomology(kappa(ctx, cone(ModuleMap.identity(M)))).table == {}
    N = random_module(rng, ctx.T)
    S = kappa(ctx, direct_sum(M, N))
    w = S.window
    assert cohomology(S).restrict(*w) == (cohomology(kappa(ctx, M)) + cohomology(kappa(ctx, N))).restrict(*w)
