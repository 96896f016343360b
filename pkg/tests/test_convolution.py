import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckekoszul.convolution import ConvolutionContext, convolve, frak_K, twist_by_character, unit
from heckekoszul.dgcore import BigradedDims, cohomology, euler_class, skyscraper
from heckekoszul.koszul import invert_grading, inverted_algebra
from heckekoszul.laurent import ONE
from heckekoszul.samples import random_module, random_subspace

W = (-6, 6)


def test_context_shape():
    ctx = ConvolutionContext(2, ((1, 1),), W)
    assert ctx.F_dim == 1 and not ctx.is_full()
    assert ctx.pair.ambient_dim == 4
    assert ctx.algebra.n_ext == 2 and ctx.algebra.n_sym == 2
    assert ctx.sym_index(2, 0) == 3
    assert ctx.dual().F_basis == ((1, -1),)
    assert ctx.dual().dual() == ctx


def test_unit_examples():
    ctx = ConvolutionContext(2, (), W)
    U = unit(ctx)
    assert U.dims == {(0, 0): 1}
    assert euler_class(U) == ONE
    full = ConvolutionContext(1, ((1,),), W)
    U = unit(full)
    assert full.is_full()
    assert U.dims == {(0, 2 * k): 1 for k in range(4)}
    assert U.d == {} or all(m.is_zero() for m in U.d.values())
    a, b = full.sym_index(1, 0), full.sym_index(2, 0)
    assert U.act[a] == U.act[b] and U.act[a]
    assert U.is_valid()


def test_skyscraper_convolution_at_zero():
    ctx = ConvolutionContext(2, (), W)
    S = skyscraper(ctx.algebra)
    assert cohomology(convolve(ctx, S, S)).table == {(0, 0): 1}


@pytest.mark.parametrize("n,f", [(1, 0), (1, 1), (2, 1), (2, 2)])
def test_unit_squared(n, f):
    import random

    ctx = ConvolutionContext(n, random_subspace(random.Random(n * 10 + f), n, f), W)
    U = unit(ctx)
    C = convolve(ctx, U, U)
    hi = C.window[1]
    assert C.is_valid()
    assert cohomology(C).restrict(None, hi) == cohomology(U).restrict(None, hi)


def test_frak_K_of_point_unit():
    ctx = ConvolutionContext(1, (), W)
    K = frak_K(ctx, unit(ctx))
    assert cohomology(K).restrict(None, 6) == BigradedDims({(0, 2 * k): 1 for k in range(4)})


@pytest.mark.parametrize("n,f", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1)])
def test_unit_image(n, f):
    import random

    ctx = ConvolutionContext(n, random_subspace(random.Random(f), n, f), (-4, 4))
    K = frak_K(ctx, unit(ctx))
    Ud = unit(ctx.dual())
    assert cohomology(K).restrict(None, 4) == cohomology(Ud).restrict(None, 4)


def test_twist_zero_and_composition():
    ctx = ConvolutionContext(1, ((1,),), W)
    U = unit(ctx)
    assert twist_by_character(ctx, U, 0).same_as(U)
    assert twist_by_character(ctx, twist_by_character(ctx, U, 2), -2).same_as(U)


@pytest.mark.parametrize("m", [-2, 1, 2])
def test_twisted_unit_image(m):
    from heckekoszul.dgcore import shift

    ctx = ConvolutionContext(2, ((1, 0),), W)
    K = frak_K(ctx, twist_by_character(ctx, unit(ctx), m), im=False)
    Ui = invert_grading(unit(ctx.dual()), inverted_algebra(ctx.dual().algebra))
    expect = shift(twist_by_character(ctx, Ui, -m), m, 0)
    lo = max(K.window[0], expect.window[0])
    assert cohomology(K).restrict(lo) == cohomology(expect).restrict(lo)


def _top(*mods):
    his = [M.window[1] for M in mods if M.window[1] is not None]
    return min(his) if his else None


contexts = st.sampled_from([(1, 0), (1, 1), (2, 1), (2, 2)])


@settings(max_examples=20)
@given(contexts, st.randoms(use_true_random=False))
def test_unit_law(nf, rng):
    n, f = nf
    ctx = ConvolutionContext(n, random_subspace(rng, n, f), (-4, 4))
    M = random_module(rng, ctx.algebra)
    U = unit(ctx)
    for C in (convolve(ctx, M, U), convolve(ctx, U, M)):
        assert C.is_valid()
        w = (None, _top(C, M))
        assert euler_class(C, w) == euler_class(M, w)


@settings(max_examples=15)
@given(contexts, st.randoms(use_true_random=False))
def test_compatibility_with_duality(nf, rng):
    n, f = nf
    ctx = ConvolutionContext(n, random_subspace(rng, n, f), (-4, 4))
    M1, M2 = random_module(rng, ctx.algebra), random_module(rng, ctx.algebra)
    L = frak_K(ctx, convolve(ctx, M1, M2))
    R = convolve(ctx.dual(), frak_K(ctx, M1), frak_K(ctx, M2))
    hi = _top(L, R)
    assert cohomology(L).restrict(None, hi) == cohomology(R).restrict(None, hi)
