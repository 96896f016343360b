"""Acceptance criteria 1-10, all exact.

Run under pytest (a summary block lists one PASS/FAIL line per criterion) or
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

from heckekoszul.dgcore import SubspacePair, free_module
from heckekoszul.koszul import PERTURBATIONS, DualityContext, kappa
from heckekoszul.suites import (
    HECKE_TYPES,
    CheckFailed,
    _rng,
    check_compatibility,
    check_cone_shift,
    check_conv_associativity,
    check_double_duality,
    check_euler_cohomology,
    check_grading_identity,
    check_involutions,
    check_kim_generators,
    check_kim_homomorphism,
    check_kim_t_alpha,
    check_negative_control_hecke,
    check_relations,
    check_unit_image,
    check_unit_law,
)

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script
    ACCEPTANCE = {}

SEED = 2024
KOSZUL_WINDOW = (-8, 8)
CONV_WINDOW = (-4, 4)
CONV_CONTEXTS = [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]


def c1():
    for t in HECKE_TYPES:
        check_kim_generators(t, 3, None)
    return "k_im on T_alpha and theta_x, |coords| <= 3, five types"


def c2():
    pairs = 0
    for t in HECKE_TYPES:
        check_relations(t, "KIM", 3, None)
        check_kim_homomorphism(t, 500, _rng(SEED, f"c2.{t}"))
        pairs += 500
    return f"relations (i)-(vi) at weight bound 3, {pairs} random products"


def c3():
    n = sum(check_involutions(t, 2, None)["monomials"] for t in HECKE_TYPES)
    return f"im, iota, k_im involutive and im, iota commute on {n} monomials"


def c4():
    for t in HECKE_TYPES:
        check_kim_t_alpha(t, None)
    return "k_im(t) = -t + v^2 - 1 = -q t^-1, stated and via inversion"


def c5():
    d = check_euler_cohomology(3, 200, _rng(SEED, "c5"))
    check_cone_shift(3, 50, _rng(SEED, "c5.cone"))
    return f"{d['modules']} modules (max {d['max_bidegrees']} bidegrees), cone and shift formulas"


def c6():
    d = check_grading_identity(3, 100, KOSZUL_WINDOW, _rng(SEED, "c6c7"))
    return f"{d['comparisons']} comparisons over {d['samples']} samples"


def c7():
    # same stream as c6, so the same (pair, M) sample
    d = check_double_duality(3, 100, KOSZUL_WINDOW, _rng(SEED, "c6c7"))
    return f"{d['samples']} samples"


def c8():
    n_checked = 0
    for n in (1, 2, 3):
        for f in range(n + 1):
            for k in range(3):
                check_unit_image(n, f, KOSZUL_WINDOW, _rng(SEED, f"c8.{n}.{f}.{k}"))
                n_checked += 1
    return f"{n_checked} subspaces F, n <= 3, all dimensions"


def c9():
    nonzero = 0
    for n, f in CONV_CONTEXTS:
        d = check_compatibility(n, f, 50, CONV_WINDOW, _rng(SEED, f"c9.{n}.{f}"))
        nonzero += d["nonzero_comparisons"]
        check_unit_law(n, f, 20, CONV_WINDOW, _rng(SEED, f"c9.unit.{n}.{f}"))
        check_conv_associativity(n, f, 10, CONV_WINDOW, _rng(SEED, f"c9.assoc.{n}.{f}"))
    return f"50 pairs in each of {len(CONV_CONTEXTS)} contexts ({nonzero} with nonzero cohomology), unit law, associativity"


def c10():
    for t in HECKE_TYPES:
        check_negative_control_hecke(t, None)
    ctx = DualityContext(SubspacePair(2, ((1, 0),), ((0, 1),)), KOSZUL_WINDOW)
    M = free_module(ctx.T, [(0, 0)], hi=4)
    for p in PERTURBATIONS:
        if kappa(ctx, M, perturb=p).d_squared_witness() is None:
            raise CheckFailed(f"perturbation {p} was not detected")
    return "T->T+1 fails relation (vi); perturbed transforms fail d^2 = 0"


CRITERIA = {1: (c1, 5), 2: (c2, 60), 3: (c3, 30), 4: (c4, None), 5: (c5, 30), 6: (c6, 120), 7: (c7, None), 8: (c8, None), 9: (c9, 300), 10: (c10, None)}


def evaluate(k: int) -> tuple[bool, str]:
    func, limit = CRITERIA[k]
    t = time.perf_counter()
    try:
        msg = func()
        ok = True
    except CheckFailed as exc:
        msg, ok = exc.witness, False
    elapsed = time.perf_counter() - t
    if ok and limit is not None and elapsed >= limit:
        ok, msg = False, f"{msg}; took {elapsed:.1f} s, limit {limit} s"
    else:
        msg = f"{msg} ({elapsed:.1f} s)"
    return ok, msg


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, msg = evaluate(k)
    ACCEPTANCE[k] = (ok, msg)
    print(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
    assert ok, msg


if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).parent))
    failed = 0
    for k in sorted(CRITERIA):
        ok, msg = evaluate(k)
        failed += not ok
        print(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {msg}", flush=True)
    sys.exit(1 if failed else 0)
