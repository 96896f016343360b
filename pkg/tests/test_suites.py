import pytest

from heckekoszul.suites import CheckRecord, Report, SuiteParams, reduced_words, run_suite
from heckekoszul.rootdata import RootDatum


def test_record_invariants():
    with pytest.raises(ValueError):
        CheckRecord("x", "fail")
    with pytest.raises(ValueError):
        CheckRecord("x", "pass", witness="w")
    with pytest.raises(ValueError):
        CheckRecord("x", "maybe")
    r = Report("s", {}, 0, [CheckRecord("b", "skipped"), CheckRecord("a", "fail", "w")])
    assert not r.ok and r.exit_code == 1
    assert [c["name"] for c in r.to_json()["checks"]] == ["a", "b"]


def test_reduced_words():
    g2 = RootDatum.from_label("G2")
    w0 = g2.element((1, 2, 1, 2, 1, 2))
    assert sorted(reduced_words(g2, w0)) == [(1, 2, 1, 2, 1, 2), (2, 1, 2, 1, 2, 1)]
    a2 = RootDatum.from_label("A2")
    assert len(reduced_words(a2, a2.element((1, 2, 1)))) == 2


def test_reports_are_deterministic():
    p = SuiteParams(types=("A1", "B2"), weight_bound=1, trials=20)
    a = run_suite("hecke", p, 5).dumps()
    b = run_suite("hecke", p, 5).dumps()
    assert a == b


def test_parallel_matches_serial():
    serial = SuiteParams(dim=2, trials=4)
    parallel = SuiteParams(dim=2, trials=4, jobs=3)
    assert run_suite("koszul", serial, 11).dumps() == run_suite("koszul", parallel, 11).dumps()


def test_custom_spec_reports_failure():
    r = run_suite("hecke", SuiteParams(types=("A2",), spec="T->T+1", weight_bound=1), 0)
    (c,) = r.checks
    assert c.status == "fail" and "relation (vi)" in c.witness
    assert "vi" in c.detail["failing_relations"]


def test_custom_spec_passing():
    r = run_suite("hecke", SuiteParams(types=("A2",), spec="T->-T+v-v^-1;theta->theta^-1", weight_bound=1), 0)
    assert r.ok


def test_convolution_names_and_flags():
    r = run_suite("convolution", SuiteParams(dim=1, trials=2), 0)
    assert r.ok
    names = {c.name for c in r.checks}
    assert "convolution.n1.f1.unit_image" in names and "convolution.n1.f0.compatibility" in names
    full = next(c for c in r.checks if c.name == "convolution.n1.f1.unit_image")
    assert full.detail["F_equals_V"] is True


def test_invalid_parameters():
    with pytest.raises(ValueError):
        run_suite("bogus")
    with pytest.raises(ValueError):
        run_suite("convolution", SuiteParams(dim=1, fdim=3))
