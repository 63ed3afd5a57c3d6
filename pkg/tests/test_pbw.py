import pytest

from qdrinfeld.algebra import AlgebraSpec
from qdrinfeld.pbw import (
    check_condition2,
    check_condition3,
    check_invariance,
    check_jacobi_sum,
    check_pbw,
    check_vanishing,
    overlap_oracle,
)
from qdrinfeld.scalar import Scalar, parse_scalar
from qdrinfeld.specfile import load_fixture

from randspec import corpus

FIXTURE_SPECS = [load_fixture(name) for name in ("ex1", "ex2", "ex3", "ex4", "zero-kappa")]


def perturbed_action(spec):
    """Copy of a spec with the last generator's character swapped for the
    first one's, which breaks invariance whenever kappa hits it."""
    chars = list(spec.chars)
    chars[-1] = chars[0]
    q = {(i, j): spec.q_scalar(i, j) for i in range(spec.n) for j in range(i + 1, spec.n)}
    kappa = {pair: spec.kappa_pairs(*pair) for pair in spec.kappa_support()}
    return AlgebraSpec(spec.ctx, spec.group, chars, q, kappa, name=spec.name + "-twisted")


def test_all_fixtures_have_the_basis_property():
    for spec in FIXTURE_SPECS:
        report = check_pbw(spec)
        assert report.cond1 and report.cond2 and report.cond3
        assert report.verdict
        assert report.oracle_confluent


def test_vanishing_on_fixtures():
    for spec in FIXTURE_SPECS:
        ok, certs = check_vanishing(spec)
        assert ok and certs == ()


def test_strong_vanishing_splits_the_fixtures():
    assert check_vanishing(load_fixture("ex2"), strong=True)[0]
    assert check_vanishing(load_fixture("ex3"), strong=True)[0]
    ok, certs = check_vanishing(load_fixture("ex1"), strong=True)
    assert not ok
    assert {(c["i"], c["j"], c["k"]) for c in certs} == {(1, 2, 1), (1, 2, 2)}
    # every channel of the n=2 mixed-pairs fixture satisfies the identity,
    # including the in-pair ones, so the strong form holds there
    assert check_vanishing(load_fixture("ex4"), strong=True)[0]


def test_broken_action_fails_invariance_with_certificate():
    broken = perturbed_action(load_fixture("ex2"))
    ok, certs = check_invariance(broken)
    assert not ok
    assert certs[0]["i"] == 1 and certs[0]["j"] == 2 and certs[0]["r"] == 3
    report = check_pbw(broken)
    assert not report.verdict
    assert not report.oracle_confluent


def test_corpus_exposes_scalar_condition_failures():
    seen_cond2_failure = False
    for spec in corpus(60):
        inv_ok, _ = check_invariance(spec)
        cond2_ok, certs = check_condition2(spec)
        if inv_ok and not cond2_ok:
            seen_cond2_failure = True
            assert certs
            assert not check_pbw(spec).verdict
            break
    assert seen_cond2_failure


def test_corpus_exposes_mixed_condition_failures():
    seen = False
    for spec in corpus(120):
        report = check_pbw(spec)
        if report.cond1 and report.cond2 and not report.cond3:
            seen = True
            assert report.cond3_violations
            assert not report.verdict
    assert seen


def test_verdict_matches_rewriting_oracle_on_corpus():
    for spec in corpus(120):
        report = check_pbw(spec)
        assert report.verdict == report.oracle_confluent, name


def test_alternative_forms_agree_on_corpus():
    for spec in corpus(100):
        report = check_pbw(spec)
        assert report.remark_cond2 == report.cond2, name
        if report.cond2:
            assert report.remark_cond3 == report.cond3, name


def test_fixed_point_free_collapses_cond2_to_vanishing():
    seen = 0
    for spec in corpus(150):
        report = check_pbw(spec)
        if not report.fixed_point_free or not spec.has_kappa():
            continue
        seen += 1
        assert report.cond2 == report.vanishing, name
    assert seen >= 5


def test_replacement_conditions_imply_the_verdict():
    for spec in corpus(120):
        inv_ok, _ = check_invariance(spec)
        van_ok, _ = check_vanishing(spec)
        jac_ok, _ = check_jacobi_sum(spec)
        if inv_ok and van_ok and jac_ok:
            assert check_pbw(spec).verdict, name


def test_jacobi_sum_on_fixtures():
    for spec in FIXTURE_SPECS:
        ok, certs = check_jacobi_sum(spec)
        assert ok and certs == ()


def test_oracle_alone_accepts_fixtures():
    for spec in FIXTURE_SPECS:
        assert overlap_oracle(spec)


def test_condition3_holds_without_kappa():
    plane = load_fixture("zero-kappa")
    ok, _ = check_condition3(plane)
    assert ok


def test_report_dict_is_insertion_stable():
    report = check_pbw(load_fixture("ex2")).as_dict()
    assert list(report)[:3] == ["cond1", "cond2", "cond3"]
    assert report["verdict"] is True
