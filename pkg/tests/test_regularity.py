"""Fiber and Rees regularity, stability indices, certificates, caps."""

import pytest

from reesreg import (
    CapExceeded,
    CriterionPair,
    Monomial,
    criterion_witness,
    eu_check,
    make_ideal,
    mirror,
    reg_fiber,
    reg_fiber_via_lemma,
    reg_rees,
    semigroup_tables,
    stability_indices,
)
from reesreg.regularity import Workspace


def test_square_of_maximal_ideal():
    report = eu_check(make_ideal(2, [1]))
    assert (report.r_j, report.reg_f, report.reg_r) == (1, 1, 1)
    assert (report.s_star, report.s_star_in) == (1, 1)
    assert report.conjecture_holds
    assert report.witness is None
    assert report.criterion_pair is None
    assert report.reg_r_cap is None


def test_three_generated_cubic():
    report = eu_check(make_ideal(3, [1]))
    assert (report.r_j, report.reg_f, report.reg_r) == (2, 2, 2)
    assert (report.s_star, report.s_star_in) == (1, 1)
    assert report.conjecture_holds


def test_counterexample_report():
    report = eu_check(make_ideal(157, [35, 98]))
    assert report.r_j == 20
    assert report.reg_f == 20
    assert report.reg_r == 21
    assert report.s_star == 21
    assert report.s_star_in == 1
    assert not report.conjecture_holds
    assert report.witness == Monomial(1299, 1842)
    assert report.criterion_pair == CriterionPair(1299, 1842, "i")
    assert report.reg_r_cap is None


def test_standalone_regularities():
    spec = make_ideal(157, [35, 98])
    assert reg_fiber(spec) == 20
    assert reg_rees(spec) == 21
    assert reg_fiber(make_ideal(3, [1])) == 2
    assert reg_rees(make_ideal(3, [1])) == 2


def test_stability_indices_and_decomposition():
    spec = make_ideal(157, [35, 98])
    assert stability_indices(spec, 21) == (21, 1)
    for d, interior in [(2, [1]), (3, [1]), (4, [1, 3]), (157, [35, 98])]:
        report = eu_check(make_ideal(d, interior))
        assert report.reg_r == max(report.r_j, report.s_star)
        assert report.reg_f == max(report.r_j, report.s_star_in)


def test_criterion_witness_certificate():
    spec = make_ideal(157, [35, 98])
    pair = criterion_witness(spec, 20)
    assert pair == CriterionPair(1299, 1842, "i")
    assert pair.a + pair.b == 20 * 157 + 1
    sg_s, sg_t = semigroup_tables(spec, 3142)
    assert sg_s.contains(pair.a - 1)
    assert not sg_s.contains(pair.a)
    assert sg_t.contains(pair.b - 1)
    assert not sg_t.contains(pair.b)


def test_criterion_witness_absent_when_regularities_agree():
    assert criterion_witness(make_ideal(3, [1]), 2) is None
    with pytest.raises(ValueError, match="power must be >= 1"):
        criterion_witness(make_ideal(3, [1]), 0)


def test_mirror_invariance():
    for d, interior in [(157, [35, 98]), (6, [1, 3]), (9, [2, 5, 7])]:
        spec = make_ideal(d, interior)
        a = eu_check(spec)
        b = eu_check(mirror(spec))
        assert (a.r_j, a.reg_f, a.reg_r, a.conjecture_holds) == (
            b.r_j,
            b.reg_f,
            b.reg_r,
            b.conjecture_holds,
        )


def test_cap_below_reduction_number_propagates():
    with pytest.raises(CapExceeded):
        eu_check(make_ideal(157, [35, 98]), cap=5)
    with pytest.raises(CapExceeded) as info:
        reg_rees(make_ideal(157, [35, 98]), cap=20)
    assert info.value.cap == 20


def test_cap_between_verdict_and_rees_regularity():
    # cap 20 lets the verdict settle (FALSE, with witnesses) but cuts off
    # the continued scan for reg Rees; the report says so instead of guessing
    report = eu_check(make_ideal(157, [35, 98]), cap=20)
    assert not report.conjecture_holds
    assert report.witness == Monomial(1299, 1842)
    assert report.criterion_pair == CriterionPair(1299, 1842, "i")
    assert report.reg_r is None
    assert report.s_star is None
    assert report.s_star_in is None
    assert report.reg_r_cap == 20


def test_lemma_route_agrees():
    assert reg_fiber_via_lemma(make_ideal(2, [1])) == 1
    assert reg_fiber_via_lemma(make_ideal(3, [1])) == 2
    assert reg_fiber_via_lemma(make_ideal(157, [35, 98])) == 20
    assert reg_fiber_via_lemma(make_ideal(157, [35, 98]), window=3) == 20


def test_workspace_reuse():
    spec = make_ideal(157, [35, 98])
    ws = Workspace(spec)
    assert reg_fiber(spec, ws=ws) == 20
    assert reg_rees(spec, ws=ws) == 21
    assert reg_fiber_via_lemma(spec, ws=ws) == 20
