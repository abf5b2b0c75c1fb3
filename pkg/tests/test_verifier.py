"""Check runner behaviour: regimes, reports, conversions, named examples."""

import pytest

from kmpi.root_core import RootVec, make_gcm, positive_real_root
from kmpi.verifier import (
    CHECK_IDS,
    EpsDeltaVec,
    RegimeError,
    borcherds_systems,
    default_bound,
    from_eps_delta,
    is_applicable,
    run_all,
    run_check,
    to_eps_delta,
)


def test_check_id_registry_complete():
    assert len(CHECK_IDS) == 20
    assert len(set(CHECK_IDS)) == 20


def test_default_bounds():
    assert default_bound("thmab_exhaustive") == 8
    assert default_bound("nthmab_exhaustive") == 8
    assert default_bound("finpisystem_finite") == 8
    assert default_bound("lem1_ineq") == 50
    assert default_bound("appendix_roots") == 50


def test_named_examples_pass():
    r = run_check("lem1_ineq", make_gcm(3, 2), 100)
    assert r.passed and r.counterexamples == []
    r = run_check("thmab_exhaustive", make_gcm(5, 1), 8)
    assert r.passed
    r = run_check("appendix_roots", None, 12)
    assert r.passed and r.gcm is None
    r = run_check("borcherds_sigma", make_gcm(6, 3))
    assert r.passed


def test_report_shape():
    r = run_check("lemrelcd", make_gcm(2, 2), 10)
    assert r.check == "lemrelcd"
    assert r.gcm == (2, 2)
    assert r.bound == 10
    assert r.passed == (not r.counterexamples)
    assert r.elapsed_ms >= 0.0


def test_regime_mismatch_raises():
    with pytest.raises(RegimeError):
        run_check("lem1_ineq", make_gcm(1, 1))
    with pytest.raises(RegimeError):
        run_check("appendix_roots", make_gcm(5, 1))
    with pytest.raises(RegimeError):
        run_check("finpisystem_finite", make_gcm(2, 2))
    with pytest.raises(RegimeError):
        run_check("borcherds_sigma", make_gcm(5, 1))
    with pytest.raises(RegimeError):
        run_check("thmab_exhaustive", make_gcm(4, 1), 4)
    with pytest.raises(RegimeError):
        run_check("lemrelcd", None)


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        run_check("no_such_check", make_gcm(2, 2))
    with pytest.raises(ValueError):
        is_applicable("no_such_check", make_gcm(2, 2))


def test_applicability_table():
    g22, g41, g11, g63 = map(lambda p: make_gcm(*p), [(2, 2), (4, 1), (1, 1), (6, 3)])
    assert is_applicable("lemrelcd", g11)
    assert is_applicable("auxeq_identity", g41)
    assert is_applicable("rootfourtypes_identity", g41)
    assert not is_applicable("rootfourtypes_identity", g11)
    assert is_applicable("appendix_roots", g41)
    assert not is_applicable("appendix_thm41", g22)
    assert is_applicable("borcherds_sigma", g63)
    assert not is_applicable("thmab_exhaustive", g41)
    assert is_applicable("finpisystem_finite", g11)


def test_run_all_empty_grid():
    assert run_all([]) == []


def test_run_all_small_grid_canonical_order():
    grid = [make_gcm(5, 1), make_gcm(2, 2)]
    reports = run_all(grid, 6)
    assert all(r.passed for r in reports)
    keys = [(CHECK_IDS.index(r.check), r.gcm) for r in reports]
    assert keys == sorted(keys)
    # both grid points got the full classification-regime battery
    assert sum(1 for r in reports if r.gcm == (2, 2)) == 16
    assert sum(1 for r in reports if r.gcm == (5, 1)) == 16


def test_run_all_triggers_fixed_context_checks():
    reports = run_all([make_gcm(4, 1), make_gcm(1, 1)], 6)
    names = {r.check for r in reports}
    assert "appendix_roots" in names and "appendix_thm41" in names
    assert "finpisystem_finite" in names
    assert all(r.passed for r in reports)


def test_eps_delta_conversion_examples():
    assert to_eps_delta(RootVec(0, 1)) == EpsDeltaVec(-2, 1)
    assert from_eps_delta(EpsDeltaVec(1, 0)) == RootVec(1, 0)
    g = make_gcm(4, 1)
    assert to_eps_delta(positive_real_root(g, 1, 3)) == EpsDeltaVec(-1, 2)


def test_eps_delta_round_trip():
    for x in range(-9, 10):
        for y in range(-9, 10):
            v = RootVec(x, y)
            assert from_eps_delta(to_eps_delta(v)) == v


def test_borcherds_system_shapes():
    systems = borcherds_systems(6)
    assert [el.vec for el in systems.sigma1.elements] == [RootVec(3, 1), RootVec(5, 1)]
    vecs = {el.vec for el in systems.sigma2.elements}
    assert vecs == {RootVec(0, 1), RootVec(6, 1), RootVec(2, 1), RootVec(4, 1)}
    assert len(systems.sigma2.elements) == 6 // 2 + 1
    # boundary: sigma1 is empty at a = 3 and still vacuously a pi-system
    systems = borcherds_systems(3)
    assert systems.sigma1.elements == ()
    r = run_check("borcherds_sigma", make_gcm(3, 3))
    assert r.passed


def test_borcherds_rejects_small_a():
    with pytest.raises(ValueError):
        borcherds_systems(2)


@pytest.mark.parametrize("check", CHECK_IDS)
def test_every_check_runs_green_somewhere(check):
    anchors = {
        "finpisystem_finite": make_gcm(2, 1),
        "appendix_roots": None,
        "appendix_thm41": None,
        "borcherds_sigma": make_gcm(5, 3),
    }
    g = anchors.get(check, make_gcm(3, 2))
    r = run_check(check, g, 6)
    assert r.passed, r.counterexamples[:3]
