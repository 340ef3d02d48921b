"""Named inequality checks: spot values, grid scans, and report semantics."""

import pytest

from graphbell.closed_forms import cycle_pk1_aggregates, h3_tail_aggregates
from graphbell.errors import DomainError, UsageError
from graphbell.inequality_verifier import (
    INEQUALITY_IDS,
    check,
    definition,
    prop7_sample_check,
    scan,
    summarize,
)

GRID_IDS = [i for i in INEQUALITY_IDS if i != "PROP7_MIX"]
PAIRS = [
    ("T_PATH_SHIFT", "C9"),
    ("T_H3_VS_PATH", "C11"),
    ("T_CYCLE_VS_H3", "C14"),
    ("T_CYCLE_VS_PATH", "C17"),
]


def test_id_catalog_complete():
    assert set(INEQUALITY_IDS) == {
        "T_PATH_SHIFT", "T_H3_VS_PATH", "T_CYCLE_VS_H3", "T_CYCLE_VS_PATH",
        "T_CYCLE_DROP2", "C9", "C11", "C14", "C17",
        "I1", "I2", "I3", "I4", "I5", "I6", "PROP7_MIX",
    }


# --- spot values -------------------------------------------------------------------


def test_i1_spot():
    r = check("I1", 4)
    assert (r.lhs, r.rhs, r.margin) == (225, 260, 35)
    assert r.holds_strict


def test_i3_spot():
    r = check("I3", 4)
    assert (r.lhs, r.rhs) == (15 * (15 - 5), 52 * (5 - 2)) == (150, 156)


def test_i5_spot():
    r = check("I5", 5)
    assert (r.lhs, r.rhs) == (52 * 11, 15 * 40) == (572, 600)


def test_i6_spot():
    r = check("I6", 5)
    assert (r.lhs, r.rhs) == ((52 + 15 - 7) * 11, (15 + 5 - 3) * 40) == (660, 680)


def test_cycle_vs_path_spot():
    r = check("T_CYCLE_VS_PATH", 5, 0)
    # normalized to lhs < rhs: path side crossed with cycle side
    assert (r.lhs, r.rhs) == (11 * 52, 40 * 15) == (572, 600)


def test_cycle_drop2_spot():
    r = check("T_CYCLE_DROP2", 5, 0)
    small = cycle_pk1_aggregates(3, 2)
    big = cycle_pk1_aggregates(5, 0)
    assert (small.b, small.t) == (17, 60)
    assert (r.lhs, r.rhs) == (small.t * big.b, big.t * small.b) == (660, 680)


def test_h3_vs_path_spot():
    r = check("T_H3_VS_PATH", 4, 0)
    lo = h3_tail_aggregates(1, 0)
    assert (lo.b, lo.t) == (3, 10)
    assert (r.lhs, r.rhs) == (150, 156)


# --- report semantics ----------------------------------------------------------------


def test_margin_matches_strictness_everywhere():
    for id in GRID_IDS:
        for r in scan(id, 12, 2):
            assert r.margin == r.rhs - r.lhs
            assert r.holds_strict == (r.margin > 0)


def test_out_of_range_check_names_bound():
    with pytest.raises(DomainError, match="n >= 4"):
        check("I3", 2)
    with pytest.raises(DomainError, match="n >= 5"):
        check("T_CYCLE_VS_PATH", 4, 0)


def test_unknown_id_rejected():
    with pytest.raises(UsageError):
        check("I9", 5)
    with pytest.raises(UsageError):
        scan("NOPE", 5)


def test_boundary_extensions_flagged_and_hold():
    r4 = check("I4", 2)
    assert r4.boundary_extension and r4.holds_strict
    r6 = check("I6", 4)
    assert r6.boundary_extension and r6.holds_strict
    assert not check("I4", 4).boundary_extension
    assert not check("I6", 5).boundary_extension


def test_coinciding_families_report_exact_equality():
    # at order 3 the cycle and the tailed triangle are the same graph, so the
    # strict comparison degenerates to an equality for every p
    for id in ("T_CYCLE_VS_H3", "C14"):
        for p in range(4):
            r = check(id, 3, p)
            assert r.expected_equality
            assert r.margin == 0 and not r.holds_strict
            assert r.as_expected
    r = check("I4", 3)
    assert r.expected_equality and r.margin == 0


def test_i_series_ignore_p():
    assert check("I1", 7, 3) == check("I1", 7, 0)


# --- scans ---------------------------------------------------------------------------


@pytest.mark.parametrize("id", GRID_IDS)
def test_scan_clean_on_reduced_grid(id):
    reports = scan(id, 15, 3)
    assert summarize(reports)["violations"] == 0
    assert reports == sorted(reports, key=lambda r: (r.n, r.p))


def test_scan_i1_shape():
    reports = scan("I1", 200, 0)
    assert len(reports) == 200
    assert summarize(reports)["violations"] == 0


def test_scan_p_grid_shape():
    d = definition("T_PATH_SHIFT")
    reports = scan("T_PATH_SHIFT", 10, 4)
    assert len(reports) == (10 - d.n_min + 1) * 5


def test_scan_jobs_matches_serial():
    assert scan("C9", 12, 3, jobs=4) == scan("C9", 12, 3)


def test_explore_reports_sub_range_failures_without_asserting():
    reports = scan("I3", 10, 0, explore=True)
    by_n = {r.n: r for r in reports}
    assert not by_n[2].in_range and not by_n[2].holds_strict
    assert not by_n[3].in_range and by_n[3].margin == 0
    summary = summarize(reports)
    assert summary["violations"] == 0
    assert summary["first_out_of_range_failure"] == (2, 0)


def test_explore_i5_boundary_pattern():
    reports = scan("I5", 10, 0, explore=True)
    by_n = {r.n: r for r in reports}
    # below the documented range the claim genuinely breaks at 2 and 4
    assert by_n[2].margin == 0 and by_n[4].margin == 0
    assert by_n[3].holds_strict
    assert all(by_n[n].holds_strict for n in range(5, 11))


def test_average_form_and_cross_multiplied_form_agree():
    # each T_* id compares averages via aggregates; its C* partner evaluates
    # the spelled-out Bell-sum products -- same statement, two pipelines
    for avg_form, cross_form in PAIRS:
        a_reports = scan(avg_form, 15, 3)
        c_reports = scan(cross_form, 15, 3)
        assert len(a_reports) == len(c_reports)
        for ra, rc in zip(a_reports, c_reports):
            assert (ra.n, ra.p) == (rc.n, rc.p)
            assert (ra.lhs, ra.rhs) == (rc.lhs, rc.rhs)


def test_scan_capacity_guardrail():
    from graphbell.errors import ResourceError

    with pytest.raises(ResourceError):
        scan("I1", 10**6, 0)


# --- sampled mediant check -------------------------------------------------------------


def test_prop7_sample_check_runs_clean():
    assert prop7_sample_check(100, seed=42)


def test_prop7_requires_trials():
    with pytest.raises(DomainError):
        prop7_sample_check(0, seed=1)


def test_prop7_reports_deterministic_and_seeded():
    a = scan("PROP7_MIX", 8, 0)
    b = scan("PROP7_MIX", 8, 0)
    assert a == b
    assert len(a) == 8
    assert all(r.seed is not None for r in a)
    assert all(r.holds_strict for r in a)


# --- violation accounting (synthetic, since the real grids are all clean) -------------


def test_summarize_counts_expectation_deviations():
    from graphbell.inequality_verifier import InequalityReport

    good = InequalityReport("I1", 5, 0, 1, 2, 1, True)
    bad = InequalityReport("I1", 6, 0, 3, 2, -1, False)
    eq_ok = InequalityReport("C14", 3, 0, 4, 4, 0, False, expected_equality=True)
    eq_bad = InequalityReport("C14", 3, 1, 4, 5, 1, True, expected_equality=True)
    oor = InequalityReport("I3", 2, 0, 2, 0, -2, False, in_range=False)
    summary = summarize([good, bad, eq_ok, eq_bad, oor])
    assert summary["violations"] == 2
    assert summary["first_out_of_range_failure"] == (2, 0)
