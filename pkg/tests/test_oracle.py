"""Definition-level neighborhoods and the differential harness."""

import pytest

from dcn import (
    Degree,
    DiffReport,
    Mismatch,
    curve_neighborhood_oracle,
    degrees_up_to,
    differential_check,
    enumerate_up_to_length,
    explicit_length,
    format_report,
    inverse,
    mul,
    phi,
    r,
    reachable_set,
    sort_elements,
    sr,
)


def test_oracle_zero_degree():
    for u in (r(0), sr(2), r(-5)):
        assert curve_neighborhood_oracle(u, Degree(0, 0)) == frozenset({u})


def test_oracle_identity_2_2():
    assert curve_neighborhood_oracle(r(0), Degree(2, 2)) == frozenset({r(2), r(-2)})


def test_oracle_s0_2_3():
    # The answer stays a rotation: a chain endpoint v satisfies
    # phi(u^-1 v) <= d, so nothing longer than l(u) + 5 = 6 is reachable and
    # sr(-3) at length 7 is out of reach at this degree.
    assert curve_neighborhood_oracle(sr(0), Degree(2, 3)) == frozenset({r(3)})


def test_oracle_members_are_longest_reachable():
    for u in sort_elements(enumerate_up_to_length(3)):
        for d in degrees_up_to(Degree(2, 2)):
            found = reachable_set(u, d)
            gamma = curve_neighborhood_oracle(u, d)
            top = max(explicit_length(v) for v in found)
            assert gamma <= found
            assert all(explicit_length(v) == top for v in gamma)


def test_reachable_elements_obey_degree_bound():
    # every chain endpoint v satisfies phi(u^-1 v) <= d, exhaustively on the
    # same grid the differential harness uses
    for u in sort_elements(enumerate_up_to_length(6)):
        for d in degrees_up_to(Degree(4, 4)):
            for v in reachable_set(u, d):
                assert phi(mul(inverse(u), v)) <= d


def test_differential_check_trivial_grid():
    report = differential_check(0, Degree(0, 0))
    assert report.cases_total == 1
    assert report.cases_passed == 1
    assert report.mismatches == ()
    assert report.ok


def test_differential_check_small_grid():
    report = differential_check(2, Degree(1, 1))
    assert report.cases_total == 20
    assert report.cases_passed == 20
    assert report.mismatches == ()


def test_differential_check_jobs_agree():
    sequential = differential_check(3, Degree(2, 2))
    threaded = differential_check(3, Degree(2, 2), jobs=4)
    assert sequential == threaded
    assert sequential.cases_total == 7 * 9


def test_diff_report_counts_must_add_up():
    stray = Mismatch(r(0), Degree(0, 0), frozenset({r(0)}), frozenset({sr(1)}))
    with pytest.raises(ValueError):
        DiffReport(cases_total=2, cases_passed=2, mismatches=(stray,))


def test_format_report():
    clean = differential_check(2, Degree(1, 1))
    assert format_report(clean) == "20 cases, 0 mismatches"

    bad = DiffReport(
        cases_total=1,
        cases_passed=0,
        mismatches=(
            Mismatch(sr(0), Degree(2, 3), frozenset({r(3)}), frozenset({sr(-3)})),
        ),
    )
    assert format_report(bad) == (
        "1 cases, 1 mismatches\n"
        "mismatch u=sr(0) d=2,3 closed={r(3)} oracle={sr(-3)}"
    )
