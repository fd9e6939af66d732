"""Brute-force curve neighborhoods and the differential harness.

The oracle computes neighborhoods straight from the definition (maximal
chain-reachable elements) and never consults the closed form, so comparing
the two routes over a full (u, d) grid is a genuine cross-check.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .dihedral import (
    Degree,
    GroupElement,
    degrees_up_to,
    format_degree,
    format_element,
    format_element_set,
    sort_elements,
)
from .moment_graph import reachable_set
from .neighborhood import curve_neighborhood, enumerate_up_to_length, maximal_elements


class Mismatch(NamedTuple):
    u: GroupElement
    d: Degree
    closed: frozenset[GroupElement]
    oracle: frozenset[GroupElement]


@dataclass(frozen=True)
class DiffReport:
    """Outcome of one differential run; passed and mismatched cases partition the grid."""

    cases_total: int
    cases_passed: int
    mismatches: tuple[Mismatch, ...]

    def __post_init__(self) -> None:
        if self.cases_passed + len(self.mismatches) != self.cases_total:
            raise ValueError("case counts do not add up")

    @property
    def ok(self) -> bool:
        return not self.mismatches


def curve_neighborhood_oracle(u: GroupElement, d: Degree) -> frozenset[GroupElement]:
    """The degree-d curve neighborhood of u, straight from the definition."""
    return maximal_elements(reachable_set(u, d))


def _check_case(case: tuple[GroupElement, Degree]) -> Mismatch | None:
    u, d = case
    closed = curve_neighborhood(u, d)
    brute = curve_neighborhood_oracle(u, d)
    return None if closed == brute else Mismatch(u, d, closed, brute)


def differential_check(max_u_length: int, max_d: Degree, jobs: int = 1) -> DiffReport:
    """Compare closed form and oracle for every u up to max_u_length and d <= max_d.

    Cases are independent and may run concurrently (``jobs`` > 1); the report
    lists mismatches in grid order either way.
    """
    cases = [
        (u, d)
        for u in sort_elements(enumerate_up_to_length(max_u_length))
        for d in degrees_up_to(max_d)
    ]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_check_case, cases))
    else:
        outcomes = [_check_case(case) for case in cases]
    mismatches = tuple(m for m in outcomes if m is not None)
    return DiffReport(len(cases), len(cases) - len(mismatches), mismatches)


def format_report(report: DiffReport) -> str:
    """Summary line plus one line per mismatch, in the element/degree grammar."""
    lines = [f"{report.cases_total} cases, {len(report.mismatches)} mismatches"]
    for m in report.mismatches:
        lines.append(
            f"mismatch u={format_element(m.u)} d={format_degree(m.d)} "
            f"closed={format_element_set(m.closed)} oracle={format_element_set(m.oracle)}"
        )
    return "\n".join(lines)
