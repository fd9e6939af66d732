"""Curve neighborhoods through the algebraic characterization.

The degree-d curve neighborhood of u collects the Bruhat-maximal endpoints
of increasing chains from u.  It can be computed without touching chains:
filter a bounded enumeration down to the elements v that lengthen u
additively (l(u v) = l(u) + l(v)) and whose letter counts stay under d,
take the maximal ones, and left-multiply by u.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dihedral import (
    Degree,
    Generator,
    GroupElement,
    LemmaViolationError,
    alternating_word,
    explicit_length,
    mul,
    phi,
    word_product,
)


def enumerate_up_to_length(n: int) -> frozenset[GroupElement]:
    """All 2n + 1 elements of length at most n.

    Built as products of the two alternating words of each length 0..n, one
    per ending generator.
    """
    out = set()
    for k in range(n + 1):
        out.add(word_product(alternating_word(Generator.S0, Generator.S1, k)))
        out.add(word_product(alternating_word(Generator.S1, Generator.S0, k)))
    return frozenset(out)


def ad_set(u: GroupElement, d: Degree) -> frozenset[GroupElement]:
    """Elements v with l(u v) = l(u) + l(v) and phi(v) <= d; never empty.

    Candidates come from lengths up to d.a + d.b + 1; the letter-count bound
    already caps lengths at d.a + d.b, so the enumeration limit is slack.
    """
    length_u = explicit_length(u)
    return frozenset(
        v
        for v in enumerate_up_to_length(d.a + d.b + 1)
        if phi(v) <= d
        and explicit_length(mul(u, v)) == length_u + explicit_length(v)
    )


def maximal_elements(elements: Iterable[GroupElement]) -> frozenset[GroupElement]:
    """Members no other member exceeds in length, i.e. the Bruhat-maximal ones."""
    pool = set(elements)
    if not pool:
        raise ValueError("maximal_elements needs a non-empty set")
    top = max(explicit_length(v) for v in pool)
    return frozenset(v for v in pool if explicit_length(v) == top)


def curve_neighborhood(u: GroupElement, d: Degree) -> frozenset[GroupElement]:
    """The degree-d curve neighborhood of u, by the closed form."""
    return frozenset(mul(u, w) for w in maximal_elements(ad_set(u, d)))


def parity_witness(g: GroupElement, h: GroupElement) -> tuple[int, int]:
    """The unique (r, s) with phi(g) + phi(h) = phi(g h) + (2r, 2s).

    Letter counts can only drop in pairs when a product shortens, so the
    gap is non-negative and even; anything else raises LemmaViolationError.
    """
    dg, dh, dgh = phi(g), phi(h), phi(mul(g, h))
    gap_a = dg.a + dh.a - dgh.a
    gap_b = dg.b + dh.b - dgh.b
    if gap_a < 0 or gap_b < 0 or gap_a % 2 or gap_b % 2:
        raise LemmaViolationError(
            f"letter-count gap ({gap_a},{gap_b}) for {g!r} * {h!r}"
        )
    return (gap_a // 2, gap_b // 2)


@dataclass(frozen=True)
class NeighborhoodResult:
    """Snapshot of one curve-neighborhood computation."""

    u: GroupElement
    d: Degree
    ad: frozenset[GroupElement]
    maximal: frozenset[GroupElement]
    gamma: frozenset[GroupElement]


def neighborhood_result(u: GroupElement, d: Degree) -> NeighborhoodResult:
    ad = ad_set(u, d)
    maximal = maximal_elements(ad)
    gamma = frozenset(mul(u, w) for w in maximal)
    return NeighborhoodResult(u, d, ad, maximal, gamma)
