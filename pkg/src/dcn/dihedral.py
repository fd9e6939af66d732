"""Exact arithmetic in the infinite dihedral group.

Every group element has a unique normal form: a rotation ``r(k)`` of even
Coxeter length 2|k|, or a reflection ``sr(k)`` of odd length (2k - 1 when
k > 0, otherwise 2|k| + 1), with k any integer.  Products follow the table

    r(i)  * r(j)  = r(i + j)        r(i)  * sr(j) = sr(j - i)
    sr(i) * r(j)  = sr(i + j)       sr(i) * sr(j) = r(j - i)

so r(0) is the identity and every reflection is an involution.  The two
Coxeter generators are embedded as s0 = sr(0) and s1 = sr(1).

This module also houses degrees (pairs of letter counts ordered
componentwise), reduced words, the letter-count map ``phi``, the Bruhat
order (which for this group is plain length comparison), and the printed
grammar for elements and degrees.  All values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

COEFFICIENT_BOUND = 2**31


class ParseError(ValueError):
    """Malformed element or degree text; ``position`` indexes the bad character."""

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class CoefficientRangeError(ValueError):
    """Coefficient outside the supported range |k| <= 2**31."""


class LemmaViolationError(RuntimeError):
    """A parity gap came out negative or odd.

    The chain-parity lemma guarantees this never happens, so raising it
    signals an implementation bug rather than bad input.
    """


class Generator(IntEnum):
    """The two involutive generators; S0 embeds as sr(0), S1 as sr(1)."""

    S0 = 0
    S1 = 1


Word = tuple[Generator, ...]


@dataclass(frozen=True)
class GroupElement:
    """Normal form of a group element: rotation r(k) or reflection sr(k)."""

    is_reflection: bool
    k: int

    def __mul__(self, other: GroupElement) -> GroupElement:
        return mul(self, other)

    def __repr__(self) -> str:
        return format_element(self)


@dataclass(frozen=True)
class Degree:
    """Pair of non-negative letter counts; addition and order are componentwise.

    The order is partial: (1, 2) and (2, 1) are incomparable.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError(f"degree components must be non-negative: ({self.a}, {self.b})")

    def __add__(self, other: Degree) -> Degree:
        return Degree(self.a + other.a, self.b + other.b)

    def __le__(self, other: object) -> bool:
        if not isinstance(other, Degree):
            return NotImplemented
        return self.a <= other.a and self.b <= other.b

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Degree):
            return NotImplemented
        return self != other and self.a <= other.a and self.b <= other.b

    def __ge__(self, other: object) -> bool:
        if not isinstance(other, Degree):
            return NotImplemented
        return other <= self

    def __gt__(self, other: object) -> bool:
        if not isinstance(other, Degree):
            return NotImplemented
        return other < self


ZERO_DEGREE = Degree(0, 0)
IDENTITY = GroupElement(False, 0)


def r(k: int) -> GroupElement:
    """The rotation r(k)."""
    return GroupElement(False, k)


def sr(k: int) -> GroupElement:
    """The reflection sr(k)."""
    return GroupElement(True, k)


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    """Product in normal form; see the table in the module docstring."""
    if g.is_reflection:
        if h.is_reflection:
            return GroupElement(False, h.k - g.k)
        return GroupElement(True, g.k + h.k)
    if h.is_reflection:
        return GroupElement(True, h.k - g.k)
    return GroupElement(False, g.k + h.k)


def inverse(g: GroupElement) -> GroupElement:
    """Group inverse; reflections are their own inverses."""
    return g if g.is_reflection else GroupElement(False, -g.k)


def explicit_length(g: GroupElement) -> int:
    """Coxeter length of g, in closed form."""
    if not g.is_reflection:
        return 2 * abs(g.k)
    return 2 * g.k - 1 if g.k > 0 else 2 * abs(g.k) + 1


def embed(i: Generator) -> GroupElement:
    """The generator i as a group element."""
    return GroupElement(True, int(i))


def reduced_word(g: GroupElement) -> Word:
    """A reduced word for g: its product is g and its length is explicit_length(g)."""
    s0, s1 = Generator.S0, Generator.S1
    if not g.is_reflection:
        if g.k >= 0:
            return (s0, s1) * g.k
        return (s1, s0) * -g.k
    if g.k > 0:
        return (s1,) + (s0, s1) * (g.k - 1)
    return (s0,) + (s1, s0) * -g.k


def word_product(word: Iterable[Generator]) -> GroupElement:
    """Left-to-right product of a word, starting from the identity."""
    out = IDENTITY
    for letter in word:
        out = mul(out, embed(letter))
    return out


def alternating_word(first: Generator, second: Generator, n: int) -> Word:
    """The length-n word alternating between two generators, ending with ``second``."""
    if first == second:
        raise ValueError("alternating_word needs two distinct generators")
    if n < 0:
        raise ValueError("word length must be non-negative")
    return tuple(second if (n - 1 - i) % 2 == 0 else first for i in range(n))


def phi(g: GroupElement) -> Degree:
    """Letter counts (#s0, #s1) of a reduced word for g, in closed form."""
    if not g.is_reflection:
        return Degree(abs(g.k), abs(g.k))
    if g.k > 0:
        return Degree(g.k - 1, g.k)
    return Degree(abs(g.k) + 1, abs(g.k))


def is_left_descent(i: Generator, g: GroupElement) -> bool:
    """Whether left-multiplying by generator i shortens g."""
    return explicit_length(mul(embed(i), g)) < explicit_length(g)


def bruhat_lt(u: GroupElement, v: GroupElement) -> bool:
    """Strict Bruhat order, which for this group is length comparison."""
    return explicit_length(u) < explicit_length(v)


def bruhat_le(u: GroupElement, v: GroupElement) -> bool:
    return u == v or bruhat_lt(u, v)


def degrees_up_to(limit: Degree) -> list[Degree]:
    """All degrees d <= limit, ordered lexicographically by (a, b)."""
    return [Degree(a, b) for a in range(limit.a + 1) for b in range(limit.b + 1)]


# -- canonical ordering and printing -----------------------------------------

def canonical_key(g: GroupElement) -> tuple[int, int, int]:
    """Sort key pinning printed order: length, rotations first, then k."""
    return (explicit_length(g), int(g.is_reflection), g.k)


def sort_elements(elements: Iterable[GroupElement]) -> list[GroupElement]:
    return sorted(elements, key=canonical_key)


def format_element(g: GroupElement) -> str:
    return f"sr({g.k})" if g.is_reflection else f"r({g.k})"


def format_element_set(elements: Iterable[GroupElement]) -> str:
    return "{" + ", ".join(format_element(g) for g in sort_elements(elements)) + "}"


def format_degree(d: Degree) -> str:
    return f"{d.a},{d.b}"


def format_word(word: Iterable[Generator]) -> str:
    letters = [f"s{int(i)}" for i in word]
    return " ".join(letters) if letters else "e"


# -- the element and degree grammar ------------------------------------------

def _compact(text: str) -> tuple[str, list[int]]:
    # Whitespace-insensitive parsing: drop blanks but keep the original
    # positions for error messages.
    chars: list[str] = []
    positions: list[int] = []
    for index, ch in enumerate(text):
        if not ch.isspace():
            chars.append(ch)
            positions.append(index)
    positions.append(len(text))
    return "".join(chars), positions


def _check_range(k: int) -> int:
    if abs(k) > COEFFICIENT_BOUND:
        raise CoefficientRangeError(
            f"coefficient {k} outside the supported range |k| <= 2**31"
        )
    return k


def parse_element(text: str) -> GroupElement:
    """Parse ``r(<int>)`` / ``sr(<int>)`` or the aliases ``1``, ``s0``, ``s1``."""
    s, positions = _compact(text)

    def fail(message: str, index: int):
        raise ParseError(message, text, positions[min(index, len(positions) - 1)])

    if s == "1":
        return IDENTITY
    if s == "s0":
        return GroupElement(True, 0)
    if s == "s1":
        return GroupElement(True, 1)
    if s.startswith("sr"):
        head = 2
    elif s.startswith("r"):
        head = 1
    else:
        fail("expected 'r(k)', 'sr(k)', '1', 's0' or 's1'", 0)
    j = head
    if j == len(s) or s[j] != "(":
        fail("expected '('", j)
    j += 1
    sign = j
    if j < len(s) and s[j] == "-":
        j += 1
    digits = j
    while j < len(s) and s[j].isdigit():
        j += 1
    if j == digits:
        fail("expected an integer", j)
    if j == len(s) or s[j] != ")":
        fail("expected ')'", j)
    if j + 1 != len(s):
        fail("unexpected trailing text", j + 1)
    k = _check_range(int(s[sign:j]))
    return GroupElement(head == 2, k)


def parse_degree(text: str) -> Degree:
    """Parse ``<nat>,<nat>`` or ``(<nat>,<nat>)``."""
    s, positions = _compact(text)

    def fail(message: str, index: int):
        raise ParseError(message, text, positions[min(index, len(positions) - 1)])

    def scan_nat(j: int) -> tuple[int, int]:
        start = j
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == start:
            fail("expected a non-negative integer", start)
        return int(s[start:j]), j

    j = 0
    wrapped = s.startswith("(")
    if wrapped:
        j += 1
    a, j = scan_nat(j)
    if j == len(s) or s[j] != ",":
        fail("expected ','", j)
    b, j = scan_nat(j + 1)
    if wrapped:
        if j == len(s) or s[j] != ")":
            fail("expected ')'", j)
        j += 1
    if j != len(s):
        fail("unexpected trailing text", j)
    return Degree(_check_range(a), _check_range(b))
