"""Word types and text grammars for the two generator alphabets.

Cactus words are sequences of interval generators ``s{p},{q}`` acting on n
strands; diagram words are sequences of chords ``t{a,b,...}``, each chord a
nonempty subset of strands stored as an int bitmask (bit ``1 << (i - 1)``
for strand ``i``).  Both grammars are whitespace-separated token lists and
an empty string denotes the identity; arity is always supplied separately,
never inferred from the tokens.

This module owns the types and the parsing/printing; `cactus_core` and
`diagram_group` re-export them alongside the group operations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class ParseError(ValueError):
    """A word failed to parse; carries the offending token and its position.

    ``position`` is the 1-based index of the token within the input.
    """

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"token {position} ({token!r}): {message}")
        self.token = token
        self.position = position


class CactusGenerator(NamedTuple):
    """The interval generator s_{p,q}, reversing strands p..q (1 <= p < q)."""

    p: int
    q: int


@dataclass(frozen=True)
class CactusWord:
    """A word in the interval generators; the carrier of cactus group elements.

    >>> CactusWord(3, (CactusGenerator(1, 2), CactusGenerator(1, 3))).n
    3
    """

    n: int
    letters: tuple[CactusGenerator, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"arity must be positive, got {self.n}")
        for g in self.letters:
            if not 1 <= g.p < g.q <= self.n:
                raise ValueError(f"invalid generator s_{{{g.p},{g.q}}} for arity {self.n}")

    def __mul__(self, other: "CactusWord") -> "CactusWord":
        if self.n != other.n:
            raise ValueError(f"arity mismatch: {self.n} != {other.n}")
        return CactusWord(self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)


def chord_mask(members: Iterable[int], n: int) -> int:
    """Bitmask of a chord from its strand members (each in 1..n, nonempty)."""
    mask = 0
    for i in members:
        if not 1 <= i <= n:
            raise ValueError(f"strand {i} out of range 1..{n}")
        mask |= 1 << (i - 1)
    if mask == 0:
        raise ValueError("chord must be nonempty")
    return mask


def chord_members(mask: int) -> tuple[int, ...]:
    """Ascending strand members of a chord bitmask.

    >>> chord_members(0b1011)
    (1, 2, 4)
    """
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class DiagramWord:
    """A word in the chord generators; the carrier of diagram group elements."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"arity must be positive, got {self.n}")
        top = 1 << self.n
        for mask in self.letters:
            if not 0 < mask < top:
                raise ValueError(f"chord {mask:#b} out of range for arity {self.n}")

    def __mul__(self, other: "DiagramWord") -> "DiagramWord":
        if self.n != other.n:
            raise ValueError(f"arity mismatch: {self.n} != {other.n}")
        return DiagramWord(self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)


_CACTUS_TOKEN = re.compile(r"s(\d+),(\d+)\Z")
_DIAGRAM_TOKEN = re.compile(r"t\{(\d+(?:,\d+)*)\}\Z")


def parse_cactus_word(text: str, n: int) -> CactusWord:
    """Parse ``s<p>,<q>`` tokens separated by whitespace; empty = identity.

    >>> parse_cactus_word("s1,2  s1,3", 3).letters
    (CactusGenerator(p=1, q=2), CactusGenerator(p=1, q=3))
    >>> len(parse_cactus_word("", 5))
    0
    """
    letters = []
    for pos, token in enumerate(text.split(), start=1):
        m = _CACTUS_TOKEN.match(token)
        if m is None:
            raise ParseError("expected s<p>,<q>", token, pos)
        p, q = int(m.group(1)), int(m.group(2))
        if p < 1:
            raise ParseError("p must be at least 1", token, pos)
        if p >= q:
            raise ParseError("p must be less than q", token, pos)
        if q > n:
            raise ParseError(f"q exceeds arity {n}", token, pos)
        letters.append(CactusGenerator(p, q))
    return CactusWord(n, tuple(letters))


def format_cactus_word(w: CactusWord) -> str:
    """Inverse of `parse_cactus_word`; identity prints as the empty string."""
    return " ".join(f"s{g.p},{g.q}" for g in w.letters)


def parse_diagram_word(text: str, n: int) -> DiagramWord:
    """Parse ``t{a,b,...}`` tokens (strictly ascending members, 1..n).

    >>> parse_diagram_word("t{1,2} t{1,2,3}", 3).letters == (0b011, 0b111)
    True
    """
    letters = []
    for pos, token in enumerate(text.split(), start=1):
        m = _DIAGRAM_TOKEN.match(token)
        if m is None:
            raise ParseError("expected t{a,b,...}", token, pos)
        members = [int(s) for s in m.group(1).split(",")]
        if any(a >= b for a, b in zip(members, members[1:])):
            raise ParseError("members must be strictly ascending", token, pos)
        if members[0] < 1:
            raise ParseError("strands are numbered from 1", token, pos)
        if members[-1] > n:
            raise ParseError(f"strand exceeds arity {n}", token, pos)
        letters.append(chord_mask(members, n))
    return DiagramWord(n, tuple(letters))


def format_chord(mask: int) -> str:
    return "t{" + ",".join(str(i) for i in chord_members(mask)) + "}"


def format_diagram_word(w: DiagramWord) -> str:
    """Inverse of `parse_diagram_word`; identity prints as the empty string."""
    return " ".join(format_chord(mask) for mask in w.letters)
