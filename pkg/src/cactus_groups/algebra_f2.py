"""Degree-truncated mod-2 algebra with square-zero chord generators.

One generator t_I of degree one per nonempty chord, with t_I^2 = 0 and
commutation for nested or disjoint chords.  Nonzero monomials are exactly
the lean words in the chords, stored as the lexicographically least word
of their commutation class; a series is a set of such monomials (mod-2
coefficients, absence meaning 0), everything truncated above a working
degree.

The group of chord words embeds through t_I -> 1 + t_I: the top-degree
term of a lean word's image is its own monomial, so the minimal degree at
which the image differs from 1 yields a separation certificate placing the
element outside a term of the unit-group filtration by lowest degree,
i.e. a witness of nontriviality in a nilpotent quotient.

All arithmetic silently drops terms above the truncation degree; the
algebra is infinite dimensional, and every statement used here is about
bounded degree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import kernels
from .certificates import RING_F2, DegreeCapReached, SeparationCertificate
from .words import DiagramWord, format_diagram_word

F2Monomial = tuple  # chord masks, lex-least in the commutation class


class Special(enum.Enum):
    """Out-of-band monomial products: the zero monomial and a dropped
    above-truncation term."""

    ZERO = "zero"
    OVERFLOW = "overflow"


ZERO = Special.ZERO
OVERFLOW = Special.OVERFLOW


@dataclass(frozen=True)
class F2Series:
    """Truncated series: the set of monomials with coefficient 1.

    The empty monomial is the constant term.  All stored monomials have
    length at most ``degree``.
    """

    degree: int
    support: frozenset

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("truncation degree must be at least 1")
        if any(len(m) > self.degree for m in self.support):
            raise ValueError("monomial exceeds truncation degree")

    @property
    def constant_term(self) -> int:
        return 1 if () in self.support else 0

    def is_one(self) -> bool:
        return self.support == frozenset([()])


def f2_one(degree: int) -> F2Series:
    return F2Series(degree, frozenset([()]))


def monomial_multiply(a: F2Monomial, b: F2Monomial, degree: int):
    """Concatenate monomials: OVERFLOW above the truncation degree, ZERO
    when a repeated chord meets itself across commuting letters, else the
    canonical form.

    >>> monomial_multiply((0b011,), (0b011,), 4)
    <Special.ZERO: 'zero'>
    """
    if len(a) + len(b) > degree:
        return OVERFLOW
    mono = kernels.canonical_if_lean(a + b)
    return ZERO if mono is None else mono


def f2_add(x: F2Series, y: F2Series) -> F2Series:
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} != {y.degree}")
    return F2Series(x.degree, x.support.symmetric_difference(y.support))


def f2_multiply(x: F2Series, y: F2Series) -> F2Series:
    """Distribute over supports; coefficients add mod 2, so colliding
    products cancel out of the result."""
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} != {y.degree}")
    degree = x.degree
    acc = set()
    for ma in x.support:
        room = degree - len(ma)
        for mb in y.support:
            if len(mb) > room:
                continue
            mono = kernels.canonical_if_lean(ma + mb)
            if mono is not None:
                acc.symmetric_difference_update((mono,))
    return F2Series(degree, frozenset(acc))


def f2_image(w: DiagramWord, degree: int) -> F2Series:
    """Image of a chord word: the truncated product of 1 + t over its
    letters.

    >>> sorted(f2_image(DiagramWord(2, (0b11, 0b11)), 3).support)
    [()]
    """
    if degree < 1:
        raise ValueError("truncation degree must be at least 1")
    support = {()}
    for letter in w.letters:
        step = set(support)
        for mono in support:
            if len(mono) < degree:
                grown = kernels.canonical_if_lean(mono + (letter,))
                if grown is not None:
                    step.symmetric_difference_update((grown,))
        support = step
    return F2Series(degree, frozenset(support))


def f2_inverse(x: F2Series) -> F2Series:
    """Inverse of a series with constant term 1, by the geometric series
    in (x - 1), which is nilpotent under truncation."""
    if x.constant_term != 1:
        raise ValueError("only series with constant term 1 are inverted here")
    u = frozenset(m for m in x.support if m)  # x - 1
    degree = x.degree
    acc = f2_one(degree)
    power = f2_one(degree)
    for _ in range(degree):
        power = f2_multiply(power, F2Series(degree, u))
        if not power.support:
            break
        acc = f2_add(acc, power)
    return acc


def homogeneous_component(x: F2Series, d: int) -> frozenset:
    return frozenset(m for m in x.support if len(m) == d)


def nilpotent_separation(
    w: DiagramWord, max_degree: int | None = None
) -> SeparationCertificate | None:
    """Certificate of nontriviality in a nilpotent quotient, or None for
    the trivial element.

    Searches truncation degrees 1, 2, ... for the first at which the image
    of the lean reduction differs from 1; the lean length always suffices,
    since the image's top term is the lean monomial itself.  ``max_degree``
    caps the search (raising `DegreeCapReached` if it bites).

    >>> cert = nilpotent_separation(DiagramWord(2, (0b11,)))
    >>> cert.degree, cert.witness
    (1, (((3,), 1),))
    """
    lean = kernels.lean_reduce(w.letters)
    if not lean:
        return None
    reduced = DiagramWord(w.n, lean)
    cap = len(lean) if max_degree is None else min(max_degree, len(lean))
    for k in range(1, cap + 1):
        image = f2_image(reduced, k)
        if not image.is_one():
            witness = tuple(sorted((m, 1) for m in image.support if m))
            return SeparationCertificate(
                element=format_diagram_word(w),
                ring=RING_F2,
                degree=k,
                witness=witness,
            )
    if cap < len(lean):
        raise DegreeCapReached(f"not separated by degree {cap}")
    raise RuntimeError("lean word image was trivial at its own length; impossible")
