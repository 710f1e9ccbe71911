"""Degree-truncated integer partially commutative power-series algebra.

Same chord generators and commutation relations as the mod-2 algebra but
no square-zero relation and integer coefficients, so monomials may repeat
letters and coefficients carry signs.  Coefficients are Python ints, hence
arbitrary precision: truncation bounds the monomial count, never the
coefficient size, and overflow cannot occur.

Words from the even diagram subgroup (every chord occurring an even
number of times) map into the unit group by sending the c-th occurrence of
a chord to 1 + t for odd c and to the truncated geometric inverse
1 - t + t^2 - ... for even c.  The image of a lean word of length d
contains the word's own monomial with coefficient (-1)^(d/2), which makes
the minimal nontrivial truncation degree a certificate of nontriviality
in a torsion-free nilpotent quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Literal, Mapping

from . import kernels
from .certificates import RING_Z, DegreeCapReached, SeparationCertificate
from .diagram_group import in_even_subgroup
from .words import DiagramWord, format_diagram_word

ZMonomial = tuple  # chord masks, lex-least in the commutation class; repeats allowed


@dataclass(frozen=True)
class ZSeries:
    """Truncated series: monomial -> nonzero integer coefficient."""

    degree: int
    coeffs: Mapping

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("truncation degree must be at least 1")
        acc: dict = {}
        for m, c in self.coeffs.items():
            if c == 0:
                continue
            if len(m) > self.degree:
                raise ValueError("monomial exceeds truncation degree")
            mono = kernels.lex_least(m)
            acc[mono] = acc.get(mono, 0) + c
        clean = {m: c for m, c in acc.items() if c != 0}
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    @property
    def constant_term(self) -> int:
        return self.coeffs.get((), 0)

    def is_one(self) -> bool:
        return dict(self.coeffs) == {(): 1}

    def coefficient(self, mono: ZMonomial) -> int:
        return self.coeffs.get(kernels.lex_least(mono), 0)


def z_one(degree: int) -> ZSeries:
    return ZSeries(degree, {(): 1})


def z_add(x: ZSeries, y: ZSeries) -> ZSeries:
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} != {y.degree}")
    acc = dict(x.coeffs)
    for mono, c in y.coeffs.items():
        acc[mono] = acc.get(mono, 0) + c
    return ZSeries(x.degree, acc)


def z_multiply(x: ZSeries, y: ZSeries) -> ZSeries:
    """Distributive product: concatenations canonicalized, like terms
    combined over the integers, terms above the truncation degree dropped.
    """
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} != {y.degree}")
    degree = x.degree
    acc: dict = {}
    for ma, ca in x.coeffs.items():
        room = degree - len(ma)
        for mb, cb in y.coeffs.items():
            if len(mb) > room:
                continue
            mono = kernels.lex_least(ma + mb)
            acc[mono] = acc.get(mono, 0) + ca * cb
    return ZSeries(degree, acc)


def generator_factor(mask: int, occurrence_parity: Literal["odd", "even"], degree: int) -> ZSeries:
    """The factor contributed by one occurrence of a chord: 1 + t for an
    odd-numbered occurrence, the truncated geometric inverse for an even
    one.

    >>> dict(generator_factor(0b11, "even", 2).coeffs) == {(): 1, (3,): -1, (3, 3): 1}
    True
    """
    if degree < 1:
        raise ValueError("truncation degree must be at least 1")
    if occurrence_parity == "odd":
        return ZSeries(degree, {(): 1, (mask,): 1})
    if occurrence_parity == "even":
        return ZSeries(degree, {(mask,) * j: (-1) ** j for j in range(degree + 1)})
    raise ValueError(f"occurrence_parity must be 'odd' or 'even', got {occurrence_parity!r}")


def z_image(w: DiagramWord, degree: int) -> ZSeries:
    """Image of an even-subgroup word: scan left to right counting each
    chord's occurrences and multiply the per-occurrence factors in order.
    Outside the even subgroup the assignment is not relation invariant, so
    such input is rejected.
    """
    if degree < 1:
        raise ValueError("truncation degree must be at least 1")
    if not in_even_subgroup(w):
        raise ValueError("word is outside the even diagram subgroup (odd chord parity)")
    counts: dict = {}
    acc = z_one(degree)
    for mask in w.letters:
        counts[mask] = counts.get(mask, 0) + 1
        parity = "odd" if counts[mask] % 2 == 1 else "even"
        acc = z_multiply(acc, generator_factor(mask, parity, degree))
    return acc


def z_inverse(x: ZSeries) -> ZSeries:
    """Inverse of a series with constant term +-1 via the geometric series."""
    c = x.constant_term
    if c not in (1, -1):
        raise ValueError("only series with constant term +-1 are inverted here")
    # x = c (1 + u) with u of positive degree; sum c (-u)^j.
    u = ZSeries(x.degree, {m: c * v for m, v in x.coeffs.items() if m})
    acc = z_one(x.degree)
    power = z_one(x.degree)
    for _ in range(x.degree):
        power = z_multiply(power, ZSeries(x.degree, {m: -v for m, v in u.coeffs.items()}))
        if not power.coeffs:
            break
        acc = z_add(acc, power)
    return ZSeries(x.degree, {m: c * v for m, v in acc.coeffs.items()})


def homogeneous_component(x: ZSeries, d: int) -> dict:
    return {m: c for m, c in x.coeffs.items() if len(m) == d}


def tfn_separation(
    w: DiagramWord, max_degree: int | None = None
) -> SeparationCertificate | None:
    """Certificate of nontriviality in a torsion-free nilpotent quotient,
    or None for the trivial element.  Input must lie in the even diagram
    subgroup.

    At the lean length d the image always separates: the coefficient of
    the lean monomial itself is (-1)^(d/2).
    """
    if not in_even_subgroup(w):
        raise ValueError("word is outside the even diagram subgroup (odd chord parity)")
    lean = kernels.lean_reduce(w.letters)
    if not lean:
        return None
    reduced = DiagramWord(w.n, lean)
    cap = len(lean) if max_degree is None else min(max_degree, len(lean))
    for k in range(1, cap + 1):
        image = z_image(reduced, k)
        if not image.is_one():
            witness = tuple(sorted((m, c) for m, c in image.coeffs.items() if m))
            return SeparationCertificate(
                element=format_diagram_word(w),
                ring=RING_Z,
                degree=k,
                witness=witness,
            )
    if cap < len(lean):
        raise DegreeCapReached(f"not separated by degree {cap}")
    raise RuntimeError("lean even word image was trivial at its own length; impossible")
