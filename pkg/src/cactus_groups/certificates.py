"""Separation certificates: machine-checkable witnesses of nontriviality.

A certificate records the minimal truncation degree at which a group
element's image in the truncated algebra differs from 1, together with the
nonzero homogeneous component at that degree.  Ring "f2-nilpotent" refers
to the mod-2 algebra with square-zero generators (each chord t_I maps
through 1 + t_I); ring "z-torsion-free" to the integer partially
commutative power-series algebra with the alternating-occurrence map.

`verify_certificate` recomputes the truncated image by direct expansion of
the defining product, a code path separate from the series arithmetic that
produced the certificate, and confirms the witness and its minimality.

JSON layout::

    {"element": "t{1,2} t{1,3} ...", "ring": "f2-nilpotent", "degree": 2,
     "witness": [{"monomial": [[1,2],[1,3]], "coeff": 1}, ...]}

where a monomial is a list of chords, each an ascending strand list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kernels
from .words import chord_mask, chord_members, parse_diagram_word

RING_F2 = "f2-nilpotent"
RING_Z = "z-torsion-free"

Monomial = tuple  # tuple[int, ...], chord masks in canonical order


class DegreeCapReached(RuntimeError):
    """A separation search hit its degree cap before separating."""


@dataclass(frozen=True)
class SeparationCertificate:
    element: str
    ring: str
    degree: int
    witness: tuple  # tuple[(Monomial, int), ...], sorted by monomial

    def __post_init__(self):
        if self.ring not in (RING_F2, RING_Z):
            raise ValueError(f"unknown ring {self.ring!r}")
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if not self.witness:
            raise ValueError("witness must be nonempty")
        for mono, coeff in self.witness:
            if len(mono) != self.degree:
                raise ValueError("witness monomial length differs from degree")
            if coeff == 0 or (self.ring == RING_F2 and coeff != 1):
                raise ValueError(f"invalid witness coefficient {coeff}")

    def to_dict(self) -> dict:
        return {
            "element": self.element,
            "ring": self.ring,
            "degree": self.degree,
            "witness": [
                {"monomial": [list(chord_members(m)) for m in mono], "coeff": coeff}
                for mono, coeff in self.witness
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> SeparationCertificate:
        witness = []
        for entry in data["witness"]:
            chord_lists = entry["monomial"]
            mono = tuple(chord_mask(chord, max(chord)) for chord in chord_lists)
            witness.append((mono, int(entry["coeff"])))
        return cls(
            element=data["element"],
            ring=data["ring"],
            degree=int(data["degree"]),
            witness=tuple(sorted(witness)),
        )

    @classmethod
    def from_json(cls, text: str) -> SeparationCertificate:
        return cls.from_dict(json.loads(text))


def _infer_arity(cert: SeparationCertificate) -> int:
    strands = [1]
    for token in cert.element.replace("t{", " ").replace("}", " ").replace(",", " ").split():
        strands.append(int(token))
    for mono, _ in cert.witness:
        for mask in mono:
            strands.append(mask.bit_length())
    return max(strands)


def _expand_f2(letters: tuple, degree: int) -> dict:
    """Degree -> {monomial} with odd coefficient, by subsequence expansion.

    The image of a word under t -> 1 + t is the sum over subsequences of
    the subsequence's monomial; monomials with a repeated letter adjacent
    up to commutation vanish.  Expansion is depth-first with the degree
    budget pruning the choice tree.
    """
    components: dict[int, set] = {d: set() for d in range(1, degree + 1)}

    def walk(i: int, chosen: list):
        if len(chosen) == degree or i == len(letters):
            if chosen:
                mono = kernels.canonical_if_lean(tuple(chosen))
                if mono is not None:
                    components[len(mono)].symmetric_difference_update((mono,))
            return
        walk_budget = degree - len(chosen)
        if walk_budget > 0:
            chosen.append(letters[i])
            walk(i + 1, chosen)
            chosen.pop()
        walk(i + 1, chosen)

    walk(0, [])
    return components


def _expand_z(letters: tuple, degree: int) -> dict:
    """Degree -> {monomial: coeff}, by direct expansion of the alternating
    product: the c-th occurrence of a chord contributes 1 + t for odd c and
    the truncated geometric inverse for even c; choose one term per factor.
    """
    seen: dict[int, int] = {}
    factors = []  # (mask, is_odd_occurrence)
    for mask in letters:
        count = seen.get(mask, 0) + 1
        seen[mask] = count
        factors.append((mask, count % 2 == 1))

    components: dict[int, dict] = {d: {} for d in range(1, degree + 1)}

    def walk(i: int, chosen: list, sign: int):
        if i == len(factors):
            if chosen:
                mono = kernels.lex_least(tuple(chosen))
                comp = components[len(mono)]
                coeff = comp.get(mono, 0) + sign
                if coeff:
                    comp[mono] = coeff
                else:
                    del comp[mono]
            return
        mask, odd = factors[i]
        budget = degree - len(chosen)
        if odd:
            walk(i + 1, chosen, sign)
            if budget >= 1:
                chosen.append(mask)
                walk(i + 1, chosen, sign)
                chosen.pop()
        else:
            for power in range(budget + 1):
                if power:
                    chosen.extend([mask] * power)
                walk(i + 1, chosen, sign if power % 2 == 0 else -sign)
                if power:
                    del chosen[-power:]

    walk(0, [], 1)
    return components


def verify_certificate(cert: SeparationCertificate, n: int | None = None) -> bool:
    """Recompute the truncated image of the certified element at the stated
    degree and confirm the witness is exactly the first nonzero component.
    """
    try:
        if n is None:
            n = _infer_arity(cert)
        word = parse_diagram_word(cert.element, n)
    except ValueError:
        return False
    letters = kernels.lean_reduce(word.letters)
    if not letters:
        return False

    if cert.ring == RING_F2:
        components = _expand_f2(letters, cert.degree)
        claimed = {mono for mono, _ in cert.witness}
    else:
        parity = set()
        for mask in word.letters:
            parity.symmetric_difference_update((mask,))
        if parity:
            return False
        components = _expand_z(letters, cert.degree)
        claimed = dict(cert.witness)

    for d in range(1, cert.degree):
        if components[d]:
            return False
    return components[cert.degree] == claimed
