"""ASCII pictures of cactus words and chord diagrams.

Strands run top to bottom, one character column per strand (two screen
columns apart).  Each letter occupies one row between plain rows:

* a cactus letter is a block of ``X`` marks over the strands it reverses;
* a diagram letter is a chord row with ``*`` on its member strands.
"""

from __future__ import annotations

from .words import CactusGenerator, CactusWord, DiagramWord, chord_members

MAX_STRANDS = 26


def _bar_row(n: int) -> str:
    return " ".join("|" * n)


def _cactus_row(p: int, q: int, n: int) -> str:
    chars = []
    for col in range(2 * n - 1):
        strand = col // 2 + 1
        if col % 2 == 0:
            chars.append("X" if p <= strand <= q else "|")
        else:
            chars.append("-" if p <= strand < q else " ")
    return "".join(chars)


def _chord_row(mask: int, n: int) -> str:
    members = chord_members(mask)
    lo, hi = members[0], members[-1]
    chars = []
    for col in range(2 * n - 1):
        strand = col // 2 + 1
        if col % 2 == 0:
            chars.append("*" if strand in members else "|")
        else:
            chars.append("-" if lo <= strand < hi else " ")
    return "".join(chars)


def render_ascii(w: CactusWord | DiagramWord) -> str:
    """Multi-line drawing of the word, one row per letter.

    >>> print(render_ascii(CactusWord(3, (CactusGenerator(1, 2),))))
    | | |
    X-X |
    | | |
    >>> print(render_ascii(DiagramWord(4, (0b1011,))))
    | | | |
    *-*-|-*
    | | | |
    """
    if w.n > MAX_STRANDS:
        raise ValueError(f"cannot render more than {MAX_STRANDS} strands, got {w.n}")
    bar = _bar_row(w.n)
    rows = [bar]
    if isinstance(w, CactusWord):
        for p, q in w.letters:
            rows.append(_cactus_row(p, q, w.n))
            rows.append(bar)
    else:
        for mask in w.letters:
            rows.append(_chord_row(mask, w.n))
            rows.append(bar)
    return "\n".join(rows)
