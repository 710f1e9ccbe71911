"""Pure-Python word kernels: the inner loops of every group/algebra operation.

A chord set is an int bitmask over strands (bit ``1 << (i - 1)`` for strand
``i``); a word is a tuple of such masks.  Two letters commute exactly when
one contains the other or they are disjoint, which makes words over this
alphabet a trace monoid: the functions here decide leanness (no equal pair
can be made adjacent by commutations), delete such pairs, compute the
lexicographically least word of a commutation class, and run bounded BFS
over the relation moves (commuting swaps, square deletion, square
insertion).

`cactus_groups._kernels_cy` is a compiled twin with the same interface;
`cactus_groups.kernels` selects between them at import time.  Keep the two
implementations behaviourally identical: `tests/test_kernels.py` runs the
same suite against both.

BFS functions return ``None`` instead of raising when a state cap is hit;
callers turn that into their own error.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

BACKEND = "python"

Word = tuple  # tuple[int, ...]


def commutes(a: int, b: int) -> bool:
    """True iff chords a and b commute: nested or disjoint.

    >>> commutes(0b011, 0b111), commutes(0b011, 0b100), commutes(0b011, 0b110)
    (True, True, False)
    """
    c = a & b
    return c == 0 or c == a or c == b


def is_lean(word: Sequence[int]) -> bool:
    """True iff no equal pair of letters can be made adjacent by commutations.

    Scans right from each letter: a later equal letter reached across
    commuting letters only is exactly a deletable (non-lean) pair.
    """
    n = len(word)
    for i in range(n - 1):
        a = word[i]
        for j in range(i + 1, n):
            b = word[j]
            if b == a:
                return False
            c = a & b
            if c != 0 and c != a and c != b:
                break
    return True


def lean_reduce(word: Sequence[int]) -> Word:
    """Delete equal pairs separated only by commuting letters until lean.

    Deletes the leftmost pair first, innermost occurrence for that left
    endpoint; any deletion order yields the same group element.
    """
    letters = list(word)
    changed = True
    while changed:
        changed = False
        n = len(letters)
        for i in range(n - 1):
            a = letters[i]
            for j in range(i + 1, n):
                b = letters[j]
                if b == a:
                    del letters[j]
                    del letters[i]
                    changed = True
                    break
                c = a & b
                if c != 0 and c != a and c != b:
                    break
            if changed:
                break
    return tuple(letters)


def lex_least(word: Sequence[int]) -> Word:
    """Lexicographically least word of the commutation class of ``word``.

    Greedy extraction: a letter can be moved to the front iff everything
    before it commutes with it; always take the least movable letter.
    The first letter of any equivalent word must be movable in this sense,
    so the greedy choice is the least achievable prefix at every step.
    """
    remaining = list(word)
    out = []
    while remaining:
        best = -1
        m = len(remaining)
        for j in range(m):
            b = remaining[j]
            movable = True
            for i in range(j):
                a = remaining[i]
                c = a & b
                if c != 0 and c != a and c != b:
                    movable = False
                    break
            if movable and (best < 0 or b < remaining[best]):
                best = j
        out.append(remaining.pop(best))
    return tuple(out)


def canonical_if_lean(word: Sequence[int]) -> Word | None:
    """Canonical form of a lean word, or None when the word is not lean."""
    if not is_lean(word):
        return None
    return lex_least(word)


def _neighbors(w: Word, letters: Sequence[int], max_len: int) -> list[Word]:
    n = len(w)
    out = []
    for i in range(n - 1):
        a = w[i]
        b = w[i + 1]
        if a == b:
            out.append(w[:i] + w[i + 2 :])
        else:
            c = a & b
            if c == 0 or c == a or c == b:
                out.append(w[:i] + (b, a) + w[i + 2 :])
    if n + 2 <= max_len:
        for i in range(n + 1):
            head = w[:i]
            tail = w[i:]
            for let in letters:
                out.append(head + (let, let) + tail)
    return out


def bfs_reach(
    start: Word,
    targets: Iterable[Word],
    letters: Sequence[int],
    max_len: int,
    state_cap: int,
) -> list[bool] | None:
    """Which of ``targets`` are reachable from ``start`` by relation moves.

    Moves: swap adjacent commuting letters, delete an adjacent equal pair,
    insert an adjacent equal pair (any letter), never exceeding ``max_len``
    letters.  Returns one bool per target, or None once more than
    ``state_cap`` states have been visited.
    """
    targets = list(targets)
    want = {}
    for idx, t in enumerate(targets):
        want.setdefault(t, []).append(idx)
    found = [False] * len(targets)
    missing = len(want)

    visited = {start}
    queue = deque([start])
    if start in want:
        for idx in want[start]:
            found[idx] = True
        missing -= 1
    while queue and missing:
        w = queue.popleft()
        for nb in _neighbors(w, letters, max_len):
            if nb in visited:
                continue
            visited.add(nb)
            if len(visited) > state_cap:
                return None
            if nb in want:
                hits = want.pop(nb)
                for idx in hits:
                    found[idx] = True
                missing -= 1
            queue.append(nb)
    return found


def reachable_class(
    start: Word, letters: Sequence[int], max_len: int, state_cap: int
) -> set[Word] | None:
    """All words reachable from ``start`` by relation moves, length-bounded."""
    visited = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nb in _neighbors(w, letters, max_len):
            if nb not in visited:
                visited.add(nb)
                if len(visited) > state_cap:
                    return None
                queue.append(nb)
    return visited


def swap_class(start: Word, state_cap: int) -> set[Word] | None:
    """The commutation class of ``start``: adjacent commuting swaps only."""
    visited = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a = w[i]
            b = w[i + 1]
            if a == b:
                continue
            c = a & b
            if c == 0 or c == a or c == b:
                nb = w[:i] + (b, a) + w[i + 2 :]
                if nb not in visited:
                    visited.add(nb)
                    if len(visited) > state_cap:
                        return None
                    queue.append(nb)
    return visited


def component_ids(
    words: Sequence[Word], letters: Sequence[int], max_len: int, state_cap: int
) -> list[int] | None:
    """Connected-component labels of ``words`` under the relation moves.

    One flood fill per previously unseen word, sharing the visited map, so
    labelling N words costs one bounded BFS per distinct component rather
    than one per word.  ``state_cap`` bounds the total states across all
    floods.  Two words get equal labels iff each is reachable from the
    other within the ``max_len`` bound.
    """
    visited: dict[Word, int] = {}
    next_id = 0
    for w in words:
        if w in visited:
            continue
        comp = next_id
        next_id += 1
        visited[w] = comp
        queue = deque([w])
        while queue:
            v = queue.popleft()
            for nb in _neighbors(v, letters, max_len):
                if nb not in visited:
                    visited[nb] = comp
                    if len(visited) > state_cap:
                        return None
                    queue.append(nb)
    return [visited[w] for w in words]
