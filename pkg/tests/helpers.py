"""Seeded word generators and relation-move helpers shared across test modules."""

from cactus_groups import _kernels_py
from cactus_groups.diagram_group import is_lean
from cactus_groups.words import CactusGenerator, CactusWord, DiagramWord


def all_generators(n):
    return [CactusGenerator(p, q) for p in range(1, n) for q in range(p + 1, n + 1)]


def random_cactus_word(rng, n, length):
    gens = all_generators(n)
    return CactusWord(n, tuple(rng.choice(gens) for _ in range(length)))


def random_diagram_word(rng, n, length):
    return DiagramWord(n, tuple(rng.randrange(1, 1 << n) for _ in range(length)))


def random_lean_word(rng, n, length, tries=2000):
    """A lean word of exactly `length` letters, by rejection sampling."""
    for _ in range(tries):
        w = random_diagram_word(rng, n, length)
        if is_lean(w):
            return w
    raise AssertionError(f"no lean word of length {length} found at n={n}")


def noncentral_alphabet(n):
    """Chords that fail to commute with at least one other chord.

    Singleton chords and the full chord commute with every chord, so a lean
    word never repeats one; drawing from this alphabet makes rejection
    sampling of even lean words effective.
    """
    alpha = range(1, 1 << n)
    return tuple(
        a for a in alpha if any(not _kernels_py.commutes(a, b) for b in alpha)
    )


def random_even_word(rng, n, pairs, alphabet=None):
    """A word with every chord multiplicity even: a doubled multiset, shuffled."""
    alphabet = alphabet or tuple(range(1, 1 << n))
    base = [rng.choice(alphabet) for _ in range(pairs)]
    letters = base + base
    rng.shuffle(letters)
    return DiagramWord(n, tuple(letters))


def random_even_lean_word(rng, n, pairs, tries=5000):
    """A lean word with all chord parities even, of length 2 * pairs."""
    alphabet = noncentral_alphabet(n)
    for _ in range(tries):
        w = random_even_word(rng, n, pairs, alphabet)
        if is_lean(w):
            return w
    raise AssertionError(f"no even lean word of {2 * pairs} letters found at n={n}")


def relation_neighbors(letters, n):
    """All letter tuples one defining-relation move away from `letters`.

    Moves: swap an adjacent commuting pair, delete an adjacent equal pair,
    insert an adjacent equal pair of any chord.
    """
    out = []
    for i in range(len(letters) - 1):
        a, b = letters[i], letters[i + 1]
        if a == b:
            out.append(letters[:i] + letters[i + 2 :])
        elif _kernels_py.commutes(a, b):
            out.append(letters[:i] + (b, a) + letters[i + 2 :])
    for i in range(len(letters) + 1):
        for x in range(1, 1 << n):
            out.append(letters[:i] + (x, x) + letters[i:])
    return out
