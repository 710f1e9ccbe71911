import pytest

from cactus_groups.cactus_core import (
    compose_permutations,
    diagram_of,
    equal_in_Jn,
    generator_permutation,
    identity_permutation,
    inverse_word,
    invert_permutation,
    is_pure,
    word_permutation,
)
from cactus_groups.words import (
    CactusGenerator,
    CactusWord,
    chord_mask,
    chord_members,
    parse_cactus_word,
    parse_diagram_word,
)
from helpers import all_generators, random_cactus_word

WORKED = "s1,2 s1,3 s1,2 s1,3 s1,2 s1,3"


def test_identity_and_inverse_permutations():
    assert identity_permutation(4) == (1, 2, 3, 4)
    assert invert_permutation((2, 3, 1)) == (3, 1, 2)
    assert compose_permutations((2, 1, 3), (3, 2, 1)) == (2, 3, 1)


@pytest.mark.parametrize(
    "g, n, expected",
    [
        (CactusGenerator(1, 3), 3, (3, 2, 1)),
        (CactusGenerator(3, 7), 7, (1, 2, 7, 6, 5, 4, 3)),
        (CactusGenerator(2, 3), 4, (1, 3, 2, 4)),
    ],
)
def test_generator_permutation(g, n, expected):
    assert generator_permutation(g, n) == expected


def test_word_permutation_examples():
    assert word_permutation(parse_cactus_word("", 4)) == (1, 2, 3, 4)
    assert word_permutation(parse_cactus_word("s1,2 s1,2", 3)) == (1, 2, 3)
    assert word_permutation(parse_cactus_word(WORKED, 3)) == (1, 2, 3)
    assert word_permutation(parse_cactus_word("s1,2 s1,3", 3)) == (2, 3, 1)


def test_word_permutation_is_homomorphism(rng):
    for _ in range(100):
        n = rng.randrange(2, 7)
        u = random_cactus_word(rng, n, rng.randrange(0, 6))
        v = random_cactus_word(rng, n, rng.randrange(0, 6))
        assert word_permutation(u * v) == compose_permutations(
            word_permutation(u), word_permutation(v)
        )


def test_is_pure_examples():
    assert not is_pure(parse_cactus_word("s1,2", 3))
    assert is_pure(parse_cactus_word("s1,4 s2,3 s1,4 s2,3", 4))
    assert is_pure(parse_cactus_word(WORKED, 3))


def test_inverse_word():
    assert inverse_word(parse_cactus_word("", 3)).letters == ()
    assert inverse_word(parse_cactus_word("s1,2 s1,3", 3)) == parse_cactus_word(
        "s1,3 s1,2", 3
    )
    g = parse_cactus_word("s2,4", 4)
    assert inverse_word(g) == g


def test_inverse_word_cancels(rng):
    for _ in range(60):
        n = rng.randrange(2, 6)
        w = random_cactus_word(rng, n, rng.randrange(0, 6))
        assert equal_in_Jn(w * inverse_word(w), CactusWord(n, ()))


def test_diagram_of_examples():
    assert diagram_of(parse_cactus_word("s1,2", 2)) == parse_diagram_word("t{1,2}", 2)
    assert diagram_of(parse_cactus_word("s1,3 s1,2", 3)) == parse_diagram_word(
        "t{1,2,3} t{2,3}", 3
    )
    assert diagram_of(parse_cactus_word(WORKED, 3)) == parse_diagram_word(
        "t{1,2} t{1,2,3} t{1,3} t{1,2,3} t{2,3} t{1,2,3}", 3
    )
    assert diagram_of(parse_cactus_word("", 3)).letters == ()


def test_diagram_chords_are_label_sets_of_reversed_intervals():
    # the first letter always yields the labels at positions p..q of the
    # identity assignment
    w = parse_cactus_word("s2,4", 5)
    assert diagram_of(w).letters == (chord_mask([2, 3, 4], 5),)


def test_diagram_cocycle(rng):
    # diagram_of(u v) = diagram_of(u) then diagram_of(v) relabeled through
    # the assignment reached at the end of u
    for _ in range(120):
        n = rng.randrange(2, 6)
        u = random_cactus_word(rng, n, rng.randrange(0, 5))
        v = random_cactus_word(rng, n, rng.randrange(0, 5))
        assign = invert_permutation(word_permutation(u))
        relabeled = tuple(
            chord_mask([assign[i - 1] for i in chord_members(mask)], n)
            for mask in diagram_of(v).letters
        )
        assert diagram_of(u * v).letters == diagram_of(u).letters + relabeled


def test_diagram_of_is_homomorphism_on_pure_words(rng):
    for _ in range(40):
        n = rng.randrange(2, 6)
        u0 = random_cactus_word(rng, n, rng.randrange(0, 4))
        u = u0 * inverse_word(u0)
        v = random_cactus_word(rng, n, rng.randrange(0, 4))
        assert is_pure(u)
        assert diagram_of(u * v) == diagram_of(u) * diagram_of(v)


def test_pure_pair_parity(rng):
    # every strand pair of a pure word meets an even number of chords
    for _ in range(60):
        n = rng.randrange(2, 6)
        u = random_cactus_word(rng, n, rng.randrange(0, 5))
        w = u * inverse_word(u)
        masks = diagram_of(w).letters
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pair = (1 << (i - 1)) | (1 << (j - 1))
                meets = sum(1 for m in masks if m & pair == pair)
                assert meets % 2 == 0


def test_equal_in_Jn_examples():
    assert equal_in_Jn(
        parse_cactus_word("s1,2 s3,4", 4), parse_cactus_word("s3,4 s1,2", 4)
    )
    assert equal_in_Jn(
        parse_cactus_word("s1,4 s2,3", 4), parse_cactus_word("s2,3 s1,4", 4)
    )
    assert not equal_in_Jn(parse_cactus_word(WORKED, 3), parse_cactus_word("", 3))


def test_equal_in_Jn_nested_rewrite():
    # s_{p,q} s_{m,r} = s_{p+q-r,p+q-m} s_{p,q} for [m,r] inside [p,q]
    assert equal_in_Jn(
        parse_cactus_word("s1,3 s1,2", 3), parse_cactus_word("s2,3 s1,3", 3)
    )
    assert equal_in_Jn(
        parse_cactus_word("s1,5 s2,3", 5), parse_cactus_word("s3,4 s1,5", 5)
    )


def test_equal_in_Jn_respects_all_relations_exhaustively():
    for n in range(2, 6):
        empty = CactusWord(n, ())
        gens = all_generators(n)
        for g in gens:
            w = CactusWord(n, (g, g))
            assert equal_in_Jn(w, empty)
        for a in gens:
            for b in gens:
                if a.q < b.p or b.q < a.p:
                    assert equal_in_Jn(CactusWord(n, (a, b)), CactusWord(n, (b, a)))
                elif a.p <= b.p and b.q <= a.q and (a.p, a.q) != (b.p, b.q):
                    rewritten = CactusGenerator(a.p + a.q - b.q, a.p + a.q - b.p)
                    assert equal_in_Jn(
                        CactusWord(n, (a, b)), CactusWord(n, (rewritten, a))
                    )


def test_equal_in_Jn_distinguishes(rng):
    assert not equal_in_Jn(parse_cactus_word("s1,2", 3), parse_cactus_word("s1,3", 3))
    assert not equal_in_Jn(
        parse_cactus_word("s1,2 s1,3", 3), parse_cactus_word("s1,3 s1,2", 3)
    )


def test_equal_in_Jn_arity_mismatch():
    with pytest.raises(ValueError):
        equal_in_Jn(parse_cactus_word("s1,2", 3), parse_cactus_word("s1,2", 4))
