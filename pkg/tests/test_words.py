import pytest

from cactus_groups.words import (
    CactusGenerator,
    CactusWord,
    DiagramWord,
    ParseError,
    chord_mask,
    chord_members,
    format_cactus_word,
    format_chord,
    format_diagram_word,
    parse_cactus_word,
    parse_diagram_word,
)
from helpers import random_cactus_word, random_diagram_word


def test_parse_cactus_word_basic():
    w = parse_cactus_word("s1,2 s1,3", 3)
    assert w.n == 3
    assert w.letters == (CactusGenerator(1, 2), CactusGenerator(1, 3))
    assert len(w) == 2


def test_parse_cactus_word_empty_is_identity():
    assert parse_cactus_word("", 5).letters == ()
    assert parse_cactus_word("   \t ", 5).letters == ()


def test_parse_cactus_word_single_letter():
    assert parse_cactus_word("s3,7", 7).letters == (CactusGenerator(3, 7),)


def test_parse_cactus_word_whitespace_insensitive():
    assert parse_cactus_word(" s1,2\t\ts2,3 ", 3) == parse_cactus_word("s1,2 s2,3", 3)


def test_parse_diagram_word_basic():
    w = parse_diagram_word("t{1,2} t{1,2,3}", 3)
    assert w.letters == (0b011, 0b111)
    assert parse_diagram_word("t{1,3} t{2}", 3).letters == (5, 2)


def test_parse_diagram_word_empty_is_identity():
    assert parse_diagram_word("", 3).letters == ()


@pytest.mark.parametrize(
    "text, n, parse, fragment, token, position",
    [
        ("s3,1", 3, parse_cactus_word, "p must be less than q", "s3,1", 1),
        ("s1,2 s2,2", 3, parse_cactus_word, "p must be less than q", "s2,2", 2),
        ("s0,2", 3, parse_cactus_word, "p must be at least 1", "s0,2", 1),
        ("s1,4", 3, parse_cactus_word, "q exceeds arity 3", "s1,4", 1),
        ("x1,2", 3, parse_cactus_word, "expected s<p>,<q>", "x1,2", 1),
        ("s1,2s1,3", 3, parse_cactus_word, "expected s<p>,<q>", "s1,2s1,3", 1),
        ("t{}", 3, parse_diagram_word, "expected t{a,b,...}", "t{}", 1),
        ("t{2,1}", 3, parse_diagram_word, "must be strictly ascending", "t{2,1}", 1),
        ("t{1,1}", 3, parse_diagram_word, "must be strictly ascending", "t{1,1}", 1),
        ("t{0,1}", 3, parse_diagram_word, "numbered from 1", "t{0,1}", 1),
        ("t{1,5}", 3, parse_diagram_word, "strand exceeds arity 3", "t{1,5}", 1),
        ("t{1} u{2}", 3, parse_diagram_word, "expected t{a,b,...}", "u{2}", 2),
    ],
)
def test_parse_errors_carry_token_and_position(text, n, parse, fragment, token, position):
    with pytest.raises(ParseError) as exc:
        parse(text, n)
    assert fragment in str(exc.value)
    assert f"token {position}" in str(exc.value)
    assert exc.value.token == token
    assert exc.value.position == position


def test_parse_error_is_value_error():
    assert issubclass(ParseError, ValueError)


def test_cactus_round_trip(rng):
    for _ in range(50):
        w = random_cactus_word(rng, rng.randrange(2, 7), rng.randrange(0, 8))
        assert parse_cactus_word(format_cactus_word(w), w.n) == w


def test_diagram_round_trip(rng):
    for _ in range(50):
        w = random_diagram_word(rng, rng.randrange(1, 6), rng.randrange(0, 8))
        assert parse_diagram_word(format_diagram_word(w), w.n) == w


def test_format_examples():
    assert format_cactus_word(CactusWord(3, ())) == ""
    assert format_cactus_word(parse_cactus_word("s1,3 s2,3", 3)) == "s1,3 s2,3"
    assert format_diagram_word(DiagramWord(3, ())) == ""
    assert format_diagram_word(DiagramWord(3, (5, 2))) == "t{1,3} t{2}"
    assert format_chord(5) == "t{1,3}"
    assert format_chord(0b1011) == "t{1,2,4}"


def test_chord_mask_and_members():
    assert chord_mask([1, 3], 3) == 5
    assert chord_mask((2,), 3) == 2
    assert chord_members(0b1011) == (1, 2, 4)
    for mask in range(1, 32):
        assert chord_mask(chord_members(mask), 5) == mask


def test_chord_mask_rejects_bad_input():
    with pytest.raises(ValueError):
        chord_mask([], 3)
    with pytest.raises(ValueError):
        chord_mask([4], 3)
    with pytest.raises(ValueError):
        chord_mask([0], 3)


def test_word_validation():
    with pytest.raises(ValueError):
        CactusWord(0, ())
    with pytest.raises(ValueError):
        CactusWord(3, (CactusGenerator(2, 2),))
    with pytest.raises(ValueError):
        CactusWord(3, (CactusGenerator(1, 4),))
    with pytest.raises(ValueError):
        DiagramWord(0, ())
    with pytest.raises(ValueError):
        DiagramWord(3, (8,))
    with pytest.raises(ValueError):
        DiagramWord(3, (0,))


def test_word_concatenation():
    u = parse_cactus_word("s1,2", 3)
    v = parse_cactus_word("s1,3", 3)
    assert (u * v).letters == u.letters + v.letters
    a = parse_diagram_word("t{1,2}", 3)
    b = parse_diagram_word("t{2,3}", 3)
    assert (a * b).letters == (3, 6)
    with pytest.raises(ValueError):
        u * parse_cactus_word("s1,2", 4)
    with pytest.raises(ValueError):
        a * parse_diagram_word("t{1,2}", 4)


def test_words_are_immutable_and_hashable():
    w = parse_diagram_word("t{1,2}", 3)
    assert {w: 1}[parse_diagram_word("t{1,2}", 3)] == 1
    with pytest.raises(AttributeError):
        w.letters = ()
