import pytest
from hypothesis import given, strategies as st

from fricke.errors import WordSyntaxError
from fricke.words import (
    A,
    B,
    Word,
    canonical_cyclic,
    cyclic_reduce,
    flip_inverses,
    negative_weight,
    parse_word,
    render_word,
    rotate,
    rotations,
    word,
)

from strategies import words


def test_parse_examples():
    assert parse_word("a^2 b^4").syllables == ((A, 2), (B, 4))
    assert parse_word("a b B A").is_identity
    assert parse_word("abAB").syllables == ((A, 1), (B, 1), (A, -1), (B, -1))
    assert parse_word("").is_identity
    assert parse_word("A^-2").syllables == ((A, 2),)
    assert parse_word("b ^ +3 a").syllables == ((B, 3), (A, 1))


@pytest.mark.parametrize("text", ["a^0", "abc", "a^", "x", "a^2.5", "^2"])
def test_parse_rejects(text):
    with pytest.raises(WordSyntaxError):
        parse_word(text)


def test_syntax_error_is_value_error():
    with pytest.raises(ValueError):
        parse_word("q")


def test_flip_examples():
    assert flip_inverses(parse_word("ab")) == parse_word("AB")
    assert flip_inverses(Word()) == Word()
    assert render_word(flip_inverses(parse_word("a^2b^4"))) == "A^2B^4"


def test_construction_reduces():
    w = word((A, 2), (A, -2), (B, 1), (B, 0), (A, 1))
    assert w.syllables == ((B, 1), (A, 1))
    with pytest.raises(ValueError):
        word((2, 1))


def test_operators():
    ab = parse_word("ab")
    assert ab * ab.inverse() == Word()
    assert (ab ** 3).syllables == ((A, 1), (B, 1)) * 3
    assert ab ** -1 == ab.inverse() == parse_word("BA")
    assert ab ** 0 == Word()
    assert parse_word("a^2B^3").weight == 5
    assert repr(parse_word("a^2b^4")) == "Word('a^2b^4')"


@given(words)
def test_render_round_trip(w):
    assert parse_word(render_word(w)) == w


@given(words)
def test_reduced_invariant(w):
    for (g1, e1), (g2, _) in zip(w.syllables, w.syllables[1:]):
        assert g1 != g2
    assert all(e != 0 for _, e in w.syllables)


@given(words, words)
def test_group_laws(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert u * u.inverse() == Word()
    assert flip_inverses(flip_inverses(u)) == u
    assert flip_inverses(u * v) == flip_inverses(u) * flip_inverses(v)


@given(words)
def test_cyclic_reduce(w):
    c = cyclic_reduce(w)
    assert c.weight <= w.weight
    if len(c) >= 2:
        assert c.syllables[0][0] != c.syllables[-1][0]
    assert cyclic_reduce(c) == c


@given(words, st.integers(-10, 10))
def test_canonical_is_rotation_invariant(w, k):
    c = cyclic_reduce(w)
    assert canonical_cyclic(rotate(c, k)) == canonical_cyclic(c)
    assert canonical_cyclic(c) in rotations(c)


@given(words)
def test_canonical_folded(w):
    folded = canonical_cyclic(w, fold_flip=True)
    assert folded == canonical_cyclic(flip_inverses(w), fold_flip=True)
    assert negative_weight(folded) <= negative_weight(cyclic_reduce(w))


def test_cyclic_reduce_examples():
    assert cyclic_reduce(parse_word("a^2 b A^2")) == parse_word("b")
    assert cyclic_reduce(parse_word("a b a")) == parse_word("a^2b")
