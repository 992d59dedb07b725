"""Word algebra: reduction, inversion, concatenation, cyclic operations,
parsing/printing, and randomized invariants."""

import pytest

from corpus import random_reduced_word, seeded
from dehnlab.errors import ParseError, UniverseMismatchError
from dehnlab.words import (Letter, Word, concat, cyclic_conjugates,
                           cyclic_reduce, empty_word, free_reduce, invert,
                           lex_key, parse_word, print_word)

AB = ("a", "b")


def W(text, names=AB):
    return parse_word(text, names)


def test_free_reduce_examples():
    assert free_reduce([Letter(0, 1), Letter(0, -1)], AB) == empty_word(AB)
    assert free_reduce([Letter(0, 1), Letter(1, 1), Letter(1, -1), Letter(0, 1)],
                       AB) == W("a a")
    # cascading cancellation
    raw = [Letter(0, 1), Letter(1, 1), Letter(0, -1), Letter(0, 1),
           Letter(1, -1), Letter(0, -1)]
    assert free_reduce(raw, AB) == empty_word(AB)


def test_word_constructor_rejects_unreduced():
    with pytest.raises(ValueError):
        Word((Letter(0, 1), Letter(0, -1)), AB)
    with pytest.raises(ValueError):
        Word((Letter(2, 1),), AB)
    with pytest.raises(ValueError):
        Word((Letter(0, 2),), AB)


def test_invert_examples():
    assert invert(empty_word(AB)) == empty_word(AB)
    assert invert(W("a b")) == W("b^-1 a^-1")
    assert invert(W("a a b^-1")) == W("b a^-1 a^-1")


def test_concat_examples():
    assert concat(W("a b"), W("b^-1")) == W("a")
    w = W("a b a")
    assert concat(empty_word(AB), w) == w
    assert concat(W("a b"), W("b^-1 a^-1")) == empty_word(AB)


def test_universe_mismatch_rejected():
    u = parse_word("a", ("a",))
    v = parse_word("a", ("a", "b"))
    with pytest.raises(UniverseMismatchError):
        concat(u, v)


def test_cyclic_reduce_examples():
    core, conj = cyclic_reduce(W("a b a^-1"))
    assert core == W("b") and conj == W("a")
    core, conj = cyclic_reduce(W("a b"))
    assert core == W("a b") and conj == empty_word(AB)
    core, conj = cyclic_reduce(W("a a b a^-1 a^-1"))
    assert core == W("b") and conj == W("a a")


def test_cyclic_conjugates_examples():
    assert cyclic_conjugates(W("a b")) == {W("a b"), W("b a")}
    assert cyclic_conjugates(W("a a a")) == {W("a a a")}
    assert cyclic_conjugates(empty_word(AB)) == {empty_word(AB)}


def test_cyclic_conjugates_cardinality_divides_length():
    rng = seeded(7)
    for _ in range(50):
        w = random_reduced_word(rng, AB, 8)
        core, _ = cyclic_reduce(w)
        if len(core) == 0:
            continue
        assert len(core) % len(cyclic_conjugates(core)) == 0


def test_parse_examples():
    assert parse_word("a^5", ("a",)).letters == (Letter(0, 1),) * 5
    w = parse_word("x y x^-1 y^-1", ("x", "y"))
    assert len(w) == 4
    assert parse_word("b a b^-1 a^-4", AB) == W("b a b^-1 a^-4")
    assert len(parse_word("b a b^-1 a^-4", AB)) == 7


def test_parse_grammar_extras():
    assert W("(a b)^2") == W("a b a b")
    assert W("(a b)^-1") == W("b^-1 a^-1")
    assert W("a^+2") == W("a a")
    # uppercase shorthand for the inverse
    assert W("A") == W("a^-1")
    # parses reduce: a a^-1 collapses
    assert W("a a^-1") == empty_word(AB)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_word("c", AB)
    with pytest.raises(ParseError):
        parse_word("a^x", AB)
    with pytest.raises(ParseError):
        parse_word("(a b", AB)
    with pytest.raises(ParseError):
        parse_word("a)", AB)


def test_print_word_collapses_exponents():
    assert print_word(W("a a a")) == "a^3"
    assert print_word(W("a b^-2")) == "a b^-2"
    assert print_word(empty_word(AB)) == ""


def test_lex_key_orders_length_then_lex():
    ws = [W("b"), W("a"), W("a^-1"), W("a b"), W("a a")]
    ordered = sorted(ws, key=lex_key)
    assert ordered == [W("a"), W("a^-1"), W("b"), W("a a"), W("a b")]


def _naive_cancel(raw, rng):
    """Cancel random adjacent inverse pairs until none remain."""
    letters = list(raw)
    while True:
        sites = [i for i in range(len(letters) - 1)
                 if letters[i].generator == letters[i + 1].generator
                 and letters[i].sign == -letters[i + 1].sign]
        if not sites:
            return tuple(letters)
        i = rng.choice(sites)
        del letters[i:i + 2]


def test_randomized_invariants():
    """1000 seeded cases of the core word-algebra properties."""
    rng = seeded(20240817)
    names = ("a", "b", "c")
    for case in range(1000):
        raw = [Letter(rng.randrange(3), rng.choice((1, -1)))
               for _ in range(rng.randint(0, 20))]
        w = free_reduce(raw, names)
        # idempotent, parity-preserving, never longer
        assert free_reduce(w.letters, names) == w
        assert len(w) <= len(raw) and (len(w) - len(raw)) % 2 == 0
        # confluence: any cancellation order gives the same word
        assert _naive_cancel(raw, rng) == w.letters
        u = random_reduced_word(rng, names, 10)
        # involution and inverses
        assert invert(invert(u)) == u
        assert concat(u, invert(u)) == empty_word(names)
        assert concat(invert(u), u) == empty_word(names)
        # concat length bounds and parity
        c = concat(u, w)
        assert len(c) <= len(u) + len(w)
        assert (len(c) - len(u) - len(w)) % 2 == 0
        # associativity on a third word
        v = random_reduced_word(rng, names, 10)
        assert concat(concat(u, v), w) == concat(u, concat(v, w))
        # cyclic round trip
        core, conj = cyclic_reduce(u)
        back = concat(conj, concat(core, invert(conj)))
        assert back == u
        first_last = core.letters[:1], core.letters[-1:]
        if len(core) >= 2:
            a, b = first_last[0][0], first_last[1][0]
            assert not (a.generator == b.generator and a.sign == -b.sign)
        # printer round trip
        assert parse_word(print_word(u), names) == u
