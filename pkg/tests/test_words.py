from fractions import Fraction

import pytest

from salimit.words import (SymbolicPoint, as_word, enum_word, first_disagreement, format_word, lex_less,
                           prefix_ranks, word_metric, word_rank)

from conftest import OMEGA3_TEXT, pt


@pytest.mark.parametrize("i, word", [(0, ()), (1, (0,)), (2, (0, 0)), (3, (1,)), (4, (0, 0, 0))])
def test_first_words(i, word):
    assert enum_word(i) == word
    assert word_rank(word) == i


def test_rank_inverse_exhaustive():
    for i in range(10 ** 4 + 1):
        assert word_rank(enum_word(i)) == i


def test_weight_classes_occupy_dyadic_blocks():
    for i in range(1, 2000):
        w = enum_word(i)
        assert len(w) + sum(w) == i.bit_length()


def test_order_within_weight_class():
    block = [enum_word(i) for i in range(8, 16)]  # weight 4
    keys = [(-len(w), w) for w in block]
    assert keys == sorted(keys)


def test_every_prefix_has_a_rank():
    for i in range(500):
        ranks = prefix_ranks(enum_word(i))
        assert ranks[0] == 0 and ranks[-1] == i
        assert all(r <= i for r in ranks)


def test_large_symbols_round_trip():
    w = (2, 3, 5, 7, 11)
    assert enum_word(word_rank(w)) == w
    assert format_word(w) == "2,3,5,7,11"
    assert as_word("2,3,5,7,11") == w


def test_point_canonical_form():
    assert SymbolicPoint((3, 4, 0, 0), 0) == SymbolicPoint((3, 4), 0)
    assert str(SymbolicPoint((), 2)) == "2^inf"
    assert pt("340^inf").prefix == (3, 4)
    assert str(pt(OMEGA3_TEXT)) == OMEGA3_TEXT


def test_point_parse_rejects_missing_tail():
    with pytest.raises(ValueError):
        SymbolicPoint.parse("340")


def test_shift_and_prepend():
    p = pt("340^inf")
    assert p.shift() == pt("40^inf")
    assert pt("0^inf").shift() == pt("0^inf")
    assert p.prepend(2) == pt("2340^inf")
    assert p.take(4) == (3, 4, 0, 0)


def test_metric_examples(omega3):
    assert word_metric(pt("0^inf"), pt("0^inf")) == 0
    assert word_metric(pt("340^inf"), pt("30^inf")) == Fraction(1, 2)
    # the omega_3 string agrees with 3 110 2^inf up to its first separator
    assert word_metric(omega3, pt("31102^inf")) == Fraction(1, 2 ** 12)


def test_first_disagreement_and_order():
    assert first_disagreement(pt("120^inf"), pt("121^inf")) == 2
    assert first_disagreement(pt("1^inf"), pt("1^inf")) is None
    assert lex_less(pt("120^inf"), pt("121^inf"))
    assert not lex_less(pt("121^inf"), pt("120^inf"))
