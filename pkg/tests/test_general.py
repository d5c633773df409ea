import random
from fractions import Fraction

import pytest

from salimit.errors import SurjectivityViolation
from salimit.intervals import Verdict, embed_e, in_B_certified
from salimit.languages import FullShift, GoldenMean, Language, SubshiftX
from salimit.sampling import random_point
from salimit.square import EmbeddedMap, SquarePoint, apply_F, check_surjective, general_embed, phi
from salimit.words import SymbolicPoint


def _random_square_points(rng, count):
    pts = []
    for k in range(count):
        if k % 2:
            pts.append(SquarePoint(embed_e(random_point(rng, 8)), Fraction(rng.randrange(8), 8)))
        else:
            den = rng.choice([9, 18, 81, 100, 162, 729])
            pts.append(SquarePoint(Fraction(rng.randrange(den + 1), den), Fraction(rng.randrange(10), 10)))
    return pts


def test_full_shift_two_symbols_phi_vanishes_on_increasing_laps():
    fm = general_embed(2, FullShift(2))
    assert fm.laps == 3
    for k in range(37):
        x = Fraction(k, 36)
        if fm.lap_index(x).increasing:
            assert fm.phi(x).enclosure.hi == 0


def test_full_shift_decreasing_lap_is_tent():
    fm = general_embed(2, FullShift(2))
    # phi on the middle lap [1/3, 2/3] only sees the lap ends
    assert fm.phi(Fraction(1, 2)).enclosure.lo == Fraction(1, 6)
    assert fm.phi(Fraction(7, 18)).enclosure.lo == Fraction(1, 18)


def test_golden_mean_positive_gap():
    gm = general_embed(2, GoldenMean())
    x = gm.embed_e(SymbolicPoint.parse("110^inf"))
    assert x == Fraction(8, 9)
    # f(x) = 2/3, max A_1 = e(0(10)^inf) = 1/4, next point of A_0 is 2/3,
    # so B_1 stops at the midpoint 11/24 and phi = (2/3 - 11/24) / 2
    assert gm.phi(x).enclosure.lo == gm.phi(x).enclosure.hi == Fraction(5, 48)


def test_golden_mean_points_of_the_shift_have_zero_phi():
    gm = general_embed(2, GoldenMean())
    for text in ("0^inf", "10^inf", "0100^inf", "1010^inf"):
        assert gm.phi(gm.embed_e(SymbolicPoint.parse(text))).is_zero


def test_cross_check_against_hand_built_map():
    rng = random.Random(7)
    gx = general_embed(5, SubshiftX(fast_successors=False), depth=6)
    for p in _random_square_points(rng, 100):
        a, b = apply_F(p, 6), gx.apply_F(p)
        assert a.x == b.x
        assert a.y_enclosure.overlaps(b.y_enclosure)
        assert phi(p.x, 6).enclosure.overlaps(gx.phi(p.x).enclosure)


def test_cross_check_in_b_verdicts():
    gx = EmbeddedMap(SubshiftX(fast_successors=False), 6)
    for k in range(0, 82, 3):
        x = Fraction(k, 81)
        for i in range(5):
            v, w = in_B_certified(x, i, 6), gx.in_B(x, i)
            assert Verdict.UNKNOWN in (v, w) or v == w


class _OneShot(Language):
    """Points 0^inf and 1 0^inf: the word 1 has no predecessor."""

    r = 2
    name = "one-shot"

    def member_word(self, w):
        w = tuple(w)
        return all(a in (0, 1) for a in w) and 1 not in w[1:]

    def hull(self, i, w):
        return (tuple(w), (0,)), (tuple(w), (0,))


def test_non_surjective_language_rejected():
    with pytest.raises(SurjectivityViolation):
        general_embed(2, _OneShot())
    assert check_surjective(GoldenMean(), 4) > 0


def test_bad_arguments():
    with pytest.raises(ValueError):
        general_embed(1, FullShift(1))
    with pytest.raises(ValueError):
        general_embed(3, FullShift(2))
