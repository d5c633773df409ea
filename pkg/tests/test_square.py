import random
from fractions import Fraction as F

import pytest

from salimit.errors import CertificationFailed, OutOfDomain
from salimit.intervals import Enclosure, Lap, Verdict, embed_e, in_B_certified
from salimit.sampling import random_nonmember_over_x, random_x_point
from salimit.square import (PhiValue, SquarePoint, apply_F, distance_to_B, embed_E, figure_csv,
                            figure_rectangles, fiber, phi, preimage_point, verify_phi_properties)
from salimit.subshift import OMEGA0

from conftest import pt


def test_distance_to_B_exact_values():
    assert distance_to_B(1, 0, 6).enclosure == Enclosure.exact(F(157, 648))
    assert distance_to_B(1, 0, 6).witness == F(491, 648)
    assert distance_to_B(1, 2, 6).enclosure == Enclosure.exact(F(14, 81))
    assert distance_to_B(1, 3, 6).enclosure == Enclosure.exact(0)


def test_boundary_point_is_equidistant():
    # 491/648 is the midpoint between 3/4 (in A_0) and 49/648 further up (in A_3)
    b = F(491, 648)
    assert in_B_certified(b, 0, 6) is Verdict.YES
    assert in_B_certified(b, 3, 6) is Verdict.YES


def test_phi_examples():
    assert phi(F(1, 9), 6).enclosure == Enclosure.exact(F(157, 1296))
    a = embed_e(pt("02^inf"))
    assert a == F(1, 18)
    assert phi(a, 6).is_zero
    b = phi(F(17, 18), 6)
    assert b.enclosure.lo > 0 and b.enclosure.hi == F(1, 4)
    inside = phi(F(3, 18), 6)
    assert inside.lap == Lap(False, 0)
    assert inside.enclosure == Enclosure.exact(F(301, 2592))


def test_phi_on_decreasing_laps_is_positive_and_bounded():
    for i in range(4):
        for k in range(1, 12):
            x = F(2 * i + 1, 9) + F(k, 9 * 12)
            v = phi(x, 4)
            assert 0 < v.enclosure.lo <= v.enclosure.hi <= F(1, 2)


def test_phi_value_range_guard():
    with pytest.raises(AssertionError):
        PhiValue(Enclosure(0, 1), Lap(True, 0), 1)


def test_embed_E():
    assert embed_E(OMEGA0) == SquarePoint(F(62, 81), 0)
    assert embed_E(pt("0^inf")) == SquarePoint(0, 0)
    assert embed_E(pt("2^inf")) == SquarePoint(F(1, 2), 0)


def test_anchor_and_semiconjugacy():
    assert apply_F(embed_E(OMEGA0)) == SquarePoint(F(8, 9), 0)
    rng = random.Random(11)
    for _ in range(300):
        p = random_x_point(rng)
        assert apply_F(embed_E(p)) == embed_E(p.shift())


def test_fiber_map_properties():
    ph = Enclosure(F(1, 5), F(1, 4))
    assert fiber(ph, Enclosure.exact(1)) == Enclosure.exact(1)
    assert fiber(ph, Enclosure.exact(0)) == ph
    ys = [F(k, 10) for k in range(11)]
    lows = [fiber(ph, Enclosure.exact(y)).lo for y in ys]
    assert lows == sorted(lows)
    diffs = {b - a for a, b in zip(lows, lows[1:])}
    assert len(diffs) == 1  # affine


def test_F_fixes_top_edge_and_stays_in_square():
    rng = random.Random(12)
    for _ in range(40):
        x = F(rng.randrange(82), 81)
        assert apply_F(SquarePoint(x, 1), 4).y == 1
        img = apply_F(SquarePoint(x, F(rng.randrange(11), 10)), 4)
        y = img.y_enclosure
        assert 0 <= y.lo <= y.hi <= 1


def test_no_spurious_entries():
    rng = random.Random(13)
    for _ in range(15):
        p = random_nonmember_over_x(rng, visible_within=6)
        x = embed_e(p)
        if phi(x, 6).enclosure.lo > 0:
            assert apply_F(SquarePoint(x, 0), 6).y_enclosure.lo > 0


def test_square_point_domain():
    with pytest.raises(OutOfDomain):
        SquarePoint(F(1, 2), F(3, 2))
    p = SquarePoint(F(1, 3), Enclosure(F(1, 4), F(1, 2)))
    assert SquarePoint.from_json(p.to_json()) == p


def test_preimages():
    pre = preimage_point(SquarePoint(F(8, 9), 0))
    assert pre.point == SquarePoint(F(62, 81), 0) and pre.residual == 0
    top = preimage_point(SquarePoint(F(1, 3), 1))
    assert top.point.y == 1
    assert apply_F(top.point) == SquarePoint(F(1, 3), 1)


def test_preimage_needs_exact_target():
    with pytest.raises(ValueError):
        preimage_point(SquarePoint(F(1, 3), Enclosure(0, F(1, 2))))


def test_preimage_failure_is_reported():
    # with no refinement the cells around 29/100 cannot be told apart
    with pytest.raises(CertificationFailed):
        preimage_point(SquarePoint(F(29, 100), F(1, 7)), depth=0)
    assert preimage_point(SquarePoint(F(29, 100), F(1, 7)), depth=6).residual == 0


def test_verify_report():
    rng = random.Random(14)
    mem = [random_x_point(rng) for _ in range(10)]
    non = [pt("42^inf")]
    targets = [SquarePoint(F(a, 4), F(b, 4)) for a in range(5) for b in range(5)]
    rep = verify_phi_properties(mem, non, targets, depth=6)
    assert rep.ok
    assert rep.counts("preimages") == {"yes": 25, "no": 0, "unknown": 0}
    assert rep.to_json()["positive_off_members"]["samples"][0]["verdict"] == "yes"


def test_figure_data():
    data = figure_rectangles(4, resolution=16, depth=3)
    assert data["certified"] is False
    assert all(y == 1.0 for _, y in data["polylines"]["top"])
    bottom = data["polylines"]["bottom"]
    assert bottom[0] == (0.0, 0.0)
    assert all(y > 0 for _, y in bottom[1:])
    csv = figure_csv(data)
    assert csv.startswith("# non-certified")
    strip0 = figure_rectangles("I0", resolution=18, depth=3)["polylines"]["bottom"]
    assert any(y == 0 for _, y in strip0)
