import random
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from salimit.intervals import (Enclosure, base_f, cantor_code, code_point, dist_to_follower, embed_e,
                               in_B_certified, Verdict)
from salimit.sampling import random_x_point
from salimit.square import SquarePoint, apply_F, embed_E, fiber, phi
from salimit.subshift import member_language, member_point
from salimit.words import SymbolicPoint, enum_word, word_metric, word_rank

words = st.lists(st.integers(0, 6), max_size=9).map(tuple)
points = st.builds(lambda pre, t: SymbolicPoint(tuple(pre), t),
                   st.lists(st.integers(0, 4), max_size=10), st.integers(0, 4))
x_points = st.integers(0, 2 ** 32).map(lambda s: random_x_point(random.Random(s)))
fractions_01 = st.builds(lambda a, b: Fraction(min(a, b), max(a, b, 1)),
                         st.integers(0, 800), st.integers(1, 800))
slow = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@given(words)
def test_rank_inverts_enumeration(w):
    assert enum_word(word_rank(w)) == w


@given(st.integers(0, 10 ** 6))
def test_enumeration_inverts_rank(i):
    assert word_rank(enum_word(i)) == i


@given(points, points, points)
def test_ultrametric(p, q, r):
    assert word_metric(p, r) <= max(word_metric(p, q), word_metric(q, r))
    assert (word_metric(p, q) == 0) == (p == q)


@given(points)
def test_horseshoe_conjugacy(p):
    assert base_f(embed_e(p)) == embed_e(p.shift())


@given(points)
def test_cantor_code_round_trip(p):
    assert code_point(cantor_code(embed_e(p))) == p


@given(points, points)
def test_embedding_preserves_order(p, q):
    if p != q:
        m = next(i for i in range(30) if p.symbol(i) != q.symbol(i))
        assert (p.symbol(m) < q.symbol(m)) == (embed_e(p) < embed_e(q))


@given(x_points)
def test_x_points_have_closed_language(p):
    assert member_point(p)
    w = p.take(len(p.prefix) + 2)
    for i in range(len(w)):
        assert member_language(w[i:])
        assert member_language(w[: i + 1])


@slow
@given(x_points)
def test_square_semiconjugacy(p):
    assert apply_F(embed_E(p), 6) == embed_E(p.shift())


@slow
@given(x_points, st.integers(0, 4))
def test_distance_enclosures_are_sound(p, i):
    x = embed_e(p)
    coarse, fine = dist_to_follower(x, i, 2), dist_to_follower(x, i, 6)
    assert coarse.overlaps(fine)
    if member_point(p.prepend(i)):
        assert 0 in fine and 0 in coarse


@slow
@given(fractions_01, st.integers(0, 4))
def test_in_b_decisions_are_stable(x, i):
    seen = {in_B_certified(x, i, d) for d in (2, 5)}
    assert not {Verdict.YES, Verdict.NO} <= seen


@slow
@given(fractions_01)
def test_phi_range_and_depth_consistency(x):
    a, b = phi(x, 3).enclosure, phi(x, 6).enclosure
    assert 0 <= a.lo <= a.hi <= Fraction(1, 2)
    assert a.overlaps(b)


@given(fractions_01, fractions_01, fractions_01, fractions_01)
def test_fiber_monotone(p1, p2, y1, y2):
    ph = Enclosure(min(p1, p2) / 2, max(p1, p2) / 2)
    lo, hi = sorted((y1, y2))
    g_lo, g_hi = fiber(ph, Enclosure.exact(lo)), fiber(ph, Enclosure.exact(hi))
    assert g_lo.lo <= g_hi.lo and g_lo.hi <= g_hi.hi
    assert lo <= g_lo.lo <= g_lo.hi <= 1
    assert fiber(Enclosure.exact(Fraction(0)), Enclosure.exact(lo)).lo == lo


@slow
@given(fractions_01, fractions_01)
def test_apply_F_first_coordinate_exact(x, y):
    q = apply_F(SquarePoint(x, y), 4)
    assert q.x == base_f(x)
    assert y <= q.y_enclosure.lo <= q.y_enclosure.hi <= 1
