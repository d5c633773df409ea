from fractions import Fraction

import pytest

from salimit import oracles
from salimit.errors import NotInX, ResourceLimit
from salimit.orbits import (Budget, OrbitSegment, backward_levels, backward_segments, convergence_check,
                            enumerate_backward, natext_metric, salpha_prefix_approx, segment_to,
                            verify_structure, witness_depths, witness_orbit)
from salimit.subshift import OMEGA0, member_point, omega
from salimit.trees import ExplicitTree, FamilyTree, builtin_pairs, named_branch, prefix_closure

from salimit.words import word_metric

from conftest import OMEGA3_TEXT, pt


def test_depth_one_segments():
    segs = list(backward_segments(OMEGA0, 1))
    assert [s.to_json() for s in segs] == [["340^inf", "2340^inf"]]
    assert len(list(backward_segments(pt("0^inf"), 1))) == 5


def test_depth_five_contains_omega1(increasing_pair):
    ends = {s.end for s in backward_segments(OMEGA0, 5)}
    assert omega(1, *increasing_pair) in ends


def test_not_in_x_rejected():
    with pytest.raises(NotInX):
        list(backward_segments(pt("410^inf"), 2))


def test_limit_and_budget_mark_incomplete():
    en = enumerate_backward(OMEGA0, 10, limit=3)
    assert len(en.segments) == 3 and not en.complete
    en = enumerate_backward(OMEGA0, 10, budget=20)
    assert not en.complete
    with pytest.raises(ResourceLimit):
        backward_levels(OMEGA0, 12, Budget(10))


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("SALIMIT_BUDGET", "7")
    assert Budget().limit == 7


def test_exhaustive_depth_twenty_matches_naive_oracle():
    en = enumerate_backward(OMEGA0, 20)
    assert en.complete
    naive = oracles.backward_levels(OMEGA0, 20, member_point)[-1]
    assert {s.end for s in en.segments} == naive
    for seg in en.segments:
        assert seg.is_valid()
        assert verify_structure(seg).ok


def test_witness_orbits(increasing_pair):
    seg1 = witness_orbit(*increasing_pair, 1)
    assert seg1.depth == 5 and str(seg1.end) == "31222340^inf"
    seg3 = witness_orbit(*increasing_pair, 3)
    assert seg3.depth == 25
    assert str(seg3.end) == OMEGA3_TEXT
    rep = verify_structure(seg3)
    assert rep.ok and [e.level for e in rep.entries] == [0, 1, 2, 3]
    assert [e.index for e in rep.entries] == witness_depths(increasing_pair[1], 3) == [0, 5, 13, 25]
    assert witness_orbit(*increasing_pair, 0).points == (OMEGA0,)


def test_trivial_structure_report():
    assert verify_structure(OrbitSegment((OMEGA0,))).ok


def test_segment_json_round_trip(increasing_pair):
    seg = witness_orbit(*increasing_pair, 2)
    assert OrbitSegment.from_json(seg.to_json()) == seg


def test_salpha_small():
    assert salpha_prefix_approx(2, 1).prefixes == {(2, 3)}
    probe = salpha_prefix_approx(1, 16)
    assert {(0,), (1,), (2,), (3,)} <= probe.prefixes


def test_salpha_witness_prefixes_reproduced():
    probe = salpha_prefix_approx(4, 26)
    assert (3, 1, 1, 0) in probe.prefixes
    for pre, x in probe.witnesses.items():
        seg = segment_to(x, 26)
        assert x.take(4) == pre and seg.start == OMEGA0 and seg.is_valid()


@pytest.mark.parametrize("pair", builtin_pairs(), ids=lambda p: p.name)
def test_convergence(pair):
    values = convergence_check(pair.tree, pair.witness, 20)
    assert values[0] == Fraction(1, 2)
    for n, v in enumerate(values):
        assert v <= Fraction(1, 2 ** (n + 1))
    assert values == sorted(values, reverse=True)


def test_natext_metric():
    t1 = FamilyTree("full")
    t2 = ExplicitTree(prefix_closure([(0,) * 8]))  # differs from the full tree at rank 3
    y = named_branch("zeros")
    s1, s2 = witness_orbit(t1, y, 3), witness_orbit(t2, y, 3)
    assert natext_metric(s1, s1, 10)[0] == 0
    v, err = natext_metric(s1, s2, 10)
    direct = sum(Fraction(1, 2 ** n) * min(1, word_metric(a, b)) for n, (a, b) in
                 enumerate(zip(s1.points[:11], s2.points[:11])))
    assert v == direct and err == Fraction(1, 2 ** 10)
    prev = Fraction(0)
    for m in range(1, s1.depth + 1):
        cur = natext_metric(s1, s2, m)[0]
        assert prev <= cur <= prev + Fraction(1, 2 ** (m - 1))
        prev = cur


def test_natext_single_term():
    a = OrbitSegment((pt("0^inf"), pt("10^inf")))
    b = OrbitSegment((pt("0^inf"), pt("20^inf")))
    assert natext_metric(a, b, 1)[0] == Fraction(1, 2) * word_metric(a.end, b.end)
