import pytest

from salimit.errors import BranchCheckFailed, IndexBeyondCertainty
from salimit.trees import (BranchWitness, ExplicitTree, FamilyTree, PredicateTree, builtin_pairs,
                           check_branch, is_tree, named_branch, nth_prime, prefix_closure,
                           require_branch, tree_code_bit, tree_code_prefix, tree_from_json)
from salimit.words import enum_word


def test_is_tree():
    assert is_tree([])
    assert is_tree([(), (0,)])
    assert not is_tree([(0,)])
    assert is_tree(prefix_closure([(1, 2, 3)]))


def test_code_bits_of_increasing_tree():
    t = FamilyTree("increasing")
    assert tree_code_bit(t, 0) == 1
    assert tree_code_bit(t, 1) == 1
    assert tree_code_bit(t, 2) == 0
    assert tree_code_prefix(t, 3) == (1, 1, 0)


def test_empty_tree_code():
    assert tree_code_bit(ExplicitTree(), 0) == 0


def test_code_monotone_under_adding_words():
    base = prefix_closure([(0,), (1,)])
    bigger = base | prefix_closure([(0, 0), (1, 0, 0)])
    small, large = ExplicitTree(base), ExplicitTree(bigger)
    for i in range(64):
        assert tree_code_bit(small, i) <= tree_code_bit(large, i)


def test_primes_branch():
    t = FamilyTree("increasing")
    y = named_branch("primes")
    assert y.prefix(5) == (2, 3, 5, 7, 11)
    assert check_branch(t, y, 4)
    assert y.checked_depth >= 4
    assert nth_prime(99) == 541


def test_branch_depth_zero_is_root_membership():
    y = named_branch("zeros")
    assert check_branch(ExplicitTree([()]), y, 0)
    assert not check_branch(ExplicitTree(), y, 0)


def test_finite_tree_has_no_long_branch():
    t = ExplicitTree(prefix_closure([(0,)]))
    assert t.height() == 2
    assert not check_branch(t, named_branch("zeros"), 3)
    with pytest.raises(BranchCheckFailed):
        require_branch(t, named_branch("zeros"), 3)


def test_comb_family():
    t = FamilyTree("comb", {"tooth": 2})
    assert (0, 0, 1, 1) in t
    assert (0, 1, 1, 1) not in t
    assert (1, 0) not in t
    assert check_branch(t, t.default_witness(), 20)


def test_predicate_tree_certainty_bound():
    t = PredicateTree(lambda w: all(a == 0 for a in w), certain_below=10)
    assert tree_code_bit(t, 2) == 1
    with pytest.raises(IndexBeyondCertainty):
        tree_code_bit(t, 10)
    assert not check_branch(t, named_branch("zeros"), 8)  # rank of 0^8 is past the bound


def test_finite_witness_runs_out():
    y = BranchWitness([0, 0])
    assert not check_branch(FamilyTree("full"), y, 3)


def test_json_round_trip():
    t = ExplicitTree(prefix_closure([(0, 1), (2,)]))
    assert tree_from_json(t.to_json()) == t
    f = FamilyTree("comb", {"tooth": 3})
    assert tree_from_json(f.to_json()) == f


def test_builtin_pairs_are_branches():
    for pair in builtin_pairs():
        assert check_branch(pair.tree, pair.witness, 30)


def test_enumeration_words_feed_trees():
    t = FamilyTree("increasing")
    members = [enum_word(i) for i in range(40) if t.contains(enum_word(i))]
    assert all(all(a < b for a, b in zip(w, w[1:])) for w in members)
