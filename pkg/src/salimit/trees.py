"""Trees on N, branch witnesses, and the characteristic code h(T).

A tree is a set of finite words closed under initial segments.  Three kinds
are supported:

* :class:`ExplicitTree` -- a finite set of words;
* :class:`FamilyTree` -- a built-in parametric family (``full``,
  ``increasing``, ``comb``), each shipping a default branch witness;
* :class:`PredicateTree` -- an arbitrary membership callback, trusted only
  for enumeration indices below a declared bound.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .errors import BranchCheckFailed, IndexBeyondCertainty
from .words import Word, as_word, enum_word, word_rank


def is_tree(words: Iterable[Sequence[int]]) -> bool:
    """True iff every initial segment of every member is a member."""
    members = {tuple(w) for w in words}
    return all(w[:k] in members for w in members for k in range(len(w)))


def prefix_closure(words: Iterable[Sequence[int]]) -> frozenset:
    out = set()
    for w in words:
        w = tuple(w)
        for k in range(len(w) + 1):
            out.add(w[:k])
    return frozenset(out)


class Tree:
    """Interface shared by all tree kinds."""

    #: enumeration indices at or above this bound are not trusted
    certain_below: int | None = None

    def contains(self, word: Sequence[int]) -> bool:
        raise NotImplementedError

    def default_witness(self) -> "BranchWitness | None":
        return None

    def to_json(self):
        raise NotImplementedError

    def __contains__(self, word) -> bool:
        return self.contains(tuple(word))


@dataclass(frozen=True, eq=True)
class ExplicitTree(Tree):
    words: frozenset

    def __init__(self, words: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "words", frozenset(tuple(w) for w in words))

    def contains(self, word):
        return tuple(word) in self.words

    def is_prefix_closed(self) -> bool:
        return is_tree(self.words)

    def height(self) -> int:
        """One more than the longest member length (0 for the empty tree)."""
        return max((len(w) + 1 for w in self.words), default=0)

    def to_json(self):
        return sorted((list(w) for w in self.words), key=lambda w: (word_rank(w), w))


def _is_strictly_increasing(word) -> bool:
    return all(a < b for a, b in zip(word, word[1:]))


def _in_comb(word, tooth: int) -> bool:
    # spine 0^m, teeth 0^m 1^t with 1 <= t <= tooth
    k = 0
    while k < len(word) and word[k] == 0:
        k += 1
    rest = word[k:]
    return all(a == 1 for a in rest) and len(rest) <= tooth


_FAMILIES: dict[str, Callable[[Word, Mapping], bool]] = {
    "full": lambda w, params: True,
    "increasing": lambda w, params: _is_strictly_increasing(w),
    "comb": lambda w, params: _in_comb(w, int(params.get("tooth", 1))),
}

_FAMILY_WITNESS = {"full": "zeros", "increasing": "primes", "comb": "zeros"}


@dataclass(frozen=True)
class FamilyTree(Tree):
    """A built-in parametric tree.

    ``full``
        every word.
    ``increasing``
        the strictly increasing words; default witness (2, 3, 5, 7, 11, ...).
    ``comb``
        the spine 0^m together with teeth 0^m 1^t, ``1 <= t <= tooth``.
    """

    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown tree family {self.family!r}")
        if isinstance(self.params, Mapping):
            object.__setattr__(self, "params", tuple(sorted(self.params.items())))

    def contains(self, word):
        return _FAMILIES[self.family](tuple(word), dict(self.params))

    def default_witness(self):
        return named_branch(_FAMILY_WITNESS[self.family])

    def to_json(self):
        return {"family": self.family, "params": dict(self.params)}


class PredicateTree(Tree):
    """Membership given by a callback.

    The callback is trusted for words whose enumeration index is below
    ``certain_below``; ``None`` trusts it everywhere.
    """

    def __init__(self, predicate: Callable[[Word], bool], certain_below: int | None = None,
                 name: str = "predicate"):
        self.predicate = predicate
        self.certain_below = certain_below
        self.name = name

    def contains(self, word):
        word = tuple(word)
        if self.certain_below is not None and word_rank(word) >= self.certain_below:
            raise IndexBeyondCertainty(
                f"word {word} has index {word_rank(word)} >= bound {self.certain_below}")
        return bool(self.predicate(word))

    def to_json(self):
        raise TypeError("predicate trees cannot be serialized")

    def __repr__(self):
        return f"PredicateTree({self.name!r}, certain_below={self.certain_below})"


def tree_code_bit(tree: Tree, i: int) -> int:
    """Bit ``i`` of h(T): 1 iff the ``i``-th enumerated word lies in T."""
    if tree.certain_below is not None and i >= tree.certain_below:
        raise IndexBeyondCertainty(f"index {i} >= certainty bound {tree.certain_below}")
    return 1 if tree.contains(enum_word(i)) else 0


def tree_code_prefix(tree: Tree, n: int) -> Word:
    """The first ``n`` bits of h(T)."""
    return tuple(tree_code_bit(tree, i) for i in range(n))


def tree_from_json(data) -> Tree:
    if isinstance(data, dict):
        return FamilyTree(data["family"], data.get("params", {}))
    return ExplicitTree(as_word(w) if isinstance(w, str) else tuple(w) for w in data)


# -- branch witnesses -----------------------------------------------------

@lru_cache(maxsize=None)
def _primes_upto(limit: int) -> tuple:
    sieve = bytearray([1]) * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def nth_prime(m: int) -> int:
    """The ``m``-th prime, counting from ``nth_prime(0) == 2``."""
    limit = 64
    while True:
        primes = _primes_upto(limit)
        if m < len(primes):
            return primes[m]
        limit *= 2


class BranchWitness:
    """A candidate infinite branch ``y`` given by its digit function.

    ``checked_depth`` records the largest ``m`` for which ``y|k`` was verified
    to lie in a tree for all ``k <= m``; it only ever grows.
    """

    def __init__(self, digits: Callable[[int], int] | Sequence[int], name: str = "custom"):
        if callable(digits):
            self._digit = digits
            self.length = None
        else:
            seq = tuple(int(d) for d in digits)
            self._digit = seq.__getitem__
            self.length = len(seq)
        self.name = name
        self.checked_depth = -1
        self._checked_tree = None
        self._lock = threading.Lock()

    def digit(self, m: int) -> int:
        if self.length is not None and m >= self.length:
            raise BranchCheckFailed(f"branch {self.name!r} has only {self.length} digits")
        return int(self._digit(m))

    def prefix(self, m: int) -> Word:
        return tuple(self.digit(k) for k in range(m))

    def _record(self, tree, depth):
        with self._lock:
            if self._checked_tree is not tree:
                self._checked_tree = tree
                self.checked_depth = depth
            else:
                self.checked_depth = max(self.checked_depth, depth)

    def __repr__(self):
        return f"BranchWitness({self.name!r})"


def named_branch(name: str) -> BranchWitness:
    """``primes``, ``zeros``, ``naturals`` or an explicit digit list."""
    if name == "primes":
        return BranchWitness(nth_prime, "primes")
    if name == "zeros":
        return BranchWitness(lambda m: 0, "zeros")
    if name == "naturals":
        return BranchWitness(lambda m: m, "naturals")
    digits = as_word(name)
    if not digits:
        raise ValueError(f"unknown branch {name!r}")
    return BranchWitness(digits, name)


def check_branch(tree: Tree, witness: BranchWitness, depth: int) -> bool:
    """True iff ``y|k`` lies in the tree for every ``k <= depth``."""
    try:
        prefix = witness.prefix(depth)
    except BranchCheckFailed:
        return False
    try:
        ok = all(tree.contains(prefix[:k]) for k in range(depth + 1))
    except IndexBeyondCertainty:
        return False
    if ok:
        witness._record(tree, depth)
    return ok


def require_branch(tree: Tree, witness: BranchWitness, depth: int) -> None:
    if not check_branch(tree, witness, depth):
        raise BranchCheckFailed(
            f"{witness!r} is not a branch of the tree to depth {depth}")


@dataclass(frozen=True)
class CertifiedPair:
    """A tree together with a branch witness, e.g. the built-in pairs."""

    name: str
    tree: Tree
    witness: BranchWitness = field(compare=False)


def builtin_pairs() -> list[CertifiedPair]:
    """The increasing-words tree with the primes, and the full tree with 0^inf."""
    return [
        CertifiedPair("increasing-primes", FamilyTree("increasing"), named_branch("primes")),
        CertifiedPair("full-zeros", FamilyTree("full"), named_branch("zeros")),
    ]
