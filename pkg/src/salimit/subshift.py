"""The tree-encoding subshift X over {0,1,2,3,4}.

Points of X are the points of {0,1,2,3}^N together with all shifts of the
points ``omega(n, T, y)`` for ill-founded trees T with branch y, where::

    omega(0) = 3 4 0^inf
    omega(n) = 3 (h(T)|n) 2^(n + y[n-1]) omega(n-1)

Membership is decided by a block grammar.  Reading leftwards from a ``4``
(which must be preceded by ``3`` and followed only by ``0``), a word must
look like::

    ... 3 bits(2) 2^(2+y1) 3 bits(1) 2^(1+y0) 3 4 0 0 ...

where ``bits(k)`` is a block of exactly ``k`` symbols from {0,1} recording
``h(T)|k``.  A parse yields a :class:`ConstraintSet`: bits of h(T) forced to
1 or 0, exact branch digits from fully observed 2-runs, and lower bounds from
2-runs cut off by the word boundary.  The word occurs in X iff some parse
has a consistent constraint set; consistency is decidable because every
finite constraint set that survives the prefix-closure and branch checks can
be completed to an ill-founded tree by continuing the branch through large
fresh digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotInLanguage, NotInX
from .trees import BranchWitness, Tree, require_branch, tree_code_prefix
from .words import SymbolicPoint, Word, as_word, enum_word, is_prefix, word_rank

OMEGA0 = SymbolicPoint((3, 4), 0)
ALPHABET = range(5)


# -- the points omega_n ----------------------------------------------------

def omega(n: int, tree: Tree | None = None, witness: BranchWitness | None = None) -> SymbolicPoint:
    """The point ``omega_n(T, y)``; ``omega(0)`` needs no tree."""
    if n == 0:
        return OMEGA0
    if tree is None or witness is None:
        raise ValueError("omega(n) for n >= 1 needs a tree and a branch witness")
    require_branch(tree, witness, n)
    code = tree_code_prefix(tree, n)
    digits = witness.prefix(n)
    prefix: Word = (3, 4)
    for k in range(1, n + 1):
        prefix = (3,) + code[:k] + (2,) * (k + digits[k - 1]) + prefix
    return SymbolicPoint(prefix, 0)


def shift_exponent(n: int, witness: BranchWitness) -> int:
    """``t_n = 2n + 1 + y[n-1]``, the number of shifts taking omega_n to omega_{n-1}."""
    if n < 1:
        raise ValueError("shift exponent is defined for n >= 1")
    return 2 * n + 1 + witness.digit(n - 1)


def shift_point(p: SymbolicPoint, times: int = 1) -> SymbolicPoint:
    if times >= len(p.prefix):
        return SymbolicPoint((), p.tail)
    return SymbolicPoint(p.prefix[times:], p.tail)


# -- constraints ------------------------------------------------------------

@lru_cache(maxsize=65536)
def _closure_ranks(rank: int) -> frozenset:
    s = enum_word(rank)
    return frozenset(word_rank(s[:k]) for k in range(len(s) + 1))


@dataclass(frozen=True)
class ConstraintSet:
    """What a parse says about (T, y).

    ``in_ranks``/``out_ranks`` are enumeration indices whose words are forced
    into / out of T.  ``branch`` maps digit positions to exact values of y,
    ``branch_lower`` to lower bounds.  ``conflict`` is set when two blocks
    disagree on the same bit or digit.
    """

    in_ranks: frozenset = frozenset()
    out_ranks: frozenset = frozenset()
    branch: tuple = ()
    branch_lower: tuple = ()
    conflict: bool = False

    def branch_prefix(self) -> Word:
        """The exactly known digits ``y_0 ... y_{K-1}`` with no gap."""
        known = dict(self.branch)
        out = []
        while len(out) in known:
            out.append(known[len(out)])
        return tuple(out)

    def violations(self) -> list[str]:
        found = []
        if self.conflict:
            found.append("two blocks disagree on a bit or branch digit")
        closure = set()
        for r in self.in_ranks:
            closure |= _closure_ranks(r)
        clash = closure & self.out_ranks
        if clash:
            found.append(f"prefix closure of forced-in words meets forced-out ranks {sorted(clash)}")
        prefix = self.branch_prefix()
        # compare as words: ranks of long branch prefixes are huge integers
        for r in sorted(self.out_ranks):
            s = enum_word(r)
            if is_prefix(s, prefix):
                found.append(f"branch prefix {s} (rank {r}) is forced out")
        return found

    def is_consistent(self) -> bool:
        return not self.violations()

    def to_json(self):
        return {
            "in_ranks": sorted(self.in_ranks),
            "out_ranks": sorted(self.out_ranks),
            "branch": {str(k): v for k, v in sorted(self.branch)},
            "branch_lower": {str(k): v for k, v in sorted(self.branch_lower)},
            "conflict": self.conflict,
        }


class _Collector:
    """Mutable accumulator used while scanning one parse."""

    def __init__(self):
        self.bits: dict[int, int] = {}
        self.branch: dict[int, int] = {}
        self.lower: dict[int, int] = {}
        self.conflict = False

    def bit(self, index, value):
        if self.bits.setdefault(index, value) != value:
            self.conflict = True

    def digit(self, index, value):
        if self.branch.setdefault(index, value) != value:
            self.conflict = True

    def at_least(self, index, value):
        if value > 0:
            self.lower[index] = max(value, self.lower.get(index, 0))

    def freeze(self) -> ConstraintSet:
        lower = {k: v for k, v in self.lower.items() if k not in self.branch}
        conflict = self.conflict or any(
            self.branch[k] < v for k, v in self.lower.items() if k in self.branch)
        return ConstraintSet(
            in_ranks=frozenset(i for i, b in self.bits.items() if b == 1),
            out_ranks=frozenset(i for i, b in self.bits.items() if b == 0),
            branch=tuple(sorted(self.branch.items())),
            branch_lower=tuple(sorted(lower.items())),
            conflict=conflict,
        )


# -- parsing ----------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    """A span ``[start, end)`` of the parsed word."""

    kind: str  # separator | bits | run | marker | tail
    level: int | None
    start: int
    end: int
    partial: bool = False

    def to_json(self):
        return {"kind": self.kind, "level": self.level, "start": self.start,
                "end": self.end, "partial": self.partial}


@dataclass(frozen=True)
class StructureParse:
    """One decomposition of a word into blocks, with its constraints.

    ``terminal`` is set when the word contains the ``3 4`` marker, in which
    case the parse is unique.  ``top_level`` is the level ``n`` when the word
    starts exactly at the leading ``3`` of an ``omega_n`` block.
    """

    word: Word
    blocks: tuple
    constraints: ConstraintSet
    terminal: bool
    top_level: int | None = None

    @property
    def consistent(self) -> bool:
        return self.constraints.is_consistent()

    @property
    def levels(self) -> tuple:
        return tuple(sorted({b.level for b in self.blocks if b.level is not None}))

    def code_prefix(self, n: int) -> Word | None:
        """``h(T)|n`` if every one of those bits was observed."""
        bits = {i: 1 for i in self.constraints.in_ranks}
        bits.update({i: 0 for i in self.constraints.out_ranks})
        if all(i in bits for i in range(n)):
            return tuple(bits[i] for i in range(n))
        return None

    def to_json(self):
        return {
            "word": "".join(map(str, self.word)),
            "terminal": self.terminal,
            "top_level": self.top_level,
            "consistent": self.consistent,
            "blocks": [b.to_json() for b in self.blocks],
            "constraints": self.constraints.to_json(),
        }


def _scan_left(word: Word, end: int, zone: str, level: int, count: int,
               right_open: bool, blocks: list, acc: _Collector):
    """Consume ``word[:end]`` right to left from the given grammar state.

    ``zone`` is ``run`` (a 2-run of ``level`` with ``count`` 2s already to
    its right), ``bits`` (``count`` bits of the level block lie to the right)
    or ``sep`` (the separator opening the ``level`` block).  Returns the
    level of the separator at position 0, -1 if the word starts mid-block,
    or None when the word does not fit the grammar.
    """
    pos = end - 1
    zone_end = end
    while True:
        if zone == "run":
            while pos >= 0 and word[pos] == 2:
                count += 1
                pos -= 1
            left_open = pos < 0
            if zone_end > pos + 1:
                blocks.append(Block("run", level, pos + 1, zone_end, left_open or right_open))
            if left_open or right_open:
                acc.at_least(level - 1, count - level)
            else:
                if count < level:
                    return None
                acc.digit(level - 1, count - level)
            if left_open:
                return -1
            zone, count, zone_end, right_open = "bits", 0, pos + 1, False
        elif zone == "bits":
            while pos >= 0 and count < level and word[pos] in (0, 1):
                acc.bit(level - 1 - count, word[pos])
                count += 1
                pos -= 1
            if zone_end > pos + 1:
                blocks.append(Block("bits", level, pos + 1, zone_end,
                                    right_open or (pos < 0 and count < level)))
            if pos < 0:
                return -1
            if count < level:
                return None
            zone = "sep"
        else:
            if word[pos] != 3:
                return None
            blocks.append(Block("separator", level, pos, pos + 1))
            if pos == 0:
                return level
            pos -= 1
            zone, level, count, zone_end, right_open = "run", level + 1, 0, pos + 1, False


def _finish(word, blocks, acc, terminal, start_level) -> StructureParse:
    return StructureParse(
        word=word,
        blocks=tuple(sorted(blocks, key=lambda b: b.start)),
        constraints=acc.freeze(),
        terminal=terminal,
        top_level=start_level if start_level is not None and start_level >= 0 else None,
    )


def parse_terminal(word: Sequence[int]) -> StructureParse | None:
    """The unique parse of a word containing ``4``, or None."""
    word = tuple(word)
    if word.count(4) != 1:
        return None
    at = word.index(4)
    if any(a != 0 for a in word[at + 1:]):
        return None
    blocks = [Block("marker", 0, at, at + 1)]
    if at + 1 < len(word):
        blocks.append(Block("tail", None, at + 1, len(word), partial=True))
    acc = _Collector()
    if at == 0:
        return _finish(word, blocks, acc, True, None)
    if word[at - 1] != 3:
        return None
    top = _scan_left(word, at, "sep", 0, 0, False, blocks, acc)
    if top is None:
        return None
    return _finish(word, blocks, acc, True, top)


def _free_parses(word: Word, max_level: int) -> list[StructureParse]:
    last = word[-1]
    found = []

    def attempt(zone, level, count, right_open):
        blocks, acc = [], _Collector()
        top = _scan_left(word, len(word), zone, level, count, right_open, blocks, acc)
        if top is not None:
            found.append(_finish(word, blocks, acc, False, top))

    if all(a == 0 for a in word):
        found.append(StructureParse(word, (Block("tail", None, 0, len(word), True),),
                                    ConstraintSet(), False))
    for k in range(0, max_level + 1):
        if last == 3:
            attempt("sep", k, 0, False)
        if k == 0:
            continue
        if last == 2:
            attempt("run", k, 0, True)
        elif last in (0, 1):
            for b in range(k):
                attempt("bits", k, k - 1 - b, True)
    return found


def parse_structure(w: Sequence[int] | str | SymbolicPoint, max_level: int | None = None) -> list[StructureParse]:
    """All block decompositions of a word (or point) of 5^N.

    Words containing ``4`` have at most one parse.  For 4-free words every
    feasible level assignment up to ``max_level`` (default ``len(w) + 1``) is
    returned; beyond that level the shapes repeat with shifted indices.  An
    empty list means no parse.  Inconsistent parses are included and flagged
    through :attr:`StructureParse.consistent`.
    """
    if isinstance(w, SymbolicPoint):
        if 4 in w.prefix or w.tail == 4:
            if w.tail != 0:
                return []
            w = w.prefix
        else:
            w = w.take(len(w.prefix) + 1)
    word = as_word(w) if isinstance(w, str) else tuple(w)
    if not word:
        return []
    if 4 in word:
        p = parse_terminal(word)
        return [] if p is None else [p]
    return _free_parses(word, len(word) + 1 if max_level is None else max_level)


# -- membership ---------------------------------------------------------------

def member_language(w: Sequence[int] | str) -> bool:
    """True iff the finite word occurs in some point of X."""
    word = as_word(w) if isinstance(w, str) else tuple(w)
    if 4 not in word:
        return all(0 <= a < 4 for a in word)
    p = parse_terminal(word)
    return p is not None and p.consistent


def member_point(p: SymbolicPoint) -> bool:
    """True iff the eventually constant point lies in X."""
    if p.tail == 4:
        return False
    if 4 not in p.prefix:
        return True
    if p.tail != 0 or p.prefix[-1] != 4:
        return False
    return member_language(p.prefix)


def member_periodic(prefix: Sequence[int], cycle: Sequence[int]) -> bool:
    """Membership of the eventually periodic point ``prefix + cycle^inf``."""
    cycle = tuple(cycle)
    if len(set(cycle)) == 1:
        return member_point(SymbolicPoint(tuple(prefix), cycle[0]))
    return 4 not in cycle and 4 not in prefix


def predecessor_symbols(p: SymbolicPoint) -> frozenset:
    """``{a : a p in X}`` for a point ``p`` of X."""
    if not member_point(p):
        raise NotInX(str(p))
    return frozenset(a for a in ALPHABET if member_point(p.prepend(a)))


def successor_symbols(w: Sequence[int] | str) -> frozenset:
    """``{a : w a in L(X)}`` for a word ``w`` of the language."""
    word = as_word(w) if isinstance(w, str) else tuple(w)
    if not member_language(word):
        raise NotInLanguage("".join(map(str, word)))
    return frozenset(a for a in ALPHABET if member_language(word + (a,)))


def word_predecessor_symbols(w: Sequence[int] | str) -> frozenset:
    """``{a : a w in L(X)}`` for a word ``w`` of the language."""
    word = as_word(w) if isinstance(w, str) else tuple(w)
    if not member_language(word):
        raise NotInLanguage("".join(map(str, word)))
    return frozenset(a for a in ALPHABET if member_language((a,) + word))


def language_words_with_marker(max_len: int) -> Iterable[Word]:
    """Every word of L(X) of length <= ``max_len`` that contains a 4.

    Found by extending ``4 0^k`` to the left; complete because the language
    is closed under taking suffixes.
    """
    stack = [(4,) + (0,) * k for k in range(max_len)]
    while stack:
        word = stack.pop()
        yield word
        if len(word) < max_len:
            for a in ALPHABET:
                cand = (a,) + word
                if member_language(cand):
                    stack.append(cand)
