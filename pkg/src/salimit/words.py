"""Finite words, eventually constant points of 5^N, and the canonical
enumeration of N^{<N}.

Finite words are plain tuples of non-negative integers.  Words whose symbols
are all below 10 are written as digit strings (``"3110"``); longer symbols
use comma separated lists (``"2,3,11"``).

The enumeration orders N^{<N} by weight ``len(s) + sum(s)``, then by length
(longest first), then lexicographically::

    rank 0: ()      rank 1: (0,)      rank 2: (0, 0)      rank 3: (1,)
    rank 4: (0, 0, 0)  ...

There are exactly ``2**(w-1)`` words of weight ``w >= 1`` (they correspond
to compositions of ``w``), so the words of weight ``w`` occupy the ranks
``[2**(w-1), 2**w)`` and the weight of ``enum_word(i)`` is ``i.bit_length()``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

Word = tuple

SHIFT_ALPHABET = 5


def as_word(symbols: Iterable[int] | str) -> Word:
    """Coerce a digit string, comma list, or iterable of ints to a word."""
    if isinstance(symbols, str):
        text = symbols.strip()
        if not text:
            return ()
        if "," in text:
            return tuple(int(t) for t in text.split(",") if t.strip())
        return tuple(int(c) for c in text)
    return tuple(int(a) for a in symbols)


def format_word(word: Sequence[int]) -> str:
    """Digit string when every symbol is below 10, else a comma list."""
    if all(0 <= a < 10 for a in word):
        return "".join(str(a) for a in word)
    return ",".join(str(a) for a in word)


def check_alphabet(word: Sequence[int], bound: int = SHIFT_ALPHABET) -> None:
    for a in word:
        if not 0 <= a < bound:
            raise ValueError(f"symbol {a!r} outside alphabet of size {bound}")


def is_prefix(t: Sequence[int], s: Sequence[int]) -> bool:
    return len(t) <= len(s) and tuple(s[: len(t)]) == tuple(t)


# -- canonical enumeration -------------------------------------------------

def word_weight(s: Sequence[int]) -> int:
    return len(s) + sum(s)


def word_rank(s: Sequence[int]) -> int:
    """Position of ``s`` in the canonical enumeration (inverse of enum_word)."""
    s = tuple(s)
    w = word_weight(s)
    if w == 0:
        return 0
    length = len(s)
    # words of weight w and length L number comb(w - 1, L - 1)
    rank = 1 << (w - 1)
    if length - 1 < w - length:
        # the complementary part of row w - 1 is shorter
        rank += (1 << (w - 1)) - sum(comb(w - 1, k) for k in range(length))
    else:
        rank += sum(comb(w - 1, k) for k in range(length, w))
    total = w - length
    for j, a in enumerate(s):
        rest = length - j - 1
        # words of length `rest` and sum in (total - a, total]; hockey stick
        rank += comb(total + rest, rest) - comb(total - a + rest, rest)
        total -= a
    return rank


def enum_word(i: int) -> Word:
    """The ``i``-th word of N^{<N} in the canonical enumeration."""
    if i < 0:
        raise ValueError("enumeration index must be non-negative")
    if i == 0:
        return ()
    w = i.bit_length()
    offset = i - (1 << (w - 1))
    length = w
    while True:
        block = comb(w - 1, length - 1)
        if offset < block:
            break
        offset -= block
        length -= 1
    total = w - length
    out = []
    for j in range(length):
        rest = length - j - 1
        if rest == 0:
            out.append(total)
            break
        # smallest a with comb(total+rest, rest) - comb(total-a+rest, rest) > offset
        full = comb(total + rest, rest)
        lo, hi = 0, total
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if full - comb(total - mid + rest, rest) <= offset:
                lo = mid
            else:
                hi = mid - 1
        a = lo
        offset -= full - comb(total - a + rest, rest)
        out.append(a)
        total -= a
    return tuple(out)


def prefix_ranks(s: Sequence[int]) -> list[int]:
    """Ranks of every initial segment of ``s`` (including ``()`` and ``s``)."""
    return [word_rank(s[:k]) for k in range(len(s) + 1)]


# -- eventually constant points of 5^N -------------------------------------

@dataclass(frozen=True)
class SymbolicPoint:
    """The point ``prefix + tail^inf`` of 5^N, kept in canonical form.

    Canonical form means the prefix never ends with the tail symbol, so two
    points are equal exactly when their representations are equal.
    """

    prefix: Word
    tail: int = 0

    def __post_init__(self):
        prefix = tuple(int(a) for a in self.prefix)
        end = len(prefix)
        while end and prefix[end - 1] == self.tail:
            end -= 1
        object.__setattr__(self, "prefix", prefix[:end])
        object.__setattr__(self, "tail", int(self.tail))

    @classmethod
    def parse(cls, text: str) -> "SymbolicPoint":
        """Read ``"340^inf"``-style text: the symbol before ``^inf`` repeats."""
        text = text.replace(" ", "")
        if not text.endswith("^inf"):
            raise ValueError(f"point text must end in '^inf': {text!r}")
        body = text[: -len("^inf")]
        if not body:
            raise ValueError("missing tail symbol")
        if "," in body:
            symbols = as_word(body)
            return cls(symbols[:-1], symbols[-1])
        return cls(as_word(body[:-1]), int(body[-1]))

    def __str__(self) -> str:
        if all(a < 10 for a in self.prefix) and self.tail < 10:
            return format_word(self.prefix) + f"{self.tail}^inf"
        return ",".join(str(a) for a in self.prefix + (self.tail,)) + "^inf"

    def symbol(self, i: int) -> int:
        return self.prefix[i] if i < len(self.prefix) else self.tail

    def take(self, k: int) -> Word:
        """The first ``k`` symbols."""
        if k <= len(self.prefix):
            return self.prefix[:k]
        return self.prefix + (self.tail,) * (k - len(self.prefix))

    def shift(self) -> "SymbolicPoint":
        if self.prefix:
            return SymbolicPoint(self.prefix[1:], self.tail)
        return self

    def prepend(self, symbols: Sequence[int] | int) -> "SymbolicPoint":
        if isinstance(symbols, int):
            symbols = (symbols,)
        return SymbolicPoint(tuple(symbols) + self.prefix, self.tail)

    def symbols_used(self) -> set[int]:
        return set(self.prefix) | {self.tail}


def first_disagreement(p: SymbolicPoint, q: SymbolicPoint) -> int | None:
    """Index of the first differing symbol, or None when ``p == q``."""
    if p == q:
        return None
    n = max(len(p.prefix), len(q.prefix)) + 1
    for i in range(n):
        if p.symbol(i) != q.symbol(i):
            return i
    # unreachable for canonical points
    raise AssertionError("distinct canonical points agree on their span")


def word_metric(p: SymbolicPoint, q: SymbolicPoint) -> Fraction:
    """``2**-m`` where ``m`` is the first index where ``p`` and ``q`` differ."""
    m = first_disagreement(p, q)
    return Fraction(0) if m is None else Fraction(1, 2 ** m)


def lex_less(p: SymbolicPoint, q: SymbolicPoint) -> bool:
    m = first_disagreement(p, q)
    return m is not None and p.symbol(m) < q.symbol(m)
