"""Subshift languages as used by the square-map construction.

A language object answers word membership and, for the geometric part,
reports the least and greatest points of a follower set inside a cylinder.
Points are eventually periodic codes ``(prefix, cycle)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .subshift import member_language, member_periodic, successor_symbols
from .words import Word

Code = tuple  # (prefix, cycle)


class Language:
    """Base class.  Subclasses set ``r`` and implement ``member_word``.

    ``hull(i, w)`` must return the codes of the least and greatest points of
    ``{x : i w x in X}`` (shifted to start at ``w``), given that ``i w`` lies
    in the language.
    """

    r: int = 2
    name: str = "language"

    def member_word(self, w: Word) -> bool:
        raise NotImplementedError

    def successors(self, w: Word) -> tuple:
        return tuple(a for a in range(self.r) if self.member_word(tuple(w) + (a,)))

    def predecessors(self, w: Word) -> tuple:
        return tuple(a for a in range(self.r) if self.member_word((a,) + tuple(w)))

    def member_periodic(self, prefix: Sequence[int], cycle: Sequence[int]) -> bool | None:
        """Membership of ``prefix cycle^inf``; None when undecided."""
        return None

    def hull(self, i: int, w: Word) -> tuple[Code, Code]:
        raise NotImplementedError

    def __repr__(self):
        return f"<{self.name} language, r={self.r}>"


class FullShift(Language):
    def __init__(self, r: int = 2):
        self.r = r
        self.name = f"full shift on {r} symbols"

    def member_word(self, w):
        return all(0 <= a < self.r for a in w)

    def member_periodic(self, prefix, cycle):
        return self.member_word(tuple(prefix) + tuple(cycle))

    def hull(self, i, w):
        return (tuple(w), (0,)), (tuple(w), (self.r - 1,))


class GoldenMean(Language):
    """Binary sequences without two consecutive 1s."""

    r = 2
    name = "golden mean shift"

    def member_word(self, w):
        w = tuple(w)
        return all(a in (0, 1) for a in w) and all(not (a == b == 1) for a, b in zip(w, w[1:]))

    def member_periodic(self, prefix, cycle):
        cycle = tuple(cycle)
        return self.member_word(tuple(prefix) + cycle + cycle)

    def hull(self, i, w):
        w = tuple(w)
        last = ((i,) + w)[-1]
        high = (w + (0,), (1, 0)) if last == 1 else (w, (1, 0))
        return (w, (0,)), high


@lru_cache(maxsize=1 << 16)
def x_hull(i: int, w: Word) -> tuple[Code, Code]:
    """Least and greatest points of X_i in the cylinder ``[w]``.

    The least is ``w 0^inf``.  The greatest takes the largest admissible
    symbol each time; it ends with a 4 (then zeros forever) or runs into
    ``3 3``, after which only 3 can be maximal.
    """
    word = (i,) + w
    tail: list = []
    while True:
        a = max(successor_symbols(word))
        if a == 4:
            high = (w + tuple(tail) + (4,), (0,))
            break
        if a == 0:
            high = (w + tuple(tail), (0,))
            break
        if word[-1] == 3:
            high = (w + tuple(tail), (3,))
            break
        tail.append(3)
        word = word + (3,)
    return (w, (0,)), high


class SubshiftX(Language):
    """The five-symbol subshift X."""

    r = 5
    name = "X"

    def __init__(self, fast_successors: bool = True):
        self.fast_successors = fast_successors

    def member_word(self, w):
        return member_language(tuple(w))

    def successors(self, w):
        if self.fast_successors:
            return tuple(sorted(successor_symbols(tuple(w))))
        return super().successors(w)

    def member_periodic(self, prefix, cycle):
        return member_periodic(tuple(prefix), tuple(cycle))

    def hull(self, i, w):
        return x_hull(i, tuple(w))


def language_by_name(name: str, r: int | None = None) -> Language:
    if name in ("x", "X"):
        return SubshiftX()
    if name in ("full", "full-shift"):
        return FullShift(r or 2)
    if name in ("golden", "golden-mean"):
        return GoldenMean()
    raise ValueError(f"unknown language {name!r}")
