"""Exact Cantor embedding, the horseshoe base map, and certified distances
to the follower sets A_i = e(X_i).

All arithmetic is exact (:class:`fractions.Fraction`).  A point ``p`` of
``{0..r-1}^N`` is embedded by ``e(p) = sum 2 p_j / b^(j+1)`` with
``b = 2r - 1``; for the five-symbol shift ``b = 9``.

Distances to A_i are found by descending the cylinder tree.  Inside each
cylinder ``[w]`` the set A_i has an exactly known least and greatest point
(its hull), both of which belong to A_i.  A point outside every hull at
some level sits in a gap ``(L, R)`` of A_i whose ends are hull endpoints, so
the distance is exact.  Only a point that stays inside a hull down to the
depth cap gets a genuine enclosure.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import OutOfDomain
from .languages import Language, SubshiftX
from .serialize import frac_str
from .words import SymbolicPoint, Word

ZERO = Fraction(0)


@dataclass(frozen=True)
class Enclosure:
    """A closed rational interval ``[lo, hi]`` certified to contain a real."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value) -> "Enclosure":
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    def overlaps(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        if isinstance(other, Enclosure):
            return Enclosure(self.lo + other.lo, self.hi + other.hi)
        return Enclosure(self.lo + other, self.hi + other)

    def scale(self, c) -> "Enclosure":
        c = Fraction(c)
        return Enclosure(self.lo * c, self.hi * c) if c >= 0 else Enclosure(self.hi * c, self.lo * c)

    def to_json(self):
        return {"lo": frac_str(self.lo), "hi": frac_str(self.hi)}

    @classmethod
    def from_json(cls, data) -> "Enclosure":
        return cls(Fraction(data["lo"]), Fraction(data["hi"]))

    def __str__(self):
        return frac_str(self.lo) if self.is_exact else f"[{frac_str(self.lo)}, {frac_str(self.hi)}]"


def as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted in certified code paths")
    return Fraction(x)


def check_unit(x) -> Fraction:
    x = as_fraction(x)
    if not 0 <= x <= 1:
        raise OutOfDomain(f"{x} is outside [0, 1]")
    return x


# -- embedding and base map ---------------------------------------------------

def embed_code(prefix: Sequence[int], cycle: Sequence[int], r: int = 5) -> Fraction:
    """``e(prefix cycle^inf)`` exactly."""
    b = 2 * r - 1
    value = Fraction(0)
    scale = Fraction(1, b)
    for a in prefix:
        value += 2 * a * scale
        scale /= b
    period = Fraction(0)
    s = Fraction(1, b)
    for a in cycle:
        period += 2 * a * s
        s /= b
    # scale = b^-m, and s = b^-k for a cycle of length k
    return value + scale * b * period / (1 - s * b)


def embed_e(p: SymbolicPoint, r: int = 5) -> Fraction:
    """``e(p) = sum_j 2 p_j / b^(j+1)`` with ``b = 2r - 1``, exactly."""
    return embed_code(p.prefix, (p.tail,), r)


def embed_word_low(w: Sequence[int], r: int = 5) -> Fraction:
    """Left end of the cylinder ``[w]``, i.e. ``e(w 0^inf)``."""
    return embed_code(tuple(w), (0,), r)


def cylinder_length(depth: int, r: int = 5) -> Fraction:
    return Fraction(1, (2 * r - 1) ** depth)


class Lap(NamedTuple):
    increasing: bool
    index: int

    def __str__(self):
        return f"{'I' if self.increasing else 'D'}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Lap":
        text = str(text).strip()
        if text[0] in "IiDd":
            return cls(text[0] in "Ii", int(text[1:]))
        return cls(True, int(text))

    def bounds(self, r: int = 5) -> tuple[Fraction, Fraction]:
        b = 2 * r - 1
        k = 2 * self.index + (0 if self.increasing else 1)
        return Fraction(k, b), Fraction(k + 1, b)


def lap_index(x, r: int = 5) -> Lap:
    """Which lap contains ``x``; shared endpoints go to the increasing lap."""
    x = check_unit(x)
    b = 2 * r - 1
    k = min(int(x * b), b - 1)  # x lies in the strip [k/b, (k+1)/b]
    if k % 2 == 1 and x * b == k:
        k -= 1
    return Lap(k % 2 == 0, k // 2)


def base_f(x, r: int = 5) -> Fraction:
    """The full horseshoe with ``r`` increasing and ``r - 1`` decreasing laps."""
    x = check_unit(x)
    lap = lap_index(x, r)
    b = 2 * r - 1
    if lap.increasing:
        return b * x - 2 * lap.index
    return (2 * lap.index + 2) - b * x


def inverse_increasing(u, i: int, r: int = 5) -> Fraction:
    """The preimage of ``u`` in the increasing lap ``I_i``."""
    u = check_unit(u)
    return (u + 2 * i) / (2 * r - 1)


def cantor_code(x, r: int = 5, max_steps: int = 10 ** 5):
    """Decode ``x`` as ``e(prefix cycle^inf)``, or None when ``x`` is not in C.

    Rationals in C have eventually periodic codes; the cycle closes as soon
    as a remainder repeats.
    """
    x = check_unit(x)
    b = 2 * r - 1
    seen: dict = {}
    digits: list = []
    rem = x
    for _ in range(max_steps):
        if rem in seen:
            start = seen[rem]
            return tuple(digits[:start]), tuple(digits[start:])
        seen[rem] = len(digits)
        t = rem * b
        a = min(int(t) // 2, r - 1)
        rem = t - 2 * a
        if rem > 1:
            return None
        digits.append(a)
    raise RuntimeError("base expansion did not become periodic")


def code_point(code) -> SymbolicPoint | None:
    """The SymbolicPoint for a code whose cycle is a single repeated symbol."""
    prefix, cycle = code
    if len(set(cycle)) == 1:
        return SymbolicPoint(prefix, cycle[0])
    return None


def format_code(code) -> str:
    prefix, cycle = code
    if len(set(cycle)) == 1:
        return str(SymbolicPoint(prefix, cycle[0]))
    return "".join(map(str, prefix)) + "(" + "".join(map(str, cycle)) + ")^inf"


# -- follower set geometry ----------------------------------------------------

@dataclass(frozen=True)
class Gap:
    """Where ``x`` sits relative to A_i.

    ``member``: x lies in A_i.  Otherwise ``left``/``right`` are the nearest
    known points of A_i on either side (None when there is none); when
    ``exact`` is False, ``x`` was still inside the hull ``inner`` at the
    depth cap and A_i may come closer than ``left``/``right``.
    """

    member: bool
    left: Fraction | None = None
    right: Fraction | None = None
    left_code: tuple | None = None
    right_code: tuple | None = None
    exact: bool = True
    inner: tuple | None = None
    code: tuple | None = None

    def covers(self, a, b) -> bool:
        """True iff ``[a, b]`` lies inside this gap (so A_i misses its interior)."""
        return (self.exact and not self.member
                and (self.left is None or self.left <= a)
                and (self.right is None or b <= self.right))

    def distance_at(self, t) -> Fraction:
        """Exact distance from ``t`` to A_i, valid for ``t`` inside the gap."""
        cands = []
        if self.left is not None:
            cands.append(t - self.left)
        if self.right is not None:
            cands.append(self.right - t)
        return min(cands)


@dataclass(frozen=True)
class FollowerDistance:
    enclosure: Enclosure
    nearest: tuple | None  # code of a point of X_i realising the upper bound
    depth: int


class FollowerGeometry:
    """Cylinder geometry of the follower sets of a language."""

    def __init__(self, language: Language):
        self.language = language
        self.r = language.r
        self._children: dict = {}
        self._hulls: dict = {}

    def children(self, i: int, w: Word) -> tuple:
        """Symbols ``a`` with ``i w a`` in the language."""
        key = (i, w)
        if key not in self._children:
            self._children[key] = tuple(sorted(self.language.successors((i,) + w)))
        return self._children[key]

    def hull(self, i: int, w: Word):
        """``(lo, hi, lo_code, hi_code)`` for A_i inside the cylinder ``[w]``."""
        key = (i, w)
        if key not in self._hulls:
            lo_code, hi_code = self.language.hull(i, w)
            self._hulls[key] = (embed_code(*lo_code, self.r), embed_code(*hi_code, self.r),
                                lo_code, hi_code)
        return self._hulls[key]

    def member_exact(self, x, i: int) -> bool | None:
        code = cantor_code(x, self.r)
        if code is None:
            return False
        return self.language.member_periodic((i,) + code[0], code[1])

    def gap(self, x, i: int, depth: int) -> Gap:
        x = check_unit(x)
        code = cantor_code(x, self.r)
        if code is not None and self.language.member_periodic((i,) + code[0], code[1]):
            return Gap(True, code=code)
        left = right = left_code = right_code = None
        w: Word = ()
        kids = self.children(i, w)
        first, last = self.hull(i, (kids[0],)), self.hull(i, (kids[-1],))
        inside = (w, first[0], last[1], first[2], last[3])
        if x in (first[0], last[1]):
            return Gap(True, code=first[2] if x == first[0] else last[3])
        if x < first[0]:
            return Gap(False, None, first[0], None, first[2])
        if x > last[1]:
            return Gap(False, last[1], None, last[3], None)
        for _ in range(depth):
            inside = None
            for a in self.children(i, w):
                lo, hi, lo_code, hi_code = self.hull(i, w + (a,))
                if x == lo or x == hi:
                    return Gap(True, code=lo_code if x == lo else hi_code)
                if lo < x < hi:
                    inside = (w + (a,), lo, hi, lo_code, hi_code)
                elif hi < x and (left is None or hi > left):
                    left, left_code = hi, hi_code
                elif lo > x and (right is None or lo < right):
                    right, right_code = lo, lo_code
            if inside is None:
                return Gap(False, left, right, left_code, right_code)
            w = inside[0]
        _, lo, hi, lo_code, hi_code = inside
        return Gap(False, left, right, left_code, right_code, exact=False, inner=(lo, hi, lo_code, hi_code))

    def distance(self, x, i: int, depth: int) -> FollowerDistance:
        g = self.gap(x, i, depth)
        if g.member:
            return FollowerDistance(Enclosure.exact(0), g.code, 0)
        cands = []
        if g.left is not None:
            cands.append((x - g.left, g.left_code))
        if g.right is not None:
            cands.append((g.right - x, g.right_code))
        if g.exact:
            d, c = min(cands, key=lambda t: t[0])
            return FollowerDistance(Enclosure.exact(d), c, depth)
        lo, hi, lo_code, hi_code = g.inner
        cands += [(x - lo, lo_code), (hi - x, hi_code)]
        d, c = min(cands, key=lambda t: t[0])
        return FollowerDistance(Enclosure(0, d), c, depth)

    def distances(self, x, depth: int) -> list[Enclosure]:
        return [self.distance(x, i, depth).enclosure for i in range(self.r)]

    def in_B(self, x, i: int, depth: int) -> "Verdict":
        return compare_cells(self.distances(check_unit(x), depth), i)

    def cover(self, i: int, depth: int) -> "CylinderCover":
        if depth < 1:
            raise ValueError("cover depth must be at least 1")
        words = [()]
        for _ in range(depth):
            words = [w + (a,) for w in words for a in self.children(i, w)]
        return CylinderCover(i, depth, tuple(words), self.r)


X_GEOMETRY = FollowerGeometry(SubshiftX())


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def compare_cells(dists: Sequence[Enclosure], i: int) -> Verdict:
    """Certified test of ``d_i <= d_j`` for every j, from distance enclosures."""
    di = dists[i]
    if any(dj.hi < di.lo for j, dj in enumerate(dists) if j != i):
        return Verdict.NO
    if all(di.hi <= dj.lo for j, dj in enumerate(dists) if j != i):
        return Verdict.YES
    return Verdict.UNKNOWN


def follower_hull(i: int, w: Word):
    """Least and greatest points of X_i inside the cylinder ``[w]``."""
    lo, hi, lo_code, hi_code = X_GEOMETRY.hull(i, tuple(w))
    return code_point(lo_code), code_point(hi_code)


def follower_children(i: int, w: Word) -> tuple:
    return X_GEOMETRY.children(i, tuple(w))


def follower_distance(x, i: int, depth: int) -> FollowerDistance:
    return X_GEOMETRY.distance(x, i, depth)


def dist_to_follower(x, i: int, depth: int) -> Enclosure:
    """Enclosure of ``d(x, A_i)``; exact unless x hugs A_i below the depth cap."""
    return X_GEOMETRY.distance(x, i, depth).enclosure


def follower_distances(x, depth: int) -> list[Enclosure]:
    return X_GEOMETRY.distances(x, depth)


def in_B_certified(x, i: int, depth: int) -> Verdict:
    """Is ``x`` in ``B_i = {d(x, A_i) <= d(x, A_j) for all j}``?"""
    return X_GEOMETRY.in_B(x, i, depth)


# -- cylinder covers ----------------------------------------------------------

@dataclass(frozen=True)
class CylinderCover:
    """Outer cover of A_i by the depth-d cylinders of words following i."""

    symbol: int
    depth: int
    words: tuple  # words w with i w in the language, in increasing order
    r: int = 5

    def intervals(self):
        size = cylinder_length(self.depth, self.r)
        for w in self.words:
            lo = embed_word_low(w, self.r)
            yield w, lo, lo + size

    def inner_witness(self, w: Word) -> SymbolicPoint:
        """A point of X_i with prefix ``w``: ``w 0^inf`` always qualifies."""
        return SymbolicPoint(tuple(w), 0)

    def lows(self) -> list:
        cached = self.__dict__.get("_lows")
        if cached is None:
            cached = [lo for _, lo, _ in self.intervals()]
            object.__setattr__(self, "_lows", cached)
        return cached

    def distance(self, x) -> Fraction:
        """Distance from ``x`` to the union of the cylinders."""
        lows = self.lows()
        size = cylinder_length(self.depth, self.r)
        k = bisect_right(lows, x)
        cands = []
        if k:
            cands.append(max(ZERO, x - lows[k - 1] - size))
        if k < len(lows):
            cands.append(lows[k] - x)
        return min(cands)

    def contains(self, x) -> bool:
        return self.distance(x) == 0

    def to_json(self):
        return {
            "symbol": self.symbol,
            "depth": self.depth,
            "r": self.r,
            "cylinders": [{"word": "".join(map(str, w)), "lo": frac_str(lo), "hi": frac_str(hi)}
                          for w, lo, hi in self.intervals()],
        }

    @classmethod
    def from_json(cls, data) -> "CylinderCover":
        words = tuple(tuple(int(c) for c in item["word"]) for item in data["cylinders"])
        return cls(data["symbol"], data["depth"], words, data.get("r", 5))


def follower_cover(i: int, depth: int) -> CylinderCover:
    return X_GEOMETRY.cover(i, depth)
