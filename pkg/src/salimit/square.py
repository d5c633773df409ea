"""The gap function phi, the skew product F on the square, and embeddings of
subshifts as totally invariant sets.

``F(x, y) = (f(x), phi(x) + y (1 - phi(x)))``.  On an increasing lap I_i,
``phi(x) = d(f(x), B_i) / 2`` where ``B_i`` collects the points at least as
close to A_i as to every other A_j.  On a decreasing lap ``[l, r]`` phi is
the continuous positive bridge

    phi(t) = min(1/2, L(t) + min(t - l, r - t)),

with ``L`` the affine interpolation of the values at the lap ends.

``B_i`` is never stored.  ``d(v, B_i)`` is found by a best-first sweep
outwards from ``v``: on a stretch that sits inside one gap of every A_j, each
distance function is an explicit min of two lines, so the first point of
B_i there is found exactly.  Stretches that touch some A_j are bisected and
discarded once the 2-Lipschitz bound on ``d(., A_i) - min_j d(., A_j)``
rules them out.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import CertificationFailed, OutOfDomain, SurjectivityViolation
from .intervals import (X_GEOMETRY, Enclosure, FollowerGeometry, Lap, Verdict, base_f, check_unit,
                        cylinder_length, embed_code, embed_e, inverse_increasing,
                        lap_index)
from .languages import Language
from .serialize import frac_str
from .words import SymbolicPoint

HALF = Fraction(1, 2)


# -- distance to B_i ---------------------------------------------------------

@dataclass(frozen=True)
class BDistance:
    """Enclosure of ``d(v, B_i)`` and a point of ``B_i`` realising its upper end."""

    enclosure: Enclosure
    witness: Fraction
    steps: int

    @property
    def exact(self) -> bool:
        return self.enclosure.is_exact


def _solve_in_gaps(gaps, i: int, near: Fraction, far: Fraction, v: Fraction):
    """First point of B_i on the segment from ``near`` towards ``far``.

    Every A_j misses the open segment, so each distance is ``min(t - L, R - t)``
    there and the first feasible point is a breakpoint or a crossing.
    """
    lo, hi = min(near, far), max(near, far)
    cands = {near, far}
    gi = gaps[i]
    for g in gaps:
        if g.left is not None and g.right is not None:
            cands.add((g.left + g.right) / 2)
    for j, g in enumerate(gaps):
        if j == i:
            continue
        if gi.left is not None and g.right is not None:
            cands.add((gi.left + g.right) / 2)
        if gi.right is not None and g.left is not None:
            cands.add((gi.right + g.left) / 2)
    for t in sorted((c for c in cands if lo <= c <= hi), key=lambda c: abs(c - v)):
        di = gi.distance_at(t)
        if all(di <= g.distance_at(t) for j, g in enumerate(gaps) if j != i):
            return t
    return None


def distance_to_B(v, i: int, depth: int, geometry: FollowerGeometry = X_GEOMETRY,
                  tol: Fraction | None = None, max_steps: int = 20000) -> BDistance:
    """Certified enclosure of ``d(v, B_i)``; exact in all but boundary-hugging cases."""
    v = check_unit(v)
    geom = geometry
    tol = cylinder_length(depth, geom.r) if tol is None else Fraction(tol)
    if geom.gap(v, i, depth).member or geom.in_B(v, i, depth) is Verdict.YES:
        return BDistance(Enclosure.exact(0), v, 0)

    tick = itertools.count()
    heap: list = []
    # the nearest point of A_i lies in B_i, which caps the search
    near_ai = geom.distance(v, i, depth)
    best = (near_ai.enclosure.hi, embed_code(*near_ai.nearest, geom.r))
    heapq.heappush(heap, (best[0], next(tick), "point", best[1]))
    if v < 1:
        heapq.heappush(heap, (Fraction(0), next(tick), "seg", (v, Fraction(1))))
    if v > 0:
        heapq.heappush(heap, (Fraction(0), next(tick), "seg", (v, Fraction(0))))
    lower = None
    steps = 0
    while heap:
        key, _, kind, data = heapq.heappop(heap)
        if kind == "point":
            return BDistance(Enclosure(key if lower is None else lower, key), data, steps)
        steps += 1
        if steps > max_steps:
            lo = key if lower is None else min(lower, key)
            return BDistance(Enclosure(lo, best[0]), best[1], steps)
        near, far = data
        a, b = min(near, far), max(near, far)
        if b > a and _excluded(geom, i, a, b, depth):
            continue
        gaps = [geom.gap(near, j, depth) for j in range(geom.r)]
        if gaps[i].member:
            heapq.heappush(heap, (abs(near - v), next(tick), "point", near))
            continue
        if all(g.exact and not g.member for g in gaps):
            stop = far
            for g in gaps:
                edge = g.right if far > near else g.left
                if edge is not None and abs(edge - near) < abs(stop - near):
                    stop = edge
            t = _solve_in_gaps(gaps, i, near, stop, v)
            if t is not None:
                d = abs(t - v)
                if d < best[0]:
                    best = (d, t)
                heapq.heappush(heap, (d, next(tick), "point", t))
            elif stop != far:
                heapq.heappush(heap, (abs(stop - v), next(tick), "seg", (stop, far)))
            continue
        if b - a <= tol:
            lower = key if lower is None else lower
            continue
        mid = (a + b) / 2
        for part in ((near, mid), (mid, far)):
            heapq.heappush(heap, (abs(part[0] - v), next(tick), "seg", part))
    raise CertificationFailed("search for B_i exhausted without a witness")


def _excluded(geom: FollowerGeometry, i: int, a: Fraction, b: Fraction, depth: int) -> bool:
    """True when ``[a, b]`` provably misses B_i (2-Lipschitz bound at the centre)."""
    c = (a + b) / 2
    d = geom.distances(c, depth)
    others = min(dj.hi for j, dj in enumerate(d) if j != i)
    return d[i].lo - others > b - a


# -- phi ----------------------------------------------------------------------

@dataclass(frozen=True)
class PhiValue:
    enclosure: Enclosure
    lap: Lap
    depth: int

    def __post_init__(self):
        if not 0 <= self.enclosure.lo <= self.enclosure.hi <= HALF:
            raise AssertionError(f"phi enclosure {self.enclosure} leaves [0, 1/2]")

    @property
    def is_zero(self) -> bool:
        return self.enclosure.hi == 0

    def to_json(self):
        return {"lo": frac_str(self.enclosure.lo), "hi": frac_str(self.enclosure.hi),
                "lap": str(self.lap), "depth": self.depth}


def phi(x, depth: int = 6, geometry: FollowerGeometry = X_GEOMETRY) -> PhiValue:
    x = check_unit(x)
    r = geometry.r
    lap = lap_index(x, r)
    if lap.increasing:
        d = distance_to_B(base_f(x, r), lap.index, depth, geometry).enclosure
        return PhiValue(d.scale(HALF), lap, depth)
    left, right = lap.bounds(r)
    phl, phr = _lap_end_values(geometry, lap.index, depth)
    s = (x - left) / (right - left)
    lin = phl.scale(1 - s) + phr.scale(s)
    bump = min(x - left, right - x)
    return PhiValue(Enclosure(min(HALF, lin.lo + bump), min(HALF, lin.hi + bump)), lap, depth)


def _lap_end_values(geom: FollowerGeometry, k: int, depth: int) -> tuple[Enclosure, Enclosure]:
    cache = geom.__dict__.setdefault("_phi_ends", {})
    key = (k, depth)
    if key not in cache:
        left, right = Lap(False, k).bounds(geom.r)
        cache[key] = (phi(left, depth, geom).enclosure, phi(right, depth, geom).enclosure)
    return cache[key]


# -- points of the square and F ---------------------------------------------

@dataclass(frozen=True)
class SquarePoint:
    x: Fraction
    y: object  # Fraction or Enclosure

    def __post_init__(self):
        object.__setattr__(self, "x", check_unit(self.x))
        y = self.y
        if not isinstance(y, Enclosure):
            y = Fraction(y)
            lo = hi = y
        else:
            lo, hi = y.lo, y.hi
        if lo < 0 or hi > 1:
            raise OutOfDomain(f"second coordinate {y} leaves [0, 1]")
        object.__setattr__(self, "y", y)

    @property
    def y_enclosure(self) -> Enclosure:
        return self.y if isinstance(self.y, Enclosure) else Enclosure.exact(self.y)

    @property
    def exact(self) -> bool:
        return not isinstance(self.y, Enclosure)

    def to_json(self):
        y = self.y_enclosure
        if y.is_exact:
            return {"x": frac_str(self.x), "y": frac_str(y.lo)}
        return {"x": frac_str(self.x), "y": y.to_json()}

    @classmethod
    def from_json(cls, data) -> "SquarePoint":
        y = data["y"]
        return cls(Fraction(data["x"]), Enclosure.from_json(y) if isinstance(y, dict) else Fraction(y))

    def __str__(self):
        return f"({frac_str(self.x)}, {self.y_enclosure})"


def fiber(ph: Enclosure, y: Enclosure) -> Enclosure:
    """``g(y) = phi + y (1 - phi) = 1 - (1 - phi)(1 - y)``, increasing in both."""
    return Enclosure(1 - (1 - ph.lo) * (1 - y.lo), 1 - (1 - ph.hi) * (1 - y.hi))


def apply_F(p: SquarePoint, depth: int = 6, geometry: FollowerGeometry = X_GEOMETRY) -> SquarePoint:
    y = p.y_enclosure
    if y.is_exact and y.lo == 1:
        return SquarePoint(base_f(p.x, geometry.r), Fraction(1))
    g = fiber(phi(p.x, depth, geometry).enclosure, y)
    return SquarePoint(base_f(p.x, geometry.r), g.lo if g.is_exact else g)


def embed_E(p: SymbolicPoint, r: int = 5) -> SquarePoint:
    return SquarePoint(embed_e(p, r), Fraction(0))


@dataclass(frozen=True)
class Preimage:
    point: SquarePoint
    lap: int
    residual: Fraction  # width of the enclosure of the second coordinate of F(point)

    def to_json(self):
        return {"point": self.point.to_json(), "lap": self.lap, "residual": frac_str(self.residual)}


def preimage_point(target: SquarePoint, depth: int = 8,
                   geometry: FollowerGeometry = X_GEOMETRY, tol: Fraction | None = None) -> Preimage:
    """A point whose image under F is the target (exactly when possible)."""
    u, v = target.x, target.y_enclosure
    if not v.is_exact:
        raise ValueError("preimages need an exact target")
    v = v.lo
    tol = cylinder_length(depth, geometry.r) if tol is None else Fraction(tol)
    verdicts = [geometry.in_B(u, i, depth) for i in range(geometry.r)]
    order = ([i for i, vd in enumerate(verdicts) if vd is Verdict.YES]
             + [i for i, vd in enumerate(verdicts) if vd is Verdict.UNKNOWN])
    for i in order:
        x = inverse_increasing(u, i, geometry.r)
        ph = phi(x, depth, geometry).enclosure
        if ph.is_exact and ph.lo == 0:
            return Preimage(SquarePoint(x, v), i, Fraction(0))
        if v < ph.hi or ph.hi == 1:
            continue
        # g(y) = v  <=>  y = (v - phi) / (1 - phi); pick the middle of phi
        m = ph.mid
        y = (v - m) / (1 - m)
        if not 0 <= y <= 1:
            continue
        res = fiber(ph, Enclosure.exact(y)).width
        if res <= tol:
            return Preimage(SquarePoint(x, y), i, res)
    raise CertificationFailed(f"no lap yields a certified preimage of {target} at depth {depth}")


# -- verification of the properties of phi ----------------------------------

@dataclass
class SampleVerdict:
    label: str
    x: Fraction
    verdict: str  # "yes", "no" or "unknown"
    enclosure: Enclosure
    depth: int

    def to_json(self):
        return {"sample": self.label, "x": frac_str(self.x), "verdict": self.verdict,
                "depth": self.depth, **self.enclosure.to_json()}


@dataclass
class PhiReport:
    zero_on_members: list = field(default_factory=list)
    positive_off_members: list = field(default_factory=list)
    preimages: list = field(default_factory=list)

    def counts(self, part: str) -> dict:
        out = {"yes": 0, "no": 0, "unknown": 0}
        for s in getattr(self, part):
            out[s.verdict] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(s.verdict == "yes" for part in ("zero_on_members", "positive_off_members", "preimages")
                   for s in getattr(self, part))

    def to_json(self):
        return {part: {"counts": self.counts(part), "samples": [s.to_json() for s in getattr(self, part)]}
                for part in ("zero_on_members", "positive_off_members", "preimages")}


def verify_phi_properties(members: Iterable[SymbolicPoint] = (),
                          nonmembers: Iterable[SymbolicPoint] = (),
                          targets: Iterable[SquarePoint] = (),
                          depth: int = 8, preimage_tol: Fraction = Fraction(1, 10 ** 6),
                          geometry: FollowerGeometry = X_GEOMETRY) -> PhiReport:
    """Check phi = 0 on A, phi > 0 off A over A, and preimages of targets.

    Positivity is retried at increasing depths up to ``depth`` and the
    verdict records the depth that settled it.
    """
    r = geometry.r
    report = PhiReport()
    for p in members:
        x = embed_e(p, r)
        ph = phi(x, depth, geometry)
        report.zero_on_members.append(
            SampleVerdict(str(p), x, "yes" if ph.is_zero else "no", ph.enclosure, depth))
    for p in nonmembers:
        x = embed_e(p, r)
        ph = None
        for d in range(2, depth + 1):
            ph = phi(x, d, geometry)
            if ph.enclosure.lo > 0:
                break
        verdict = "yes" if ph.enclosure.lo > 0 else ("no" if ph.is_zero else "unknown")
        report.positive_off_members.append(SampleVerdict(str(p), x, verdict, ph.enclosure, ph.depth))
    for t in targets:
        try:
            pre = preimage_point(t, depth, geometry)
        except CertificationFailed:
            report.preimages.append(SampleVerdict(str(t), t.x, "unknown", Enclosure(0, 1), depth))
            continue
        img = apply_F(pre.point, depth, geometry)
        y = img.y_enclosure
        ok = img.x == t.x and max(abs(y.lo - t.y_enclosure.lo), abs(y.hi - t.y_enclosure.lo)) <= preimage_tol
        report.preimages.append(SampleVerdict(str(t), pre.point.x, "yes" if ok else "no", y, depth))
    return report


# -- figure data (floating point, not certified) ------------------------------

def figure_rectangles(strip, resolution: int = 64, depth: int = 4,
                      geometry: FollowerGeometry = X_GEOMETRY) -> dict:
    """Images of the edges of one vertical strip under F, as float polylines.

    ``strip`` is a :class:`Lap` or its text form (``"I4"``, ``"D1"``, or a bare
    integer meaning the increasing lap).  The data is sampled with phi
    midpoints and is for plotting only.
    """
    lap = strip if isinstance(strip, Lap) else Lap.parse(str(strip))
    r = geometry.r
    left, right = lap.bounds(r)
    xs = [left + (right - left) * Fraction(k, resolution) for k in range(resolution + 1)]
    bottom, top = [], []
    for x in xs:
        fx = float(base_f(x, r))
        ph = phi(x, depth, geometry).enclosure
        bottom.append((fx, float(ph.mid)))
        top.append((fx, 1.0))
    ys = [Fraction(k, resolution) for k in range(resolution + 1)]
    sides = {}
    for name, x in (("left", left), ("right", right)):
        ph = phi(x, depth, geometry).enclosure
        fx = float(base_f(x, r))
        sides[name] = [(fx, float(fiber(ph, Enclosure.exact(y)).mid)) for y in ys]
    return {
        "certified": False,
        "strip": str(lap),
        "resolution": resolution,
        "polylines": {"bottom": bottom, "top": top, **sides},
    }


def figure_csv(data: dict) -> str:
    lines = ["# non-certified float samples", "polyline,x,y"]
    for name, pts in data["polylines"].items():
        lines += [f"{name},{x:.12g},{y:.12g}" for x, y in pts]
    return "\n".join(lines) + "\n"


# -- general subshifts ----------------------------------------------------------

class EmbeddedMap:
    """The square map built for an arbitrary surjective subshift on r symbols.

    The base map is the full ``2r - 1`` horseshoe; points are embedded with
    digits ``2 x_j / (2r - 1)^(j + 1)``.
    """

    def __init__(self, language: Language, depth: int = 6):
        self.language = language
        self.r = language.r
        self.depth = depth
        self.geometry = FollowerGeometry(language)

    @property
    def laps(self) -> int:
        return 2 * self.r - 1

    def embed_e(self, p: SymbolicPoint) -> Fraction:
        return embed_e(p, self.r)

    def embed_E(self, p: SymbolicPoint) -> SquarePoint:
        return embed_E(p, self.r)

    def base_f(self, x) -> Fraction:
        return base_f(x, self.r)

    def lap_index(self, x) -> Lap:
        return lap_index(x, self.r)

    def dist_to_follower(self, x, i: int, depth: int | None = None) -> Enclosure:
        return self.geometry.distance(x, i, depth or self.depth).enclosure

    def in_B(self, x, i: int, depth: int | None = None) -> Verdict:
        return self.geometry.in_B(x, i, depth or self.depth)

    def phi(self, x, depth: int | None = None) -> PhiValue:
        return phi(x, depth or self.depth, self.geometry)

    def apply_F(self, p: SquarePoint, depth: int | None = None) -> SquarePoint:
        return apply_F(p, depth or self.depth, self.geometry)

    def preimage_point(self, target: SquarePoint, depth: int | None = None) -> Preimage:
        return preimage_point(target, depth or self.depth, self.geometry)

    def __repr__(self):
        return f"EmbeddedMap({self.language!r}, laps={self.laps})"


def check_surjective(language: Language, max_len: int = 4) -> int:
    """Every language word up to ``max_len`` must have a predecessor symbol.

    Returns the number of words checked.
    """
    words = [(a,) for a in range(language.r) if language.member_word((a,))]
    checked = 0
    while words:
        nxt = []
        for w in words:
            checked += 1
            if not language.predecessors(w):
                raise SurjectivityViolation(f"word {w} has no predecessor symbol")
            if len(w) < max_len:
                nxt.extend(w + (a,) for a in language.successors(w))
        words = nxt
    return checked


def general_embed(r: int, language: Language, depth: int = 6, check_len: int = 4) -> EmbeddedMap:
    if r < 2:
        raise ValueError("need at least two symbols")
    if language.r != r:
        raise ValueError(f"language has {language.r} symbols, expected {r}")
    check_surjective(language, check_len)
    return EmbeddedMap(language, depth)
