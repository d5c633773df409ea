"""Backward orbits of omega_0 in (X, sigma).

A backward segment of depth N from ``p`` is ``(x_0, ..., x_N)`` with
``x_0 = p`` and ``sigma(x_{n+1}) = x_n``.  Every point of a backward
segment from omega_0 is ``u 4 0^inf`` with ``|u| = n + 1`` at depth ``n``,
so distinct depths never share a point and the backward tree is a genuine
tree; the predecessor cache only avoids recomputing membership.
"""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import NotInX, ParseFailure, ResourceLimit
from .subshift import (OMEGA0, member_point, omega, parse_terminal, predecessor_symbols,
                       shift_exponent, shift_point)
from .trees import BranchWitness, Tree, require_branch, tree_code_bit
from .words import SymbolicPoint, Word, word_metric

DEFAULT_BUDGET = 10 ** 6


def default_budget() -> int:
    value = os.environ.get("SALIMIT_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


class Budget:
    """A node counter shared by one enumeration (safe across threads)."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else int(limit)
        if self.limit <= 0:
            raise ValueError("budget must be positive")
        self.used = 0
        self._lock = threading.Lock()

    def take(self, n: int = 1) -> bool:
        with self._lock:
            if self.used + n > self.limit:
                return False
            self.used += n
            return True


@dataclass(frozen=True)
class OrbitSegment:
    """``(x_0, ..., x_N)`` with ``shift(x_{n+1}) == x_n``."""

    points: tuple

    @property
    def depth(self) -> int:
        return len(self.points) - 1

    @property
    def start(self) -> SymbolicPoint:
        return self.points[0]

    @property
    def end(self) -> SymbolicPoint:
        return self.points[-1]

    def is_valid(self) -> bool:
        return (all(shift_point(b) == a for a, b in zip(self.points, self.points[1:]))
                and all(member_point(x) for x in self.points))

    def to_json(self):
        return [str(x) for x in self.points]

    @classmethod
    def from_json(cls, data) -> "OrbitSegment":
        return cls(tuple(SymbolicPoint.parse(s) for s in data))


@dataclass
class BackwardEnumeration:
    segments: list
    complete: bool
    nodes: int


def backward_segments(p: SymbolicPoint, depth: int, limit: int | None = None,
                      budget: Budget | int | None = None) -> Iterator[OrbitSegment]:
    """Depth-first stream of all backward segments of the given depth.

    Stops silently after ``limit`` segments or when the node budget runs
    out; use :func:`enumerate_backward` to learn whether the stream was
    complete.
    """
    yield from _backward(p, depth, limit, budget, {})


def _backward(p, depth, limit, budget, status):
    if not member_point(p):
        raise NotInX(str(p))
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    cache: dict = {}

    def preds(q):
        if q not in cache:
            cache[q] = sorted(predecessor_symbols(q))
        return cache[q]

    emitted = 0
    status["complete"] = True
    stack = [(p,)]
    while stack:
        path = stack.pop()
        if not budget.take():
            status["complete"] = False
            break
        if len(path) == depth + 1:
            if limit is not None and emitted >= limit:
                status["complete"] = False
                break
            emitted += 1
            yield OrbitSegment(path)
            continue
        head = path[-1]
        for a in reversed(preds(head)):
            stack.append(path + (head.prepend(a),))
    status["nodes"] = budget.used


def enumerate_backward(p: SymbolicPoint, depth: int, limit: int | None = None,
                       budget: Budget | int | None = None) -> BackwardEnumeration:
    status: dict = {}
    segments = list(_backward(p, depth, limit, budget, status))
    return BackwardEnumeration(segments, status.get("complete", False), status.get("nodes", 0))


def backward_levels(p: SymbolicPoint, depth: int, budget: Budget | int | None = None) -> list[set]:
    """Breadth-first level sets ``{x : sigma^n(x) = p, x in X}`` for n <= depth."""
    if not member_point(p):
        raise NotInX(str(p))
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    levels = [{p}]
    for _ in range(depth):
        nxt = set()
        for q in levels[-1]:
            if not budget.take():
                raise ResourceLimit(f"backward enumeration exceeded {budget.limit} nodes")
            for a in predecessor_symbols(q):
                nxt.add(q.prepend(a))
        levels.append(nxt)
    return levels


# -- witness orbits ---------------------------------------------------------

def witness_orbit(tree: Tree, witness: BranchWitness, n_max: int) -> OrbitSegment:
    """The backward segment from omega_0 passing through omega_1, ..., omega_{n_max}.

    Each intermediate point is a suffix of ``omega_{n_max}``; the point at
    cumulative depth ``t_1 + ... + t_k`` is ``omega_k``.
    """
    if n_max == 0:
        return OrbitSegment((OMEGA0,))
    require_branch(tree, witness, n_max)
    top = omega(n_max, tree, witness)
    total = sum(shift_exponent(n, witness) for n in range(1, n_max + 1))
    return OrbitSegment(tuple(shift_point(top, total - m) for m in range(total + 1)))


def witness_depths(witness: BranchWitness, n_max: int) -> list[int]:
    """Cumulative depths at which omega_0, ..., omega_{n_max} occur."""
    out, total = [0], 0
    for n in range(1, n_max + 1):
        total += shift_exponent(n, witness)
        out.append(total)
    return out


# -- structure of backward orbits -------------------------------------------

@dataclass(frozen=True)
class StructureEntry:
    index: int
    level: int
    code_prefix: Word
    branch_prefix: Word
    consistent: bool


@dataclass(frozen=True)
class StructureReport:
    """Levels ``n_i`` and prefixes ``x_i|n_i``, ``y_i|n_i`` of the 3-prefixed points."""

    entries: tuple
    levels_increasing: bool
    code_compatible: bool
    branch_compatible: bool
    all_consistent: bool

    @property
    def ok(self) -> bool:
        return (self.levels_increasing and self.code_compatible
                and self.branch_compatible and self.all_consistent)

    def to_json(self):
        return {
            "levels": [e.level for e in self.entries],
            "indices": [e.index for e in self.entries],
            "levels_increasing": self.levels_increasing,
            "code_compatible": self.code_compatible,
            "branch_compatible": self.branch_compatible,
            "all_consistent": self.all_consistent,
        }


def verify_structure(seg: OrbitSegment) -> StructureReport:
    """Parse every 3-prefixed point of a segment from omega_0 as some omega_n."""
    if seg.start != OMEGA0:
        raise ValueError("structure verification needs a segment starting at omega_0")
    entries = []
    for m, x in enumerate(seg.points):
        if x.symbol(0) != 3:
            continue
        parse = parse_terminal(x.prefix) if x.tail == 0 else None
        if parse is None or parse.top_level is None:
            raise ParseFailure(f"3-prefixed point {x} does not parse as omega_n")
        n = parse.top_level
        code = parse.code_prefix(n)
        branch = parse.constraints.branch_prefix()
        if code is None or len(branch) < n:
            raise ParseFailure(f"incomplete blocks in {x}")
        entries.append(StructureEntry(m, n, code, branch[:n], parse.consistent))
    pairs = list(zip(entries, entries[1:]))
    return StructureReport(
        entries=tuple(entries),
        levels_increasing=all(a.level < b.level for a, b in pairs),
        code_compatible=all(b.code_prefix[:a.level] == a.code_prefix for a, b in pairs),
        branch_compatible=all(b.branch_prefix[:a.level] == a.branch_prefix for a, b in pairs),
        all_consistent=all(e.consistent for e in entries),
    )


# -- finite probes of the special alpha-limit set ---------------------------

@dataclass
class SalphaProbe:
    """Length-k prefixes of depth-N backward points of omega_0.

    An outer one-sided probe: every point of the special alpha-limit set has
    its k-prefix here for infinitely many N.  It is not the set itself.
    """

    k: int
    depth: int
    witnesses: dict  # prefix -> one endpoint with that prefix

    @property
    def prefixes(self) -> set:
        return set(self.witnesses)


def salpha_prefix_approx(k: int, depth: int, budget: Budget | int | None = None) -> SalphaProbe:
    if k < 0 or depth < 0:
        raise ValueError("prefix length and depth must be non-negative")
    level = backward_levels(OMEGA0, depth, budget)[-1]
    witnesses: dict = {}
    for x in sorted(level, key=str):
        witnesses.setdefault(x.take(k), x)
    return SalphaProbe(k, depth, witnesses)


def segment_to(endpoint: SymbolicPoint, depth: int) -> OrbitSegment:
    """The backward segment ``(sigma^depth(x), ..., sigma(x), x)`` ending at ``x``."""
    return OrbitSegment(tuple(shift_point(endpoint, depth - m) for m in range(depth + 1)))


# -- metrics -----------------------------------------------------------------

def natext_metric(s1: OrbitSegment, s2: OrbitSegment, truncation: int) -> tuple[Fraction, Fraction]:
    """Truncated natural-extension distance and its truncation error bound.

    Returns ``(sum_{n<=M} 2^-n min(1, d(x_n, y_n)), 2^-M)``.
    """
    if min(s1.depth, s2.depth) < truncation:
        raise ValueError("segments are shorter than the truncation")
    value = sum((Fraction(1, 2 ** n) * min(Fraction(1), word_metric(a, b))
                 for n, (a, b) in enumerate(zip(s1.points[:truncation + 1], s2.points[:truncation + 1]))),
                Fraction(0))
    return value, Fraction(1, 2 ** truncation)


def _distance_to_code_point(p: SymbolicPoint, tree: Tree, horizon: int) -> Fraction:
    """``d(p, 3 h(T))`` by symbol comparison up to ``horizon``."""
    for i in range(horizon):
        target = 3 if i == 0 else tree_code_bit(tree, i - 1)
        if p.symbol(i) != target:
            return Fraction(1, 2 ** i)
    raise ValueError(f"no disagreement within {horizon} symbols")


def convergence_check(tree: Tree, witness: BranchWitness, n_max: int) -> list[Fraction]:
    """``d(omega_n(T, y), 3 h(T))`` for ``n = 0, ..., n_max``."""
    require_branch(tree, witness, n_max)
    out = []
    for n in range(n_max + 1):
        w = omega(n, tree, witness)
        out.append(_distance_to_code_point(w, tree, len(w.prefix) + 2))
    return out
