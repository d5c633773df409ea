"""Invariant suites behind ``salimit verify``.

Each suite returns a :class:`SuiteReport`; a suite passes when every
certified check passes.  Unknown verdicts are listed in the details and
only fail a check when that check demands certainty.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import oracles
from .intervals import (Verdict, base_f, dist_to_follower, embed_e, follower_cover,
                        in_B_certified)
from .languages import FullShift
from .orbits import (enumerate_backward, salpha_prefix_approx, segment_to, verify_structure,
                     witness_depths, witness_orbit)
from .sampling import random_nonmember_over_x, random_point, random_x_point
from .square import SquarePoint, apply_F, embed_E, general_embed, verify_phi_properties
from .subshift import (OMEGA0, language_words_with_marker, member_language, member_point, omega,
                       shift_exponent, shift_point, successor_symbols, word_predecessor_symbols)
from .trees import builtin_pairs
from .words import SymbolicPoint, enum_word, word_metric, word_rank

SUITES = ("words", "subshift", "orbits", "interval", "square")


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "seconds": round(self.seconds, 3), **self.detail}


@dataclass
class SuiteReport:
    suite: str
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self):
        return {"suite": self.suite, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def _timed(name, fn):
    t = time.perf_counter()
    ok, detail = fn()
    return Check(name, bool(ok), detail, time.perf_counter() - t)


# -- individual checks ----------------------------------------------------------

def check_rank_inverse(n: int):
    bad = [i for i in range(n + 1) if word_rank(enum_word(i)) != i]
    return not bad, {"checked": n + 1, "failures": bad[:10]}


def check_ultrametric(samples: int, seed: int = 0):
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        p, q, r = (random_point(rng, 6, alphabet=3) for _ in range(3))
        if word_metric(p, r) > max(word_metric(p, q), word_metric(q, r)):
            bad += 1
    return bad == 0, {"triples": samples, "failures": bad}


def check_shift_identity(n_max: int):
    failures = []
    for pair in builtin_pairs():
        for n in range(1, n_max + 1):
            w = omega(n, pair.tree, pair.witness)
            if shift_point(w, shift_exponent(n, pair.witness)) != omega(n - 1, pair.tree, pair.witness):
                failures.append((pair.name, n))
    return not failures, {"n_max": n_max, "failures": failures}


def language_disagreements(length: int, max_digit: int = 5):
    """Words of the given length where the parser and the brute-force oracle differ."""
    marked = oracles.language_oracle(length, max_digit=max_digit)
    out = []
    for w in product(range(5), repeat=length):
        expected = (4 not in w) or (w in marked)
        if member_language(w) != expected:
            out.append("".join(map(str, w)))
    return out


def check_oracle_equivalence(max_len: int, max_digit: int = 5):
    bad = {}
    for n in range(1, max_len + 1):
        d = language_disagreements(n, max_digit)
        if d:
            bad[n] = d[:10]
    return not bad, {"max_len": max_len, "max_digit": max_digit, "disagreements": bad}


def surjectivity_failures(max_len: int, free_len: int):
    """Language words with an empty predecessor or successor set.

    Every word carrying a 4 up to ``max_len`` is checked, plus every 4-free
    word up to ``free_len``.
    """
    bad = []
    words = list(language_words_with_marker(max_len))
    for n in range(1, free_len + 1):
        words.extend(product(range(4), repeat=n))
    for w in words:
        if not word_predecessor_symbols(w) or not successor_symbols(w):
            bad.append("".join(map(str, w)))
    return bad, len(words)


def check_surjectivity(max_len: int, free_len: int):
    bad, n = surjectivity_failures(max_len, free_len)
    return not bad, {"words": n, "max_len": max_len, "free_len": free_len, "failures": bad[:10]}


def check_subword_closure(max_len: int):
    bad = []
    for w in language_words_with_marker(max_len):
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                if not member_language(w[i:j]):
                    bad.append(("".join(map(str, w)), i, j))
    return not bad, {"max_len": max_len, "failures": bad[:10]}


def check_backward(depth: int, budget: int | None = None):
    en = enumerate_backward(OMEGA0, depth, budget=budget)
    reports = [verify_structure(s) for s in en.segments]
    valid = all(s.is_valid() for s in en.segments)
    naive = oracles.backward_levels(OMEGA0, depth, member_point)[-1]
    agree = naive == {s.end for s in en.segments}
    ok = en.complete and valid and agree and all(r.ok for r in reports)
    return ok, {"depth": depth, "segments": len(en.segments), "complete": en.complete,
                "nodes": en.nodes, "valid": valid, "oracle_agreement": agree,
                "structure_failures": sum(not r.ok for r in reports)}


def check_witness_orbits(n_max: int):
    out = {}
    ok = True
    for pair in builtin_pairs():
        seg = witness_orbit(pair.tree, pair.witness, n_max)
        rep = verify_structure(seg)
        depths = witness_depths(pair.witness, n_max)
        good = seg.is_valid() and rep.ok and [e.index for e in rep.entries] == depths
        ok &= good
        out[pair.name] = {"depth": seg.depth, "levels": [e.level for e in rep.entries], "ok": good}
    return ok, out


def check_salpha(k: int, depth: int, needle: tuple | None):
    probe = salpha_prefix_approx(k, depth)
    consistent = all(x.take(k) == pre and segment_to(x, depth).is_valid()
                     and segment_to(x, depth).start == OMEGA0 for pre, x in probe.witnesses.items())
    found = needle is None or needle in probe.prefixes
    return consistent and found, {"k": k, "depth": depth, "prefixes": len(probe.prefixes),
                                  "consistent": consistent, "contains": found}


def check_conjugacy(samples: int, seed: int = 0):
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        p = random_point(rng, 12)
        if base_f(embed_e(p)) != embed_e(p.shift()):
            bad.append(str(p))
    return not bad, {"samples": samples, "failures": bad[:10]}


def check_order(samples: int, seed: int = 0):
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        p, q = random_point(rng, 6), random_point(rng, 6)
        if p == q:
            continue
        m = next(i for i in range(20) if p.symbol(i) != q.symbol(i))
        if (p.symbol(m) < q.symbol(m)) != (embed_e(p) < embed_e(q)):
            bad += 1
    return bad == 0, {"pairs": samples, "failures": bad}


def check_cover_soundness(depth: int, samples: int, seed: int = 0):
    rng = random.Random(seed)
    covers = {i: follower_cover(i, depth) for i in range(5)}
    bad = []
    for _ in range(samples):
        p = random_x_point(rng)
        i = rng.choice(sorted(set(range(5)) & set(a for a in range(5) if member_point(p.prepend(a)))))
        if not covers[i].contains(embed_e(p)):
            bad.append((i, str(p)))
    sizes = {i: len(c.words) for i, c in covers.items()}
    return not bad, {"depth": depth, "samples": samples, "cover_sizes": sizes, "failures": bad[:10]}


def check_enclosures(depth: int, samples: int, seed: int = 0):
    """True distances for points with known membership lie in the enclosures."""
    rng = random.Random(seed)
    bad = []
    unstable = []
    for _ in range(samples):
        p = random_x_point(rng)
        x = embed_e(p)
        for i in range(5):
            if member_point(p.prepend(i)) and 0 not in dist_to_follower(x, i, depth):
                bad.append((i, str(p)))
        g = Fraction(rng.randrange(9 ** 3 + 1), 9 ** 3)
        for i in range(5):
            seen = {in_B_certified(g, i, d) for d in (2, depth)}
            if {Verdict.YES, Verdict.NO} <= seen:
                unstable.append((str(g), i))
    return not bad and not unstable, {"samples": samples, "soundness_failures": bad[:10],
                                      "unstable_decisions": unstable[:10]}


def check_union(depth: int, grid: int):
    missing = []
    for k in range(grid + 1):
        x = Fraction(k, grid)
        if not any(in_B_certified(x, i, depth) is not Verdict.NO for i in range(5)):
            missing.append(str(x))
    return not missing, {"grid": grid, "uncovered": missing}


def check_semiconjugacy(samples: int, depth: int, seed: int = 0):
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        p = random_x_point(rng)
        if apply_F(embed_E(p), depth) != embed_E(p.shift()):
            bad.append(str(p))
    anchor = apply_F(embed_E(OMEGA0), depth) == SquarePoint(Fraction(8, 9), 0)
    return not bad and anchor, {"samples": samples, "anchor": anchor, "failures": bad[:10]}


def check_phi(members: int, nonmembers: int, grid: int, depth: int, seed: int = 0):
    rng = random.Random(seed)
    mem = [random_x_point(rng) for _ in range(members)]
    non = [SymbolicPoint((4,), 2)] + [random_nonmember_over_x(rng, visible_within=depth)
                                     for _ in range(nonmembers - 1)]
    targets = [SquarePoint(Fraction(a, grid - 1), Fraction(b, grid - 1))
               for a in range(grid) for b in range(grid)]
    rep = verify_phi_properties(mem, non, targets, depth)
    return rep.ok, {part: rep.counts(part)
                    for part in ("zero_on_members", "positive_off_members", "preimages")}


def check_full_shift(samples: int, depth: int):
    m = general_embed(2, FullShift(2))
    bad = []
    for k in range(samples + 1):
        for i in range(2):
            x = Fraction(2 * i, 3) + Fraction(k, 3 * samples)
            if not m.phi(x, depth).is_zero:
                bad.append(str(x))
    return not bad, {"samples": 2 * (samples + 1), "nonzero": bad[:10]}


# -- suites ---------------------------------------------------------------------

def run_suite(name: str, fast: bool = False, depth: int | None = None, seed: int = 0) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    d = depth or (4 if fast else 6)
    checks = []
    add = lambda label, fn: checks.append(_timed(label, fn))
    if name == "words":
        add("rank-inverse", lambda: check_rank_inverse(1000 if fast else 10 ** 4))
        add("ultrametric", lambda: check_ultrametric(200 if fast else 2000, seed))
    elif name == "subshift":
        add("shift-identity", lambda: check_shift_identity(10 if fast else 50))
        add("oracle-equivalence", lambda: check_oracle_equivalence(5 if fast else 7))
        add("surjectivity", lambda: check_surjectivity(8 if fast else 12, 5 if fast else 8))
        add("subword-closure", lambda: check_subword_closure(7 if fast else 9))
    elif name == "orbits":
        add("backward-structure", lambda: check_backward(12 if fast else 20))
        add("witness-orbits", lambda: check_witness_orbits(3 if fast else 4))
        if fast:
            add("salpha-probe", lambda: check_salpha(3, 14, None))
        else:
            add("salpha-probe", lambda: check_salpha(4, 26, (3, 1, 1, 0)))
    elif name == "interval":
        n = 100 if fast else 1000
        add("conjugacy", lambda: check_conjugacy(n, seed))
        add("order-embedding", lambda: check_order(n, seed))
        add("cover-soundness", lambda: check_cover_soundness(d, n // 5, seed))
        add("enclosures", lambda: check_enclosures(d, 20 if fast else 100, seed))
        add("union-of-B", lambda: check_union(d, 36 if fast else 144))
    elif name == "square":
        add("semiconjugacy", lambda: check_semiconjugacy(100 if fast else 1000, d, seed))
        if fast:
            add("phi-properties", lambda: check_phi(20, 5, 5, 8, seed))
        else:
            add("phi-properties", lambda: check_phi(200, 50, 17, 8, seed))
        add("full-shift-phi", lambda: check_full_shift(8 if fast else 32, d))
    return SuiteReport(name, checks)


def run(name: str, fast: bool = False, depth: int | None = None, seed: int = 0) -> list[SuiteReport]:
    names = SUITES if name == "all" else (name,)
    return [run_suite(n, fast, depth, seed) for n in names]
