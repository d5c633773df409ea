"""Brute-force oracles that never touch the block-grammar parser.

The language oracle generates omega_i(T, y) directly from the recursion for
every small tree pattern and branch prefix, then collects all windows.
"""
from __future__ import annotations

from itertools import combinations, product

from .words import enum_word, word_rank


def prefix_closed_patterns(max_rank):
    """All subsets of ranks {0..max_rank} whose words form a prefix-closed set."""
    ranks = list(range(max_rank + 1))
    words = {r: enum_word(r) for r in ranks}
    out = []
    for size in range(len(ranks) + 1):
        for chosen in combinations(ranks, size):
            members = {words[r] for r in chosen}
            if all(w[:k] in members for w in members for k in range(len(w))):
                out.append(frozenset(chosen))
    return out


def omega_string(i, bits, digits):
    """omega_i as a finite list: everything up to and including the 4."""
    s = [3, 4]
    for k in range(1, i + 1):
        s = [3] + list(bits[:k]) + [2] * (k + digits[k - 1]) + s
    return s


def language_oracle(length, max_level=4, max_rank=5, max_digit=4, max_start=40):
    """Words of the given length that contain a 4 and occur in some
    sigma^j(omega_i(T, y)), i <= max_level, j <= max_start, over all
    prefix-closed patterns on ranks <= max_rank and branch digits <= max_digit.
    """
    found = set()
    patterns = prefix_closed_patterns(max_rank)
    for i in range(max_level + 1):
        for pattern in patterns:
            bits = [1 if r in pattern else 0 for r in range(max_rank + 1)]
            for digits in product(range(max_digit + 1), repeat=i):
                ok = True
                for m in range(i + 1):
                    r = word_rank(digits[:m])
                    if r <= max_rank and r not in pattern:
                        ok = False
                        break
                if not ok:
                    continue
                s = omega_string(i, bits, digits) + [0] * length
                for j in range(min(max_start, len(s) - length) + 1):
                    window = tuple(s[j:j + length])
                    if 4 in window:
                        found.add(window)
    return found


def backward_levels(start, depth, member_point):
    """Level sets of the backward tree, testing all five prepensions."""
    levels = [{start}]
    for _ in range(depth):
        nxt = set()
        for q in levels[-1]:
            for a in range(5):
                cand = q.prepend(a)
                if member_point(cand):
                    nxt.add(cand)
        levels.append(nxt)
    return levels
