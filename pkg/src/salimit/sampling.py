"""Random finitely representable points, for property checks and demos."""
from __future__ import annotations

import random
from functools import lru_cache

from .subshift import language_words_with_marker, member_language, member_point, omega, predecessor_symbols, shift_point
from .trees import builtin_pairs
from .words import SymbolicPoint


@lru_cache(maxsize=4)
def _marker_pool(max_len: int) -> tuple:
    return tuple(sorted(language_words_with_marker(max_len)))


def random_point(rng: random.Random, max_prefix: int = 12, alphabet: int = 5) -> SymbolicPoint:
    """A uniformly built eventually constant point of alphabet^N (any, not only X)."""
    n = rng.randrange(max_prefix + 1)
    return SymbolicPoint(tuple(rng.randrange(alphabet) for _ in range(n)), rng.randrange(alphabet))


def random_x_point(rng: random.Random, max_prefix: int = 12) -> SymbolicPoint:
    """A point of X: a 4-free point, a language word carrying a 4, or a shifted omega_n."""
    kind = rng.randrange(3)
    if kind == 0:
        p = random_point(rng, max_prefix, alphabet=4)
    elif kind == 1:
        p = SymbolicPoint(rng.choice(_marker_pool(max_prefix)), 0)
    else:
        pair = rng.choice(builtin_pairs())
        w = omega(rng.randrange(1, 5), pair.tree, pair.witness)
        p = shift_point(w, rng.randrange(len(w.prefix) + 1))
    assert member_point(p)
    return p


def random_nonmember_over_x(rng: random.Random, max_prefix: int = 12,
                            visible_within: int | None = None) -> SymbolicPoint:
    """A point ``a q`` outside X whose shift ``q`` lies in X.

    With ``visible_within = k`` the first ``k`` symbols of ``a q`` already
    fail to be a word of X, so the defect is seen at cylinder depth ``k``.
    """
    while True:
        q = random_x_point(rng, max_prefix)
        missing = sorted(set(range(5)) - predecessor_symbols(q))
        if not missing:
            continue
        p = q.prepend(rng.choice(missing))
        if visible_within is None or not member_language(p.take(visible_within)):
            return p
