"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately avoid the code paths they check: word-length by
breadth-first search over the group, face tests by brute-force subword
search, counts by closed formulas from outside the package.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations
from math import comb

from subwordlab.coxeter import CoxeterSystem, Element, element_from_word


@lru_cache(maxsize=None)
def system(name: str) -> CoxeterSystem:
    return CoxeterSystem(name)


def group_by_bfs(sys: CoxeterSystem) -> dict[Element, int]:
    """Every group element with its distance from the identity.

    Distance in the Cayley graph equals reduced-word length, giving an
    independent length oracle for small groups.
    """
    distances = {sys.identity: 0}
    queue = deque([sys.identity])
    while queue:
        w = queue.popleft()
        for s in range(1, sys.rank + 1):
            nxt = w * sys.generators[s - 1]
            if nxt not in distances:
                distances[nxt] = distances[w] + 1
                queue.append(nxt)
    return distances


def brute_min_word_length(sys: CoxeterSystem, w: Element) -> int:
    return group_by_bfs(sys)[w]


def brute_contains_reduced_word(sys: CoxeterSystem, word, target: Element) -> bool:
    """Exponential scan over all subwords; reliable for short words."""
    t_len = target.length()
    found = [False]

    def rec(pos, current, used):
        if found[0]:
            return
        if used == t_len:
            if current == target:
                found[0] = True
            return
        if len(word) - pos < t_len - used:
            return
        rec(pos + 1, current, used)
        s = word[pos]
        if current.image[s - 1] > 0:
            rec(pos + 1, current * sys.generators[s - 1], used + 1)

    rec(0, sys.identity, 0)
    return found[0]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def word_has_suffix_up_to_commutations(sys: CoxeterSystem, word, suffix) -> bool:
    """Greedy right-peel: a letter can move to the end iff nothing after its
    last occurrence fails to commute with it."""
    remaining = list(word)
    for s in reversed(list(suffix)):
        hits = [i for i, x in enumerate(remaining) if x == s]
        if not hits:
            return False
        last = hits[-1]
        if any(
            x == s or not sys.commute(x, s) for x in remaining[last + 1:]
        ):
            return False
        del remaining[last]
    return True


def linear_extension_words(sys: CoxeterSystem, quiver) -> frozenset:
    """All words read off linear extensions of (the transitive closure of) a
    quiver whose vertices are (occurrence, generator) pairs."""
    vertices = list(quiver.vertices)
    succ = {v: set() for v in vertices}
    preds = {v: set() for v in vertices}
    for a, b in quiver.arrows:
        succ[a].add(b)
        preds[b].add(a)
    # same-generator occurrences are forced in increasing order
    by_gen: dict[int, list] = {}
    for v in sorted(vertices):
        by_gen.setdefault(v[1], []).append(v)
    for chain in by_gen.values():
        for a, b in zip(chain, chain[1:]):
            succ[a].add(b)
            preds[b].add(a)

    out = set()

    def rec(taken, available, word):
        if len(word) == len(vertices):
            out.add(tuple(word))
            return
        for v in sorted(available):
            rec(
                taken | {v},
                (available - {v})
                | {w for w in succ[v] if preds[w] <= (taken | {v})},
                word + [v[1]],
            )

    start = {v for v in vertices if not preds[v]}
    rec(frozenset(), start, [])
    return frozenset(out)
