"""Sorted-tuple combinatorics: colexicographic subset ranking, permutation
signs, and insertion positions.

Particle indices are 1-based throughout.  A subset is represented as a
strictly increasing tuple of ints.  Every row and column ordering in the
package derives from the colexicographic order fixed here (compare largest
elements first), so ranks are stable as the ground set grows.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from itertools import combinations
from math import comb


def check_sorted_tuple(t, n=None):
    """Validate a strictly increasing tuple of indices >= 1 (and <= n if given).

    Returns the input as a plain tuple.
    """
    t = tuple(t)
    if t and t[0] < 1:
        raise ValueError(f"indices must be >= 1: {t}")
    for a, b in zip(t, t[1:]):
        if a >= b:
            raise ValueError(f"indices must be strictly increasing: {t}")
    if n is not None and t and t[-1] > n:
        raise ValueError(f"index {t[-1]} exceeds ground-set size {n}")
    return t


def subset_rank(t, n: int) -> int:
    """0-based colex rank of subset ``t`` among all |t|-subsets of {1..n}."""
    t = check_sorted_tuple(t, n)
    return sum(comb(c - 1, j + 1) for j, c in enumerate(t))


def subset_unrank(rank: int, k: int, n: int):
    """Inverse of :func:`subset_rank`: the k-subset of {1..n} with colex rank ``rank``."""
    if k < 0 or n < 0 or not 0 <= rank < comb(n, k):
        raise ValueError(f"rank {rank} out of range for {k}-subsets of {{1..{n}}}")
    out = [0] * k
    r = rank
    c = n
    for j in range(k, 0, -1):
        # largest c with comb(c - 1, j) <= r gives the element at position j
        while comb(c - 1, j) > r:
            c -= 1
        r -= comb(c - 1, j)
        out[j - 1] = c
    return tuple(out)


@lru_cache(maxsize=None)
def subsets_colex(n: int, k: int):
    """All k-subsets of {1..n} as sorted tuples, in colexicographic order."""
    if k < 0:
        return ()
    return tuple(sorted(combinations(range(1, n + 1), k), key=lambda t: t[::-1]))


def permutation_sign(perm) -> int:
    """+1 for an even permutation, -1 for an odd one.

    ``perm`` is any sequence of distinct comparable entries; the sign is
    (-1) to the number of inversions.
    """
    p = list(perm)
    if len(set(p)) != len(p):
        raise ValueError(f"not a permutation (repeated entries): {p}")
    inversions = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


def insert_position(t, x: int) -> int:
    """1-based slot ``x`` would occupy in sorted(t + (x,)); x must not be in t."""
    t = check_sorted_tuple(t)
    if x in t:
        raise ValueError(f"{x} already present in {t}")
    return bisect_right(t, x) + 1
