"""Exhaustive enumerators used to cross-check the closed forms.

These walk every candidate sequence explicitly and share no code with the
DP kernels or the binomial formulas, so agreement is meaningful. They are
exponential; keep the sizes small.
"""
from __future__ import annotations

from itertools import combinations, product


def enumerate_jump_sequences(jumps, length):
    """Yield every tuple of jumps whose time lengths sum to ``length``."""
    jumps = [tuple(j) for j in jumps]

    def rec(remaining, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for j in jumps:
            if j[0] <= remaining:
                prefix.append(j)
                yield from rec(remaining - j[0], prefix)
                prefix.pop()

    yield from rec(length, [])


def brute_force_count(jumps, length, *, end=None, nonnegative=False, lower=None, upper=None):
    """Count jump sequences by direct simulation of every candidate."""
    count = 0
    for seq in enumerate_jump_sequences(jumps, length):
        h = 0
        ok = True
        for _, dh in seq:
            h += dh
            if (nonnegative and h < 0) or (lower is not None and h < lower) or (upper is not None and h > upper):
                ok = False
                break
        if ok and (end is None or h == end):
            count += 1
    return count


def brute_force_ballot(x, y):
    """Monotone paths with x minority and y majority steps, majority never behind."""
    total = x + y
    count = 0
    for minority in combinations(range(total), x):
        marks = set(minority)
        lead = 0
        for i in range(total):
            lead += -1 if i in marks else 1
            if lead < 0:
                break
        else:
            count += 1
    return count


def brute_force_dyck_prefix(n, k):
    """+/-1 sequences of length n ending at k and never dipping below 0."""
    count = 0
    for steps in product((1, -1), repeat=n):
        h = 0
        for s in steps:
            h += s
            if h < 0:
                break
        else:
            if h == k:
                count += 1
    return count
