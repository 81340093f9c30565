"""Slow, direct re-derivations used to check the fast implementations.

Nothing here imports from mockdraft.metrics.
"""

import math


def prefix_overlap(a, b, d):
    return len(set(a[:d]) & set(b[:d]))


def rbo_ext_brute(a, b, q):
    """Term-by-term evaluation of the three extrapolated-RBO summands with plain loops."""
    a, b = list(a), list(b)
    s = min(len(a), len(b))
    l = max(len(a), len(b))
    X = {d: prefix_overlap(a, b, d) for d in range(1, l + 1)}
    first = 0.0
    for d in range(1, s + 1):
        first += q**d * X[d] / d
    first *= (1 - q) / q
    second = 0.0
    for d in range(s + 1, l + 1):
        second += q**d * (X[d] / d + (X[s] / s) * (1 - s / d))
    second *= (1 - q) / q
    third = q**l * (X[l] / l + (X[s] / s) * (1 - s / l))
    return first + second + third


def rbo_truncated_tail(a, b, q, depth=20000):
    """Infinite-sum RBO truncated at ``depth``, assuming agreement stays X_n/n past the lists' end.

    Only meaningful for equal-length lists.
    """
    a, b = list(a), list(b)
    n = len(a)
    assert len(b) == n
    final = prefix_overlap(a, b, n) / n
    total = 0.0
    for d in range(1, depth + 1):
        agreement = prefix_overlap(a, b, d) / d if d <= n else final
        total += q**d * agreement
    return (1 - q) / q * total


def rank_weights(q, d, depth=20000):
    """Weights of ranks 1..d, w_i = (1-q)/q * sum_{k>=i} q^k / k, by a backward running sum."""
    suffix = []
    running = 0.0
    for k in range(depth, 0, -1):
        running += q**k / k
        if k <= d:
            suffix.append(running)
    suffix.reverse()
    return [(1 - q) / q * t for t in suffix]


def prefix_weight_numeric(q, d, depth=20000):
    return math.fsum(rank_weights(q, d, depth))
